#ifndef UCPOLY_ANTIBLOCKING_HPP
#define UCPOLY_ANTIBLOCKING_HPP

#include <utility>
#include <vector>

#include "ucpoly/graph.hpp"
#include "ucpoly/numbers.hpp"
#include "ucpoly/polytope.hpp"

namespace ucpoly {

/// Anti-blocking 0/1-polytope: componentwise-maximal vertices (an antichain
/// of bitmasks) plus the 0/1 facet normals with right-hand side 1. The
/// inequalities x >= 0 are implicit.
struct AntiBlockingPolytope {
    int dim = 0;
    std::vector<Mask> generators;    // V-down, each a 0/1 point
    std::vector<Mask> clique_facets; // <1_C, x> <= 1

    VRep generator_vrep() const;  // just the maximal vertices
    VRep full_vertex_vrep() const; // every 0/1 point of the polytope
    HRep hrep() const;            // clique facets plus x >= 0
};

// facets valid only for perfect graphs; otherwise NotPerfectError
AntiBlockingPolytope stable_set_polytope(const Graph& g);

// V-representation of conv(stable set indicators) for any graph
VRep stable_set_vrep(const Graph& g);

// swaps generator and facet roles; A(P_G) = P_complement(G)
AntiBlockingPolytope antiblocking_dual(const AntiBlockingPolytope& p);

// all maximal cliques of g share one size (P_G Gorenstein)
bool is_gorenstein_stable(const Graph& g);

/// Unconditional polytope U.P: the sign-orbit closure of an anti-blocking
/// base. Vertices and facets are materialized on demand with an explicit cap,
/// since the orbit of a d-dimensional base has up to 2^d members per
/// generator.
struct UnconditionalPolytope {
    AntiBlockingPolytope base;

    BigInt vertex_count() const; // sum of 2^|supp| over generators
    BigInt facet_count() const;  // sum of 2^|supp| over clique facets
    VRep vertices(std::size_t cap = 1 << 20) const;
    HRep facets(std::size_t cap = 1 << 20) const;
};

UnconditionalPolytope unconditional(AntiBlockingPolytope base);

// counts of 0/1 points of p grouped by support size; the lattice points of
// U.P number sum(count * 2^size)
std::vector<std::pair<int, BigInt>> lattice_points_weighted(const AntiBlockingPolytope& p);

BigInt unconditional_lattice_point_count(const AntiBlockingPolytope& p);

// U.P_{G (+) G'} = U.P_G x U.P_G'   and   U.P_{G join G'} = U.P_G (+) U.P_G'
UnconditionalPolytope product(const UnconditionalPolytope& a, const UnconditionalPolytope& b);
UnconditionalPolytope free_sum(const UnconditionalPolytope& a, const UnconditionalPolytope& b);

// P_{G1} + (-P_{G2}) and conv(P_{G1} u -P_{G2}); both reflexive for perfect
// graphs on a common vertex set
VRep minkowski_construction(const Graph& g1, const Graph& g2);
VRep convex_join(const Graph& g1, const Graph& g2);

struct GalePair {
    VRep p; // conv(maximal stable set indicators)
    VRep q; // conv(maximal clique indicators)
    bool p_verified = false;
    bool q_verified = false;
    bool verified = false;
};

// requires perfect CIS graph; Q-side verification may be skipped under budget
GalePair gale_pair(const Graph& g, bool verify_q_side = true);

} // namespace ucpoly

#endif
