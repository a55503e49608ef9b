#ifndef UCPOLY_TRIANGULATE_HPP
#define UCPOLY_TRIANGULATE_HPP

#include <functional>
#include <utility>
#include <vector>

#include "ucpoly/numbers.hpp"
#include "ucpoly/polytope.hpp"

namespace ucpoly {

struct Simplex {
    std::vector<int> vertex_ids; // sorted indices into the vertex table
};

struct Triangulation {
    int dim = 0;
    std::vector<IntVec> vertex_table;
    std::vector<Simplex> simplices;
};

// vertex order for the pulling recursion: indices sorted lexicographically by
// coordinates (the default fixture order)
std::vector<int> lex_pull_order(const std::vector<IntVec>& vertices);

// recursive pulling triangulation of a full-dimensional lattice polytope with
// known facet description; deterministic for a fixed order; <= 64 vertices
Triangulation pulling_triangulation(const VRep& v, const HRep& h);
Triangulation pulling_triangulation(const VRep& v, const HRep& h, const std::vector<int>& order);

bool is_unimodular(const Triangulation& t);

// sign-orbit lift: simplices sigma*S over all sign vectors, deduplicated; a
// triangulation of U.P whenever t triangulates an anti-blocking polytope
Triangulation lift_unconditional(const Triangulation& t);

// every pairwise-joined vertex set spans a face (clique-complex test)
bool is_flag(const Triangulation& t);

// exhaustive pairwise check that simplex intersections are common faces;
// meant for small corpus instances
bool intersections_are_faces(const Triangulation& t);

/// Regularity certificate for a lifted triangulation: per vertex the pair
/// (|v|_1, omega(|v|)) standing for |v|_1 + eps * omega(|v|) with symbolic
/// eps. Verifying that these heights induce the triangulation is out of
/// scope; the pairs are emitted as-is.
std::vector<std::pair<BigRat, BigRat>> lift_heights(
    const Triangulation& lifted, const std::function<BigRat(const IntVec&)>& base_heights);

// canonical decreasing base heights for a pulling order (certificate input)
std::function<BigRat(const IntVec&)> pulling_heights(const Triangulation& base);

} // namespace ucpoly

#endif
