#ifndef UCPOLY_BIRKHOFF_HPP
#define UCPOLY_BIRKHOFF_HPP

#include <vector>

#include "ucpoly/antiblocking.hpp"
#include "ucpoly/ehrhart.hpp"
#include "ucpoly/numbers.hpp"
#include "ucpoly/polytope.hpp"

namespace ucpoly {

enum class BirkhoffKind { BB, Pos, C, Cplus };

/// One signed permutation: row i has its single nonzero in column perm[i],
/// with sign -1 exactly when bit i of neg is set.
struct SignedPermutationMatrix {
    std::vector<int> perm;
    Mask neg = 0;

    IntVec flat(int n) const; // row-major n*n entries
};

std::vector<SignedPermutationMatrix> all_signed_permutations(int n);

// explicit vertex listing; n <= 4 for BB (2^n n! points)
VRep birkhoff_vertices(BirkhoffKind kind, int n);

// derived-true vertex counts (enumeration-backed closed forms)
BigInt birkhoff_vertex_count(BirkhoffKind kind, int n);

// closed-form facet counts, cross-checked against the analytic facet lists
BigInt birkhoff_facet_count(BirkhoffKind kind, int n);

// analytic facet list; BB: <A, sigma x e_i> <= 1 and <A, e_i x sigma> <= 1
HRep birkhoff_facets(BirkhoffKind kind, int n);

// the anti-blocking bases: Pos(n) = P of the rook graph, Cplus = P of its
// complement
AntiBlockingPolytope pos_polytope(int n);
AntiBlockingPolytope cplus_polytope(int n);

// nonnegative integer n x n matrices with all row and column sums <= t;
// weighted: multiplicity 2^(#nonzero entries), i.e. |t.BB(n) cap Z^(nxn)|.
// Row-by-row dynamic program over sorted column-sum states.
BigInt dp_count(int n, int t, bool weighted, const CountOptions& opts = {});
BigInt dp_count_serial(int n, int t, bool weighted, const CountOptions& opts = {});

// n! permutation-sum constraints of Cplus(n) as a generic counting spec
AntiBlockingCountSpec cplus_count_spec(int n, bool weighted);

struct TableRow {
    int n = 0;
    BigInt vol;
    std::vector<BigInt> hstar;
};

// which: 1 = Pos, 2 = BB, 3 = Cplus, 4 = C; n_max <= 3 (4 with a stretch
// budget for tables 1 and 2)
std::vector<TableRow> reproduce_table(int which, int n_max, const CountOptions& opts = {});

// BB(3) and C(3) have identical Ehrhart data
bool ehrhart_equality_bb3_c3(const CountOptions& opts = {});

} // namespace ucpoly

#endif
