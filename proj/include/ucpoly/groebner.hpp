#ifndef UCPOLY_GROEBNER_HPP
#define UCPOLY_GROEBNER_HPP

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include "ucpoly/numbers.hpp"
#include "ucpoly/poset.hpp"

namespace ucpoly {

// all antichains of p, ascending as bitmasks (the empty antichain first)
std::vector<Mask> antichains(const Poset& p);

// A join A' = min(A u A');  A meet A' = (A cap A') u (max(A u A') - min(A u A'))
std::pair<Mask, Mask> join_meet(const Poset& p, Mask a, Mask b);

// max(B u B') contained in neither B nor B'
bool antichains_incomparable(const Poset& p, Mask b1, Mask b2);

/// Lattice point 1_B - 2*1_A of the unconditional chain polytope, with
/// antichains A subseteq B.
struct UCPoint {
    Mask b = 0;
    Mask a = 0;
    auto operator<=>(const UCPoint&) const = default;
};

std::vector<UCPoint> uc_lattice_points(const Poset& p);

/// Marked quadratic binomial lead - trail over lattice-point-indexed
/// variables; both sides are sorted index pairs (multisets of size 2).
struct MarkedBinomial {
    std::array<int, 2> lead;
    std::array<int, 2> trail;
    auto operator<=>(const MarkedBinomial&) const = default;
};

struct ChainBasis {
    std::vector<Mask> variables; // antichain per variable index
    std::vector<MarkedBinomial> binomials;
};

struct UCBasis {
    std::vector<UCPoint> variables;
    std::vector<MarkedBinomial> binomials;
    std::vector<int> family;  // 1 = lifted incomparable pair, 2 = separable pair
    long skipped_malformed = 0; // (B,B',E) combinations denoting no lattice point
};

// one binomial per unordered incomparable antichain pair; n <= 10
ChainBasis chain_groebner(const Poset& p);

// lifted basis of the unconditional chain polytope; n <= 8
UCBasis uc_groebner(const Poset& p);

// sums of the two lattice-point pairs coincide
bool verify_toric(const MarkedBinomial& b, const std::vector<IntVec>& points);

std::vector<IntVec> chain_variable_points(const Poset& p, const std::vector<Mask>& variables);
std::vector<IntVec> uc_variable_points(const Poset& p, const std::vector<UCPoint>& variables);

enum class BuchbergerResult { verified, failed, step_cap_exceeded };

// marked S-pair reduction; termination guarded by step_cap
BuchbergerResult marked_buchberger_verify(const std::vector<MarkedBinomial>& basis,
                                          long long step_cap = 1'000'000);

} // namespace ucpoly

#endif
