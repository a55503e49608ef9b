#ifndef UCPOLY_EHRHART_HPP
#define UCPOLY_EHRHART_HPP

#include <vector>

#include "ucpoly/graph.hpp"
#include "ucpoly/numbers.hpp"
#include "ucpoly/polytope.hpp"

namespace ucpoly {

struct CountOptions {
    long long node_budget = 2'000'000'000; // recursion-node cap; SizeLimit beyond
    int threads = 0;                       // 0 = all available, 1 = serial path
};

/// Counting specification for an anti-blocking polytope cut out by 0/1
/// constraints <1_C, x> <= 1 together with x >= 0. With `weighted` set, each
/// point counts with multiplicity 2^(#nonzero coordinates), which turns the
/// count over tP into the lattice-point count of the unconditional lift t.UP.
struct AntiBlockingCountSpec {
    int dim = 0;
    std::vector<Mask> cliques;
    bool weighted = false;
};

AntiBlockingCountSpec count_spec(const Graph& g, bool weighted);

// OpenMP kernel (prefix-split work list, deterministic reduction)
BigInt count_dilate(const AntiBlockingCountSpec& spec, int t, const CountOptions& opts = {});
// serial reference implementation kept for testing and benchmarking
BigInt count_dilate_serial(const AntiBlockingCountSpec& spec, int t,
                           const CountOptions& opts = {});

// explicit small polytope: direct box scan of tP over [-radius*t, radius*t]^d
BigInt count_dilate_box(const HRep& h, int radius, int t);

struct EhrhartProfile {
    std::vector<BigInt> values; // ehr(0), ehr(1), ...
};

EhrhartProfile dilate_profile(const AntiBlockingCountSpec& spec, int upto,
                              const CountOptions& opts = {});

struct HStarVector {
    int dim = 0;                 // ambient dimension d
    std::vector<BigInt> entries; // h*_0 .. h*_d

    int degree() const;
    BigInt normalized_volume() const;
    bool is_palindromic() const;          // h*_k == h*_{d-k} for all k
    bool is_gorenstein_symmetric() const; // h*_k == h*_{s-k} about the degree s
};

// unique exact solution of sum_i h*_i binom(t+d-i, d) = ehr(t), t = 0..d
HStarVector h_star_from_profile(const EhrhartProfile& prof, int dim);

// h* of the cube [-1,1]^d via its Ehrhart oracle ehr(t) = (2t+1)^d; d <= 10
std::vector<BigInt> type_b_eulerian(int d);

// h* of U.P_G (weighted count) resp. P_G (plain count); perfect graphs only
HStarVector h_star_unconditional(const Graph& g, const CountOptions& opts = {});
HStarVector h_star_antiblocking(const Graph& g, const CountOptions& opts = {});

// binom(d,i) <= h*_i(U.P_G) <= B(d,i)
bool sandwich_check(const Graph& g, const CountOptions& opts = {});

struct MahlerResult {
    BigInt product; // Vol(U.P_G) * Vol(U.P_complement)
    BigInt bound;   // 4^d d!
    bool ok = false;
};

MahlerResult mahler_check(const Graph& g, const CountOptions& opts = {});

enum class VolumeMode { antiblocking, unconditional };

// floor(d!/vol) resp. floor(4^d d!/vol): lower bound on the partner volume
BigInt saint_raymond_lower_bound(const BigInt& vol_a, int d, VolumeMode mode);

} // namespace ucpoly

#endif
