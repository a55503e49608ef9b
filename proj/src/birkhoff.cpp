#include "ucpoly/birkhoff.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include <omp.h>

#include "ucpoly/errors.hpp"

namespace ucpoly {

IntVec SignedPermutationMatrix::flat(int n) const
{
    IntVec m(std::size_t(n) * n, 0);
    for (int i = 0; i < n; ++i) m[std::size_t(i) * n + perm[i]] = test_bit(neg, i) ? -1 : 1;
    return m;
}

std::vector<SignedPermutationMatrix> all_signed_permutations(int n)
{
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::vector<SignedPermutationMatrix> out;
    do {
        for (Mask neg = 0; neg < (Mask(1) << n); ++neg)
            out.push_back(SignedPermutationMatrix{p, neg});
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

AntiBlockingPolytope pos_polytope(int n)
{
    if (n < 1 || n > 4) throw SizeLimitError("Pos(n) materialized for n <= 4");
    return stable_set_polytope(rook_graph(n));
}

AntiBlockingPolytope cplus_polytope(int n)
{
    if (n < 1 || n > 4) throw SizeLimitError("Cplus(n) materialized for n <= 4");
    return stable_set_polytope(rook_graph(n).complement());
}

VRep birkhoff_vertices(BirkhoffKind kind, int n)
{
    if (n < 1 || n > 4) throw SizeLimitError("explicit vertex listing limited to n <= 4");
    const int d = n * n;
    VRep v;
    v.dim = d;
    switch (kind) {
    case BirkhoffKind::BB:
        for (const auto& sp : all_signed_permutations(n)) v.points.push_back(to_rational(sp.flat(n)));
        break;
    case BirkhoffKind::Pos:
        v = pos_polytope(n).full_vertex_vrep();
        break;
    case BirkhoffKind::Cplus:
        v = cplus_polytope(n).full_vertex_vrep();
        break;
    case BirkhoffKind::C:
        v = unconditional(cplus_polytope(n)).vertices();
        break;
    }
    sort_points(v);
    return v;
}

BigInt birkhoff_vertex_count(BirkhoffKind kind, int n)
{
    if (n == 1) return 2; // every family degenerates to a segment
    switch (kind) {
    case BirkhoffKind::BB:
        return pow2(n) * factorial(n); // 2^n n! signed permutation matrices
    case BirkhoffKind::Pos: {
        // partial permutation matrices: sum_k binom(n,k)^2 k!
        BigInt total = 0;
        for (int k = 0; k <= n; ++k) total += binomial(n, k) * binomial(n, k) * factorial(k);
        return total;
    }
    case BirkhoffKind::Cplus: {
        // cliques of the rook graph: the empty set, the cells, and the
        // subsets of size >= 2 of each of the 2n lines; this is
        // n 2^(n+1) - (n+1)^2 + 2, two more than the count stated alongside
        // the family's definition, which undercounts the degenerate sets
        BigInt total = 1 + BigInt(n) * n;
        total += BigInt(2) * n * (pow2(n) - 1 - n);
        return total;
    }
    case BirkhoffKind::C:
        return BigInt(n) * pow2(n + 1); // sign orbits of the 2n full lines
    }
    return 0;
}

BigInt birkhoff_facet_count(BirkhoffKind kind, int n)
{
    if (n == 1) return 2; // row and column constraints coincide on a segment
    switch (kind) {
    case BirkhoffKind::BB:
        return BigInt(n) * pow2(n + 1);
    case BirkhoffKind::Pos:
        return BigInt(n) * n + 2 * n;
    case BirkhoffKind::Cplus:
        return BigInt(n) * n + factorial(n);
    case BirkhoffKind::C:
        return pow2(n) * factorial(n); // polar of BB(n)
    }
    return 0;
}

HRep birkhoff_facets(BirkhoffKind kind, int n)
{
    if (n < 1 || n > 4) throw SizeLimitError("analytic facet lists limited to n <= 4");
    const int d = n * n;
    const auto cell = [n](int i, int j) { return i * n + j; };
    HRep h;
    h.dim = d;
    switch (kind) {
    case BirkhoffKind::BB:
        // <A, sigma x e_j> <= 1 (signed column sums) and rows likewise
        for (int j = 0; j < n; ++j)
            for (Mask sg = 0; sg < (Mask(1) << n); ++sg) {
                IntVec col(d, 0), row(d, 0);
                for (int i = 0; i < n; ++i) {
                    col[cell(i, j)] = test_bit(sg, i) ? -1 : 1;
                    row[cell(j, i)] = test_bit(sg, i) ? -1 : 1;
                }
                h.rows.push_back(HRow{std::move(col), BigRat(1)});
                h.rows.push_back(HRow{std::move(row), BigRat(1)});
            }
        // rows and columns coincide on the segment
        std::sort(h.rows.begin(), h.rows.end(), [](const HRow& a, const HRow& b) {
            return a.normal < b.normal;
        });
        h.rows.erase(std::unique(h.rows.begin(), h.rows.end(),
                                 [](const HRow& a, const HRow& b) {
                                     return a.normal == b.normal && a.rhs == b.rhs;
                                 }),
                     h.rows.end());
        break;
    case BirkhoffKind::Pos:
        h = pos_polytope(n).hrep();
        return h;
    case BirkhoffKind::Cplus:
        h = cplus_polytope(n).hrep();
        return h;
    case BirkhoffKind::C:
        for (const auto& sp : all_signed_permutations(n))
            h.rows.push_back(HRow{sp.flat(n), BigRat(1)});
        break;
    }
    sort_rows(h);
    return h;
}

namespace {

using State = std::vector<int>; // column sums, kept sorted (columns exchangeable)

// enumerate one row against a state: assign cell values with row budget t and
// per-column headroom, recording the resulting (unsorted) column sums
template <typename Emit>
void expand_row(const State& cols, int n, int t, bool weighted, Emit&& emit)
{
    State next(cols);
    const std::function<void(int, int, std::uint64_t)> rec =
        [&](int j, int row_left, std::uint64_t weight) {
            if (j == n) {
                emit(next, weight);
                return;
            }
            const int cap = std::min(row_left, t - cols[j]);
            for (int x = 0; x <= cap; ++x) {
                next[j] = cols[j] + x;
                rec(j + 1, row_left - x, (weighted && x > 0) ? weight * 2 : weight);
            }
            next[j] = cols[j];
        };
    rec(0, t, 1);
}

using StateMap = std::map<State, BigInt>;

StateMap dp_row_serial(const StateMap& cur, int n, int t, bool weighted)
{
    StateMap next;
    for (const auto& [state, count] : cur) {
        expand_row(state, n, t, weighted, [&](State cols, std::uint64_t w) {
            std::sort(cols.begin(), cols.end());
            next[std::move(cols)] += count * w;
        });
    }
    return next;
}

StateMap dp_row_parallel(const StateMap& cur, int n, int t, bool weighted, int threads)
{
    std::vector<const std::pair<const State, BigInt>*> items;
    items.reserve(cur.size());
    for (const auto& kv : cur) items.push_back(&kv);

    const int nt = threads > 0 ? threads : omp_get_max_threads();
    std::vector<StateMap> local(nt);
#pragma omp parallel num_threads(nt)
    {
        const int me = omp_get_thread_num();
        StateMap& mine = local[me];
#pragma omp for schedule(dynamic, 16)
        for (std::size_t idx = 0; idx < items.size(); ++idx) {
            const auto& [state, count] = *items[idx];
            expand_row(state, n, t, weighted, [&](State cols, std::uint64_t w) {
                std::sort(cols.begin(), cols.end());
                mine[std::move(cols)] += count * w;
            });
        }
    }
    // ordered merge keeps the result independent of scheduling
    StateMap next = std::move(local[0]);
    for (int k = 1; k < nt; ++k)
        for (auto& [state, count] : local[k]) next[state] += count;
    return next;
}

BigInt dp_run(int n, int t, bool weighted, const CountOptions& opts, bool parallel)
{
    if (n < 1 || n > 4) throw SizeLimitError("row/column-sum DP limited to n <= 4");
    if (t < 0 || (n > 1 && t > 2 * n * n) || t > 4096)
        throw SizeLimitError("dilation out of the documented DP range");
    if (t == 0) return 1;
    StateMap cur;
    cur[State(n, 0)] = 1;
    for (int row = 0; row < n; ++row)
        cur = parallel ? dp_row_parallel(cur, n, t, weighted, opts.threads)
                       : dp_row_serial(cur, n, t, weighted);
    BigInt total = 0;
    for (const auto& [state, count] : cur) total += count;
    return total;
}

} // namespace

BigInt dp_count_serial(int n, int t, bool weighted, const CountOptions& opts)
{
    return dp_run(n, t, weighted, opts, false);
}

BigInt dp_count(int n, int t, bool weighted, const CountOptions& opts)
{
    if (opts.threads == 1) return dp_run(n, t, weighted, opts, false);
    return dp_run(n, t, weighted, opts, true);
}

AntiBlockingCountSpec cplus_count_spec(int n, bool weighted)
{
    if (n < 1 || n > 4) throw SizeLimitError("Cplus counting limited to n <= 4");
    AntiBlockingCountSpec spec;
    spec.dim = n * n;
    spec.weighted = weighted;
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    do {
        Mask support = 0;
        for (int i = 0; i < n; ++i) support |= bit(i * n + p[i]);
        spec.cliques.push_back(support);
    } while (std::next_permutation(p.begin(), p.end()));
    std::sort(spec.cliques.begin(), spec.cliques.end());
    return spec;
}

namespace {

TableRow table_row_dp(int n, bool weighted, const CountOptions& opts)
{
    const int d = n * n;
    EhrhartProfile prof;
    prof.values.resize(d + 1);
    for (int t = 0; t <= d; ++t) prof.values[t] = dp_count(n, t, weighted, opts);
    const HStarVector h = h_star_from_profile(prof, d);
    return TableRow{n, h.normalized_volume(), h.entries};
}

TableRow table_row_generic(int n, bool weighted, const CountOptions& opts)
{
    const int d = n * n;
    const auto spec = cplus_count_spec(n, weighted);
    const HStarVector h = h_star_from_profile(dilate_profile(spec, d, opts), d);
    return TableRow{n, h.normalized_volume(), h.entries};
}

} // namespace

std::vector<TableRow> reproduce_table(int which, int n_max, const CountOptions& opts)
{
    if (which < 1 || which > 4) throw ParseError("table index must be 1..4");
    const int cap = (which == 3 || which == 4) ? 3 : 4;
    if (n_max < 1 || n_max > cap)
        throw SizeLimitError("table rows available for n <= 3 (4 for tables 1 and 2)");
    std::vector<TableRow> rows;
    for (int n = 1; n <= n_max; ++n) {
        switch (which) {
        case 1: rows.push_back(table_row_dp(n, false, opts)); break;
        case 2: rows.push_back(table_row_dp(n, true, opts)); break;
        case 3: rows.push_back(table_row_generic(n, false, opts)); break;
        case 4: rows.push_back(table_row_generic(n, true, opts)); break;
        }
    }
    return rows;
}

bool ehrhart_equality_bb3_c3(const CountOptions& opts)
{
    const auto spec = cplus_count_spec(3, true);
    for (int t = 0; t <= 9; ++t)
        if (dp_count(3, t, true, opts) != count_dilate(spec, t, opts)) return false;
    return true;
}

} // namespace ucpoly
