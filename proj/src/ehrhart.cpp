#include "ucpoly/ehrhart.hpp"

#include <algorithm>
#include <atomic>

#include <omp.h>

#include "ucpoly/errors.hpp"

namespace ucpoly {

AntiBlockingCountSpec count_spec(const Graph& g, bool weighted)
{
    if (!is_perfect(g))
        throw NotPerfectError("clique-constraint counting matches P_G only for perfect graphs");
    return AntiBlockingCountSpec{g.order(), maximal_cliques(g), weighted};
}

namespace {

struct KernelPlan {
    int dim;
    int t;
    bool weighted;
    std::vector<std::vector<int>> cliques_at; // clique indices containing coordinate i
    int clique_count;
};

KernelPlan make_plan(const AntiBlockingCountSpec& spec, int t)
{
    if (spec.dim < 1 || spec.dim > 62) throw SizeLimitError("counting limited to 1 <= dim <= 62");
    KernelPlan plan;
    plan.dim = spec.dim;
    plan.t = t;
    plan.weighted = spec.weighted;
    plan.clique_count = static_cast<int>(spec.cliques.size());
    plan.cliques_at.assign(spec.dim, {});
    for (int c = 0; c < plan.clique_count; ++c)
        for (int i : bits_of(spec.cliques[c])) plan.cliques_at[i].push_back(c);
    return plan;
}

struct NodeBudget {
    long long used = 0;
    long long cap = 0;
    bool exceeded() const { return used > cap; }
};

// depth-first count from coordinate `depth` with per-clique remaining budget
// `rem`; the final coordinate is folded in closed form. Returns the exact
// (weighted) number of completions; nodes are charged against the budget.
BigInt count_from(const KernelPlan& plan, int depth, std::vector<int>& rem,
                  std::uint64_t weight, NodeBudget& budget)
{
    budget.used += 1;
    if (budget.exceeded()) return 0;

    int bound = plan.t;
    for (int c : plan.cliques_at[depth]) bound = std::min(bound, rem[c]);

    if (depth == plan.dim - 1) {
        // closed form over the last coordinate: value 0 once, values 1..bound
        // each doubled when weighted
        const BigInt options = plan.weighted ? BigInt(1 + 2 * bound) : BigInt(bound + 1);
        return BigInt(weight) * options;
    }

    BigInt total = 0;
    for (int x = 0; x <= bound; ++x) {
        for (int c : plan.cliques_at[depth]) rem[c] -= x;
        total += count_from(plan, depth + 1, rem,
                            (plan.weighted && x > 0) ? weight * 2 : weight, budget);
        for (int c : plan.cliques_at[depth]) rem[c] += x;
        if (budget.exceeded()) break;
    }
    return total;
}

struct PrefixState {
    std::vector<int> rem;
    std::uint64_t weight;
};

// enumerate all feasible assignments of coordinates [0, split) as work items,
// in deterministic depth-first order
void collect_prefixes(const KernelPlan& plan, int depth, int split, std::vector<int>& rem,
                      std::uint64_t weight, std::vector<PrefixState>& out, NodeBudget& budget)
{
    if (depth == split) {
        out.push_back(PrefixState{rem, weight});
        return;
    }
    budget.used += 1;
    if (budget.exceeded()) return;
    int bound = plan.t;
    for (int c : plan.cliques_at[depth]) bound = std::min(bound, rem[c]);
    for (int x = 0; x <= bound; ++x) {
        for (int c : plan.cliques_at[depth]) rem[c] -= x;
        collect_prefixes(plan, depth + 1, split, rem, (plan.weighted && x > 0) ? weight * 2 : weight,
                         out, budget);
        for (int c : plan.cliques_at[depth]) rem[c] += x;
    }
}

BigInt run_serial(const KernelPlan& plan, const CountOptions& opts)
{
    NodeBudget budget{0, opts.node_budget};
    std::vector<int> rem(plan.clique_count, plan.t);
    const BigInt total = count_from(plan, 0, rem, 1, budget);
    if (budget.exceeded()) throw SizeLimitError("lattice-point count exceeded the node budget");
    return total;
}

BigInt run_parallel(const KernelPlan& plan, const CountOptions& opts)
{
    // pick the shallowest split depth that yields a reasonable work list;
    // the choice depends only on the instance, never on the thread count,
    // so budgets and results are reproducible
    constexpr std::size_t kTargetTasks = 256;
    int split = 1;
    std::vector<PrefixState> tasks;
    NodeBudget prefix_budget{0, opts.node_budget};
    for (; split < plan.dim; ++split) {
        tasks.clear();
        std::vector<int> rem(plan.clique_count, plan.t);
        collect_prefixes(plan, 0, split, rem, 1, tasks, prefix_budget);
        if (prefix_budget.exceeded())
            throw SizeLimitError("lattice-point count exceeded the node budget");
        if (tasks.size() >= kTargetTasks || split + 1 >= plan.dim) break;
    }
    if (split >= plan.dim) return run_serial(plan, opts); // dim == 1

    std::vector<BigInt> partial(tasks.size(), BigInt(0));
    std::vector<long long> nodes(tasks.size(), 0);
    std::atomic<bool> abort{false};

    const int threads = opts.threads > 0 ? opts.threads : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
    for (std::size_t idx = 0; idx < tasks.size(); ++idx) {
        if (abort.load(std::memory_order_relaxed)) continue;
        NodeBudget local{0, opts.node_budget};
        std::vector<int> rem = tasks[idx].rem;
        partial[idx] = count_from(plan, split, rem, tasks[idx].weight, local);
        nodes[idx] = local.used;
        if (local.exceeded()) abort.store(true, std::memory_order_relaxed);
    }

    long long total_nodes = prefix_budget.used;
    for (long long n : nodes) total_nodes += n;
    if (abort.load() || total_nodes > opts.node_budget)
        throw SizeLimitError("lattice-point count exceeded the node budget");

    BigInt total = 0;
    for (const BigInt& p : partial) total += p;
    return total;
}

} // namespace

BigInt count_dilate_serial(const AntiBlockingCountSpec& spec, int t, const CountOptions& opts)
{
    if (t < 0) throw SizeLimitError("dilation factor must be nonnegative");
    if (t == 0) return 1;
    return run_serial(make_plan(spec, t), opts);
}

BigInt count_dilate(const AntiBlockingCountSpec& spec, int t, const CountOptions& opts)
{
    if (t < 0) throw SizeLimitError("dilation factor must be nonnegative");
    if (t == 0) return 1;
    if (opts.threads == 1) return count_dilate_serial(spec, t, opts);
    return run_parallel(make_plan(spec, t), opts);
}

BigInt count_dilate_box(const HRep& h, int radius, int t)
{
    if (h.dim < 1 || h.dim > 10) throw SizeLimitError("box scan limited to dim <= 10");
    const long long side = 2LL * radius * t + 1;
    long long cells = 1;
    for (int i = 0; i < h.dim; ++i) {
        cells *= side;
        if (cells > 200'000'000LL) throw SizeLimitError("box scan too large");
    }
    BigInt count = 0;
    IntVec x(h.dim, -radius * t);
    while (true) {
        bool inside = true;
        for (const HRow& r : h.rows) {
            if (dot(r.normal, x) > r.rhs * t) {
                inside = false;
                break;
            }
        }
        if (inside) count += 1;
        int i = 0;
        while (i < h.dim && x[i] == radius * t) {
            x[i] = -radius * t;
            ++i;
        }
        if (i == h.dim) break;
        x[i] += 1;
    }
    return count;
}

EhrhartProfile dilate_profile(const AntiBlockingCountSpec& spec, int upto,
                              const CountOptions& opts)
{
    EhrhartProfile prof;
    prof.values.resize(upto + 1);
    for (int t = 0; t <= upto; ++t) prof.values[t] = count_dilate(spec, t, opts);
    return prof;
}

int HStarVector::degree() const
{
    for (int i = dim; i >= 0; --i)
        if (entries[i] != 0) return i;
    return 0;
}

BigInt HStarVector::normalized_volume() const
{
    BigInt s = 0;
    for (const BigInt& e : entries) s += e;
    return s;
}

bool HStarVector::is_palindromic() const
{
    for (int k = 0; k <= dim; ++k)
        if (entries[k] != entries[dim - k]) return false;
    return true;
}

bool HStarVector::is_gorenstein_symmetric() const
{
    const int s = degree();
    for (int k = 0; k <= s; ++k)
        if (entries[k] != entries[s - k]) return false;
    return true;
}

HStarVector h_star_from_profile(const EhrhartProfile& prof, int dim)
{
    if (static_cast<int>(prof.values.size()) < dim + 1)
        throw NonIntegralSolutionError("profile needs ehr(0..d)");
    HStarVector h;
    h.dim = dim;
    h.entries.assign(dim + 1, BigInt(0));
    // triangular system: the coefficient of h*_t in the equation for ehr(t)
    // is binom(d, d) = 1, so forward substitution stays in the integers
    for (int t = 0; t <= dim; ++t) {
        BigInt acc = prof.values[t];
        for (int i = 0; i < t; ++i) acc -= h.entries[i] * binomial(t + dim - i, dim);
        h.entries[t] = acc;
        if (acc < 0)
            throw NonIntegralSolutionError("negative h* entry: upstream count is inconsistent");
    }
    return h;
}

std::vector<BigInt> type_b_eulerian(int d)
{
    if (d < 1 || d > 10) throw SizeLimitError("type-B Eulerian table limited to d <= 10");
    EhrhartProfile prof;
    prof.values.resize(d + 1);
    for (int t = 0; t <= d; ++t) {
        BigInt v = 1;
        for (int i = 0; i < d; ++i) v *= 2 * t + 1;
        prof.values[t] = v;
    }
    return h_star_from_profile(prof, d).entries;
}

HStarVector h_star_unconditional(const Graph& g, const CountOptions& opts)
{
    const auto spec = count_spec(g, true);
    return h_star_from_profile(dilate_profile(spec, g.order(), opts), g.order());
}

HStarVector h_star_antiblocking(const Graph& g, const CountOptions& opts)
{
    const auto spec = count_spec(g, false);
    return h_star_from_profile(dilate_profile(spec, g.order(), opts), g.order());
}

bool sandwich_check(const Graph& g, const CountOptions& opts)
{
    const HStarVector h = h_star_unconditional(g, opts);
    const auto upper = type_b_eulerian(g.order());
    for (int i = 0; i <= g.order(); ++i) {
        if (h.entries[i] < binomial(g.order(), i)) return false;
        if (h.entries[i] > upper[i]) return false;
    }
    return true;
}

MahlerResult mahler_check(const Graph& g, const CountOptions& opts)
{
    MahlerResult out;
    const int d = g.order();
    out.product = h_star_unconditional(g, opts).normalized_volume() *
                  h_star_unconditional(g.complement(), opts).normalized_volume();
    out.bound = pow2(2 * d) * factorial(d);
    out.ok = out.product >= out.bound;
    return out;
}

BigInt saint_raymond_lower_bound(const BigInt& vol_a, int d, VolumeMode mode)
{
    if (vol_a <= 0) throw SizeLimitError("volume must be positive");
    const BigInt numerator =
        mode == VolumeMode::antiblocking ? factorial(d) : pow2(2 * d) * factorial(d);
    return numerator / vol_a;
}

} // namespace ucpoly
