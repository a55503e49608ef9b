#include "ucpoly/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <sstream>

#include "ucpoly/errors.hpp"

namespace ucpoly {

Graph::Graph(int n) : n_(n), adj_(n, 0)
{
    if (n < 1 || n > 64) throw SizeLimitError("graph order must be in 1..64");
}

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges) : Graph(n)
{
    for (auto [u, v] : edges) add_edge(u, v);
}

void Graph::add_edge(int u, int v)
{
    if (u < 0 || v < 0 || u >= n_ || v >= n_) throw ParseError("edge endpoint out of range");
    if (u == v) throw ParseError("loops are not allowed");
    adj_[u] |= bit(v);
    adj_[v] |= bit(u);
}

Graph Graph::parse(std::istream& in)
{
    int n = 0, m = 0;
    if (!(in >> n >> m)) throw ParseError("expected header line \"n m\"");
    if (n < 1 || n > 64) throw ParseError("vertex count out of range 1..64");
    Graph g(n);
    for (int k = 0; k < m; ++k) {
        int u = 0, v = 0;
        if (!(in >> u >> v)) throw ParseError("expected edge line \"u v\"");
        if (g.has_edge(u, v)) throw ParseError("duplicate edge");
        g.add_edge(u, v);
    }
    return g;
}

Graph Graph::parse_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open graph file: " + path);
    return parse(in);
}

int Graph::edge_count() const
{
    int total = 0;
    for (int v = 0; v < n_; ++v) total += popcount(adj_[v]);
    return total / 2;
}

Graph Graph::complement() const
{
    Graph c(n_);
    const Mask all = vertices();
    for (int v = 0; v < n_; ++v) c.adj_[v] = all & ~(adj_[v] | bit(v));
    return c;
}

std::vector<std::pair<int, int>> Graph::edges() const
{
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (has_edge(u, v)) out.emplace_back(u, v);
    return out;
}

Graph Graph::line_graph() const
{
    const auto es = edges();
    if (es.empty()) throw SizeLimitError("line graph of an edgeless graph is empty");
    if (es.size() > 64) throw SizeLimitError("line graph exceeds 64 vertices");
    Graph lg(static_cast<int>(es.size()));
    for (std::size_t i = 0; i < es.size(); ++i)
        for (std::size_t j = i + 1; j < es.size(); ++j) {
            const auto [a, b] = es[i];
            const auto [c, d] = es[j];
            if (a == c || a == d || b == c || b == d) lg.add_edge(int(i), int(j));
        }
    return lg;
}

bool Graph::is_clique(Mask m) const
{
    for (Mask rest = m; rest;) {
        const int v = lowest_bit(rest);
        rest &= rest - 1;
        if ((m & ~bit(v)) & ~adj_[v]) return false;
    }
    return true;
}

bool Graph::is_stable(Mask m) const
{
    for (Mask rest = m; rest;) {
        const int v = lowest_bit(rest);
        rest &= rest - 1;
        if (m & adj_[v]) return false;
    }
    return true;
}

std::string Graph::to_text() const
{
    const auto es = edges();
    std::ostringstream out;
    out << n_ << ' ' << es.size() << '\n';
    for (auto [u, v] : es) out << u << ' ' << v << '\n';
    return out.str();
}

namespace {

// Bron-Kerbosch with pivoting; emits maximal cliques of the subgraph induced
// by cand (callers pass the full vertex set).
void bron_kerbosch(const Graph& g, Mask r, Mask p, Mask x, std::vector<Mask>& out)
{
    if (!p && !x) {
        out.push_back(r);
        return;
    }
    // pivot: vertex of p|x with most neighbours in p
    int pivot = -1, best = -1;
    for (Mask m = p | x; m;) {
        const int v = lowest_bit(m);
        m &= m - 1;
        const int deg = popcount(p & g.neighbors(v));
        if (deg > best) {
            best = deg;
            pivot = v;
        }
    }
    for (Mask m = p & ~g.neighbors(pivot); m;) {
        const int v = lowest_bit(m);
        m &= m - 1;
        bron_kerbosch(g, r | bit(v), p & g.neighbors(v), x & g.neighbors(v), out);
        p &= ~bit(v);
        x |= bit(v);
    }
}

} // namespace

std::vector<Mask> maximal_cliques(const Graph& g)
{
    std::vector<Mask> out;
    bron_kerbosch(g, 0, g.vertices(), 0, out);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Mask> maximal_stable_sets(const Graph& g)
{
    return maximal_cliques(g.complement());
}

namespace {

// max clique DP over all induced subgraphs: omega[m] for every vertex mask m
std::vector<std::uint8_t> omega_table(const Graph& g)
{
    const int n = g.order();
    std::vector<std::uint8_t> omega(std::size_t(1) << n, 0);
    for (Mask m = 1; m < (Mask(1) << n); ++m) {
        const int v = lowest_bit(m);
        const std::uint8_t without = omega[m & (m - 1)];
        const std::uint8_t with = std::uint8_t(1 + omega[m & g.neighbors(v)]);
        omega[m] = std::max(without, with);
    }
    return omega;
}

} // namespace

int clique_number(const Graph& g)
{
    if (g.order() <= 20) {
        int best = 0;
        struct Rec {
            const Graph& g;
            int& best;
            void run(Mask clique, Mask cand, int size)
            {
                if (size + popcount(cand) <= best) return;
                if (!cand) {
                    best = std::max(best, size);
                    return;
                }
                const int v = lowest_bit(cand);
                run(clique | bit(v), cand & g.neighbors(v), size + 1);
                run(clique, cand & ~bit(v), size);
            }
        } rec{g, best};
        rec.run(0, g.vertices(), 0);
        return best;
    }
    // fall back to scanning maximal cliques
    int best = 0;
    for (Mask c : maximal_cliques(g)) best = std::max(best, popcount(c));
    return best;
}

namespace {

bool colorable(const Graph& g, const std::vector<int>& order, std::vector<int>& color,
               std::size_t pos, int k)
{
    if (pos == order.size()) return true;
    const int v = order[pos];
    Mask used = 0;
    for (std::size_t i = 0; i < pos; ++i)
        if (g.has_edge(order[i], v)) used |= bit(color[order[i]]);
    int fresh = -1; // try at most one previously unused colour (symmetry cut)
    for (int c = 0; c < k; ++c) {
        if (test_bit(used, c)) continue;
        bool seen = false;
        for (std::size_t i = 0; i < pos && !seen; ++i) seen = color[order[i]] == c;
        if (!seen) {
            if (fresh >= 0) continue;
            fresh = c;
        }
        color[v] = c;
        if (colorable(g, order, color, pos + 1, k)) return true;
    }
    color[v] = -1;
    return false;
}

int greedy_upper_bound(const Graph& g, const std::vector<int>& order)
{
    std::vector<int> color(g.order(), -1);
    int used = 0;
    for (int v : order) {
        Mask taken = 0;
        for (int u = 0; u < g.order(); ++u)
            if (color[u] >= 0 && g.has_edge(u, v)) taken |= bit(color[u]);
        int c = 0;
        while (test_bit(taken, c)) ++c;
        color[v] = c;
        used = std::max(used, c + 1);
    }
    return used;
}

} // namespace

int chromatic_number(const Graph& g)
{
    if (g.order() > 20) throw SizeLimitError("exact chromatic number limited to n <= 20");
    std::vector<int> order(g.order());
    for (int i = 0; i < g.order(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return popcount(g.neighbors(a)) > popcount(g.neighbors(b));
    });
    const int lo = clique_number(g);
    const int hi = greedy_upper_bound(g, order);
    for (int k = lo; k < hi; ++k) {
        std::vector<int> color(g.order(), -1);
        if (colorable(g, order, color, 0, k)) return k;
    }
    return hi;
}

std::pair<int, int> clique_and_chromatic(const Graph& g)
{
    return {clique_number(g), chromatic_number(g)};
}

bool is_perfect(const Graph& g)
{
    const int n = g.order();
    if (n > 16) throw SizeLimitError("is_perfect limited to n <= 16");
    const auto omega = omega_table(g);

    // Lawler's DP for the chromatic number of every induced subgraph:
    // chi[m] = 1 + min over maximal stable sets S of G[m] with lowest(m) in S.
    std::vector<std::uint8_t> chi(std::size_t(1) << n, 0);
    for (Mask m = 1; m < (Mask(1) << n); ++m) {
        const int v = lowest_bit(m);
        std::uint8_t best = 255;
        // enumerate maximal stable sets of G[m] containing v
        struct Rec {
            const Graph& g;
            Mask m;
            const std::vector<std::uint8_t>& chi;
            std::uint8_t& best;
            void run(Mask s, Mask cand, Mask excluded)
            {
                // cand: vertices still addable; excluded: skipped vertices that
                // must end up dominated for s to be maximal
                if (!cand) {
                    // maximality: every skipped vertex needs a neighbour in s
                    for (Mask e = excluded; e;) {
                        const int u = lowest_bit(e);
                        e &= e - 1;
                        if (!(g.neighbors(u) & s)) return;
                    }
                    if (std::uint8_t(chi[m & ~s] + 1) < best) best = std::uint8_t(chi[m & ~s] + 1);
                    return;
                }
                const int u = lowest_bit(cand);
                run(s | bit(u), cand & ~(bit(u) | g.neighbors(u)), excluded);
                if (g.neighbors(u) & (s | cand)) // otherwise skipping u can never be maximal
                    run(s, cand & ~bit(u), excluded | bit(u));
            }
        } rec{g, m, chi, best};
        rec.run(bit(v), m & ~(bit(v) | g.neighbors(v)), 0);
        chi[m] = best;
    }

    for (Mask m = 1; m < (Mask(1) << n); ++m)
        if (omega[m] != chi[m]) return false;
    return true;
}

bool is_cis(const Graph& g)
{
    const auto cliques = maximal_cliques(g);
    const auto stables = maximal_stable_sets(g);
    for (Mask c : cliques)
        for (Mask s : stables)
            if (!(c & s)) return false;
    return true;
}

bool is_well_covered(const Graph& g)
{
    const auto stables = maximal_stable_sets(g);
    for (Mask s : stables)
        if (popcount(s) != popcount(stables.front())) return false;
    return true;
}

bool is_co_well_covered(const Graph& g)
{
    return is_well_covered(g.complement());
}

Graph path_graph(int n)
{
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

Graph cycle_graph(int n)
{
    if (n < 3) throw SizeLimitError("cycle needs at least 3 vertices");
    Graph g = path_graph(n);
    g.add_edge(n - 1, 0);
    return g;
}

Graph complete_graph(int n)
{
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

Graph edgeless_graph(int n) { return Graph(n); }

Graph complete_bipartite(int a, int b)
{
    Graph g(a + b);
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) g.add_edge(i, a + j);
    return g;
}

Graph rook_graph(int n)
{
    if (n < 1 || n * n > 64) throw SizeLimitError("rook graph limited to n*n <= 64");
    Graph g(n * n); // cell (i,j) -> i*n + j
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = j + 1; k < n; ++k) {
                g.add_edge(i * n + j, i * n + k); // same row
                g.add_edge(j * n + i, k * n + i); // same column
            }
    return g;
}

Graph disjoint_union(const Graph& a, const Graph& b)
{
    if (a.order() + b.order() > 64) throw SizeLimitError("union exceeds 64 vertices");
    Graph g(a.order() + b.order());
    for (auto [u, v] : a.edges()) g.add_edge(u, v);
    for (auto [u, v] : b.edges()) g.add_edge(a.order() + u, a.order() + v);
    return g;
}

Graph bipartite_sum(const Graph& a, const Graph& b)
{
    return disjoint_union(a.complement(), b.complement()).complement();
}

} // namespace ucpoly
