#include <doctest.h>

#include <algorithm>
#include <sstream>

#include "ucpoly/errors.hpp"
#include "ucpoly/graph.hpp"
#include "ucpoly/poset.hpp"

using namespace ucpoly;

namespace {

// brute-force oracles, independent of the library paths they check

std::vector<Mask> brute_maximal_cliques(const Graph& g)
{
    std::vector<Mask> cliques;
    for (Mask m = 1; m < (Mask(1) << g.order()); ++m)
        if (g.is_clique(m)) cliques.push_back(m);
    std::vector<Mask> maximal;
    for (Mask c : cliques) {
        bool is_max = true;
        for (Mask other : cliques)
            if (other != c && (c & other) == c) is_max = false;
        if (is_max) maximal.push_back(c);
    }
    std::sort(maximal.begin(), maximal.end());
    return maximal;
}

int brute_chromatic(const Graph& g)
{
    const int n = g.order();
    for (int k = 1; k <= n; ++k) {
        std::vector<int> color(n, 0);
        while (true) {
            bool proper = true;
            for (auto [u, v] : g.edges())
                if (color[u] == color[v]) proper = false;
            if (proper) goto found;
            int i = 0;
            while (i < n && color[i] == k - 1) color[i++] = 0;
            if (i == n) break;
            ++color[i];
        }
        continue;
    found:
        return k;
    }
    return g.order();
}

// test-only cross-check: strong perfect graph theorem oracle
bool has_odd_hole_or_antihole(const Graph& g)
{
    const int n = g.order();
    const Graph c = g.complement();
    for (Mask m = 1; m < (Mask(1) << n); ++m) {
        const int size = popcount(m);
        if (size < 5 || size % 2 == 0) continue;
        for (const Graph* h : {&g, &c}) {
            // induced cycle: every vertex of m has exactly 2 neighbours in m,
            // and m is connected
            bool cycle = true;
            for (int v = 0; v < n && cycle; ++v)
                if (test_bit(m, v)) cycle = popcount(h->neighbors(v) & m) == 2;
            if (!cycle) continue;
            Mask seen = bit(lowest_bit(m));
            while (true) {
                Mask grow = seen;
                for (int v = 0; v < n; ++v)
                    if (test_bit(seen, v)) grow |= h->neighbors(v) & m;
                if (grow == seen) break;
                seen = grow;
            }
            if (seen == m) return true;
        }
    }
    return false;
}

Graph all_graphs_nth(int n, Mask edge_mask)
{
    Graph g(n);
    int idx = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v, ++idx)
            if (test_bit(edge_mask, idx)) g.add_edge(u, v);
    return g;
}

} // namespace

TEST_SUITE("graph")
{
    TEST_CASE("complement basics")
    {
        CHECK(complete_graph(3).complement() == edgeless_graph(3));
        CHECK(cycle_graph(5).complement() == Graph(5, {{0, 2}, {2, 4}, {4, 1}, {1, 3}, {3, 0}}));
        // path a-b-c: complement is the single edge {a,c}
        CHECK(path_graph(3).complement() == Graph(3, {{0, 2}}));
    }

    TEST_CASE("complement is an involution (exhaustive n <= 6)")
    {
        for (int n = 1; n <= 6; ++n) {
            const int pairs = n * (n - 1) / 2;
            for (Mask em = 0; em < (Mask(1) << pairs); ++em) {
                const Graph g = all_graphs_nth(n, em);
                CHECK(g.complement().complement() == g);
            }
        }
    }

    TEST_CASE("maximal cliques")
    {
        CHECK(maximal_cliques(complete_graph(3)) == std::vector<Mask>{0b111});
        CHECK(maximal_cliques(cycle_graph(4)) ==
              std::vector<Mask>{0b0011, 0b0110, 0b1001, 0b1100});
        // rook(2) equals C4: four maximal cliques of size 2
        const auto rook2 = maximal_cliques(rook_graph(2));
        CHECK(rook2.size() == 4);
        CHECK(rook2 == brute_maximal_cliques(rook_graph(2)));
    }

    TEST_CASE("maximal cliques agree with brute force on all graphs n <= 5")
    {
        for (int n = 1; n <= 5; ++n) {
            const int pairs = n * (n - 1) / 2;
            for (Mask em = 0; em < (Mask(1) << pairs); ++em) {
                const Graph g = all_graphs_nth(n, em);
                const auto got = maximal_cliques(g);
                CHECK(got == brute_maximal_cliques(g));
                // output sets pairwise inclusion-incomparable, each a clique
                for (Mask c : got) {
                    CHECK(g.is_clique(c));
                    for (Mask other : got)
                        if (other != c) CHECK((c & other) != c);
                }
            }
        }
    }

    TEST_CASE("maximal stable sets")
    {
        CHECK(maximal_stable_sets(complete_graph(4)).size() == 4);
        CHECK(maximal_stable_sets(cycle_graph(4)) == std::vector<Mask>{0b0101, 0b1010});
        CHECK(maximal_stable_sets(path_graph(3)) == std::vector<Mask>{0b010, 0b101});
    }

    TEST_CASE("clique and chromatic numbers")
    {
        CHECK(clique_and_chromatic(cycle_graph(5)) == std::pair<int, int>{2, 3});
        CHECK(clique_and_chromatic(complete_graph(6)) == std::pair<int, int>{6, 6});
        CHECK(clique_and_chromatic(complete_bipartite(3, 4)) == std::pair<int, int>{2, 2});
        CHECK(clique_and_chromatic(path_graph(4)) == std::pair<int, int>{2, 2});
    }

    TEST_CASE("chromatic number agrees with exhaustive search on all graphs n <= 5")
    {
        for (int n = 1; n <= 5; ++n) {
            const int pairs = n * (n - 1) / 2;
            for (Mask em = 0; em < (Mask(1) << pairs); ++em) {
                const Graph g = all_graphs_nth(n, em);
                CHECK(chromatic_number(g) == brute_chromatic(g));
            }
        }
    }

    TEST_CASE("perfection")
    {
        CHECK_FALSE(is_perfect(cycle_graph(5)));
        CHECK(is_perfect(cycle_graph(6)));
        CHECK(is_perfect(rook_graph(3)));
        CHECK(is_perfect(chain_poset(4).comparability_graph()));
        CHECK(is_perfect(ordinal_sum_of_antichains({2, 3}).comparability_graph()));
    }

    TEST_CASE("perfection matches the odd-hole oracle and complement symmetry (n <= 6)")
    {
        for (int n = 1; n <= 6; ++n) {
            const int pairs = n * (n - 1) / 2;
            for (Mask em = 0; em < (Mask(1) << pairs); ++em) {
                const Graph g = all_graphs_nth(n, em);
                const bool perfect = is_perfect(g);
                CHECK(perfect == !has_odd_hole_or_antihole(g));
                CHECK(perfect == is_perfect(g.complement()));
            }
        }
    }

    TEST_CASE("cis graphs")
    {
        CHECK(is_cis(complete_graph(5)));
        CHECK(is_cis(cycle_graph(4)));
        CHECK_FALSE(is_cis(path_graph(4)));
        // symmetry under complement, exhaustive n <= 5
        for (int n = 1; n <= 5; ++n) {
            const int pairs = n * (n - 1) / 2;
            for (Mask em = 0; em < (Mask(1) << pairs); ++em) {
                const Graph g = all_graphs_nth(n, em);
                CHECK(is_cis(g) == is_cis(g.complement()));
            }
        }
    }

    TEST_CASE("well-covered")
    {
        CHECK(is_well_covered(cycle_graph(4)));
        CHECK_FALSE(is_well_covered(path_graph(3)));
        CHECK(is_well_covered(complete_graph(7)));
    }

    TEST_CASE("line graphs")
    {
        CHECK(complete_bipartite(2, 2).line_graph() == rook_graph(2)); // both are C4
        CHECK(path_graph(3).line_graph() == complete_graph(2));
        CHECK(complete_graph(3).line_graph() == complete_graph(3));
        // the rook graph is the line graph of K_{n,n}
        for (int n = 2; n <= 3; ++n) {
            const auto lg = complete_bipartite(n, n).line_graph();
            CHECK(lg.edge_count() == rook_graph(n).edge_count());
            CHECK(is_perfect(lg));
        }
    }

    TEST_CASE("builders")
    {
        CHECK(rook_graph(2) == Graph(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}})); // a 4-cycle
        CHECK(bipartite_sum(Graph(1), Graph(1)) == complete_graph(2));
        const Graph two_k2 = disjoint_union(complete_graph(2), complete_graph(2));
        CHECK(two_k2.edge_count() == 2);
        CHECK(cycle_graph(4).complement() == Graph(4, {{0, 2}, {1, 3}})); // the two diagonals
    }

    TEST_CASE("text round trip and parse errors")
    {
        const Graph g = cycle_graph(5);
        std::istringstream in(g.to_text());
        CHECK(Graph::parse(in) == g);

        std::istringstream dup("3 2\n0 1\n0 1\n");
        CHECK_THROWS_AS(Graph::parse(dup), ParseError);
        std::istringstream loop("3 1\n2 2\n");
        CHECK_THROWS_AS(Graph::parse(loop), ParseError);
        std::istringstream range("2 1\n0 5\n");
        CHECK_THROWS_AS(Graph::parse(range), ParseError);
    }

    TEST_CASE("size limits")
    {
        CHECK_THROWS_AS(is_perfect(complete_bipartite(9, 9)), SizeLimitError);
        CHECK_THROWS_AS(Graph(70), SizeLimitError);
    }

    TEST_CASE("posets: closure, validation, comparability")
    {
        const Poset diamond(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
        CHECK(diamond.leq(0, 3)); // transitivity
        CHECK_FALSE(diamond.comparable(1, 2));
        Graph expected = complete_graph(4);
        // K4 minus the edge between the two middle elements
        Graph k4_minus(4, {{0, 1}, {0, 2}, {0, 3}, {1, 3}, {2, 3}});
        CHECK(diamond.comparability_graph() == k4_minus);

        CHECK(chain_poset(5).comparability_graph() == complete_graph(5));
        CHECK(antichain_poset(4).comparability_graph() == edgeless_graph(4));

        CHECK_THROWS_AS(Poset(3, {{0, 1}, {1, 2}, {2, 0}}), InvalidPosetError);
        CHECK_THROWS_AS(Poset(2, {{0, 1}, {0, 1}}), ParseError);
    }

    TEST_CASE("poset text format")
    {
        std::istringstream in("3 2\n0 1\n1 2\n");
        const Poset p = Poset::parse(in);
        CHECK(p.leq(0, 2));
        std::istringstream cyc("2 2\n0 1\n1 0\n");
        CHECK_THROWS_AS(Poset::parse(cyc), InvalidPosetError);
    }

    TEST_CASE("grillet condition")
    {
        CHECK(grillet_condition(antichain_poset(4)));
        CHECK(grillet_condition(chain_poset(5)));
        // 4-element fence a < b > c < d: comparability graph is an induced 4-path
        CHECK_FALSE(grillet_condition(Poset(4, {{0, 1}, {2, 1}, {2, 3}})));
        CHECK(grillet_condition(ordinal_sum_of_antichains({2, 2, 2})));
    }

    TEST_CASE("grillet posets have cis comparability graphs (exhaustive n <= 5)")
    {
        // enumerate all labeled posets on n elements via orientation vectors
        for (int n = 2; n <= 5; ++n) {
            std::vector<std::pair<int, int>> pairs;
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
            std::vector<int> state(pairs.size(), 0); // 0 incomparable, 1: i<j, 2: j<i
            long checked = 0;
            while (true) {
                // build relation, test transitivity by constructing the poset
                std::vector<std::pair<int, int>> rels;
                for (std::size_t k = 0; k < pairs.size(); ++k) {
                    if (state[k] == 1) rels.push_back(pairs[k]);
                    if (state[k] == 2) rels.emplace_back(pairs[k].second, pairs[k].first);
                }
                bool is_poset = true;
                try {
                    const Poset p(n, rels);
                    // relations must be transitively closed already to count here
                    for (int a = 0; a < n && is_poset; ++a)
                        for (int b = 0; b < n && is_poset; ++b)
                            if (a != b && p.less(a, b)) {
                                bool listed = false;
                                for (auto [u, v] : rels) listed |= (u == a && v == b);
                                is_poset = listed;
                            }
                    if (is_poset) {
                        ++checked;
                        if (grillet_condition(p)) CHECK(is_cis(p.comparability_graph()));
                    }
                } catch (const InvalidPosetError&) {
                }
                std::size_t i = 0;
                while (i < state.size() && state[i] == 2) state[i++] = 0;
                if (i == state.size()) break;
                ++state[i];
            }
            CHECK(checked > 0);
        }
    }
}
