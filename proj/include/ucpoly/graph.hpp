#ifndef UCPOLY_GRAPH_HPP
#define UCPOLY_GRAPH_HPP

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "ucpoly/bits.hpp"

namespace ucpoly {

/// Simple vertex-labeled graph on at most 64 vertices, adjacency kept as
/// one bitset word per vertex. Immutable in practice: operations return
/// new graphs.
class Graph {
public:
    explicit Graph(int n);
    Graph(int n, const std::vector<std::pair<int, int>>& edges);

    // text format: first line "n m", then m lines "u v", 0-based,
    // duplicate edges rejected
    static Graph parse(std::istream& in);
    static Graph parse_file(const std::string& path);

    int order() const { return n_; }
    int edge_count() const;
    bool has_edge(int u, int v) const { return test_bit(adj_[u], v); }
    void add_edge(int u, int v);
    Mask neighbors(int v) const { return adj_[v]; }
    Mask vertices() const { return full_mask(n_); }

    Graph complement() const;
    Graph line_graph() const;
    bool is_clique(Mask m) const;
    bool is_stable(Mask m) const;

    // edges in fixed order (u < v, lexicographic); defines line-graph labels
    std::vector<std::pair<int, int>> edges() const;

    bool operator==(const Graph& o) const { return n_ == o.n_ && adj_ == o.adj_; }

    std::string to_text() const;

private:
    int n_;
    std::vector<Mask> adj_;
};

// inclusion-maximal cliques / stable sets, each once, ascending as bitmasks
std::vector<Mask> maximal_cliques(const Graph& g);
std::vector<Mask> maximal_stable_sets(const Graph& g);

int clique_number(const Graph& g);

// exact chromatic number; n <= 20
int chromatic_number(const Graph& g);

std::pair<int, int> clique_and_chromatic(const Graph& g);

// definitional check over all induced subgraphs; n <= 16
bool is_perfect(const Graph& g);

bool is_cis(const Graph& g);
bool is_well_covered(const Graph& g);
bool is_co_well_covered(const Graph& g);

// named families
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph edgeless_graph(int n);
Graph complete_bipartite(int a, int b);
Graph rook_graph(int n); // K_n x K_n, line graph of K_{n,n}
Graph disjoint_union(const Graph& a, const Graph& b);
Graph bipartite_sum(const Graph& a, const Graph& b);

} // namespace ucpoly

#endif
