#ifndef UCPOLY_POSET_HPP
#define UCPOLY_POSET_HPP

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "ucpoly/bits.hpp"
#include "ucpoly/graph.hpp"

namespace ucpoly {

/// Finite poset given by cover relations; the reflexive-transitive closure is
/// computed and validated on construction (a cycle raises InvalidPosetError).
class Poset {
public:
    Poset(int n, const std::vector<std::pair<int, int>>& covers);

    // text format: first line "n k", then k cover lines "u v" meaning u <. v
    static Poset parse(std::istream& in);
    static Poset parse_file(const std::string& path);

    int size() const { return n_; }
    bool leq(int a, int b) const { return test_bit(up_[a], b); }
    bool less(int a, int b) const { return a != b && leq(a, b); }
    bool comparable(int a, int b) const { return leq(a, b) || leq(b, a); }

    Mask strictly_above(int a) const { return up_[a] & ~bit(a); }
    Mask strictly_below(int a) const { return down_[a] & ~bit(a); }

    // elements of s that are minimal / maximal within s
    Mask min_of(Mask s) const;
    Mask max_of(Mask s) const;

    bool is_antichain(Mask s) const;

    Graph comparability_graph() const;

private:
    int n_;
    std::vector<Mask> up_;   // up_[a] = { b : a <= b }
    std::vector<Mask> down_; // down_[a] = { b : b <= a }
};

// every induced 4-path of the comparability graph extends to an induced bull
bool grillet_condition(const Poset& p);

Poset chain_poset(int n);
Poset antichain_poset(int n);
// ordinal sum: every element of the earlier block is below every later one
Poset ordinal_sum_of_antichains(const std::vector<int>& block_sizes);

} // namespace ucpoly

#endif
