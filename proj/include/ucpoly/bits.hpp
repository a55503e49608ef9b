#ifndef UCPOLY_BITS_HPP
#define UCPOLY_BITS_HPP

#include <bit>
#include <cstdint>
#include <vector>

namespace ucpoly {

// Vertex sets over graphs/posets with at most 64 elements live in one word.
using Mask = std::uint64_t;

inline int popcount(Mask m) { return std::popcount(m); }
inline Mask bit(int i) { return Mask(1) << i; }
inline bool test_bit(Mask m, int i) { return (m >> i) & 1; }
inline int lowest_bit(Mask m) { return std::countr_zero(m); }
inline Mask full_mask(int n) { return n == 64 ? ~Mask(0) : (Mask(1) << n) - 1; }

inline std::vector<int> bits_of(Mask m)
{
    std::vector<int> out;
    while (m) {
        int v = lowest_bit(m);
        out.push_back(v);
        m &= m - 1;
    }
    return out;
}

// iterate sub = every subset of m, including 0 and m itself, ascending as integers
template <typename F>
void for_each_subset(Mask m, F&& f)
{
    Mask sub = 0;
    while (true) {
        f(sub);
        if (sub == m) break;
        sub = (sub - m) & m;
    }
}

} // namespace ucpoly

#endif
