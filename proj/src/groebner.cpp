#include "ucpoly/groebner.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "ucpoly/errors.hpp"

namespace ucpoly {

std::vector<Mask> antichains(const Poset& p)
{
    if (p.size() > 16) throw SizeLimitError("antichain enumeration limited to n <= 16");
    std::vector<Mask> out;
    for (Mask m = 0; m < (Mask(1) << p.size()); ++m)
        if (p.is_antichain(m)) out.push_back(m);
    return out;
}

std::pair<Mask, Mask> join_meet(const Poset& p, Mask a, Mask b)
{
    const Mask uni = a | b;
    const Mask mn = p.min_of(uni);
    const Mask mx = p.max_of(uni);
    const Mask join = mn;
    const Mask meet = (a & b) | (mx & ~mn);
    return {join, meet};
}

bool antichains_incomparable(const Poset& p, Mask b1, Mask b2)
{
    const Mask mx = p.max_of(b1 | b2);
    return (mx & ~b1) != 0 && (mx & ~b2) != 0;
}

std::vector<UCPoint> uc_lattice_points(const Poset& p)
{
    std::vector<UCPoint> out;
    for (Mask b : antichains(p))
        for_each_subset(b, [&](Mask a) { out.push_back(UCPoint{b, a}); });
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

template <typename T>
int index_of(const std::vector<T>& xs, const T& x)
{
    const auto it = std::lower_bound(xs.begin(), xs.end(), x);
    if (it == xs.end() || *it != x) return -1;
    return int(it - xs.begin());
}

std::array<int, 2> sorted_pair(int a, int b)
{
    return a <= b ? std::array<int, 2>{a, b} : std::array<int, 2>{b, a};
}

} // namespace

ChainBasis chain_groebner(const Poset& p)
{
    if (p.size() > 10) throw SizeLimitError("chain basis limited to n <= 10");
    ChainBasis basis;
    basis.variables = antichains(p); // already ascending
    const auto& vars = basis.variables;
    for (std::size_t i = 0; i < vars.size(); ++i)
        for (std::size_t j = i + 1; j < vars.size(); ++j) {
            if (!antichains_incomparable(p, vars[i], vars[j])) continue;
            const auto [join, meet] = join_meet(p, vars[i], vars[j]);
            const int ji = index_of(vars, join);
            const int mi = index_of(vars, meet);
            MarkedBinomial b{sorted_pair(int(i), int(j)), sorted_pair(ji, mi)};
            if (b.lead != b.trail) basis.binomials.push_back(b);
        }
    std::sort(basis.binomials.begin(), basis.binomials.end());
    return basis;
}

namespace {

// the pair operations of the unconditional chain basis
UCPoint uc_join(const Poset& p, const UCPoint& x, const UCPoint& y)
{
    return UCPoint{join_meet(p, x.b, y.b).first, join_meet(p, x.a, y.a).first};
}

UCPoint uc_meet(const Poset& p, const UCPoint& x, const UCPoint& y)
{
    return UCPoint{join_meet(p, x.b, y.b).second, join_meet(p, x.a, y.a).second};
}

bool separable(const UCPoint& x, const UCPoint& y)
{
    // coordinatewise signs: + on b\a, - on a
    const Mask xpos = x.b & ~x.a, xneg = x.a;
    const Mask ypos = y.b & ~y.a, yneg = y.a;
    return ((xpos & yneg) | (xneg & ypos)) != 0;
}

} // namespace

UCBasis uc_groebner(const Poset& p)
{
    if (p.size() > 8) throw SizeLimitError("unconditional chain basis limited to n <= 8");
    UCBasis basis;
    basis.variables = uc_lattice_points(p); // sorted
    const auto& vars = basis.variables;
    const auto var_id = [&](const UCPoint& pt) { return index_of(vars, pt); };

    std::set<MarkedBinomial> seen;
    const auto emit = [&](const MarkedBinomial& b, int family) {
        if (b.lead == b.trail) return;
        if (b.lead[0] < 0 || b.lead[1] < 0 || b.trail[0] < 0 || b.trail[1] < 0) {
            ++basis.skipped_malformed;
            return;
        }
        if (seen.insert(b).second) {
            basis.binomials.push_back(b);
            basis.family.push_back(family);
        }
    };

    // family 1: sign lifts of the chain binomials, one per incomparable pair
    // (B, B') and per E subseteq B u B', reading X - E as the pair (X, X cap E)
    const auto achains = antichains(p);
    for (std::size_t i = 0; i < achains.size(); ++i)
        for (std::size_t j = i + 1; j < achains.size(); ++j) {
            const Mask b1 = achains[i], b2 = achains[j];
            if (!antichains_incomparable(p, b1, b2)) continue;
            const auto [join, meet] = join_meet(p, b1, b2);
            for_each_subset(b1 | b2, [&](Mask e) {
                emit(MarkedBinomial{
                         sorted_pair(var_id(UCPoint{b1, b1 & e}), var_id(UCPoint{b2, b2 & e})),
                         sorted_pair(var_id(UCPoint{join, join & e}),
                                     var_id(UCPoint{meet, meet & e}))},
                     1);
            });
        }

    // family 2: separable pairs straightened through the sign-split points
    for (std::size_t i = 0; i < vars.size(); ++i)
        for (std::size_t j = i + 1; j < vars.size(); ++j) {
            const UCPoint x = vars[i], y = vars[j];
            if (!separable(x, y)) continue;
            const Mask shared_neg = x.a & y.a;
            const UCPoint c{(x.b & ~y.b) | shared_neg, (x.a & ~y.b) | shared_neg};
            const UCPoint cp{(y.b & ~x.b) | shared_neg, (y.a & ~x.b) | shared_neg};
            if ((c.a & ~c.b) || (cp.a & ~cp.b) || !p.is_antichain(c.b) || !p.is_antichain(cp.b)) {
                ++basis.skipped_malformed;
                continue;
            }
            const UCPoint top = uc_join(p, c, cp);
            const UCPoint bot = uc_meet(p, c, cp);
            if ((top.a & ~top.b) || (bot.a & ~bot.b) || !p.is_antichain(top.b) ||
                !p.is_antichain(bot.b)) {
                ++basis.skipped_malformed;
                continue;
            }
            emit(MarkedBinomial{sorted_pair(int(i), int(j)),
                                sorted_pair(var_id(top), var_id(bot))},
                 2);
        }
    return basis;
}

bool verify_toric(const MarkedBinomial& b, const std::vector<IntVec>& points)
{
    const std::size_t d = points.at(b.lead[0]).size();
    for (std::size_t k = 0; k < d; ++k) {
        const BigInt lead = points[b.lead[0]][k] + points[b.lead[1]][k];
        const BigInt trail = points[b.trail[0]][k] + points[b.trail[1]][k];
        if (lead != trail) return false;
    }
    return true;
}

std::vector<IntVec> chain_variable_points(const Poset& p, const std::vector<Mask>& variables)
{
    std::vector<IntVec> out;
    for (Mask m : variables) {
        IntVec v(p.size(), 0);
        for (int i : bits_of(m)) v[i] = 1;
        out.push_back(std::move(v));
    }
    return out;
}

std::vector<IntVec> uc_variable_points(const Poset& p, const std::vector<UCPoint>& variables)
{
    std::vector<IntVec> out;
    for (const UCPoint& pt : variables) {
        IntVec v(p.size(), 0);
        for (int i : bits_of(pt.b)) v[i] = 1;
        for (int i : bits_of(pt.a)) v[i] = -1;
        out.push_back(std::move(v));
    }
    return out;
}

namespace {

using Monomial = std::vector<int>;          // sorted variable ids with multiplicity
using Polynomial = std::map<Monomial, BigInt>;

Monomial mono_mul(const Monomial& a, const Monomial& b)
{
    Monomial out;
    out.reserve(a.size() + b.size());
    std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

// divide a by b if possible (multiset inclusion)
bool mono_div(const Monomial& a, const Monomial& b, Monomial& quotient)
{
    quotient.clear();
    std::size_t i = 0;
    for (int x : a) {
        if (i < b.size() && b[i] == x) ++i;
        else quotient.push_back(x);
    }
    return i == b.size();
}

void poly_add(Polynomial& p, const Monomial& m, const BigInt& c)
{
    auto it = p.find(m);
    if (it == p.end()) {
        if (c != 0) p.emplace(m, c);
        return;
    }
    it->second += c;
    if (it->second == 0) p.erase(it);
}

} // namespace

BuchbergerResult marked_buchberger_verify(const std::vector<MarkedBinomial>& basis,
                                          long long step_cap)
{
    if (basis.size() > 200) throw SizeLimitError("marked verification limited to 200 binomials");
    std::vector<Monomial> leads, trails;
    for (const MarkedBinomial& b : basis) {
        leads.push_back(Monomial{b.lead[0], b.lead[1]});
        trails.push_back(Monomial{b.trail[0], b.trail[1]});
    }

    long long steps = 0;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        for (std::size_t j = i + 1; j < basis.size(); ++j) {
            // S-polynomial from the lcm of the two marked leads
            Monomial lcm;
            {
                // multiset union-max of two degree-2 monomials
                Monomial uni = mono_mul(leads[i], leads[j]);
                // remove one copy of the shared part (gcd)
                Monomial gcd;
                std::size_t a = 0, b = 0;
                while (a < 2 && b < 2) {
                    if (leads[i][a] == leads[j][b]) {
                        gcd.push_back(leads[i][a]);
                        ++a;
                        ++b;
                    } else if (leads[i][a] < leads[j][b]) ++a;
                    else ++b;
                }
                Monomial rest;
                mono_div(uni, gcd, rest);
                lcm = rest;
            }
            Monomial qi, qj;
            mono_div(lcm, leads[i], qi);
            mono_div(lcm, leads[j], qj);

            Polynomial s;
            poly_add(s, mono_mul(qi, trails[i]), 1);
            poly_add(s, mono_mul(qj, trails[j]), -1);

            // full reduction by the marked basis; the divisor is located
            // before the polynomial is touched
            while (!s.empty()) {
                if (++steps > step_cap) return BuchbergerResult::step_cap_exceeded;
                Monomial target, q;
                BigInt coeff;
                std::size_t which = basis.size();
                for (const auto& [mono, c] : s) {
                    for (std::size_t k = 0; k < basis.size(); ++k) {
                        Monomial quotient;
                        if (mono_div(mono, leads[k], quotient)) {
                            target = mono;
                            q = std::move(quotient);
                            coeff = c;
                            which = k;
                            break;
                        }
                    }
                    if (which < basis.size()) break;
                }
                if (which == basis.size()) return BuchbergerResult::failed;
                poly_add(s, target, -coeff);
                poly_add(s, mono_mul(q, trails[which]), coeff);
            }
        }
    }
    return BuchbergerResult::verified;
}

} // namespace ucpoly
