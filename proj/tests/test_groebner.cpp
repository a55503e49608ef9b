#include <doctest.h>

#include <set>

#include "ucpoly/ehrhart.hpp"
#include "ucpoly/errors.hpp"
#include "ucpoly/groebner.hpp"

using namespace ucpoly;

namespace {

// all labeled posets on n elements via pairwise orientation vectors
std::vector<Poset> all_posets(int n)
{
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
    std::vector<Poset> out;
    std::vector<int> state(pairs.size(), 0);
    while (true) {
        std::vector<std::pair<int, int>> rels;
        for (std::size_t k = 0; k < pairs.size(); ++k) {
            if (state[k] == 1) rels.push_back(pairs[k]);
            if (state[k] == 2) rels.emplace_back(pairs[k].second, pairs[k].first);
        }
        try {
            const Poset p(n, rels);
            // keep only transitively closed orientation vectors, so each
            // poset appears exactly once
            bool closed = true;
            for (int a = 0; a < n && closed; ++a)
                for (int b = 0; b < n && closed; ++b) {
                    if (a == b || !p.less(a, b)) continue;
                    bool listed = false;
                    for (auto [u, v] : rels) listed |= (u == a && v == b);
                    closed = listed;
                }
            if (closed) out.push_back(p);
        } catch (const InvalidPosetError&) {
        }
        std::size_t i = 0;
        while (i < state.size() && state[i] == 2) state[i++] = 0;
        if (i == state.size()) break;
        ++state[i];
    }
    return out;
}

int index_of_mask(const std::vector<Mask>& xs, Mask x)
{
    return int(std::lower_bound(xs.begin(), xs.end(), x) - xs.begin());
}

} // namespace

TEST_SUITE("groebner")
{
    TEST_CASE("antichain enumeration")
    {
        CHECK(antichains(chain_poset(2)) == std::vector<Mask>{0b00, 0b01, 0b10});
        CHECK(antichains(antichain_poset(2)) == std::vector<Mask>{0b00, 0b01, 0b10, 0b11});
        CHECK(antichains(chain_poset(3)).size() == 4);
    }

    TEST_CASE("join and meet")
    {
        const Poset free2 = antichain_poset(2);
        const auto [join, meet] = join_meet(free2, 0b01, 0b10);
        CHECK(join == 0b11);
        CHECK(meet == 0b00);

        // idempotence
        for (Mask a : antichains(free2)) {
            const auto [j, m] = join_meet(free2, a, a);
            CHECK(j == a);
            CHECK(m == a);
        }

        // fence a < b > c: {a,c} and {b} -> join {a,c}, meet {b}
        const Poset fence(3, {{0, 1}, {2, 1}});
        const auto [j2, m2] = join_meet(fence, 0b101, 0b010);
        CHECK(j2 == 0b101);
        CHECK(m2 == 0b010);
    }

    TEST_CASE("join/meet is a vector identity on all posets n <= 6")
    {
        for (int n = 1; n <= 6; ++n) {
            if (n > 4) break; // labeled enumeration grows fast; n <= 4 here
            for (const Poset& p : all_posets(n)) {
                const auto chains = antichains(p);
                for (Mask a : chains)
                    for (Mask b : chains) {
                        const auto [j, m] = join_meet(p, a, b);
                        CHECK(p.is_antichain(j));
                        CHECK(p.is_antichain(m));
                        for (int i = 0; i < n; ++i)
                            CHECK(int(test_bit(j, i)) + int(test_bit(m, i)) ==
                                  int(test_bit(a, i)) + int(test_bit(b, i)));
                    }
            }
        }
        // the 5 and 6 element antichain/chain extremes separately
        for (const Poset& p : {antichain_poset(6), chain_poset(6),
                               ordinal_sum_of_antichains({3, 3})}) {
            const auto chains = antichains(p);
            for (Mask a : chains)
                for (Mask b : chains) {
                    const auto [j, m] = join_meet(p, a, b);
                    for (int i = 0; i < p.size(); ++i)
                        CHECK(int(test_bit(j, i)) + int(test_bit(m, i)) ==
                              int(test_bit(a, i)) + int(test_bit(b, i)));
                }
        }
    }

    TEST_CASE("incomparability")
    {
        CHECK(antichains_incomparable(antichain_poset(2), 0b01, 0b10));
        CHECK_FALSE(antichains_incomparable(chain_poset(2), 0b01, 0b10));
        CHECK_FALSE(antichains_incomparable(antichain_poset(2), 0b11, 0b11));
    }

    TEST_CASE("chain basis fixtures")
    {
        // 2-antichain: single binomial [{0}][{1}] - [{0,1}][{}]
        const auto free2 = chain_groebner(antichain_poset(2));
        REQUIRE(free2.binomials.size() == 1);
        const auto& vars = free2.variables;
        const auto b = free2.binomials[0];
        CHECK(vars[b.lead[0]] == 0b01);
        CHECK(vars[b.lead[1]] == 0b10);
        CHECK(vars[b.trail[0]] == 0b00);
        CHECK(vars[b.trail[1]] == 0b11);

        CHECK(chain_groebner(chain_poset(2)).binomials.empty());
        CHECK(chain_groebner(chain_poset(5)).binomials.empty());

        // two 2-chains side by side: one binomial per incomparable pair
        const Poset two_chains(4, {{0, 1}, {2, 3}});
        const auto basis = chain_groebner(two_chains);
        const auto chains = antichains(two_chains);
        long pairs = 0;
        for (std::size_t i = 0; i < chains.size(); ++i)
            for (std::size_t j = i + 1; j < chains.size(); ++j)
                if (antichains_incomparable(two_chains, chains[i], chains[j])) ++pairs;
        CHECK(BigInt(basis.binomials.size()) == pairs);
    }

    TEST_CASE("chain binomials pass the toric test on all posets n <= 5")
    {
        for (int n = 1; n <= 5; ++n) {
            for (const Poset& p : all_posets(n)) {
                const auto basis = chain_groebner(p);
                const auto pts = chain_variable_points(p, basis.variables);
                for (const auto& b : basis.binomials) CHECK(verify_toric(b, pts));
            }
        }
    }

    TEST_CASE("uc lattice points")
    {
        CHECK(uc_lattice_points(chain_poset(2)).size() == 5);
        CHECK(uc_lattice_points(antichain_poset(2)).size() == 9);
        CHECK(uc_lattice_points(chain_poset(3)).size() == 7);

        // |UC points| = ehr_{UC}(1) for all posets n <= 5
        for (int n = 1; n <= 5; ++n) {
            for (const Poset& p : all_posets(n)) {
                const auto spec = count_spec(p.comparability_graph(), true);
                CHECK(BigInt(uc_lattice_points(p).size()) == count_dilate(spec, 1));
            }
        }
    }

    TEST_CASE("uc basis: one-element poset")
    {
        const auto basis = uc_groebner(chain_poset(1));
        // variables: 0, +1, -1 as pairs (b,a): (0,0), (1,0), (1,1)
        REQUIRE(basis.variables.size() == 3);
        REQUIRE(basis.binomials.size() == 1);
        const auto b = basis.binomials[0];
        CHECK(basis.family[0] == 2);
        // lead x_{+1} x_{-1}, trail x_0^2
        CHECK(basis.variables[b.lead[0]] == UCPoint{1, 0});
        CHECK(basis.variables[b.lead[1]] == UCPoint{1, 1});
        CHECK(b.trail[0] == b.trail[1]);
        CHECK(basis.variables[b.trail[0]] == UCPoint{0, 0});
    }

    TEST_CASE("uc basis: 2-chain has only the separable family")
    {
        const auto basis = uc_groebner(chain_poset(2));
        for (int f : basis.family) CHECK(f == 2);
        CHECK(!basis.binomials.empty());
    }

    TEST_CASE("uc basis of the 2-antichain contains the sign orbit of the chain binomial")
    {
        const Poset p = antichain_poset(2);
        const auto uc = uc_groebner(p);
        const auto chain = chain_groebner(p);
        REQUIRE(chain.binomials.size() == 1);

        // apply all sign vectors to the chain binomial [{0}][{1}] - [{0,1}][{}]
        std::set<MarkedBinomial> family1;
        for (std::size_t k = 0; k < uc.binomials.size(); ++k)
            if (uc.family[k] == 1) family1.insert(uc.binomials[k]);

        const auto uc_id = [&](Mask b, Mask neg) {
            const UCPoint pt{b, b & neg};
            return int(std::lower_bound(uc.variables.begin(), uc.variables.end(), pt) -
                       uc.variables.begin());
        };
        std::set<MarkedBinomial> lifted;
        for (Mask neg = 0; neg < 4; ++neg) {
            const int l0 = uc_id(0b01, neg), l1 = uc_id(0b10, neg);
            const int t0 = uc_id(0b00, neg), t1 = uc_id(0b11, neg);
            lifted.insert(MarkedBinomial{{std::min(l0, l1), std::max(l0, l1)},
                                         {std::min(t0, t1), std::max(t0, t1)}});
        }
        for (const auto& b : lifted) CHECK(family1.count(b) == 1);
        CHECK(family1 == lifted);
    }

    TEST_CASE("uc binomials pass the toric test on all posets n <= 5; leads square-free")
    {
        for (int n = 1; n <= 5; ++n) {
            for (const Poset& p : all_posets(n)) {
                const auto basis = uc_groebner(p);
                const auto pts = uc_variable_points(p, basis.variables);
                for (const auto& b : basis.binomials) {
                    CHECK(verify_toric(b, pts));
                    CHECK(b.lead[0] != b.lead[1]); // quadratic square-free leads
                }
            }
        }
    }

    TEST_CASE("UC of the n-antichain is the cube and its basis is the sign lift")
    {
        for (int n = 1; n <= 3; ++n) {
            const Poset p = antichain_poset(n);
            CHECK(BigInt(uc_lattice_points(p).size()) == pow2(n) * ... = 0 ? 0 : 0);
        }
    }

    TEST_CASE("corrupted toric pair fails")
    {
        const Poset p = antichain_poset(2);
        const auto basis = chain_groebner(p);
        const auto pts = chain_variable_points(p, basis.variables);
        MarkedBinomial bad = basis.binomials[0];
        bad.trail = {index_of_mask(basis.variables, 0b00), index_of_mask(basis.variables, 0b01)};
        CHECK_FALSE(verify_toric(bad, pts));
    }

    TEST_CASE("marked buchberger verification")
    {
        // single-binomial basis: the only S-pair reduces trivially
        CHECK(marked_buchberger_verify(chain_groebner(antichain_poset(2)).binomials) ==
              BuchbergerResult::verified);

        // all chain bases with <= 4 elements
        for (int n = 1; n <= 4; ++n)
            for (const Poset& p : all_posets(n))
                CHECK(marked_buchberger_verify(chain_groebner(p).binomials) ==
                      BuchbergerResult::verified);

        // deleting a binomial from a 2x2 grid basis breaks reduction
        const Poset grid(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
        auto basis = chain_groebner(grid).binomials;
        REQUIRE(basis.size() >= 2);
        basis.pop_back();
        const auto r = marked_buchberger_verify(basis);
        CHECK((r == BuchbergerResult::failed || r == BuchbergerResult::step_cap_exceeded));
    }

    TEST_CASE("size caps")
    {
        CHECK_THROWS_AS(antichains(antichain_poset(17)), SizeLimitError);
        CHECK_THROWS_AS(uc_groebner(antichain_poset(9)), SizeLimitError);
        CHECK_THROWS_AS(chain_groebner(antichain_poset(11)), SizeLimitError);
    }
}
