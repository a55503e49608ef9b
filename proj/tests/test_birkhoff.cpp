#include <doctest.h>

#include "ucpoly/birkhoff.hpp"
#include "ucpoly/errors.hpp"

using namespace ucpoly;

namespace {

std::vector<BigInt> big(std::initializer_list<long long> xs)
{
    std::vector<BigInt> out;
    for (long long x : xs) out.push_back(BigInt(x));
    return out;
}

} // namespace

TEST_SUITE("birkhoff")
{
    TEST_CASE("vertex listings and counts")
    {
        CHECK(birkhoff_vertices(BirkhoffKind::BB, 2).points.size() == 8);
        CHECK(birkhoff_vertices(BirkhoffKind::Pos, 2).points.size() == 7);
        CHECK(birkhoff_vertices(BirkhoffKind::C, 2).points.size() == 16);

        for (int n = 1; n <= 3; ++n)
            for (BirkhoffKind kind :
                 {BirkhoffKind::BB, BirkhoffKind::Pos, BirkhoffKind::C, BirkhoffKind::Cplus})
                CHECK(BigInt(birkhoff_vertices(kind, n).points.size()) ==
                      birkhoff_vertex_count(kind, n));
    }

    TEST_CASE("facet counts")
    {
        CHECK(birkhoff_facet_count(BirkhoffKind::BB, 2) == 16);
        CHECK(birkhoff_facet_count(BirkhoffKind::Pos, 3) == 15);
        CHECK(birkhoff_facet_count(BirkhoffKind::Cplus, 3) == 15); // 9 + 3!
        for (int n = 1; n <= 3; ++n)
            for (BirkhoffKind kind :
                 {BirkhoffKind::BB, BirkhoffKind::Pos, BirkhoffKind::C, BirkhoffKind::Cplus})
                CHECK(BigInt(birkhoff_facets(kind, n).rows.size()) ==
                      birkhoff_facet_count(kind, n));
    }

    TEST_CASE("BB(2) analytic facets match the generic dual description")
    {
        const HRep analytic = birkhoff_facets(BirkhoffKind::BB, 2);
        const HRep generic = dual_description(birkhoff_vertices(BirkhoffKind::BB, 2));
        REQUIRE(analytic.rows.size() == generic.rows.size());
        for (std::size_t i = 0; i < analytic.rows.size(); ++i) {
            CHECK(analytic.rows[i].normal == generic.rows[i].normal);
            CHECK(analytic.rows[i].rhs == generic.rows[i].rhs);
        }
        CHECK(is_reflexive(analytic));
    }

    TEST_CASE("Pos(n) equals the stable set polytope of the rook graph")
    {
        for (int n = 1; n <= 3; ++n) {
            const VRep pos = birkhoff_vertices(BirkhoffKind::Pos, n);
            const VRep stab = stable_set_polytope(rook_graph(n)).full_vertex_vrep();
            CHECK(same_point_set(pos, stab));
        }
    }

    TEST_CASE("dp counts")
    {
        for (int t = 0; t <= 4; ++t) CHECK(dp_count(1, t, true) == 2 * t + 1);
        CHECK(dp_count(2, 1, true) == 17);
        CHECK(dp_count(2, 2, true) == 113);
    }

    TEST_CASE("dp agrees with the generic backtracking counter")
    {
        for (int n = 1; n <= 3; ++n) {
            const auto unweighted = count_spec(rook_graph(n), false);
            const auto weighted = count_spec(rook_graph(n), true);
            for (int t = 0; t <= 4; ++t) {
                CHECK(dp_count(n, t, false) == count_dilate(unweighted, t));
                CHECK(dp_count(n, t, true) == count_dilate(weighted, t));
            }
        }
    }

    TEST_CASE("dp serial reference agrees with the parallel kernel")
    {
        CountOptions par;
        par.threads = 4;
        for (int t = 0; t <= 6; ++t) {
            CHECK(dp_count(3, t, true, par) == dp_count_serial(3, t, true));
            CHECK(dp_count(3, t, false, par) == dp_count_serial(3, t, false));
        }
    }

    TEST_CASE("table 1: Pos(n)")
    {
        const auto rows = reproduce_table(1, 3);
        CHECK(rows[0].vol == 1);
        CHECK(rows[1].vol == 4);
        CHECK(rows[1].hstar == big({1, 2, 1, 0, 0}));
        CHECK(rows[2].vol == 642);
        CHECK(rows[2].hstar == big({1, 24, 156, 280, 156, 24, 1, 0, 0, 0}));
    }

    TEST_CASE("table 2: BB(n)")
    {
        const auto rows = reproduce_table(2, 2);
        CHECK(rows[0].vol == 2);
        CHECK(rows[0].hstar == big({1, 1}));
        CHECK(rows[1].vol == 64);
        CHECK(rows[1].hstar == big({1, 12, 38, 12, 1}));
    }

    TEST_CASE("table 3: Cplus(n)")
    {
        const auto rows = reproduce_table(3, 2);
        CHECK(rows[0].vol == 1);
        CHECK(rows[1].vol == 6);
        CHECK(rows[1].hstar == big({1, 4, 1, 0, 0}));
    }

    TEST_CASE("table 4: C(n)")
    {
        const auto rows = reproduce_table(4, 2);
        CHECK(rows[0].vol == 2);
        CHECK(rows[1].vol == 96);
        CHECK(rows[1].hstar == big({1, 20, 54, 20, 1}));
    }

    TEST_CASE("size caps")
    {
        CHECK_THROWS_AS(dp_count(5, 1, true), SizeLimitError);
        CHECK_THROWS_AS(reproduce_table(3, 4), SizeLimitError);
        CHECK_THROWS_AS(birkhoff_vertices(BirkhoffKind::BB, 5), SizeLimitError);
    }
}
