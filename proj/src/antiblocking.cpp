#include "ucpoly/antiblocking.hpp"

#include <algorithm>
#include <map>

#include "ucpoly/errors.hpp"

namespace ucpoly {

namespace {

RatVec mask_point(Mask m, int dim)
{
    RatVec p(dim, BigRat(0));
    for (int i = 0; i < dim; ++i)
        if (test_bit(m, i)) p[i] = 1;
    return p;
}

IntVec mask_ivec(Mask m, int dim)
{
    IntVec p(dim, 0);
    for (int i = 0; i < dim; ++i)
        if (test_bit(m, i)) p[i] = 1;
    return p;
}

// every 0/1 point of an anti-blocking 0/1-polytope is a subset of a generator
std::vector<Mask> all_zero_one_points(const AntiBlockingPolytope& p)
{
    std::vector<Mask> pts;
    for (Mask g : p.generators) for_each_subset(g, [&](Mask s) { pts.push_back(s); });
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return pts;
}

} // namespace

VRep AntiBlockingPolytope::generator_vrep() const
{
    VRep v;
    v.dim = dim;
    for (Mask g : generators) v.points.push_back(mask_point(g, dim));
    sort_points(v);
    return v;
}

VRep AntiBlockingPolytope::full_vertex_vrep() const
{
    VRep v;
    v.dim = dim;
    for (Mask m : all_zero_one_points(*this)) v.points.push_back(mask_point(m, dim));
    return v;
}

HRep AntiBlockingPolytope::hrep() const
{
    HRep h;
    h.dim = dim;
    for (Mask c : clique_facets) h.rows.push_back(HRow{mask_ivec(c, dim), BigRat(1)});
    for (int i = 0; i < dim; ++i) {
        IntVec a(dim, 0);
        a[i] = -1;
        h.rows.push_back(HRow{std::move(a), BigRat(0)});
    }
    sort_rows(h);
    return h;
}

AntiBlockingPolytope stable_set_polytope(const Graph& g)
{
    if (!is_perfect(g))
        throw NotPerfectError("clique facets describe P_G only for perfect graphs");
    AntiBlockingPolytope p;
    p.dim = g.order();
    p.generators = maximal_stable_sets(g);
    p.clique_facets = maximal_cliques(g);
    return p;
}

VRep stable_set_vrep(const Graph& g)
{
    VRep v;
    v.dim = g.order();
    for (Mask m = 0; m < (Mask(1) << g.order()); ++m)
        if (g.is_stable(m)) v.points.push_back(mask_point(m, g.order()));
    return v;
}

AntiBlockingPolytope antiblocking_dual(const AntiBlockingPolytope& p)
{
    AntiBlockingPolytope d;
    d.dim = p.dim;
    d.generators = p.clique_facets;
    d.clique_facets = p.generators;
    return d;
}

bool is_gorenstein_stable(const Graph& g)
{
    if (!is_perfect(g)) throw NotPerfectError("Gorenstein test defined for perfect graphs");
    return is_co_well_covered(g);
}

BigInt UnconditionalPolytope::vertex_count() const
{
    BigInt total = 0;
    for (Mask g : base.generators) total += pow2(popcount(g));
    return total;
}

BigInt UnconditionalPolytope::facet_count() const
{
    BigInt total = 0;
    for (Mask c : base.clique_facets) total += pow2(popcount(c));
    return total;
}

VRep UnconditionalPolytope::vertices(std::size_t cap) const
{
    if (vertex_count() > BigInt(cap)) throw SizeLimitError("vertex orbit exceeds cap");
    VRep v;
    v.dim = base.dim;
    for (Mask g : base.generators)
        for_each_subset(g, [&](Mask neg) {
            RatVec p(base.dim, BigRat(0));
            for (int i = 0; i < base.dim; ++i)
                if (test_bit(g, i)) p[i] = test_bit(neg, i) ? -1 : 1;
            v.points.push_back(std::move(p));
        });
    sort_points(v);
    return v;
}

HRep UnconditionalPolytope::facets(std::size_t cap) const
{
    if (facet_count() > BigInt(cap)) throw SizeLimitError("facet orbit exceeds cap");
    HRep h;
    h.dim = base.dim;
    for (Mask c : base.clique_facets)
        for_each_subset(c, [&](Mask neg) {
            IntVec a(base.dim, 0);
            for (int i = 0; i < base.dim; ++i)
                if (test_bit(c, i)) a[i] = test_bit(neg, i) ? -1 : 1;
            h.rows.push_back(HRow{std::move(a), BigRat(1)});
        });
    sort_rows(h);
    return h;
}

UnconditionalPolytope unconditional(AntiBlockingPolytope base)
{
    return UnconditionalPolytope{std::move(base)};
}

std::vector<std::pair<int, BigInt>> lattice_points_weighted(const AntiBlockingPolytope& p)
{
    std::map<int, BigInt> by_size;
    for (Mask m : all_zero_one_points(p)) by_size[popcount(m)] += 1;
    return {by_size.begin(), by_size.end()};
}

BigInt unconditional_lattice_point_count(const AntiBlockingPolytope& p)
{
    BigInt total = 0;
    for (auto& [size, count] : lattice_points_weighted(p)) total += count * pow2(size);
    return total;
}

namespace {

Mask shift_mask(Mask m, int by) { return m << by; }

} // namespace

UnconditionalPolytope product(const UnconditionalPolytope& a, const UnconditionalPolytope& b)
{
    AntiBlockingPolytope base;
    base.dim = a.base.dim + b.base.dim;
    for (Mask ga : a.base.generators)
        for (Mask gb : b.base.generators)
            base.generators.push_back(ga | shift_mask(gb, a.base.dim));
    for (Mask c : a.base.clique_facets) base.clique_facets.push_back(c);
    for (Mask c : b.base.clique_facets) base.clique_facets.push_back(shift_mask(c, a.base.dim));
    std::sort(base.generators.begin(), base.generators.end());
    std::sort(base.clique_facets.begin(), base.clique_facets.end());
    return UnconditionalPolytope{std::move(base)};
}

UnconditionalPolytope free_sum(const UnconditionalPolytope& a, const UnconditionalPolytope& b)
{
    AntiBlockingPolytope base;
    base.dim = a.base.dim + b.base.dim;
    for (Mask ga : a.base.generators) base.generators.push_back(ga);
    for (Mask gb : b.base.generators) base.generators.push_back(shift_mask(gb, a.base.dim));
    for (Mask ca : a.base.clique_facets)
        for (Mask cb : b.base.clique_facets)
            base.clique_facets.push_back(ca | shift_mask(cb, a.base.dim));
    std::sort(base.generators.begin(), base.generators.end());
    std::sort(base.clique_facets.begin(), base.clique_facets.end());
    return UnconditionalPolytope{std::move(base)};
}

namespace {

void require_construction_pair(const Graph& g1, const Graph& g2)
{
    if (g1.order() != g2.order())
        throw SizeLimitError("constructions need graphs on a common vertex set");
    if (g1.order() > 5) throw SizeLimitError("generic hull constructions limited to d <= 5");
    if (!is_perfect(g1) || !is_perfect(g2))
        throw NotPerfectError("reflexive constructions need perfect graphs");
}

std::vector<Mask> all_stable_sets(const Graph& g)
{
    std::vector<Mask> out;
    for (Mask m = 0; m < (Mask(1) << g.order()); ++m)
        if (g.is_stable(m)) out.push_back(m);
    return out;
}

} // namespace

VRep minkowski_construction(const Graph& g1, const Graph& g2)
{
    require_construction_pair(g1, g2);
    const int d = g1.order();
    std::vector<RatVec> candidates;
    for (Mask s1 : all_stable_sets(g1))
        for (Mask s2 : all_stable_sets(g2)) {
            RatVec p(d);
            for (int i = 0; i < d; ++i)
                p[i] = BigRat(int(test_bit(s1, i)) - int(test_bit(s2, i)));
            candidates.push_back(std::move(p));
        }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    VRep raw{d, std::move(candidates)};
    // extract the actual vertex set by a hull round trip
    return vertex_enumeration(dual_description(raw, 1 << 12));
}

VRep convex_join(const Graph& g1, const Graph& g2)
{
    require_construction_pair(g1, g2);
    const int d = g1.order();
    std::vector<RatVec> candidates;
    for (Mask s : all_stable_sets(g1)) candidates.push_back(mask_point(s, d));
    for (Mask s : all_stable_sets(g2)) {
        RatVec p(d);
        for (int i = 0; i < d; ++i) p[i] = BigRat(-int(test_bit(s, i)));
        candidates.push_back(std::move(p));
    }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    VRep raw{d, std::move(candidates)};
    return vertex_enumeration(dual_description(raw, 1 << 12));
}

GalePair gale_pair(const Graph& g, bool verify_q_side)
{
    if (!is_perfect(g)) throw NotPerfectError("Gale pairs need a perfect graph");
    if (!is_cis(g)) throw NotCisError("Gale pairs need a CIS graph");
    if (g.order() > 9) throw SizeLimitError("Gale verification limited to n <= 9");

    const int d = g.order();
    const auto stables = maximal_stable_sets(g);
    const auto cliques = maximal_cliques(g);

    GalePair out;
    out.p.dim = out.q.dim = d;
    for (Mask s : stables) out.p.points.push_back(mask_point(s, d));
    for (Mask c : cliques) out.q.points.push_back(mask_point(c, d));
    sort_points(out.p);
    sort_points(out.q);

    const auto equality_system = [d](const std::vector<Mask>& normals) {
        HRep h;
        h.dim = d;
        for (Mask m : normals) {
            IntVec a = mask_ivec(m, d);
            IntVec neg(d);
            for (int i = 0; i < d; ++i) neg[i] = -a[i];
            h.rows.push_back(HRow{std::move(a), BigRat(1)});
            h.rows.push_back(HRow{std::move(neg), BigRat(-1)});
        }
        for (int i = 0; i < d; ++i) {
            IntVec a(d, 0);
            a[i] = -1;
            h.rows.push_back(HRow{std::move(a), BigRat(0)});
        }
        return h;
    };

    out.p_verified = same_point_set(vertex_enumeration(equality_system(cliques)), out.p);
    if (verify_q_side)
        out.q_verified = same_point_set(vertex_enumeration(equality_system(stables)), out.q);
    out.verified = out.p_verified && (!verify_q_side || out.q_verified);
    return out;
}

} // namespace ucpoly
