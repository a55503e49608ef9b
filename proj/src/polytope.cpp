#include "ucpoly/polytope.hpp"

#include <algorithm>
#include <numeric>

#include "ucpoly/errors.hpp"

namespace ucpoly {

BigInt vec_gcd(const IntVec& v)
{
    BigInt g = 0;
    for (const BigInt& x : v) g = boost::multiprecision::gcd(g, x);
    return g;
}

IntVec primitive(const IntVec& v)
{
    const BigInt g = vec_gcd(v);
    if (g == 0 || g == 1) return v;
    IntVec out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] / g;
    return out;
}

BigRat dot(const IntVec& a, const RatVec& x)
{
    BigRat s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += BigRat(a[i]) * x[i];
    return s;
}

BigInt dot(const IntVec& a, const IntVec& x)
{
    BigInt s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * x[i];
    return s;
}

RatVec to_rational(const IntVec& v)
{
    RatVec out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = BigRat(v[i]);
    return out;
}

IntVec to_integer(const RatVec& v)
{
    IntVec out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (boost::multiprecision::denominator(v[i]) != 1)
            throw DegenerateError("point is not a lattice point");
        out[i] = boost::multiprecision::numerator(v[i]);
    }
    return out;
}

int matrix_rank(std::vector<RatVec> rows)
{
    if (rows.empty()) return 0;
    const std::size_t cols = rows[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
        std::size_t piv = r;
        while (piv < rows.size() && rows[piv][c] == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[r], rows[piv]);
        for (std::size_t i = r + 1; i < rows.size(); ++i) {
            if (rows[i][c] == 0) continue;
            const BigRat f = rows[i][c] / rows[r][c];
            for (std::size_t j = c; j < cols; ++j) rows[i][j] -= f * rows[r][j];
        }
        ++r;
    }
    return static_cast<int>(r);
}

BigInt int_determinant(std::vector<IntVec> m)
{
    const std::size_t n = m.size();
    BigInt sign = 1, prev = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        while (piv < n && m[piv][k] == 0) ++piv;
        if (piv == n) return 0;
        if (piv != k) {
            std::swap(m[piv], m[k]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

namespace {

using ZeroSet = std::vector<std::uint64_t>;

ZeroSet zs_make(std::size_t bits) { return ZeroSet((bits + 63) / 64, 0); }
void zs_set(ZeroSet& z, std::size_t i) { z[i / 64] |= std::uint64_t(1) << (i % 64); }

ZeroSet zs_and(const ZeroSet& a, const ZeroSet& b)
{
    ZeroSet out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] & b[i];
    return out;
}

bool zs_subset(const ZeroSet& sub, const ZeroSet& sup)
{
    for (std::size_t i = 0; i < sub.size(); ++i)
        if (sub[i] & ~sup[i]) return false;
    return true;
}

struct Ray {
    IntVec dir;
    ZeroSet zero;
};

// extreme rays of { y : <g,y> >= 0 for all rows g }, rows must span R^D
// (pointed dual cone); double description with combinatorial adjacency.
std::vector<IntVec> cone_extreme_rays(const std::vector<IntVec>& rows)
{
    const std::size_t m = rows.size();
    const std::size_t D = rows[0].size();

    // greedy independent basis in input order
    std::vector<std::size_t> basis;
    {
        std::vector<RatVec> echelon;
        for (std::size_t i = 0; i < m && basis.size() < D; ++i) {
            std::vector<RatVec> probe = echelon;
            probe.push_back(to_rational(rows[i]));
            if (matrix_rank(probe) > static_cast<int>(echelon.size())) {
                echelon.push_back(to_rational(rows[i]));
                basis.push_back(i);
            }
        }
    }
    if (basis.size() < D) throw DegenerateError("constraint rows do not span the space");

    // initial rays: columns of the adjugate of the basis matrix (sign-fixed)
    std::vector<IntVec> M(D, IntVec(D));
    for (std::size_t i = 0; i < D; ++i) M[i] = rows[basis[i]];
    const BigInt det = int_determinant(M);
    std::vector<Ray> rays;
    for (std::size_t j = 0; j < D; ++j) {
        // Cramer: column j of adj(M) solves M x = det * e_j
        IntVec col(D);
        for (std::size_t k = 0; k < D; ++k) {
            std::vector<IntVec> Mk = M;
            for (std::size_t i = 0; i < D; ++i) Mk[i][k] = (i == j) ? 1 : 0;
            col[k] = int_determinant(Mk);
        }
        if (det < 0)
            for (auto& x : col) x = -x;
        Ray r{primitive(col), zs_make(m)};
        for (std::size_t i = 0; i < D; ++i)
            if (i != j) zs_set(r.zero, basis[i]);
        rays.push_back(std::move(r));
    }

    std::vector<bool> processed(m, false);
    for (std::size_t i : basis) processed[i] = true;

    for (std::size_t gi = 0; gi < m; ++gi) {
        if (processed[gi]) continue;
        processed[gi] = true;
        const IntVec& g = rows[gi];

        std::vector<BigInt> val(rays.size());
        bool any_minus = false;
        for (std::size_t r = 0; r < rays.size(); ++r) {
            val[r] = dot(g, rays[r].dir);
            if (val[r] == 0) zs_set(rays[r].zero, gi);
            if (val[r] < 0) any_minus = true;
        }
        if (!any_minus) continue;

        std::vector<Ray> next;
        for (std::size_t r = 0; r < rays.size(); ++r)
            if (val[r] >= 0) next.push_back(rays[r]);

        for (std::size_t p = 0; p < rays.size(); ++p) {
            if (val[p] <= 0) continue;
            for (std::size_t q = 0; q < rays.size(); ++q) {
                if (val[q] >= 0) continue;
                const ZeroSet common = zs_and(rays[p].zero, rays[q].zero);
                bool adjacent = true;
                for (std::size_t r = 0; r < rays.size() && adjacent; ++r) {
                    if (r == p || r == q) continue;
                    adjacent = !zs_subset(common, rays[r].zero);
                }
                if (!adjacent) continue;
                IntVec dir(D);
                for (std::size_t k = 0; k < D; ++k)
                    dir[k] = val[p] * rays[q].dir[k] - val[q] * rays[p].dir[k];
                Ray nr{primitive(dir), common};
                zs_set(nr.zero, gi);
                next.push_back(std::move(nr));
            }
        }
        rays = std::move(next);
    }

    std::vector<IntVec> out;
    out.reserve(rays.size());
    for (auto& r : rays) out.push_back(std::move(r.dir));
    std::sort(out.begin(), out.end());
    return out;
}

IntVec homogenize_point(const RatVec& p)
{
    BigInt lcm = 1;
    for (const BigRat& x : p)
        lcm = boost::multiprecision::lcm(lcm, BigInt(boost::multiprecision::denominator(x)));
    IntVec row(p.size() + 1);
    row[0] = lcm;
    for (std::size_t i = 0; i < p.size(); ++i)
        row[i + 1] = BigInt(boost::multiprecision::numerator(p[i])) *
                     (lcm / BigInt(boost::multiprecision::denominator(p[i])));
    return row;
}

HRow canonical_row(IntVec normal, BigRat rhs)
{
    const BigInt g = vec_gcd(normal);
    if (g > 1) {
        for (auto& x : normal) x /= g;
        rhs /= BigRat(g);
    }
    return HRow{std::move(normal), std::move(rhs)};
}

bool row_less(const HRow& a, const HRow& b)
{
    if (a.normal != b.normal) return a.normal < b.normal;
    return a.rhs < b.rhs;
}

} // namespace

void sort_points(VRep& v) { std::sort(v.points.begin(), v.points.end()); }

void sort_rows(HRep& h) { std::sort(h.rows.begin(), h.rows.end(), row_less); }

HRep dual_description(const VRep& v, std::size_t max_generators)
{
    if (v.points.empty()) throw DegenerateError("empty point set");
    if (v.dim > 10) throw SizeLimitError("generic hull limited to dim <= 10");
    if (v.points.size() > max_generators) throw SizeLimitError("too many hull generators");

    std::vector<IntVec> rows;
    rows.reserve(v.points.size());
    for (const RatVec& p : v.points) rows.push_back(homogenize_point(p));

    std::vector<RatVec> ratrows;
    for (const auto& r : rows) ratrows.push_back(to_rational(r));
    if (matrix_rank(ratrows) < v.dim + 1)
        throw DegenerateError("points are not full-dimensional; project to the affine hull first");

    HRep h;
    h.dim = v.dim;
    for (const IntVec& ray : cone_extreme_rays(rows)) {
        IntVec normal(v.dim);
        for (int i = 0; i < v.dim; ++i) normal[i] = -ray[i + 1];
        h.rows.push_back(canonical_row(std::move(normal), BigRat(ray[0])));
    }
    sort_rows(h);
    return h;
}

VRep vertex_enumeration(const HRep& h)
{
    const std::size_t D = std::size_t(h.dim) + 1;
    std::vector<IntVec> rows;
    for (const HRow& r : h.rows) {
        const BigInt den = boost::multiprecision::denominator(r.rhs);
        IntVec row(D);
        row[0] = BigInt(boost::multiprecision::numerator(r.rhs));
        for (int i = 0; i < h.dim; ++i) row[i + 1] = -r.normal[i] * den;
        rows.push_back(primitive(row));
    }
    {
        IntVec x0(D, 0);
        x0[0] = 1;
        rows.push_back(std::move(x0));
    }

    std::vector<RatVec> ratrows;
    for (const auto& r : rows) ratrows.push_back(to_rational(r));
    if (matrix_rank(ratrows) < static_cast<int>(D))
        throw UnboundedError("inequalities do not describe a bounded polytope");

    VRep v;
    v.dim = h.dim;
    for (const IntVec& ray : cone_extreme_rays(rows)) {
        if (ray[0] == 0) {
            bool zero = true;
            for (std::size_t i = 1; i < D; ++i) zero = zero && ray[i] == 0;
            if (zero) continue;
            throw UnboundedError("polyhedron has a recession ray");
        }
        RatVec p(h.dim);
        for (int i = 0; i < h.dim; ++i) p[i] = BigRat(ray[i + 1], ray[0]);
        v.points.push_back(std::move(p));
    }
    sort_points(v);
    return v;
}

VRep polar_dual(const HRep& h)
{
    VRep v;
    v.dim = h.dim;
    for (const HRow& r : h.rows) {
        if (r.rhs <= 0) throw OriginNotInteriorError("polar dual needs 0 strictly interior");
        RatVec p(h.dim);
        for (int i = 0; i < h.dim; ++i) p[i] = BigRat(r.normal[i]) / r.rhs;
        v.points.push_back(std::move(p));
    }
    sort_points(v);
    return v;
}

bool is_reflexive(const HRep& h)
{
    for (const HRow& r : h.rows) {
        if (r.rhs <= 0) throw OriginNotInteriorError("reflexivity needs 0 strictly interior");
        const HRow canon = canonical_row(r.normal, r.rhs);
        if (canon.rhs != 1) return false;
    }
    return true;
}

BigRat facet_width(const VRep& v, const IntVec& primitive_normal)
{
    if (v.points.empty()) throw DegenerateError("empty point set");
    BigRat lo = dot(primitive_normal, v.points.front());
    BigRat hi = lo;
    for (const RatVec& p : v.points) {
        const BigRat s = dot(primitive_normal, p);
        lo = std::min(lo, s);
        hi = std::max(hi, s);
    }
    return hi - lo;
}

bool is_compressed(const VRep& v, const HRep& h)
{
    for (const HRow& r : h.rows)
        if (facet_width(v, primitive(r.normal)) != 1) return false;
    return true;
}

BigInt simplex_normalized_volume(const std::vector<IntVec>& pts)
{
    if (pts.empty()) throw DegenerateSimplexError("empty simplex");
    const std::size_t d = pts[0].size();
    if (pts.size() != d + 1)
        throw DegenerateSimplexError("a d-simplex needs exactly d+1 vertices");
    std::vector<IntVec> edges(d, IntVec(d));
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) edges[i][j] = pts[i + 1][j] - pts[0][j];
    BigInt det = int_determinant(std::move(edges));
    if (det < 0) det = -det;
    if (det == 0) throw DegenerateSimplexError("vertices are affinely dependent");
    return det;
}

bool contains(const HRep& h, const RatVec& x)
{
    for (const HRow& r : h.rows)
        if (dot(r.normal, x) > r.rhs) return false;
    return true;
}

std::vector<IntVec> affine_lattice_coordinates(const std::vector<IntVec>& pts)
{
    if (pts.empty()) return {};
    const std::size_t d = pts[0].size();
    std::vector<IntVec> diffs;
    for (std::size_t i = 1; i < pts.size(); ++i) {
        IntVec v(d);
        for (std::size_t j = 0; j < d; ++j) v[j] = pts[i][j] - pts[0][j];
        diffs.push_back(std::move(v));
    }

    // row-style Hermite reduction: basis of the lattice spanned by diffs
    std::vector<IntVec> basis = diffs;
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < d && r < basis.size(); ++c) {
        // gcd-reduce column c below row r
        while (true) {
            std::size_t piv = basis.size();
            for (std::size_t i = r; i < basis.size(); ++i)
                if (basis[i][c] != 0 &&
                    (piv == basis.size() ||
                     boost::multiprecision::abs(basis[i][c]) <
                         boost::multiprecision::abs(basis[piv][c])))
                    piv = i;
            if (piv == basis.size()) break; // column all zero
            std::swap(basis[r], basis[piv]);
            bool done = true;
            for (std::size_t i = r + 1; i < basis.size(); ++i) {
                if (basis[i][c] == 0) continue;
                const BigInt q = basis[i][c] / basis[r][c];
                for (std::size_t j = 0; j < d; ++j) basis[i][j] -= q * basis[r][j];
                if (basis[i][c] != 0) done = false;
            }
            if (done) break;
        }
        bool nonzero = r < basis.size() && basis[r][c] != 0;
        if (nonzero) {
            if (basis[r][c] < 0)
                for (std::size_t j = 0; j < d; ++j) basis[r][j] = -basis[r][j];
            pivots.push_back(c);
            ++r;
        }
    }
    basis.resize(r);

    // express each diff in the basis by back-substitution on pivot columns
    std::vector<IntVec> coords;
    coords.push_back(IntVec(r, 0)); // first point is the origin
    for (const IntVec& v0 : diffs) {
        IntVec v = v0;
        IntVec coeff(r, 0);
        for (std::size_t i = 0; i < r; ++i) {
            const std::size_t c = pivots[i];
            if (v[c] % basis[i][c] != 0)
                throw DegenerateError("point is not in the lattice of the affine hull");
            const BigInt q = v[c] / basis[i][c];
            coeff[i] = q;
            for (std::size_t j = 0; j < d; ++j) v[j] -= q * basis[i][j];
        }
        for (std::size_t j = 0; j < d; ++j)
            if (v[j] != 0) throw DegenerateError("point is outside the affine hull");
        coords.push_back(std::move(coeff));
    }
    return coords;
}

bool same_point_set(const VRep& a, const VRep& b)
{
    if (a.dim != b.dim || a.points.size() != b.points.size()) return false;
    auto pa = a.points;
    auto pb = b.points;
    std::sort(pa.begin(), pa.end());
    std::sort(pb.begin(), pb.end());
    return pa == pb;
}

} // namespace ucpoly
