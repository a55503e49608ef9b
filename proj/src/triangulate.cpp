#include "ucpoly/triangulate.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "ucpoly/bits.hpp"
#include "ucpoly/errors.hpp"

namespace ucpoly {

std::vector<int> lex_pull_order(const std::vector<IntVec>& vertices)
{
    std::vector<int> order(vertices.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = int(i);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return vertices[a] < vertices[b]; });
    return order;
}

namespace {

struct Puller {
    const std::vector<IntVec>& verts;
    const HRep& h;
    const std::vector<int>& rank; // rank[v] = position of v in the pull order
    std::map<Mask, std::vector<Mask>> memo; // face (vertex mask) -> simplices

    int first_vertex(Mask face) const
    {
        int best = -1;
        for (Mask m = face; m;) {
            const int v = lowest_bit(m);
            m &= m - 1;
            if (best < 0 || rank[v] < rank[best]) best = v;
        }
        return best;
    }

    int affine_rank(Mask face) const
    {
        std::vector<RatVec> rows;
        const int v0 = lowest_bit(face);
        for (Mask m = face & (face - 1); m;) {
            const int v = lowest_bit(m);
            m &= m - 1;
            RatVec diff(verts[v].size());
            for (std::size_t j = 0; j < diff.size(); ++j)
                diff[j] = BigRat(verts[v][j] - verts[v0][j]);
            rows.push_back(std::move(diff));
        }
        return rows.empty() ? 0 : matrix_rank(std::move(rows));
    }

    // facets of the face: inclusion-maximal proper tight subsets over the rows
    std::vector<Mask> face_facets(Mask face) const
    {
        std::vector<Mask> tight;
        for (const HRow& r : h.rows) {
            Mask w = 0;
            for (Mask m = face; m;) {
                const int v = lowest_bit(m);
                m &= m - 1;
                if (dot(r.normal, verts[v]) == r.rhs) w |= bit(v);
            }
            if (w && w != face) tight.push_back(w);
        }
        std::sort(tight.begin(), tight.end());
        tight.erase(std::unique(tight.begin(), tight.end()), tight.end());
        std::vector<Mask> maximal;
        for (Mask w : tight) {
            bool is_max = true;
            for (Mask other : tight)
                if (other != w && (w & other) == w) is_max = false;
            if (is_max) maximal.push_back(w);
        }
        return maximal;
    }

    const std::vector<Mask>& pull(Mask face)
    {
        auto it = memo.find(face);
        if (it != memo.end()) return it->second;

        std::vector<Mask> result;
        if (popcount(face) == affine_rank(face) + 1) {
            result.push_back(face); // the face is itself a simplex
        } else {
            const int v = first_vertex(face);
            for (Mask facet : face_facets(face)) {
                if (test_bit(facet, v)) continue;
                for (Mask s : pull(facet)) result.push_back(s | bit(v));
            }
            std::sort(result.begin(), result.end());
            result.erase(std::unique(result.begin(), result.end()), result.end());
        }
        return memo.emplace(face, std::move(result)).first->second;
    }
};

} // namespace

Triangulation pulling_triangulation(const VRep& v, const HRep& h)
{
    std::vector<IntVec> verts;
    for (const RatVec& p : v.points) verts.push_back(to_integer(p));
    return pulling_triangulation(v, h, lex_pull_order(verts));
}

Triangulation pulling_triangulation(const VRep& v, const HRep& h, const std::vector<int>& order)
{
    if (v.points.size() > 64) throw SizeLimitError("pulling limited to 64 vertices");
    if (order.size() != v.points.size())
        throw SizeLimitError("pull order must be a permutation of the vertices");

    Triangulation t;
    t.dim = v.dim;
    for (const RatVec& p : v.points) t.vertex_table.push_back(to_integer(p));

    std::vector<int> rank(v.points.size());
    for (std::size_t i = 0; i < order.size(); ++i) rank[order[i]] = int(i);

    Puller puller{t.vertex_table, h, rank, {}};
    const Mask everything = v.points.size() == 64 ? ~Mask(0) : (Mask(1) << v.points.size()) - 1;
    for (Mask s : puller.pull(everything)) {
        Simplex simplex;
        for (int id : bits_of(s)) simplex.vertex_ids.push_back(id);
        t.simplices.push_back(std::move(simplex));
    }
    std::sort(t.simplices.begin(), t.simplices.end(),
              [](const Simplex& a, const Simplex& b) { return a.vertex_ids < b.vertex_ids; });
    return t;
}

bool is_unimodular(const Triangulation& t)
{
    for (const Simplex& s : t.simplices) {
        if (s.vertex_ids.size() != std::size_t(t.dim) + 1) return false;
        std::vector<IntVec> pts;
        for (int id : s.vertex_ids) pts.push_back(t.vertex_table[id]);
        if (simplex_normalized_volume(pts) != 1) return false;
    }
    return true;
}

Triangulation lift_unconditional(const Triangulation& t)
{
    Triangulation out;
    out.dim = t.dim;
    std::map<IntVec, int> vertex_id;
    const auto intern = [&](const IntVec& p) {
        auto it = vertex_id.find(p);
        if (it != vertex_id.end()) return it->second;
        const int id = int(out.vertex_table.size());
        out.vertex_table.push_back(p);
        vertex_id.emplace(p, id);
        return id;
    };

    std::set<std::vector<int>> seen;
    for (const Simplex& s : t.simplices) {
        // union support: sign flips outside it fix the simplex pointwise
        Mask support = 0;
        for (int id : s.vertex_ids)
            for (int j = 0; j < t.dim; ++j)
                if (t.vertex_table[id][j] != 0) support |= bit(j);
        for_each_subset(support, [&](Mask neg) {
            std::vector<int> ids;
            for (int id : s.vertex_ids) {
                IntVec p = t.vertex_table[id];
                for (int j : bits_of(neg)) p[j] = -p[j];
                ids.push_back(intern(p));
            }
            std::sort(ids.begin(), ids.end());
            seen.insert(std::move(ids));
        });
    }
    for (const auto& ids : seen) out.simplices.push_back(Simplex{ids});

    // renumber vertices into coordinate-lexicographic order for stable output
    std::vector<int> perm(out.vertex_table.size());
    for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = int(i);
    std::sort(perm.begin(), perm.end(), [&](int a, int b) {
        return out.vertex_table[a] < out.vertex_table[b];
    });
    std::vector<int> where(perm.size());
    for (std::size_t i = 0; i < perm.size(); ++i) where[perm[i]] = int(i);
    std::vector<IntVec> table(out.vertex_table.size());
    for (std::size_t i = 0; i < perm.size(); ++i) table[i] = out.vertex_table[perm[i]];
    out.vertex_table = std::move(table);
    for (Simplex& s : out.simplices) {
        for (int& id : s.vertex_ids) id = where[id];
        std::sort(s.vertex_ids.begin(), s.vertex_ids.end());
    }
    std::sort(out.simplices.begin(), out.simplices.end(),
              [](const Simplex& a, const Simplex& b) { return a.vertex_ids < b.vertex_ids; });
    return out;
}

namespace {

// dense bitset rows for skeleton graphs that may exceed 64 vertices
struct DenseGraph {
    int n;
    std::vector<std::uint64_t> rows; // n * words per row
    int words;

    explicit DenseGraph(int n_) : n(n_), words((n_ + 63) / 64) { rows.assign(std::size_t(n) * words, 0); }
    void add(int u, int v)
    {
        rows[std::size_t(u) * words + v / 64] |= std::uint64_t(1) << (v % 64);
        rows[std::size_t(v) * words + u / 64] |= std::uint64_t(1) << (u % 64);
    }
    bool has(int u, int v) const
    {
        return (rows[std::size_t(u) * words + v / 64] >> (v % 64)) & 1;
    }
};

void max_cliques_dense(const DenseGraph& g, std::vector<int>& r, std::vector<char>& p_in,
                       std::vector<char>& x_in, const std::function<void(const std::vector<int>&)>& emit)
{
    int pcount = 0, xcount = 0;
    for (int v = 0; v < g.n; ++v) {
        pcount += p_in[v];
        xcount += x_in[v];
    }
    if (pcount == 0 && xcount == 0) {
        emit(r);
        return;
    }
    // pivot: max degree into P
    int pivot = -1, best = -1;
    for (int v = 0; v < g.n; ++v) {
        if (!p_in[v] && !x_in[v]) continue;
        int deg = 0;
        for (int u = 0; u < g.n; ++u) deg += p_in[u] && g.has(v, u);
        if (deg > best) {
            best = deg;
            pivot = v;
        }
    }
    for (int v = 0; v < g.n; ++v) {
        if (!p_in[v] || g.has(pivot, v)) continue;
        std::vector<char> p2(g.n), x2(g.n);
        for (int u = 0; u < g.n; ++u) {
            p2[u] = p_in[u] && g.has(v, u);
            x2[u] = x_in[u] && g.has(v, u);
        }
        r.push_back(v);
        max_cliques_dense(g, r, p2, x2, emit);
        r.pop_back();
        p_in[v] = 0;
        x_in[v] = 1;
    }
}

} // namespace

bool is_flag(const Triangulation& t)
{
    const int n = int(t.vertex_table.size());
    DenseGraph skeleton(n);
    std::set<std::vector<int>> faces;
    for (const Simplex& s : t.simplices) {
        faces.insert(s.vertex_ids);
        for (std::size_t i = 0; i < s.vertex_ids.size(); ++i)
            for (std::size_t j = i + 1; j < s.vertex_ids.size(); ++j)
                skeleton.add(s.vertex_ids[i], s.vertex_ids[j]);
    }
    const auto spans_face = [&](const std::vector<int>& clique) {
        for (const Simplex& s : t.simplices)
            if (std::includes(s.vertex_ids.begin(), s.vertex_ids.end(), clique.begin(),
                              clique.end()))
                return true;
        return false;
    };
    bool flag = true;
    std::vector<int> r;
    std::vector<char> p(n, 1), x(n, 0);
    max_cliques_dense(skeleton, r, p, x, [&](const std::vector<int>& clique) {
        std::vector<int> sorted = clique;
        std::sort(sorted.begin(), sorted.end());
        if (!spans_face(sorted)) flag = false;
    });
    return flag;
}

namespace {

// exact membership in the convex hull of affinely independent points: solve
// for barycentric coordinates and require them nonnegative
bool in_simplex_hull(const RatVec& p, const std::vector<IntVec>& verts)
{
    if (verts.empty()) return false;
    const std::size_t d = verts[0].size();
    const std::size_t k = verts.size();
    // rows: d coordinate equations plus the affine one
    std::vector<RatVec> m(d + 1, RatVec(k + 1, BigRat(0)));
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < k; ++j) m[i][j] = BigRat(verts[j][i]);
        m[i][k] = p[i];
    }
    for (std::size_t j = 0; j < k; ++j) m[d][j] = 1;
    m[d][k] = 1;

    // Gaussian elimination to reduced row echelon
    std::size_t r = 0;
    std::vector<std::size_t> pivot_col;
    for (std::size_t c = 0; c < k && r < m.size(); ++c) {
        std::size_t piv = r;
        while (piv < m.size() && m[piv][c] == 0) ++piv;
        if (piv == m.size()) continue;
        std::swap(m[r], m[piv]);
        const BigRat lead = m[r][c];
        for (auto& x : m[r]) x /= lead;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == r || m[i][c] == 0) continue;
            const BigRat f = m[i][c];
            for (std::size_t j = 0; j <= k; ++j) m[i][j] -= f * m[r][j];
        }
        pivot_col.push_back(c);
        ++r;
    }
    for (std::size_t i = r; i < m.size(); ++i)
        if (m[i][k] != 0) return false; // inconsistent: p outside the affine hull
    // affinely independent vertices make the solution unique
    for (std::size_t i = 0; i < r; ++i)
        if (m[i][k] < 0) return false;
    return true;
}

} // namespace

bool intersections_are_faces(const Triangulation& t)
{
    for (std::size_t a = 0; a < t.simplices.size(); ++a) {
        VRep av;
        av.dim = t.dim;
        for (int id : t.simplices[a].vertex_ids)
            av.points.push_back(to_rational(t.vertex_table[id]));
        const HRep ah = dual_description(av);
        for (std::size_t b = a + 1; b < t.simplices.size(); ++b) {
            const auto& A = t.simplices[a].vertex_ids;
            const auto& B = t.simplices[b].vertex_ids;
            std::vector<int> shared;
            std::set_intersection(A.begin(), A.end(), B.begin(), B.end(),
                                  std::back_inserter(shared));
            std::vector<IntVec> shared_pts;
            for (int id : shared) shared_pts.push_back(t.vertex_table[id]);

            VRep bv;
            bv.dim = t.dim;
            for (int id : B) bv.points.push_back(to_rational(t.vertex_table[id]));
            HRep cut = dual_description(bv);
            for (const HRow& row : ah.rows) cut.rows.push_back(row);

            // conv(A) cap conv(B) always contains conv(shared); equality holds
            // iff every vertex of the intersection lies in conv(shared)
            for (const RatVec& p : vertex_enumeration(cut).points) {
                if (shared.empty()) return false; // nonempty overlap, no shared vertex
                if (!in_simplex_hull(p, shared_pts)) return false;
            }
        }
    }
    return true;
}

std::vector<std::pair<BigRat, BigRat>> lift_heights(
    const Triangulation& lifted, const std::function<BigRat(const IntVec&)>& base_heights)
{
    std::vector<std::pair<BigRat, BigRat>> out;
    out.reserve(lifted.vertex_table.size());
    for (const IntVec& v : lifted.vertex_table) {
        BigRat l1 = 0;
        IntVec abs(v.size());
        for (std::size_t j = 0; j < v.size(); ++j) {
            abs[j] = v[j] < 0 ? BigInt(-v[j]) : v[j];
            l1 += BigRat(abs[j]);
        }
        out.emplace_back(l1, base_heights(abs));
    }
    return out;
}

std::function<BigRat(const IntVec&)> pulling_heights(const Triangulation& base)
{
    // rapidly decreasing along the pull order certifies a pulling
    // triangulation; vertices are table-ordered, matching lex_pull_order
    const auto order = lex_pull_order(base.vertex_table);
    auto table = std::make_shared<std::map<IntVec, BigRat>>();
    BigRat h = -1;
    for (int id : order) {
        (*table)[base.vertex_table[id]] = h;
        h *= 4;
    }
    return [table](const IntVec& v) {
        const auto it = table->find(v);
        return it == table->end() ? BigRat(0) : it->second;
    };
}

} // namespace ucpoly
