#include "ucpoly/census.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include <omp.h>

#include "ucpoly/errors.hpp"

namespace ucpoly {

namespace {

// chunk k holds the adjacency bits between new vertex k and new vertices
// 0..k-1 (bit for 0 most significant); smaller chunk sequence = smaller code
struct CanonSearch {
    const Graph& g;
    int n;
    std::vector<std::uint32_t> best; // chunks of the smallest complete labeling
    std::vector<std::uint32_t> cur;  // chunks along the current branch
    long ties = 0;                   // labelings matching best (= |Aut|)

    std::uint32_t chunk_for(const std::vector<int>& placed, int v) const
    {
        std::uint32_t c = 0;
        for (std::size_t i = 0; i < placed.size(); ++i)
            c = (c << 1) | std::uint32_t(g.has_edge(placed[i], v));
        return c;
    }

    // -1/0/+1 comparison of cur[0..k) against best[0..k); best may have been
    // lowered by a deeper branch, so this is recomputed at every node
    int prefix_cmp(int k) const
    {
        for (int j = 0; j < k; ++j) {
            if (cur[j] < best[j]) return -1;
            if (cur[j] > best[j]) return 1;
        }
        return 0;
    }

    void run(std::vector<int>& placed, Mask used)
    {
        const int k = int(placed.size());
        if (k == n) {
            const int cmp = prefix_cmp(n);
            if (cmp < 0) {
                best = cur;
                ties = 1;
            } else if (cmp == 0) {
                ++ties;
            }
            return;
        }
        std::vector<std::pair<std::uint32_t, int>> cands;
        for (int v = 0; v < n; ++v)
            if (!test_bit(used, v)) cands.emplace_back(chunk_for(placed, v), v);
        std::sort(cands.begin(), cands.end());
        for (auto [c, v] : cands) {
            const int cmp = prefix_cmp(k);
            if (cmp > 0) return;                     // stale branch, now beaten
            if (cmp == 0 && c > best[k]) return;     // sorted: the rest are worse
            cur[k] = c;
            placed.push_back(v);
            run(placed, used | bit(v));
            placed.pop_back();
        }
    }
};

std::uint64_t pack_chunks(const std::vector<std::uint32_t>& chunks, int n)
{
    std::uint64_t code = 0;
    for (int k = 1; k < n; ++k) {
        code <<= k;
        code |= chunks[k];
    }
    return code;
}

CanonSearch canon_search(const Graph& g)
{
    const int n = g.order();
    if (n > 7) throw SizeLimitError("canonical codes limited to n <= 7");
    CanonSearch search{g,
                       n,
                       std::vector<std::uint32_t>(n, ~std::uint32_t(0)),
                       std::vector<std::uint32_t>(n, 0),
                       0};
    std::vector<int> placed;
    search.run(placed, 0);
    return search;
}

} // namespace

std::uint64_t canonical_code(const Graph& g)
{
    if (g.order() == 1) return 0;
    return pack_chunks(canon_search(g).best, g.order());
}

long automorphism_count(const Graph& g)
{
    if (g.order() == 1) return 1;
    return canon_search(g).ties;
}

Graph graph_from_code(int n, std::uint64_t code)
{
    Graph g(n);
    int pos = n * (n - 1) / 2;
    for (int k = 1; k < n; ++k)
        for (int i = 0; i < k; ++i) {
            --pos;
            if ((code >> pos) & 1) g.add_edge(i, k);
        }
    return g;
}

namespace {

Graph graph_from_edge_mask(int n, std::uint64_t mask)
{
    Graph g(n);
    int idx = 0;
    for (int k = 1; k < n; ++k)
        for (int i = 0; i < k; ++i, ++idx)
            if ((mask >> idx) & 1) g.add_edge(i, k);
    return g;
}

std::vector<std::uint64_t> enumerate_impl(int n, int threads)
{
    if (n < 1 || n > 7) throw SizeLimitError("unlabeled enumeration limited to n <= 7");
    const int pairs = n * (n - 1) / 2;
    const std::uint64_t total = std::uint64_t(1) << pairs;

    std::vector<std::uint64_t> codes(total);
    if (threads == 1) {
        for (std::uint64_t m = 0; m < total; ++m)
            codes[m] = canonical_code(graph_from_edge_mask(n, m));
    } else {
        const int nt = threads > 0 ? threads : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 1024) num_threads(nt)
        for (std::uint64_t m = 0; m < total; ++m)
            codes[m] = canonical_code(graph_from_edge_mask(n, m));
    }
    std::sort(codes.begin(), codes.end());
    codes.erase(std::unique(codes.begin(), codes.end()), codes.end());
    return codes;
}

} // namespace

std::vector<std::uint64_t> enumerate_unlabeled(int n, const CountOptions& opts)
{
    return enumerate_impl(n, opts.threads);
}

std::vector<std::uint64_t> enumerate_unlabeled_serial(int n, const CountOptions&)
{
    return enumerate_impl(n, 1);
}

int perfect_count(int n, const CountOptions& opts)
{
    const auto codes = enumerate_unlabeled(n, opts);
    int count = 0;
    for (std::uint64_t code : codes)
        if (is_perfect(graph_from_code(n, code))) ++count;
    return count;
}

namespace {

std::string code_hex(std::uint64_t code)
{
    std::ostringstream out;
    out << std::hex << code;
    return out.str();
}

std::map<std::uint64_t, CensusRecord> load_cache(const std::string& path)
{
    std::map<std::uint64_t, CensusRecord> cache;
    std::ifstream in(path);
    if (!in) return cache;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream row(line);
        std::string hex, hstar_csv;
        int perfect_bit = 0;
        if (!(row >> hex >> perfect_bit)) continue;
        CensusRecord rec;
        rec.code = std::stoull(hex, nullptr, 16);
        rec.perfect = perfect_bit != 0;
        if (row >> hstar_csv) {
            std::istringstream cells(hstar_csv);
            std::string cell;
            while (std::getline(cells, cell, ',')) rec.hstar.push_back(bigint_from_decimal(cell));
        }
        cache[rec.code] = std::move(rec);
    }
    return cache;
}

void append_record(std::ofstream& out, const CensusRecord& rec)
{
    out << code_hex(rec.code) << ' ' << (rec.perfect ? 1 : 0);
    if (!rec.hstar.empty()) {
        out << ' ';
        for (std::size_t i = 0; i < rec.hstar.size(); ++i) {
            if (i) out << ',';
            out << to_decimal(rec.hstar[i]);
        }
    }
    out << '\n';
}

} // namespace

std::vector<CensusRecord> census_records(int n, bool with_hstar, const CountOptions& opts,
                                         const std::string& cache_path)
{
    const auto codes = enumerate_unlabeled(n, opts);
    std::map<std::uint64_t, CensusRecord> cache;
    if (!cache_path.empty()) cache = load_cache(cache_path);

    std::vector<CensusRecord> records(codes.size());
    std::vector<char> fresh(codes.size(), 0);

    const int nt = opts.threads > 0 ? opts.threads : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 1) num_threads(nt)
    for (std::size_t i = 0; i < codes.size(); ++i) {
        const auto it = cache.find(codes[i]);
        if (it != cache.end() && (!with_hstar || !it->second.perfect || !it->second.hstar.empty())) {
            records[i] = it->second;
            continue;
        }
        CensusRecord rec;
        rec.code = codes[i];
        const Graph g = graph_from_code(n, codes[i]);
        rec.perfect = is_perfect(g);
        if (rec.perfect && with_hstar) rec.hstar = h_star_unconditional(g, opts).entries;
        records[i] = std::move(rec);
        fresh[i] = 1;
    }

    if (!cache_path.empty()) {
        // single collector appends in deterministic (sorted-code) order
        std::ofstream out(cache_path, std::ios::app);
        for (std::size_t i = 0; i < codes.size(); ++i)
            if (fresh[i]) append_record(out, records[i]);
    }
    return records;
}

SantaloResult santalo_experiment(int n, const CountOptions& opts, const std::string& cache_path)
{
    if (n < 1 || n > 6) throw SizeLimitError("Santalo experiment limited to n <= 6");
    const auto records = census_records(n, true, opts, cache_path);
    std::map<std::uint64_t, BigInt> volume;
    for (const auto& rec : records) {
        if (!rec.perfect) continue;
        BigInt vol = 0;
        for (const BigInt& e : rec.hstar) vol += e;
        volume[rec.code] = vol;
    }

    SantaloResult out;
    std::vector<std::uint64_t> argmax_all;
    for (const auto& [code, vol] : volume) {
        const std::uint64_t cc = canonical_code(graph_from_code(n, code).complement());
        const auto it = volume.find(cc);
        if (it == volume.end())
            throw Error("complement of a perfect class must be perfect");
        const BigInt product = vol * it->second;
        if (product > out.best_product) {
            out.best_product = product;
            argmax_all.clear();
        }
        if (product == out.best_product) argmax_all.push_back(code);
    }
    // collapse complement pairs: keep the smaller code of {G, complement G}
    for (std::uint64_t code : argmax_all) {
        const std::uint64_t cc = canonical_code(graph_from_code(n, code).complement());
        if (std::min(code, cc) == code) out.argmax.push_back(code);
        else if (std::find(argmax_all.begin(), argmax_all.end(), cc) == argmax_all.end())
            out.argmax.push_back(code); // complement not among maximizers
    }
    std::sort(out.argmax.begin(), out.argmax.end());
    out.argmax.erase(std::unique(out.argmax.begin(), out.argmax.end()), out.argmax.end());
    out.unique_up_to_complement = out.argmax.size() == 1;
    return out;
}

} // namespace ucpoly
