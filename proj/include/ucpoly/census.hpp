#ifndef UCPOLY_CENSUS_HPP
#define UCPOLY_CENSUS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "ucpoly/ehrhart.hpp"
#include "ucpoly/graph.hpp"
#include "ucpoly/numbers.hpp"

namespace ucpoly {

/// Canonical form of an unlabeled graph: the minimal adjacency bitstring over
/// all vertex relabelings. Pairs are ordered by their larger endpoint
/// (colex), so placing one more vertex in the search fixes one contiguous
/// chunk of bits; earlier bits are more significant.
std::uint64_t canonical_code(const Graph& g);

long automorphism_count(const Graph& g);

Graph graph_from_code(int n, std::uint64_t code);

// one code per isomorphism class; n <= 7
std::vector<std::uint64_t> enumerate_unlabeled(int n, const CountOptions& opts = {});
std::vector<std::uint64_t> enumerate_unlabeled_serial(int n, const CountOptions& opts = {});

int perfect_count(int n, const CountOptions& opts = {});

struct CensusRecord {
    std::uint64_t code = 0;
    bool perfect = false;
    std::vector<BigInt> hstar; // of U.P_G; present only when perfect and requested
};

// census with optional h* computation; results are persisted to (and resumed
// from) cache_path when given. One record per line: code-hex, perfect-bit,
// h* decimal CSV.
std::vector<CensusRecord> census_records(int n, bool with_hstar, const CountOptions& opts = {},
                                         const std::string& cache_path = "");

struct SantaloResult {
    std::vector<std::uint64_t> argmax; // complement pairs collapsed to one code
    BigInt best_product = 0;           // Vol(U.P_G) * Vol(U.P_complement)
    bool unique_up_to_complement = false;
};

SantaloResult santalo_experiment(int n, const CountOptions& opts = {},
                                 const std::string& cache_path = "");

} // namespace ucpoly

#endif
