#pragma once

// Seeded generators for permutations with controlled presortedness and for
// Zipf-distributed word sequences.

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "permc/permutation.hpp"

namespace permc::gen {

using rng = std::mt19937_64;

permutation identity(std::size_t n);
permutation reverse(std::size_t n);
permutation uniform(std::size_t n, rng& g);
// At most k ascending runs with Dirichlet(1,..,1) lengths (each >= 1).
permutation k_runs(std::size_t n, std::size_t k, rng& g);
// k sorted blocks of consecutive values, randomly interleaved: at most k
// shuffled upsequences.
permutation k_riffle(std::size_t n, std::size_t k, rng& g);
// k blocks of consecutive values placed in random order: at most k strict
// runs.
permutation strict_mosaic(std::size_t n, std::size_t k, rng& g);

// Lengths summing to n, each >= 1, drawn from a flat Dirichlet.
std::vector<std::size_t> dirichlet_lengths(std::size_t n, std::size_t k, rng& g);

// n word ids with Zipf(s) frequencies over a vocabulary of `vocab` words,
// relabelled so the ids in use are exactly 1..rho in order of first use.
std::vector<std::size_t> zipf_text(std::size_t n, std::size_t vocab, double s, rng& g);

// Builds a named generator: identity, reverse, random, k-runs, k-riffle,
// strict. k is ignored by the first three. Throws std::invalid_argument on
// an unknown name.
permutation by_name(const std::string& name, std::size_t n, std::size_t k, rng& g);

} // namespace permc::gen
