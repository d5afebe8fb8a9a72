#pragma once

// Property suites cross-checking the engines, the reduction and the
// first-order decider, plus the instance generators they run on.

#include "permpat/core.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace permpat::verify {

// ---------------------------------------------------------------------------
// Generators
// ---------------------------------------------------------------------------

using Rng = std::mt19937_64;

/// All n! permutations of 1..n in lexicographic order.
std::vector<Permutation> all_permutations(Index n);

/// All 2^(k-1) ways to cut 1..k into consecutive runs; runs of length >= 2
/// become blocks. The first entry is the classical (block-free) one.
std::vector<std::vector<Block>> all_block_configurations(Index k);

/// Every generalized pattern of length k: k! values x 2^(k-1) block layouts.
std::vector<GeneralizedPattern> all_patterns(Index k);

Permutation random_permutation(Index n, Rng& rng);
std::vector<Block> random_blocks(Index k, Rng& rng);
GeneralizedPattern random_pattern(Index k, Rng& rng);

/// Graph on 1..l whose edges are the set bits of mask over the pairs
/// (1,2), (1,3), ..., (l-1,l) in lexicographic order.
Graph graph_from_mask(Index l, std::uint64_t mask);
Graph random_graph(Index l, double edge_probability, Rng& rng);

// ---------------------------------------------------------------------------
// Suites
// ---------------------------------------------------------------------------

enum class Suite { Engines, Reduction, Fo };

struct Options {
    Index max_n = 6;
    Index max_k = 4;
    Index max_l = 6;
    Index samples = 500;
    std::uint64_t seed = 1;
};

/// Empty when the bounds are usable, otherwise the reason they are not.
std::string check_options(const Options& opts);

struct Report {
    std::string suite;
    bool passed = true;
    std::uint64_t instances = 0;
    std::string summary;
    /// First failing instance, smallest first by construction.
    std::string counterexample;
};

/// backtracking == bruteforce in all three modes, every embedding valid.
Report run_engines(const Options& opts);
/// Independent set oracle, multiset matching, matcher on the reduced
/// instance, separator uniqueness and trace identities all agree.
Report run_reduction(const Options& opts);
/// model_check == matcher decision (and lexicographically least witness).
Report run_fo(const Options& opts);

Report run(Suite suite, const Options& opts);

}  // namespace permpat::verify
