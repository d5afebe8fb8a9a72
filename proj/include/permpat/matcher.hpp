#pragma once

// Matching of generalized patterns into permutations.
//
// A matching of P (length k) into T (length n) is a strictly increasing
// choice of k text positions whose values are order-isomorphic to P, such
// that positions sharing an adjacency block land on consecutive text
// positions. Three entry points share one result type:
//
//   match_bruteforce   enumerates all C(n,k) position tuples; the oracle
//   match_backtracking places blocks as single units, left to right
//   match_dispatch     backtracking, with a longest-increasing-subsequence
//                      fast path for deciding identity patterns
//
// All engines report embeddings in lexicographic order of position tuples,
// so their results compare equal field for field.

#include "permpat/core.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <vector>

namespace permpat {

using BigCount = boost::multiprecision::cpp_int;

enum class MatchMode { Decide, Count, EnumerateAll };

struct MatchRequest {
    const GeneralizedPattern& pattern;
    const Permutation& text;
    MatchMode mode = MatchMode::Decide;
};

struct MatchResult {
    MatchMode mode = MatchMode::Decide;
    bool found = false;
    /// Decide only: the lexicographically least embedding.
    std::optional<Embedding> witness;
    /// Count and EnumerateAll.
    BigCount count = 0;
    /// EnumerateAll only, lexicographic.
    std::vector<Embedding> embeddings;

    friend bool operator==(const MatchResult&, const MatchResult&) = default;
};

inline constexpr std::uint64_t kDefaultBruteForceBudget = 100'000'000;

/// Checks order-isomorphism and block adjacency of a candidate embedding.
/// Returns false (rather than failing) when e has the wrong length or a
/// position outside 1..n.
bool is_valid_embedding(const GeneralizedPattern& p, const Permutation& t, const Embedding& e);

/// Throws BudgetExceeded when C(n,k) exceeds budget.
MatchResult match_bruteforce(const MatchRequest& req,
                             std::uint64_t budget = kDefaultBruteForceBudget);

MatchResult match_backtracking(const MatchRequest& req);

MatchResult match_dispatch(const MatchRequest& req);

/// Length of a longest increasing subsequence, O(n log n).
Index lis_length(const Permutation& t);

/// Lexicographically least strictly increasing subsequence of length k,
/// as text positions; nullopt if none exists.
std::optional<Embedding> least_increasing_embedding(const Permutation& t, Index k);

/// C(n,k), saturating at UINT64_MAX.
std::uint64_t binomial_saturating(std::uint64_t n, std::uint64_t k) noexcept;

}  // namespace permpat
