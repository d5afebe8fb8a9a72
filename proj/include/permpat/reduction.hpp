#pragma once

// Independent Set -> generalized pattern matching, in three stages:
//
//   1. multiset instance   P' = 1..k   | <i j i> for all i<j<=k
//                          T' = 1..l   | i j i  for every non-edge {i,j}
//   2. de-duplication      each value j owns the interval [j, j+0.9]; dot
//                          entries become the pair (j+0.9, j), bar entries
//                          strictly increasing reals inside the interval,
//                          then everything is replaced by its rank
//   3. separator           (max+3, max+2, max+1, max+4) between the halves,
//                          one block in the pattern, plain in the text
//
// (G, k) has an independent set of size k iff P matches into T.

#include "permpat/core.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace permpat {

class MultisetHalves;

/// Stage 1 for the pattern side: dot = 1..k, bar = <i j i> for i < j <= k.
MultisetHalves multiset_pattern(Index k);
/// Stage 1 for the text side: dot = 1..l, bar = <i j i> per non-edge.
MultisetHalves multiset_text(const Graph& g);

/// A vertex-list half and an edge half of integer sequences with repeats.
class MultisetHalves {
public:
    enum class Side { Pattern, Text };

    Side side() const noexcept { return side_; }
    const std::vector<Value>& dot() const noexcept { return dot_; }
    const std::vector<std::vector<Value>>& bar() const noexcept { return bar_; }

    friend bool operator==(const MultisetHalves&, const MultisetHalves&) = default;

private:
    MultisetHalves(Side side, std::vector<Value> dot, std::vector<std::vector<Value>> bar)
        : side_(side), dot_(std::move(dot)), bar_(std::move(bar)) {}
    friend MultisetHalves multiset_pattern(Index k);
    friend MultisetHalves multiset_text(const Graph& g);

    Side side_;
    std::vector<Value> dot_;
    std::vector<std::vector<Value>> bar_;
};

struct MultisetInstance {
    MultisetHalves pattern;
    MultisetHalves text;
};

/// Throws DomainError unless 1 <= k <= l.
MultisetInstance build_multiset_instance(const Graph& g, Index k);

/// Stage 2 output: the halves after rank normalization to 1..N.
struct RankedHalves {
    std::vector<Value> dot;
    std::vector<std::vector<Value>> bar;

    Value max_value() const noexcept;
    Index element_count() const noexcept;
    friend bool operator==(const RankedHalves&, const RankedHalves&) = default;
};

/// Exact de-duplication by integer rank keys; no floating point involved.
RankedHalves deduplicate(const MultisetHalves& h);

/// Real assignment for the t-th (1-based) of m bar occurrences of value j.
/// Must be strictly increasing in t and lie strictly inside (j, j + 0.9).
using RealScheme = std::function<long double(Value j, Index t, Index m)>;

/// j + 0.9 t / (m + 1)
long double canonical_real(Value j, Index t, Index m);

/// De-duplication through explicit reals and a sort; used to audit that the
/// ranked output does not depend on the choice of reals.
RankedHalves deduplicate_with_reals(const MultisetHalves& h, const RealScheme& scheme);

struct ReducedInstance {
    GeneralizedPattern pattern;
    Permutation text;
};

ReducedInstance attach_separator(const RankedHalves& pattern, const RankedHalves& text);

struct ReductionTrace {
    Index k = 0;
    Index l = 0;
    MultisetInstance stage1;
    RankedHalves stage2_pattern;
    RankedHalves stage2_text;
    ReducedInstance stage3;
};

ReductionTrace reduce(const Graph& g, Index k);

/// 4 + (3k^2 + k) / 2
Index expected_pattern_length(Index k);
/// 2l + 3 (non-edges) + 4
Index expected_text_length(Index l, Index non_edges);
/// 4 + (3l^2 + l) / 2
Index text_length_bound(Index l);

/// Empty when every size and shape identity of the trace holds, otherwise
/// a description of the first violated one.
std::string check_trace(const ReductionTrace& trace, const Graph& g);

/// Line-oriented audit dump: one section per stage, values space-separated,
/// blocks bracketed.
std::string format_trace(const ReductionTrace& trace);

struct IndependentSetResult {
    bool found = false;
    std::vector<Index> witness;  // sorted vertices when found
};

inline constexpr std::uint64_t kDefaultIndependentSetBudget = 100'000'000;

/// Exhaustive over all k-subsets; throws BudgetExceeded beyond budget.
IndependentSetResult independent_set_oracle(const Graph& g, Index k,
                                            std::uint64_t budget = kDefaultIndependentSetBudget);

/// Is there a strictly increasing value map mu: dot(pattern) -> dot(text)
/// sending every pattern bar block onto a text bar block, in order?
bool simultaneous_multiset_match(const MultisetHalves& pattern, const MultisetHalves& text);

}  // namespace permpat
