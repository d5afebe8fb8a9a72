#pragma once

// Existential first-order encoding of generalized pattern matching.
//
// The text becomes a structure over positions 1..n with
//   text_less(x, y)  iff  T(x) < T(y)
//   succ(x, y)       iff  x + 1 = y
// and the pattern a formula
//   exists x1 < ... < xk .  AND pos: text_less(xi, xj)
//                           AND neg: not text_less(xi, xj)
//                           AND adj: succ(xi, xi+1)
// The chain x1 < ... < xk is implicit. Nothing here shares code with the
// matcher; the model checker is an independent decider.

#include "permpat/core.hpp"
#include "permpat/textio.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace permpat::fo {

class Structure {
public:
    explicit Structure(const Permutation& t);

    Index domain_size() const noexcept { return text_.size(); }
    bool less(Index x, Index y) const noexcept { return x < y; }
    bool text_less(Index x, Index y) const noexcept
    {
        return text_[x - 1] < text_[y - 1];
    }
    bool succ(Index x, Index y) const noexcept { return x + 1 == y; }

    /// Materialized relations, lexicographic.
    std::vector<std::pair<Index, Index>> text_less_pairs() const;
    std::vector<std::pair<Index, Index>> succ_pairs() const;

    friend bool operator==(const Structure&, const Structure&) = default;

private:
    std::vector<Value> text_;
};

struct Formula {
    Index var_count = 0;
    std::vector<std::pair<Index, Index>> pos_literals;
    std::vector<std::pair<Index, Index>> neg_literals;
    std::vector<Index> adj_literals;

    Index literal_count() const noexcept
    {
        return pos_literals.size() + neg_literals.size() + adj_literals.size();
    }
    friend bool operator==(const Formula&, const Formula&) = default;
};

Structure encode_structure(const Permutation& t);
Formula encode_formula(const GeneralizedPattern& p);

struct CheckResult {
    bool satisfied = false;
    /// Lexicographically least satisfying assignment (x1, ..., xk).
    std::vector<Index> witness;
};

/// Backtracking over x1 < x2 < ... < xk. Requires var_count >= 1.
CheckResult model_check(const Structure& s, const Formula& f);

/// "fo <n> <k>", then "tl x y", "s x y", "pos i j", "neg i j", "adj i"
/// lines, each group in lexicographic order, joined by '\n' with no
/// trailing newline.
std::string export_instance(const Structure& s, const Formula& f);

struct Instance {
    Structure structure;
    Formula formula;
};

/// Inverse of export_instance. Also accepts a trailing newline and CRLF.
Instance parse_instance(std::string_view text);

}  // namespace permpat::fo
