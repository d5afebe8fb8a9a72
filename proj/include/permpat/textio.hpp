#pragma once

// Text grammars for permutations, generalized patterns and graphs.
//
//   permutation   "5 3 1 4 2" | "5,3,1,4,2" | "53142" (compact, n <= 9)
//   pattern       bracket: "[3 1] 2"   (U+27E8 / U+27E9 accepted for [ ])
//                 dash:    "31-2"      (single-digit values only)
//   graph         "p <l> <m>", optional "k <k>", then m lines "<u> <v>";
//                 '#' starts a comment
//
// Bracket form is canonical on output.

#include "permpat/core.hpp"

#include <optional>
#include <string>
#include <string_view>

namespace permpat {

class ParseError : public Error {
public:
    ParseError(std::size_t offset, const std::string& what)
        : Error("at byte " + std::to_string(offset) + ": " + what), offset_(offset) {}

    /// 0-based byte offset into the parsed input.
    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

enum class PatternSyntax { Auto, Bracket, Dash };

Permutation parse_permutation(std::string_view text);
GeneralizedPattern parse_pattern(std::string_view text, PatternSyntax syntax = PatternSyntax::Auto);

std::string serialize_permutation(const Permutation& p);
std::string serialize_pattern(const GeneralizedPattern& p);
/// Dash form; only defined when every value is a single digit (k <= 9).
std::string serialize_pattern_dash(const GeneralizedPattern& p);

struct GraphInput {
    Graph graph;
    std::optional<Index> k;
};

GraphInput parse_graph(std::string_view text);
std::string serialize_graph(const Graph& g, std::optional<Index> k = std::nullopt);

}  // namespace permpat
