#pragma once

// Domain types shared by every permpat module. All indices at this boundary
// are 1-based; values of an n-permutation are exactly 1..n.

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace permpat {

using Value = std::int32_t;
using Index = std::size_t;

// ---------------------------------------------------------------------------
// Errors
// ---------------------------------------------------------------------------

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ValidationError : public Error {
public:
    enum class Kind {
        Empty,
        ValueOutOfRange,
        DuplicateValue,
        BlockTooShort,
        BlockOutOfBounds,
        BlockOverlap,
        NotIncreasing,
        VertexOutOfRange,
        SelfLoop,
        DuplicateEdge,
        EdgeCount,
    };

    ValidationError(Kind kind, Index position, const std::string& what)
        : Error(what), kind_(kind), position_(position) {}

    Kind kind() const noexcept { return kind_; }
    /// 1-based position of the offending item, 0 when not applicable.
    Index position() const noexcept { return position_; }

private:
    Kind kind_;
    Index position_;
};

/// An argument is outside the domain where an operation is defined
/// (for example k > l for the reduction).
class DomainError : public Error {
public:
    using Error::Error;
};

class BudgetExceeded : public Error {
public:
    using Error::Error;
};

// ---------------------------------------------------------------------------
// Permutation
// ---------------------------------------------------------------------------

class Permutation;
Permutation validate_permutation(std::vector<Value> values);

/// A bijection onto {1,...,n}, n >= 1, in one-line notation.
class Permutation {
public:
    Index size() const noexcept { return values_.size(); }
    std::span<const Value> values() const noexcept { return values_; }
    /// 1-based access.
    Value at(Index i) const { return values_.at(i - 1); }

    static Permutation identity(Index n);

    friend bool operator==(const Permutation&, const Permutation&) = default;

private:
    explicit Permutation(std::vector<Value> values) : values_(std::move(values)) {}
    friend Permutation validate_permutation(std::vector<Value> values);
    friend class GeneralizedPattern;

    std::vector<Value> values_;
};

// ---------------------------------------------------------------------------
// GeneralizedPattern
// ---------------------------------------------------------------------------

/// Closed interval [first, last] of 1-based pattern positions.
struct Block {
    Index first = 0;
    Index last = 0;

    Index length() const noexcept { return last - first + 1; }
    friend bool operator==(const Block&, const Block&) = default;
};

class GeneralizedPattern;
GeneralizedPattern validate_pattern(std::vector<Value> values, std::vector<Block> blocks);

/// A permutation of 1..k with disjoint adjacency blocks listed left to right.
/// Positions inside one block must be matched onto consecutive text positions.
class GeneralizedPattern {
public:
    Index size() const noexcept { return values_.size(); }
    std::span<const Value> values() const noexcept { return values_; }
    std::span<const Block> blocks() const noexcept { return blocks_; }
    Value at(Index i) const { return values_.at(i - 1); }

    bool is_classical() const noexcept { return blocks_.empty(); }
    /// True iff positions i and i+1 (1-based) lie in a common block.
    bool adjacent_to_right(Index i) const noexcept;

    static GeneralizedPattern classical(const Permutation& p);
    /// Drops the block structure. Every pattern is a permutation of 1..k.
    Permutation as_permutation() const;
    /// Same values with the blocks removed.
    GeneralizedPattern without_blocks() const;

    friend bool operator==(const GeneralizedPattern&, const GeneralizedPattern&) = default;

private:
    GeneralizedPattern(std::vector<Value> values, std::vector<Block> blocks)
        : values_(std::move(values)), blocks_(std::move(blocks)) {}
    friend GeneralizedPattern validate_pattern(std::vector<Value> values,
                                               std::vector<Block> blocks);

    std::vector<Value> values_;
    std::vector<Block> blocks_;
};

// ---------------------------------------------------------------------------
// Embedding
// ---------------------------------------------------------------------------

class Embedding;
Embedding validate_embedding(std::vector<Index> positions);

/// positions[i] is the 1-based text index receiving pattern position i+1.
class Embedding {
public:
    Index size() const noexcept { return positions_.size(); }
    std::span<const Index> positions() const noexcept { return positions_; }
    Index at(Index i) const { return positions_.at(i - 1); }

    friend bool operator==(const Embedding&, const Embedding&) = default;
    friend auto operator<=>(const Embedding&, const Embedding&) = default;

private:
    explicit Embedding(std::vector<Index> positions) : positions_(std::move(positions)) {}
    friend Embedding validate_embedding(std::vector<Index> positions);

    std::vector<Index> positions_;
};

// ---------------------------------------------------------------------------
// Graph
// ---------------------------------------------------------------------------

struct Edge {
    Index u = 0;
    Index v = 0;

    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

class Graph;
Graph validate_graph(Index vertex_count, std::vector<Edge> edges);

/// Simple undirected graph on vertices 1..l. Edges are stored normalized
/// (u < v) and sorted lexicographically.
class Graph {
public:
    Index vertex_count() const noexcept { return vertex_count_; }
    std::span<const Edge> edges() const noexcept { return edges_; }
    bool has_edge(Index u, Index v) const;
    /// Pairs {u,v}, u < v, absent from the edge set, lexicographic.
    std::vector<Edge> non_edges() const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    Graph(Index vertex_count, std::vector<Edge> edges)
        : vertex_count_(vertex_count), edges_(std::move(edges)) {}
    friend Graph validate_graph(Index vertex_count, std::vector<Edge> edges);

    Index vertex_count_;
    std::vector<Edge> edges_;
};

}  // namespace permpat
