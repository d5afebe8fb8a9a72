#include "permpat/core.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace permpat {

namespace {

// Reports the first value that is out of range or repeated.
void check_bijection(std::span<const Value> values, const char* what)
{
    const Index n = values.size();
    if (n == 0)
        throw ValidationError(ValidationError::Kind::Empty, 0, std::string(what) + " is empty");
    if (n > static_cast<Index>(std::numeric_limits<Value>::max()))
        throw ValidationError(ValidationError::Kind::ValueOutOfRange, 0,
                              std::string(what) + " is too long");

    std::vector<bool> seen(n + 1, false);
    for (Index i = 0; i < n; ++i) {
        const Value v = values[i];
        if (v < 1 || static_cast<Index>(v) > n)
            throw ValidationError(ValidationError::Kind::ValueOutOfRange, i + 1,
                                  std::string(what) + ": value " + std::to_string(v) +
                                      " at position " + std::to_string(i + 1) +
                                      " is outside 1.." + std::to_string(n));
        if (seen[v])
            throw ValidationError(ValidationError::Kind::DuplicateValue, i + 1,
                                  std::string(what) + ": duplicate " + std::to_string(v) +
                                      " at position " + std::to_string(i + 1));
        seen[v] = true;
    }
}

}  // namespace

Permutation validate_permutation(std::vector<Value> values)
{
    check_bijection(values, "permutation");
    return Permutation(std::move(values));
}

Permutation Permutation::identity(Index n)
{
    std::vector<Value> v(n);
    std::iota(v.begin(), v.end(), Value{1});
    return validate_permutation(std::move(v));
}

GeneralizedPattern validate_pattern(std::vector<Value> values, std::vector<Block> blocks)
{
    check_bijection(values, "pattern");
    const Index k = values.size();
    Index previous_last = 0;
    for (Index b = 0; b < blocks.size(); ++b) {
        const Block& block = blocks[b];
        const std::string where = "block " + std::to_string(b + 1) + " [" +
                                  std::to_string(block.first) + "," +
                                  std::to_string(block.last) + "]";
        if (block.first < 1 || block.last > k || block.first > block.last)
            throw ValidationError(ValidationError::Kind::BlockOutOfBounds, b + 1,
                                  where + " exceeds pattern bounds 1.." + std::to_string(k));
        if (block.last < block.first + 1)
            throw ValidationError(ValidationError::Kind::BlockTooShort, b + 1,
                                  where + " has length < 2");
        if (block.first <= previous_last)
            throw ValidationError(ValidationError::Kind::BlockOverlap, b + 1,
                                  where + " overlaps or precedes the previous block");
        previous_last = block.last;
    }
    return GeneralizedPattern(std::move(values), std::move(blocks));
}

bool GeneralizedPattern::adjacent_to_right(Index i) const noexcept
{
    for (const Block& b : blocks_)
        if (b.first <= i && i + 1 <= b.last)
            return true;
    return false;
}

GeneralizedPattern GeneralizedPattern::classical(const Permutation& p)
{
    const auto v = p.values();
    return GeneralizedPattern(std::vector<Value>(v.begin(), v.end()), {});
}

Permutation GeneralizedPattern::as_permutation() const
{
    return Permutation(values_);
}

GeneralizedPattern GeneralizedPattern::without_blocks() const
{
    return GeneralizedPattern(values_, {});
}

Embedding validate_embedding(std::vector<Index> positions)
{
    for (Index i = 0; i < positions.size(); ++i) {
        if (positions[i] < 1)
            throw ValidationError(ValidationError::Kind::ValueOutOfRange, i + 1,
                                  "embedding position " + std::to_string(i + 1) + " is < 1");
        if (i > 0 && positions[i] <= positions[i - 1])
            throw ValidationError(ValidationError::Kind::NotIncreasing, i + 1,
                                  "embedding positions are not strictly increasing at " +
                                      std::to_string(i + 1));
    }
    return Embedding(std::move(positions));
}

Graph validate_graph(Index vertex_count, std::vector<Edge> edges)
{
    if (vertex_count < 1)
        throw ValidationError(ValidationError::Kind::Empty, 0, "graph has no vertices");
    for (Index i = 0; i < edges.size(); ++i) {
        Edge& e = edges[i];
        if (e.u < 1 || e.v < 1 || e.u > vertex_count || e.v > vertex_count)
            throw ValidationError(ValidationError::Kind::VertexOutOfRange, i + 1,
                                  "edge " + std::to_string(i + 1) + " {" + std::to_string(e.u) +
                                      "," + std::to_string(e.v) + "} has a vertex outside 1.." +
                                      std::to_string(vertex_count));
        if (e.u == e.v)
            throw ValidationError(ValidationError::Kind::SelfLoop, i + 1,
                                  "edge " + std::to_string(i + 1) + " is a self-loop on " +
                                      std::to_string(e.u));
        if (e.u > e.v)
            std::swap(e.u, e.v);
    }
    std::vector<Edge> sorted = edges;
    std::sort(sorted.begin(), sorted.end());
    auto dup = std::adjacent_find(sorted.begin(), sorted.end());
    if (dup != sorted.end()) {
        const Index pos =
            static_cast<Index>(std::find(edges.rbegin(), edges.rend(), *dup).base() - edges.begin());
        throw ValidationError(ValidationError::Kind::DuplicateEdge, pos,
                              "duplicate edge {" + std::to_string(dup->u) + "," +
                                  std::to_string(dup->v) + "}");
    }
    return Graph(vertex_count, std::move(sorted));
}

bool Graph::has_edge(Index u, Index v) const
{
    if (u > v)
        std::swap(u, v);
    return std::binary_search(edges_.begin(), edges_.end(), Edge{u, v});
}

std::vector<Edge> Graph::non_edges() const
{
    std::vector<Edge> out;
    auto it = edges_.begin();
    for (Index u = 1; u <= vertex_count_; ++u)
        for (Index v = u + 1; v <= vertex_count_; ++v) {
            const Edge e{u, v};
            if (it != edges_.end() && *it == e)
                ++it;
            else
                out.push_back(e);
        }
    return out;
}

}  // namespace permpat
