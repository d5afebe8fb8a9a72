#pragma once

// Test-only helpers. Nothing here calls into the matcher engines.

#include "permpat/core.hpp"
#include "permpat/textio.hpp"

#include <vector>

namespace permpat::testing {

inline Permutation perm(std::vector<Value> v) { return validate_permutation(std::move(v)); }

inline GeneralizedPattern pat(const char* text) { return parse_pattern(text); }

inline Embedding emb(std::vector<Index> p) { return validate_embedding(std::move(p)); }

/// v -> (length + 1) - v, blocks kept.
inline Permutation complement(const Permutation& t)
{
    std::vector<Value> v;
    for (Value x : t.values())
        v.push_back(static_cast<Value>(t.size()) + 1 - x);
    return validate_permutation(std::move(v));
}

inline GeneralizedPattern complement(const GeneralizedPattern& p)
{
    std::vector<Value> v;
    for (Value x : p.values())
        v.push_back(static_cast<Value>(p.size()) + 1 - x);
    return validate_pattern(std::move(v), {p.blocks().begin(), p.blocks().end()});
}

/// Hand-rolled triple loop over position triples i<j<l: counts those whose
/// values compare like the 3-pattern and that respect the adjacency
/// requirements given per gap (gap 0 between the first two positions).
inline int count_triples(const Permutation& t, const Value (&p)[3], bool gap0_adjacent,
                         bool gap1_adjacent)
{
    const auto v = t.values();
    int count = 0;
    for (Index a = 0; a < v.size(); ++a)
        for (Index b = a + 1; b < v.size(); ++b)
            for (Index c = b + 1; c < v.size(); ++c) {
                if (gap0_adjacent && b != a + 1)
                    continue;
                if (gap1_adjacent && c != b + 1)
                    continue;
                const Value w[3] = {v[a], v[b], v[c]};
                bool same = true;
                for (int x = 0; x < 3; ++x)
                    for (int y = 0; y < 3; ++y)
                        same = same && ((p[x] < p[y]) == (w[x] < w[y]));
                count += same;
            }
    return count;
}

}  // namespace permpat::testing
