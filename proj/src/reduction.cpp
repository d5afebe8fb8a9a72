#include "permpat/reduction.hpp"

#include "permpat/matcher.hpp"
#include "permpat/textio.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace permpat {

// ---------------------------------------------------------------------------
// Stage 1
// ---------------------------------------------------------------------------

MultisetHalves multiset_pattern(Index k)
{
    std::vector<Value> dot(k);
    std::iota(dot.begin(), dot.end(), Value{1});
    std::vector<std::vector<Value>> bar;
    for (Index i = 1; i <= k; ++i)
        for (Index j = i + 1; j <= k; ++j) {
            const auto vi = static_cast<Value>(i);
            bar.push_back({vi, static_cast<Value>(j), vi});
        }
    return MultisetHalves(MultisetHalves::Side::Pattern, std::move(dot), std::move(bar));
}

MultisetHalves multiset_text(const Graph& g)
{
    std::vector<Value> dot(g.vertex_count());
    std::iota(dot.begin(), dot.end(), Value{1});
    std::vector<std::vector<Value>> bar;
    for (const Edge& e : g.non_edges()) {
        const auto u = static_cast<Value>(e.u);
        bar.push_back({u, static_cast<Value>(e.v), u});
    }
    return MultisetHalves(MultisetHalves::Side::Text, std::move(dot), std::move(bar));
}

MultisetInstance build_multiset_instance(const Graph& g, Index k)
{
    if (k < 1 || k > g.vertex_count())
        throw DomainError("k must satisfy 1 <= k <= l (k=" + std::to_string(k) +
                          ", l=" + std::to_string(g.vertex_count()) + ")");
    return MultisetInstance{multiset_pattern(k), multiset_text(g)};
}

// ---------------------------------------------------------------------------
// Stage 2
// ---------------------------------------------------------------------------

Value RankedHalves::max_value() const noexcept
{
    Value m = 0;
    for (Value v : dot)
        m = std::max(m, v);
    for (const auto& block : bar)
        for (Value v : block)
            m = std::max(m, v);
    return m;
}

Index RankedHalves::element_count() const noexcept
{
    Index c = dot.size();
    for (const auto& block : bar)
        c += block.size();
    return c;
}

namespace {

// Replaces each key by its rank among all keys, preserving the halves' shape.
template <typename Key>
RankedHalves rank_keys(const std::vector<Key>& dot_keys,
                       const std::vector<std::vector<Key>>& bar_keys)
{
    std::vector<Key> all(dot_keys);
    for (const auto& block : bar_keys)
        all.insert(all.end(), block.begin(), block.end());
    std::sort(all.begin(), all.end());

    auto rank = [&](const Key& key) {
        return static_cast<Value>(std::lower_bound(all.begin(), all.end(), key) - all.begin()) + 1;
    };
    RankedHalves out;
    for (const Key& key : dot_keys)
        out.dot.push_back(rank(key));
    for (const auto& block : bar_keys) {
        auto& ranked = out.bar.emplace_back();
        for (const Key& key : block)
            ranked.push_back(rank(key));
    }
    return out;
}

std::map<Value, Index> bar_occurrences(const MultisetHalves& h)
{
    std::map<Value, Index> m;
    for (const auto& block : h.bar())
        for (Value v : block)
            ++m[v];
    return m;
}

}  // namespace

RankedHalves deduplicate(const MultisetHalves& h)
{
    // Key (j, s): s = 0 is j itself, s = 1..m_j the bar occurrences in order,
    // s = m_j + 1 the top of the interval (j + 0.9).
    using Key = std::pair<Value, Index>;
    const auto total = bar_occurrences(h);
    std::map<Value, Index> seen;

    std::vector<Key> dot_keys;
    for (Value j : h.dot()) {
        const auto it = total.find(j);
        const Index m = it == total.end() ? 0 : it->second;
        dot_keys.push_back({j, m + 1});
        dot_keys.push_back({j, 0});
    }
    std::vector<std::vector<Key>> bar_keys;
    for (const auto& block : h.bar()) {
        auto& keys = bar_keys.emplace_back();
        for (Value j : block)
            keys.push_back({j, ++seen[j]});
    }
    return rank_keys(dot_keys, bar_keys);
}

long double canonical_real(Value j, Index t, Index m)
{
    return static_cast<long double>(j) +
           0.9L * static_cast<long double>(t) / static_cast<long double>(m + 1);
}

RankedHalves deduplicate_with_reals(const MultisetHalves& h, const RealScheme& scheme)
{
    const auto total = bar_occurrences(h);
    std::map<Value, Index> seen;

    std::vector<long double> dot_reals;
    for (Value j : h.dot()) {
        dot_reals.push_back(static_cast<long double>(j) + 0.9L);
        dot_reals.push_back(static_cast<long double>(j));
    }
    std::vector<std::vector<long double>> bar_reals;
    for (const auto& block : h.bar()) {
        auto& reals = bar_reals.emplace_back();
        for (Value j : block)
            reals.push_back(scheme(j, ++seen[j], total.at(j)));
    }
    return rank_keys(dot_reals, bar_reals);
}

// ---------------------------------------------------------------------------
// Stage 3
// ---------------------------------------------------------------------------

ReducedInstance attach_separator(const RankedHalves& pattern, const RankedHalves& text)
{
    auto assemble = [](const RankedHalves& h, std::vector<Block>* blocks) {
        const Value top = h.max_value();
        std::vector<Value> values(h.dot);
        const Index separator_start = values.size() + 1;
        values.insert(values.end(), {top + 3, top + 2, top + 1, top + 4});
        if (blocks)
            blocks->push_back(Block{separator_start, separator_start + 3});
        for (const auto& block : h.bar) {
            const Index start = values.size() + 1;
            values.insert(values.end(), block.begin(), block.end());
            if (blocks && block.size() >= 2)
                blocks->push_back(Block{start, values.size()});
        }
        return values;
    };

    std::vector<Block> blocks;
    auto pattern_values = assemble(pattern, &blocks);
    auto text_values = assemble(text, nullptr);
    return ReducedInstance{validate_pattern(std::move(pattern_values), std::move(blocks)),
                           validate_permutation(std::move(text_values))};
}

ReductionTrace reduce(const Graph& g, Index k)
{
    MultisetInstance stage1 = build_multiset_instance(g, k);
    RankedHalves p2 = deduplicate(stage1.pattern);
    RankedHalves t2 = deduplicate(stage1.text);
    ReducedInstance stage3 = attach_separator(p2, t2);
    return ReductionTrace{k, g.vertex_count(), std::move(stage1), std::move(p2), std::move(t2),
                          std::move(stage3)};
}

Index expected_pattern_length(Index k) { return 4 + (3 * k * k + k) / 2; }

Index expected_text_length(Index l, Index non_edges) { return 2 * l + 3 * non_edges + 4; }

Index text_length_bound(Index l) { return 4 + (3 * l * l + l) / 2; }

std::string check_trace(const ReductionTrace& trace, const Graph& g)
{
    const Index k = trace.k;
    const Index l = trace.l;
    const auto& P = trace.stage3.pattern;
    const auto& T = trace.stage3.text;
    const Index non_edges = g.non_edges().size();

    if (P.size() != expected_pattern_length(k))
        return "|P| = " + std::to_string(P.size()) + ", expected 4+(3k^2+k)/2 = " +
               std::to_string(expected_pattern_length(k));
    if (T.size() != expected_text_length(l, non_edges))
        return "|T| = " + std::to_string(T.size()) + ", expected 2l+3(non-edges)+4 = " +
               std::to_string(expected_text_length(l, non_edges));
    if (T.size() > text_length_bound(l))
        return "|T| exceeds 4+(3l^2+l)/2";
    if ((T.size() == text_length_bound(l)) != g.edges().empty())
        return "|T| meets the bound 4+(3l^2+l)/2 iff the graph has no edges";

    const auto blocks = P.blocks();
    const Index edge_blocks = k * (k - 1) / 2;
    if (blocks.size() != 1 + edge_blocks)
        return "pattern has " + std::to_string(blocks.size()) + " blocks, expected " +
               std::to_string(1 + edge_blocks);
    if (blocks[0] != Block{2 * k + 1, 2 * k + 4})
        return "separator block is not at positions 2k+1..2k+4";
    for (Index b = 1; b < blocks.size(); ++b)
        if (blocks[b].length() != 3 || blocks[b].first != 2 * k + 5 + 3 * (b - 1))
            return "edge block " + std::to_string(b) + " is misplaced";

    const auto pk = static_cast<Value>(P.size());
    const Index s = 2 * k + 1;
    if (P.at(s) != pk - 1 || P.at(s + 1) != pk - 2 || P.at(s + 2) != pk - 3 || P.at(s + 3) != pk)
        return "pattern separator values are not (max+3, max+2, max+1, max+4)";
    const auto tn = static_cast<Value>(T.size());
    const Index ts = 2 * l + 1;
    if (T.at(ts) != tn - 1 || T.at(ts + 1) != tn - 2 || T.at(ts + 2) != tn - 3 ||
        T.at(ts + 3) != tn)
        return "text separator values are not (max+3, max+2, max+1, max+4)";
    return {};
}

namespace {

void append_values(std::string& out, const std::vector<Value>& values)
{
    for (Value v : values)
        out += ' ' + std::to_string(v);
}

void append_blocks(std::string& out, const std::vector<std::vector<Value>>& blocks)
{
    for (const auto& block : blocks) {
        out += " [";
        for (Index i = 0; i < block.size(); ++i)
            out += (i ? " " : "") + std::to_string(block[i]);
        out += ']';
    }
}

template <typename Halves>
void append_halves(std::string& out, const char* label, const Halves& h)
{
    out += label;
    append_values(out, h.dot);
    out += " |";
    append_blocks(out, h.bar);
    out += '\n';
}

struct HalvesView {
    const std::vector<Value>& dot;
    const std::vector<std::vector<Value>>& bar;
};

}  // namespace

std::string format_trace(const ReductionTrace& trace)
{
    std::string out = "reduction k " + std::to_string(trace.k) + " l " + std::to_string(trace.l) +
                      "\n";
    out += "[stage1]\n";
    append_halves(out, "pattern",
                  HalvesView{trace.stage1.pattern.dot(), trace.stage1.pattern.bar()});
    append_halves(out, "text", HalvesView{trace.stage1.text.dot(), trace.stage1.text.bar()});
    out += "[stage2]\n";
    append_halves(out, "pattern", trace.stage2_pattern);
    append_halves(out, "text", trace.stage2_text);
    out += "[stage3]\n";
    out += "pattern " + serialize_pattern(trace.stage3.pattern) + "\n";
    out += "text " + serialize_permutation(trace.stage3.text) + "\n";
    out += "sizes " + std::to_string(trace.stage3.pattern.size()) + " " +
           std::to_string(trace.stage3.text.size()) + "\n";
    return out;
}

// ---------------------------------------------------------------------------
// Oracles
// ---------------------------------------------------------------------------

IndependentSetResult independent_set_oracle(const Graph& g, Index k, std::uint64_t budget)
{
    const Index l = g.vertex_count();
    if (k > l)
        return {};
    if (k == 0)
        return {true, {}};
    if (binomial_saturating(l, k) > budget)
        throw BudgetExceeded("independent set oracle needs C(" + std::to_string(l) + "," +
                             std::to_string(k) + ") subsets, budget is " +
                             std::to_string(budget));

    std::vector<Index> subset(k);
    std::iota(subset.begin(), subset.end(), Index{1});
    for (;;) {
        bool independent = true;
        for (Index a = 0; a < k && independent; ++a)
            for (Index b = a + 1; b < k && independent; ++b)
                independent = !g.has_edge(subset[a], subset[b]);
        if (independent)
            return {true, subset};

        Index i = k;
        while (i > 0 && subset[i - 1] == l - k + i)
            --i;
        if (i == 0)
            return {};
        ++subset[i - 1];
        for (Index j = i; j < k; ++j)
            subset[j] = subset[j - 1] + 1;
    }
}

bool simultaneous_multiset_match(const MultisetHalves& pattern, const MultisetHalves& text)
{
    const auto& pdot = pattern.dot();
    const auto& tdot = text.dot();
    const Index k = pdot.size();
    const Index l = tdot.size();
    if (k > l)
        return false;

    // Text bar blocks with their order, for lookup by content.
    std::map<std::vector<Value>, std::vector<Index>> where;
    for (Index b = 0; b < text.bar().size(); ++b)
        where[text.bar()[b]].push_back(b);

    // mu is determined by choosing the text dot positions of the pattern dot.
    std::vector<Index> chosen(k);
    std::iota(chosen.begin(), chosen.end(), Index{0});
    for (;;) {
        std::map<Value, Value> mu;
        bool ok = true;
        for (Index i = 0; i < k && ok; ++i) {
            auto [it, inserted] = mu.emplace(pdot[i], tdot[chosen[i]]);
            ok = inserted || it->second == tdot[chosen[i]];
        }
        // mu must be strictly increasing on the values it maps.
        for (auto it = mu.begin(); ok && it != mu.end() && std::next(it) != mu.end(); ++it)
            ok = it->second < std::next(it)->second;

        // Bar blocks, mapped through mu, as a subsequence of the text bar.
        std::size_t next_free = 0;
        for (const auto& block : pattern.bar()) {
            if (!ok)
                break;
            std::vector<Value> image;
            for (Value v : block) {
                auto it = mu.find(v);
                if (it == mu.end()) {
                    ok = false;
                    break;
                }
                image.push_back(it->second);
            }
            if (!ok)
                break;
            auto hit = where.find(image);
            if (hit == where.end()) {
                ok = false;
                break;
            }
            auto pos = std::lower_bound(hit->second.begin(), hit->second.end(), next_free);
            if (pos == hit->second.end()) {
                ok = false;
                break;
            }
            next_free = *pos + 1;
        }
        if (ok)
            return true;

        Index i = k;
        while (i > 0 && chosen[i - 1] == l - k + i - 1)
            --i;
        if (i == 0)
            return false;
        ++chosen[i - 1];
        for (Index j = i; j < k; ++j)
            chosen[j] = chosen[j - 1] + 1;
    }
}

}  // namespace permpat
