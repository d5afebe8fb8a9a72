#include "permpat/verify.hpp"

#include "permpat/folog.hpp"
#include "permpat/matcher.hpp"
#include "permpat/reduction.hpp"
#include "permpat/textio.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace permpat::verify {

std::vector<Permutation> all_permutations(Index n)
{
    std::vector<Value> v(n);
    std::iota(v.begin(), v.end(), Value{1});
    std::vector<Permutation> out;
    do {
        out.push_back(validate_permutation(v));
    } while (std::next_permutation(v.begin(), v.end()));
    return out;
}

std::vector<std::vector<Block>> all_block_configurations(Index k)
{
    std::vector<std::vector<Block>> out;
    if (k == 0)
        return out;
    // Bit i of cuts set: a run boundary between positions i+1 and i+2.
    const std::uint64_t layouts = std::uint64_t{1} << (k - 1);
    for (std::uint64_t m = 0; m < layouts; ++m) {
        const std::uint64_t cuts = (layouts - 1) ^ m;  // m = 0 is all cuts: classical
        std::vector<Block> blocks;
        Index start = 1;
        for (Index i = 1; i <= k; ++i) {
            const bool boundary = i == k || ((cuts >> (i - 1)) & 1);
            if (boundary) {
                if (i > start)
                    blocks.push_back(Block{start, i});
                start = i + 1;
            }
        }
        out.push_back(std::move(blocks));
    }
    return out;
}

std::vector<GeneralizedPattern> all_patterns(Index k)
{
    std::vector<GeneralizedPattern> out;
    const auto layouts = all_block_configurations(k);
    for (const Permutation& p : all_permutations(k)) {
        const auto v = p.values();
        for (const auto& blocks : layouts)
            out.push_back(validate_pattern({v.begin(), v.end()}, blocks));
    }
    return out;
}

Permutation random_permutation(Index n, Rng& rng)
{
    std::vector<Value> v(n);
    std::iota(v.begin(), v.end(), Value{1});
    std::shuffle(v.begin(), v.end(), rng);
    return validate_permutation(std::move(v));
}

std::vector<Block> random_blocks(Index k, Rng& rng)
{
    std::bernoulli_distribution cut(0.5);
    std::vector<Block> blocks;
    Index start = 1;
    for (Index i = 1; i <= k; ++i) {
        if (i == k || cut(rng)) {
            if (i > start)
                blocks.push_back(Block{start, i});
            start = i + 1;
        }
    }
    return blocks;
}

GeneralizedPattern random_pattern(Index k, Rng& rng)
{
    const Permutation p = random_permutation(k, rng);
    const auto v = p.values();
    return validate_pattern({v.begin(), v.end()}, random_blocks(k, rng));
}

Graph graph_from_mask(Index l, std::uint64_t mask)
{
    std::vector<Edge> edges;
    Index bit = 0;
    for (Index u = 1; u <= l; ++u)
        for (Index v = u + 1; v <= l; ++v, ++bit)
            if ((mask >> bit) & 1)
                edges.push_back(Edge{u, v});
    return validate_graph(l, std::move(edges));
}

Graph random_graph(Index l, double edge_probability, Rng& rng)
{
    std::bernoulli_distribution coin(edge_probability);
    std::vector<Edge> edges;
    for (Index u = 1; u <= l; ++u)
        for (Index v = u + 1; v <= l; ++v)
            if (coin(rng))
                edges.push_back(Edge{u, v});
    return validate_graph(l, std::move(edges));
}

std::string check_options(const Options& opts)
{
    if (opts.max_n < 1 || opts.max_k < 1 || opts.max_l < 1)
        return "bounds must be at least 1";
    if (opts.max_n > 9)
        return "--max-n above 9 makes the exhaustive text enumeration infeasible";
    if (opts.max_k > 8)
        return "--max-k above 8 makes the exhaustive pattern enumeration infeasible";
    if (opts.max_l > 12)
        return "--max-l above 12 is outside the reduction suite's range";
    return {};
}

namespace {

std::string describe(const GeneralizedPattern& p, const Permutation& t)
{
    return "pattern: " + serialize_pattern(p) + "\ntext: " + serialize_permutation(t);
}

std::string describe(const MatchResult& r)
{
    std::ostringstream os;
    os << "found=" << r.found << " count=" << r.count;
    if (r.witness) {
        os << " witness=";
        for (Index x : r.witness->positions())
            os << x << ' ';
    }
    os << " embeddings=" << r.embeddings.size();
    return os.str();
}

std::string check_engine_pair(const GeneralizedPattern& p, const Permutation& t)
{
    for (MatchMode mode : {MatchMode::Decide, MatchMode::Count, MatchMode::EnumerateAll}) {
        const MatchRequest req{p, t, mode};
        const MatchResult brute = match_bruteforce(req);
        const MatchResult back = match_backtracking(req);
        if (!(brute == back))
            return describe(p, t) + "\nbruteforce:   " + describe(brute) +
                   "\nbacktracking: " + describe(back);
        for (const Embedding& e : back.embeddings)
            if (!is_valid_embedding(p, t, e))
                return describe(p, t) + "\ninvalid embedding returned";
        if (back.witness && !is_valid_embedding(p, t, *back.witness))
            return describe(p, t) + "\ninvalid witness returned";
    }
    return {};
}

std::string check_fo_pair(const GeneralizedPattern& p, const Permutation& t)
{
    const auto fo = fo::model_check(fo::encode_structure(t), fo::encode_formula(p));
    const MatchResult m = match_dispatch({p, t, MatchMode::Decide});
    if (fo.satisfied != m.found)
        return describe(p, t) + "\nmodel_check=" + std::to_string(fo.satisfied) +
               " matcher=" + std::to_string(m.found);
    if (fo.satisfied) {
        const Embedding e = validate_embedding(fo.witness);
        if (!is_valid_embedding(p, t, e))
            return describe(p, t) + "\nmodel_check witness is not a valid embedding";
        if (!(e == *m.witness))
            return describe(p, t) + "\nwitnesses differ";
    }
    return {};
}

template <typename Check>
Report run_pairs(const char* name, const Options& opts, Index random_max_k, Index random_max_n,
                 Check check)
{
    Report r;
    r.suite = name;
    for (Index n = 1; n <= opts.max_n; ++n) {
        const auto texts = all_permutations(n);
        for (Index k = 1; k <= opts.max_k; ++k)
            for (const auto& p : all_patterns(k))
                for (const auto& t : texts) {
                    ++r.instances;
                    if (auto why = check(p, t); !why.empty()) {
                        r.passed = false;
                        r.counterexample = why;
                        return r;
                    }
                }
    }
    Rng rng(opts.seed);
    for (Index s = 0; s < opts.samples; ++s) {
        const Index k = std::uniform_int_distribution<Index>(1, random_max_k)(rng);
        const Index n = std::uniform_int_distribution<Index>(1, random_max_n)(rng);
        const auto p = random_pattern(k, rng);
        const auto t = random_permutation(n, rng);
        ++r.instances;
        if (auto why = check(p, t); !why.empty()) {
            r.passed = false;
            r.counterexample = why;
            return r;
        }
    }
    return r;
}

}  // namespace

Report run_engines(const Options& opts)
{
    Report r = run_pairs("engines", opts, opts.max_k + 1, 2 * opts.max_n, check_engine_pair);
    r.summary = "backtracking == bruteforce (decide, count, enumerate) on " +
                std::to_string(r.instances) + " instances";
    return r;
}

Report run_fo(const Options& opts)
{
    Report r = run_pairs("fo", opts, opts.max_k + 1, 2 * opts.max_n, check_fo_pair);
    r.summary = "model_check == matcher on " + std::to_string(r.instances) + " instances";
    return r;
}

Report run_reduction(const Options& opts)
{
    Report r;
    r.suite = "reduction";
    const auto separator = validate_pattern({3, 2, 1, 4}, {Block{1, 4}});
    Rng rng(opts.seed);

    auto check = [&](const Graph& g, Index k) -> std::string {
        const ReductionTrace trace = reduce(g, k);
        const auto& P = trace.stage3.pattern;
        const auto& T = trace.stage3.text;
        auto where = [&] { return "graph:\n" + serialize_graph(g, k); };

        if (auto why = check_trace(trace, g); !why.empty())
            return where() + why;
        const bool independent = independent_set_oracle(g, k).found;
        const bool multiset = simultaneous_multiset_match(trace.stage1.pattern, trace.stage1.text);
        const bool matched = match_dispatch({P, T, MatchMode::Decide}).found;
        if (independent != multiset)
            return where() + "independent set oracle=" + std::to_string(independent) +
                   " multiset match=" + std::to_string(multiset);
        if (multiset != matched)
            return where() + "multiset match=" + std::to_string(multiset) +
                   " matcher on reduced instance=" + std::to_string(matched);
        const BigCount separators = match_backtracking({separator, T, MatchMode::Count}).count;
        if (separators != 1)
            return where() + "pattern [3 2 1 4] occurs " + separators.str() + " times in T";
        return {};
    };

    for (Index l = 1; l <= opts.max_l; ++l) {
        const Index pairs = l * (l - 1) / 2;
        const bool exhaustive = pairs <= 15;
        const std::uint64_t graphs = exhaustive ? (std::uint64_t{1} << pairs) : opts.samples;
        for (std::uint64_t i = 0; i < graphs; ++i) {
            const Graph g =
                exhaustive ? graph_from_mask(l, i)
                           : random_graph(l, std::uniform_real_distribution<>(0.1, 0.9)(rng), rng);
            for (Index k = 1; k <= std::min(opts.max_k, l); ++k) {
                ++r.instances;
                if (auto why = check(g, k); !why.empty()) {
                    r.passed = false;
                    r.counterexample = why;
                    r.summary = "disagreement after " + std::to_string(r.instances) + " instances";
                    return r;
                }
            }
        }
    }
    r.summary = "IS \xE2\x9F\xBA GPPM agreed on " + std::to_string(r.instances) + " instances";
    return r;
}

Report run(Suite suite, const Options& opts)
{
    switch (suite) {
    case Suite::Engines:
        return run_engines(opts);
    case Suite::Reduction:
        return run_reduction(opts);
    case Suite::Fo:
        return run_fo(opts);
    }
    return {};
}

}  // namespace permpat::verify
