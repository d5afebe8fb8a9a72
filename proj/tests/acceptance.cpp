// Acceptance run: one PASS/FAIL line per criterion, with wall time.
#include "permpat/folog.hpp"
#include "permpat/matcher.hpp"
#include "permpat/reduction.hpp"
#include "permpat/textio.hpp"
#include "permpat/verify.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace permpat;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string& what)
    {
        if (!cond && ok) {
            ok = false;
            detail = what;
        }
    }
};

int g_failures = 0;

// carried: time already spent on this criterion outside body.
void criterion(int id, const char* title, double limit_seconds, const std::function<Outcome()>& body,
               double carried = 0.0)
{
    const auto start = Clock::now();
    Outcome o = body();
    const double secs = carried + std::chrono::duration<double>(Clock::now() - start).count();
    if (o.ok && secs >= limit_seconds) {
        o.ok = false;
        std::ostringstream s;
        s << "took " << secs << " s, limit " << limit_seconds << " s";
        o.detail = s.str();
    }
    if (!o.ok)
        ++g_failures;
    std::printf("%s %2d  %-52s %9.3f s  %s\n", o.ok ? "PASS" : "FAIL", id, title, secs,
                o.detail.c_str());
    std::fflush(stdout);
}

template <typename F>
double seconds(F&& f)
{
    const auto start = Clock::now();
    f();
    return std::chrono::duration<double>(Clock::now() - start).count();
}

Graph example_graph()
{
    return parse_graph("p 6 7\n1 3\n1 4\n1 5\n2 6\n3 4\n3 6\n5 6").graph;
}

bool decide(const GeneralizedPattern& p, const Permutation& t)
{
    return match_dispatch({p, t, MatchMode::Decide}).found;
}

std::string describe(const Graph& g, Index k)
{
    return "k=" + std::to_string(k) + " graph: " + serialize_graph(g, std::nullopt);
}

// The instance family shared by criteria 4, 5 and 6.
struct ReductionCase {
    Graph graph;
    Index k;
};

std::vector<ReductionCase> reduction_cases()
{
    std::vector<ReductionCase> cases;
    for (Index l = 1; l <= 6; ++l) {
        const std::uint64_t pairs = l * (l - 1) / 2;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask)
            for (Index k = 1; k <= std::min<Index>(3, l); ++k)
                cases.push_back({verify::graph_from_mask(l, mask), k});
    }
    verify::Rng rng(2012);
    for (int i = 0; i < 200; ++i) {
        const Index l = std::uniform_int_distribution<Index>(4, 8)(rng);
        const double p = std::uniform_real_distribution<double>(0.0, 0.6)(rng);
        cases.push_back({verify::random_graph(l, p, rng), 4});
    }
    return cases;
}

struct ReductionRun {
    Outcome equivalence, separator, multiset;
    std::size_t instances = 0;
    std::size_t positives = 0;
};

}  // namespace

int main()
{
    std::printf("acceptance: %s\n", "generalized pattern matching");

    criterion(1, "worked matching examples", 0.05, [] {
        Outcome o;
        const auto t = parse_permutation("53142");
        const auto p312 = parse_pattern("3 1 2");
        const auto p123 = parse_pattern("1 2 3");
        const auto p31_2 = parse_pattern("[3 1] 2");
        const auto p_312 = parse_pattern("[3 1 2]");
        const std::vector<std::pair<std::string, std::function<bool()>>> goldens{
            {"312 matches 53142", [&] { return decide(p312, t); }},
            {"123 avoids 53142", [&] { return !decide(p123, t); }},
            {"<31>2 via (1,2,4)",
             [&] {
                 const auto r = match_dispatch({p31_2, t, MatchMode::Decide});
                 return r.found && *r.witness == validate_embedding({1, 2, 4}) &&
                        is_valid_embedding(p31_2, t, validate_embedding({1, 2, 4}));
             }},
            {"(1,3,5) rejected for <31>2",
             [&] { return !is_valid_embedding(p31_2, t, validate_embedding({1, 3, 5})); }},
            {"<312> avoids 53142", [&] { return !decide(p_312, t); }},
        };
        for (const auto& [name, check] : goldens) {
            bool result = false;
            const double s = seconds([&] { result = check(); });
            o.require(result, name + " failed");
            o.require(s < 1e-3, name + " exceeded 1 ms");
        }
        return o;
    });

    criterion(2, "reduction worked example", 1.0, [] {
        Outcome o;
        const Graph g = example_graph();
        const ReductionTrace tr = reduce(g, 3);
        using Blocks = std::vector<std::vector<Value>>;
        o.require(tr.stage1.pattern.dot() == std::vector<Value>{1, 2, 3} &&
                      tr.stage1.pattern.bar() == Blocks{{1, 2, 1}, {1, 3, 1}, {2, 3, 2}},
                  "stage1 pattern differs");
        o.require(tr.stage1.text.dot() == std::vector<Value>{1, 2, 3, 4, 5, 6} &&
                      tr.stage1.text.bar() == Blocks{{1, 2, 1}, {1, 6, 1}, {2, 3, 2}, {2, 4, 2},
                                                     {2, 5, 2}, {3, 5, 3}, {4, 5, 4}, {4, 6, 4}},
                  "stage1 text differs");
        o.require(serialize_pattern(tr.stage3.pattern) ==
                      "6 1 11 7 15 12 [18 17 16 19] [2 8 3] [4 13 5] [9 14 10]",
                  "stage3 pattern differs: " + serialize_pattern(tr.stage3.pattern));
        o.require(tr.stage3.pattern.size() == 19, "|P| != 19");
        o.require(tr.stage3.text.size() == 40, "|T| != 40");

        const auto all = match_dispatch({tr.stage3.pattern, tr.stage3.text, MatchMode::EnumerateAll});
        o.require(all.found, "matcher answers NO MATCH");
        // Pattern positions 1, 3, 5 carry the upper copy of vertex slots 1..3;
        // text position p of the dot half belongs to vertex (p + 1) / 2.
        bool hits = false;
        for (const Embedding& e : all.embeddings) {
            const std::set<Index> vertices{(e.at(1) + 1) / 2, (e.at(3) + 1) / 2, (e.at(5) + 1) / 2};
            if (vertices == std::set<Index>{2, 3, 5})
                hits = true;
        }
        o.require(hits, "no witness selects vertices {2,3,5}");
        return o;
    });

    criterion(3, "size identities", 5.0, [] {
        Outcome o;
        verify::Rng rng(3);
        for (Index k = 1; k <= 8; ++k)
            for (int i = 0; i < 50; ++i) {
                const Index l = std::uniform_int_distribution<Index>(k, 12)(rng);
                const Graph g = verify::random_graph(l, 0.4, rng);
                const auto tr = reduce(g, k);
                const Index non_edges = l * (l - 1) / 2 - g.edges().size();
                o.require(tr.stage3.pattern.size() == 4 + (3 * k * k + k) / 2,
                          "|P| identity, " + describe(g, k));
                o.require(tr.stage3.text.size() == 2 * l + 3 * non_edges + 4,
                          "|T| identity, " + describe(g, k));
                o.require(tr.stage3.text.size() <= 4 + (3 * l * l + l) / 2,
                          "|T| bound, " + describe(g, k));
            }
        return o;
    });

    // Criteria 4 to 6 share one pass over the instance family.
    ReductionRun run;
    const auto family_start = Clock::now();
    {
        const auto cases = reduction_cases();
        const auto separator = validate_pattern({3, 2, 1, 4}, {Block{1, 4}});
        for (const auto& c : cases) {
            const auto tr = reduce(c.graph, c.k);
            const bool decision = decide(tr.stage3.pattern, tr.stage3.text);
            const bool oracle = independent_set_oracle(c.graph, c.k).found;
            run.equivalence.require(decision == oracle, "disagreement, " + describe(c.graph, c.k));
            const auto sep = match_dispatch({separator, tr.stage3.text, MatchMode::Count});
            run.separator.require(sep.count == 1, "separator count " + sep.count.str() + ", " +
                                                      describe(c.graph, c.k));
            const bool multiset = simultaneous_multiset_match(tr.stage1.pattern, tr.stage1.text);
            run.multiset.require(multiset == decision, "disagreement, " + describe(c.graph, c.k));
            ++run.instances;
            run.positives += decision;
        }
    }
    const double family_secs = std::chrono::duration<double>(Clock::now() - family_start).count();
    auto with_count = [&](Outcome o) {
        if (o.ok)
            o.detail = std::to_string(run.instances) + " instances (" + std::to_string(run.positives) +
                       " positive), one shared pass";
        return o;
    };
    criterion(4, "independent set <=> reduced matching", 120.0,
              [&] { return with_count(run.equivalence); }, family_secs);
    criterion(5, "separator occurs exactly once", 120.0,
              [&] { return with_count(run.separator); }, family_secs);
    criterion(6, "multiset matching <=> reduced matching", 120.0,
              [&] { return with_count(run.multiset); }, family_secs);

    criterion(7, "backtracking == brute force, exhaustive", 120.0, [] {
        Outcome o;
        std::size_t pairs = 0;
        for (Index n = 1; n <= 6; ++n) {
            const auto texts = verify::all_permutations(n);
            for (Index k = 1; k <= 4; ++k)
                for (const auto& p : verify::all_patterns(k))
                    for (const auto& t : texts) {
                        for (auto mode : {MatchMode::Decide, MatchMode::Count, MatchMode::EnumerateAll}) {
                            const MatchRequest req{p, t, mode};
                            o.require(match_backtracking(req) == match_bruteforce(req),
                                      "p=" + serialize_pattern(p) + " t=" + serialize_permutation(t));
                        }
                        ++pairs;
                    }
        }
        if (o.ok)
            o.detail = std::to_string(pairs) + " pattern/text pairs x 3 modes";
        return o;
    });

    criterion(8, "first-order decider == matcher", 60.0, [] {
        Outcome o;
        auto check = [&](const GeneralizedPattern& p, const Permutation& t) {
            const auto fo = fo::model_check(fo::encode_structure(t), fo::encode_formula(p));
            const auto m = match_dispatch({p, t, MatchMode::Decide});
            const bool same = fo.satisfied == m.found &&
                              (!m.found || validate_embedding(fo.witness) == *m.witness);
            o.require(same, "p=" + serialize_pattern(p) + " t=" + serialize_permutation(t));
        };
        std::size_t count = 0;
        for (Index n = 1; n <= 6; ++n) {
            const auto texts = verify::all_permutations(n);
            for (Index k = 1; k <= 4; ++k)
                for (const auto& p : verify::all_patterns(k))
                    for (const auto& t : texts) {
                        check(p, t);
                        ++count;
                    }
        }
        verify::Rng rng(8);
        for (int i = 0; i < 500; ++i) {
            const Index k = std::uniform_int_distribution<Index>(1, 5)(rng);
            const Index n = std::uniform_int_distribution<Index>(1, 12)(rng);
            const auto p = verify::random_pattern(k, rng);
            check(p, verify::random_permutation(n, rng));
            ++count;
        }
        if (o.ok)
            o.detail = std::to_string(count) + " instances";
        return o;
    });

    criterion(9, "increasing-subsequence fast path", 10.0, [] {
        Outcome o;
        o.require(lis_length(parse_permutation("53142")) == 2, "lis_length(53142) != 2");
        verify::Rng rng(9);
        for (int i = 0; i < 500; ++i) {
            const Index n = std::uniform_int_distribution<Index>(1, 12)(rng);
            const auto t = verify::random_permutation(n, rng);
            const Index lis = lis_length(t);
            for (Index k = 1; k <= n; ++k) {
                const auto p = GeneralizedPattern::classical(Permutation::identity(k));
                const bool brute = match_bruteforce({p, t, MatchMode::Decide}).found;
                o.require((lis >= k) == brute, "t=" + serialize_permutation(t) + " k=" + std::to_string(k));
                o.require(match_dispatch({p, t, MatchMode::Decide}) ==
                              match_bruteforce({p, t, MatchMode::Decide}),
                          "dispatch differs, t=" + serialize_permutation(t));
            }
        }
        return o;
    });

    criterion(10, "de-duplication independent of the reals", 5.0, [] {
        Outcome o;
        const RealScheme first = canonical_real;
        const RealScheme second = [](Value j, Index t, Index m) {
            return static_cast<long double>(j) + 0.05L +
                   0.8L * static_cast<long double>(t * t) / static_cast<long double>((m + 1) * (m + 1));
        };
        verify::Rng rng(10);
        for (int i = 0; i < 200; ++i) {
            const Index l = std::uniform_int_distribution<Index>(1, 12)(rng);
            const Index k = std::uniform_int_distribution<Index>(1, std::min<Index>(l, 8))(rng);
            const Graph g = verify::random_graph(l, 0.35, rng);
            const auto inst = build_multiset_instance(g, k);
            for (const MultisetHalves* h : {&inst.pattern, &inst.text}) {
                const RankedHalves a = deduplicate_with_reals(*h, first);
                const RankedHalves b = deduplicate_with_reals(*h, second);
                o.require(a == b, "schemes differ, " + describe(g, k));
                o.require(a == deduplicate(*h), "exact ranking differs, " + describe(g, k));
            }
        }
        return o;
    });

    std::printf("%s: %d criteria failed\n", g_failures == 0 ? "ALL PASS" : "FAILURES", g_failures);
    return g_failures == 0 ? 0 : 1;
}
