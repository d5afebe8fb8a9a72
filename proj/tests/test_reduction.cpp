#include "permpat/reduction.hpp"

#include "permpat/matcher.hpp"
#include "permpat/textio.hpp"
#include "permpat/verify.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace permpat;

namespace {

using Blocks = std::vector<std::vector<Value>>;

Graph example_graph()
{
    return parse_graph("p 6 7\n1 3\n1 4\n1 5\n2 6\n3 4\n3 6\n5 6").graph;
}

Graph complete_graph(Index l)
{
    std::vector<Edge> edges;
    for (Index u = 1; u <= l; ++u)
        for (Index v = u + 1; v <= l; ++v)
            edges.push_back({u, v});
    return validate_graph(l, edges);
}

Graph empty_graph(Index l) { return validate_graph(l, {}); }

}  // namespace

TEST_CASE("build_multiset_instance")
{
    SUBCASE("worked example")
    {
        const auto inst = build_multiset_instance(example_graph(), 3);
        CHECK(inst.pattern.dot() == std::vector<Value>{1, 2, 3});
        CHECK(inst.pattern.bar() == Blocks{{1, 2, 1}, {1, 3, 1}, {2, 3, 2}});
        CHECK(inst.text.dot() == std::vector<Value>{1, 2, 3, 4, 5, 6});
        CHECK(inst.text.bar() == Blocks{{1, 2, 1}, {1, 6, 1}, {2, 3, 2}, {2, 4, 2},
                                        {2, 5, 2}, {3, 5, 3}, {4, 5, 4}, {4, 6, 4}});
        CHECK(inst.pattern.side() == MultisetHalves::Side::Pattern);
        CHECK(inst.text.side() == MultisetHalves::Side::Text);
    }
    SUBCASE("empty and complete graphs")
    {
        const auto e = build_multiset_instance(empty_graph(2), 2);
        CHECK(e.pattern.bar() == Blocks{{1, 2, 1}});
        CHECK(e.text.dot() == std::vector<Value>{1, 2});
        CHECK(e.text.bar() == Blocks{{1, 2, 1}});

        const auto c = build_multiset_instance(complete_graph(3), 2);
        CHECK(c.pattern.bar() == Blocks{{1, 2, 1}});
        CHECK(c.text.dot() == std::vector<Value>{1, 2, 3});
        CHECK(c.text.bar().empty());
    }
    CHECK_THROWS_AS(build_multiset_instance(complete_graph(3), 4), DomainError);
    CHECK_THROWS_AS(build_multiset_instance(complete_graph(3), 0), DomainError);
}

TEST_CASE("deduplicate")
{
    const auto inst = build_multiset_instance(example_graph(), 3);
    const RankedHalves p = deduplicate(inst.pattern);
    CHECK(p.dot == std::vector<Value>{6, 1, 11, 7, 15, 12});
    CHECK(p.bar == Blocks{{2, 8, 3}, {4, 13, 5}, {9, 14, 10}});

    const RankedHalves single = deduplicate(multiset_pattern(1));
    CHECK(single.dot == std::vector<Value>{2, 1});
    CHECK(single.bar.empty());

    // Frozen from an exact-fraction script applying j + 0.9 t/(m_j+1) and sorting.
    const RankedHalves t = deduplicate(inst.text);
    CHECK(t.element_count() == 36);
    CHECK(t.dot == std::vector<Value>{6, 1, 15, 7, 20, 16, 27, 21, 32, 28, 36, 33});
    CHECK(t.bar == Blocks{{2, 8, 3}, {4, 34, 5}, {9, 17, 10}, {11, 22, 12},
                          {13, 29, 14}, {18, 30, 19}, {23, 31, 24}, {25, 35, 26}});
}

TEST_CASE("attach_separator")
{
    const auto trace = reduce(example_graph(), 3);
    CHECK(serialize_pattern(trace.stage3.pattern) ==
          "6 1 11 7 15 12 [18 17 16 19] [2 8 3] [4 13 5] [9 14 10]");
    const auto& T = trace.stage3.text;
    CHECK(T.size() == 40);
    CHECK(T.at(13) == 39);
    CHECK(T.at(14) == 38);
    CHECK(T.at(15) == 37);
    CHECK(T.at(16) == 40);

    const auto k1 = reduce(example_graph(), 1);
    CHECK(serialize_pattern(k1.stage3.pattern) == "2 1 [5 4 3 6]");
}

TEST_CASE("reduce: sizes and decisions")
{
    const auto t = reduce(example_graph(), 3);
    CHECK(t.stage3.pattern.size() == 19);
    CHECK(t.stage3.text.size() == 40);
    CHECK(check_trace(t, example_graph()).empty());

    const auto e = reduce(empty_graph(2), 2);
    CHECK(e.stage3.pattern.size() == 11);
    CHECK(e.stage3.text.size() == text_length_bound(2));

    const auto k3 = reduce(complete_graph(3), 3);
    CHECK(k3.stage3.text.size() == 10);
    CHECK_FALSE(match_dispatch({k3.stage3.pattern, k3.stage3.text, MatchMode::Decide}).found);
    CHECK_FALSE(independent_set_oracle(complete_graph(3), 3).found);

    CHECK_THROWS_AS(reduce(empty_graph(2), 3), DomainError);
}

TEST_CASE("independent_set_oracle")
{
    const auto r = independent_set_oracle(example_graph(), 3);
    CHECK(r.found);
    CHECK(r.witness == std::vector<Index>{2, 3, 5});
    CHECK_FALSE(independent_set_oracle(complete_graph(3), 2).found);
    CHECK(independent_set_oracle(empty_graph(4), 4).found);
    CHECK_FALSE(independent_set_oracle(empty_graph(4), 5).found);
    CHECK_THROWS_AS(independent_set_oracle(empty_graph(40), 20, 1000), BudgetExceeded);
}

TEST_CASE("simultaneous_multiset_match")
{
    const auto inst = build_multiset_instance(example_graph(), 3);
    CHECK(simultaneous_multiset_match(inst.pattern, inst.text));
    CHECK_FALSE(simultaneous_multiset_match(multiset_pattern(2), multiset_text(complete_graph(3))));
    CHECK(simultaneous_multiset_match(multiset_pattern(1), multiset_text(complete_graph(3))));
    CHECK_FALSE(simultaneous_multiset_match(multiset_pattern(4), multiset_text(empty_graph(3))));
}

TEST_CASE("rank stability under another choice of reals")
{
    const RealScheme shifted = [](Value j, Index t, Index m) {
        return static_cast<long double>(j) + 0.45L +
               0.4L * static_cast<long double>(t) / static_cast<long double>(m + 1);
    };
    const RealScheme canonical = canonical_real;
    verify::Rng rng(77);
    for (int i = 0; i < 200; ++i) {
        const Index l = std::uniform_int_distribution<Index>(1, 9)(rng);
        const Index k = std::uniform_int_distribution<Index>(1, l)(rng);
        const auto inst = build_multiset_instance(verify::random_graph(l, 0.5, rng), k);
        for (const MultisetHalves* h : {&inst.pattern, &inst.text}) {
            const RankedHalves exact = deduplicate(*h);
            CHECK(deduplicate_with_reals(*h, canonical) == exact);
            CHECK(deduplicate_with_reals(*h, shifted) == exact);
        }
    }
}

TEST_CASE("trace identities hold on random graphs")
{
    verify::Rng rng(5);
    for (int i = 0; i < 300; ++i) {
        const Index l = std::uniform_int_distribution<Index>(1, 12)(rng);
        const Index k = std::uniform_int_distribution<Index>(1, std::min<Index>(l, 8))(rng);
        const Graph g = verify::random_graph(l, 0.3, rng);
        CHECK(check_trace(reduce(g, k), g) == "");
    }
}

TEST_CASE("format_trace")
{
    const std::string trace = format_trace(reduce(example_graph(), 3));
    CHECK(trace.rfind("reduction k 3 l 6\n[stage1]\npattern 1 2 3 | [1 2 1] [1 3 1] [2 3 2]\n", 0) == 0);
    CHECK(trace.find("text 1 2 3 4 5 6 | [1 2 1] [1 6 1] [2 3 2] [2 4 2] [2 5 2] [3 5 3] "
                     "[4 5 4] [4 6 4]\n") != std::string::npos);
    CHECK(trace.find("[stage2]\npattern 6 1 11 7 15 12 | [2 8 3] [4 13 5] [9 14 10]\n") !=
          std::string::npos);
    CHECK(trace.find("[stage3]\npattern 6 1 11 7 15 12 [18 17 16 19] [2 8 3] [4 13 5] [9 14 10]\n") !=
          std::string::npos);
    CHECK(trace.find("sizes 19 40\n") != std::string::npos);
}
