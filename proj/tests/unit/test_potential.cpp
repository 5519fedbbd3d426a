#include "potgraphic/error.hpp"
#include "potgraphic/extremal.hpp"
#include "potgraphic/oracle.hpp"
#include "potgraphic/potential.hpp"

#include "doctest.h"

#include <map>
#include <set>

using namespace potgraphic;

namespace {

DegreeSequence seq(std::initializer_list<int> values)
{
    return DegreeSequence(std::vector<int>(values));
}

void check_witness(const DegreeSequence & s, const SimpleGraph & pattern, const PotentialDecision & d)
{
    REQUIRE(d.verdict);
    REQUIRE(d.witness);
    REQUIRE(d.embedding);
    CHECK(degree_sequence(*d.witness) == s);
    CHECK(is_embedding(*d.witness, pattern, *d.embedding));
}

struct NamedPattern {
    const char * name;
    SimpleGraph graph;
};

std::vector<NamedPattern> oracle_patterns()
{
    return {
        {"2K2", matching(2)},
        {"P2", path_graph(2)},
        {"C4", cycle_graph(4)},
        {"K4-e", build_removed_pattern({3, 0, 1})},
        {"K5-(P2+K2)", build_removed_pattern({4, 1, 1})},
    };
}

PotentialOptions without_probe(TiePolicy ties = TiePolicy::Canonical)
{
    PotentialOptions o;
    o.realization_probe = false;
    o.ties = ties;
    return o;
}

} // namespace

TEST_CASE("completion with forced edges")
{
    auto single = complete_with_forced_edges(seq({1, 1}), std::vector<Edge>{{0, 1}});
    REQUIRE(single);
    CHECK(*single == complete(2));

    auto triangle = complete_with_forced_edges(seq({2, 2, 2}), std::vector<Edge>{{0, 1}, {1, 2}});
    REQUIRE(triangle);
    CHECK(*triangle == complete(3));

    // vertex 1 must take every other vertex, saturating 2 and 3 first
    CHECK_FALSE(complete_with_forced_edges(seq({3, 1, 1, 1}), std::vector<Edge>{{1, 2}}));

    try {
        complete_with_forced_edges(seq({2, 1, 1}), std::vector<Edge>{{1, 2}, {0, 1}});
        FAIL("expected DemandExceeded");
    }
    catch (const Error & e) {
        CHECK(e.code() == Errc::DemandExceeded);
    }
}

TEST_CASE("completion enumerates every labeled realization")
{
    // 70 labeled 2-regular graphs on 6 vertices: 60 hexagons and 10 triangle pairs
    int count = 0;
    for_each_completion(seq({2, 2, 2, 2, 2, 2}), {}, [&](const SimpleGraph & g) {
        CHECK(degree_sequence(g) == seq({2, 2, 2, 2, 2, 2}));
        ++count;
        return true;
    });
    CHECK(count == 70);

    // cross-check counts against labeled graph enumeration
    for (int n = 3; n <= 6; ++n) {
        std::map<std::vector<int>, int> by_labeled_degrees;
        oracle::for_each_labeled_graph(n, [&](const SimpleGraph & g) {
            auto d = g.degrees();
            if (std::is_sorted(d.rbegin(), d.rend()))
                ++by_labeled_degrees[d];
        });
        for (const auto & [degrees, expected] : by_labeled_degrees) {
            int found = 0;
            for_each_completion(DegreeSequence(degrees), {}, [&](const SimpleGraph &) {
                ++found;
                return true;
            });
            CHECK(found == expected);
        }
    }
}

TEST_CASE("work budget")
{
    SearchBudget budget{3, 0};
    CHECK_THROWS_AS(
        for_each_completion(seq({2, 2, 2, 2, 2, 2}), {}, [](const SimpleGraph &) { return true; }, &budget), Error);
}

TEST_CASE("potentially H-graphic examples")
{
    auto c4 = is_potentially_subgraph(seq({2, 2, 2, 2}), cycle_graph(4));
    check_witness(seq({2, 2, 2, 2}), cycle_graph(4), c4);

    auto star = is_potentially_subgraph(seq({3, 1, 1, 1}), matching(2));
    CHECK_FALSE(star.verdict);
    CHECK_FALSE(star.not_graphic);

    const auto special = repeated({{7, 1}, {3, 7}});
    const auto pattern = build_removed_pattern({4, 1, 1});
    check_witness(special, pattern, is_potentially_subgraph(special, pattern));
    check_witness(special, pattern, is_potentially_subgraph(special, pattern, without_probe()));

    auto odd = is_potentially_subgraph(seq({3, 3, 1, 1}), path_graph(2));
    CHECK_FALSE(odd.verdict);
    CHECK(odd.not_graphic);

    CHECK_THROWS_AS(is_potentially_subgraph(seq({1, 1}), path_graph(2)), Error);
}

TEST_CASE("clique on the top degrees")
{
    CHECK(is_potentially_clique_on_top(seq({2, 2, 2}), 2).verdict);
    auto k4 = is_potentially_clique_on_top(seq({3, 3, 3, 3}), 3);
    REQUIRE(k4.verdict);
    CHECK(*k4.witness == complete(4));
    // the only realization is a path on four vertices
    CHECK_FALSE(is_potentially_clique_on_top(seq({2, 2, 1, 1}), 2).verdict);
}

TEST_CASE("hypothesis checks")
{
    CHECK(hypothesis_check(ConditionId::Thm22, seq({3, 3, 3, 3, 3, 3, 3, 3}), 3));
    CHECK_FALSE(hypothesis_check(ConditionId::Lemma22, seq({2, 2, 1, 1}), 3));
    CHECK(hypothesis_check(ConditionId::Thm21, seq({5, 4, 3, 3, 3, 2}), 3));
    CHECK_FALSE(hypothesis_check(ConditionId::Thm21, seq({5, 3, 3, 3, 3, 3}), 3));

    try {
        hypothesis_check(ConditionId::Thm22, seq({3, 3, 3, 3}), 3);
        FAIL("expected SideConditionUnmet");
    }
    catch (const Error & e) {
        CHECK(e.code() == Errc::SideConditionUnmet);
    }
    CHECK_THROWS_AS(hypothesis_check(ConditionId::Thm21, seq({3, 3, 1, 1}), 3), Error);

    CHECK(parse_condition_id("lemma2.3") == ConditionId::Lemma23);
    CHECK(to_string(ConditionId::Thm24) == "thm2.4");
    CHECK_THROWS_AS(parse_condition_id("thm9"), Error);
}

TEST_CASE("conclusion checks")
{
    CHECK(conclusion_check(ConditionId::Thm22, seq({3, 3, 3, 3, 3, 3, 3, 3}), 3));
    CHECK(conclusion_check(ConditionId::Lemma22, seq({4, 4, 4, 3, 3}), 4));
    // one vertex of degree at least 4 cannot host K5-P2
    CHECK_FALSE(conclusion_check(ConditionId::Lemma22, special_sequence(4, 8), 4));
    CHECK(conclusion_check(ConditionId::Thm23, seq({2, 2, 2}), 2));
    CHECK(conclusion_pattern(ConditionId::Thm23, 2) == build_removed_pattern({2, 0, 1}));
    CHECK(are_isomorphic(conclusion_pattern(ConditionId::Thm23, 2), path_graph(2)));
}

TEST_CASE("pattern on the top positions")
{
    auto c4 = realization_with_pattern_on_top(seq({2, 2, 2, 2}), cycle_graph(4));
    REQUIRE(c4);
    CHECK(are_isomorphic(c4->graph, cycle_graph(4)));

    const auto s = seq({3, 3, 2, 2});
    auto p2 = realization_with_pattern_on_top(s, path_graph(2));
    REQUIRE(p2);
    CHECK(degree_sequence(p2->graph) == s);
    CHECK(is_embedding(p2->graph, path_graph(2), p2->embedding));
    std::set<int> used(p2->embedding.begin(), p2->embedding.end());
    CHECK(used == std::set<int>{0, 1, 2});

    try {
        realization_with_pattern_on_top(seq({3, 3, 1, 1}), path_graph(2));
        FAIL("expected NotPotential");
    }
    catch (const Error & e) {
        CHECK(e.code() == Errc::NotPotential);
    }

    // clique minus an edge: the missing pair sits on positions r and r+1
    const auto ke = build_removed_pattern({3, 0, 1});
    auto placed = realization_with_pattern_on_top(seq({3, 3, 2, 2}), ke);
    REQUIRE(placed);
    CHECK_FALSE(placed->graph.adjacent(2, 3));
}

TEST_CASE("property: exact engine agrees with labeled-graph enumeration")
{
    for (const auto & [name, pattern] : oracle_patterns()) {
        for (int n = pattern.order(); n <= 6; ++n) {
            CAPTURE(name);
            CAPTURE(n);
            for (const auto & [s, expected] : oracle::potential_by_enumeration(n, pattern)) {
                CAPTURE(s.to_string());
                auto fast = is_potentially_subgraph(s, pattern);
                auto placed = is_potentially_subgraph(s, pattern, without_probe());
                auto tied = is_potentially_subgraph(s, pattern, without_probe(TiePolicy::AllTiedSets));
                CHECK(fast.verdict == expected);
                CHECK(placed.verdict == expected);
                CHECK(tied.verdict == expected);
                if (fast.verdict)
                    check_witness(s, pattern, fast);
                if (placed.verdict) {
                    check_witness(s, pattern, placed);
                    // the placement search only uses the top positions
                    for (int v : *placed.embedding)
                        CHECK(v < pattern.order());
                }
            }
        }
    }
}

TEST_CASE("property: clique-on-top agrees with enumeration")
{
    for (int n = 3; n <= 6; ++n)
        for (int r = 2; r + 1 <= n; ++r) {
            std::map<DegreeSequence, bool> expected;
            oracle::for_each_labeled_graph(n, [&](const SimpleGraph & g) {
                auto d = g.degrees();
                auto [it, inserted] = expected.try_emplace(DegreeSequence(d), false);
                if (it->second)
                    return;
                // some top-(r+1) position set, read as a multiset, induces a clique
                auto sorted = DegreeSequence(d);
                const int boundary = sorted[static_cast<std::size_t>(r)];
                std::vector<int> above, tied;
                for (int v = 0; v < n; ++v) {
                    if (d[static_cast<std::size_t>(v)] > boundary)
                        above.push_back(v);
                    else if (d[static_cast<std::size_t>(v)] == boundary)
                        tied.push_back(v);
                }
                const auto want = static_cast<std::size_t>(r + 1) - above.size();
                std::vector<bool> pick(tied.size(), false);
                std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(want), true);
                do {
                    auto set = above;
                    for (std::size_t i = 0; i < tied.size(); ++i)
                        if (pick[i])
                            set.push_back(tied[i]);
                    bool clique = true;
                    for (std::size_t i = 0; i < set.size() && clique; ++i)
                        for (std::size_t j = i + 1; j < set.size(); ++j)
                            if (!g.adjacent(set[i], set[j])) {
                                clique = false;
                                break;
                            }
                    if (clique) {
                        it->second = true;
                        return;
                    }
                } while (std::prev_permutation(pick.begin(), pick.end()));
            });
            for (const auto & [s, want] : expected) {
                CAPTURE(s.to_string());
                CAPTURE(r);
                CHECK(is_potentially_clique_on_top(s, r).verdict == want);
                CHECK(is_potentially_clique_on_top(s, r, without_probe(TiePolicy::AllTiedSets)).verdict == want);
            }
        }
}

TEST_CASE("property: top placement and monotonicity")
{
    const auto patterns = oracle_patterns();
    for (int n = 2; n <= 6; ++n) {
        for (const auto & s : enumerate_graphic_sequences(n)) {
            std::vector<std::optional<bool>> verdicts;
            for (const auto & [name, pattern] : patterns) {
                if (pattern.order() > n) {
                    verdicts.push_back(std::nullopt);
                    continue;
                }
                const bool v = is_potentially_subgraph(s, pattern).verdict;
                verdicts.push_back(v);
                if (v) {
                    CAPTURE(name);
                    CAPTURE(s.to_string());
                    auto placed = realization_with_pattern_on_top(s, pattern);
                    REQUIRE(placed);
                    CHECK(degree_sequence(placed->graph) == s);
                    CHECK(is_embedding(placed->graph, pattern, placed->embedding));
                    for (std::size_t u = 0; u < placed->embedding.size(); ++u)
                        CHECK(placed->embedding[u] < pattern.order());
                }
            }
            for (std::size_t a = 0; a < patterns.size(); ++a)
                for (std::size_t b = 0; b < patterns.size(); ++b) {
                    if (a == b || !verdicts[a] || !verdicts[b])
                        continue;
                    if (contains_subgraph(patterns[b].graph, patterns[a].graph) && *verdicts[b])
                        CHECK(*verdicts[a]);
                }
        }
    }
}

TEST_CASE("property: removing more edges never hurts")
{
    // K_{r+1}-(kP2 u tK2) is a subgraph of K_{r+1}-(P2 u K2) whenever it is defined
    for (int n = 6; n <= 7; ++n) {
        const auto base = build_removed_pattern({5, 1, 1});
        std::vector<SimpleGraph> smaller{build_removed_pattern({5, 2, 0}), cycle_graph(4),
                                         path_graph(3)};
        for (const auto & h : smaller)
            REQUIRE(contains_subgraph(base, h));
        for (const auto & s : enumerate_graphic_sequences(n))
            if (is_potentially_subgraph(s, base).verdict)
                for (const auto & h : smaller)
                    CHECK(is_potentially_subgraph(s, h).verdict);
    }
}
