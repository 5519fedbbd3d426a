#include "potgraphic/error.hpp"
#include "potgraphic/graph.hpp"
#include "potgraphic/oracle.hpp"
#include "potgraphic/sequence.hpp"

#include "doctest.h"

#include <random>
#include <set>

using namespace potgraphic;

namespace {

template <typename Fn>
Errc error_code_of(Fn && fn)
{
    try {
        fn();
    }
    catch (const Error & e) {
        return e.code();
    }
    FAIL("expected an Error");
    return Errc::ParseError;
}

DegreeSequence seq(std::initializer_list<int> values)
{
    return DegreeSequence(std::vector<int>(values));
}

} // namespace

TEST_CASE("normalize sorts and validates")
{
    CHECK(normalize({1, 3, 2, 2}).to_string() == "3,2,2,1");
    CHECK(normalize({0, 0}).to_string() == "0,0");
    CHECK(error_code_of([] { normalize({4, 1, 1}); }) == Errc::EntryExceedsNMinus1);
    CHECK(error_code_of([] { normalize({1, -1}); }) == Errc::NegativeEntry);
    CHECK(normalize({2, 2, 2}).sigma() == 6);
}

TEST_CASE("sequence text format")
{
    CHECK(parse_sequence(" 3, 3,2 ,2 ") == seq({3, 3, 2, 2}));
    CHECK(parse_sequence("1,3,2,2").to_string() == "3,2,2,1");
    CHECK(error_code_of([] { parse_sequence(""); }) == Errc::ParseError);
    CHECK(error_code_of([] { parse_sequence("3,,2"); }) == Errc::ParseError);
    CHECK(error_code_of([] { parse_sequence("3,a"); }) == Errc::ParseError);
    CHECK(error_code_of([] { parse_sequence("5,1"); }) == Errc::EntryExceedsNMinus1);
}

TEST_CASE("1-based access")
{
    auto s = seq({4, 4, 3, 3, 2, 2});
    CHECK(s.d(1) == 4);
    CHECK(s.d(6) == 2);
    CHECK(error_code_of([&] { s.d(0); }) == Errc::IndexOutOfRange);
    CHECK(error_code_of([&] { s.d(7); }) == Errc::IndexOutOfRange);
}

TEST_CASE("is_graphic on named examples")
{
    CHECK(is_graphic(seq({3, 3, 3, 3})));
    CHECK_FALSE(is_graphic(seq({2, 1, 0})));
    CHECK_FALSE(is_graphic(seq({1, 0})));
    // (2,1) cannot even be formed: 2 exceeds n-1
    CHECK(error_code_of([] { normalize({2, 1}); }) == Errc::EntryExceedsNMinus1);

    // derived by enumerating all 64 graphs on 4 vertices
    const auto realizable = oracle::realizable_sequences(4);
    CHECK_FALSE(realizable.contains(seq({3, 3, 1, 1})));
    CHECK(realizable.contains(seq({3, 3, 2, 2})));
    CHECK_FALSE(is_graphic(seq({3, 3, 1, 1})));
    CHECK(is_graphic(seq({3, 3, 2, 2})));
}

TEST_CASE("Erdos-Gallai margins")
{
    // t=2: 2*1 + min(2,1) + min(2,1) - (3+3) = -2
    auto m = erdos_gallai_margins(seq({3, 3, 1, 1}));
    REQUIRE(m.size() == 3);
    CHECK(m[1] == -2);

    for (auto v : erdos_gallai_margins(seq({0, 0, 0})))
        CHECK(v >= 0);

    // (2,2,2): t=1: 0 + 2 - 2 = 0; t=2: 2 + 2 - 4 = 0
    CHECK(erdos_gallai_margins(seq({2, 2, 2})) == std::vector<std::int64_t>{0, 0});
    CHECK(erdos_gallai_margins(seq({0})).empty());
}

TEST_CASE("layoff follows the positional two-case rule")
{
    CHECK(layoff(seq({2, 2, 2}), 1) == seq({1, 1}));
    CHECK(layoff(seq({4, 4, 3, 3, 2, 2}), 1) == seq({3, 2, 2, 2, 1}));
    CHECK(layoff(seq({3, 3, 2, 2, 2}), 5) == seq({2, 2, 2, 2}));
    // d_3 = 3 >= 3: positions 1,2 and 4 drop
    CHECK(layoff(seq({3, 3, 3, 3}), 3) == seq({2, 2, 2}));
    CHECK(error_code_of([] { layoff(seq({2, 2, 2}), 0); }) == Errc::IndexOutOfRange);
    CHECK(error_code_of([] { layoff(seq({2, 2, 2}), 4); }) == Errc::IndexOutOfRange);
    CHECK(error_code_of([] { layoff(seq({1, 0}), 1); }) == Errc::ResultNegative);
    // nothing is laid off from the degree-2 vertices, which then exceed the new order
    CHECK(error_code_of([] { layoff(seq({2, 2, 0}), 3); }) == Errc::EntryExceedsNMinus1);
}

TEST_CASE("Havel-Hakimi realization")
{
    auto empty = havel_hakimi_realize(seq({0, 0, 0}));
    REQUIRE(empty);
    CHECK(empty->order() == 3);
    CHECK(empty->size() == 0);

    auto k4 = havel_hakimi_realize(seq({3, 3, 3, 3}));
    REQUIRE(k4);
    CHECK(*k4 == complete(4));

    CHECK_FALSE(havel_hakimi_realize(seq({3, 3, 1, 1})));
    CHECK_FALSE(havel_hakimi_realize(seq({2, 1, 0})));
}

TEST_CASE("enumeration counts match the exhaustive oracle")
{
    CHECK(enumerate_graphic_sequences(2) == std::vector{seq({1, 1}), seq({0, 0})});
    CHECK(enumerate_graphic_sequences(3) ==
          std::vector{seq({2, 2, 2}), seq({2, 1, 1}), seq({1, 1, 0}), seq({0, 0, 0})});
    CHECK(enumerate_graphic_sequences(4).size() == 11);

    for (int n = 1; n <= 6; ++n) {
        auto listed = enumerate_graphic_sequences(n);
        std::set<DegreeSequence> unique(listed.begin(), listed.end());
        CHECK(unique.size() == listed.size());
        CHECK(unique == oracle::realizable_sequences(n));
        CHECK(std::is_sorted(listed.rbegin(), listed.rend()));
    }
}

TEST_CASE("enumeration options")
{
    EnumerationOptions no_zero;
    no_zero.exclude_zero_terms = true;
    for (const auto & s : enumerate_graphic_sequences(6, no_zero))
        CHECK_FALSE(s.has_zero_entry());

    EnumerationOptions dense;
    dense.min_sigma = 20;
    auto all = enumerate_graphic_sequences(6);
    auto filtered = enumerate_graphic_sequences(6, dense);
    CHECK(filtered.size() ==
          static_cast<std::size_t>(std::count_if(all.begin(), all.end(), [](auto & s) { return s.sigma() >= 20; })));

    // shards by d1 partition the space
    std::size_t total = 0;
    for (int d1 = 0; d1 <= 6; ++d1) {
        EnumerationOptions shard;
        shard.first_entry = d1;
        for (const auto & s : enumerate_graphic_sequences(7, shard)) {
            CHECK(s[0] == d1);
            ++total;
        }
    }
    CHECK(total == enumerate_graphic_sequences(7).size());

    int seen = 0;
    for_each_graphic_sequence(5, {}, [&](const DegreeSequence &) { return ++seen < 3; });
    CHECK(seen == 3);
}

TEST_CASE("property: layoff preserves graphicality, realizations are sound")
{
    for (int n = 1; n <= 7; ++n) {
        for (const auto & s : oracle::all_bounded_sequences(n)) {
            const bool graphic = is_graphic(s);
            if (graphic)
                CHECK(s.sigma() % 2 == 0);
            for (std::size_t k = 1; k <= s.size(); ++k) {
                bool residual = false;
                try {
                    residual = is_graphic(layoff(s, k));
                }
                catch (const Error & e) {
                    // the residual is not a valid sequence, hence not graphic
                    REQUIRE((e.code() == Errc::ResultNegative || e.code() == Errc::EntryExceedsNMinus1));
                }
                CHECK(residual == graphic);
            }
            auto g = havel_hakimi_realize(s);
            CHECK(g.has_value() == graphic);
            if (g) {
                CHECK(degree_sequence(*g) == s);
                for (int v = 0; v < g->order(); ++v)
                    CHECK(g->degree(v) == s[static_cast<std::size_t>(v)]);
            }
        }
    }
}

TEST_CASE("property: Havel-Hakimi on random graph sequences")
{
    std::mt19937 rng(12345);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 10 + trial % 30;
        SimpleGraph g(n);
        std::bernoulli_distribution coin(0.1 + 0.8 * (trial % 7) / 7.0);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (coin(rng))
                    g.add_edge(u, v);
        auto s = degree_sequence(g);
        REQUIRE(is_graphic(s));
        auto h = havel_hakimi_realize(s);
        REQUIRE(h);
        CHECK(degree_sequence(*h) == s);
    }
}
