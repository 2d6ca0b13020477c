#include <doctest.h>

#include <cstdlib>
#include <vector>

#include "sz/enumerate.hpp"

using sz::FiniteSet;
using sz::PredicateSpec;
using sz::SchreierKind;

namespace {
std::vector<FiniteSet> collect(unsigned n, const PredicateSpec& spec) {
    std::vector<FiniteSet> out;
    for (const FiniteSet& s : sz::enumerate_matching(n, spec)) out.push_back(s);
    return out;
}

// Every PredicateSpec over a small grid of options.
std::vector<PredicateSpec> spec_grid() {
    std::vector<PredicateSpec> out;
    for (auto kind : {SchreierKind::any, SchreierKind::weak, SchreierKind::strong, SchreierKind::maximal})
        for (std::uint64_t gap : {0, 1, 2, 3})
            for (bool odd : {false, true})
                for (auto mc : {sz::MaxConstraint::none, sz::MaxConstraint::max_equals_n,
                                sz::MaxConstraint::contains_n})
                    for (auto par : {sz::MaxParity::any, sz::MaxParity::even, sz::MaxParity::odd})
                        for (bool empty : {false, true}) {
                            PredicateSpec s;
                            s.schreier = kind;
                            if (gap) s.zeckendorf_gap = gap;
                            s.odd_gaps_only = odd;
                            s.max_constraint = mc;
                            s.max_parity = par;
                            s.include_empty = empty;
                            out.push_back(s);
                        }
    return out;
}
}  // namespace

TEST_CASE("weak-Schreier subsets of {1,2,3}") {
    PredicateSpec spec;
    spec.schreier = SchreierKind::weak;
    spec.include_empty = true;
    const std::vector<FiniteSet> expected{{}, {1}, {2}, {3}, {2, 3}};
    CHECK(collect(3, spec) == expected);
    CHECK(sz::count_matching(3, spec) == 5);
}

TEST_CASE("Zeckendorf subsets of {1,2}") {
    PredicateSpec spec;
    spec.zeckendorf_gap = 2;
    spec.include_empty = true;
    const std::vector<FiniteSet> expected{{}, {1}, {2}};
    CHECK(collect(2, spec) == expected);
    CHECK(sz::count_matching(2, spec) == 3);
}

TEST_CASE("maximal sets with max 1") {
    PredicateSpec spec;
    spec.schreier = SchreierKind::maximal;
    spec.max_constraint = sz::MaxConstraint::max_equals_n;
    CHECK(collect(1, spec) == std::vector<FiniteSet>{{1}});
}

TEST_CASE("weak 2-Zeckendorf sets containing 4") {
    PredicateSpec spec;
    spec.schreier = SchreierKind::weak;
    spec.zeckendorf_gap = 2;
    spec.max_constraint = sz::MaxConstraint::contains_n;
    CHECK(sz::count_matching(4, spec) == 2);
    const std::vector<FiniteSet> expected{{4}, {2, 4}};
    CHECK(collect(4, spec) == expected);
}

TEST_CASE("empty set admission rules") {
    PredicateSpec spec;
    spec.include_empty = true;
    spec.schreier = SchreierKind::maximal;
    CHECK(collect(1, spec) == std::vector<FiniteSet>{{1}});
    spec.schreier = SchreierKind::strong;
    spec.max_parity = sz::MaxParity::odd;
    CHECK(collect(1, spec) == std::vector<FiniteSet>{{}});
    spec.max_constraint = sz::MaxConstraint::max_equals_n;
    CHECK(collect(1, spec).empty());
}

TEST_CASE("ceiling and domain errors") {
    PredicateSpec spec;
    sz::EnumerateOptions opts;
    opts.ceiling = 10;
    CHECK_THROWS_AS(sz::count_matching(11, spec, opts), sz::BoundExceeded);
    CHECK_THROWS_AS(sz::enumerate_matching(11, spec, opts), sz::BoundExceeded);
    CHECK_NOTHROW(sz::count_matching(10, spec, opts));
    CHECK_THROWS_AS(sz::count_matching(0, spec), sz::DomainError);
    CHECK_THROWS_AS(sz::count_matching(40, spec), sz::BoundExceeded);
    spec.zeckendorf_gap = 0;
    CHECK_THROWS_AS(sz::count_matching(3, spec), sz::DomainError);
}

TEST_CASE("SZ_ORACLE_CEILING overrides the default") {
    CHECK(sz::EnumerateOptions::default_ceiling() == 30);
    ::setenv("SZ_ORACLE_CEILING", "12", 1);
    CHECK(sz::EnumerateOptions::default_ceiling() == 12);
    ::setenv("SZ_ORACLE_CEILING", "garbage", 1);
    CHECK(sz::EnumerateOptions::default_ceiling() == 30);
    ::setenv("SZ_ORACLE_CEILING", "99", 1);
    CHECK(sz::EnumerateOptions::default_ceiling() == 30);
    ::unsetenv("SZ_ORACLE_CEILING");
}

TEST_CASE("stream agrees with count and with set-level predicates") {
    // PredicateSpec::matches works on FiniteSet via the sets module, independent
    // of the bitmask fast path the enumerator uses.
    for (unsigned n : {1u, 2u, 5u, 9u}) {
        const auto all = collect(n, PredicateSpec{.include_empty = true});
        REQUIRE(all.size() == (std::size_t{1} << n));
        for (const auto& spec : spec_grid()) {
            std::size_t by_predicate = 0;
            for (const auto& s : all) by_predicate += spec.matches(s, n);
            const auto streamed = collect(n, spec);
            REQUIRE(streamed.size() == by_predicate);
            REQUIRE(sz::count_matching(n, spec) == by_predicate);
            for (const auto& s : streamed) REQUIRE(spec.matches(s, n));
        }
    }
}

TEST_CASE("stream length equals count at n = 16") {
    for (const auto& spec : {PredicateSpec{.schreier = SchreierKind::weak, .include_empty = true},
                             PredicateSpec{.zeckendorf_gap = 3, .odd_gaps_only = true},
                             PredicateSpec{.schreier = SchreierKind::maximal,
                                           .max_constraint = sz::MaxConstraint::contains_n}}) {
        std::size_t streamed = 0;
        sz::for_each_matching(16, spec, [&](const FiniteSet&) { ++streamed; });
        CHECK(sz::count_matching(16, spec) == streamed);
    }
}

TEST_CASE("relaxing a filter never lowers the count") {
    const unsigned n = 10;
    for (const auto& spec : spec_grid()) {
        const auto base = sz::count_matching(n, spec);
        PredicateSpec relaxed = spec;
        relaxed.schreier = SchreierKind::any;
        CHECK(sz::count_matching(n, relaxed) >= base);
        relaxed = spec;
        relaxed.zeckendorf_gap.reset();
        CHECK(sz::count_matching(n, relaxed) >= base);
        relaxed = spec;
        relaxed.odd_gaps_only = false;
        CHECK(sz::count_matching(n, relaxed) >= base);
        relaxed = spec;
        relaxed.max_parity = sz::MaxParity::any;
        CHECK(sz::count_matching(n, relaxed) >= base);
        relaxed = spec;
        relaxed.include_empty = true;
        CHECK(sz::count_matching(n, relaxed) >= base);
    }
}

TEST_CASE("strong plus maximal equals weak under max = n") {
    for (unsigned n = 1; n <= 16; ++n) {
        PredicateSpec spec{.max_constraint = sz::MaxConstraint::max_equals_n};
        spec.schreier = SchreierKind::strong;
        const auto strong = sz::count_matching(n, spec);
        spec.schreier = SchreierKind::maximal;
        const auto maximal = sz::count_matching(n, spec);
        spec.schreier = SchreierKind::weak;
        CHECK(strong + maximal == sz::count_matching(n, spec));
    }
}

TEST_CASE("count is independent of the thread count") {
    const PredicateSpec spec{.schreier = SchreierKind::weak, .zeckendorf_gap = 2};
    sz::EnumerateOptions one;
    one.threads = 1;
    sz::EnumerateOptions many;
    many.threads = 7;
    CHECK(sz::count_matching(20, spec, one) == sz::count_matching(20, spec, many));
}
