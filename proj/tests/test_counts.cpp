#include <doctest.h>

#include <functional>
#include <vector>

#include "sz/counts.hpp"
#include "sz/fib.hpp"
#include "sz/verify.hpp"

using namespace sz;

TEST_CASE("M, A, B") {
    CHECK(count_M(1) == 1);
    CHECK(count_M(4) == 3);
    CHECK(count_M(9) == 34);

    CHECK(count_A(1) == 0);
    CHECK(count_A(4) == 2);
    CHECK(count_A(5) == 3);

    CHECK(count_B(1) == 1);
    CHECK(count_B(2) == 0);
    CHECK(count_B(5) == 2);
}

TEST_CASE("A base values") {
    const std::vector<int> expected{0, 1, 1, 2, 3};
    for (int n = 1; n <= 5; ++n) CHECK(count_A(n) == expected[n - 1]);
}

TEST_CASE("A via the binomial double sum") {
    CHECK(count_A_binomial(2) == 1);
    CHECK(count_A_binomial(4) == 2);
    CHECK(count_A_binomial(10) == 34);
    // the formula's +1 overcounts at n = 1
    CHECK_THROWS_AS(count_A_binomial(1), DomainError);
}

TEST_CASE("C, D, E") {
    CHECK(count_C(1) == 2);
    CHECK(count_C(3) == 5);
    CHECK(count_C(7) == 34);
    CHECK(count_D(1) == 1);
    CHECK(count_D(3) == 3);
    CHECK(count_D(8) == 34);
    CHECK(count_E(1) == 2);
    CHECK(count_E(2) == 3);
    CHECK(count_E(3) == 5);
}

TEST_CASE("parity corollaries") {
    CHECK(count_Lw(2) == 2);
    CHECK(count_Lw(3) == 2);
    CHECK(count_Lw(4) == 5);
    CHECK(count_Ls(1) == 1);
    CHECK(count_Ls(3) == 2);
    CHECK(count_Ls(4) == 2);
}

TEST_CASE("H, I, J recurrences") {
    CHECK(count_H(2, 3) == 1);
    CHECK(count_H(2, 4) == 2);
    CHECK(count_H(2, 7) == 6);

    CHECK(count_I(2, 1) == 0);
    CHECK(count_I(2, 4) == 1);
    CHECK(count_I(2, 5) == 2);

    CHECK(count_J(2, 1) == 1);
    CHECK(count_J(2, 3) == 0);
    // J_{2,4..6} = 1, then 2, 3, 4
    CHECK(count_J(2, 7) == 2);
    CHECK(count_J(2, 9) == 4);
}

TEST_CASE("H closed form") {
    CHECK(count_H_binomial(2, 2) == 1);
    CHECK(count_H_binomial(2, 4) == 2);
    // binom(5,1) + binom(2,2) + 1
    CHECK(count_H_binomial(3, 9) == 7);
    CHECK(count_H(3, 9) == 7);
}

TEST_CASE("P and Q") {
    CHECK(count_P(1) == 1);
    CHECK(count_P(2) == 2);
    CHECK(count_P(3) == 3);
    CHECK(count_Q(1) == 2);
    CHECK(count_Q(2) == 4);
    CHECK(count_Q(3) == 7);
}

TEST_CASE("domain errors") {
    for (auto* f : {&count_M, &count_A, &count_B, &count_C, &count_D, &count_E, &count_Lw,
                    &count_Ls, &count_P, &count_Q}) {
        CHECK_THROWS_AS(f(0), DomainError);
    }
    CHECK_THROWS_AS(count_H(1, 5), DomainError);
    CHECK_THROWS_AS(count_I(2, 0), DomainError);
    CHECK_THROWS_AS(count_J(0, 3), DomainError);
    CHECK_THROWS_AS(count_H_binomial(1, 3), DomainError);
    CHECK_THROWS_AS(SequenceFamily(Family::H), DomainError);
    CHECK_THROWS_AS(SequenceFamily(Family::C, 2), DomainError);
    CHECK_THROWS_AS(SequenceFamily(Family::J, 1), DomainError);
    CHECK_NOTHROW(SequenceFamily(Family::J, 1, GapPolicy::allow_k1));
}

TEST_CASE("binomial convention") {
    CHECK(binomial(0, 0) == 1);
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(3, 4) == 0);
    CHECK(binomial(3, -1) == 0);
    CHECK(binomial(-2, 1) == 0);
    CHECK(binomial(100, 50) == Count("100891344545564193334812497256"));
}

TEST_CASE("floor_div rounds toward negative infinity") {
    CHECK(floor_div(7, 3) == 2);
    CHECK(floor_div(-1, 6) == -1);
    CHECK(floor_div(-6, 3) == -2);
    CHECK(floor_div(-7, 3) == -3);
    CHECK(floor_div(0, 5) == 0);
}

TEST_CASE("identities over n <= 200") {
    Count sum_m = 0;
    Count sum_a = 0;
    for (int n = 1; n <= 200; ++n) {
        sum_m += count_M(n);
        sum_a += count_A(n);
        REQUIRE(count_M(n) == count_A(n) + count_B(n));
        REQUIRE(count_C(n) == sum_m + 1);
        REQUIRE(count_D(n) == sum_a + 1);
        if (n >= 2) REQUIRE(count_A_binomial(n) == count_A(n));
    }
}

TEST_CASE("H closed form equals recurrence, k = 2..10, n = 1..200") {
    for (int k = 2; k <= 10; ++k) {
        for (int n = 1; n <= 200; ++n) REQUIRE(count_H_binomial(k, n) == count_H(k, n));
    }
}

TEST_CASE("k = 1 extension reduces H, I, J to M, A, B") {
    for (int n = 1; n <= 20; ++n) {
        CHECK(count_H(1, n, GapPolicy::allow_k1) == count_M(n));
        CHECK(count_H_binomial(1, n, GapPolicy::allow_k1) == count_M(n));
        CHECK(count_I(1, n, GapPolicy::allow_k1) == count_A(n));
        CHECK(count_J(1, n, GapPolicy::allow_k1) == count_B(n));
    }
}

TEST_CASE("floor claims") {
    auto all = [](const FloorClaims& c) { return c.all_hold(); };
    const auto ten = check_floor_claims(10, 2);
    CHECK(all(ten));
    CHECK(ten.claim1.applicable);
    CHECK(ten.claim3.applicable);
    CHECK_FALSE(ten.claim2.applicable);

    const auto nine = check_floor_claims(9, 2);
    CHECK(all(nine));
    CHECK(nine.claim2.applicable);
    CHECK_FALSE(nine.claim1.applicable);

    const auto small = check_floor_claims(7, 5);  // n = k + 2
    CHECK(all(small));
    // floor(5/6) = 0 and floor(0/6) = 0: claims 1 and 3 apply
    CHECK(small.claim1.applicable);
    CHECK(small.claim3.applicable);

    CHECK_THROWS_AS(check_floor_claims(3, 1), DomainError);
    for (int k = 2; k <= 50; ++k)
        for (int n = -60; n <= 2000; ++n) REQUIRE(all(check_floor_claims(n, k)));
}

namespace {
// Ordered tuples (y_1..y_p) with y_i >= c_i summing to n, by exhaustive search.
std::uint64_t brute_compositions(std::uint64_t n, const std::vector<std::uint64_t>& bounds) {
    std::uint64_t found = 0;
    std::function<void(std::size_t, std::uint64_t)> go = [&](std::size_t i, std::uint64_t left) {
        if (i + 1 == bounds.size()) {
            found += left >= bounds[i];
            return;
        }
        for (std::uint64_t y = bounds[i]; y <= left; ++y) go(i + 1, left - y);
    };
    go(0, n);
    return found;
}
}  // namespace

TEST_CASE("count_compositions examples") {
    CHECK(count_compositions(5, std::vector<std::uint64_t>{1, 2}) == 3);
    CHECK(count_compositions(3, std::vector<std::uint64_t>{0, 0, 0}) == 10);
    CHECK(count_compositions(4, std::vector<std::uint64_t>{5}) == 0);
    CHECK_THROWS_AS(count_compositions(4, std::vector<std::uint64_t>{}), DomainError);
}

TEST_CASE("count_compositions matches brute force") {
    for (std::uint64_t n = 0; n <= 12; ++n) {
        for (std::size_t p = 1; p <= 4; ++p) {
            std::vector<std::uint64_t> bounds(p, 0);
            while (true) {
                REQUIRE(count_compositions(n, bounds) == brute_compositions(n, bounds));
                std::size_t i = 0;
                while (i < p && bounds[i] == 3) bounds[i++] = 0;
                if (i == p) break;
                ++bounds[i];
            }
        }
    }
}

TEST_CASE("family names round trip") {
    for (Family f : all_families()) CHECK(parse_family(family_name(f)) == f);
    CHECK_FALSE(parse_family("Z").has_value());
    CHECK(SequenceFamily(Family::H, 3).name() == "H(k=3)");
}

TEST_CASE("values() agrees with value() pointwise") {
    for (Family f : all_families()) {
        const SequenceFamily fam = needs_gap(f) ? SequenceFamily(f, 3) : SequenceFamily(f);
        const auto vs = values(fam, fam.min_n(), 40);
        for (std::int64_t n = fam.min_n(); n <= 40; ++n) {
            REQUIRE(vs[static_cast<std::size_t>(n - fam.min_n())] == value(fam, n));
        }
    }
}

TEST_CASE("verify_family") {
    const auto c = verify_family(SequenceFamily(Family::C), 10);
    CHECK(c.overall_pass);
    REQUIRE(c.rows.size() == 10);
    CHECK(c.rows[2].n == 3);
    CHECK(c.rows[2].oracle == 5);
    CHECK(c.rows[2].formula == 5);
    CHECK_FALSE(c.rows[2].recurrence.has_value());

    const auto h = verify_family(SequenceFamily(Family::H, 2), 12);
    CHECK(h.overall_pass);
    CHECK(h.rows[3].oracle == 2);
    CHECK(h.rows[3].formula == 2);
    CHECK(h.rows[3].recurrence == Count{2});

    const auto m = verify_family(SequenceFamily(Family::M), 9);
    const std::vector<int> listed{1, 1, 2, 3, 5, 8, 13, 21, 34};
    for (std::size_t i = 0; i < listed.size(); ++i) CHECK(m.rows[i].oracle == listed[i]);
    CHECK(m.first_failure() == nullptr);

    const auto ab = verify_family(SequenceFamily(Family::A_binomial), 8);
    CHECK(ab.rows.front().n == 2);
    CHECK(ab.overall_pass);

    sz::EnumerateOptions low;
    low.ceiling = 8;
    CHECK_THROWS_AS(verify_family(SequenceFamily(Family::C), 9, low), BoundExceeded);
}

TEST_CASE("every family matches the oracle for n <= 16") {
    for (Family f : all_families()) {
        if (needs_gap(f)) {
            for (int k = 2; k <= 5; ++k) CHECK(verify_family(SequenceFamily(f, k), 16).overall_pass);
        } else {
            CHECK(verify_family(SequenceFamily(f), 16).overall_pass);
        }
    }
}

TEST_CASE("H = I + J") {
    for (int k = 2; k <= 10; ++k)
        for (int n = 1; n <= 100; ++n) REQUIRE(count_H(k, n) == count_I(k, n) + count_J(k, n));
}
