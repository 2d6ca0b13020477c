#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sz/count.hpp"
#include "sz/enumerate.hpp"

namespace sz {

enum class Family { M, A, A_binomial, B, C, D, E, Lw, Ls, H, I, J, P, Q };

/// Whether the gap parameter of H/I/J may be 1. The sequences are only
/// defined for k >= 2; k = 1 is an opt-in extension.
enum class GapPolicy { require_k2, allow_k1 };

/// A counting sequence plus its gap parameter (present exactly for H, I, J).
class SequenceFamily {
public:
    /// Throws DomainError when k is missing for H/I/J, given for any other
    /// family, or below the minimum allowed by policy.
    SequenceFamily(Family tag, std::optional<std::int64_t> k = std::nullopt,
                   GapPolicy policy = GapPolicy::require_k2);

    Family tag() const noexcept { return tag_; }
    std::optional<std::int64_t> k() const noexcept { return k_; }
    GapPolicy policy() const noexcept { return policy_; }

    /// "C", "H(k=2)" ...
    std::string name() const;

    /// Smallest n where the family's closed form is valid (2 for A_binomial, else 1).
    std::int64_t min_n() const noexcept;

    friend bool operator==(const SequenceFamily& a, const SequenceFamily& b) {
        return a.tag_ == b.tag_ && a.k_ == b.k_;
    }

private:
    Family tag_;
    std::optional<std::int64_t> k_;
    GapPolicy policy_;
};

std::string_view family_name(Family f) noexcept;
std::optional<Family> parse_family(std::string_view name) noexcept;
bool needs_gap(Family f) noexcept;
/// Every family tag in declaration order.
std::span<const Family> all_families() noexcept;

// binom(a, b) = 0 when b < 0 or b > a (so also for a < 0); binom(0, 0) = 1.
Count binomial(std::int64_t a, std::int64_t b);

/// Floor division rounding toward negative infinity. divisor must be > 0.
std::int64_t floor_div(std::int64_t numerator, std::int64_t divisor);

// Schreier counts by maximum / within {1..n}. All throw DomainError for n < 1.
Count count_M(std::int64_t n);
Count count_A(std::int64_t n);
/// Strong-Schreier sets with max n via the double binomial sum over the
/// minimum element. Valid for n >= 2; throws DomainError below.
Count count_A_binomial(std::int64_t n);
Count count_B(std::int64_t n);
Count count_C(std::int64_t n);
Count count_D(std::int64_t n);
Count count_E(std::int64_t n);
Count count_Lw(std::int64_t n);
Count count_Ls(std::int64_t n);

// k-Zeckendorf sets containing n that are weak (H), strong (I) or maximal (J)
// Schreier. Linear DP over n.
Count count_H(std::int64_t k, std::int64_t n, GapPolicy policy = GapPolicy::require_k2);
Count count_I(std::int64_t k, std::int64_t n, GapPolicy policy = GapPolicy::require_k2);
Count count_J(std::int64_t k, std::int64_t n, GapPolicy policy = GapPolicy::require_k2);

/// H_{k,n} as 1 + sum over l = 1..floor((n-1)/(k+1)) of binom(n - k*l - 1, l).
Count count_H_binomial(std::int64_t k, std::int64_t n, GapPolicy policy = GapPolicy::require_k2);

// Odd-gap subsets: containing n (P) and unrestricted (Q).
Count count_P(std::int64_t n);
Count count_Q(std::int64_t n);

/// Solutions of y_1 + ... + y_p = n with y_i >= lower_bounds[i].
/// Zero when the bounds exceed n. Throws DomainError when lower_bounds is empty.
Count count_compositions(std::uint64_t n, std::span<const std::uint64_t> lower_bounds);

struct ClaimCheck {
    bool applicable = false;
    bool holds = true;  // true when not applicable

    friend bool operator==(const ClaimCheck&, const ClaimCheck&) = default;
};

/// The three floor-function claims used to prove the H recurrence, with
/// d = k + 1:
///   1. floor((n-2)/d) == floor((n-k-2)/d)  =>  floor((n-1)/d) == floor((n-2)/d) + 1
///   2. floor((n-2)/d) >  floor((n-k-2)/d)  =>  floor((n-1)/d) <  floor((n-2)/d) + 1
///   3. floor((n-k-2)/d) == floor((n-2)/d)  =>  (n-k-2)/d == floor((n-2)/d) exactly
struct FloorClaims {
    ClaimCheck claim1;
    ClaimCheck claim2;
    ClaimCheck claim3;

    bool all_hold() const noexcept { return claim1.holds && claim2.holds && claim3.holds; }
};

/// Throws DomainError for k < 2.
FloorClaims check_floor_claims(std::int64_t n, std::int64_t k);

/// Closed form of the family at n: a Fibonacci expression, or the binomial
/// sum for A_binomial and H. None for I and J, which only have recurrences.
std::optional<Count> closed_form(const SequenceFamily& family, std::int64_t n);

/// Recurrence value for H, I, J; none otherwise.
std::optional<Count> recurrence(const SequenceFamily& family, std::int64_t n);

/// Primary evaluator: the recurrence where there is one, else the closed form.
Count value(const SequenceFamily& family, std::int64_t n);

/// value(family, n) for n in [from, to], sharing one DP pass for H/I/J.
std::vector<Count> values(const SequenceFamily& family, std::int64_t from, std::int64_t to);

/// Filter whose oracle count over subsets of {1..n} is the family's n-th term.
PredicateSpec oracle_spec(const SequenceFamily& family);

}  // namespace sz
