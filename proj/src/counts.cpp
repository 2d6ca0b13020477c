#include "sz/counts.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <string>

#include "sz/fib.hpp"

namespace sz {

namespace {

constexpr std::array kFamilies{Family::M, Family::A,  Family::A_binomial, Family::B, Family::C,
                               Family::D, Family::E,  Family::Lw,         Family::Ls, Family::H,
                               Family::I, Family::J,  Family::P,          Family::Q};

void require_n(std::int64_t n, std::int64_t least, const char* what) {
    if (n < least) {
        throw DomainError(std::string(what) + " requires n >= " + std::to_string(least) +
                          ", got " + std::to_string(n));
    }
}

void require_k(std::int64_t k, GapPolicy policy, const char* what) {
    const std::int64_t least = policy == GapPolicy::allow_k1 ? 1 : 2;
    if (k < least) {
        throw DomainError(std::string(what) + " requires k >= " + std::to_string(least) +
                          ", got " + std::to_string(k));
    }
}

struct GapRecurrence {
    // value for 1 <= m <= cutoff, where cutoff is the last base index
    Count (*base)(std::int64_t m, std::int64_t k);
    std::int64_t (*cutoff)(std::int64_t k);
};

const GapRecurrence kH{
    [](std::int64_t, std::int64_t) { return Count{1}; },
    [](std::int64_t k) { return k + 1; },
};

const GapRecurrence kI{
    [](std::int64_t m, std::int64_t) { return Count{m == 1 ? 0 : 1}; },
    [](std::int64_t k) { return k + 2; },
};

const GapRecurrence kJ{
    [](std::int64_t m, std::int64_t k) { return Count{m == 1 ? 1 : (m <= k + 1 ? 0 : 1)}; },
    [](std::int64_t k) { return 2 * k + 2; },
};

/// Terms 1..n of x_m = x_{m-1} + x_{m-(k+1)} past the base block; index 0 unused.
std::vector<Count> gap_dp(const GapRecurrence& rec, std::int64_t k, std::int64_t n) {
    std::vector<Count> x(static_cast<std::size_t>(n) + 1);
    const std::int64_t cutoff = rec.cutoff(k);
    for (std::int64_t m = 1; m <= n; ++m) {
        const auto i = static_cast<std::size_t>(m);
        x[i] = m <= cutoff ? rec.base(m, k) : x[i - 1] + x[i - static_cast<std::size_t>(k + 1)];
    }
    return x;
}

const GapRecurrence& recurrence_for(Family f) {
    switch (f) {
        case Family::H: return kH;
        case Family::I: return kI;
        default: return kJ;
    }
}

}  // namespace

std::string_view family_name(Family f) noexcept {
    switch (f) {
        case Family::M: return "M";
        case Family::A: return "A";
        case Family::A_binomial: return "A_binomial";
        case Family::B: return "B";
        case Family::C: return "C";
        case Family::D: return "D";
        case Family::E: return "E";
        case Family::Lw: return "Lw";
        case Family::Ls: return "Ls";
        case Family::H: return "H";
        case Family::I: return "I";
        case Family::J: return "J";
        case Family::P: return "P";
        case Family::Q: return "Q";
    }
    return "?";
}

std::optional<Family> parse_family(std::string_view name) noexcept {
    for (Family f : kFamilies) {
        if (family_name(f) == name) return f;
    }
    return std::nullopt;
}

bool needs_gap(Family f) noexcept { return f == Family::H || f == Family::I || f == Family::J; }

std::span<const Family> all_families() noexcept { return kFamilies; }

SequenceFamily::SequenceFamily(Family tag, std::optional<std::int64_t> k, GapPolicy policy)
    : tag_(tag), k_(k), policy_(policy) {
    const std::string name(family_name(tag));
    if (needs_gap(tag)) {
        if (!k) throw DomainError("family " + name + " requires --k");
        require_k(*k, policy, name.c_str());
    } else if (k) {
        throw DomainError("family " + name + " takes no k");
    }
}

std::string SequenceFamily::name() const {
    std::string out(family_name(tag_));
    if (k_) out += "(k=" + std::to_string(*k_) + ")";
    return out;
}

std::int64_t SequenceFamily::min_n() const noexcept { return tag_ == Family::A_binomial ? 2 : 1; }

Count binomial(std::int64_t a, std::int64_t b) {
    if (b < 0 || a < 0 || b > a) return 0;
    b = std::min(b, a - b);
    Count c = 1;
    for (std::int64_t i = 1; i <= b; ++i) {
        c *= a - b + i;
        c /= i;
    }
    return c;
}

std::int64_t floor_div(std::int64_t numerator, std::int64_t divisor) {
    std::int64_t q = numerator / divisor;
    if ((numerator % divisor != 0) && ((numerator < 0) != (divisor < 0))) --q;
    return q;
}

Count count_M(std::int64_t n) {
    require_n(n, 1, "M");
    return fib(n);
}

Count count_A(std::int64_t n) {
    require_n(n, 1, "A");
    return fib(n - 1);
}

Count count_A_binomial(std::int64_t n) {
    require_n(n, 2, "A_binomial");
    // min element m leaves n-m-1 candidates strictly between m and n, of
    // which a strong-Schreier set can take at most m-3
    Count total = 1;  // {n}
    for (std::int64_t m = 1; m <= n - 1; ++m) {
        const std::int64_t pool = n - m - 1;
        Count term = 1;  // binom(pool, 0)
        for (std::int64_t j = 0; j <= m - 3; ++j) {
            if (term == 0) break;
            total += term;
            term = term * (pool - j) / (j + 1);
        }
    }
    return total;
}

Count count_B(std::int64_t n) {
    require_n(n, 1, "B");
    return fib(n - 2);
}

Count count_C(std::int64_t n) {
    require_n(n, 1, "C");
    return fib(n + 2);
}

Count count_D(std::int64_t n) {
    require_n(n, 1, "D");
    return fib(n + 1);
}

Count count_E(std::int64_t n) {
    require_n(n, 1, "E");
    return fib(n + 2);
}

Count count_Lw(std::int64_t n) {
    require_n(n, 1, "Lw");
    return n % 2 ? fib(n) : fib(n + 1);
}

Count count_Ls(std::int64_t n) {
    require_n(n, 1, "Ls");
    return n % 2 ? fib(n) : fib(n - 1);
}

Count count_H(std::int64_t k, std::int64_t n, GapPolicy policy) {
    require_k(k, policy, "H");
    require_n(n, 1, "H");
    return gap_dp(kH, k, n).back();
}

Count count_I(std::int64_t k, std::int64_t n, GapPolicy policy) {
    require_k(k, policy, "I");
    require_n(n, 1, "I");
    return gap_dp(kI, k, n).back();
}

Count count_J(std::int64_t k, std::int64_t n, GapPolicy policy) {
    require_k(k, policy, "J");
    require_n(n, 1, "J");
    return gap_dp(kJ, k, n).back();
}

Count count_H_binomial(std::int64_t k, std::int64_t n, GapPolicy policy) {
    require_k(k, policy, "H_binomial");
    require_n(n, 1, "H_binomial");
    Count total = 1;  // {n}
    const std::int64_t top = floor_div(n - 1, k + 1);
    for (std::int64_t l = 1; l <= top; ++l) total += binomial(n - k * l - 1, l);
    return total;
}

Count count_P(std::int64_t n) {
    require_n(n, 1, "P");
    return fib(n + 1);
}

Count count_Q(std::int64_t n) {
    require_n(n, 1, "Q");
    return fib(n + 3) - 1;
}

Count count_compositions(std::uint64_t n, std::span<const std::uint64_t> lower_bounds) {
    if (lower_bounds.empty()) throw DomainError("count_compositions needs at least one part");
    const std::uint64_t floor_sum =
        std::accumulate(lower_bounds.begin(), lower_bounds.end(), std::uint64_t{0});
    if (floor_sum > n) return 0;
    const auto parts = static_cast<std::int64_t>(lower_bounds.size());
    return binomial(static_cast<std::int64_t>(n - floor_sum) + parts - 1, parts - 1);
}

FloorClaims check_floor_claims(std::int64_t n, std::int64_t k) {
    if (k < 2) throw DomainError("check_floor_claims requires k >= 2");
    const std::int64_t d = k + 1;
    const std::int64_t a = floor_div(n - 2, d);
    const std::int64_t b = floor_div(n - k - 2, d);
    const std::int64_t c = floor_div(n - 1, d);

    FloorClaims out;
    if (a == b) out.claim1 = {true, c == a + 1};
    if (a > b) out.claim2 = {true, c < a + 1};
    // (n-k-2)/d equals the integer a exactly iff n-k-2 == a*d
    if (b == a) out.claim3 = {true, n - k - 2 == a * d};
    return out;
}

std::optional<Count> closed_form(const SequenceFamily& family, std::int64_t n) {
    switch (family.tag()) {
        case Family::M: return count_M(n);
        case Family::A: return count_A(n);
        case Family::A_binomial: return count_A_binomial(n);
        case Family::B: return count_B(n);
        case Family::C: return count_C(n);
        case Family::D: return count_D(n);
        case Family::E: return count_E(n);
        case Family::Lw: return count_Lw(n);
        case Family::Ls: return count_Ls(n);
        case Family::H: return count_H_binomial(*family.k(), n, family.policy());
        case Family::I:
        case Family::J: require_n(n, 1, "I/J"); return std::nullopt;
        case Family::P: return count_P(n);
        case Family::Q: return count_Q(n);
    }
    return std::nullopt;
}

std::optional<Count> recurrence(const SequenceFamily& family, std::int64_t n) {
    switch (family.tag()) {
        case Family::H: return count_H(*family.k(), n, family.policy());
        case Family::I: return count_I(*family.k(), n, family.policy());
        case Family::J: return count_J(*family.k(), n, family.policy());
        default: return std::nullopt;
    }
}

Count value(const SequenceFamily& family, std::int64_t n) {
    if (auto r = recurrence(family, n)) return *std::move(r);
    return *closed_form(family, n);
}

std::vector<Count> values(const SequenceFamily& family, std::int64_t from, std::int64_t to) {
    std::vector<Count> out;
    if (to < from) return out;
    require_n(from, family.min_n(), family.name().c_str());
    out.reserve(static_cast<std::size_t>(to - from + 1));
    if (needs_gap(family.tag())) {
        auto all = gap_dp(recurrence_for(family.tag()), *family.k(), to);
        out.assign(std::make_move_iterator(all.begin() + from), std::make_move_iterator(all.end()));
        return out;
    }
    for (std::int64_t n = from; n <= to; ++n) out.push_back(value(family, n));
    return out;
}

PredicateSpec oracle_spec(const SequenceFamily& family) {
    PredicateSpec spec;
    switch (family.tag()) {
        case Family::M:
            spec.schreier = SchreierKind::weak;
            spec.max_constraint = MaxConstraint::max_equals_n;
            break;
        case Family::A:
        case Family::A_binomial:
            spec.schreier = SchreierKind::strong;
            spec.max_constraint = MaxConstraint::max_equals_n;
            break;
        case Family::B:
            spec.schreier = SchreierKind::maximal;
            spec.max_constraint = MaxConstraint::max_equals_n;
            break;
        case Family::C:
            spec.schreier = SchreierKind::weak;
            spec.include_empty = true;
            break;
        case Family::D:
            spec.schreier = SchreierKind::strong;
            spec.include_empty = true;
            break;
        case Family::E:
            spec.zeckendorf_gap = 2;
            spec.include_empty = true;
            break;
        case Family::Lw:
            spec.schreier = SchreierKind::weak;
            spec.max_parity = MaxParity::even;
            spec.include_empty = true;
            break;
        case Family::Ls:
            spec.schreier = SchreierKind::strong;
            spec.max_parity = MaxParity::odd;
            spec.include_empty = true;
            break;
        case Family::H:
        case Family::I:
        case Family::J:
            spec.schreier = family.tag() == Family::H   ? SchreierKind::weak
                            : family.tag() == Family::I ? SchreierKind::strong
                                                        : SchreierKind::maximal;
            spec.zeckendorf_gap = static_cast<std::uint64_t>(*family.k());
            spec.max_constraint = MaxConstraint::contains_n;
            break;
        case Family::P:
            spec.odd_gaps_only = true;
            spec.max_constraint = MaxConstraint::contains_n;
            break;
        case Family::Q:
            spec.odd_gaps_only = true;
            spec.include_empty = true;
            break;
    }
    return spec;
}

}  // namespace sz
