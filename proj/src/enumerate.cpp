#include "sz/enumerate.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cstdlib>
#include <cstring>
#include <future>
#include <thread>
#include <vector>

namespace sz {

namespace detail {

bool mask_matches(std::uint64_t mask, unsigned n, const PredicateSpec& spec) noexcept {
    if (mask == 0) {
        return spec.include_empty && spec.max_constraint == MaxConstraint::none &&
               spec.schreier != SchreierKind::maximal;
    }
    const auto size = static_cast<unsigned>(std::popcount(mask));
    const auto min = static_cast<unsigned>(std::countr_zero(mask)) + 1;
    const auto max = 64u - static_cast<unsigned>(std::countl_zero(mask));

    switch (spec.schreier) {
        case SchreierKind::any: break;
        case SchreierKind::weak:
            if (min < size) return false;
            break;
        case SchreierKind::strong:
            if (min <= size) return false;
            break;
        case SchreierKind::maximal:
            if (min != size) return false;
            break;
    }
    if (spec.max_constraint != MaxConstraint::none && max != n) return false;
    if (spec.max_parity == MaxParity::even && max % 2 != 0) return false;
    if (spec.max_parity == MaxParity::odd && max % 2 == 0) return false;

    if (spec.zeckendorf_gap) {
        // gap >= k  <=>  no two set bits at distance 1..k-1
        const std::uint64_t k = *spec.zeckendorf_gap;
        for (std::uint64_t d = 1; d < k && d < 64; ++d) {
            if (mask & (mask >> d)) return false;
        }
    }
    if (spec.odd_gaps_only) {
        std::uint64_t rest = mask & (mask - 1);
        unsigned prev = min - 1;
        while (rest) {
            const auto cur = static_cast<unsigned>(std::countr_zero(rest));
            if ((cur - prev) % 2 == 0) return false;
            prev = cur;
            rest &= rest - 1;
        }
    }
    return true;
}

FiniteSet mask_to_set(std::uint64_t mask) {
    std::vector<Element> out;
    out.reserve(static_cast<std::size_t>(std::popcount(mask)));
    while (mask) {
        out.push_back(static_cast<Element>(std::countr_zero(mask)) + 1);
        mask &= mask - 1;
    }
    return FiniteSet::from_sorted(std::move(out));
}

}  // namespace detail

bool PredicateSpec::matches(const FiniteSet& s, unsigned n) const {
    if (s.empty()) return detail::mask_matches(0, n, *this);
    if (*s.max() > n) return false;
    switch (schreier) {
        case SchreierKind::any: break;
        case SchreierKind::weak:
            if (!is_weak_schreier(s)) return false;
            break;
        case SchreierKind::strong:
            if (!is_strong_schreier(s)) return false;
            break;
        case SchreierKind::maximal:
            if (!is_maximal_schreier(s)) return false;
            break;
    }
    if (max_constraint != MaxConstraint::none && !s.contains(n)) return false;
    const Element max = *s.max();
    if (max_parity == MaxParity::even && max % 2 != 0) return false;
    if (max_parity == MaxParity::odd && max % 2 == 0) return false;
    if (zeckendorf_gap && !is_k_zeckendorf(s, *zeckendorf_gap)) return false;
    if (odd_gaps_only && !has_odd_gaps(s)) return false;
    return true;
}

unsigned EnumerateOptions::default_ceiling() {
    const char* env = std::getenv("SZ_ORACLE_CEILING");
    if (env == nullptr) return kDefaultCeiling;
    unsigned value = 0;
    const char* end = env + std::strlen(env);
    const auto [ptr, ec] = std::from_chars(env, end, value);
    if (ec != std::errc{} || ptr != end || value < 1 || value > kHardCeiling) {
        return kDefaultCeiling;
    }
    return value;
}

namespace {
void check_bounds(unsigned n, const PredicateSpec& spec, const EnumerateOptions& opts) {
    if (n < 1) throw DomainError("ambient n must be >= 1");
    const unsigned ceiling = std::min(opts.ceiling, EnumerateOptions::kHardCeiling);
    if (n > ceiling) throw BoundExceeded(n, ceiling);
    if (spec.zeckendorf_gap && *spec.zeckendorf_gap < 1) {
        throw DomainError("zeckendorf gap k must be >= 1");
    }
}
}  // namespace

SubsetStream::SubsetStream(unsigned n, PredicateSpec spec, const EnumerateOptions& opts)
    : n_(n), spec_(std::move(spec)), limit_(0) {
    check_bounds(n, spec_, opts);
    limit_ = std::uint64_t{1} << n;
}

void SubsetStream::iterator::settle() {
    while (mask_ < owner_->limit_ && !detail::mask_matches(mask_, owner_->n_, owner_->spec_)) {
        ++mask_;
    }
}

FiniteSet SubsetStream::iterator::operator*() const { return detail::mask_to_set(mask_); }

SubsetStream::iterator& SubsetStream::iterator::operator++() {
    ++mask_;
    settle();
    return *this;
}

SubsetStream::iterator SubsetStream::begin() const {
    iterator it(this, 0);
    it.settle();
    return it;
}

SubsetStream::iterator SubsetStream::end() const { return iterator(this, limit_); }

SubsetStream enumerate_matching(unsigned n, const PredicateSpec& spec,
                                const EnumerateOptions& opts) {
    return SubsetStream(n, spec, opts);
}

void for_each_matching(unsigned n, const PredicateSpec& spec,
                       const std::function<void(const FiniteSet&)>& visit,
                       const EnumerateOptions& opts) {
    for (const FiniteSet& s : SubsetStream(n, spec, opts)) visit(s);
}

Count count_matching(unsigned n, const PredicateSpec& spec, const EnumerateOptions& opts) {
    check_bounds(n, spec, opts);
    const std::uint64_t limit = std::uint64_t{1} << n;

    auto count_range = [&spec, n](std::uint64_t lo, std::uint64_t hi) {
        std::uint64_t c = 0;
        for (std::uint64_t m = lo; m < hi; ++m) c += detail::mask_matches(m, n, spec);
        return c;
    };

    unsigned threads = opts.threads ? opts.threads : std::max(1u, std::thread::hardware_concurrency());
    // small ranges are not worth a thread
    if (n < 18) threads = 1;
    if (threads == 1) return Count{count_range(0, limit)};

    const std::uint64_t chunk = (limit + threads - 1) / threads;
    std::vector<std::future<std::uint64_t>> parts;
    for (std::uint64_t lo = 0; lo < limit; lo += chunk) {
        parts.push_back(std::async(std::launch::async, count_range, lo, std::min(limit, lo + chunk)));
    }
    Count total = 0;
    for (auto& p : parts) total += p.get();
    return total;
}

}  // namespace sz
