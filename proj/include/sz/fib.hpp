#pragma once

#include <cstdint>
#include <mutex>
#include <shared_mutex>
#include <vector>

#include "sz/count.hpp"

namespace sz {

/// Fibonacci index with F_{-1} = 1, F_0 = 0, F_1 = 1. Nothing below -1 exists.
class FibIndex {
public:
    static constexpr std::int64_t kMin = -1;

    explicit FibIndex(std::int64_t i);

    std::int64_t value() const noexcept { return i_; }

private:
    std::int64_t i_;
};

/// Growable memo table of Fibonacci numbers. Extension is iterative and
/// guarded by a shared mutex, so one table can serve many reader threads.
class FibTable {
public:
    FibTable();

    Count at(FibIndex i) const;

    /// Number of memoized entries (F_{-1} .. F_{size-2}).
    std::size_t size() const;

private:
    void grow_to(std::size_t slot) const;

    mutable std::shared_mutex mutex_;
    // slot s holds F_{s-1}
    mutable std::vector<Count> values_;
};

/// F_i from a process-wide table. Throws DomainError for i < -1.
Count fib(std::int64_t i);

/// Sum of F_1..F_n, evaluated as F_{n+2} - 1. Throws DomainError for n < 1.
Count fib_prefix_sum(std::int64_t n);

}  // namespace sz
