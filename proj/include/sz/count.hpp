#pragma once

#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace sz {

/// Exact nonnegative counting value. Sequence values outgrow 64 bits near
/// n = 92, so everything that counts sets is arbitrary precision.
using Count = boost::multiprecision::cpp_int;

inline std::string to_string(const Count& c) { return c.str(); }

/// An argument outside the mathematical domain of an operation
/// (fib index below -1, n < 1, k < 2 ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Exhaustive enumeration was asked for an ambient n above the oracle ceiling.
class BoundExceeded : public std::out_of_range {
public:
    BoundExceeded(unsigned n, unsigned ceiling)
        : std::out_of_range("n = " + std::to_string(n) + " exceeds the oracle ceiling of " +
                            std::to_string(ceiling)),
          n_(n), ceiling_(ceiling) {}

    unsigned n() const noexcept { return n_; }
    unsigned ceiling() const noexcept { return ceiling_; }

private:
    unsigned n_;
    unsigned ceiling_;
};

}  // namespace sz
