#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include "sz/count.hpp"
#include "sz/enumerate.hpp"
#include "sz/sets.hpp"

namespace sz {

/// Which side condition an argument to forward/inverse failed.
enum class Violation { not_weak_schreier, not_zeckendorf, exceeds_n, bad_n };

class BijectionPreconditionError : public std::invalid_argument {
public:
    BijectionPreconditionError(Violation v, const std::string& what)
        : std::invalid_argument(what), violation_(v) {}

    Violation violation() const noexcept { return violation_; }

private:
    Violation violation_;
};

/// Weak-Schreier subset {a_1 < ... < a_k} of {1..n} to the Zeckendorf set
/// {a_i - (k - i)}. Every gap grows by one; the maximum is kept.
FiniteSet forward(const FiniteSet& a, std::uint64_t n);

/// Zeckendorf subset {c_1 < ... < c_k} of {1..n} to {c_i + (k - i)}.
FiniteSet inverse(const FiniteSet& c, std::uint64_t n);

struct BijectionCheckReport {
    std::uint64_t n = 0;
    Count domain_size;
    Count image_size;
    bool all_images_in_Y = false;
    bool round_trip_ok = false;
    bool is_bijection = false;
};

/// Enumerate X_n, map it forward and compare the image against an
/// independent enumeration of Y_n. Propagates BoundExceeded.
BijectionCheckReport verify_bijection(std::uint64_t n, const EnumerateOptions& opts = {});

}  // namespace sz
