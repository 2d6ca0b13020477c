#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "sz/counts.hpp"
#include "sz/enumerate.hpp"

namespace sz {

struct VerificationRow {
    std::int64_t n = 0;
    Count oracle;
    Count formula;
    std::optional<Count> recurrence;
    bool all_equal = false;
};

struct VerificationReport {
    SequenceFamily family;
    std::vector<VerificationRow> rows;  // ascending n
    bool overall_pass = false;

    /// First row whose values disagree, if any.
    const VerificationRow* first_failure() const noexcept;
};

/// Compare the brute-force oracle with the closed form and, where one
/// exists, the recurrence for every n from family.min_n() to n_max.
/// For I and J the formula column holds the recurrence value.
/// Rows are evaluated concurrently but always reported in ascending n.
/// Propagates BoundExceeded when n_max is above the oracle ceiling.
VerificationReport verify_family(const SequenceFamily& family, std::int64_t n_max,
                                 const EnumerateOptions& opts = {});

}  // namespace sz
