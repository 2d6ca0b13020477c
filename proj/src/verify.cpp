#include "sz/verify.hpp"

#include <algorithm>
#include <future>

namespace sz {

const VerificationRow* VerificationReport::first_failure() const noexcept {
    const auto it = std::find_if(rows.begin(), rows.end(),
                                 [](const VerificationRow& r) { return !r.all_equal; });
    return it == rows.end() ? nullptr : &*it;
}

namespace {
VerificationRow make_row(const SequenceFamily& family, const PredicateSpec& spec, std::int64_t n,
                         const EnumerateOptions& opts) {
    VerificationRow row;
    row.n = n;
    row.oracle = count_matching(static_cast<unsigned>(n), spec, opts);
    auto closed = closed_form(family, n);
    auto rec = recurrence(family, n);
    if (closed) {
        row.formula = *std::move(closed);
        row.recurrence = std::move(rec);
    } else {
        row.formula = *std::move(rec);
    }
    row.all_equal = row.formula == row.oracle && (!row.recurrence || *row.recurrence == row.oracle);
    return row;
}
}  // namespace

VerificationReport verify_family(const SequenceFamily& family, std::int64_t n_max,
                                 const EnumerateOptions& opts) {
    if (n_max < 1) throw DomainError("verify_family requires n_max >= 1");
    const unsigned ceiling = std::min(opts.ceiling, EnumerateOptions::kHardCeiling);
    if (n_max > static_cast<std::int64_t>(ceiling)) {
        throw BoundExceeded(static_cast<unsigned>(std::min<std::int64_t>(n_max, 1u << 30)), ceiling);
    }

    const PredicateSpec spec = oracle_spec(family);
    VerificationReport report{family, {}, true};

    // large n dominate the cost; small rows run inline
    EnumerateOptions row_opts = opts;
    std::vector<std::future<VerificationRow>> pending;
    for (std::int64_t n = family.min_n(); n <= n_max; ++n) {
        if (opts.threads == 1 || n < 16) {
            row_opts.threads = 1;
            std::promise<VerificationRow> done;
            done.set_value(make_row(family, spec, n, row_opts));
            pending.push_back(done.get_future());
        } else {
            pending.push_back(std::async(std::launch::async, make_row, family, spec, n, opts));
        }
    }
    for (auto& p : pending) {
        report.rows.push_back(p.get());
        report.overall_pass = report.overall_pass && report.rows.back().all_equal;
    }
    return report;
}

}  // namespace sz
