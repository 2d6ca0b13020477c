#include "sz/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <iomanip>
#include <map>
#include <ostream>
#include <sstream>

#include "sz/bijection.hpp"
#include "sz/counts.hpp"
#include "sz/enumerate.hpp"
#include "sz/verify.hpp"

namespace sz::cli {

namespace {

/// Argument problems detected after CLI11 has parsed the flags.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Format { plain, bfile, csv, json };

const std::map<std::string, Format> kFormats{
    {"plain", Format::plain}, {"bfile", Format::bfile}, {"csv", Format::csv}, {"json", Format::json}};

const std::map<std::string, SchreierKind> kSchreier{{"any", SchreierKind::any},
                                                    {"weak", SchreierKind::weak},
                                                    {"strong", SchreierKind::strong},
                                                    {"maximal", SchreierKind::maximal}};

const std::map<std::string, MaxParity> kParity{
    {"any", MaxParity::any}, {"even", MaxParity::even}, {"odd", MaxParity::odd}};

std::string family_choices() {
    std::string out;
    for (Family f : all_families()) {
        if (!out.empty()) out += ", ";
        out += family_name(f);
    }
    return out;
}

SequenceFamily make_family(const std::string& name, std::optional<std::int64_t> k, bool allow_k1) {
    const auto tag = parse_family(name);
    if (!tag) throw UsageError("unknown family '" + name + "' (expected one of " + family_choices() + ")");
    try {
        return SequenceFamily(*tag, k, allow_k1 ? GapPolicy::allow_k1 : GapPolicy::require_k2);
    } catch (const DomainError& e) {
        throw UsageError(e.what());
    }
}

std::pair<std::int64_t, std::int64_t> parse_k_range(const std::string& text) {
    auto parse_int = [&text](std::string_view sv) {
        std::int64_t v = 0;
        const auto [ptr, ec] = std::from_chars(sv.data(), sv.data() + sv.size(), v);
        if (sv.empty() || ec != std::errc{} || ptr != sv.data() + sv.size()) {
            throw UsageError("bad --k-range '" + text + "' (expected a..b)");
        }
        return v;
    };
    const std::string_view sv(text);
    const auto dots = sv.find("..");
    std::pair<std::int64_t, std::int64_t> range;
    if (dots == std::string_view::npos) {
        range.first = range.second = parse_int(sv);
    } else {
        range = {parse_int(sv.substr(0, dots)), parse_int(sv.substr(dots + 2))};
    }
    if (range.first < 2 || range.first > range.second) {
        throw UsageError("--k-range must satisfy 2 <= a <= b, got '" + text + "'");
    }
    return range;
}

void require_within_ceiling(std::int64_t n) {
    const EnumerateOptions opts;
    if (n > static_cast<std::int64_t>(opts.ceiling)) {
        throw BoundExceeded(static_cast<unsigned>(std::min<std::int64_t>(n, 1 << 30)), opts.ceiling);
    }
}

void write_rows(std::ostream& out, Format format, std::int64_t from, const std::vector<Count>& vals) {
    if (format == Format::json) {
        auto doc = nlohmann::json::array();
        for (std::size_t i = 0; i < vals.size(); ++i) {
            doc.push_back({{"n", from + static_cast<std::int64_t>(i)}, {"value", vals[i].str()}});
        }
        out << doc.dump(2) << '\n';
        return;
    }
    if (format == Format::csv) out << "n,value\n";
    for (std::size_t i = 0; i < vals.size(); ++i) {
        const std::int64_t n = from + static_cast<std::int64_t>(i);
        switch (format) {
            case Format::plain: out << vals[i] << '\n'; break;
            case Format::bfile: out << n << ' ' << vals[i] << '\n'; break;
            case Format::csv: out << n << ',' << vals[i] << '\n'; break;
            case Format::json: break;
        }
    }
}

std::string opt_str(const std::optional<Count>& c) { return c ? c->str() : "-"; }

void print_row(std::ostream& os, const VerificationRow& row) {
    os << std::setw(4) << row.n << "  " << std::setw(12) << row.oracle << "  " << std::setw(12)
       << row.formula << "  " << std::setw(12) << opt_str(row.recurrence) << "  "
       << (row.all_equal ? "PASS" : "FAIL") << '\n';
}

// -- verify ----------------------------------------------------------------

int verify_single(const SequenceFamily& family, std::int64_t max_n, std::ostream& out,
                  std::ostream& err) {
    const VerificationReport report = verify_family(family, max_n);
    out << "verify " << family.name() << "  n = " << family.min_n() << ".." << max_n << '\n';
    out << std::setw(4) << "n" << "  " << std::setw(12) << "oracle" << "  " << std::setw(12)
        << "formula" << "  " << std::setw(12) << "recurrence" << "  status\n";
    for (const auto& row : report.rows) print_row(out, row);
    if (const auto* bad = report.first_failure()) {
        err << "mismatch in " << family.name() << " at n = " << bad->n << ": ";
        print_row(err, *bad);
        return kMismatch;
    }
    out << family.name() << ": " << report.rows.size() << " of " << report.rows.size() << " rows match\n";
    return kOk;
}

int verify_bijection_range(std::int64_t max_n, bool verbose, std::ostream& out, std::ostream& err) {
    if (verbose) out << "verify bijection  n = 1.." << max_n << '\n';
    if (verbose) out << std::setw(4) << "n" << "  " << std::setw(10) << "domain" << "  "
                     << std::setw(10) << "image" << "  in_Y  round_trip  status\n";
    for (std::int64_t n = 1; n <= max_n; ++n) {
        const auto r = verify_bijection(static_cast<std::uint64_t>(n));
        if (verbose) {
            out << std::setw(4) << n << "  " << std::setw(10) << r.domain_size << "  " << std::setw(10)
                << r.image_size << "  " << std::setw(4) << (r.all_images_in_Y ? "yes" : "no") << "  "
                << std::setw(10) << (r.round_trip_ok ? "yes" : "no") << "  "
                << (r.is_bijection ? "PASS" : "FAIL") << '\n';
        }
        if (!r.is_bijection) {
            err << "bijection check failed at n = " << n << " (domain " << r.domain_size << ", image "
                << r.image_size << ")\n";
            return kMismatch;
        }
    }
    return kOk;
}

int verify_all(std::int64_t max_n, std::pair<std::int64_t, std::int64_t> ks, std::ostream& out,
               std::ostream& err) {
    std::vector<SequenceFamily> families;
    for (Family f : all_families()) {
        if (!needs_gap(f)) {
            families.emplace_back(f);
            continue;
        }
        for (std::int64_t k = ks.first; k <= ks.second; ++k) families.emplace_back(f, k);
    }
    int status = kOk;
    for (const auto& family : families) {
        const auto report = verify_family(family, max_n);
        const auto* bad = report.first_failure();
        out << (bad ? "FAIL" : "PASS") << "  " << std::left << std::setw(10) << family.name()
            << std::right << "  n = " << family.min_n() << ".." << max_n << '\n';
        if (bad && status == kOk) {
            err << "first mismatch in " << family.name() << ": ";
            print_row(err, *bad);
            status = kMismatch;
        }
    }
    std::ostringstream sink;
    const int bij = verify_bijection_range(max_n, false, sink, err);
    out << (bij == kOk ? "PASS" : "FAIL") << "  " << std::left << std::setw(10) << "bijection"
        << std::right << "  n = 1.." << max_n << '\n';
    if (bij != kOk) status = kMismatch;
    return status;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Schreier and Zeckendorf set counting, enumeration and verification", "sz"};
    app.require_subcommand(1);

    // count
    std::string family_arg;
    std::int64_t n = 0;
    std::optional<std::int64_t> k;
    bool allow_k1 = false;
    auto* count_cmd = app.add_subcommand("count", "Print one sequence value");
    count_cmd->add_option("family", family_arg, "Sequence family (" + family_choices() + ")")->required();
    count_cmd->add_option("--n", n, "Index n >= 1")->required();
    count_cmd->add_option("--k", k, "Gap parameter for H, I, J");
    count_cmd->add_flag("--allow-k1", allow_k1, "Permit k = 1 for H, I, J");

    // table
    std::int64_t from = 1;
    std::int64_t to = 1;
    std::string format_arg = "plain";
    auto* table_cmd = app.add_subcommand("table", "Print a range of sequence values");
    table_cmd->add_option("family", family_arg, "Sequence family")->required();
    table_cmd->add_option("--from", from, "First n")->required();
    table_cmd->add_option("--to", to, "Last n")->required();
    table_cmd->add_option("--k", k, "Gap parameter for H, I, J");
    table_cmd->add_option("--format", format_arg, "plain, bfile, csv or json");
    table_cmd->add_flag("--allow-k1", allow_k1, "Permit k = 1 for H, I, J");

    // list
    std::string schreier_arg = "any";
    std::string parity_arg = "any";
    std::optional<std::uint64_t> zeck_k;
    bool odd_gaps = false;
    bool contains_n = false;
    bool max_n_flag = false;
    bool include_empty = false;
    std::string list_format = "plain";
    auto* list_cmd = app.add_subcommand("list", "Enumerate matching subsets of {1..n}");
    list_cmd->add_option("--n", n, "Ambient n")->required();
    list_cmd->add_option("--schreier", schreier_arg, "any, weak, strong or maximal");
    list_cmd->add_option("--zeck-k", zeck_k, "Minimum distance between elements");
    list_cmd->add_flag("--odd-gaps", odd_gaps, "Only odd consecutive differences");
    list_cmd->add_flag("--contains-n", contains_n, "Set must contain n");
    list_cmd->add_flag("--max-n", max_n_flag, "Set maximum must equal n");
    list_cmd->add_option("--max-parity", parity_arg, "any, even or odd");
    list_cmd->add_flag("--include-empty", include_empty, "Admit the empty set");
    list_cmd->add_option("--format", list_format, "plain or json");

    // verify
    std::string target;
    std::int64_t max_n = 0;
    std::string k_range = "2..5";
    auto* verify_cmd = app.add_subcommand("verify", "Check formulas against the enumeration oracle");
    verify_cmd->add_option("target", target, "A family name, 'bijection' or 'all'")->required();
    verify_cmd->add_option("--max-n", max_n, "Largest n to check")->required();
    verify_cmd->add_option("--k", k, "Gap parameter for H, I, J");
    verify_cmd->add_option("--k-range", k_range, "Gap parameters a..b used by 'all'");

    // bijection
    std::string set_arg;
    bool invert = false;
    auto* bij_cmd = app.add_subcommand("bijection", "Map weak-Schreier sets to Zeckendorf sets");
    bij_cmd->add_option("--n", n, "Ambient n")->required();
    bij_cmd->add_option("--set", set_arg, "Set in the form {a,b,c}")->required();
    bij_cmd->add_flag("--invert", invert, "Apply the inverse map");

    std::vector<const char*> argv{"sz"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kBadArguments;
    }

    try {
        if (*count_cmd) {
            const SequenceFamily family = make_family(family_arg, k, allow_k1);
            if (n < family.min_n()) {
                throw UsageError("--n must be >= " + std::to_string(family.min_n()));
            }
            out << value(family, n) << '\n';
            return kOk;
        }
        if (*table_cmd) {
            const SequenceFamily family = make_family(family_arg, k, allow_k1);
            const auto fmt = kFormats.find(format_arg);
            if (fmt == kFormats.end()) throw UsageError("unknown --format '" + format_arg + "'");
            if (from > to) throw UsageError("empty range: --from is greater than --to");
            if (from < family.min_n()) {
                throw UsageError("--from must be >= " + std::to_string(family.min_n()));
            }
            write_rows(out, fmt->second, from, values(family, from, to));
            return kOk;
        }
        if (*list_cmd) {
            PredicateSpec spec;
            const auto kind = kSchreier.find(schreier_arg);
            if (kind == kSchreier.end()) throw UsageError("unknown --schreier '" + schreier_arg + "'");
            const auto parity = kParity.find(parity_arg);
            if (parity == kParity.end()) throw UsageError("unknown --max-parity '" + parity_arg + "'");
            if (contains_n && max_n_flag) throw UsageError("--contains-n and --max-n are exclusive");
            if (zeck_k && *zeck_k < 1) throw UsageError("--zeck-k must be >= 1");
            if (list_format != "plain" && list_format != "json") {
                throw UsageError("unknown --format '" + list_format + "' (plain or json)");
            }
            if (n < 1) throw UsageError("--n must be >= 1");
            spec.schreier = kind->second;
            spec.max_parity = parity->second;
            spec.zeckendorf_gap = zeck_k;
            spec.odd_gaps_only = odd_gaps;
            spec.max_constraint = contains_n   ? MaxConstraint::contains_n
                                  : max_n_flag ? MaxConstraint::max_equals_n
                                               : MaxConstraint::none;
            spec.include_empty = include_empty;
            require_within_ceiling(n);

            std::uint64_t count = 0;
            if (list_format == "json") {
                auto sets = nlohmann::json::array();
                for (const FiniteSet& s : enumerate_matching(static_cast<unsigned>(n), spec)) {
                    sets.push_back(std::vector<Element>(s.begin(), s.end()));
                    ++count;
                }
                out << nlohmann::json{{"n", n}, {"count", std::to_string(count)}, {"sets", sets}}.dump(2)
                    << '\n';
            } else {
                for (const FiniteSet& s : enumerate_matching(static_cast<unsigned>(n), spec)) {
                    out << s.to_string() << '\n';
                    ++count;
                }
                out << "# count: " << count << '\n';
            }
            return kOk;
        }
        if (*verify_cmd) {
            if (max_n < 1) throw UsageError("--max-n must be >= 1");
            if (target == "all") {
                const auto ks = parse_k_range(k_range);
                require_within_ceiling(max_n);
                return verify_all(max_n, ks, out, err);
            }
            if (target == "bijection") {
                require_within_ceiling(max_n);
                return verify_bijection_range(max_n, true, out, err);
            }
            const SequenceFamily family = make_family(target, k, false);
            require_within_ceiling(max_n);
            return verify_single(family, max_n, out, err);
        }
        if (*bij_cmd) {
            if (n < 1) throw UsageError("--n must be >= 1");
            const FiniteSet s = FiniteSet::parse(set_arg);
            const auto ambient = static_cast<std::uint64_t>(n);
            out << (invert ? inverse(s, ambient) : forward(s, ambient)).to_string() << '\n';
            return kOk;
        }
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kBadArguments;
    } catch (const InvalidSet& e) {
        err << "error: " << e.what() << '\n';
        return kBadArguments;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return kBadArguments;
    } catch (const BoundExceeded& e) {
        err << "error: " << e.what() << " (set SZ_ORACLE_CEILING to raise it)\n";
        return kCeilingExceeded;
    } catch (const BijectionPreconditionError& e) {
        err << "error: " << e.what() << '\n';
        return e.violation() == Violation::bad_n ? kBadArguments : kPreconditionViolated;
    }
    return kBadArguments;
}

}  // namespace sz::cli
