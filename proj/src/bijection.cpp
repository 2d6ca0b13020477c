#include "sz/bijection.hpp"

#include <algorithm>
#include <vector>

namespace sz {

namespace {
void check_ambient(const FiniteSet& s, std::uint64_t n) {
    if (n < 1) throw BijectionPreconditionError(Violation::bad_n, "ambient n must be >= 1");
    if (!s.empty() && *s.max() > n) {
        throw BijectionPreconditionError(
            Violation::exceeds_n, s.to_string() + " exceeds n = " + std::to_string(n));
    }
}
}  // namespace

FiniteSet forward(const FiniteSet& a, std::uint64_t n) {
    check_ambient(a, n);
    if (!is_weak_schreier(a)) {
        throw BijectionPreconditionError(Violation::not_weak_schreier,
                                         a.to_string() + " is not weak-Schreier");
    }
    const std::size_t k = a.size();
    std::vector<Element> out(k);
    for (std::size_t i = 0; i < k; ++i) out[i] = a[i] - (k - 1 - i);
    return FiniteSet::from_sorted(std::move(out));
}

FiniteSet inverse(const FiniteSet& c, std::uint64_t n) {
    check_ambient(c, n);
    if (!is_k_zeckendorf(c, 2)) {
        throw BijectionPreconditionError(Violation::not_zeckendorf,
                                         c.to_string() + " is not Zeckendorf");
    }
    const std::size_t k = c.size();
    std::vector<Element> out(k);
    for (std::size_t i = 0; i < k; ++i) out[i] = c[i] + (k - 1 - i);
    return FiniteSet::from_sorted(std::move(out));
}

BijectionCheckReport verify_bijection(std::uint64_t n, const EnumerateOptions& opts) {
    BijectionCheckReport report;
    report.n = n;
    const auto ambient = static_cast<unsigned>(std::min<std::uint64_t>(n, 1u << 30));

    PredicateSpec x_spec;
    x_spec.schreier = SchreierKind::weak;
    x_spec.include_empty = true;
    PredicateSpec y_spec;
    y_spec.zeckendorf_gap = 2;
    y_spec.include_empty = true;

    std::vector<FiniteSet> images;
    bool in_y = true;
    bool round_trip = true;
    std::uint64_t domain = 0;
    for (const FiniteSet& a : enumerate_matching(ambient, x_spec, opts)) {
        ++domain;
        FiniteSet image = forward(a, n);
        in_y = in_y && y_spec.matches(image, ambient);
        round_trip = round_trip && inverse(image, n) == a;
        images.push_back(std::move(image));
    }

    std::vector<FiniteSet> y_n;
    for (const FiniteSet& c : enumerate_matching(ambient, y_spec, opts)) y_n.push_back(c);

    std::sort(images.begin(), images.end());
    const bool distinct = std::adjacent_find(images.begin(), images.end()) == images.end();
    std::sort(y_n.begin(), y_n.end());

    report.domain_size = domain;
    report.image_size = distinct ? images.size()
                                 : static_cast<std::size_t>(std::distance(
                                       images.begin(), std::unique(images.begin(), images.end())));
    report.all_images_in_Y = in_y;
    report.round_trip_ok = round_trip;
    report.is_bijection = distinct && in_y && round_trip && images == y_n &&
                          report.domain_size == Count{y_n.size()};
    return report;
}

}  // namespace sz
