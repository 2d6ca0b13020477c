#include "sz/sets.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>
#include <charconv>

#include "sz/count.hpp"

namespace sz {

namespace {
void normalize(std::vector<Element>& v) {
    std::sort(v.begin(), v.end());
    if (!v.empty() && v.front() == 0) {
        throw InvalidSet("set elements must be positive integers");
    }
    const auto dup = std::adjacent_find(v.begin(), v.end());
    if (dup != v.end()) {
        throw InvalidSet("duplicate element " + std::to_string(*dup));
    }
}
}  // namespace

FiniteSet::FiniteSet(std::initializer_list<Element> elements)
    : FiniteSet(std::vector<Element>(elements)) {}

FiniteSet::FiniteSet(std::vector<Element> elements) : elements_(std::move(elements)) {
    normalize(elements_);
}

FiniteSet FiniteSet::from_sorted(std::vector<Element> elements) {
    assert(elements.empty() || elements.front() >= 1);
    assert(std::adjacent_find(elements.begin(), elements.end(),
                              [](Element a, Element b) { return a >= b; }) == elements.end());
    FiniteSet s;
    s.elements_ = std::move(elements);
    return s;
}

FiniteSet FiniteSet::parse(std::string_view text) {
    auto trim = [](std::string_view sv) {
        while (!sv.empty() && std::isspace(static_cast<unsigned char>(sv.front()))) sv.remove_prefix(1);
        while (!sv.empty() && std::isspace(static_cast<unsigned char>(sv.back()))) sv.remove_suffix(1);
        return sv;
    };
    std::string_view body = trim(text);
    if (body.size() < 2 || body.front() != '{' || body.back() != '}') {
        throw InvalidSet("expected a set like {1,3,5}, got '" + std::string(text) + "'");
    }
    body = trim(body.substr(1, body.size() - 2));
    std::vector<Element> out;
    if (body.empty()) return FiniteSet{};
    while (true) {
        const auto comma = body.find(',');
        const std::string_view token = trim(body.substr(0, comma));
        Element value = 0;
        const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size()) {
            throw InvalidSet("bad set element '" + std::string(token) + "' in '" + std::string(text) + "'");
        }
        out.push_back(value);
        if (comma == std::string_view::npos) break;
        body.remove_prefix(comma + 1);
    }
    return FiniteSet(std::move(out));
}

std::optional<Element> FiniteSet::max() const noexcept {
    if (elements_.empty()) return std::nullopt;
    return elements_.back();
}

bool FiniteSet::contains(Element e) const noexcept {
    return std::binary_search(elements_.begin(), elements_.end(), e);
}

std::string FiniteSet::to_string() const {
    std::string out = "{";
    for (std::size_t i = 0; i < elements_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(elements_[i]);
    }
    out += '}';
    return out;
}

GapList::GapList(std::vector<Element> gaps) : gaps_(std::move(gaps)) {
    if (std::find(gaps_.begin(), gaps_.end(), Element{0}) != gaps_.end()) {
        throw InvalidSet("gaps must be positive");
    }
}

std::optional<Element> min_of(const FiniteSet& s) noexcept {
    if (s.empty()) return std::nullopt;
    return s[0];
}

bool is_weak_schreier(const FiniteSet& s) noexcept { return s.empty() || s[0] >= s.size(); }

bool is_strong_schreier(const FiniteSet& s) noexcept { return s.empty() || s[0] > s.size(); }

bool is_maximal_schreier(const FiniteSet& s) noexcept { return !s.empty() && s[0] == s.size(); }

bool is_k_zeckendorf(const FiniteSet& s, std::uint64_t k) {
    if (k < 1) throw DomainError("zeckendorf gap k must be >= 1");
    for (std::size_t i = 1; i < s.size(); ++i) {
        if (s[i] - s[i - 1] < k) return false;
    }
    return true;
}

std::optional<GapList> gap_list(const FiniteSet& s) {
    if (s.size() <= 1) return std::nullopt;
    std::vector<Element> gaps;
    gaps.reserve(s.size() - 1);
    for (std::size_t i = 1; i < s.size(); ++i) gaps.push_back(s[i] - s[i - 1]);
    return GapList(std::move(gaps));
}

bool has_odd_gaps(const FiniteSet& s) noexcept {
    for (std::size_t i = 1; i < s.size(); ++i) {
        if ((s[i] - s[i - 1]) % 2 == 0) return false;
    }
    return true;
}

}  // namespace sz
