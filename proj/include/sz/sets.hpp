#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace sz {

using Element = std::uint64_t;

/// Raised when building a FiniteSet from input that is not a set of
/// positive integers, or when the canonical text form does not parse.
class InvalidSet : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A finite set of positive integers, stored in strictly increasing order.
///
/// Construction sorts the input and rejects zeros and duplicates instead of
/// silently dropping them.
class FiniteSet {
public:
    FiniteSet() = default;
    FiniteSet(std::initializer_list<Element> elements);
    explicit FiniteSet(std::vector<Element> elements);

    /// Build from a sequence the caller guarantees is strictly increasing
    /// and positive. Checked only in debug builds.
    static FiniteSet from_sorted(std::vector<Element> elements);

    /// Parse the canonical text form, e.g. "{2,3,5}" or "{}". Whitespace
    /// around tokens is accepted.
    static FiniteSet parse(std::string_view text);

    std::span<const Element> elements() const noexcept { return elements_; }
    std::size_t size() const noexcept { return elements_.size(); }
    bool empty() const noexcept { return elements_.empty(); }
    Element operator[](std::size_t i) const { return elements_[i]; }

    auto begin() const noexcept { return elements_.begin(); }
    auto end() const noexcept { return elements_.end(); }

    /// Largest element, if any.
    std::optional<Element> max() const noexcept;

    bool contains(Element e) const noexcept;

    /// Canonical text form: "{a,b,c}".
    std::string to_string() const;

    friend bool operator==(const FiniteSet&, const FiniteSet&) = default;
    friend auto operator<=>(const FiniteSet&, const FiniteSet&) = default;

private:
    std::vector<Element> elements_;
};

/// Consecutive differences a_{i+1} - a_i, in order. Repeated gaps are kept.
class GapList {
public:
    explicit GapList(std::vector<Element> gaps);

    std::span<const Element> gaps() const noexcept { return gaps_; }
    std::size_t size() const noexcept { return gaps_.size(); }
    auto begin() const noexcept { return gaps_.begin(); }
    auto end() const noexcept { return gaps_.end(); }

    friend bool operator==(const GapList&, const GapList&) = default;

private:
    std::vector<Element> gaps_;
};

std::optional<Element> min_of(const FiniteSet& s) noexcept;

// The empty set is weak- and strong-Schreier but not maximal.
bool is_weak_schreier(const FiniteSet& s) noexcept;
bool is_strong_schreier(const FiniteSet& s) noexcept;
bool is_maximal_schreier(const FiniteSet& s) noexcept;

/// Every two elements differ by at least k. Throws DomainError for k < 1.
bool is_k_zeckendorf(const FiniteSet& s, std::uint64_t k);

/// none when |s| <= 1.
std::optional<GapList> gap_list(const FiniteSet& s);

/// Every consecutive gap is odd; vacuously true for |s| <= 1.
bool has_odd_gaps(const FiniteSet& s) noexcept;

}  // namespace sz
