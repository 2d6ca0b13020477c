#pragma once

#include <cstdint>
#include <functional>
#include <iterator>
#include <optional>

#include "sz/count.hpp"
#include "sz/sets.hpp"

namespace sz {

enum class SchreierKind { any, weak, strong, maximal };
enum class MaxConstraint { none, max_equals_n, contains_n };
enum class MaxParity { any, even, odd };

/// Declarative filter over subsets of {1..n}.
///
/// A nonempty subset matches when it passes every active filter. The empty
/// set matches only when include_empty is set, no max constraint is active,
/// and the Schreier filter admits it (weak/strong yes, maximal no). The parity
/// filter never rejects the empty set.
struct PredicateSpec {
    SchreierKind schreier = SchreierKind::any;
    std::optional<std::uint64_t> zeckendorf_gap;
    bool odd_gaps_only = false;
    MaxConstraint max_constraint = MaxConstraint::none;
    MaxParity max_parity = MaxParity::any;
    bool include_empty = false;

    bool matches(const FiniteSet& s, unsigned n) const;
};

struct EnumerateOptions {
    static constexpr unsigned kHardCeiling = 62;
    static constexpr unsigned kDefaultCeiling = 30;

    unsigned ceiling = default_ceiling();
    /// Worker threads for count_matching; 0 picks the hardware concurrency.
    unsigned threads = 0;

    /// kDefaultCeiling unless SZ_ORACLE_CEILING holds an integer in [1, 62].
    static unsigned default_ceiling();
};

/// Lazy range over the subsets of {1..n} matching a spec, in ascending
/// bitmask order (bit i stands for element i + 1).
class SubsetStream {
public:
    SubsetStream(unsigned n, PredicateSpec spec, const EnumerateOptions& opts = {});

    class iterator {
    public:
        using iterator_category = std::input_iterator_tag;
        using value_type = FiniteSet;
        using difference_type = std::ptrdiff_t;
        using pointer = const FiniteSet*;
        using reference = FiniteSet;

        iterator() = default;

        FiniteSet operator*() const;
        iterator& operator++();
        iterator operator++(int) {
            iterator tmp = *this;
            ++*this;
            return tmp;
        }
        friend bool operator==(const iterator& a, const iterator& b) {
            return a.mask_ == b.mask_;
        }

    private:
        friend class SubsetStream;
        iterator(const SubsetStream* owner, std::uint64_t mask) : owner_(owner), mask_(mask) {}
        void settle();

        const SubsetStream* owner_ = nullptr;
        std::uint64_t mask_ = 0;
    };

    iterator begin() const;
    iterator end() const;

    unsigned n() const noexcept { return n_; }

private:
    unsigned n_;
    PredicateSpec spec_;
    std::uint64_t limit_;
};

/// Stream of every subset of {1..n} matching spec, each once.
/// Throws BoundExceeded above the ceiling and DomainError for n < 1.
SubsetStream enumerate_matching(unsigned n, const PredicateSpec& spec,
                                const EnumerateOptions& opts = {});

/// Visit each match in enumeration order.
void for_each_matching(unsigned n, const PredicateSpec& spec,
                       const std::function<void(const FiniteSet&)>& visit,
                       const EnumerateOptions& opts = {});

/// Number of matches. The bitmask range may be split across threads; the
/// result does not depend on the thread count.
Count count_matching(unsigned n, const PredicateSpec& spec, const EnumerateOptions& opts = {});

namespace detail {
bool mask_matches(std::uint64_t mask, unsigned n, const PredicateSpec& spec) noexcept;
FiniteSet mask_to_set(std::uint64_t mask);
}  // namespace detail

}  // namespace sz
