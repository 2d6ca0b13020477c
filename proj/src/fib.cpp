#include "sz/fib.hpp"

#include <string>

namespace sz {

FibIndex::FibIndex(std::int64_t i) : i_(i) {
    if (i < kMin) {
        throw DomainError("fibonacci index " + std::to_string(i) + " is below -1");
    }
}

FibTable::FibTable() : values_{Count{1}, Count{0}} {}

std::size_t FibTable::size() const {
    std::shared_lock lock(mutex_);
    return values_.size();
}

void FibTable::grow_to(std::size_t slot) const {
    std::unique_lock lock(mutex_);
    if (values_.size() > slot) return;
    values_.reserve(slot + 1);
    while (values_.size() <= slot) {
        const std::size_t s = values_.size();
        values_.push_back(values_[s - 1] + values_[s - 2]);
    }
}

Count FibTable::at(FibIndex i) const {
    const auto slot = static_cast<std::size_t>(i.value() + 1);
    {
        std::shared_lock lock(mutex_);
        if (slot < values_.size()) return values_[slot];
    }
    grow_to(slot);
    std::shared_lock lock(mutex_);
    return values_[slot];
}

namespace {
const FibTable& shared_table() {
    static const FibTable table;
    return table;
}
}  // namespace

Count fib(std::int64_t i) { return shared_table().at(FibIndex{i}); }

Count fib_prefix_sum(std::int64_t n) {
    if (n < 1) {
        throw DomainError("fib_prefix_sum requires n >= 1, got " + std::to_string(n));
    }
    return fib(n + 2) - 1;
}

}  // namespace sz
