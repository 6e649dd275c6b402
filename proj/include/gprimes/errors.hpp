#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace gprimes {

// Thrown when a generator or enumerator would emit more elements than its
// configured budget allows. partial_count() reports how many elements were
// produced before the limit was hit.
class BudgetExceededError : public std::runtime_error {
public:
    BudgetExceededError(const std::string& what, uint64_t partial_count)
        : std::runtime_error(what), partial_count_(partial_count) {}

    uint64_t partial_count() const { return partial_count_; }

private:
    uint64_t partial_count_;
};

}  // namespace gprimes
