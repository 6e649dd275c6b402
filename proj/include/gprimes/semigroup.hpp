#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "gprimes/errors.hpp"
#include "gprimes/systems.hpp"

namespace gprimes {

// One generalized integer: a formal product of primes from the system,
// identified by its exponent vector. exponents holds (prime index, exponent)
// pairs with strictly increasing indices and positive exponents; the empty
// vector is the unit. exact_value is the uint64 product in exact mode, else 0.
struct GIntegerEntry {
    double log_value = 0.0;
    uint64_t exact_value = 0;
    std::vector<std::pair<uint32_t, uint32_t>> exponents;
    bool squarefree = true;
    int mobius_sign = 1;

    double value() const;
    size_t support_size() const { return exponents.size(); }
};

struct EnumerationBudget {
    uint64_t max_entries = 100'000'000;
    // Relative tolerance for the <= X comparison in floating mode. Values
    // within a factor exp(tie_epsilon) above X are still accepted.
    double tie_epsilon = 1e-9;
};

// Streams all generalized integers with value <= X in nondecreasing order of
// value, ties broken by lexicographically ascending exponent vector. Uses
// uint64 arithmetic when the system has exact backing and X < 9e15, otherwise
// accumulated logarithms with the budget's tie_epsilon.
class SemigroupEnumerator {
public:
    SemigroupEnumerator(const GPrimeSystem& system, double x_max,
                        EnumerationBudget budget = {},
                        bool squarefree_only = false);

    // Returns false when the stream is exhausted. Throws BudgetExceededError
    // when the next entry would exceed budget.max_entries.
    bool next(GIntegerEntry& out);

    uint64_t emitted() const { return emitted_; }
    bool exact_mode() const { return exact_mode_; }

private:
    struct Node {
        double log_value;
        uint64_t exact;
        std::vector<std::pair<uint32_t, uint32_t>> exponents;
    };
    bool node_after(const Node& a, const Node& b) const;
    void push_children(const Node& node);
    void push_node(Node&& node);

    std::vector<GPrime> primes_;
    std::vector<Node> heap_;
    EnumerationBudget budget_;
    uint64_t emitted_ = 0;
    bool squarefree_only_;
    bool exact_mode_;
    uint64_t exact_cutoff_ = 0;
    double log_cutoff_ = 0.0;
};

std::vector<GIntegerEntry> enumerate_up_to(const GPrimeSystem& system,
                                           double x_max,
                                           EnumerationBudget budget = {});
std::vector<GIntegerEntry> enumerate_squarefree_up_to(
    const GPrimeSystem& system, double x_max, EnumerationBudget budget = {});

// Number of generalized integers with lo < value <= hi. Requires
// 1 <= lo <= hi. Boundary decisions match the enumerator's cutoff rules.
uint64_t count_in_window(const GPrimeSystem& system, double lo, double hi,
                         EnumerationBudget budget = {});

// CSV row "log_value,value,mobius,exponents" with 15 significant digits and
// the exponent vector rendered as i^a terms joined by '*'.
std::string entry_csv_line(const GIntegerEntry& entry);

}  // namespace gprimes
