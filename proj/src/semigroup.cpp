#include "gprimes/semigroup.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace gprimes {

double GIntegerEntry::value() const {
    if (exact_value != 0) return static_cast<double>(exact_value);
    return std::exp(log_value);
}

namespace {

// Dense lexicographic comparison of sparse exponent vectors: the first index
// where the exponents differ decides, a positive exponent beating zero.
int lex_compare(const std::vector<std::pair<uint32_t, uint32_t>>& a,
                const std::vector<std::pair<uint32_t, uint32_t>>& b) {
    size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i].first == b[j].first) {
            if (a[i].second != b[j].second)
                return a[i].second < b[j].second ? -1 : 1;
            ++i;
            ++j;
        } else if (a[i].first < b[j].first) {
            return 1;
        } else {
            return -1;
        }
    }
    if (i < a.size()) return 1;
    if (j < b.size()) return -1;
    return 0;
}

}  // namespace

SemigroupEnumerator::SemigroupEnumerator(const GPrimeSystem& system,
                                         double x_max, EnumerationBudget budget,
                                         bool squarefree_only)
    : budget_(budget), squarefree_only_(squarefree_only) {
    if (!(x_max >= 1.0))
        throw std::domain_error("SemigroupEnumerator: need x_max >= 1");
    if (!(budget.tie_epsilon >= 0.0 && budget.tie_epsilon <= 1e-6))
        throw std::invalid_argument("SemigroupEnumerator: tie_epsilon in [0, 1e-6]");
    exact_mode_ = system.exact_backing() && x_max < 9e15;
    if (exact_mode_) {
        exact_cutoff_ = static_cast<uint64_t>(std::floor(x_max));
        primes_ = system.prime_table(std::floor(x_max));
    } else {
        log_cutoff_ = std::log(x_max) + budget.tie_epsilon;
        primes_ = system.prime_table(x_max * (1.0 + 2e-6));
    }
    Node root;
    root.log_value = 0.0;
    root.exact = exact_mode_ ? 1 : 0;
    push_node(std::move(root));
}

bool SemigroupEnumerator::node_after(const Node& a, const Node& b) const {
    if (exact_mode_) {
        if (a.exact != b.exact) return a.exact > b.exact;
    } else {
        if (a.log_value != b.log_value) return a.log_value > b.log_value;
    }
    return lex_compare(a.exponents, b.exponents) > 0;
}

void SemigroupEnumerator::push_node(Node&& node) {
    heap_.push_back(std::move(node));
    std::push_heap(heap_.begin(), heap_.end(),
                   [this](const Node& a, const Node& b) { return node_after(a, b); });
}

void SemigroupEnumerator::push_children(const Node& node) {
    size_t start;
    if (node.exponents.empty())
        start = 0;
    else if (squarefree_only_)
        start = node.exponents.back().first + 1;
    else
        start = node.exponents.back().first;
    for (size_t i = start; i < primes_.size(); ++i) {
        const GPrime& p = primes_[i];
        if (exact_mode_) {
            if (node.exact > exact_cutoff_ / p.exact) break;
        } else {
            if (node.log_value + p.log_value > log_cutoff_) break;
        }
        Node child;
        child.log_value = node.log_value + p.log_value;
        child.exact = exact_mode_ ? node.exact * p.exact : 0;
        child.exponents = node.exponents;
        if (!node.exponents.empty() && i == node.exponents.back().first)
            child.exponents.back().second += 1;
        else
            child.exponents.emplace_back(static_cast<uint32_t>(i), 1u);
        push_node(std::move(child));
    }
}

bool SemigroupEnumerator::next(GIntegerEntry& out) {
    if (heap_.empty()) return false;
    if (emitted_ >= budget_.max_entries)
        throw BudgetExceededError("enumeration budget exceeded", emitted_);
    std::pop_heap(heap_.begin(), heap_.end(),
                  [this](const Node& a, const Node& b) { return node_after(a, b); });
    Node node = std::move(heap_.back());
    heap_.pop_back();
    push_children(node);

    out.log_value = node.log_value;
    out.exact_value = node.exact;
    out.exponents = std::move(node.exponents);
    out.squarefree = true;
    for (const auto& [idx, exp] : out.exponents)
        if (exp > 1) out.squarefree = false;
    out.mobius_sign =
        out.squarefree ? (out.exponents.size() % 2 == 0 ? 1 : -1) : 0;
    ++emitted_;
    return true;
}

std::vector<GIntegerEntry> enumerate_up_to(const GPrimeSystem& system,
                                           double x_max,
                                           EnumerationBudget budget) {
    SemigroupEnumerator en(system, x_max, budget, false);
    std::vector<GIntegerEntry> out;
    GIntegerEntry e;
    while (en.next(e)) out.push_back(e);
    return out;
}

std::vector<GIntegerEntry> enumerate_squarefree_up_to(
    const GPrimeSystem& system, double x_max, EnumerationBudget budget) {
    SemigroupEnumerator en(system, x_max, budget, true);
    std::vector<GIntegerEntry> out;
    GIntegerEntry e;
    while (en.next(e)) out.push_back(e);
    return out;
}

uint64_t count_in_window(const GPrimeSystem& system, double lo, double hi,
                         EnumerationBudget budget) {
    if (!(lo >= 1.0 && hi >= lo))
        throw std::domain_error("count_in_window: need 1 <= lo <= hi");
    SemigroupEnumerator en(system, hi, budget, false);
    uint64_t count = 0;
    GIntegerEntry e;
    if (en.exact_mode()) {
        uint64_t lo_floor = static_cast<uint64_t>(std::floor(lo));
        while (en.next(e))
            if (e.exact_value > lo_floor) ++count;
    } else {
        double lo_cut = std::log(lo) + budget.tie_epsilon;
        while (en.next(e))
            if (e.log_value > lo_cut) ++count;
    }
    return count;
}

std::string entry_csv_line(const GIntegerEntry& entry) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "%.15g,%.15g,%d,", entry.log_value,
                  entry.value(), entry.mobius_sign);
    std::string line = buf;
    bool first = true;
    for (const auto& [idx, exp] : entry.exponents) {
        if (!first) line += '*';
        first = false;
        line += std::to_string(idx);
        line += '^';
        line += std::to_string(exp);
    }
    return line;
}

}  // namespace gprimes
