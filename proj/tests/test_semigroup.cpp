#include <cmath>
#include <string>
#include <vector>

#include "doctest.h"
#include "gprimes/errors.hpp"
#include "gprimes/semigroup.hpp"
#include "gprimes/systems.hpp"
#include "oracles.hpp"

using gprimes::EnumerationBudget;
using gprimes::GIntegerEntry;
using gprimes::GPrimeSystem;
using gprimes::SemigroupEnumerator;
using gprimes::enumerate_squarefree_up_to;
using gprimes::enumerate_up_to;

namespace {

void check_against_brute(const GPrimeSystem& sys, double x_max,
                         bool squarefree_only) {
    EnumerationBudget budget;
    SemigroupEnumerator en(sys, x_max, budget, squarefree_only);
    auto expected =
        oracles::brute_products(sys.prime_table(x_max * 1.001), x_max,
                                en.exact_mode(), budget.tie_epsilon,
                                squarefree_only);
    GIntegerEntry got;
    size_t i = 0;
    while (en.next(got)) {
        REQUIRE(i < expected.size());
        const auto& want = expected[i];
        CHECK(got.log_value == want.log_value);
        CHECK(got.exact_value == want.exact_value);
        CHECK(got.exponents == want.exponents);
        CHECK(got.mobius_sign == want.mobius_sign);
        CHECK(got.squarefree == want.squarefree);
        ++i;
    }
    CHECK(i == expected.size());
}

}  // namespace

TEST_CASE("classical enumeration is 1..floor(x)") {
    auto entries = enumerate_up_to(GPrimeSystem::classical(), 100.0);
    REQUIRE(entries.size() == 100);
    for (size_t i = 0; i < entries.size(); ++i)
        CHECK(entries[i].exact_value == i + 1);
    // 12 = 2^2 * 3 sits at index 11 with mobius 0.
    const auto& e12 = entries[11];
    CHECK(e12.exponents ==
          std::vector<std::pair<uint32_t, uint32_t>>{{0, 2}, {1, 1}});
    CHECK(e12.mobius_sign == 0);
    CHECK(!e12.squarefree);
    // 30 = 2 * 3 * 5 has three prime factors, mobius -1.
    const auto& e30 = entries[29];
    CHECK(e30.exponents ==
          std::vector<std::pair<uint32_t, uint32_t>>{{0, 1}, {1, 1}, {2, 1}});
    CHECK(e30.mobius_sign == -1);
    // The unit comes first.
    CHECK(entries[0].exponents.empty());
    CHECK(entries[0].mobius_sign == 1);
}

TEST_CASE("streams match brute force entry for entry") {
    check_against_brute(GPrimeSystem::classical(), 500.0, false);
    check_against_brute(GPrimeSystem::explicit_list({2.0, 3.0}), 10000.0, false);
    check_against_brute(GPrimeSystem::geometric(2.0), 4096.0, false);
    check_against_brute(GPrimeSystem::power_union(0.5), 300.0, false);
    check_against_brute(GPrimeSystem::doubly_exponential(), 100000.0, false);
    check_against_brute(GPrimeSystem::classical(), 300.0, true);
    // Log-backed systems exercise the tie_epsilon cutoff.
    check_against_brute(GPrimeSystem::geometric(2.5), 1000.0, false);
    check_against_brute(GPrimeSystem::power_union(0.4), 200.0, false);
    check_against_brute(GPrimeSystem::r_inverse(), 100.0, false);
}

TEST_CASE("explicit {2,3} semigroup below 10") {
    auto entries = enumerate_up_to(GPrimeSystem::explicit_list({2.0, 3.0}), 10.0);
    std::vector<uint64_t> values;
    for (const auto& e : entries) values.push_back(e.exact_value);
    CHECK(values == std::vector<uint64_t>{1, 2, 3, 4, 6, 8, 9});
}

TEST_CASE("doubly exponential formal products collide in value") {
    auto entries = enumerate_up_to(GPrimeSystem::doubly_exponential(), 20.0);
    // Exponent vectors (a,b,c) over (2,4,16) with a+2b+4c <= 4.
    REQUIRE(entries.size() == 10);
    CHECK(entries[2].exact_value == 4);
    CHECK(entries[3].exact_value == 4);
    // Tie order: the bare prime 4 precedes 2^2.
    CHECK(entries[2].exponents ==
          std::vector<std::pair<uint32_t, uint32_t>>{{1, 1}});
    CHECK(entries[3].exponents ==
          std::vector<std::pair<uint32_t, uint32_t>>{{0, 2}});
    CHECK(entries[2].mobius_sign == -1);
    CHECK(entries[3].mobius_sign == 0);
}

TEST_CASE("power union counts pairs m * k^2") {
    auto entries = enumerate_up_to(GPrimeSystem::power_union(0.5), 10.0);
    CHECK(entries.size() == 13);
}

TEST_CASE("geometric log accumulation is exact powers") {
    auto entries = enumerate_up_to(GPrimeSystem::geometric(2.0), 8.1);
    REQUIRE(entries.size() == 4);
    for (size_t k = 0; k < entries.size(); ++k)
        CHECK(entries[k].exact_value == (1ull << k));
}

TEST_CASE("tie epsilon admits boundary products in log mode") {
    // 2.5^3 = 15.625 exactly; the accumulated logs may land an ulp above
    // log(15.625), which tie_epsilon must absorb.
    auto entries = enumerate_up_to(GPrimeSystem::geometric(2.5), 15.625);
    CHECK(entries.size() == 4);
}

TEST_CASE("squarefree stream") {
    auto entries =
        enumerate_squarefree_up_to(GPrimeSystem::classical(), 30.0);
    std::vector<uint64_t> values;
    for (const auto& e : entries) {
        CHECK(e.squarefree);
        CHECK(e.mobius_sign != 0);
        values.push_back(e.exact_value);
    }
    CHECK(values == std::vector<uint64_t>{1, 2, 3, 5, 6, 7, 10, 11, 13, 14, 15,
                                          17, 19, 21, 22, 23, 26, 29, 30});
}

TEST_CASE("count in window") {
    auto classical = GPrimeSystem::classical();
    CHECK(gprimes::count_in_window(classical, 10.0, 20.0) == 10);
    CHECK(gprimes::count_in_window(classical, 1.0, 1.0) == 0);
    // Entries in (3, 9] are 4, 6, 8, 9.
    auto p23 = GPrimeSystem::explicit_list({2.0, 3.0});
    CHECK(gprimes::count_in_window(p23, 3.0, 9.0) == 4);
    CHECK_THROWS_AS(gprimes::count_in_window(classical, 20.0, 10.0),
                    std::domain_error);
}

TEST_CASE("budget exhaustion throws with partial count") {
    EnumerationBudget budget;
    budget.max_entries = 100;
    SemigroupEnumerator en(GPrimeSystem::classical(), 1000.0, budget);
    GIntegerEntry e;
    uint64_t seen = 0;
    try {
        while (en.next(e)) ++seen;
        FAIL("expected BudgetExceededError");
    } catch (const gprimes::BudgetExceededError& err) {
        CHECK(seen == 100);
        CHECK(err.partial_count() == 100);
    }
}

TEST_CASE("csv line rendering") {
    GIntegerEntry unit;
    CHECK(gprimes::entry_csv_line(unit) == "0,1,1,");
    auto entries = enumerate_up_to(GPrimeSystem::classical(), 12.0);
    const auto& e12 = entries[11];
    CHECK(gprimes::entry_csv_line(e12) ==
          std::string("2.484906649788,12,0,0^2*1^1"));
}

TEST_CASE("budget validation") {
    EnumerationBudget bad;
    bad.tie_epsilon = 1.0;
    CHECK_THROWS_AS(SemigroupEnumerator(GPrimeSystem::classical(), 10.0, bad),
                    std::invalid_argument);
    CHECK_THROWS_AS(SemigroupEnumerator(GPrimeSystem::classical(), 0.5, {}),
                    std::domain_error);
}
