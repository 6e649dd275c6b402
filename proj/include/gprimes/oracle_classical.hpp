#pragma once

#include <cstdint>
#include <vector>

namespace gprimes {

// Linear sieve over [1, limit]: Mobius function, primality flags, prime list.
struct ClassicalSieve {
    uint64_t limit = 0;
    std::vector<int8_t> mu;        // mu[0] unused, mu[1] = 1
    std::vector<uint8_t> is_prime;
    std::vector<uint64_t> primes;
};
ClassicalSieve classical_sieve(uint64_t limit);

// Mertens prefix sums M(n) = sum_{k<=n} mu(k), tabulated to limit <= 1e9.
struct MertensTable {
    uint64_t limit = 0;
    std::vector<int8_t> mu;
    std::vector<int32_t> prefix;

    int64_t at_index(uint64_t n) const;  // M(n), n <= limit
    int64_t at(double x) const;          // M(floor(x)), 0 for x < 1
};
MertensTable mertens(uint64_t limit);

// The map w(n) = n^(1/beta) used by power-union systems, with exact integer
// arithmetic whenever 1/beta is rational with small denominator.
struct PowerValue {
    double approx;
    long double approx_l;
    uint64_t exact;  // w(n) when it is an integer fitting uint64, else 0
};

class PowerScale {
public:
    explicit PowerScale(double beta);

    double beta() const { return beta_; }
    double inv_beta() const { return inv_beta_; }
    bool rational() const { return rational_; }

    PowerValue value(uint64_t n) const;
    // m * w(n) <= x, decided exactly via 128-bit integers when possible.
    bool pair_le(uint64_t m, uint64_t n, double x) const;
    // #{n >= 1 : w(n) <= bound}
    uint64_t count_le(double bound) const;
    // #{m >= 1 : m * w(n) <= x} under the same predicate as pair_le.
    uint64_t count_le_quotient(double x, uint64_t n) const;
    // #{n >= 1 : m * w(n) <= x}
    uint64_t count_n_le_quotient(double x, uint64_t m) const;

private:
    double beta_;
    double inv_beta_;
    bool rational_ = false;
    uint64_t rat_p_ = 0, rat_q_ = 0;  // 1/beta = p/q when rational
};

// N_P(x) for the system P = primes union primes^(1/beta): counts pairs
// (m, n) of positive integers with m * n^(1/beta) <= x.
uint64_t power_union_count(double beta, double x);

// Two-sum Dirichlet hyperbola evaluation of the Mobius-pair sum
//   M_P(x) = sum_{m * n^(1/beta) <= x} mu(m) mu(n)
// split at (a, b) with a * b = x (validated to 1e-9 relative). Requires
// mert.limit >= x.
int64_t power_union_mertens_split(double beta, double x, double a, double b,
                                  const MertensTable& mert);

// N_P(x) - zeta(1/beta) x - zeta(beta) x^beta
double power_union_count_residual(double beta, double x);

}  // namespace gprimes
