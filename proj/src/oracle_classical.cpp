#include "gprimes/oracle_classical.hpp"

#include <cmath>
#include <stdexcept>

#include "gprimes/zeta_scalar.hpp"

namespace gprimes {

namespace {

uint64_t ipow_u64(uint64_t b, uint64_t e) {  // 0 on overflow
    uint64_t r = 1;
    for (uint64_t i = 0; i < e; ++i) {
        if (b != 0 && r > UINT64_MAX / b) return 0;
        r *= b;
    }
    return r;
}

unsigned __int128 ipow_u128(uint64_t b, uint64_t e) {
    unsigned __int128 r = 1;
    for (uint64_t i = 0; i < e; ++i) r *= b;
    return r;
}

uint64_t floor_root(uint64_t n, uint64_t q) {
    if (q == 1 || n <= 1) return n;
    uint64_t k = static_cast<uint64_t>(
        llroundl(powl(static_cast<long double>(n), 1.0L / static_cast<long double>(q))));
    auto pow_le = [&](uint64_t base) {
        unsigned __int128 r = 1;
        for (uint64_t i = 0; i < q; ++i) {
            r *= base;
            if (r > n) return false;
        }
        return true;
    };
    while (k > 0 && !pow_le(k)) --k;
    while (pow_le(k + 1)) ++k;
    return k;
}

}  // namespace

ClassicalSieve classical_sieve(uint64_t limit) {
    if (limit < 1) throw std::domain_error("classical_sieve: need limit >= 1");
    ClassicalSieve sv;
    sv.limit = limit;
    sv.mu.assign(limit + 1, 0);
    sv.is_prime.assign(limit + 1, 0);
    sv.mu[1] = 1;
    std::vector<uint8_t> comp(limit + 1, 0);
    for (uint64_t i = 2; i <= limit; ++i) {
        if (!comp[i]) {
            sv.primes.push_back(i);
            sv.mu[i] = -1;
            sv.is_prime[i] = 1;
        }
        for (uint64_t p : sv.primes) {
            if (p > limit / i) break;
            comp[i * p] = 1;
            if (i % p == 0) {
                sv.mu[i * p] = 0;
                break;
            }
            sv.mu[i * p] = -sv.mu[i];
        }
    }
    return sv;
}

int64_t MertensTable::at_index(uint64_t n) const {
    if (n > limit) throw std::out_of_range("MertensTable::at_index: n > limit");
    return prefix[n];
}

int64_t MertensTable::at(double x) const {
    if (x < 1.0) return 0;
    double xf = std::floor(x);
    if (xf > static_cast<double>(limit))
        throw std::out_of_range("MertensTable::at: x > limit");
    return prefix[static_cast<uint64_t>(xf)];
}

MertensTable mertens(uint64_t limit) {
    if (limit < 1 || limit > 1'000'000'000ull)
        throw std::domain_error("mertens: limit must be in [1, 1e9]");
    ClassicalSieve sv = classical_sieve(limit);
    MertensTable t;
    t.limit = limit;
    t.mu = std::move(sv.mu);
    t.prefix.resize(limit + 1);
    t.prefix[0] = 0;
    for (uint64_t i = 1; i <= limit; ++i)
        t.prefix[i] = t.prefix[i - 1] + t.mu[i];
    return t;
}

PowerScale::PowerScale(double beta) : beta_(beta) {
    if (!(beta > 0.0 && beta < 1.0))
        throw std::domain_error("PowerScale: need 0 < beta < 1");
    inv_beta_ = 1.0 / beta;
    for (uint64_t q = 1; q <= 8; ++q) {
        double p = std::round(q * inv_beta_);
        if (std::fabs(q * inv_beta_ - p) <= 1e-9 && p > q) {
            rational_ = true;
            rat_p_ = static_cast<uint64_t>(p);
            rat_q_ = q;
            break;
        }
    }
}

PowerValue PowerScale::value(uint64_t n) const {
    PowerValue v;
    v.approx_l = powl(static_cast<long double>(n),
                      static_cast<long double>(inv_beta_));
    v.approx = static_cast<double>(v.approx_l);
    v.exact = 0;
    if (rational_ && n >= 1) {
        uint64_t k = floor_root(n, rat_q_);
        if (ipow_u64(k, rat_q_) == n) {
            uint64_t w = ipow_u64(k, rat_p_);
            if (w != 0) {
                v.exact = w;
                v.approx_l = static_cast<long double>(w);
                v.approx = static_cast<double>(w);
            }
        }
    }
    return v;
}

bool PowerScale::pair_le(uint64_t m, uint64_t n, double x) const {
    if (rational_) {
        double xf = std::floor(x);
        if (xf == x && xf >= 0.0 && xf < 9e18) {
            double lg =
                rat_q_ * std::log2(static_cast<double>(std::max<uint64_t>(m, 1))) +
                rat_p_ * std::log2(static_cast<double>(std::max<uint64_t>(n, 1)));
            double lgx = rat_q_ * std::log2(std::max(xf, 1.0));
            if (lg < 125.0 && lgx < 125.0) {
                unsigned __int128 lhs = ipow_u128(m, rat_q_) * ipow_u128(n, rat_p_);
                unsigned __int128 rhs = ipow_u128(static_cast<uint64_t>(xf), rat_q_);
                return lhs <= rhs;
            }
        }
    }
    long double w = powl(static_cast<long double>(n),
                         static_cast<long double>(inv_beta_));
    return static_cast<long double>(m) * w <= static_cast<long double>(x);
}

uint64_t PowerScale::count_le(double bound) const {
    if (!(bound >= 1.0)) return 0;
    long double bl = bound;
    auto w_le = [&](uint64_t nn) {
        if (nn <= 1) return nn == 1;  // w(1) = 1 <= bound here
        PowerValue v = value(nn);
        if (v.exact != 0) return static_cast<long double>(v.exact) <= bl;
        return v.approx_l <= bl;
    };
    uint64_t n = static_cast<uint64_t>(
        floorl(powl(bl, static_cast<long double>(beta_))));
    if (n < 1) n = 1;
    while (w_le(n + 1)) ++n;
    while (n > 1 && !w_le(n)) --n;
    return n;
}

uint64_t PowerScale::count_le_quotient(double x, uint64_t n) const {
    PowerValue v = value(n);
    long double q = static_cast<long double>(x) / v.approx_l;
    int64_t m = static_cast<int64_t>(floorl(q));
    if (m < 0) m = 0;
    while (pair_le(static_cast<uint64_t>(m) + 1, n, x)) ++m;
    while (m > 0 && !pair_le(static_cast<uint64_t>(m), n, x)) --m;
    return static_cast<uint64_t>(m);
}

uint64_t PowerScale::count_n_le_quotient(double x, uint64_t m) const {
    if (m == 0) throw std::domain_error("count_n_le_quotient: need m >= 1");
    long double q = static_cast<long double>(x) / static_cast<long double>(m);
    int64_t n = 0;
    if (q >= 1.0L)
        n = static_cast<int64_t>(floorl(powl(q, static_cast<long double>(beta_))));
    if (n < 0) n = 0;
    while (pair_le(m, static_cast<uint64_t>(n) + 1, x)) ++n;
    while (n > 0 && !pair_le(m, static_cast<uint64_t>(n), x)) --n;
    return static_cast<uint64_t>(n);
}

uint64_t power_union_count(double beta, double x) {
    if (!(x >= 1.0)) return 0;
    PowerScale scale(beta);
    uint64_t total = 0;
    for (uint64_t n = 1; scale.pair_le(1, n, x); ++n)
        total += scale.count_le_quotient(x, n);
    return total;
}

int64_t power_union_mertens_split(double beta, double x, double a, double b,
                                  const MertensTable& mert) {
    if (!(x >= 1.0 && a >= 1.0 && b >= 1.0))
        throw std::domain_error("power_union_mertens_split: need x, a, b >= 1");
    if (std::fabs(a * b - x) > 1e-9 * x)
        throw std::invalid_argument("power_union_mertens_split: a * b != x");
    if (std::floor(x) > static_cast<double>(mert.limit))
        throw std::out_of_range("power_union_mertens_split: mertens table too small");
    PowerScale scale(beta);

    uint64_t n1 = scale.count_le(a);
    int64_t m1 = static_cast<int64_t>(floorl(static_cast<long double>(b)));
    // Nudge the corner so that (m1, n1) lies inside the region and
    // (m1+1, n1+1) outside, which the two-sum identity needs exactly.
    if (n1 >= 1)
        while (m1 >= 1 && !scale.pair_le(static_cast<uint64_t>(m1), n1, x)) --m1;
    if (m1 < 0) m1 = 0;
    while (scale.pair_le(static_cast<uint64_t>(m1) + 1, n1 + 1, x)) ++m1;

    int64_t s1 = 0;
    for (uint64_t n = 1; n <= n1; ++n) {
        int8_t mu = mert.mu[n];
        if (mu == 0) continue;
        s1 += mu * mert.at_index(scale.count_le_quotient(x, n));
    }
    int64_t s2 = 0;
    for (int64_t m = 1; m <= m1; ++m) {
        int8_t mu = mert.mu[static_cast<uint64_t>(m)];
        if (mu == 0) continue;
        s2 += mu * mert.at_index(scale.count_n_le_quotient(x, static_cast<uint64_t>(m)));
    }
    int64_t overlap = mert.at_index(n1) * mert.at_index(static_cast<uint64_t>(m1));
    return s1 + s2 - overlap;
}

double power_union_count_residual(double beta, double x) {
    double count = static_cast<double>(power_union_count(beta, x));
    return count - riemann_zeta_real(1.0 / beta) * x -
           riemann_zeta_real(beta) * std::pow(x, beta);
}

}  // namespace gprimes
