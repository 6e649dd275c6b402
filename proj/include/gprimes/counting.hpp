#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gprimes/semigroup.hpp"
#include "gprimes/systems.hpp"

namespace gprimes {

enum class CountFn { N, Psi, M, Pi };

// The three error signals whose growth exponents get fitted:
//   PsiError: |psi(x) - x|, NError: |N(x) - rho x|, MRaw: |M(x)|.
enum class ErrorKind { PsiError, NError, MRaw };

// One jump of the counting functions, with inclusive prefix values.
struct JumpRecord {
    double x;
    double log_x;
    uint64_t exact_x;  // 0 outside exact mode

    int64_t d_n;
    double d_psi;
    int64_t d_m;
    int64_t d_pi;

    int64_t n;
    double psi;
    int64_t m;
    int64_t pi;
};

// Sorted jump list for one system over [1, x_max], supporting right-continuous
// queries of N, psi, M, pi.
class JumpTable {
public:
    JumpTable(std::string system_spec, double x_max,
              std::vector<JumpRecord> jumps, double rho, bool rho_estimated);

    const std::string& system_spec() const { return system_spec_; }
    double x_max() const { return x_max_; }
    const std::vector<JumpRecord>& jumps() const { return jumps_; }
    double rho() const { return rho_; }
    bool rho_estimated() const { return rho_estimated_; }
    uint64_t entry_count() const;  // N(x_max)

    double query(CountFn which, double x) const;

private:
    std::string system_spec_;
    double x_max_;
    std::vector<JumpRecord> jumps_;
    double rho_;
    bool rho_estimated_;
};

JumpTable build_jump_table(const GPrimeSystem& system, double x_max,
                           EnumerationBudget budget = {});

struct WindowSup {
    int index;
    double sup;
};

struct ErrorSeries {
    ErrorKind kind;
    double rho;  // only meaningful for NError
    std::vector<WindowSup> windows;
};

// sup over [lo, hi] of |f(x) - c x| where f is the requested counting
// function. Candidates: f(lo), both one-sided values at every jump inside
// (lo, hi], and f(hi).
double window_sup(const JumpTable& table, CountFn which, double c, double lo,
                  double hi);
double window_sup_error(const JumpTable& table, ErrorKind kind, double rho,
                        double lo, double hi);

// Suprema over the dyadic windows [2^j, 2^(j+1)], j = 0 .. ilogb(x_max)-1.
ErrorSeries dyadic_error_series(const JumpTable& table, ErrorKind kind,
                                double rho);

// Streaming variant of the dyadic suprema for jump sequences too large to
// hold as a JumpTable. Feed jumps with distinct, nondecreasing abscissae and
// both one-sided values; finish() flushes the remaining window boundaries.
class DyadicSupScan {
public:
    DyadicSupScan(int n_windows, double c);

    void feed(double x, double f_before, double f_after);
    std::vector<double> finish();

private:
    void add(int index, double v);

    int n_windows_;
    double c_;
    std::vector<double> sups_;
    int next_boundary_ = 0;  // exponent of the next unflushed boundary 2^m
    double f_cur_ = 0.0;
    double last_x_ = 0.0;
    bool finished_ = false;
};

struct ClassicalErrorScan {
    ErrorSeries psi_error;
    ErrorSeries n_error;
    ErrorSeries m_raw;
    int64_t m_final = 0;
    double psi_final = 0.0;
};

// Sieve-backed dyadic error series for the classical system, avoiding the
// generic enumerator. x_max up to the sieve limit guard.
ClassicalErrorScan classical_error_series(uint64_t x_max);

}  // namespace gprimes
