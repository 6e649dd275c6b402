#pragma once

#include <utility>
#include <vector>

#include "gprimes/counting.hpp"

namespace gprimes {

struct ExponentEstimate {
    double exponent_hat = 0.0;
    double slope_stderr = 0.0;
    int windows_used = 0;
    std::vector<std::pair<int, double>> window_data;  // (j, log2 sup) fitted
    double fit_residual = 0.0;
    bool reliable = false;
    bool floored = false;  // some supremum hit the zero floor 2^-60
};

// Least-squares slope of log2(sup) against the window index over the top
// half of the windows (k = (n+1)/2). Requires k >= 4 to be reliable.
ExponentEstimate fit_exponent(const ErrorSeries& series);

struct ExponentVerdict {
    double alpha_hat = 0.0;  // psi-error exponent
    double beta_hat = 0.0;   // n-error exponent
    double gamma_hat = 0.0;  // m-raw exponent
    double two_largest_gap = 0.0;
    double min_of_two_largest = 0.0;
    bool pass = false;
    bool reliable = false;
};

// Checks that the two largest of the three exponents agree within gap_tol
// and sit at least 0.5 - floor_tol.
ExponentVerdict exponent_verdict(const ExponentEstimate& alpha,
                                 const ExponentEstimate& beta,
                                 const ExponentEstimate& gamma,
                                 double gap_tol, double floor_tol);

// Windows with sup_j = 2^(theta (j+1)), i.e. sup over [2^j, 2^(j+1)] of
// x^theta. Used for fitter self-tests.
ErrorSeries synthetic_power_series(double theta, int n_windows);

}  // namespace gprimes
