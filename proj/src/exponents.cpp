#include "gprimes/exponents.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace gprimes {

ExponentEstimate fit_exponent(const ErrorSeries& series) {
    ExponentEstimate est;
    int n = static_cast<int>(series.windows.size());
    int k = (n + 1) / 2;
    est.windows_used = k;
    est.reliable = k >= 4;
    if (k < 2) {
        est.slope_stderr = std::numeric_limits<double>::infinity();
        return est;
    }
    est.window_data.reserve(k);
    for (int i = n - k; i < n; ++i) {
        double sup = series.windows[i].sup;
        if (!(sup >= 0x1p-60)) {
            sup = 0x1p-60;
            est.floored = true;
        }
        est.window_data.emplace_back(series.windows[i].index, std::log2(sup));
    }
    double sx = 0, sy = 0;
    for (const auto& [j, y] : est.window_data) {
        sx += j;
        sy += y;
    }
    double mx = sx / k, my = sy / k;
    double sxx = 0, sxy = 0;
    for (const auto& [j, y] : est.window_data) {
        sxx += (j - mx) * (j - mx);
        sxy += (j - mx) * (y - my);
    }
    est.exponent_hat = sxy / sxx;
    double ss_res = 0;
    for (const auto& [j, y] : est.window_data) {
        double r = y - (my + est.exponent_hat * (j - mx));
        ss_res += r * r;
    }
    est.fit_residual = std::sqrt(ss_res / k);
    est.slope_stderr = k > 2 ? std::sqrt(ss_res / (k - 2) / sxx)
                             : std::numeric_limits<double>::infinity();
    return est;
}

ExponentVerdict exponent_verdict(const ExponentEstimate& alpha,
                                 const ExponentEstimate& beta,
                                 const ExponentEstimate& gamma,
                                 double gap_tol, double floor_tol) {
    ExponentVerdict v;
    v.alpha_hat = alpha.exponent_hat;
    v.beta_hat = beta.exponent_hat;
    v.gamma_hat = gamma.exponent_hat;
    double hats[3] = {v.alpha_hat, v.beta_hat, v.gamma_hat};
    std::sort(hats, hats + 3, std::greater<double>());
    v.two_largest_gap = hats[0] - hats[1];
    v.min_of_two_largest = hats[1];
    v.reliable = alpha.reliable && beta.reliable && gamma.reliable;
    v.pass = v.two_largest_gap <= gap_tol &&
             v.min_of_two_largest >= 0.5 - floor_tol;
    return v;
}

ErrorSeries synthetic_power_series(double theta, int n_windows) {
    ErrorSeries series;
    series.kind = ErrorKind::MRaw;
    series.rho = 0.0;
    for (int j = 0; j < n_windows; ++j)
        series.windows.push_back({j, std::exp2(theta * (j + 1))});
    return series;
}

}  // namespace gprimes
