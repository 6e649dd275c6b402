#include "gprimes/prime_profile.hpp"

#include <cmath>
#include <stdexcept>

#include "gprimes/zeta_scalar.hpp"

namespace gprimes {

PrimeCountProfile::PrimeCountProfile(double x_max, double rel_tol)
    : x_max_(x_max), rel_tol_(rel_tol) {
    if (!(x_max >= 2.0)) throw std::domain_error("PrimeCountProfile: x_max >= 2");
    if (!(rel_tol > 0.0)) throw std::domain_error("PrimeCountProfile: rel_tol > 0");
    // The inverse brackets by doubling, so evaluation may reach 2 * x_max.
    double l_max = std::log(2.0 * x_max);
    int k_max = static_cast<int>(std::ceil(3.5 * l_max)) + 20;
    if (k_max < 40) k_max = 40;
    zeta_k1_.reserve(k_max);
    for (int k = 1; k <= k_max; ++k)
        zeta_k1_.push_back(riemann_zeta_real(static_cast<double>(k) + 1.0));
}

double PrimeCountProfile::zeta_term(int k) const {
    if (k < 1 || k > terms()) throw std::out_of_range("zeta_term: bad k");
    return zeta_k1_[k - 1];
}

double PrimeCountProfile::value(double x) const {
    if (!(x >= 1.0)) throw std::domain_error("PrimeCountProfile::value: x >= 1");
    double lx = std::log(x);
    if (lx == 0.0) return 0.0;
    int k_min = static_cast<int>(std::ceil(3.0 * lx)) + 10;
    double sum = 0.0;
    double pw = 1.0;  // lx^k / k!
    for (int k = 1; k <= terms(); ++k) {
        pw *= lx / k;
        double term = pw / (k * zeta_k1_[k - 1]);
        sum += term;
        if (k >= k_min && term < rel_tol_ * sum) break;
    }
    return sum;
}

double PrimeCountProfile::derivative(double x) const {
    if (!(x >= 1.0))
        throw std::domain_error("PrimeCountProfile::derivative: x >= 1");
    double lx = std::log(x);
    int k_min = static_cast<int>(std::ceil(3.0 * lx)) + 10;
    double sum = 0.0;
    double pw = 1.0;  // lx^(k-1) / (k-1)!
    for (int k = 1; k <= terms(); ++k) {
        double term = pw / (k * zeta_k1_[k - 1]);
        sum += term;
        if (k >= k_min && term < rel_tol_ * sum) break;
        pw *= lx / k;
    }
    return sum / x;
}

double PrimeCountProfile::inverse(double y) const {
    if (!(y >= 0.0)) throw std::domain_error("PrimeCountProfile::inverse: y >= 0");
    if (y == 0.0) return 1.0;
    double lo = 1.0, hi = 2.0;
    while (value(hi) < y) {
        lo = hi;
        hi *= 2.0;
        if (hi > 1e300)
            throw std::domain_error("PrimeCountProfile::inverse: bracket overflow");
    }
    while (hi - lo > 1e-13 * hi) {
        double mid = lo + 0.5 * (hi - lo);
        if (mid <= lo || mid >= hi) break;
        if (value(mid) < y)
            lo = mid;
        else
            hi = mid;
    }
    double x = 0.5 * (lo + hi);
    for (int i = 0; i < 2; ++i) {
        double d = derivative(x);
        if (d <= 0.0) break;
        double step = (value(x) - y) / d;
        double next = x - step;
        if (next < lo) next = lo;
        if (next > hi) next = hi;
        x = next;
    }
    return x;
}

}  // namespace gprimes
