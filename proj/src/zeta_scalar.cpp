#include "gprimes/zeta_scalar.hpp"

#include <cmath>
#include <stdexcept>

namespace gprimes {

namespace {
constexpr int kEulerMaclaurinCutoff = 64;
}

double zeta_euler_maclaurin(double s) {
    if (s <= 1.0) throw std::domain_error("zeta_euler_maclaurin: need s > 1");
    if (s > 60.0) {
        // 2^-s already dominates every correction term at double precision.
        double sum = 1.0;
        for (int n = 2; n <= 8; ++n) sum += std::pow(n, -s);
        return sum;
    }
    const double N = kEulerMaclaurinCutoff;
    double sum = 0.0;
    for (int n = 1; n < kEulerMaclaurinCutoff; ++n) sum += std::pow(n, -s);
    sum += std::pow(N, 1.0 - s) / (s - 1.0);
    sum += 0.5 * std::pow(N, -s);
    // Bernoulli corrections B2/2!, B4/4!, B6/6!.
    double t = s * std::pow(N, -s - 1.0);
    sum += t / 12.0;
    t *= (s + 1.0) * (s + 2.0) / (N * N);
    sum -= t / 720.0;
    t *= (s + 3.0) * (s + 4.0) / (N * N);
    sum += t / 30240.0;
    return sum;
}

double zeta_eta_accelerated(double s) {
    if (s <= 0.0 || s == 1.0)
        throw std::domain_error("zeta_eta_accelerated: need s > 0, s != 1");
    // Cohen-Rodriguez Villegas-Zagier acceleration of the eta series.
    const int n = 48;
    double d = std::pow(3.0 + std::sqrt(8.0), n);
    d = (d + 1.0 / d) / 2.0;
    double b = -1.0;
    double c = -d;
    double sum = 0.0;
    for (int k = 0; k < n; ++k) {
        c = b - c;
        sum += c * std::pow(k + 1, -s);
        b *= (k + n) * (k - n) / ((k + 0.5) * (k + 1));
    }
    return sum / d / (1.0 - std::pow(2.0, 1.0 - s));
}

double riemann_zeta_real(double s) {
    if (s == 1.0 || s <= 0.0)
        throw std::domain_error("riemann_zeta_real: need s > 0, s != 1");
    if (s > 1.0) return zeta_euler_maclaurin(s);
    return zeta_eta_accelerated(s);
}

}  // namespace gprimes
