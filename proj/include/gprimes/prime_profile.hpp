#pragma once

#include <vector>

namespace gprimes {

// Strictly increasing profile F(x) = sum_{k>=1} (log x)^k / (k! * k * zeta(k+1))
// for x >= 1, with F(1) = 0. Supports evaluation, the derivative, and a
// numerical inverse accurate to about 1e-12 relative.
class PrimeCountProfile {
public:
    explicit PrimeCountProfile(double x_max = 1e12, double rel_tol = 1e-16);

    double value(double x) const;
    double derivative(double x) const;
    double inverse(double y) const;

    int terms() const { return static_cast<int>(zeta_k1_.size()); }
    double zeta_term(int k) const;  // zeta(k+1), 1-based k

private:
    std::vector<double> zeta_k1_;
    double x_max_;
    double rel_tol_;
};

}  // namespace gprimes
