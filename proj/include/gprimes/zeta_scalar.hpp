#pragma once

namespace gprimes {

// Riemann zeta on the real axis, s > 0, s != 1.
// Euler-Maclaurin for s > 1, alternating-series acceleration for 0 < s < 1.
double riemann_zeta_real(double s);

// Individual routes, exposed so they can be cross-checked on the overlap
// region s > 1 where both converge.
double zeta_euler_maclaurin(double s);   // s > 1
double zeta_eta_accelerated(double s);   // s > 0, s != 1

}  // namespace gprimes
