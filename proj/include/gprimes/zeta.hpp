#pragma once

#include <complex>

#include "gprimes/counting.hpp"
#include "gprimes/semigroup.hpp"
#include "gprimes/systems.hpp"

namespace gprimes {

enum class ZetaRoute { EulerProduct, DirichletSeries, MellinIntegral };
const char* route_name(ZetaRoute route);

struct ZetaValue {
    std::complex<double> s;
    std::complex<double> value;
    double trunc_bound;
    ZetaRoute route;
    // True when the truncation bound rests on an estimated growth rate
    // rather than a proven one.
    bool heuristic_bound;
};

// Euler product over primes <= prime_bound. Finite systems get an exact
// tail; infinite systems require Re s > 1 and use the pi_P(t) <= t tail
//   tail_log = sigma B^(1-sigma) / ((sigma-1)(1 - B^-sigma)).
ZetaValue zeta_euler(const GPrimeSystem& system, std::complex<double> s,
                     double prime_bound);

// 1/zeta_P(s) as the Mobius-weighted Dirichlet series over squarefree
// generalized integers <= x_max. Small finite prime sets get an exact
// subset-sum tail; infinite systems require Re s > 1 and use N_P(t) <= C t.
ZetaValue zeta_recip_dirichlet(const GPrimeSystem& system,
                               std::complex<double> s, double x_max,
                               EnumerationBudget budget = {});

// Truncated Mellin transform of the chosen counting function A:
//   f(s) = c s X^(1-s)/(s-1) + sum_i A(x_i) (x_i^-s - x_(i+1)^-s)
// For which = N and c = rho this approximates zeta_P(s); for which = M and
// c = 0 it approximates 1/zeta_P(s). Requires Re s to clear the fitted
// growth exponent of |A(x) - c x| by 0.1; the tail bound is heuristic.
ZetaValue mellin_eval(const JumpTable& table, CountFn which, double c,
                      std::complex<double> s);

// Consistency checks between the routes, allowing the reported truncation
// bounds plus float slack.
bool zeta_routes_agree(const ZetaValue& euler, const ZetaValue& recip,
                       double slack = 1e-9);
bool zeta_routes_agree(const ZetaValue& euler, const ZetaValue& recip,
                       const ZetaValue& mellin_zeta, double slack = 1e-9);

}  // namespace gprimes
