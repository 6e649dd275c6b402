#include "gprimes/zeta.hpp"

#include <cmath>
#include <stdexcept>

#include "gprimes/exponents.hpp"
#include "gprimes/zeta_scalar.hpp"

namespace gprimes {

namespace {

std::complex<double> power_neg(double x, std::complex<double> s) {
    return std::exp(-s * std::log(x));
}

// |remainder| of the squarefree Mobius series over a finite prime set, by
// enumerating the subsets that the main sum (products <= x_max) excluded.
// Primes are given by log value; sigma > 0.
double subset_tail_bound(const std::vector<double>& prime_logs, double log_cutoff,
                         double sigma) {
    double total = 0.0;
    // Depth-first over subsets in index order; terms below 1e-300 are dead
    // ends because extending a subset only shrinks them.
    struct Frame {
        size_t next;
        double log_val;
    };
    std::vector<Frame> stack;
    stack.push_back({0, 0.0});
    while (!stack.empty()) {
        Frame f = stack.back();
        stack.pop_back();
        if (f.log_val > log_cutoff) total += std::exp(-sigma * f.log_val);
        for (size_t i = f.next; i < prime_logs.size(); ++i) {
            double lv = f.log_val + prime_logs[i];
            if (sigma * lv > 745.0) break;  // exp underflow, and it only grows
            stack.push_back({i + 1, lv});
        }
    }
    return total;
}

}  // namespace

const char* route_name(ZetaRoute route) {
    switch (route) {
        case ZetaRoute::EulerProduct: return "euler-product";
        case ZetaRoute::DirichletSeries: return "dirichlet-series";
        case ZetaRoute::MellinIntegral: return "mellin-integral";
    }
    return "";
}

ZetaValue zeta_euler(const GPrimeSystem& system, std::complex<double> s,
                     double prime_bound) {
    if (!(prime_bound >= 1.0))
        throw std::domain_error("zeta_euler: need prime_bound >= 1");
    double sigma = s.real();
    bool pseudo_finite =
        system.finite() || system.kind() == SystemKind::DoublyExponential;
    if (pseudo_finite) {
        if (!(sigma > 0.0))
            throw std::domain_error("zeta_euler: need Re s > 0");
    } else {
        if (!(sigma > 1.0))
            throw std::domain_error(
                "zeta_euler: need Re s > 1 for infinite systems");
        if (!(prime_bound > 1.0))
            throw std::domain_error("zeta_euler: need prime_bound > 1");
    }

    ZetaValue out;
    out.s = s;
    out.route = ZetaRoute::EulerProduct;
    out.heuristic_bound = false;

    std::vector<GPrime> primes = system.prime_table(prime_bound);
    std::complex<double> val = 1.0;
    for (const GPrime& p : primes) val /= 1.0 - power_neg(p.value, s);
    out.value = val;

    double tail_log = 0.0;
    if (system.finite()) {
        std::vector<GPrime> all = system.prime_table(1e308);
        for (size_t i = primes.size(); i < all.size(); ++i)
            tail_log += -std::log1p(-std::pow(all[i].value, -sigma));
    } else if (system.kind() == SystemKind::DoublyExponential) {
        // Continue the doubling exponents past the bound until underflow.
        double log_bound = std::log(prime_bound);
        double log2v = std::log(2.0);
        for (int n = 0; n < 64; ++n) {
            double e = std::ldexp(1.0, n);
            double lv = e * log2v;
            if (lv <= log_bound) continue;
            double t = std::exp(-sigma * lv);
            if (t < 1e-300) break;
            tail_log += -std::log1p(-t);
        }
    } else {
        // pi_P(t) <= t for the built-in infinite systems.
        double B = prime_bound;
        tail_log = sigma * std::pow(B, 1.0 - sigma) /
                   ((sigma - 1.0) * (1.0 - std::pow(B, -sigma)));
    }
    out.trunc_bound = std::abs(val) * std::expm1(tail_log);
    return out;
}

ZetaValue zeta_recip_dirichlet(const GPrimeSystem& system,
                               std::complex<double> s, double x_max,
                               EnumerationBudget budget) {
    if (!(x_max >= 1.0))
        throw std::domain_error("zeta_recip_dirichlet: need x_max >= 1");
    double sigma = s.real();

    ZetaValue out;
    out.s = s;
    out.route = ZetaRoute::DirichletSeries;
    out.heuristic_bound = false;

    // Pick the tail strategy before summing so domain errors fire early.
    enum class Tail { Subset, DensityBound } tail;
    std::vector<double> tail_prime_logs;
    double density_c = 1.0;
    SystemKind kind = system.kind();
    if (system.finite() && system.prime_table(1e308).size() <= 20) {
        if (!(sigma > 0.0))
            throw std::domain_error("zeta_recip_dirichlet: need Re s > 0");
        tail = Tail::Subset;
        for (const GPrime& p : system.prime_table(1e308))
            tail_prime_logs.push_back(p.log_value);
    } else if (kind == SystemKind::DoublyExponential) {
        if (!(sigma >= 0.1))
            throw std::domain_error(
                "zeta_recip_dirichlet: need Re s >= 0.1 for doubly-exp");
        tail = Tail::Subset;
        // Exponents 2^n with 2^n * sigma * log 2 below the underflow line;
        // anything larger contributes < 1e-300 and is ignored.
        for (int n = 0; n < 64; ++n) {
            double lv = std::ldexp(1.0, n) * std::log(2.0);
            if (sigma * lv > 745.0) break;
            tail_prime_logs.push_back(lv);
        }
    } else {
        if (!(sigma > 1.0))
            throw std::domain_error(
                "zeta_recip_dirichlet: need Re s > 1 for infinite systems");
        tail = Tail::DensityBound;
        if (kind == SystemKind::Classical) {
            density_c = 1.0;  // N(t) = floor(t) <= t
        } else if (kind == SystemKind::PowerUnion) {
            // N_P(t) <= sum_k t / k^(1/beta) = zeta(1/beta) t
            density_c = riemann_zeta_real(1.0 / system.power_union_beta());
        } else {
            density_c = 2.0;
            out.heuristic_bound = true;
        }
    }

    SemigroupEnumerator en(system, x_max, budget, true);
    std::complex<double> sum = 0.0;
    GIntegerEntry e;
    while (en.next(e))
        sum += static_cast<double>(e.mobius_sign) * std::exp(-s * e.log_value);
    out.value = sum;

    if (tail == Tail::Subset) {
        double log_cutoff = std::log(x_max) + budget.tie_epsilon;
        out.trunc_bound = subset_tail_bound(tail_prime_logs, log_cutoff, sigma);
    } else {
        out.trunc_bound = sigma * density_c * std::pow(x_max, 1.0 - sigma) /
                          (sigma - 1.0);
    }
    return out;
}

ZetaValue mellin_eval(const JumpTable& table, CountFn which, double c,
                      std::complex<double> s) {
    double sigma = s.real();
    if (c != 0.0 && std::abs(s - std::complex<double>(1.0)) < 1e-6)
        throw std::domain_error("mellin_eval: s too close to the pole at 1");

    double x_max = table.x_max();
    ErrorSeries series;
    series.kind = ErrorKind::MRaw;
    series.rho = c;
    int n_windows = x_max >= 2.0 ? std::ilogb(x_max) : 0;
    for (int j = 0; j < n_windows; ++j)
        series.windows.push_back(
            {j, window_sup(table, which, c, std::ldexp(1.0, j),
                           std::ldexp(1.0, j + 1))});
    ExponentEstimate theta = fit_exponent(series);
    double theta_hat = theta.exponent_hat;
    if (!(sigma > theta_hat + 0.1))
        throw std::domain_error(
            "mellin_eval: Re s must exceed the fitted growth exponent by 0.1");

    auto prefix = [&](const JumpRecord& r) -> double {
        switch (which) {
            case CountFn::N: return static_cast<double>(r.n);
            case CountFn::Psi: return r.psi;
            case CountFn::M: return static_cast<double>(r.m);
            case CountFn::Pi: return static_cast<double>(r.pi);
        }
        return 0.0;
    };
    const auto& jumps = table.jumps();
    std::complex<double> val = 0.0;
    for (size_t i = 0; i < jumps.size(); ++i) {
        double xi = jumps[i].x;
        double xnext = i + 1 < jumps.size() ? jumps[i + 1].x : x_max;
        val += prefix(jumps[i]) * (power_neg(xi, s) - power_neg(xnext, s));
    }
    if (c != 0.0) val += c * s / (s - 1.0) * power_neg(x_max, s - 1.0);

    ZetaValue out;
    out.s = s;
    out.route = ZetaRoute::MellinIntegral;
    out.value = val;
    double sup_edge = series.windows.empty() ? 0.0 : series.windows.back().sup;
    out.trunc_bound = std::abs(s) * sup_edge *
                      std::pow(x_max, theta_hat - sigma) / (sigma - theta_hat);
    out.heuristic_bound = true;
    return out;
}

bool zeta_routes_agree(const ZetaValue& euler, const ZetaValue& recip,
                       double slack) {
    double lhs = std::abs(euler.value * recip.value - 1.0);
    double rhs = euler.trunc_bound * std::abs(recip.value) +
                 (std::abs(euler.value) + euler.trunc_bound) * recip.trunc_bound +
                 slack * (1.0 + std::abs(euler.value) * std::abs(recip.value));
    return lhs <= rhs;
}

bool zeta_routes_agree(const ZetaValue& euler, const ZetaValue& recip,
                       const ZetaValue& mellin_zeta, double slack) {
    if (!zeta_routes_agree(euler, recip, slack)) return false;
    double lhs = std::abs(euler.value - mellin_zeta.value);
    double rhs = euler.trunc_bound + mellin_zeta.trunc_bound +
                 slack * (1.0 + std::abs(euler.value));
    return lhs <= rhs;
}

}  // namespace gprimes
