#include "gprimes/cli.hpp"

#include <cmath>
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <stdexcept>
#include <string>

#include "json.hpp"

#include "gprimes/counting.hpp"
#include "gprimes/errors.hpp"
#include "gprimes/exponents.hpp"
#include "gprimes/systems.hpp"
#include "gprimes/zeta.hpp"

namespace gprimes {

namespace {

std::string fmt_real(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.15g", v);
    return buf;
}

// Write to stdout when path is empty, else to a temp file renamed into place
// so readers never observe a partial file.
void write_output(const std::string& path, const std::string& content) {
    if (path.empty()) {
        std::fwrite(content.data(), 1, content.size(), stdout);
        std::fflush(stdout);
        return;
    }
    std::filesystem::path target(path);
    std::filesystem::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
        if (!os) throw std::runtime_error("cannot open output file: " + path);
        os.write(content.data(), static_cast<std::streamsize>(content.size()));
        if (!os) throw std::runtime_error("write failed: " + path);
    }
    std::filesystem::rename(tmp, target);
}

int fail_spec(const char* what) {
    std::fprintf(stderr, "error: %s\n", what);
    return kExitSpecError;
}

EnumerationBudget budget_of(const RunConfig& cfg) {
    EnumerationBudget b;
    b.max_entries = cfg.budget;
    b.tie_epsilon = cfg.tie_epsilon;
    return b;
}

nlohmann::json estimate_json(const ExponentEstimate& e) {
    double se = std::isfinite(e.slope_stderr) ? e.slope_stderr : 0.0;
    return {{"hat", e.exponent_hat},
            {"stderr", se},
            {"windows", e.windows_used},
            {"reliable", e.reliable},
            {"floored", e.floored}};
}

}  // namespace

GridKind parse_grid(const std::string& text, uint64_t* uniform_points) {
    if (text == "jumps") return GridKind::Jumps;
    if (text == "dyadic") return GridKind::Dyadic;
    const std::string prefix = "uniform:";
    if (text.rfind(prefix, 0) == 0) {
        const char* digits = text.c_str() + prefix.size();
        char* end = nullptr;
        unsigned long long n = std::strtoull(digits, &end, 10);
        if (end == digits || *end != '\0' || n == 0)
            throw std::invalid_argument("invalid uniform point count: " + text);
        if (uniform_points) *uniform_points = n;
        return GridKind::Uniform;
    }
    throw std::invalid_argument("unknown grid: " + text);
}

int cmd_tabulate(const RunConfig& cfg) {
    try {
        if (cfg.format_given && cfg.format != OutputFormat::Csv)
            return fail_spec("tabulate output is csv");
        if (!(cfg.x_max >= 1.0)) return fail_spec("xmax must be >= 1");
        GPrimeSystem sys = GPrimeSystem::parse_spec(cfg.system_spec);
        JumpTable table = build_jump_table(sys, cfg.x_max, budget_of(cfg));

        std::string out = "x,N,psi,M,pi\n";
        auto row_at = [&](double x) {
            out += fmt_real(x);
            out += ',';
            out += std::to_string(static_cast<long long>(table.query(CountFn::N, x)));
            out += ',';
            out += fmt_real(table.query(CountFn::Psi, x));
            out += ',';
            out += std::to_string(static_cast<long long>(table.query(CountFn::M, x)));
            out += ',';
            out += std::to_string(static_cast<long long>(table.query(CountFn::Pi, x)));
            out += '\n';
        };
        switch (cfg.grid) {
            case GridKind::Jumps:
                for (const JumpRecord& r : table.jumps()) {
                    out += fmt_real(r.x);
                    out += ',';
                    out += std::to_string(static_cast<long long>(r.n));
                    out += ',';
                    out += fmt_real(r.psi);
                    out += ',';
                    out += std::to_string(static_cast<long long>(r.m));
                    out += ',';
                    out += std::to_string(static_cast<long long>(r.pi));
                    out += '\n';
                }
                break;
            case GridKind::Dyadic:
                for (double x = 1.0; x <= cfg.x_max; x *= 2.0) row_at(x);
                break;
            case GridKind::Uniform: {
                uint64_t n = cfg.uniform_points;
                if (n == 0) return fail_spec("uniform grid needs a point count");
                if (n == 1) {
                    row_at(cfg.x_max);
                } else {
                    for (uint64_t i = 0; i < n; ++i)
                        row_at(1.0 + (cfg.x_max - 1.0) *
                                         (static_cast<double>(i) /
                                          static_cast<double>(n - 1)));
                }
                break;
            }
        }
        write_output(cfg.out_path, out);
        return kExitOk;
    } catch (const BudgetExceededError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitBudget;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitSpecError;
    }
}

int cmd_exponents(const RunConfig& cfg) {
    try {
        if (cfg.format_given && cfg.format != OutputFormat::Json)
            return fail_spec("exponents output is json");
        if (!(cfg.x_max >= 2.0)) return fail_spec("xmax must be >= 2");

        ExponentEstimate alpha, beta, gamma;
        double rho_value = 1.0;
        bool rho_estimated = false;
        std::string system_label;

        if (!cfg.selftest.empty()) {
            const std::string prefix = "power:";
            if (cfg.selftest.rfind(prefix, 0) != 0)
                return fail_spec("unknown selftest (expected power:<theta>)");
            const char* digits = cfg.selftest.c_str() + prefix.size();
            char* end = nullptr;
            double theta = std::strtod(digits, &end);
            if (end == digits || *end != '\0' || !std::isfinite(theta))
                return fail_spec("invalid selftest exponent");
            int n_windows = std::max(6, std::ilogb(cfg.x_max));
            ErrorSeries series = synthetic_power_series(theta, n_windows);
            alpha = beta = gamma = fit_exponent(series);
            system_label = "selftest:power:" + fmt_real(theta);
        } else {
            GPrimeSystem sys = GPrimeSystem::parse_spec(cfg.system_spec);
            system_label = sys.canonical_spec();
            if (sys.kind() == SystemKind::Classical && cfg.x_max <= 2e9) {
                // Sieve-backed scan; avoids materializing the jump table.
                ClassicalErrorScan scan = classical_error_series(
                    static_cast<uint64_t>(std::floor(cfg.x_max)));
                alpha = fit_exponent(scan.psi_error);
                beta = fit_exponent(scan.n_error);
                gamma = fit_exponent(scan.m_raw);
                rho_value = 1.0;
                rho_estimated = false;
            } else {
                JumpTable table = build_jump_table(sys, cfg.x_max, budget_of(cfg));
                rho_value = table.rho();
                rho_estimated = table.rho_estimated();
                alpha = fit_exponent(
                    dyadic_error_series(table, ErrorKind::PsiError, 1.0));
                beta = fit_exponent(
                    dyadic_error_series(table, ErrorKind::NError, rho_value));
                gamma = fit_exponent(
                    dyadic_error_series(table, ErrorKind::MRaw, 0.0));
            }
        }

        ExponentVerdict verdict =
            exponent_verdict(alpha, beta, gamma, cfg.gap_tol, cfg.floor_tol);

        nlohmann::json j{
            {"schema", 1},
            {"system", system_label},
            {"x_max", cfg.x_max},
            {"rho", {{"value", rho_value}, {"estimated", rho_estimated}}},
            {"alpha", estimate_json(alpha)},
            {"beta", estimate_json(beta)},
            {"gamma", estimate_json(gamma)},
            {"verdict",
             {{"gap", verdict.two_largest_gap},
              {"floor", verdict.min_of_two_largest},
              {"pass", verdict.pass},
              {"reliable", verdict.reliable}}}};
        write_output(cfg.out_path, j.dump(2) + "\n");
        return verdict.reliable ? kExitOk : kExitUnreliable;
    } catch (const BudgetExceededError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitBudget;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitSpecError;
    }
}

int cmd_zeta(const RunConfig& cfg) {
    try {
        if (cfg.format_given && cfg.format != OutputFormat::Csv)
            return fail_spec("zeta output is csv");
        if (!(cfg.x_max >= 2.0)) return fail_spec("xmax must be >= 2");
        if (cfg.sigma_grid.empty() || cfg.t_grid.empty())
            return fail_spec("sigma and t grids must be nonempty");
        GPrimeSystem sys = GPrimeSystem::parse_spec(cfg.system_spec);
        JumpTable table = build_jump_table(sys, cfg.x_max, budget_of(cfg));
        double c = sys.density().value_or(0.0);

        std::string out = "sigma,t,route,re,im,trunc_bound\n";
        auto row = [&](double sigma, double t, const ZetaValue& z) {
            out += fmt_real(sigma);
            out += ',';
            out += fmt_real(t);
            out += ',';
            out += route_name(z.route);
            out += ',';
            out += fmt_real(z.value.real());
            out += ',';
            out += fmt_real(z.value.imag());
            out += ',';
            out += fmt_real(z.trunc_bound);
            out += '\n';
        };

        bool mismatch = false;
        for (double sigma : cfg.sigma_grid) {
            for (double t : cfg.t_grid) {
                std::complex<double> s{sigma, t};
                ZetaValue e = zeta_euler(sys, s, cfg.x_max);
                ZetaValue r = zeta_recip_dirichlet(sys, s, cfg.x_max, budget_of(cfg));
                ZetaValue m = mellin_eval(table, CountFn::N, c, s);
                row(sigma, t, e);
                row(sigma, t, r);
                row(sigma, t, m);
                if (!zeta_routes_agree(e, r, m)) mismatch = true;
            }
        }
        write_output(cfg.out_path, out);
        return mismatch ? kExitRouteMismatch : kExitOk;
    } catch (const BudgetExceededError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitBudget;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitSpecError;
    }
}

}  // namespace gprimes
