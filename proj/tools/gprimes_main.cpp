#include <cstdint>
#include <cstdio>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "gprimes/cli.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Beurling generalized prime systems: tabulation, growth "
                 "exponents, and zeta evaluation"};
    app.require_subcommand(1);

    gprimes::RunConfig cfg;
    std::string grid_text = "jumps";
    std::string format_text;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--xmax", cfg.x_max, "largest x considered");
        sub->add_option("--budget", cfg.budget,
                        "max semigroup entries before giving up");
        sub->add_option("--tie-epsilon", cfg.tie_epsilon,
                        "log-space slack for boundary ties");
        sub->add_option("--out", cfg.out_path, "output file (default stdout)");
        sub->add_option("--format", format_text, "output format (csv|json)");
    };

    CLI::App* tab = app.add_subcommand("tabulate",
                                       "emit counting functions as csv");
    tab->add_option("--system", cfg.system_spec, "system spec")->required();
    tab->add_option("--grid", grid_text, "jumps|dyadic|uniform:<n>");
    add_common(tab);

    CLI::App* exp = app.add_subcommand(
        "exponents", "fit error growth exponents, emit json report");
    exp->add_option("--system", cfg.system_spec, "system spec");
    exp->add_option("--gap-tol", cfg.gap_tol, "allowed gap between top exponents");
    exp->add_option("--floor-tol", cfg.floor_tol,
                    "allowed shortfall of the exponent floor below 0.5");
    exp->add_option("--selftest", cfg.selftest,
                    "fit a synthetic series instead (power:<theta>)");
    add_common(exp);

    CLI::App* zet = app.add_subcommand(
        "zeta", "evaluate zeta by three routes, emit csv");
    zet->add_option("--system", cfg.system_spec, "system spec")->required();
    zet->add_option("--sigma", cfg.sigma_grid, "real parts to evaluate")
        ->delimiter(',');
    zet->add_option("--t", cfg.t_grid, "imaginary parts to evaluate")
        ->delimiter(',');
    add_common(zet);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : gprimes::kExitSpecError;
    }

    try {
        cfg.grid = gprimes::parse_grid(grid_text, &cfg.uniform_points);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return gprimes::kExitSpecError;
    }
    if (!format_text.empty()) {
        cfg.format_given = true;
        if (format_text == "csv") {
            cfg.format = gprimes::OutputFormat::Csv;
        } else if (format_text == "json") {
            cfg.format = gprimes::OutputFormat::Json;
        } else {
            std::fprintf(stderr, "error: unknown format: %s\n",
                         format_text.c_str());
            return gprimes::kExitSpecError;
        }
    }

    if (tab->parsed()) return gprimes::cmd_tabulate(cfg);
    if (exp->parsed()) {
        if (cfg.selftest.empty() && cfg.system_spec.empty()) {
            std::fprintf(stderr,
                         "error: exponents needs --system or --selftest\n");
            return gprimes::kExitSpecError;
        }
        return gprimes::cmd_exponents(cfg);
    }
    return gprimes::cmd_zeta(cfg);
}
