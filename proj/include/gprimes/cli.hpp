#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace gprimes {

inline constexpr int kExitOk = 0;
inline constexpr int kExitSpecError = 2;
inline constexpr int kExitBudget = 3;
inline constexpr int kExitUnreliable = 4;
inline constexpr int kExitRouteMismatch = 5;

enum class GridKind { Jumps, Dyadic, Uniform };
enum class OutputFormat { Csv, Json };

struct RunConfig {
    std::string system_spec;
    double x_max = 1e6;
    GridKind grid = GridKind::Jumps;
    uint64_t uniform_points = 0;
    uint64_t budget = 100'000'000;
    double tie_epsilon = 1e-9;
    double gap_tol = 0.1;
    double floor_tol = 0.1;
    std::string out_path;  // empty = stdout
    OutputFormat format = OutputFormat::Csv;
    bool format_given = false;
    std::string selftest;  // "power:<theta>" or empty
    std::vector<double> sigma_grid = {2.0};
    std::vector<double> t_grid = {0.0};
};

GridKind parse_grid(const std::string& text, uint64_t* uniform_points);

// Subcommand entry points. Return one of the kExit* codes; diagnostics go
// to stderr, results to out_path or stdout atomically.
int cmd_tabulate(const RunConfig& cfg);
int cmd_exponents(const RunConfig& cfg);
int cmd_zeta(const RunConfig& cfg);

}  // namespace gprimes
