// commands.hpp: the four subcommands of the dressed tool as library calls
//
// Each command returns a Table; the executable only parses flags, calls one
// of these and writes the result. Exit codes: 0 ok/pass, 1 validation
// failed, 2 usage, 3 runtime or numerical failure.

#pragma once

#include "dressed/cli/table.hpp"
#include "dressed/core.hpp"
#include "dressed/floquet.hpp"
#include "dressed/propagator.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace dressed::cli {

enum ExitCode : int { kExitOk = 0, kExitValidationFailed = 1, kExitUsage = 2, kExitRuntime = 3 };

class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    SystemParams params = SystemParams::from_rabi(0.1, 0.5);
    PropagationConfig propagation;
    int n_grid{floquet::kDefaultGrid};
    OutputFormat format{OutputFormat::csv};
    std::string output_path{"-"};  // "-" is standard output
    int threads{1};
};

// Pass/fail thresholds used by validate, scaled by delta where the
// first-order claim is O(delta^2) (quasienergies, fidelity) or O(delta)
// (relative intensities).
struct Thresholds {
    double quasienergy_gap;
    double min_fidelity;
    double intensity_rel;
    double intensity_abs_floor;
    double forbidden_leakage;
    double unitarity_drift;
    double eps_sum;

    static Thresholds for_params(const SystemParams& params);
};

// Rows (zeta, source, mode, tau, w1, w2) for exact and analytic modes.
Table cmd_weights(const RunConfig& config, const std::vector<double>& zeta_list);

// Rows (zeta, n, eps1_analytic, eps2_analytic, eps1_exact, eps2_exact) shifted
// into manifolds -manifolds..manifolds; crossing zeta values in metadata.
Table cmd_sweep(const RunConfig& config, double zeta_min, double zeta_max, int zeta_steps, int manifolds);

// Transition lines at the configured params, sorted by frequency.
Table cmd_spectrum(const RunConfig& config, int k_max, bool include_forbidden);

struct ValidationReport {
    Table table;
    bool passed{false};
};

// Per-zeta comparison of exact and first-order results; a failure at one
// zeta is recorded in its row and does not abort the rest.
ValidationReport cmd_validate(const RunConfig& config, const std::vector<double>& zeta_list);

// Writes to config.output_path or stdout.
void emit(const Table& table, const RunConfig& config);

}  // namespace dressed::cli
