// dressed: Floquet states, quasienergies and spectra of a driven two-level system.
//
//   dressed [global options] weights  --zetas 0.628,3.14159
//   dressed [global options] sweep    --zeta-min 0 --zeta-max 6 --zeta-steps 121 --manifolds 1
//   dressed [global options] spectrum --kmax 5 [--include-forbidden]
//   dressed [global options] validate --zetas 0.628,1.571,3.142
//
// Exit status: 0 ok, 1 validation failed, 2 usage error, 3 runtime/numerical error.

#include "dressed/cli/commands.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <sstream>

namespace {

using namespace dressed;
using namespace dressed::cli;

struct GlobalOptions {
    double delta{0.1};
    std::optional<double> rabi;
    std::optional<double> zeta;
    double mu{1.0};
    int steps{4096};
    int grid{floquet::kDefaultGrid};
    std::string format{"csv"};
    std::string out{"-"};
    std::string method{"rk4"};
    int threads{1};
};

RunConfig to_run_config(const GlobalOptions& g) {
    RunConfig rc;
    if (g.zeta) {
        rc.params = SystemParams::from_zeta(g.delta, *g.zeta, g.mu);
    } else {
        rc.params = SystemParams::from_rabi(g.delta, g.rabi.value_or(0.5), g.mu);
    }
    rc.propagation.steps_per_period = g.steps;
    rc.propagation.method = g.method == "magnus2" ? Integrator::magnus2 : Integrator::rk4_renorm;
    rc.propagation.validate();
    rc.n_grid = g.grid;
    rc.format = parse_format(g.format);
    rc.output_path = g.out;
    rc.threads = g.threads;
    return rc;
}

// Strict comma-separated list; an empty list or a malformed entry is a usage error.
std::vector<double> parse_zeta_list(const std::string& text) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        double value = 0.0;
        try {
            value = std::stod(item, &used);
        } catch (const std::exception&) {
            throw UsageError("bad zeta value '" + item + "'");
        }
        if (item.find_first_not_of(" \t", used) != std::string::npos) throw UsageError("bad zeta value '" + item + "'");
        out.push_back(value);
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Floquet (semiclassical dressed) states of a driven two-level system"};
    app.require_subcommand(1);

    GlobalOptions g;
    app.add_option("--delta", g.delta, "transition frequency Delta_0/omega_L")->capture_default_str();
    auto* rabi = app.add_option("--rabi", g.rabi, "Rabi frequency Omega_0/omega_L (default 0.5)");
    auto* zeta = app.add_option("--zeta", g.zeta, "drive strength zeta = 2 Omega_0/omega_L");
    rabi->excludes(zeta);
    app.add_option("--mu", g.mu, "dipole matrix element mu")->capture_default_str();
    app.add_option("--steps", g.steps, "integrator steps per period (power of two >= 64)")->capture_default_str();
    app.add_option("--grid", g.grid, "tau grid points per period (power of two >= 64)")->capture_default_str();
    app.add_option("--format", g.format, "output format")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
    app.add_option("--out", g.out, "output file, '-' for stdout")->capture_default_str();
    app.add_option("--method", g.method, "integrator")->check(CLI::IsMember({"rk4", "magnus2"}))->capture_default_str();
    app.add_option("--threads", g.threads, "worker threads for zeta lists and sweeps")
        ->check(CLI::Range(1, 64))
        ->capture_default_str();

    std::string weight_zetas;
    auto* weights = app.add_subcommand("weights", "weights of |1>,|2> in both modes over one period");
    weights->add_option("--zetas", weight_zetas, "comma-separated zeta values")->required();

    double zeta_min = 0.0, zeta_max = 6.0;
    int zeta_steps = 121, manifolds = 1;
    auto* sweep = app.add_subcommand("sweep", "quasienergy levels against zeta");
    sweep->add_option("--zeta-min", zeta_min)->capture_default_str();
    sweep->add_option("--zeta-max", zeta_max)->capture_default_str();
    sweep->add_option("--zeta-steps", zeta_steps)->capture_default_str();
    sweep->add_option("--manifolds", manifolds, "replicas n = -M..M")->capture_default_str();

    int k_max = 5;
    bool include_forbidden = false;
    auto* spectrum = app.add_subcommand("spectrum", "transition lines ending in the n=0 manifold");
    spectrum->add_option("--kmax", k_max, "largest |m - n|")->capture_default_str();
    spectrum->add_flag("--include-forbidden", include_forbidden, "also list parity-forbidden lines");

    std::string validate_zetas;
    auto* validate = app.add_subcommand("validate", "exact vs first-order report");
    validate->add_option("--zetas", validate_zetas, "comma-separated zeta values")->required();

    for (auto* sub : {weights, sweep, spectrum, validate}) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    try {
        const RunConfig rc = to_run_config(g);
        if (weights->parsed()) {
            emit(cmd_weights(rc, parse_zeta_list(weight_zetas)), rc);
        } else if (sweep->parsed()) {
            emit(cmd_sweep(rc, zeta_min, zeta_max, zeta_steps, manifolds), rc);
        } else if (spectrum->parsed()) {
            emit(cmd_spectrum(rc, k_max, include_forbidden), rc);
        } else if (validate->parsed()) {
            const ValidationReport report = cmd_validate(rc, parse_zeta_list(validate_zetas));
            emit(report.table, rc);
            return report.passed ? kExitOk : kExitValidationFailed;
        }
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const DomainError& e) {
        std::cerr << "invalid parameter: " << e.what() << '\n';
        return kExitUsage;
    } catch (const IoError& e) {
        std::cerr << "i/o error: " << e.what() << '\n';
        return kExitRuntime;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitRuntime;
    }
    return kExitOk;
}
