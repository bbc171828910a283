#include "dressed/cli/commands.hpp"

#include "dressed/analytic.hpp"
#include "dressed/spectroscopy.hpp"

#include <algorithm>
#include <atomic>
#include <cerrno>
#include <cmath>
#include <exception>
#include <cstring>
#include <fstream>
#include <iostream>
#include <thread>

namespace dressed::cli {

namespace {

using ojson = nlohmann::ordered_json;

constexpr int kForbiddenKMax = 9;
constexpr int kIntensityKMax = 7;

std::string method_name(Integrator m) { return m == Integrator::rk4_renorm ? "rk4_renorm" : "magnus2"; }

ojson params_echo(const RunConfig& config) {
    const SystemParams& p = config.params;
    ojson out = ojson::object();
    out["delta"] = p.delta();
    out["rabi"] = p.rabi();
    out["zeta"] = p.zeta();
    out["mu"] = p.dipole();
    out["epsilon_eff"] = p.epsilon_eff();
    out["steps_per_period"] = config.propagation.steps_per_period;
    out["method"] = method_name(config.propagation.method);
    out["n_grid"] = config.n_grid;
    return out;
}

Table make_table(const std::string& command, const RunConfig& config, std::vector<std::string> columns) {
    Table t;
    t.command = command;
    t.params = params_echo(config);
    t.columns = std::move(columns);
    return t;
}

SystemParams at_zeta(const RunConfig& config, double zeta) {
    return SystemParams::from_zeta(config.params.delta(), zeta, config.params.dipole());
}

// Evaluates fn(0..n-1) on up to `threads` workers; results keep index order.
template <class Fn>
auto parallel_map(std::size_t n, int threads, Fn fn) -> std::vector<decltype(fn(std::size_t{}))> {
    using R = decltype(fn(std::size_t{}));
    std::vector<R> out(n);
    std::vector<std::exception_ptr> errors(n);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < n; i = next++) {
            try {
                out[i] = fn(i);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    const auto count = static_cast<std::size_t>(std::clamp(threads, 1, 64));
    std::vector<std::thread> pool;
    for (std::size_t t = 1; t < std::min(count, n); ++t) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();
    for (const auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
    return out;
}

void require_zetas(const std::vector<double>& zeta_list) {
    if (zeta_list.empty()) throw UsageError("at least one zeta value is required");
    for (double z : zeta_list) {
        if (!std::isfinite(z) || z < 0.0) throw UsageError("zeta values must be finite and >= 0");
    }
}

// Everything validate measures at one zeta.
struct PointReport {
    double zeta{0.0};
    std::string error;
    double quasienergy_gap{0.0};
    double min_mode_fidelity{1.0};
    double min_pointwise_fidelity{1.0};
    double max_forbidden_leakage{0.0};
    double max_intensity_rel_error{0.0};
    double max_intensity_abs_error_small{0.0};
    double unitarity_drift{0.0};
    double eps_sum_defect{0.0};
    std::string match_method;
    bool first_order_pass{false};
    bool exact_pass{false};
};

PointReport validate_point(const RunConfig& config, double zeta, const Thresholds& th) {
    PointReport r;
    r.zeta = zeta;
    try {
        const SystemParams params = at_zeta(config, zeta);
        const double mu2 = params.dipole() * params.dipole();

        const PropagationResult period = propagate_with_diagnostics(params, 0.0, kPeriod, config.propagation);
        r.unitarity_drift = std::max(period.max_local_drift, unitarity_defect(period.propagator));

        const floquet::ModePair exact = floquet::build_modes(params, config.propagation, config.n_grid);
        const floquet::ModePair approx = floquet::build_analytic_modes(params, config.n_grid);
        r.eps_sum_defect = std::abs(fold_quasienergy(exact[0].quasienergy + exact[1].quasienergy));

        const floquet::ModeMatch match = floquet::match_modes(exact, approx);
        r.match_method = floquet::to_string(match.method);
        r.quasienergy_gap = std::max(match.quasienergy_gap[0], match.quasienergy_gap[1]);
        r.min_mode_fidelity = std::min(match.mean_fidelity[0], match.mean_fidelity[1]);
        r.min_pointwise_fidelity = std::min(match.min_fidelity[0], match.min_fidelity[1]);

        for (int k = -kForbiddenKMax; k <= kForbiddenKMax; ++k) {
            for (int i = 1; i <= 2; ++i) {
                for (int j = 1; j <= 2; ++j) {
                    const double numeric = spectroscopy::line_intensity_numeric(exact, i, j, k, params.dipole());
                    if (!spectroscopy::is_allowed(i, j, k)) {
                        r.max_forbidden_leakage = std::max(r.max_forbidden_leakage, numeric);
                        continue;
                    }
                    if (std::abs(k) > kIntensityKMax) continue;
                    const double predicted = spectroscopy::line_intensity_analytic(params, i, j, k);
                    if (predicted < th.intensity_abs_floor * mu2) {
                        r.max_intensity_abs_error_small =
                            std::max(r.max_intensity_abs_error_small, std::abs(numeric - predicted));
                    } else {
                        r.max_intensity_rel_error =
                            std::max(r.max_intensity_rel_error, std::abs(numeric - predicted) / predicted);
                    }
                }
            }
        }

        r.first_order_pass = r.quasienergy_gap <= th.quasienergy_gap && r.min_mode_fidelity >= th.min_fidelity &&
                             r.max_intensity_rel_error <= th.intensity_rel &&
                             r.max_intensity_abs_error_small <= th.intensity_abs_floor * mu2;
        r.exact_pass = r.max_forbidden_leakage <= th.forbidden_leakage * mu2 &&
                       r.unitarity_drift <= th.unitarity_drift && r.eps_sum_defect <= th.eps_sum;
    } catch (const std::exception& e) {
        r.error = e.what();
        r.first_order_pass = false;
        r.exact_pass = false;
    }
    return r;
}

}  // namespace

Thresholds Thresholds::for_params(const SystemParams& params) {
    const double d = params.delta();
    return {5.0 * d * d, 1.0 - 10.0 * d * d, 10.0 * d, 1e-12, 1e-10, 1e-10, 1e-9};
}

Table cmd_weights(const RunConfig& config, const std::vector<double>& zeta_list) {
    require_zetas(zeta_list);
    Table t = make_table("weights", config, {"zeta", "source", "mode", "tau", "w1", "w2"});
    using Block = std::vector<std::vector<Cell>>;
    const auto blocks = parallel_map(zeta_list.size(), config.threads, [&](std::size_t idx) {
        const double zeta = zeta_list[idx];
        const SystemParams params = at_zeta(config, zeta);
        Block rows;
        const std::array<floquet::ModePair, 2> sources{floquet::build_modes(params, config.propagation, config.n_grid),
                                                       floquet::build_analytic_modes(params, config.n_grid)};
        for (const auto& pair : sources) {
            for (const auto& mode : pair) {
                for (std::size_t m = 0; m < mode.n_grid(); ++m) {
                    const ComplexSpinor& s = mode.samples[m];
                    rows.push_back({zeta, floquet::to_string(mode.source), static_cast<long long>(mode.label),
                                    mode.tau(m), std::norm(s.c1), std::norm(s.c2)});
                }
            }
        }
        return rows;
    });
    for (const auto& block : blocks) {
        for (const auto& row : block) t.add_row(row);
    }
    return t;
}

Table cmd_sweep(const RunConfig& config, double zeta_min, double zeta_max, int zeta_steps, int manifolds) {
    if (!(zeta_min < zeta_max)) throw UsageError("sweep: zeta_min must be < zeta_max");
    if (zeta_min < 0.0) throw UsageError("sweep: zeta_min must be >= 0");
    if (zeta_steps < 2) throw UsageError("sweep: zeta_steps must be >= 2");
    if (manifolds < 0) throw UsageError("sweep: manifolds must be >= 0");

    Table t = make_table("sweep", config, {"zeta", "n", "eps1_analytic", "eps2_analytic", "eps1_exact", "eps2_exact"});
    const auto points = parallel_map(static_cast<std::size_t>(zeta_steps), config.threads, [&](std::size_t idx) {
        const double zeta = zeta_min + (zeta_max - zeta_min) * static_cast<double>(idx) / (zeta_steps - 1);
        const SystemParams params = at_zeta(config, zeta);
        const QuasienergyPair a = analytic::analytic_quasienergies(params);
        const QuasienergyPair e = floquet::exact_decomposition(params, config.propagation).quasienergies;
        return std::array<double, 5>{zeta, a.eps1, a.eps2, e.eps1, e.eps2};
    });
    for (const auto& p : points) {
        for (int n = -manifolds; n <= manifolds; ++n) {
            t.add_row({p[0], static_cast<long long>(n), p[1] + n, p[2] + n, p[3] + n, p[4] + n});
        }
    }

    const std::vector<double> crossings = floquet::find_crossings(config.params.delta(), config.params.dipole(),
                                                                  zeta_min, zeta_max, zeta_steps, config.propagation);
    t.metadata["zeta_min"] = zeta_min;
    t.metadata["zeta_max"] = zeta_max;
    t.metadata["zeta_steps"] = zeta_steps;
    t.metadata["manifolds"] = manifolds;
    t.metadata["crossing_zeta"] = crossings;
    return t;
}

Table cmd_spectrum(const RunConfig& config, int k_max, bool include_forbidden) {
    if (k_max < 1) throw UsageError("spectrum: k_max must be >= 1");
    Table t = make_table("spectrum", config,
                         {"i", "j", "k", "frequency", "signed_frequency", "frequency_analytic", "intensity_numeric",
                          "intensity_analytic", "class", "forbidden"});
    const auto lines = spectroscopy::spectrum(config.params, k_max, config.propagation,
                                              spectroscopy::SpectrumOptions{config.n_grid, include_forbidden});
    for (const auto& line : lines) {
        t.add_row({static_cast<long long>(line.i), static_cast<long long>(line.j), static_cast<long long>(line.k),
                   line.frequency, line.signed_frequency, line.frequency_analytic, line.intensity_numeric,
                   line.intensity_analytic, spectroscopy::to_string(line.line_class), line.forbidden});
    }
    t.metadata["k_max"] = k_max;
    t.metadata["include_forbidden"] = include_forbidden;
    return t;
}

ValidationReport cmd_validate(const RunConfig& config, const std::vector<double>& zeta_list) {
    require_zetas(zeta_list);
    const Thresholds th = Thresholds::for_params(config.params);

    ValidationReport report;
    report.table = make_table("validate", config,
                              {"zeta", "error", "quasienergy_gap", "min_mode_fidelity", "min_pointwise_fidelity",
                               "max_forbidden_leakage", "max_intensity_rel_error", "max_intensity_abs_error_small",
                               "unitarity_drift", "eps_sum_defect", "match_method", "first_order_pass", "exact_pass",
                               "pass"});

    const auto points = parallel_map(zeta_list.size(), config.threads,
                                     [&](std::size_t idx) { return validate_point(config, zeta_list[idx], th); });
    bool all = true;
    for (const PointReport& r : points) {
        const bool pass = r.error.empty() && r.first_order_pass && r.exact_pass;
        all = all && pass;
        if (!r.error.empty()) {
            report.table.add_row({r.zeta, r.error, std::monostate{}, std::monostate{}, std::monostate{},
                                  std::monostate{}, std::monostate{}, std::monostate{}, std::monostate{},
                                  std::monostate{}, std::monostate{}, false, false, false});
            continue;
        }
        report.table.add_row({r.zeta, std::monostate{}, r.quasienergy_gap, r.min_mode_fidelity,
                              r.min_pointwise_fidelity, r.max_forbidden_leakage, r.max_intensity_rel_error,
                              r.max_intensity_abs_error_small, r.unitarity_drift, r.eps_sum_defect, r.match_method,
                              r.first_order_pass, r.exact_pass, pass});
    }

    ojson thresholds = ojson::object();
    thresholds["quasienergy_gap_max"] = th.quasienergy_gap;
    thresholds["mode_fidelity_min"] = th.min_fidelity;
    thresholds["intensity_rel_error_max"] = th.intensity_rel;
    thresholds["intensity_abs_floor"] = th.intensity_abs_floor;
    thresholds["forbidden_leakage_max"] = th.forbidden_leakage;
    thresholds["unitarity_drift_max"] = th.unitarity_drift;
    thresholds["eps_sum_defect_max"] = th.eps_sum;
    report.table.metadata["thresholds"] = thresholds;
    report.table.metadata["passed"] = all;
    report.passed = all;
    return report;
}

void emit(const Table& table, const RunConfig& config) {
    if (config.output_path.empty() || config.output_path == "-") {
        write_table(table, config.format, std::cout);
        std::cout.flush();
        if (!std::cout) throw IoError("failed writing to standard output");
        return;
    }
    std::ofstream out(config.output_path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open output file '" + config.output_path + "': " + std::strerror(errno));
    write_table(table, config.format, out);
    out.close();
    if (!out) throw IoError("failed writing output file '" + config.output_path + "'");
}

}  // namespace dressed::cli
