#include "dressed/propagator.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <sstream>

namespace dressed {

namespace {

constexpr int kProjectionInterval = 64;
constexpr cplx kMinusI{0.0, -1.0};

bool is_power_of_two(int n) { return n > 0 && std::has_single_bit(static_cast<unsigned>(n)); }

// Fixed-step integrator state. Owns the running propagator and the drift
// bookkeeping that spans grid segments.
class Evolver {
public:
    Evolver(const SystemParams& params, const PropagationConfig& config, double tau)
        : params_(params), config_(config), tau_(tau) {}

    void advance(int steps, double h) {
        for (int s = 0; s < steps; ++s) {
            if (config_.method == Integrator::rk4_renorm) {
                rk4_step(h);
                if (++since_projection_ == kProjectionInterval) project();
            } else {
                magnus_step(h);
                ++since_projection_;
            }
            ++steps_;
            // Recompute from the step count so long runs do not accumulate
            // floating-point error in tau.
            tau_ = tau0_ + steps_ * h;
        }
    }

    // Brings the propagator back onto SU(2) and checks the loss since the
    // last projection against the tolerance.
    void finish() {
        if (config_.method == Integrator::rk4_renorm) {
            if (since_projection_ > 0) project();
        } else {
            const double drift = unitarity_defect(u_) / std::max(1, steps_);
            max_local_drift_ = std::max(max_local_drift_, drift);
            check(drift);
        }
    }

    const ComplexMatrix2& u() const noexcept { return u_; }
    int steps() const noexcept { return steps_; }
    double max_local_drift() const noexcept { return max_local_drift_; }

private:
    ComplexMatrix2 rhs(double tau, const ComplexMatrix2& u) const {
        return kMinusI * (hamiltonian_at(params_, tau) * u);
    }

    void rk4_step(double h) {
        const ComplexMatrix2 k1 = rhs(tau_, u_);
        const ComplexMatrix2 k2 = rhs(tau_ + 0.5 * h, u_ + (0.5 * h) * k1);
        const ComplexMatrix2 k3 = rhs(tau_ + 0.5 * h, u_ + (0.5 * h) * k2);
        const ComplexMatrix2 k4 = rhs(tau_ + h, u_ + h * k3);
        u_ = u_ + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    }

    void magnus_step(double h) {
        const ComplexMatrix2 hmid = hamiltonian_at(params_, tau_ + 0.5 * h);
        u_ = expi_hermitian(-h * hmid) * u_;
    }

    void project() {
        const double drift = unitarity_defect(u_) / since_projection_;
        max_local_drift_ = std::max(max_local_drift_, drift);
        check(drift);
        u_ = project_to_su2(u_);
        since_projection_ = 0;
    }

    void check(double drift) const {
        if (!(drift <= config_.unitarity_tol)) {
            std::ostringstream os;
            os.precision(3);
            os << "propagate: per-step unitarity loss " << drift << " exceeds tolerance "
               << config_.unitarity_tol << " at tau=" << tau_ << " (" << params_.describe()
               << ", steps_per_period=" << config_.steps_per_period << "); increase steps_per_period";
            throw AccuracyError(os.str());
        }
    }

    const SystemParams& params_;
    const PropagationConfig& config_;
    double tau_;
    double tau0_{tau_};
    ComplexMatrix2 u_{ComplexMatrix2::identity()};
    int steps_{0};
    int since_projection_{0};
    double max_local_drift_{0.0};
};

}  // namespace

void PropagationConfig::validate() const {
    if (steps_per_period < 64 || !is_power_of_two(steps_per_period)) {
        throw DomainError("PropagationConfig: steps_per_period must be a power of two >= 64, got " +
                          std::to_string(steps_per_period));
    }
    if (!(unitarity_tol > 0.0)) throw DomainError("PropagationConfig: unitarity_tol must be > 0");
}

PropagationResult propagate_with_diagnostics(const SystemParams& params, double tau_start, double tau_end,
                                             const PropagationConfig& config) {
    config.validate();
    if (!std::isfinite(tau_start) || !std::isfinite(tau_end)) {
        throw DomainError("propagate: non-finite time bounds");
    }
    if (tau_end < tau_start) throw DomainError("propagate: tau_end must be >= tau_start");
    if (tau_end == tau_start) return {ComplexMatrix2::identity(), 0, 0.0};

    const double span = tau_end - tau_start;
    const int steps = std::max(1, static_cast<int>(std::ceil(span / kPeriod * config.steps_per_period - 1e-9)));
    Evolver ev(params, config, tau_start);
    ev.advance(steps, span / steps);
    ev.finish();
    return {ev.u(), ev.steps(), ev.max_local_drift()};
}

ComplexMatrix2 propagate(const SystemParams& params, double tau_start, double tau_end,
                         const PropagationConfig& config) {
    return propagate_with_diagnostics(params, tau_start, tau_end, config).propagator;
}

ComplexMatrix2 one_period_propagator(const SystemParams& params, const PropagationConfig& config) {
    return propagate(params, 0.0, kPeriod, config);
}

std::vector<ComplexMatrix2> propagate_on_grid(const SystemParams& params, int n_grid,
                                              const PropagationConfig& config) {
    config.validate();
    if (!is_power_of_two(n_grid)) {
        throw DomainError("propagate_on_grid: n_grid must be a power of two, got " + std::to_string(n_grid));
    }
    const int per_sample = std::max(1, config.steps_per_period / n_grid);
    const double h = kPeriod / (static_cast<double>(per_sample) * n_grid);

    std::vector<ComplexMatrix2> out;
    out.reserve(static_cast<std::size_t>(n_grid) + 1);
    out.push_back(ComplexMatrix2::identity());
    Evolver ev(params, config, 0.0);
    for (int m = 1; m <= n_grid; ++m) {
        ev.advance(per_sample, h);
        // Intermediate samples are projected copies; the trajectory keeps its
        // own re-projection schedule so the monodromy matches one_period_propagator.
        if (m == n_grid) {
            ev.finish();
            out.push_back(ev.u());
        } else {
            out.push_back(config.method == Integrator::rk4_renorm ? project_to_su2(ev.u()) : ev.u());
        }
    }
    return out;
}

}  // namespace dressed
