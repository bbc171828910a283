// propagator.hpp: exact numerical propagator of the driven two-level system
//
// Integrates i dU/dtau = H(tau) U on a fixed uniform grid. No perturbative
// assumption enters here; this is the reference the analytic results are
// checked against.

#pragma once

#include "dressed/core.hpp"

#include <vector>

namespace dressed {

enum class Integrator {
    rk4_renorm,  // classical RK4, polar re-projection every 64 steps
    magnus2,     // midpoint exponential, unitary by construction
};

struct PropagationConfig {
    int steps_per_period{4096};
    Integrator method{Integrator::rk4_renorm};
    // Largest tolerated unitarity loss per step before re-projection.
    double unitarity_tol{1e-10};

    // steps_per_period must be a power of two >= 64.
    void validate() const;
};

struct PropagationResult {
    ComplexMatrix2 propagator;
    int steps{0};
    // Largest per-step unitarity loss seen between re-projections (rk4) or
    // accumulated over the run (magnus2).
    double max_local_drift{0.0};
};

// U(tau_end, tau_start), tau_end >= tau_start.
ComplexMatrix2 propagate(const SystemParams& params, double tau_start, double tau_end,
                         const PropagationConfig& config = {});

PropagationResult propagate_with_diagnostics(const SystemParams& params, double tau_start, double tau_end,
                                             const PropagationConfig& config = {});

// U(2 pi, 0).
ComplexMatrix2 one_period_propagator(const SystemParams& params, const PropagationConfig& config = {});

// U(2 pi m / n_grid, 0) for m = 0 .. n_grid (n_grid + 1 entries, last is the
// monodromy). n_grid must be a power of two.
std::vector<ComplexMatrix2> propagate_on_grid(const SystemParams& params, int n_grid,
                                              const PropagationConfig& config = {});

}  // namespace dressed
