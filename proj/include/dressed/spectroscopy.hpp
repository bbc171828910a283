// spectroscopy.hpp: line positions and strengths between dressed states
//
// A line connects |phi_j, m> (initial) to |phi_i, n> (final) with Fourier
// offset k = m - n. Its frequency is eps_j - eps_i + k in units of omega_L
// and its strength is |<<phi_i| d exp(i k tau) |phi_j>>|^2 with
// d = mu (sigma_12 + sigma_21). Parity forbids every line except
// i == j with k odd and i != j with k even.

#pragma once

#include "dressed/core.hpp"
#include "dressed/floquet.hpp"
#include "dressed/propagator.hpp"

#include <span>
#include <string>
#include <vector>

namespace dressed::spectroscopy {

enum class LineClass {
    intra_manifold,  // i != j, k == 0
    hyper_raman,     // i != j, k even and non-zero
    odd_harmonic,    // i == j, k odd
    none,            // forbidden combination
};

std::string to_string(LineClass c);

struct TransitionLine {
    int i{1};  // final mode (manifold n = 0)
    int j{2};  // initial mode (manifold m = k)
    int k{0};
    double frequency{0.0};           // |eps_j - eps_i + k| with exact quasienergies
    double signed_frequency{0.0};    // eps_j - eps_i + k; > 0 for emission
    double frequency_analytic{0.0};  // same with first-order quasienergies
    double intensity_numeric{0.0};   // from exact modes, units of mu^2
    double intensity_analytic{0.0};  // closed form
    LineClass line_class{LineClass::none};
    bool forbidden{false};
};

// (1/n) sum_tau <f(tau)|g(tau)>: the extended-space scalar product on a
// uniform periodic grid of n >= 64 points.
cplx extended_inner(std::span<const ComplexSpinor> f, std::span<const ComplexSpinor> g);

// <<phi_i| d exp(i k tau) |phi_j>>
cplx dipole_matrix_element(const floquet::FloquetMode& mode_i, const floquet::FloquetMode& mode_j, int k,
                           double dipole);

bool is_allowed(int i, int j, int k);
LineClass classify(int i, int j, int k);

double line_intensity_numeric(const floquet::ModePair& modes, int i, int j, int k, double dipole);
double line_intensity_numeric(const SystemParams& params, int i, int j, int k, const PropagationConfig& config = {},
                              int n_grid = floquet::kDefaultGrid);

// mu^2 for the intra-manifold line, mu^2 delta^2 |J_|k|(zeta)/k|^2 for the
// other allowed lines, 0 for forbidden ones.
double line_intensity_analytic(const SystemParams& params, int i, int j, int k);

// eps_j - eps_i + k
double transition_offset(int i, int j, int k, const QuasienergyPair& quasienergies);
// |eps_j - eps_i + k|
double transition_frequency(int i, int j, int k, const QuasienergyPair& quasienergies);

struct SpectrumOptions {
    int n_grid{floquet::kDefaultGrid};
    bool include_forbidden{false};
};

// All lines ending in the n = 0 manifold with |k| <= k_max, sorted by
// frequency (ties by k, i, j).
std::vector<TransitionLine> spectrum(const SystemParams& params, int k_max, const PropagationConfig& config = {},
                                     const SpectrumOptions& options = {});

// Same, from modes that were already built for these params.
std::vector<TransitionLine> spectrum(const SystemParams& params, const floquet::ModePair& modes, int k_max,
                                     bool include_forbidden = false);

}  // namespace dressed::spectroscopy
