// floquet.hpp: quasienergies and Floquet modes from the monodromy operator
//
// The one-period propagator U(2pi, 0) = sum_j exp(-i eps_j 2pi) |v_j><v_j|
// gives quasienergies and the modes at tau = 0; the modes at other tau follow
// from phi_j(tau) = exp(i eps_j tau) U(tau, 0) v_j.
//
// The Hamiltonian is invariant under the generalized parity
// |2> -> -|2>, tau -> tau + pi. Consequently U(2pi, 0) = Q^2 with
// Q = P U(pi, 0), P = diag(1, -1), and the eigenvectors of Q are Floquet
// modes with definite parity. Those are used whenever Q is available, which
// keeps labels and eigenvectors well defined through level crossings.

#pragma once

#include "dressed/core.hpp"
#include "dressed/propagator.hpp"

#include <array>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace dressed::floquet {

enum class Parity { symmetric, antisymmetric };
enum class ModeSource { exact, analytic };

std::string to_string(Parity p);
std::string to_string(ModeSource s);

// The parity sign overlap of a mode was too small to decide.
class AmbiguousClassification : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct FloquetDecomposition {
    QuasienergyPair quasienergies;
    std::array<ComplexSpinor, 2> eigenvectors;  // index 0 is mode 1
    // Monodromy eigenvalues closer than the degeneracy threshold.
    bool degenerate{false};
    // Known only when a half-period symmetry operator was supplied.
    std::optional<std::array<Parity, 2>> parities;
};

// Eigenvalues of U_T closer than this are treated as degenerate.
inline constexpr double kDegeneracyThreshold = 1e-9;

// Diagonalizes the monodromy. Mode 1 carries the larger weight on |1>
// (ties: lower quasienergy). Degenerate input yields |1>, |2>, the
// eigenvectors of the parity operator at tau = 0.
FloquetDecomposition extract_floquet(const ComplexMatrix2& monodromy);

// Same, resolving eigenvectors through the half-period symmetry operator
// Q = P U(pi, 0). Mode 1 is the symmetric mode.
FloquetDecomposition extract_floquet(const ComplexMatrix2& monodromy, const ComplexMatrix2& half_period_symmetry);

// exp(i eps tau) U(tau, 0) eigvec
ComplexSpinor floquet_mode_at(const SystemParams& params, const ComplexSpinor& eigvec, double eps, double tau,
                              const PropagationConfig& config = {});

struct FloquetMode {
    int label{1};
    double quasienergy{0.0};
    std::vector<ComplexSpinor> samples;  // tau_m = 2 pi m / n, m = 0 .. n-1
    Parity parity{Parity::symmetric};
    ModeSource source{ModeSource::exact};

    std::size_t n_grid() const noexcept { return samples.size(); }
    double tau(std::size_t m) const noexcept { return kPeriod * static_cast<double>(m) / static_cast<double>(n_grid()); }
};

using ModePair = std::array<FloquetMode, 2>;

inline constexpr int kDefaultGrid = 512;

// Both exact modes on an n_grid-point grid (power of two, >= 64).
ModePair build_modes(const SystemParams& params, const PropagationConfig& config = {}, int n_grid = kDefaultGrid);

// Both first-order analytic modes on the same kind of grid.
ModePair build_analytic_modes(const SystemParams& params, int n_grid = kDefaultGrid);

// <<P phi(tau + pi) | phi(tau)>>, about +1 for symmetric and -1 for antisymmetric modes.
cplx symmetry_overlap(const FloquetMode& mode);

// Throws AmbiguousClassification when |symmetry_overlap| <= 0.9.
Parity symmetry_classify(const FloquetMode& mode);

// (1/n) sum_m <f_m|g_m> over a shared uniform grid.
cplx mean_inner(std::span<const ComplexSpinor> f, std::span<const ComplexSpinor> g);

// e^{i n tau} phi(tau): the same mode viewed from manifold n.
FloquetMode shifted(const FloquetMode& mode, int n);

enum class MatchMethod { overlap, parity, degenerate };
std::string to_string(MatchMethod m);

struct ModeMatch {
    // analytic_index[i] is the analytic mode paired with exact mode i.
    std::array<int, 2> analytic_index{0, 1};
    std::array<double, 2> mean_fidelity{};  // |<<exact|analytic>>|^2
    std::array<double, 2> min_fidelity{};   // min over tau of |<exact(tau)|analytic(tau)>|^2
    std::array<double, 2> quasienergy_gap{};
    MatchMethod method{MatchMethod::overlap};
};

// Pairs each exact mode with the analytic mode of largest time-averaged overlap.
ModeMatch match_modes(const ModePair& exact, const ModePair& analytic);

// Exact quasienergies with parity labels, from two half-period propagations.
FloquetDecomposition exact_decomposition(const SystemParams& params, const PropagationConfig& config = {});

// zeta values in [zeta_min, zeta_max] where the exact levels eps_1, eps_2
// cross, located by sign change of eps_1 - eps_2 on a uniform scan of
// scan_points points and refined by bisection.
std::vector<double> find_crossings(double delta, double dipole, double zeta_min, double zeta_max, int scan_points,
                                   const PropagationConfig& config = {});

}  // namespace dressed::floquet
