// analytic.hpp: closed-form first-order Floquet theory
//
// After the unitary transformation U0(tau) = exp(-i phi(tau) sigma_x) with
// phi = rabi*sin(tau), the remaining Hamiltonian is proportional to delta.
// Its periodic coefficients are Jacobi-Anger series in J_n(zeta), and the
// first-order propagator, Floquet states and quasienergies follow in closed
// form. AnalyticModel caches the Bessel row for one parameter point; the free
// functions below are one-shot conveniences around it.

#pragma once

#include "dressed/bessel.hpp"
#include "dressed/core.hpp"

#include <array>

namespace dressed::analytic {

// All auxiliary functions at one tau.
struct AuxiliaryFunctions {
    double phi{0.0};
    double xi_s{0.0};
    double xi_a{0.0};
    double alpha{0.0};
    double beta_over_i{0.0};  // beta(tau) is purely imaginary; this is beta/i
    cplx eta{};
};

class AnalyticModel {
public:
    explicit AnalyticModel(const SystemParams& params);

    const SystemParams& params() const noexcept { return params_; }
    double j0() const noexcept { return bessel_[0]; }
    const bessel::BesselSeries& bessel_row() const noexcept { return bessel_; }

    double phi(double tau) const;
    // sum_{n>=1} J_2n sin(2n tau)/(2n); even under tau -> tau + pi
    double xi_s(double tau) const;
    // sum_{n>=0} J_{2n+1} cos((2n+1) tau)/(2n+1); odd under tau -> tau + pi
    double xi_a(double tau) const;
    // cos(2 phi) - J_0(zeta), summed as 2 sum_{n>=1} J_2n cos(2n tau)
    double alpha(double tau) const;
    // sin(2 phi), summed as 2 sum_{n>=0} J_{2n+1} sin((2n+1) tau)
    double beta_over_i(double tau) const;
    // i [xi_a(0) - exp(-i delta J_0 tau) xi_a(tau)]
    cplx eta(double tau) const;
    AuxiliaryFunctions auxiliary(double tau) const;

    // eps_1 = -(delta/2) J_0(zeta), eps_2 = -eps_1, folded.
    QuasienergyPair quasienergies() const;

    // First-order dressed state (label 1 or 2), renormalized and phased so the
    // largest component at tau = 0 is real positive.
    ComplexSpinor floquet_state(int label, double tau) const;

    // Exactly unitary first-order propagator U(tau, 0):
    // U0^dagger(tau) exp(-i H0' tau) exp{i delta [xi_s (s11 - s22) + eta s12 + eta* s21]}.
    ComplexMatrix2 evolution(double tau) const;

    // The exponent delta [xi_s (s11 - s22) + eta s12 + eta* s21] (Hermitian).
    ComplexMatrix2 first_order_generator(double tau) const;

    // U0^dagger(tau) exp(-i H0' tau): the zeroth-order factor of evolution().
    ComplexMatrix2 zeroth_order_evolution(double tau) const;

private:
    ComplexSpinor raw_state(int label, double tau) const;

    SystemParams params_;
    bessel::BesselSeries bessel_;
    std::array<cplx, 2> phase_{};
};

double phi(const SystemParams& params, double tau);
double xi_s(const SystemParams& params, double tau);
double xi_a(const SystemParams& params, double tau);
double alpha(const SystemParams& params, double tau);
double beta_over_i(const SystemParams& params, double tau);
cplx eta(const SystemParams& params, double tau);
QuasienergyPair analytic_quasienergies(const SystemParams& params);
ComplexSpinor analytic_floquet_state(const SystemParams& params, int label, double tau);
ComplexMatrix2 analytic_evolution(const SystemParams& params, double tau);

}  // namespace dressed::analytic
