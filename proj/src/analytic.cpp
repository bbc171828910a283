#include "dressed/analytic.hpp"

#include <cmath>
#include <string>

namespace dressed::analytic {

namespace {

constexpr cplx kI{0.0, 1.0};

void check_label(int label) {
    if (label != 1 && label != 2) {
        throw DomainError("analytic: Floquet state label must be 1 or 2, got " + std::to_string(label));
    }
}

}  // namespace

AnalyticModel::AnalyticModel(const SystemParams& params)
    : params_(params),
      bessel_(bessel::bessel_row(bessel::series_truncation_order(params.zeta()), params.zeta())) {
    for (int label = 1; label <= 2; ++label) {
        const ComplexSpinor s = raw_state(label, 0.0);
        // Ties go to c1.
        const cplx lead = std::abs(s.c1) >= std::abs(s.c2) ? s.c1 : s.c2;
        phase_[static_cast<std::size_t>(label - 1)] = std::conj(lead) / std::abs(lead);
    }
}

double AnalyticModel::phi(double tau) const { return params_.rabi() * std::sin(tau); }

double AnalyticModel::xi_s(double tau) const {
    double sum = 0.0;
    for (int n = 2; n <= bessel_.order_max; n += 2) {
        sum += bessel_[n] * std::sin(n * tau) / n;
    }
    return sum;
}

double AnalyticModel::xi_a(double tau) const {
    double sum = 0.0;
    for (int n = 1; n <= bessel_.order_max; n += 2) {
        sum += bessel_[n] * std::cos(n * tau) / n;
    }
    return sum;
}

double AnalyticModel::alpha(double tau) const {
    double sum = 0.0;
    for (int n = 2; n <= bessel_.order_max; n += 2) {
        sum += bessel_[n] * std::cos(n * tau);
    }
    return 2.0 * sum;
}

double AnalyticModel::beta_over_i(double tau) const {
    double sum = 0.0;
    for (int n = 1; n <= bessel_.order_max; n += 2) {
        sum += bessel_[n] * std::sin(n * tau);
    }
    return 2.0 * sum;
}

cplx AnalyticModel::eta(double tau) const {
    const double secular = params_.delta() * j0() * tau;
    return kI * (xi_a(0.0) - std::exp(-kI * secular) * xi_a(tau));
}

AuxiliaryFunctions AnalyticModel::auxiliary(double tau) const {
    return {phi(tau), xi_s(tau), xi_a(tau), alpha(tau), beta_over_i(tau), eta(tau)};
}

QuasienergyPair AnalyticModel::quasienergies() const {
    const double e = -0.5 * params_.delta() * j0();
    return {fold_quasienergy(e), fold_quasienergy(-e)};
}

ComplexSpinor AnalyticModel::raw_state(int label, double tau) const {
    check_label(label);
    const double p = phi(tau);
    const double c = std::cos(p);
    const double s = std::sin(p);
    const double d = params_.delta();
    const double xs = xi_s(tau);
    const double xa = xi_a(tau);
    const double even = xs * c - xa * s;
    const double odd = xs * s + xa * c;
    if (label == 1) {
        return {c + kI * d * even, kI * (s + kI * d * odd)};
    }
    return {kI * (s - kI * d * odd), c - kI * d * even};
}

ComplexSpinor AnalyticModel::floquet_state(int label, double tau) const {
    const ComplexSpinor s = raw_state(label, tau).normalized();
    return phase_[static_cast<std::size_t>(label - 1)] * s;
}

ComplexMatrix2 AnalyticModel::first_order_generator(double tau) const {
    const double d = params_.delta();
    // sigma_11 - sigma_22 = -sigma_z; eta multiplies sigma_12 = sigma_-.
    return pauli_combination(-d * xi_s(tau), d * eta(tau));
}

ComplexMatrix2 AnalyticModel::zeroth_order_evolution(double tau) const {
    const ComplexMatrix2 u0_dagger = expi_hermitian(phi(tau) * sigma_x());
    // H0' = -(delta/2) J0 (sigma_11 - sigma_22)
    const double half_phase = 0.5 * params_.delta() * j0() * tau;
    const ComplexMatrix2 secular = ComplexMatrix2::diag(std::exp(kI * half_phase), std::exp(-kI * half_phase));
    return u0_dagger * secular;
}

ComplexMatrix2 AnalyticModel::evolution(double tau) const {
    return zeroth_order_evolution(tau) * expi_hermitian(first_order_generator(tau));
}

double phi(const SystemParams& params, double tau) { return params.rabi() * std::sin(tau); }
double xi_s(const SystemParams& params, double tau) { return AnalyticModel(params).xi_s(tau); }
double xi_a(const SystemParams& params, double tau) { return AnalyticModel(params).xi_a(tau); }
double alpha(const SystemParams& params, double tau) { return AnalyticModel(params).alpha(tau); }
double beta_over_i(const SystemParams& params, double tau) { return AnalyticModel(params).beta_over_i(tau); }
cplx eta(const SystemParams& params, double tau) { return AnalyticModel(params).eta(tau); }

QuasienergyPair analytic_quasienergies(const SystemParams& params) {
    return AnalyticModel(params).quasienergies();
}

ComplexSpinor analytic_floquet_state(const SystemParams& params, int label, double tau) {
    return AnalyticModel(params).floquet_state(label, tau);
}

ComplexMatrix2 analytic_evolution(const SystemParams& params, double tau) {
    return AnalyticModel(params).evolution(tau);
}

}  // namespace dressed::analytic
