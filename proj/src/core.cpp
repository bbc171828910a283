#include "dressed/core.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace dressed {

SystemParams::SystemParams(double delta, double rabi, double dipole)
    : delta_(delta), rabi_(rabi), dipole_(dipole) {
    if (!std::isfinite(delta) || !std::isfinite(rabi) || !std::isfinite(dipole)) {
        throw DomainError("SystemParams: parameters must be finite");
    }
    if (delta < 0.0) throw DomainError("SystemParams: delta must be >= 0");
    if (rabi < 0.0) throw DomainError("SystemParams: rabi must be >= 0");
    if (dipole <= 0.0) throw DomainError("SystemParams: dipole must be > 0");
}

SystemParams SystemParams::from_rabi(double delta, double rabi, double dipole) {
    return SystemParams(delta, rabi, dipole);
}

SystemParams SystemParams::from_zeta(double delta, double zeta, double dipole) {
    return SystemParams(delta, 0.5 * zeta, dipole);
}

double SystemParams::epsilon_eff() const noexcept {
    const double z = zeta();
    if (z <= 0.0) return delta_;
    return delta_ * std::min(1.0, std::sqrt(2.0 / (kPi * z)));
}

std::string SystemParams::describe() const {
    std::ostringstream os;
    os.precision(17);
    os << "delta=" << delta_ << " rabi=" << rabi_ << " zeta=" << zeta() << " mu=" << dipole_;
    return os.str();
}

double ComplexSpinor::norm() const noexcept { return std::sqrt(norm_sq()); }

ComplexSpinor ComplexSpinor::normalized() const {
    const double n = norm();
    if (!(n > 0.0)) throw DomainError("ComplexSpinor: cannot normalize a zero spinor");
    return {c1 / n, c2 / n};
}

double max_abs_diff(const ComplexSpinor& a, const ComplexSpinor& b) noexcept {
    return std::max(std::abs(a.c1 - b.c1), std::abs(a.c2 - b.c2));
}

double ComplexMatrix2::max_abs() const noexcept {
    return std::max({std::abs(a11), std::abs(a12), std::abs(a21), std::abs(a22)});
}

double max_abs_diff(const ComplexMatrix2& a, const ComplexMatrix2& b) noexcept {
    return (a - b).max_abs();
}

double unitarity_defect(const ComplexMatrix2& u) noexcept {
    return max_abs_diff(u.adjoint() * u, ComplexMatrix2::identity());
}

bool is_hermitian_traceless(const ComplexMatrix2& h, double tol) noexcept {
    return max_abs_diff(h, h.adjoint()) <= tol && std::abs(h.trace()) <= tol;
}

bool is_special_unitary(const ComplexMatrix2& u, double tol) noexcept {
    return unitarity_defect(u) <= tol && std::abs(u.det() - 1.0) <= tol;
}

ComplexMatrix2 sigma_z() noexcept { return ComplexMatrix2::diag(-1.0, 1.0); }
ComplexMatrix2 sigma_plus() noexcept { return {0.0, 0.0, 1.0, 0.0}; }
ComplexMatrix2 sigma_minus() noexcept { return {0.0, 1.0, 0.0, 0.0}; }
ComplexMatrix2 sigma_x() noexcept { return {0.0, 1.0, 1.0, 0.0}; }
ComplexMatrix2 parity_operator() noexcept { return ComplexMatrix2::diag(1.0, -1.0); }

ComplexMatrix2 hamiltonian_at(const SystemParams& params, double tau) {
    const double half = 0.5 * params.delta();
    const double coupling = -params.rabi() * std::cos(tau);
    return {-half, coupling, coupling, half};
}

ComplexMatrix2 pauli_combination(double az, cplx ap) noexcept {
    return {-az, ap, std::conj(ap), az};
}

namespace {

// sin(r)/r without the removable singularity.
double sinc(double r) noexcept {
    if (std::abs(r) < 1e-4) {
        const double r2 = r * r;
        return 1.0 - r2 / 6.0 + r2 * r2 / 120.0;
    }
    return std::sin(r) / r;
}

}  // namespace

ComplexMatrix2 expi_hermitian(const ComplexMatrix2& a) noexcept {
    const cplx half_trace = 0.5 * a.trace();
    const ComplexMatrix2 a0 = a - ComplexMatrix2::diag(half_trace, half_trace);
    // a0^2 = r^2 I for traceless Hermitian a0; -det(a0) = r^2.
    const double r = std::sqrt(std::max(0.0, -a0.det().real()));
    const cplx i{0.0, 1.0};
    ComplexMatrix2 out = ComplexMatrix2::diag(std::cos(r), std::cos(r)) + (i * sinc(r)) * a0;
    return std::exp(i * half_trace) * out;
}

ComplexMatrix2 project_to_su2(const ComplexMatrix2& m) {
    // Polar factor m (m^dagger m)^{-1/2}; closed-form square root of a 2x2
    // positive-definite matrix: sqrt(S) = (S + sqrt(det S) I) / sqrt(tr S + 2 sqrt(det S)).
    const ComplexMatrix2 s = m.adjoint() * m;
    const double det_s = s.det().real();
    if (!(det_s > 0.0)) throw AccuracyError("project_to_su2: singular matrix");
    const double root_det = std::sqrt(det_s);
    const double scale = std::sqrt(s.trace().real() + 2.0 * root_det);
    const ComplexMatrix2 root = (1.0 / scale) * (s + ComplexMatrix2::diag(root_det, root_det));
    const cplx d = root.det();
    const ComplexMatrix2 inv_root = (1.0 / d) * ComplexMatrix2{root.a22, -root.a12, -root.a21, root.a11};
    ComplexMatrix2 u = m * inv_root;
    return (1.0 / std::sqrt(u.det())) * u;
}

double fold_quasienergy(double eps) noexcept {
    return eps - std::ceil(eps - 0.5);
}

}  // namespace dressed
