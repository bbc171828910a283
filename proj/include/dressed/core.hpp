// core.hpp: shared domain types and the driven two-level Hamiltonian
//
// Basis ordering is (|1>, |2>) = (ground, excited) everywhere. With
// sigma_z = sigma_22 - sigma_11 this makes sigma_z = diag(-1, +1).
// Time is the dimensionless phase tau = omega_L * t; the drive period is 2*pi.

#pragma once

#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>

namespace dressed {

using cplx = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kPeriod = 2.0 * std::numbers::pi;

// Invalid argument to a physics routine (bad parameter, label, grid, ...).
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A numerical routine could not reach its accuracy contract.
class AccuracyError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Dimensionless drive parameters. delta = Delta_0/omega_L, rabi = Omega_0/omega_L,
// dipole = mu. zeta = 2*rabi is derived, never stored independently.
class SystemParams {
public:
    static SystemParams from_rabi(double delta, double rabi, double dipole = 1.0);
    static SystemParams from_zeta(double delta, double zeta, double dipole = 1.0);

    double delta() const noexcept { return delta_; }
    double rabi() const noexcept { return rabi_; }
    double dipole() const noexcept { return dipole_; }
    double zeta() const noexcept { return 2.0 * rabi_; }

    // Diagnostic size of the first-order expansion parameter; interpolates
    // between delta (weak drive) and delta*sqrt(2/(pi*zeta)) (strong drive).
    // Used for reporting and tolerances only.
    double epsilon_eff() const noexcept;

    std::string describe() const;

private:
    SystemParams(double delta, double rabi, double dipole);

    double delta_;
    double rabi_;
    double dipole_;
};

struct ComplexSpinor {
    cplx c1{};
    cplx c2{};

    double norm_sq() const noexcept { return std::norm(c1) + std::norm(c2); }
    double norm() const noexcept;
    ComplexSpinor normalized() const;

    friend ComplexSpinor operator+(const ComplexSpinor& a, const ComplexSpinor& b) noexcept {
        return {a.c1 + b.c1, a.c2 + b.c2};
    }
    friend ComplexSpinor operator-(const ComplexSpinor& a, const ComplexSpinor& b) noexcept {
        return {a.c1 - b.c1, a.c2 - b.c2};
    }
    friend ComplexSpinor operator*(cplx s, const ComplexSpinor& a) noexcept {
        return {s * a.c1, s * a.c2};
    }
};

// <a|b>, antilinear in the first argument.
inline cplx inner(const ComplexSpinor& a, const ComplexSpinor& b) noexcept {
    return std::conj(a.c1) * b.c1 + std::conj(a.c2) * b.c2;
}

// Largest componentwise modulus of a - b.
double max_abs_diff(const ComplexSpinor& a, const ComplexSpinor& b) noexcept;

// Row-major 2x2 complex matrix.
struct ComplexMatrix2 {
    cplx a11{};
    cplx a12{};
    cplx a21{};
    cplx a22{};

    static ComplexMatrix2 identity() noexcept { return {1.0, 0.0, 0.0, 1.0}; }
    static ComplexMatrix2 diag(cplx d1, cplx d2) noexcept { return {d1, 0.0, 0.0, d2}; }

    ComplexMatrix2 adjoint() const noexcept {
        return {std::conj(a11), std::conj(a21), std::conj(a12), std::conj(a22)};
    }
    ComplexMatrix2 conjugate() const noexcept {
        return {std::conj(a11), std::conj(a12), std::conj(a21), std::conj(a22)};
    }
    cplx trace() const noexcept { return a11 + a22; }
    cplx det() const noexcept { return a11 * a22 - a12 * a21; }
    double max_abs() const noexcept;

    friend ComplexMatrix2 operator*(const ComplexMatrix2& a, const ComplexMatrix2& b) noexcept {
        return {a.a11 * b.a11 + a.a12 * b.a21, a.a11 * b.a12 + a.a12 * b.a22,
                a.a21 * b.a11 + a.a22 * b.a21, a.a21 * b.a12 + a.a22 * b.a22};
    }
    friend ComplexSpinor operator*(const ComplexMatrix2& a, const ComplexSpinor& v) noexcept {
        return {a.a11 * v.c1 + a.a12 * v.c2, a.a21 * v.c1 + a.a22 * v.c2};
    }
    friend ComplexMatrix2 operator+(const ComplexMatrix2& a, const ComplexMatrix2& b) noexcept {
        return {a.a11 + b.a11, a.a12 + b.a12, a.a21 + b.a21, a.a22 + b.a22};
    }
    friend ComplexMatrix2 operator-(const ComplexMatrix2& a, const ComplexMatrix2& b) noexcept {
        return {a.a11 - b.a11, a.a12 - b.a12, a.a21 - b.a21, a.a22 - b.a22};
    }
    friend ComplexMatrix2 operator*(cplx s, const ComplexMatrix2& a) noexcept {
        return {s * a.a11, s * a.a12, s * a.a21, s * a.a22};
    }
};

double max_abs_diff(const ComplexMatrix2& a, const ComplexMatrix2& b) noexcept;

// ||U^dagger U - I||_max
double unitarity_defect(const ComplexMatrix2& u) noexcept;

// Hamiltonian-tag invariant: Hermitian and traceless.
bool is_hermitian_traceless(const ComplexMatrix2& h, double tol = 1e-12) noexcept;

// Propagator-tag invariant: unitary with unit determinant.
bool is_special_unitary(const ComplexMatrix2& u, double tol = 1e-10) noexcept;

// SU(2) generators in the (|1>,|2>) ordering.
ComplexMatrix2 sigma_z() noexcept;      // sigma_22 - sigma_11
ComplexMatrix2 sigma_plus() noexcept;   // sigma_21
ComplexMatrix2 sigma_minus() noexcept;  // sigma_12
ComplexMatrix2 sigma_x() noexcept;      // sigma_12 + sigma_21

// Generalized parity on the internal states: |1> -> |1>, |2> -> -|2>.
ComplexMatrix2 parity_operator() noexcept;

// (delta/2)(sigma_22 - sigma_11) - rabi*cos(tau)(sigma_12 + sigma_21)
ComplexMatrix2 hamiltonian_at(const SystemParams& params, double tau);

// az*sigma_z + ap*sigma_- + conj(ap)*sigma_+
ComplexMatrix2 pauli_combination(double az, cplx ap) noexcept;

// exp(i*A) for Hermitian A, via exp(i a.sigma) = cos|a| + i sin|a| (a.sigma)/|a|
// applied to the traceless part.
ComplexMatrix2 expi_hermitian(const ComplexMatrix2& a) noexcept;

// Nearest unitary (polar factor), rescaled to unit determinant.
ComplexMatrix2 project_to_su2(const ComplexMatrix2& m);

// Quasienergies in units of hbar*omega_L, each folded into (-1/2, 1/2].
struct QuasienergyPair {
    double eps1{0.0};
    double eps2{0.0};
};

double fold_quasienergy(double eps) noexcept;

}  // namespace dressed
