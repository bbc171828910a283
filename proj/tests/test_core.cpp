#include "dressed/core.hpp"

#include <doctest.h>

#include <cmath>

using namespace dressed;

namespace {

bool close(cplx a, cplx b, double tol) { return std::abs(a - b) <= tol; }

}  // namespace

TEST_CASE("SystemParams validation and derived values") {
    const auto p = SystemParams::from_rabi(0.1, 0.75, 2.0);
    CHECK(p.zeta() == 1.5);
    CHECK(p.dipole() == 2.0);
    CHECK(SystemParams::from_zeta(0.1, 3.0).rabi() == 1.5);

    CHECK_THROWS_AS(SystemParams::from_rabi(-0.1, 1.0), DomainError);
    CHECK_THROWS_AS(SystemParams::from_rabi(0.1, -1.0), DomainError);
    CHECK_THROWS_AS(SystemParams::from_rabi(0.1, 1.0, 0.0), DomainError);
    CHECK_THROWS_AS(SystemParams::from_rabi(NAN, 1.0), DomainError);
    CHECK_THROWS_AS(SystemParams::from_zeta(0.1, INFINITY), DomainError);
}

TEST_CASE("epsilon_eff interpolates weak and strong drive") {
    CHECK(SystemParams::from_zeta(0.1, 0.0).epsilon_eff() == doctest::Approx(0.1));
    CHECK(SystemParams::from_zeta(0.1, 0.5).epsilon_eff() == doctest::Approx(0.1));
    CHECK(SystemParams::from_zeta(0.1, 8.0).epsilon_eff() == doctest::Approx(0.1 * std::sqrt(2.0 / (kPi * 8.0))));
}

TEST_CASE("hamiltonian_at examples") {
    const auto p = SystemParams::from_rabi(0.1, 1.0);
    auto h = hamiltonian_at(p, kPi / 2);
    CHECK(close(h.a11, -0.05, 1e-15));
    CHECK(close(h.a22, 0.05, 1e-15));
    CHECK(std::abs(h.a12) < 1e-15);

    h = hamiltonian_at(p, 0.0);
    CHECK(close(h.a12, -1.0, 1e-15));
    CHECK(close(h.a21, -1.0, 1e-15));
    CHECK(close(h.a11, -0.05, 1e-15));

    h = hamiltonian_at(SystemParams::from_rabi(0.1, 0.0), 1.234);
    CHECK(close(h.a11, -0.05, 0));
    CHECK(h.a12 == cplx(0));
}

TEST_CASE("hamiltonian is Hermitian, traceless and pi-antiperiodic off the diagonal") {
    const auto p = SystemParams::from_zeta(0.3, 7.0);
    for (int m = 0; m < 64; ++m) {
        const double tau = kPeriod * m / 64.0;
        const auto h = hamiltonian_at(p, tau);
        const auto g = hamiltonian_at(p, tau + kPi);
        CHECK(is_hermitian_traceless(h));
        CHECK(std::abs(g.a12 + h.a12) < 1e-14);
        CHECK(g.a11 == h.a11);
        CHECK(g.a22 == h.a22);
    }
}

TEST_CASE("Pauli operators in the (|1>,|2>) ordering") {
    CHECK(max_abs_diff(sigma_z(), ComplexMatrix2::diag(-1.0, 1.0)) == 0);
    CHECK(sigma_minus().a12 == cplx(1));
    CHECK(sigma_plus().a21 == cplx(1));
    CHECK(max_abs_diff(sigma_x(), sigma_plus() + sigma_minus()) == 0);
    CHECK(max_abs_diff(parity_operator(), ComplexMatrix2::diag(1.0, -1.0)) == 0);
}

TEST_CASE("pauli_combination examples and spectrum") {
    CHECK(max_abs_diff(pauli_combination(1.0, 0.0), ComplexMatrix2::diag(-1.0, 1.0)) == 0);
    const auto x = pauli_combination(0.0, 1.0);
    CHECK(x.a12 == cplx(1));
    CHECK(x.a21 == cplx(1));
    const auto m = pauli_combination(0.3, cplx(0, 0.1));
    CHECK(max_abs_diff(m, m.adjoint()) == 0);
    CHECK(is_hermitian_traceless(m));

    // eigenvalues +-sqrt(az^2 + |ap|^2) from the characteristic polynomial
    const double r = std::sqrt(0.09 + 0.01);
    const cplx tr = m.trace(), det = m.det();
    const cplx disc = std::sqrt(tr * tr - 4.0 * det);
    CHECK(std::abs((tr + disc) / 2.0 - r) < 1e-15);
    CHECK(std::abs((tr - disc) / 2.0 + r) < 1e-15);
}

TEST_CASE("expi_hermitian matches a Taylor series") {
    const ComplexMatrix2 a = pauli_combination(0.4, cplx(-0.2, 0.7)) + ComplexMatrix2::diag(0.3, 0.3);
    ComplexMatrix2 sum = ComplexMatrix2::identity(), term = ComplexMatrix2::identity();
    for (int n = 1; n < 40; ++n) {
        term = (cplx(0, 1) / static_cast<double>(n)) * (term * a);
        sum = sum + term;
    }
    const auto e = expi_hermitian(a);
    CHECK(max_abs_diff(e, sum) < 1e-14);
    CHECK(unitarity_defect(e) < 1e-15);
    CHECK(max_abs_diff(expi_hermitian(ComplexMatrix2{}), ComplexMatrix2::identity()) == 0);
}

TEST_CASE("project_to_su2 returns the nearest special unitary") {
    const auto u = expi_hermitian(pauli_combination(0.9, cplx(0.1, -0.4)));
    CHECK(is_special_unitary(u));
    ComplexMatrix2 noisy = u;
    noisy.a11 += cplx(1e-6, -2e-6);
    noisy.a21 += cplx(-3e-6, 1e-6);
    CHECK_FALSE(is_special_unitary(noisy));
    const auto p = project_to_su2(noisy);
    CHECK(is_special_unitary(p, 1e-14));
    CHECK(max_abs_diff(p, u) < 1e-5);
    CHECK_THROWS_AS(project_to_su2(ComplexMatrix2{}), AccuracyError);
}

TEST_CASE("fold_quasienergy maps into (-1/2, 1/2]") {
    CHECK(fold_quasienergy(0.5) == 0.5);
    CHECK(fold_quasienergy(-0.5) == 0.5);
    CHECK(fold_quasienergy(0.7) == doctest::Approx(-0.3));
    for (int n = -3; n <= 3; ++n) CHECK(fold_quasienergy(0.123 + n) == doctest::Approx(0.123).epsilon(1e-13));
}

TEST_CASE("spinor helpers") {
    const ComplexSpinor s{cplx(3, 0), cplx(0, 4)};
    CHECK(s.norm() == 5.0);
    const auto n = s.normalized();
    CHECK(n.norm_sq() == doctest::Approx(1.0));
    CHECK(inner(n, n) == cplx(1.0));
    CHECK(inner(ComplexSpinor{1.0, 0.0}, ComplexSpinor{0.0, 1.0}) == cplx(0));
    CHECK(max_abs_diff(s, s) == 0);
    CHECK_THROWS_AS(ComplexSpinor{}.normalized(), DomainError);
}
