#include "dressed/analytic.hpp"
#include "dressed/bessel.hpp"
#include "dressed/spectroscopy.hpp"

#include "oracles/oracles.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>

using namespace dressed;
using namespace dressed::spectroscopy;

namespace {

floquet::FloquetMode constant_mode(ComplexSpinor s, int n = 64) {
    floquet::FloquetMode m;
    m.samples.assign(static_cast<std::size_t>(n), s);
    return m;
}

const TransitionLine* find_line(const std::vector<TransitionLine>& lines, int i, int j, int k) {
    auto it = std::find_if(lines.begin(), lines.end(),
                           [&](const TransitionLine& l) { return l.i == i && l.j == j && l.k == k; });
    return it == lines.end() ? nullptr : &*it;
}

}  // namespace

TEST_CASE("extended inner product") {
    const auto one = constant_mode({1.0, 0.0});
    CHECK(extended_inner(one.samples, one.samples) == cplx(1.0));

    auto wave = one;
    for (std::size_t m = 0; m < wave.n_grid(); ++m) wave.samples[m].c1 = std::exp(cplx(0, wave.tau(m)));
    CHECK(std::abs(extended_inner(one.samples, wave.samples)) <= 1e-14);

    const auto modes = floquet::build_modes(SystemParams::from_zeta(0.1, kPi / 2));
    CHECK(std::abs(extended_inner(modes[0].samples, modes[1].samples)) <= 1e-8);

    CHECK_THROWS_AS(extended_inner(one.samples, constant_mode({1.0, 0.0}, 128).samples), DomainError);
    CHECK_THROWS_AS(extended_inner(constant_mode({1.0, 0.0}, 32).samples, constant_mode({1.0, 0.0}, 32).samples),
                    DomainError);
}

TEST_CASE("dipole matrix elements") {
    const auto g = constant_mode({1.0, 0.0}), e = constant_mode({0.0, 1.0});
    CHECK(dipole_matrix_element(g, g, 0, 1.0) == cplx(0));
    CHECK(dipole_matrix_element(g, e, 0, 1.0) == cplx(1));
    CHECK(dipole_matrix_element(g, e, 0, 2.5) == cplx(2.5));

    const auto modes = floquet::build_modes(SystemParams::from_zeta(0.1, kPi));
    CHECK(std::norm(dipole_matrix_element(modes[0], modes[0], 2, 1.0)) <= 1e-10);
}

TEST_CASE("selection rules and classes") {
    CHECK(is_allowed(1, 2, 0));
    CHECK(is_allowed(2, 1, -4));
    CHECK(is_allowed(1, 1, 3));
    CHECK_FALSE(is_allowed(1, 1, 2));
    CHECK_FALSE(is_allowed(2, 1, 1));
    CHECK(classify(1, 2, 0) == LineClass::intra_manifold);
    CHECK(classify(2, 1, 2) == LineClass::hyper_raman);
    CHECK(classify(2, 2, -3) == LineClass::odd_harmonic);
    CHECK(classify(1, 1, 0) == LineClass::none);
    CHECK_THROWS_AS(is_allowed(0, 1, 0), DomainError);
}

TEST_CASE("numeric intensities") {
    const auto p = SystemParams::from_zeta(0.1, kPi);
    CHECK(std::abs(line_intensity_numeric(p, 1, 2, 0) - 1.0) <= 10 * 0.1);

    const auto q = SystemParams::from_zeta(0.05, kPi);
    const double j3 = oracle::bessel_series(3, kPi);
    const double predicted = 0.05 * 0.05 * (j3 / 3) * (j3 / 3);
    CHECK(std::abs(line_intensity_numeric(q, 1, 1, 3) - predicted) <= 10 * 0.05 * predicted);

    for (double zeta : {0.4, 2.0, 7.0}) {
        const auto r = SystemParams::from_zeta(0.3, zeta, 1.7);
        const auto modes = floquet::build_modes(r);
        for (int k = -9; k <= 9; ++k) {
            for (int i = 1; i <= 2; ++i) {
                for (int j = 1; j <= 2; ++j) {
                    const double v = line_intensity_numeric(modes, i, j, k, r.dipole());
                    if (!is_allowed(i, j, k)) CHECK(v <= 1e-10 * r.dipole() * r.dipole());
                    CHECK(std::abs(v - line_intensity_numeric(modes, j, i, -k, r.dipole())) <= 1e-12);
                }
            }
        }
    }
}

TEST_CASE("analytic intensities") {
    const auto p = SystemParams::from_zeta(0.1, kPi, 2.0);
    CHECK(line_intensity_analytic(p, 1, 2, 0) == 4.0);
    CHECK(line_intensity_analytic(p, 1, 1, 2) == 0.0);
    const double j2 = oracle::bessel_series(2, kPi);
    const double expect = 0.01 * (j2 / 2) * (j2 / 2);
    CHECK(std::abs(line_intensity_analytic(SystemParams::from_zeta(0.1, kPi), 1, 2, 2) - expect) <= 1e-15);
}

TEST_CASE("transition frequencies") {
    const QuasienergyPair q{0.0152, -0.0152};
    CHECK(transition_frequency(1, 1, 3, q) == 3.0);
    CHECK(transition_frequency(2, 2, -3, q) == 3.0);
    CHECK(transition_offset(1, 2, 0, q) == doctest::Approx(-0.0304));

    const auto a = analytic::analytic_quasienergies(SystemParams::from_zeta(0.1, kPi));
    CHECK(std::abs(transition_frequency(1, 2, 0, a) - std::abs(0.1 * oracle::bessel_series(0, kPi))) <= 1e-15);
    CHECK(transition_frequency(1, 2, 0, a) == doctest::Approx(0.0304242).epsilon(1e-6));

    const auto z = analytic::analytic_quasienergies(SystemParams::from_zeta(0.1, bessel::j0_zero(1)));
    CHECK(std::abs(transition_frequency(1, 2, 2, z) - 2.0) <= 1e-15);
    CHECK(std::abs(transition_frequency(2, 1, 2, z) - 2.0) <= 1e-15);
}

TEST_CASE("spectrum structure at zeta = pi/5") {
    const double delta = 0.1, zeta = kPi / 5;
    const auto lines = spectrum(SystemParams::from_zeta(delta, zeta), 3);
    const double low = std::abs(delta * oracle::bessel_series(0, zeta));
    REQUIRE_FALSE(lines.empty());
    CHECK(lines.front().line_class == LineClass::intra_manifold);
    CHECK(std::abs(lines.front().frequency - low) <= 5 * delta * delta);
    for (const auto& l : lines) CHECK_FALSE(l.forbidden);
    CHECK(std::is_sorted(lines.begin(), lines.end(),
                         [](const TransitionLine& a, const TransitionLine& b) { return a.frequency < b.frequency; }));

    // harmonics at 1 and 3, doublet at 2 -+ delta J0 with the absorption side lower
    const auto* h1 = find_line(lines, 1, 1, 1);
    const auto* h3 = find_line(lines, 2, 2, 3);
    REQUIRE(h1);
    REQUIRE(h3);
    CHECK(std::abs(h1->frequency - 1.0) <= 1e-9);
    CHECK(std::abs(h3->frequency - 3.0) <= 1e-9);
    const auto* lo = find_line(lines, 2, 1, 2);
    const auto* hi = find_line(lines, 1, 2, 2);
    REQUIRE(lo);
    REQUIRE(hi);
    CHECK(lo->frequency < hi->frequency);
    CHECK(std::abs(hi->frequency - lo->frequency - 2 * low) <= 10 * delta * delta);
    CHECK_THROWS_AS(spectrum(SystemParams::from_zeta(delta, zeta), 0), DomainError);
}

TEST_CASE("spectrum at zeta = pi has inverted ordering") {
    const auto lines = spectrum(SystemParams::from_zeta(0.1, kPi), 3);
    const auto* lo = find_line(lines, 1, 2, 2);
    const auto* hi = find_line(lines, 2, 1, 2);
    REQUIRE(lo);
    REQUIRE(hi);
    CHECK(lo->frequency < hi->frequency);
}

TEST_CASE("spectrum at the first J0 zero") {
    const auto lines = spectrum(SystemParams::from_zeta(0.1, bessel::j0_zero(1)), 4);
    const auto& top = *std::max_element(lines.begin(), lines.end(), [](const auto& a, const auto& b) {
        return a.intensity_numeric < b.intensity_numeric;
    });
    CHECK(top.line_class == LineClass::intra_manifold);
    CHECK(top.frequency_analytic <= 1e-15);
    CHECK(top.frequency <= 5 * 0.01);
    CHECK(top.intensity_analytic == 1.0);
    const auto* a = find_line(lines, 1, 2, 2);
    const auto* b = find_line(lines, 2, 1, 2);
    REQUIRE(a);
    REQUIRE(b);
    CHECK(std::abs(a->frequency_analytic - b->frequency_analytic) <= 1e-12);
}

TEST_CASE("forbidden lines on request") {
    const auto lines = spectrum(SystemParams::from_zeta(0.1, 1.0), 5, {}, {floquet::kDefaultGrid, true});
    int forbidden = 0;
    for (const auto& l : lines) {
        CHECK(l.forbidden == !is_allowed(l.i, l.j, l.k));
        if (l.forbidden) {
            ++forbidden;
            CHECK(l.intensity_numeric <= 1e-10);
            CHECK(l.line_class == LineClass::none);
        }
    }
    CHECK(forbidden == 22);
}

TEST_CASE("sum rule is monotone and bounded") {
    const double delta = 0.1, zeta = 2.0;
    const auto p = SystemParams::from_zeta(delta, zeta);
    const auto modes = floquet::build_modes(p);
    double bound = 0;
    for (int k = 1; k <= 40; ++k) bound += 2 * std::pow(oracle::bessel_series(k, zeta) / k, 2);
    bound = 1 + delta * delta * bound;
    for (int i = 1; i <= 2; ++i) {
        double prev = 0;
        for (int k_max = 0; k_max <= 12; ++k_max) {
            double total = 0;
            for (int k = -k_max; k <= k_max; ++k) {
                for (int j = 1; j <= 2; ++j) {
                    if (is_allowed(i, j, k)) total += line_intensity_numeric(modes, i, j, k, 1.0);
                }
            }
            CHECK(total >= prev);
            CHECK(total <= 1.1 * bound);
            prev = total;
        }
        // Parseval: the full Fourier sum is <phi_i| d^2 |phi_i> = mu^2
        CHECK(std::abs(prev - 1.0) <= 1e-10);
    }
}
