#include "dressed/spectroscopy.hpp"

#include "dressed/analytic.hpp"
#include "dressed/bessel.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <tuple>

namespace dressed::spectroscopy {

namespace {

constexpr cplx kI{0.0, 1.0};

void check_label(int label) {
    if (label != 1 && label != 2) {
        throw DomainError("spectroscopy: mode label must be 1 or 2, got " + std::to_string(label));
    }
}

const floquet::FloquetMode& mode_of(const floquet::ModePair& modes, int label) {
    check_label(label);
    return modes[static_cast<std::size_t>(label - 1)];
}

double eps_of(const QuasienergyPair& q, int label) {
    check_label(label);
    return label == 1 ? q.eps1 : q.eps2;
}

}  // namespace

std::string to_string(LineClass c) {
    switch (c) {
        case LineClass::intra_manifold: return "intra_manifold";
        case LineClass::hyper_raman: return "hyper_raman";
        case LineClass::odd_harmonic: return "odd_harmonic";
        case LineClass::none: return "none";
    }
    return "unknown";
}

cplx extended_inner(std::span<const ComplexSpinor> f, std::span<const ComplexSpinor> g) {
    if (f.size() != g.size()) {
        throw DomainError("extended_inner: grids differ (" + std::to_string(f.size()) + " vs " +
                          std::to_string(g.size()) + ")");
    }
    if (f.size() < 64) throw DomainError("extended_inner: grid needs at least 64 points");
    return floquet::mean_inner(f, g);
}

cplx dipole_matrix_element(const floquet::FloquetMode& mode_i, const floquet::FloquetMode& mode_j, int k,
                           double dipole) {
    if (mode_i.n_grid() != mode_j.n_grid()) throw DomainError("dipole_matrix_element: modes on different grids");
    if (mode_i.n_grid() < 64) throw DomainError("dipole_matrix_element: grid needs at least 64 points");
    const ComplexMatrix2 d = dipole * sigma_x();
    cplx sum{};
    for (std::size_t m = 0; m < mode_i.n_grid(); ++m) {
        sum += inner(mode_i.samples[m], d * mode_j.samples[m]) * std::exp(kI * (k * mode_i.tau(m)));
    }
    return sum / static_cast<double>(mode_i.n_grid());
}

bool is_allowed(int i, int j, int k) {
    check_label(i);
    check_label(j);
    const bool odd = k % 2 != 0;
    return i == j ? odd : !odd;
}

LineClass classify(int i, int j, int k) {
    if (!is_allowed(i, j, k)) return LineClass::none;
    if (i == j) return LineClass::odd_harmonic;
    return k == 0 ? LineClass::intra_manifold : LineClass::hyper_raman;
}

double line_intensity_numeric(const floquet::ModePair& modes, int i, int j, int k, double dipole) {
    return std::norm(dipole_matrix_element(mode_of(modes, i), mode_of(modes, j), k, dipole));
}

double line_intensity_numeric(const SystemParams& params, int i, int j, int k, const PropagationConfig& config,
                              int n_grid) {
    check_label(i);
    check_label(j);
    return line_intensity_numeric(floquet::build_modes(params, config, n_grid), i, j, k, params.dipole());
}

double line_intensity_analytic(const SystemParams& params, int i, int j, int k) {
    const double mu2 = params.dipole() * params.dipole();
    switch (classify(i, j, k)) {
        case LineClass::none: return 0.0;
        case LineClass::intra_manifold: return mu2;
        case LineClass::hyper_raman:
        case LineClass::odd_harmonic: {
            const int order = std::abs(k);
            const double ratio = bessel::bessel_j(order, params.zeta()) / order;
            return mu2 * params.delta() * params.delta() * ratio * ratio;
        }
    }
    return 0.0;
}

double transition_offset(int i, int j, int k, const QuasienergyPair& quasienergies) {
    return eps_of(quasienergies, j) - eps_of(quasienergies, i) + k;
}

double transition_frequency(int i, int j, int k, const QuasienergyPair& quasienergies) {
    return std::abs(transition_offset(i, j, k, quasienergies));
}

std::vector<TransitionLine> spectrum(const SystemParams& params, const floquet::ModePair& modes, int k_max,
                                     bool include_forbidden) {
    if (k_max < 1) throw DomainError("spectrum: k_max must be >= 1");
    const QuasienergyPair exact{modes[0].quasienergy, modes[1].quasienergy};
    const QuasienergyPair first_order = analytic::analytic_quasienergies(params);

    std::vector<TransitionLine> lines;
    for (int k = -k_max; k <= k_max; ++k) {
        for (int i = 1; i <= 2; ++i) {
            for (int j = 1; j <= 2; ++j) {
                const bool forbidden = !is_allowed(i, j, k);
                if (forbidden && !include_forbidden) continue;
                TransitionLine line;
                line.i = i;
                line.j = j;
                line.k = k;
                line.signed_frequency = transition_offset(i, j, k, exact);
                line.frequency = std::abs(line.signed_frequency);
                line.frequency_analytic = transition_frequency(i, j, k, first_order);
                line.intensity_numeric = line_intensity_numeric(modes, i, j, k, params.dipole());
                line.intensity_analytic = line_intensity_analytic(params, i, j, k);
                line.line_class = classify(i, j, k);
                line.forbidden = forbidden;
                lines.push_back(line);
            }
        }
    }
    std::sort(lines.begin(), lines.end(), [](const TransitionLine& a, const TransitionLine& b) {
        return std::tie(a.frequency, a.k, a.i, a.j) < std::tie(b.frequency, b.k, b.i, b.j);
    });
    return lines;
}

std::vector<TransitionLine> spectrum(const SystemParams& params, int k_max, const PropagationConfig& config,
                                     const SpectrumOptions& options) {
    if (k_max < 1) throw DomainError("spectrum: k_max must be >= 1");
    return spectrum(params, floquet::build_modes(params, config, options.n_grid), k_max, options.include_forbidden);
}

}  // namespace dressed::spectroscopy
