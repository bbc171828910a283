#include "dressed/floquet.hpp"

#include "dressed/analytic.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <sstream>

namespace dressed::floquet {

namespace {

constexpr cplx kI{0.0, 1.0};
constexpr double kUnitarityInputTol = 1e-8;
constexpr double kClosureTol = 1e-8;
constexpr double kConfidentParity = 0.9;
constexpr double kMatchAmbiguity = 1e-3;

struct Eigenpairs {
    std::array<ComplexSpinor, 2> vectors;
    double gap{0.0};
};

// Orthonormal eigenvectors of a Hermitian 2x2 matrix; gap is the eigenvalue spread.
Eigenpairs hermitian_eigenvectors(const ComplexMatrix2& h) {
    const double half_diff = 0.5 * (h.a11.real() - h.a22.real());
    const cplx b = 0.5 * (h.a12 + std::conj(h.a21));
    const double r = std::hypot(half_diff, std::abs(b));
    if (r == 0.0) return {{ComplexSpinor{1.0, 0.0}, ComplexSpinor{0.0, 1.0}}, 0.0};
    ComplexSpinor v = half_diff >= 0.0 ? ComplexSpinor{half_diff + r, std::conj(b)}
                                       : ComplexSpinor{b, r - half_diff};
    v = v.normalized();
    const ComplexSpinor w{-std::conj(v.c2), std::conj(v.c1)};
    return {{v, w}, 2.0 * r};
}

// Eigenvectors of a normal 2x2 matrix through whichever Hermitian part
// separates the eigenvalues better.
Eigenpairs normal_eigenvectors(const ComplexMatrix2& m) {
    const ComplexMatrix2 re_part = 0.5 * (m + m.adjoint());
    const ComplexMatrix2 im_part = (-0.5 * kI) * (m - m.adjoint());
    const Eigenpairs a = hermitian_eigenvectors(re_part);
    const Eigenpairs b = hermitian_eigenvectors(im_part);
    return a.gap >= b.gap ? a : b;
}

// Largest component real and positive; ties go to c1.
ComplexSpinor fix_phase(const ComplexSpinor& v) {
    const cplx lead = std::abs(v.c1) + 1e-12 >= std::abs(v.c2) ? v.c1 : v.c2;
    if (std::abs(lead) == 0.0) return v;
    return (std::conj(lead) / std::abs(lead)) * v;
}

double quasienergy_of(const ComplexMatrix2& monodromy, const ComplexSpinor& v) {
    return fold_quasienergy(-std::arg(inner(v, monodromy * v)) / kPeriod);
}

void require_unitary(const ComplexMatrix2& u, const char* what) {
    const double defect = unitarity_defect(u);
    if (!(defect <= kUnitarityInputTol)) {
        std::ostringstream os;
        os << "extract_floquet: " << what << " is not unitary (defect " << defect << ")";
        throw DomainError(os.str());
    }
}

bool eigenvalues_degenerate(const ComplexMatrix2& monodromy, const std::array<ComplexSpinor, 2>& v) {
    const cplx l1 = inner(v[0], monodromy * v[0]);
    const cplx l2 = inner(v[1], monodromy * v[1]);
    return std::abs(l1 - l2) <= kDegeneracyThreshold;
}

// Orders (v, eps) so that index 0 has the larger |1> weight, lower eps on
// ties. Returns whether the pair was swapped.
bool order_by_ground_weight(std::array<ComplexSpinor, 2>& v, std::array<double, 2>& eps) {
    const double w0 = std::norm(v[0].c1);
    const double w1 = std::norm(v[1].c1);
    const bool swap = std::abs(w0 - w1) > 1e-12 ? w1 > w0 : eps[1] < eps[0];
    if (swap) {
        std::swap(v[0], v[1]);
        std::swap(eps[0], eps[1]);
    }
    return swap;
}

bool is_power_of_two(int n) { return n > 0 && std::has_single_bit(static_cast<unsigned>(n)); }

void check_grid(int n_grid) {
    if (n_grid < 64 || !is_power_of_two(n_grid)) {
        throw DomainError("floquet: n_grid must be a power of two >= 64, got " + std::to_string(n_grid));
    }
}

}  // namespace

std::string to_string(Parity p) { return p == Parity::symmetric ? "symmetric" : "antisymmetric"; }
std::string to_string(ModeSource s) { return s == ModeSource::exact ? "exact" : "analytic"; }

std::string to_string(MatchMethod m) {
    switch (m) {
        case MatchMethod::overlap: return "overlap";
        case MatchMethod::parity: return "parity";
        case MatchMethod::degenerate: return "degenerate";
    }
    return "unknown";
}

FloquetDecomposition extract_floquet(const ComplexMatrix2& monodromy) {
    require_unitary(monodromy, "monodromy");
    Eigenpairs eig = normal_eigenvectors(monodromy);
    FloquetDecomposition out;
    out.degenerate = eig.gap <= kDegeneracyThreshold;
    std::array<ComplexSpinor, 2> v = out.degenerate ? std::array<ComplexSpinor, 2>{ComplexSpinor{1.0, 0.0}, ComplexSpinor{0.0, 1.0}}
                                                    : eig.vectors;
    std::array<double, 2> eps{quasienergy_of(monodromy, v[0]), quasienergy_of(monodromy, v[1])};
    order_by_ground_weight(v, eps);
    out.eigenvectors = {fix_phase(v[0]), fix_phase(v[1])};
    out.quasienergies = {eps[0], eps[1]};
    return out;
}

FloquetDecomposition extract_floquet(const ComplexMatrix2& monodromy, const ComplexMatrix2& half_period_symmetry) {
    require_unitary(monodromy, "monodromy");
    require_unitary(half_period_symmetry, "half-period symmetry operator");
    const Eigenpairs eig = normal_eigenvectors(half_period_symmetry);
    if (eig.gap <= kDegeneracyThreshold) {
        // Both modes share parity and sit on the zone edge; parity cannot help.
        return extract_floquet(monodromy);
    }

    std::array<ComplexSpinor, 2> v = eig.vectors;
    std::array<double, 2> eps{quasienergy_of(monodromy, v[0]), quasienergy_of(monodromy, v[1])};
    std::array<Parity, 2> parity{};
    for (std::size_t j = 0; j < 2; ++j) {
        // Q v = s exp(-i pi eps) v with s = +1 (symmetric) or -1.
        const cplx q = inner(v[j], half_period_symmetry * v[j]);
        const double s = (q * std::exp(kI * (kPi * eps[j]))).real();
        parity[j] = s > 0.0 ? Parity::symmetric : Parity::antisymmetric;
    }

    if (parity[0] != parity[1]) {
        if (parity[1] == Parity::symmetric) {
            std::swap(v[0], v[1]);
            std::swap(eps[0], eps[1]);
            std::swap(parity[0], parity[1]);
        }
    } else {
        if (order_by_ground_weight(v, eps)) std::swap(parity[0], parity[1]);
    }

    FloquetDecomposition out;
    out.eigenvectors = {fix_phase(v[0]), fix_phase(v[1])};
    out.quasienergies = {eps[0], eps[1]};
    out.degenerate = eigenvalues_degenerate(monodromy, v);
    out.parities = parity;
    return out;
}

ComplexSpinor floquet_mode_at(const SystemParams& params, const ComplexSpinor& eigvec, double eps, double tau,
                              const PropagationConfig& config) {
    const ComplexMatrix2 u = propagate(params, 0.0, tau, config);
    return std::exp(kI * (eps * tau)) * (u * eigvec);
}

cplx mean_inner(std::span<const ComplexSpinor> f, std::span<const ComplexSpinor> g) {
    if (f.size() != g.size() || f.empty()) {
        throw DomainError("mean_inner: sample grids differ (" + std::to_string(f.size()) + " vs " +
                          std::to_string(g.size()) + ")");
    }
    cplx sum{};
    for (std::size_t m = 0; m < f.size(); ++m) sum += inner(f[m], g[m]);
    return sum / static_cast<double>(f.size());
}

cplx symmetry_overlap(const FloquetMode& mode) {
    const std::size_t n = mode.n_grid();
    if (n == 0 || n % 2 != 0) throw DomainError("symmetry_overlap: grid size must be even and non-zero");
    const ComplexMatrix2 p = parity_operator();
    cplx sum{};
    for (std::size_t m = 0; m < n; ++m) {
        sum += inner(p * mode.samples[(m + n / 2) % n], mode.samples[m]);
    }
    return sum / static_cast<double>(n);
}

Parity symmetry_classify(const FloquetMode& mode) {
    const cplx s = symmetry_overlap(mode);
    if (!(std::abs(s) > kConfidentParity)) {
        std::ostringstream os;
        os << "symmetry_classify: parity overlap |s| = " << std::abs(s)
           << " is too small to classify (grid too coarse or symmetry broken)";
        throw AmbiguousClassification(os.str());
    }
    return s.real() > 0.0 ? Parity::symmetric : Parity::antisymmetric;
}

FloquetMode shifted(const FloquetMode& mode, int n) {
    FloquetMode out = mode;
    for (std::size_t m = 0; m < out.samples.size(); ++m) {
        out.samples[m] = std::exp(kI * (n * mode.tau(m))) * out.samples[m];
    }
    out.quasienergy = mode.quasienergy + n;
    if (n % 2 != 0) {
        out.parity = mode.parity == Parity::symmetric ? Parity::antisymmetric : Parity::symmetric;
    }
    return out;
}

ModePair build_modes(const SystemParams& params, const PropagationConfig& config, int n_grid) {
    check_grid(n_grid);
    const std::vector<ComplexMatrix2> grid = propagate_on_grid(params, n_grid, config);
    const auto half = static_cast<std::size_t>(n_grid / 2);
    const auto last = static_cast<std::size_t>(n_grid);
    const FloquetDecomposition dec = extract_floquet(grid[last], parity_operator() * grid[half]);

    ModePair modes;
    for (std::size_t j = 0; j < 2; ++j) {
        FloquetMode& mode = modes[j];
        mode.label = static_cast<int>(j) + 1;
        mode.source = ModeSource::exact;
        mode.quasienergy = j == 0 ? dec.quasienergies.eps1 : dec.quasienergies.eps2;
        const ComplexSpinor& v = dec.eigenvectors[j];
        mode.samples.resize(last);
        for (std::size_t m = 0; m < last; ++m) {
            mode.samples[m] = std::exp(kI * (mode.quasienergy * mode.tau(m))) * (grid[m] * v);
        }
        const ComplexSpinor closed = std::exp(kI * (mode.quasienergy * kPeriod)) * (grid[last] * v);
        const double closure = max_abs_diff(closed, v);
        if (!(closure <= kClosureTol)) {
            std::ostringstream os;
            os << "build_modes: mode " << mode.label << " fails periodic closure by " << closure << " ("
               << params.describe() << ")";
            throw AccuracyError(os.str());
        }
        mode.parity = symmetry_classify(mode);
    }
    return modes;
}

ModePair build_analytic_modes(const SystemParams& params, int n_grid) {
    check_grid(n_grid);
    const analytic::AnalyticModel model(params);
    const QuasienergyPair eps = model.quasienergies();
    ModePair modes;
    for (std::size_t j = 0; j < 2; ++j) {
        FloquetMode& mode = modes[j];
        mode.label = static_cast<int>(j) + 1;
        mode.source = ModeSource::analytic;
        mode.quasienergy = j == 0 ? eps.eps1 : eps.eps2;
        mode.samples.resize(static_cast<std::size_t>(n_grid));
        for (std::size_t m = 0; m < mode.samples.size(); ++m) {
            mode.samples[m] = model.floquet_state(mode.label, mode.tau(m));
        }
        mode.parity = symmetry_classify(mode);
    }
    return modes;
}

ModeMatch match_modes(const ModePair& exact, const ModePair& analytic) {
    for (std::size_t j = 0; j < 2; ++j) {
        if (exact[j].n_grid() != analytic[0].n_grid() || analytic[j].n_grid() != analytic[0].n_grid()) {
            throw DomainError("match_modes: modes are sampled on different grids");
        }
    }
    std::array<std::array<double, 2>, 2> overlap{};
    for (std::size_t i = 0; i < 2; ++i) {
        for (std::size_t j = 0; j < 2; ++j) {
            overlap[i][j] = std::norm(mean_inner(exact[i].samples, analytic[j].samples));
        }
    }
    const double straight = overlap[0][0] + overlap[1][1];
    const double crossed = overlap[0][1] + overlap[1][0];

    ModeMatch out;
    if (std::abs(straight - crossed) > kMatchAmbiguity) {
        out.method = MatchMethod::overlap;
        out.analytic_index = straight >= crossed ? std::array<int, 2>{0, 1} : std::array<int, 2>{1, 0};
    } else if (exact[0].parity != exact[1].parity && analytic[0].parity != analytic[1].parity) {
        out.method = MatchMethod::parity;
        out.analytic_index = exact[0].parity == analytic[0].parity ? std::array<int, 2>{0, 1} : std::array<int, 2>{1, 0};
    } else {
        out.method = MatchMethod::degenerate;
    }

    for (std::size_t i = 0; i < 2; ++i) {
        const FloquetMode& a = analytic[static_cast<std::size_t>(out.analytic_index[i])];
        const FloquetMode& e = exact[i];
        out.mean_fidelity[i] = std::norm(mean_inner(e.samples, a.samples));
        double worst = 1.0;
        for (std::size_t m = 0; m < e.n_grid(); ++m) {
            worst = std::min(worst, std::norm(inner(e.samples[m], a.samples[m])));
        }
        out.min_fidelity[i] = worst;
        out.quasienergy_gap[i] = std::abs(fold_quasienergy(e.quasienergy - a.quasienergy));
    }
    return out;
}

FloquetDecomposition exact_decomposition(const SystemParams& params, const PropagationConfig& config) {
    const std::vector<ComplexMatrix2> grid = propagate_on_grid(params, 2, config);
    return extract_floquet(grid[2], parity_operator() * grid[1]);
}

std::vector<double> find_crossings(double delta, double dipole, double zeta_min, double zeta_max, int scan_points,
                                   const PropagationConfig& config) {
    if (!(zeta_min < zeta_max)) throw DomainError("find_crossings: zeta_min must be < zeta_max");
    if (scan_points < 2) throw DomainError("find_crossings: need at least 2 scan points");

    auto signed_gap = [&](double zeta) {
        const QuasienergyPair e = exact_decomposition(SystemParams::from_zeta(delta, zeta, dipole), config).quasienergies;
        return e.eps1 - e.eps2;
    };

    std::vector<double> zetas(static_cast<std::size_t>(scan_points));
    std::vector<double> gaps(zetas.size());
    for (std::size_t k = 0; k < zetas.size(); ++k) {
        zetas[k] = zeta_min + (zeta_max - zeta_min) * static_cast<double>(k) / (scan_points - 1);
        gaps[k] = signed_gap(zetas[k]);
    }

    std::vector<double> out;
    for (std::size_t k = 0; k + 1 < zetas.size(); ++k) {
        double ga = gaps[k];
        double gb = gaps[k + 1];
        if (ga == 0.0) {
            out.push_back(zetas[k]);
            continue;
        }
        // A jump across the zone edge also flips the sign; it is not a crossing.
        if ((ga > 0.0) == (gb > 0.0) || gb == 0.0 || std::abs(ga) + std::abs(gb) > 0.5) continue;
        double lo = zetas[k];
        double hi = zetas[k + 1];
        for (int it = 0; it < 80 && hi - lo > 1e-12; ++it) {
            const double mid = 0.5 * (lo + hi);
            const double gm = signed_gap(mid);
            if (gm == 0.0) {
                lo = hi = mid;
                break;
            }
            if ((gm > 0.0) == (ga > 0.0)) {
                lo = mid;
                ga = gm;
            } else {
                hi = mid;
            }
        }
        out.push_back(0.5 * (lo + hi));
    }
    if (gaps.back() == 0.0) out.push_back(zetas.back());
    return out;
}

}  // namespace dressed::floquet
