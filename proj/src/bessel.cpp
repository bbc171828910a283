#include "dressed/bessel.hpp"

#include "dressed/core.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace dressed::bessel {

namespace {

constexpr double kRescaleAbove = 1e250;
constexpr double kRescaleBy = 1e-250;

// Below this argument the two-term power series is exact to double precision
// and the downward recurrence would overflow in a single step.
constexpr double kSmallArgument = 1e-5;

void check_args(int order_max, double x) {
    if (order_max < 0) {
        throw DomainError("bessel: negative order " + std::to_string(order_max));
    }
    if (!std::isfinite(x)) throw DomainError("bessel: non-finite argument");
    if (x < 0.0) throw DomainError("bessel: negative argument");
}

void small_argument_row(double x, std::vector<double>& values) {
    // J_n(x) ~ (x/2)^n / n! * (1 - (x/2)^2 / (n+1))
    const double h = 0.5 * x;
    double lead = 1.0;
    for (std::size_t n = 0; n < values.size(); ++n) {
        if (n > 0) lead *= h / static_cast<double>(n);
        values[n] = lead * (1.0 - h * h / static_cast<double>(n + 1));
    }
}

}  // namespace

int series_truncation_order(double zeta) {
    const double z = std::max(0.0, zeta);
    // transition region n ~ z is ~ z^(1/3) wide
    return static_cast<int>(std::ceil(z) + std::ceil(3.0 * std::cbrt(z))) + 24;
}

BesselSeries bessel_row(int order_max, double x) {
    check_args(order_max, x);
    BesselSeries out{order_max, x, std::vector<double>(static_cast<std::size_t>(order_max) + 1, 0.0)};
    auto& v = out.values;

    if (x == 0.0) {
        v[0] = 1.0;
        return out;
    }
    if (x < kSmallArgument) {
        small_argument_row(x, v);
        return out;
    }

    const int start = std::max(order_max, static_cast<int>(std::ceil(x))) + 16 +
                      static_cast<int>(std::ceil(10.0 * std::log10(1.0 + x)));

    // Downward recurrence J_{n-1} = (2n/x) J_n - J_{n+1}, seeded with
    // J_{start+1} = 0, J_start = 1 (arbitrary scale).
    double above = 0.0;
    double current = 1.0;
    double norm_sum = 0.0;
    for (int n = start; n >= 1; --n) {
        if (n <= order_max) v[static_cast<std::size_t>(n)] = current;
        if (n % 2 == 0) norm_sum += 2.0 * current;
        const double below = (2.0 * n / x) * current - above;
        above = current;
        current = below;
        if (std::abs(current) > kRescaleAbove) {
            current *= kRescaleBy;
            above *= kRescaleBy;
            norm_sum *= kRescaleBy;
            const auto top = static_cast<std::size_t>(std::min(order_max, start));
            for (std::size_t m = static_cast<std::size_t>(n); m <= top; ++m) v[m] *= kRescaleBy;
        }
    }
    v[0] = current;
    norm_sum += current;

    for (double& value : v) value /= norm_sum;
    return out;
}

double bessel_j(int n, double x) {
    check_args(n, x);
    return bessel_row(n, x).values.back();
}

double j0_zero(int k) {
    if (k < 1) throw DomainError("j0_zero: k must be >= 1, got " + std::to_string(k));

    // Exactly one zero of J_0 lies in ((k - 1/2) pi, k pi).
    double lo = (k - 0.5) * kPi;
    double hi = k * kPi;
    double f_lo = bessel_j(0, lo);
    while (hi - lo > 1e-12) {
        const double mid = 0.5 * (lo + hi);
        const double f_mid = bessel_j(0, mid);
        if ((f_mid > 0.0) == (f_lo > 0.0)) {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
        }
    }
    double x = 0.5 * (lo + hi);
    for (int it = 0; it < 2; ++it) {
        const BesselSeries row = bessel_row(1, x);
        if (row[1] == 0.0) break;
        x += row[0] / row[1];  // Newton with J_0' = -J_1
    }
    return x;
}

}  // namespace dressed::bessel
