// bessel.hpp: integer-order Bessel functions of the first kind
//
// J_n(x) for n >= 0, x >= 0 by Miller's downward recurrence normalized with
// J_0 + 2*sum J_2n = 1. Accurate to ~1e-13 absolute for x <= 50, n <= 80.

#pragma once

#include <vector>

namespace dressed::bessel {

// J_0(x) .. J_order_max(x) at one argument.
struct BesselSeries {
    int order_max{0};
    double argument{0.0};
    std::vector<double> values;

    double operator[](int n) const { return values.at(static_cast<std::size_t>(n)); }
};

double bessel_j(int n, double x);

BesselSeries bessel_row(int order_max, double x);

// k-th positive zero of J_0, k >= 1.
double j0_zero(int k);

// Highest Bessel order kept in the Jacobi-Anger sums at drive strength zeta:
// ceil(zeta) + ceil(3 zeta^(1/3)) + 24, which keeps the neglected tail below
// 1e-14 for zeta <= 40.
int series_truncation_order(double zeta);

}  // namespace dressed::bessel
