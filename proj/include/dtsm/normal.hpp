#pragma once

#include <cmath>

namespace dtsm {

inline double norm_pdf(double x) {
    static const double inv_sqrt_2pi = 0.3989422804014326779399461;
    return inv_sqrt_2pi * std::exp(-0.5 * x * x);
}

inline double norm_cdf(double x) {
    return 0.5 * std::erfc(-x * 0.7071067811865475244008444);
}

/// Cumulative bivariate normal Phi2(z1, z2; chi) = P(X <= z1, Y <= z2) for
/// standard normals with correlation chi. Accurate to ~1e-15.
double bivariate_normal_cdf(double z1, double z2, double chi);

/// Upper-tail bivariate probability P(X > z1, Y > z2).
double bivariate_normal_upper(double z1, double z2, double chi);

}  // namespace dtsm
