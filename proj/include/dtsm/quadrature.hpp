#pragma once

#include <cmath>
#include <functional>
#include <stdexcept>

#include "dtsm/errors.hpp"

namespace dtsm {

enum class QuadRule { GaussKronrod };

/// Fixed-panel Gauss-Kronrod scheme. panels == 0 means one panel per
/// month of integration span; the self-check doubles the resolution and
/// refines until two consecutive levels agree to 1e-10.
struct QuadratureScheme {
    QuadRule rule = QuadRule::GaussKronrod;
    int points_per_dim = 5;
    int panels = 0;
    bool self_check = true;

    void validate() const {
        if (points_per_dim < 3)
            throw std::invalid_argument("QuadratureScheme: points_per_dim must be >= 3");
        if (points_per_dim != 5 && points_per_dim != 15)
            throw std::invalid_argument("QuadratureScheme: supported point counts are 5 and 15");
    }
};

namespace quad {

// 5-point Kronrod extension of 2-point Gauss on [-1,1].
inline constexpr double k5_nodes[5] = {-0.9258200997725514615666, -0.5773502691896257645092,
                                       0.0, 0.5773502691896257645092,
                                       0.9258200997725514615666};
inline constexpr double k5_weights[5] = {0.1979797979797979797980, 0.4909090909090909090909,
                                         0.6222222222222222222222, 0.4909090909090909090909,
                                         0.1979797979797979797980};

// 15-point Kronrod extension of 7-point Gauss (QUADPACK dqk15 abscissae).
inline constexpr double k15_nodes[15] = {
    -0.9914553711208126392069, -0.9491079123427585245262, -0.8648644233597690727897,
    -0.7415311855993944398639, -0.5860872354676911302941, -0.4058451513773971669066,
    -0.2077849550078984676007, 0.0,
    0.2077849550078984676007,  0.4058451513773971669066,  0.5860872354676911302941,
    0.7415311855993944398639,  0.8648644233597690727897,  0.9491079123427585245262,
    0.9914553711208126392069};
inline constexpr double k15_weights[15] = {
    0.0229353220105292249637, 0.0630920926299785532907, 0.1047900103222501838399,
    0.1406532597155259187452, 0.1690047266392679028266, 0.1903505780647854099133,
    0.2044329400752988924142, 0.2094821410847278280130, 0.2044329400752988924142,
    0.1903505780647854099133, 0.1690047266392679028266, 0.1406532597155259187452,
    0.1047900103222501838399, 0.0630920926299785532907, 0.0229353220105292249637};

inline void rule_nodes(int points, const double*& nodes, const double*& weights, int& n) {
    if (points == 5) {
        nodes = k5_nodes; weights = k5_weights; n = 5;
    } else {
        nodes = k15_nodes; weights = k15_weights; n = 15;
    }
}

inline int auto_panels(double span_years) {
    const int by_month = static_cast<int>(std::ceil(span_years * 12.0));
    return std::max(1, std::min(by_month, 64));
}

template <class F>
double panel_integrate(const F& f, double a, double b, int panels, int points) {
    const double* xs;
    const double* ws;
    int n;
    rule_nodes(points, xs, ws, n);
    const double h = (b - a) / panels;
    double acc = 0.0;
    for (int p = 0; p < panels; ++p) {
        const double lo = a + p * h;
        const double mid = lo + 0.5 * h;
        double local = 0.0;
        for (int i = 0; i < n; ++i) local += ws[i] * f(mid + 0.5 * h * xs[i]);
        acc += 0.5 * h * local;
    }
    return acc;
}

/// Panelized rule with the doubled-resolution self-check; refines until two
/// consecutive levels agree to 1e-10 (absolute), else throws NumericalError.
template <class F>
double integrate_checked(const F& f, double a, double b, const QuadratureScheme& q,
                         const char* what) {
    if (b <= a) return 0.0;
    q.validate();
    int panels = q.panels > 0 ? q.panels : auto_panels(b - a);
    double prev = panel_integrate(f, a, b, panels, q.points_per_dim);
    if (!q.self_check) return prev;
    for (int iter = 0; iter < 7; ++iter) {
        panels *= 2;
        const double next = panel_integrate(f, a, b, panels, q.points_per_dim);
        if (std::abs(next - prev) <= 1e-10) return next;
        prev = next;
    }
    throw NumericalError(std::string(what) + ": quadrature refinement did not converge");
}

}  // namespace quad

}  // namespace dtsm
