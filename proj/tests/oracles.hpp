// Test-only numerical oracles, kept independent of the library's
// closed-form implementations: adaptive Gauss-Kronrod quadrature,
// plain Monte Carlo helpers and sample statistics.
#pragma once

#include <cmath>
#include <functional>
#include <random>
#include <stdexcept>
#include <vector>

namespace oracles {

namespace detail {

// 15-point Kronrod / 7-point Gauss pair on [-1, 1] (QUADPACK dqk15 constants).
inline constexpr double xgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr double wgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr double wg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct GkResult {
    double integral;
    double error;
};

template <class F>
GkResult gk15(const F& f, double a, double b) {
    const double c = 0.5 * (a + b), h = 0.5 * (b - a);
    double resg = 0.0, resk = 0.0;
    const double fc = f(c);
    resk = wgk[7] * fc;
    resg = wg[3] * fc;
    for (int j = 0; j < 7; ++j) {
        const double x = h * xgk[j];
        const double f1 = f(c - x), f2 = f(c + x);
        resk += wgk[j] * (f1 + f2);
        if (j % 2 == 1) resg += wg[j / 2] * (f1 + f2);
    }
    return {resk * h, std::abs((resk - resg) * h)};
}

template <class F>
void adapt(const F& f, double a, double b, double tol, int depth, double& acc) {
    const GkResult r = gk15(f, a, b);
    if (r.error < tol || depth > 48) {
        acc += r.integral;
        return;
    }
    const double c = 0.5 * (a + b);
    adapt(f, a, c, tol * 0.5, depth + 1, acc);
    adapt(f, c, b, tol * 0.5, depth + 1, acc);
}

}  // namespace detail

/// Adaptive 1-D quadrature; tol is an absolute tolerance budget.
template <class F>
double integrate(const F& f, double a, double b, double tol = 1e-14) {
    if (a == b) return 0.0;
    double acc = 0.0;
    detail::adapt(f, a, b, tol, 0, acc);
    return acc;
}

/// Nested adaptive 2-D quadrature over [ax,bx] x [ay,by].
template <class F>
double integrate2d(const F& f, double ax, double bx, double ay, double by, double tol = 1e-12) {
    auto outer = [&](double x) {
        return integrate([&](double y) { return f(x, y); }, ay, by, tol * 0.1);
    };
    return integrate(outer, ax, bx, tol);
}

struct MeanVar {
    double mean = 0.0;
    double var = 0.0;   // sample variance
    double se = 0.0;    // standard error of the mean
    std::size_t n = 0;
};

inline MeanVar mean_var(const std::vector<double>& xs) {
    if (xs.size() < 2) throw std::invalid_argument("mean_var: need at least two samples");
    MeanVar r;
    r.n = xs.size();
    double s = 0.0;
    for (double x : xs) s += x;
    r.mean = s / static_cast<double>(r.n);
    double q = 0.0;
    for (double x : xs) q += (x - r.mean) * (x - r.mean);
    r.var = q / static_cast<double>(r.n - 1);
    r.se = std::sqrt(r.var / static_cast<double>(r.n));
    return r;
}

}  // namespace oracles
