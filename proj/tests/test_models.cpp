#include "dtsm/models.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <random>
#include <unsupported/Eigen/MatrixFunctions>

#include "doctest.h"
#include "oracles.hpp"

using namespace dtsm;
using Eigen::MatrixXd;
using Eigen::Vector2d;
using Eigen::Vector3d;
using Eigen::VectorXd;

namespace {

// Reference parameter set used across the suites.
ModelParams ref_afns3() {
    return ModelParams::afns3(2.0284, Vector3d(0.0054, 0.0062, 0.0088),
                              Vector3d(0.0980, 0.5153, 2.4486),
                              Vector3d(0.0175, -0.0037, -0.0012));
}

MatrixXd kq_matrix(const ModelParams& p) {
    const int n = p.n();
    MatrixXd kq = MatrixXd::Zero(n, n);
    if (p.spec().variant == Variant::Vasicek) {
        kq(0, 0) = p.kappa_q();
    } else if (n == 2) {
        kq(1, 1) = p.lambda();
    } else {
        kq(1, 1) = p.lambda();
        kq(1, 2) = -p.lambda();
        kq(2, 2) = p.lambda();
    }
    return kq;
}

}  // namespace

TEST_CASE("loading_b basics") {
    auto p = ref_afns3();

    SUBCASE("tau = 0 gives the zero vector") {
        CHECK(loading_b(p, 0.0).norm() == 0.0);
    }
    SUBCASE("negative tau rejected") {
        CHECK_THROWS_AS(loading_b(p, -0.1), std::domain_error);
    }
    SUBCASE("slope component matches the closed form at lambda tau = 0.5071") {
        const double lam = 2.0284, tau = 0.25;
        const VectorXd b = loading_b(p, tau);
        CHECK(b(1) == doctest::Approx(-(1.0 - std::exp(-lam * tau)) / lam).epsilon(1e-14));
        CHECK(b(0) == -tau);
    }
}

TEST_CASE("loading_b matches quadrature of -int rho1' e^{-K^Q u} du per component") {
    auto check = [](const ModelParams& p, double tau) {
        const MatrixXd kq = kq_matrix(p);
        const VectorXd b = loading_b(p, tau);
        for (int j = 0; j < p.n(); ++j) {
            const double q = oracles::integrate(
                [&](double u) {
                    const MatrixXd e = (-kq * u).exp();
                    return -(p.rho1().transpose() * e)(j);
                },
                0.0, tau, 1e-14);
            CHECK(b(j) == doctest::Approx(q).epsilon(2e-12));
        }
    };
    check(ModelParams::afns3(1.0, Vector3d(0.005, 0.006, 0.009), Vector3d(0.1, 0.5, 2.4),
                             Vector3d(0.017, -0.004, -0.001)),
          1.0);
    check(ref_afns3(), 2.5);
    check(ModelParams::afns2(0.7, Vector2d(0.004, 0.007), Vector2d(0.2, 0.9),
                             Vector2d(0.01, -0.002)),
          1.75);
    check(ModelParams::vasicek(0.4, 0.02, 0.01, 0.3, 0.02), 3.0);
}

TEST_CASE("loading_a equals half the quadrature variance of int r") {
    auto check = [](const ModelParams& p, double tau, double rel) {
        const MatrixXd ss = p.sigma() * p.sigma().transpose();
        const double q = oracles::integrate(
            [&](double s) {
                const VectorXd b = loading_b(p, tau - s);
                return (b.transpose() * ss * b)(0);
            },
            0.0, tau, 1e-16);
        CHECK(loading_a(p, tau) == doctest::Approx(0.5 * q).epsilon(rel));
    };

    SUBCASE("reference parameters at tau = 1, 1e-12 relative") {
        check(ref_afns3(), 1.0, 1e-12);
    }
    SUBCASE("2A equals quadrature of B' Sigma Sigma' B across a grid, 1e-10 relative") {
        for (double lam : {0.25, 1.0, 2.0284, 4.0})
            for (double tau : {1.0 / 360, 0.1, 0.5, 2.0, 10.0})
                check(ModelParams::afns3(lam, Vector3d(0.0054, 0.0062, 0.0088),
                                         Vector3d(0.1, 0.5, 2.4), Vector3d::Zero()),
                      tau, 1e-10);
        for (double tau : {0.05, 1.0, 7.5})
            check(ModelParams::afns2(1.3, Vector2d(0.004, 0.007), Vector2d(0.2, 0.9),
                                     Vector2d::Zero()),
                  tau, 1e-10);
        for (double tau : {0.3, 5.0})
            check(ModelParams::vasicek(0.25, 0.015, 0.008, 0.3, 0.02), tau, 1e-10);
    }
    SUBCASE("trivial values") {
        auto p0 = ModelParams::afns3(2.0, Vector3d(0, 0, 0), Vector3d(0.1, 0.5, 2.4),
                                     Vector3d::Zero());
        CHECK(loading_a(p0, 3.0) == 0.0);
        CHECK(loading_a(ref_afns3(), 0.0) == 0.0);
    }
}

TEST_CASE("q_transition against a matrix-exponential oracle") {
    auto p = ref_afns3();

    SUBCASE("transition matches scaling-and-squaring expm at dt = 0.5") {
        const MatrixXd oracle = (-kq_matrix(p) * 0.5).exp();
        CHECK((q_transition_matrix(p, 0.5) - oracle).cwiseAbs().maxCoeff() <= 1e-12);
    }
    SUBCASE("dt -> 0 limits") {
        auto [phi, cov] = q_transition(p, 1e-10);
        CHECK((phi - MatrixXd::Identity(3, 3)).cwiseAbs().maxCoeff() <= 1e-8);
        CHECK(cov.cwiseAbs().maxCoeff() <= 1e-8);
    }
    SUBCASE("cov(1,1) is sigma11^2 dt exactly") {
        const double dt = 0.37;
        CHECK(q_transition_cov(p, dt)(0, 0) == 0.0054 * 0.0054 * dt);
    }
    SUBCASE("cov matches quadrature of e^{-K^Q u} SS' e^{-K^Q' u}") {
        const MatrixXd kq = kq_matrix(p);
        const MatrixXd ss = p.sigma() * p.sigma().transpose();
        for (double dt : {1.0 / 360, 0.5, 2.0}) {
            const MatrixXd v = q_transition_cov(p, dt);
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j) {
                    const double q = oracles::integrate(
                        [&](double u) {
                            const MatrixXd e = (-kq * u).exp();
                            return (e * ss * e.transpose())(i, j);
                        },
                        0.0, dt, 1e-16);
                    CHECK(v(i, j) == doctest::Approx(q).epsilon(1e-10));
                }
        }
    }
    SUBCASE("cov symmetric PSD across dt grid") {
        for (double dt : {1.0 / 360, 1.0 / 12, 1.0, 10.0}) {
            const MatrixXd v = q_transition_cov(p, dt);
            CHECK((v - v.transpose()).cwiseAbs().maxCoeff() <= 1e-18);
            Eigen::SelfAdjointEigenSolver<MatrixXd> es(v);
            CHECK(es.eigenvalues().minCoeff() >= -1e-18);
        }
    }
}

TEST_CASE("loading recursion B(t,T) = B(t,S) + transition(S-t)' B(S,T)") {
    for (const auto& p : {ref_afns3(),
                          ModelParams::afns2(0.9, Vector2d(0.005, 0.006), Vector2d(0.2, 0.8),
                                             Vector2d::Zero()),
                          ModelParams::vasicek(0.6, 0.01, 0.007, 0.3, 0.02)}) {
        for (double s : {0.1, 0.75, 2.0})
            for (double rest : {0.05, 1.0, 4.0}) {
                const VectorXd lhs = loading_b(p, s + rest);
                const VectorXd rhs =
                    loading_b(p, s) + q_transition_matrix(p, s).transpose() * loading_b(p, rest);
                CHECK((lhs - rhs).cwiseAbs().maxCoeff() <= 1e-12);
            }
    }
}

TEST_CASE("integrated_rate_moments") {
    auto p = ref_afns3();

    SUBCASE("zero state has zero mean") {
        CHECK(integrated_rate_moments(p, Vector3d::Zero(), 1.7).mean == 0.0);
    }
    SUBCASE("var is 2 loading_a by definition") {
        const auto m = integrated_rate_moments(p, Vector3d(0.02, -0.01, 0.005), 0.8);
        CHECK(m.var == 2.0 * loading_a(p, 0.8));
    }
    SUBCASE("shadow variant rejected") {
        auto sp = ref_afns3().as_shadow();
        CHECK_THROWS_AS(integrated_rate_moments(sp, Vector3d::Zero(), 1.0), std::logic_error);
    }
    SUBCASE("mean and variance agree with Euler Monte Carlo within 3 s.e.") {
        // Independent straight-line Euler simulation of the Q-dynamics.
        const double tau = 0.5, dt = 1.0 / 1200;
        const int steps = static_cast<int>(tau * 1200 + 0.5), npaths = 20000;
        const Vector3d x0(0.02, -0.004, 0.006);
        const double lam = p.lambda();
        const Vector3d sd = p.sigma_diag();
        std::mt19937_64 rng(20240915);
        std::normal_distribution<double> z;
        std::vector<double> integrals(npaths);
        for (int n = 0; n < npaths; ++n) {
            Vector3d x = x0;
            double acc = 0.0;
            for (int k = 0; k < steps; ++k) {
                const double r0 = x(0) + x(1);
                const Vector3d drift(0.0, -lam * (x(1) - x(2)), -lam * x(2));
                x += drift * dt + std::sqrt(dt) * Vector3d(sd(0) * z(rng), sd(1) * z(rng),
                                                           sd(2) * z(rng));
                acc += 0.5 * (r0 + x(0) + x(1)) * dt;  // trapezoid
            }
            integrals[n] = acc;
        }
        const auto mc = oracles::mean_var(integrals);
        const auto m = integrated_rate_moments(p, x0, tau);
        CHECK(std::abs(m.mean - mc.mean) <= 3.0 * mc.se);
        // s.e. of a sample variance ~ var * sqrt(2/(n-1))
        const double var_se = mc.var * std::sqrt(2.0 / (npaths - 1));
        CHECK(std::abs(m.var - mc.var) <= 3.0 * var_se + 1e-2 * m.var);
    }
}

TEST_CASE("short_rate") {
    CHECK(short_rate(ref_afns3(), Vector3d(0.02, -0.005, 0.01)) == doctest::Approx(0.015));
    auto sp = ref_afns3().as_shadow();
    CHECK(short_rate(sp, Vector3d(-0.01, 0.0, 0.0)) == 0.0);
    CHECK(short_rate(ModelParams::vasicek(0.3, 0.02, 0.01, 0.3, 0.02),
                     VectorXd::Constant(1, 0.03)) == doctest::Approx(0.03));
}

TEST_CASE("zcb_price") {
    auto p = ref_afns3();

    SUBCASE("tau = 0 prices at par") {
        CHECK(zcb_price(p, Vector3d(0.02, -0.004, 0.001), 0.0) == 1.0);
    }
    SUBCASE("deterministic level-only short rate discounts exponentially") {
        auto p0 = ModelParams::afns3(2.0, Vector3d(0, 0, 0), Vector3d(0.1, 0.5, 2.4),
                                     Vector3d::Zero());
        const double level = 0.0175;
        for (double tau : {0.25, 1.0, 5.0})
            CHECK(zcb_price(p0, Vector3d(level, 0, 0), tau) ==
                  doctest::Approx(std::exp(-level * tau)).epsilon(1e-14));
    }
    SUBCASE("decreasing in tau along a nonnegative deterministic path") {
        auto p0 = ModelParams::afns3(1.5, Vector3d(0, 0, 0), Vector3d(0.1, 0.5, 2.4),
                                     Vector3d::Zero());
        const Vector3d x(0.02, 0.005, 0.003);  // positive short-rate path
        double prev = 1.0;
        for (double tau = 0.1; tau <= 10.0; tau += 0.1) {
            const double v = zcb_price(p0, x, tau);
            CHECK(v < prev);
            prev = v;
        }
    }
}

TEST_CASE("one-factor loadings converge to the level loading as kappa_q -> 0") {
    auto p = ModelParams::vasicek(1e-8, 0.0, 0.01, 0.3, 0.02);
    for (double tau : {0.1, 1.0, 5.0})
        CHECK(std::abs(loading_b(p, tau)(0) - (-tau)) <= 1e-6);
}

TEST_CASE("parameter restrictions are enforced") {
    CHECK_THROWS_AS(ModelParams::afns3(-1.0, Vector3d(0.005, 0.006, 0.009),
                                       Vector3d(0.1, 0.5, 2.4), Vector3d::Zero()),
                    std::invalid_argument);
    CHECK_THROWS_AS(ModelParams::afns3(2.0, Vector3d(0.005, -0.006, 0.009),
                                       Vector3d(0.1, 0.5, 2.4), Vector3d::Zero()),
                    std::invalid_argument);
    CHECK_THROWS_AS(ModelParams::afns3(2.0, Vector3d(0.005, 0.006, 0.009),
                                       Vector3d(0.1, -0.5, 2.4), Vector3d::Zero()),
                    std::invalid_argument);
    CHECK_THROWS_AS(ModelParams::vasicek(-0.1, 0.02, 0.01, 0.3, 0.02), std::invalid_argument);
    // rho1 per variant
    CHECK(ref_afns3().rho1() == Vector3d(1, 1, 0));
    CHECK(ModelParams::afns2(1.0, Vector2d(0.004, 0.005), Vector2d(0.2, 0.8),
                             Vector2d::Zero()).rho1() == Vector2d(1, 1));
}
