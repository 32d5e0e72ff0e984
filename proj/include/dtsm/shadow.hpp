#pragma once

#include <Eigen/Dense>

#include "dtsm/futures.hpp"
#include "dtsm/models.hpp"
#include "dtsm/quadrature.hpp"

namespace dtsm {

/// Conditional first and second moments of the shadow short rate at a pair
/// of horizons (u, s), as seen from the conditioning time 0.
struct ShadowMomentInputs {
    double mu_u = 0, mu_s = 0;
    double sigma_u = 0, sigma_s = 0;  // conditional standard deviations
    double cov = 0;
    double corr = 0;  // chi = cov / (sigma_u sigma_s)
    double zeta_u = 0, zeta_s = 0;  // mu / sigma

    void validate() const;
};

/// E[s_{tau} | F_0] = L + e^{-lambda tau} S + lambda tau e^{-lambda tau} C.
double shadow_mean(const ModelParams& p, const Eigen::VectorXd& state, double tau);
/// Var[s_{tau} | F_0] under the diagonal-Sigma closed form.
double shadow_var(const ModelParams& p, double tau);
/// Cov[s_{tau_u}, s_{tau_s} | F_0].
double shadow_cov(const ModelParams& p, double tau_u, double tau_s);

ShadowMomentInputs shadow_pair(const ModelParams& p, const Eigen::VectorXd& state, double tau_u,
                               double tau_s);

/// E[max(X,0)] for X ~ N(mu, sigma^2); the sigma -> 0 limit is max(mu, 0).
double truncated_mean(double mu, double sigma);
/// E[max(X,0) max(Y,0)] for the bivariate pair described by `in`.
double truncated_pair_mean(const ShadowMomentInputs& in);

/// E[ int_a^b max(s_u, 0) du | F_0 ].
double integrated_positive_mean(const ModelParams& p, const Eigen::VectorXd& state, double a,
                                double b, const QuadratureScheme& quad = {});

/// E[ ( int_a^b max(s_u, 0) du )^2 | F_0 ].
double integrated_positive_second_moment(const ModelParams& p, const Eigen::VectorXd& state,
                                         double a, double b,
                                         const QuadratureScheme& quad = {});

// tau-based pricing kernels (two-term cumulant approximation).
double shadow_price_1m_pre(const ModelParams& p, const Eigen::VectorXd& state, double tau_s,
                           double tau_t, const QuadratureScheme& quad = {});
double shadow_price_1m_mid(const ModelParams& p, const Eigen::VectorXd& state, double tau_t,
                           double accrual, double realized_avg,
                           const QuadratureScheme& quad = {});
double shadow_price_3m_pre(const ModelParams& p, const Eigen::VectorXd& state, double tau_s,
                           double tau_t, const QuadratureScheme& quad = {});
double shadow_price_3m_mid(const ModelParams& p, const Eigen::VectorXd& state, double tau_t,
                           double accrual, double realized_prod,
                           const QuadratureScheme& quad = {});

double shadow_price_1m(const ModelParams& p, const Eigen::VectorXd& state,
                       const FuturesContract& c, const Date& t,
                       const AccruedFixings& accrued = {}, const QuadratureScheme& quad = {});
double shadow_price_3m(const ModelParams& p, const Eigen::VectorXd& state,
                       const FuturesContract& c, const Date& t,
                       const AccruedFixings& accrued = {}, const QuadratureScheme& quad = {});

/// Two-term cumulant bond price exp(-E[int r] + 0.5 Var[int r]).
double shadow_zcb_price(const ModelParams& p, const Eigen::VectorXd& state, double tau,
                        const QuadratureScheme& quad = {});

}  // namespace dtsm
