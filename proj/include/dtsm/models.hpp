#pragma once

#include <Eigen/Dense>
#include <stdexcept>
#include <string>

#include "dtsm/date.hpp"

namespace dtsm {

enum class Variant { Vasicek, Afns2, Afns3, ShadowAfns3 };

std::string to_string(Variant v);
Variant variant_from_string(const std::string& s);

struct ModelSpec {
    Variant variant = Variant::Afns3;
    int n_factors = 3;

    static ModelSpec make(Variant v);
    bool is_gaussian() const { return variant != Variant::ShadowAfns3; }
};

/// Latent factor values at a date.
struct StateVector {
    Eigen::VectorXd values;
    Date as_of;
};

struct GaussianMoments {
    Eigen::VectorXd mean;
    Eigen::MatrixXd cov;  // symmetric PSD

    void validate() const;
};

/// Full parameter set for one model variant.
///
/// Risk-neutral side: the AFNS variants fix theta_q = 0, rho0 = 0 and
/// rho1 = (1,1,0) / (1,1), leaving only the decay lambda free; the
/// one-factor model has a free mean-reversion kappa_q >= 0 and free
/// theta_q with rho1 = 1. Physical side: diagonal K^P (positive) and
/// theta^P. Sigma is diagonal with positive entries. The diagonal
/// matrices are stored dense NxN so that downstream linear algebra is
/// uniform across variants; the constructor enforces the restrictions.
class ModelParams {
public:
    static ModelParams afns3(double lambda, const Eigen::Vector3d& sigma,
                             const Eigen::Vector3d& kappa_p, const Eigen::Vector3d& theta_p);
    static ModelParams shadow_afns3(double lambda, const Eigen::Vector3d& sigma,
                                    const Eigen::Vector3d& kappa_p,
                                    const Eigen::Vector3d& theta_p);
    static ModelParams afns2(double lambda, const Eigen::Vector2d& sigma,
                             const Eigen::Vector2d& kappa_p, const Eigen::Vector2d& theta_p);
    static ModelParams vasicek(double kappa_q, double theta_q, double sigma, double kappa_p,
                               double theta_p);

    const ModelSpec& spec() const { return spec_; }
    int n() const { return spec_.n_factors; }

    /// Q-measure decay: lambda for AFNS variants, kappa_q for Vasicek.
    double decay() const { return decay_; }
    double lambda() const;   // AFNS variants only
    double kappa_q() const;  // Vasicek only

    const Eigen::MatrixXd& sigma() const { return sigma_; }
    const Eigen::MatrixXd& kappa_p() const { return kappa_p_; }
    const Eigen::VectorXd& theta_p() const { return theta_p_; }
    const Eigen::VectorXd& theta_q() const { return theta_q_; }
    const Eigen::VectorXd& rho1() const { return rho1_; }
    double rho0() const { return 0.0; }

    Eigen::VectorXd sigma_diag() const { return sigma_.diagonal(); }
    Eigen::VectorXd kappa_p_diag() const { return kappa_p_.diagonal(); }

    /// Same risk-neutral and physical parameters under the Gaussian spec
    /// (used to compare shadow against its unconstrained counterpart).
    ModelParams as_gaussian() const;
    ModelParams as_shadow() const;

private:
    ModelParams(ModelSpec spec, double decay, Eigen::VectorXd sigma, Eigen::VectorXd kappa_p,
                Eigen::VectorXd theta_p, Eigen::VectorXd theta_q);

    ModelSpec spec_;
    double decay_;
    Eigen::MatrixXd sigma_;    // diagonal, stored dense
    Eigen::MatrixXd kappa_p_;  // diagonal, stored dense
    Eigen::VectorXd theta_p_;
    Eigen::VectorXd theta_q_;  // zero for AFNS variants
    Eigen::VectorXd rho1_;
};

struct QTransition {
    Eigen::MatrixXd transition;  // e^{-K^Q dt}
    Eigen::MatrixXd cov;         // Var[X_{t+dt} | X_t] under Q
};

struct RateMoments {
    double mean = 0.0;
    double var = 0.0;
};

/// Bond-exponent loading B(tau) such that E[int_t^{t+tau} r] = m(tau) - B'X_t.
Eigen::VectorXd loading_b(const ModelParams& p, double tau);

/// A(tau) = 0.5 * Var[int_t^{t+tau} r_s ds | F_t].
double loading_a(const ModelParams& p, double tau);

/// Deterministic drift part m(tau) of E[int r]; zero for the AFNS variants,
/// theta_q * (tau - (1-e^{-kappa tau})/kappa) for the one-factor model.
double drift_integral(const ModelParams& p, double tau);

QTransition q_transition(const ModelParams& p, double dt);
Eigen::MatrixXd q_transition_matrix(const ModelParams& p, double dt);
Eigen::MatrixXd q_transition_cov(const ModelParams& p, double dt);

/// E[X_{t+dt} | X_t] under Q.
Eigen::VectorXd q_conditional_mean(const ModelParams& p, const Eigen::VectorXd& state, double dt);

/// Mean and variance of int_t^{t+tau} r_s ds for the Gaussian variants.
RateMoments integrated_rate_moments(const ModelParams& p, const Eigen::VectorXd& state,
                                    double tau);

/// rho0 + rho1'X for Gaussian variants, max(rho1'X, 0) for the shadow model.
double short_rate(const ModelParams& p, const Eigen::VectorXd& state);

/// Zero-coupon bond price exp(-E[int r] + 0.5 Var[int r]) for Gaussian variants.
/// The shadow-model bond lives in shadow.hpp (needs the truncated moments).
double zcb_price(const ModelParams& p, const Eigen::VectorXd& state, double tau);

namespace detail {
// Stable evaluations of the exponential kernels appearing in the closed
// forms. Each switches to its Taylor series for small arguments.
double g1(double x);   // (1 - e^-x)/x, g1(0) = 1
double g2(double x);   // e^-x - g1(x)
double h2(double x);   // slope variance bracket: A_22 = sigma^2 tau h2(x)/lambda^2
double h3(double x);   // curvature variance bracket: A_33 = sigma^2 tau h3(x)/lambda^2
double w22(double x);  // [1 - e^{-2x}(2x^2+2x+1)]/(4x)
double w23(double x);  // [1 - e^{-2x}(2x+1)]/(4x)
}  // namespace detail

}  // namespace dtsm
