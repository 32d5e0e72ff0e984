#include "dtsm/models.hpp"

#include <cmath>

namespace dtsm {

std::string to_string(Variant v) {
    switch (v) {
        case Variant::Vasicek: return "vasicek";
        case Variant::Afns2: return "afns2";
        case Variant::Afns3: return "afns3";
        case Variant::ShadowAfns3: return "shadow";
    }
    return "?";
}

Variant variant_from_string(const std::string& s) {
    if (s == "vasicek") return Variant::Vasicek;
    if (s == "afns2") return Variant::Afns2;
    if (s == "afns3") return Variant::Afns3;
    if (s == "shadow" || s == "shadow_afns3") return Variant::ShadowAfns3;
    throw std::invalid_argument("unknown model variant '" + s + "'");
}

ModelSpec ModelSpec::make(Variant v) {
    switch (v) {
        case Variant::Vasicek: return {v, 1};
        case Variant::Afns2: return {v, 2};
        default: return {v, 3};
    }
}

void GaussianMoments::validate() const {
    if (mean.size() != cov.rows() || cov.rows() != cov.cols())
        throw std::invalid_argument("GaussianMoments: dimension mismatch");
    if ((cov - cov.transpose()).cwiseAbs().maxCoeff() > 1e-12)
        throw std::invalid_argument("GaussianMoments: covariance not symmetric");
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(cov);
    if (es.eigenvalues().minCoeff() < -1e-12)
        throw std::invalid_argument("GaussianMoments: covariance not PSD");
}

ModelParams::ModelParams(ModelSpec spec, double decay, Eigen::VectorXd sigma,
                         Eigen::VectorXd kappa_p, Eigen::VectorXd theta_p,
                         Eigen::VectorXd theta_q)
    : spec_(spec), decay_(decay), theta_p_(std::move(theta_p)), theta_q_(std::move(theta_q)) {
    const int n = spec_.n_factors;
    if (sigma.size() != n || kappa_p.size() != n || theta_p_.size() != n || theta_q_.size() != n)
        throw std::invalid_argument("ModelParams: parameter dimension != n_factors");
    if ((sigma.array() < 0.0).any())
        throw std::invalid_argument("ModelParams: sigma diagonal must be nonnegative");
    if ((kappa_p.array() <= 0.0).any())
        throw std::invalid_argument("ModelParams: K^P eigenvalues must be positive");
    if (spec_.variant == Variant::Vasicek) {
        if (decay_ < 0.0) throw std::invalid_argument("ModelParams: kappa_q must be >= 0");
    } else {
        if (decay_ <= 0.0) throw std::invalid_argument("ModelParams: lambda must be positive");
        if (theta_q_.cwiseAbs().maxCoeff() != 0.0)
            throw std::invalid_argument("ModelParams: theta_q fixed to zero for AFNS variants");
    }
    sigma_ = sigma.asDiagonal();
    kappa_p_ = kappa_p.asDiagonal();
    rho1_ = Eigen::VectorXd::Ones(n);
    if (n == 3) rho1_(2) = 0.0;  // level + slope only
}

ModelParams ModelParams::afns3(double lambda, const Eigen::Vector3d& sigma,
                               const Eigen::Vector3d& kappa_p, const Eigen::Vector3d& theta_p) {
    return ModelParams(ModelSpec::make(Variant::Afns3), lambda, sigma, kappa_p, theta_p,
                       Eigen::Vector3d::Zero());
}

ModelParams ModelParams::shadow_afns3(double lambda, const Eigen::Vector3d& sigma,
                                      const Eigen::Vector3d& kappa_p,
                                      const Eigen::Vector3d& theta_p) {
    return ModelParams(ModelSpec::make(Variant::ShadowAfns3), lambda, sigma, kappa_p, theta_p,
                       Eigen::Vector3d::Zero());
}

ModelParams ModelParams::afns2(double lambda, const Eigen::Vector2d& sigma,
                               const Eigen::Vector2d& kappa_p, const Eigen::Vector2d& theta_p) {
    return ModelParams(ModelSpec::make(Variant::Afns2), lambda, sigma, kappa_p, theta_p,
                       Eigen::Vector2d::Zero());
}

ModelParams ModelParams::vasicek(double kappa_q, double theta_q, double sigma, double kappa_p,
                                 double theta_p) {
    Eigen::VectorXd s(1), kp(1), tp(1), tq(1);
    s << sigma; kp << kappa_p; tp << theta_p; tq << theta_q;
    return ModelParams(ModelSpec::make(Variant::Vasicek), kappa_q, s, kp, tp, tq);
}

double ModelParams::lambda() const {
    if (spec_.variant == Variant::Vasicek)
        throw std::logic_error("lambda() on the one-factor model; use kappa_q()");
    return decay_;
}

double ModelParams::kappa_q() const {
    if (spec_.variant != Variant::Vasicek)
        throw std::logic_error("kappa_q() is specific to the one-factor model");
    return decay_;
}

ModelParams ModelParams::as_gaussian() const {
    ModelParams p = *this;
    if (spec_.variant == Variant::ShadowAfns3) p.spec_ = ModelSpec::make(Variant::Afns3);
    return p;
}

ModelParams ModelParams::as_shadow() const {
    if (spec_.n_factors != 3)
        throw std::logic_error("shadow extension is defined for the three-factor model");
    ModelParams p = *this;
    p.spec_ = ModelSpec::make(Variant::ShadowAfns3);
    return p;
}

namespace detail {

double g1(double x) {
    if (x == 0.0) return 1.0;
    return -std::expm1(-x) / x;
}

double g2(double x) {
    if (std::abs(x) < 0.1) {
        // e^-x - (1-e^-x)/x, series about 0
        return x * (-1.0 / 2 + x * (1.0 / 3 + x * (-1.0 / 8 + x * (1.0 / 30 +
               x * (-1.0 / 144 + x * (1.0 / 840 + x * (-1.0 / 5760 + x / 45360)))))));
    }
    return std::exp(-x) - g1(x);
}

double h2(double x) {
    if (x < 1.0) {
        static constexpr double c[] = {
            1.6666666666666666e-01, -1.2500000000000000e-01, 5.8333333333333334e-02,
            -2.0833333333333332e-02, 6.1507936507936506e-03, -1.5625000000000001e-03,
            3.4997795414462080e-04, -7.0271164021164020e-05, 1.2801627384960718e-05,
            -2.1356922398589067e-06, 3.2872862733973846e-07, -4.6972703222703221e-08,
            6.2637918127336114e-09, -7.8302177136502531e-10, 9.2123019853139678e-11,
            -1.0236047286862984e-11, 1.0774868824102976e-12, -1.0774909927279209e-13,
            1.0261838551302214e-14, -9.3289530343388597e-16};
        double acc = 0.0;
        for (int k = 19; k >= 0; --k) acc = c[k] + x * acc;
        return x * x * acc;
    }
    return 0.5 - g1(x) + 0.5 * g1(2.0 * x);
}

double h3(double x) {
    if (x < 1.0) {
        static constexpr double c[] = {
            2.5000000000000001e-02, -2.7777777777777776e-02, 1.6865079365079364e-02,
            -7.2916666666666668e-03, 2.4884259259259261e-03, -7.0767195767195768e-04,
            1.7338564213564213e-04, -3.7432025279247503e-05, 7.2373292859403967e-06,
            -1.2687103460912984e-06, 2.0360802850882217e-07, -3.0148847423152979e-08,
            4.1457045808265462e-09, -5.3228507997761373e-10, 6.4111098382009067e-11,
            -7.2730993441291448e-12, 7.7990158932836930e-13, -7.9296194208189926e-14};
        double acc = 0.0;
        for (int k = 17; k >= 0; --k) acc = c[k] + x * acc;
        return x * x * x * x * acc;
    }
    const double e1 = std::exp(-x), e2 = std::exp(-2.0 * x);
    return 0.5 + e1 - 0.25 * x * e2 - 0.75 * e2 - 2.0 * g1(x) + 1.25 * g1(2.0 * x);
}

double w22(double x) {
    if (x < 0.05) {
        static constexpr double c[] = {
            3.3333333333333331e-01, -5.0000000000000000e-01, 4.0000000000000002e-01,
            -2.2222222222222221e-01, 9.5238095238095233e-02, -3.3333333333333333e-02,
            9.8765432098765430e-03, -2.5396825396825397e-03, 5.7720057720057720e-04,
            -1.1757789535567314e-04, 2.1706688373355041e-05, -3.6647655695274741e-06};
        double acc = 0.0;
        for (int k = 11; k >= 0; --k) acc = c[k] + x * acc;
        return x * x * acc;
    }
    return (1.0 - std::exp(-2.0 * x) * (2.0 * x * x + 2.0 * x + 1.0)) / (4.0 * x);
}

double w23(double x) {
    if (x < 0.05) {
        static constexpr double c[] = {
            5.0000000000000000e-01, -6.6666666666666663e-01, 5.0000000000000000e-01,
            -2.6666666666666666e-01, 1.1111111111111110e-01, -3.8095238095238099e-02,
            1.1111111111111112e-02, -2.8218694885361554e-03, 6.3492063492063492e-04,
            -1.2826679493346159e-04, 2.3515579071134628e-05, -3.9466706133372799e-06};
        double acc = 0.0;
        for (int k = 11; k >= 0; --k) acc = c[k] + x * acc;
        return x * acc;
    }
    return (1.0 - std::exp(-2.0 * x) * (2.0 * x + 1.0)) / (4.0 * x);
}

}  // namespace detail

using detail::g1;
using detail::g2;
using detail::h2;
using detail::h3;
using detail::w22;
using detail::w23;

Eigen::VectorXd loading_b(const ModelParams& p, double tau) {
    if (tau < 0.0) throw std::domain_error("loading_b: negative tau");
    const int n = p.n();
    Eigen::VectorXd b(n);
    const double x = p.decay() * tau;
    switch (p.spec().variant) {
        case Variant::Vasicek:
            b(0) = -tau * g1(x);
            break;
        case Variant::Afns2:
            b(0) = -tau;
            b(1) = -tau * g1(x);
            break;
        default:
            b(0) = -tau;
            b(1) = -tau * g1(x);
            b(2) = tau * g2(x);
    }
    return b;
}

double loading_a(const ModelParams& p, double tau) {
    if (tau < 0.0) throw std::domain_error("loading_a: negative tau");
    if (tau == 0.0) return 0.0;
    const Eigen::VectorXd s = p.sigma_diag();
    const double lam = p.decay();
    const double x = lam * tau;
    switch (p.spec().variant) {
        case Variant::Vasicek:
            if (lam == 0.0) return s(0) * s(0) * tau * tau * tau / 6.0;
            return s(0) * s(0) * tau * h2(x) / (lam * lam);
        case Variant::Afns2:
            return s(0) * s(0) * tau * tau * tau / 6.0 + s(1) * s(1) * tau * h2(x) / (lam * lam);
        default:
            return s(0) * s(0) * tau * tau * tau / 6.0 + s(1) * s(1) * tau * h2(x) / (lam * lam) +
                   s(2) * s(2) * tau * h3(x) / (lam * lam);
    }
}

double drift_integral(const ModelParams& p, double tau) {
    if (p.spec().variant != Variant::Vasicek) return 0.0;
    const double kq = p.kappa_q();
    const double x = kq * tau;
    // theta_q * (tau - (1-e^{-x})/kq) = theta_q * tau * (1 - g1(x))
    return p.theta_q()(0) * tau * (1.0 - g1(x));
}

Eigen::MatrixXd q_transition_matrix(const ModelParams& p, double dt) {
    const int n = p.n();
    Eigen::MatrixXd m = Eigen::MatrixXd::Identity(n, n);
    const double x = p.decay() * dt;
    const double e = std::exp(-x);
    switch (p.spec().variant) {
        case Variant::Vasicek:
            m(0, 0) = e;
            break;
        case Variant::Afns2:
            m(1, 1) = e;
            break;
        default:
            m(1, 1) = e;
            m(1, 2) = x * e;
            m(2, 2) = e;
    }
    return m;
}

Eigen::MatrixXd q_transition_cov(const ModelParams& p, double dt) {
    if (dt < 0.0) throw std::domain_error("q_transition_cov: negative dt");
    const int n = p.n();
    const Eigen::VectorXd s = p.sigma_diag();
    const double lam = p.decay();
    const double x = lam * dt;
    Eigen::MatrixXd v = Eigen::MatrixXd::Zero(n, n);
    switch (p.spec().variant) {
        case Variant::Vasicek:
            v(0, 0) = s(0) * s(0) * dt * g1(2.0 * x);
            break;
        case Variant::Afns2:
            v(0, 0) = s(0) * s(0) * dt;
            v(1, 1) = s(1) * s(1) * dt * g1(2.0 * x);
            break;
        default:
            v(0, 0) = s(0) * s(0) * dt;
            v(1, 1) = s(1) * s(1) * dt * g1(2.0 * x) + s(2) * s(2) * dt * w22(x);
            v(1, 2) = v(2, 1) = s(2) * s(2) * dt * w23(x);
            v(2, 2) = s(2) * s(2) * dt * g1(2.0 * x);
    }
    return v;
}

QTransition q_transition(const ModelParams& p, double dt) {
    if (dt <= 0.0) throw std::domain_error("q_transition: dt must be positive");
    return {q_transition_matrix(p, dt), q_transition_cov(p, dt)};
}

Eigen::VectorXd q_conditional_mean(const ModelParams& p, const Eigen::VectorXd& state,
                                   double dt) {
    const Eigen::MatrixXd phi = q_transition_matrix(p, dt);
    if (p.spec().variant == Variant::Vasicek)
        return phi * state + (Eigen::MatrixXd::Identity(1, 1) - phi) * p.theta_q();
    return phi * state;  // theta_q = 0
}

RateMoments integrated_rate_moments(const ModelParams& p, const Eigen::VectorXd& state,
                                    double tau) {
    if (!p.spec().is_gaussian())
        throw std::logic_error("integrated_rate_moments: unsupported for the shadow model");
    RateMoments m;
    m.mean = drift_integral(p, tau) - loading_b(p, tau).dot(state);
    m.var = 2.0 * loading_a(p, tau);
    return m;
}

double short_rate(const ModelParams& p, const Eigen::VectorXd& state) {
    const double s = p.rho1().dot(state);
    if (p.spec().variant == Variant::ShadowAfns3) return std::max(s, 0.0);
    return s;
}

double zcb_price(const ModelParams& p, const Eigen::VectorXd& state, double tau) {
    if (tau < 0.0) throw std::domain_error("zcb_price: negative tau");
    if (!p.spec().is_gaussian())
        throw std::logic_error("zcb_price: use shadow_zcb_price for the shadow model");
    const RateMoments m = integrated_rate_moments(p, state, tau);
    return std::exp(-m.mean + 0.5 * m.var);
}

}  // namespace dtsm
