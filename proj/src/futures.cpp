#include "dtsm/futures.hpp"

#include <algorithm>
#include <cmath>

namespace dtsm {

std::string to_string(ContractKind k) {
    return k == ContractKind::OneMonth ? "1M" : "3M";
}

void FuturesContract::validate() const {
    if (accrual_end <= accrual_start)
        throw std::invalid_argument("FuturesContract " + contract_id + ": empty accrual window");
    if (fixing_dates.size() != day_weights.size() || fixing_dates.empty())
        throw std::invalid_argument("FuturesContract " + contract_id + ": bad fixing schedule");
    for (std::size_t i = 0; i < fixing_dates.size(); ++i) {
        if (fixing_dates[i] < accrual_start || fixing_dates[i] >= accrual_end)
            throw std::invalid_argument("FuturesContract " + contract_id +
                                        ": fixing outside accrual window");
        if (i > 0 && fixing_dates[i] <= fixing_dates[i - 1])
            throw std::invalid_argument("FuturesContract " + contract_id +
                                        ": fixing dates not strictly increasing");
        if (day_weights[i] <= 0.0)
            throw std::invalid_argument("FuturesContract " + contract_id +
                                        ": nonpositive day weight");
    }
    double sum = 0.0;
    for (double d : day_weights) sum += d;
    if (std::abs(sum - accrual_fraction()) > 1e-12)
        throw std::invalid_argument("FuturesContract " + contract_id +
                                    ": day weights do not cover the accrual window");
}

AccruedFixings::AccruedFixings(std::vector<std::pair<Date, double>> fixings)
    : fixings_(std::move(fixings)) {
    std::sort(fixings_.begin(), fixings_.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
}

std::optional<double> AccruedFixings::rate(const Date& d) const {
    auto it = std::lower_bound(fixings_.begin(), fixings_.end(), d,
                               [](const auto& f, const Date& x) { return f.first < x; });
    if (it != fixings_.end() && it->first == d) return it->second;
    return std::nullopt;
}

FuturesQuote FuturesQuote::from_price(Date d, std::string id, double price) {
    FuturesQuote q{d, std::move(id), (100.0 - price) / 100.0, price};
    q.validate();
    return q;
}

FuturesQuote FuturesQuote::from_rate(Date d, std::string id, double rate) {
    FuturesQuote q{d, std::move(id), rate, 100.0 * (1.0 - rate)};
    q.validate();
    return q;
}

void FuturesQuote::validate() const {
    if (std::abs(price + 100.0 * rate - 100.0) > 1e-10)
        throw std::invalid_argument("FuturesQuote " + contract_id +
                                    ": price and rate are inconsistent");
}

namespace {

void require_gaussian(const ModelParams& p, const char* where) {
    if (!p.spec().is_gaussian())
        throw std::logic_error(std::string(where) + ": Gaussian variants only");
}

}  // namespace

double price_1m_pre(const ModelParams& p, const Eigen::VectorXd& state, double tau_s,
                    double tau_t) {
    const double delta = tau_t - tau_s;
    return ((loading_b(p, tau_s) - loading_b(p, tau_t)).dot(state) +
            drift_integral(p, tau_t) - drift_integral(p, tau_s)) / delta;
}

double price_1m_mid(const ModelParams& p, const Eigen::VectorXd& state, double tau_t,
                    double accrual, double realized_avg) {
    return realized_avg +
           (drift_integral(p, tau_t) - loading_b(p, tau_t).dot(state)) / accrual;
}

double price_3m_pre(const ModelParams& p, const Eigen::VectorXd& state, double tau_s,
                    double tau_t) {
    const double delta = tau_t - tau_s;
    const Eigen::VectorXd b = loading_b(p, delta);
    const Eigen::VectorXd mu = q_conditional_mean(p, state, tau_s);
    const Eigen::MatrixXd v = q_transition_cov(p, tau_s);
    const double expo = drift_integral(p, delta) + loading_a(p, delta) - b.dot(mu) +
                        0.5 * b.dot(v * b);
    return std::expm1(expo) / delta;
}

double price_3m_mid(const ModelParams& p, const Eigen::VectorXd& state, double tau_t,
                    double accrual, double realized_prod) {
    const double expo = drift_integral(p, tau_t) + loading_a(p, tau_t) -
                        loading_b(p, tau_t).dot(state);
    return (realized_prod * std::exp(expo) - 1.0) / accrual;
}

Eigen::VectorXd grad_price_1m_pre(const ModelParams& p, double tau_s, double tau_t) {
    return (loading_b(p, tau_s) - loading_b(p, tau_t)) / (tau_t - tau_s);
}

Eigen::VectorXd grad_price_1m_mid(const ModelParams& p, double tau_t, double accrual) {
    return -loading_b(p, tau_t) / accrual;
}

Eigen::VectorXd grad_price_3m_pre(const ModelParams& p, const Eigen::VectorXd& state,
                                  double tau_s, double tau_t) {
    const double delta = tau_t - tau_s;
    const double f = price_3m_pre(p, state, tau_s, tau_t);
    const Eigen::VectorXd b = loading_b(p, delta);
    return -(f + 1.0 / delta) * (q_transition_matrix(p, tau_s).transpose() * b);
}

Eigen::VectorXd grad_price_3m_mid(const ModelParams& p, const Eigen::VectorXd& state,
                                  double tau_t, double accrual, double realized_prod) {
    const double f = price_3m_mid(p, state, tau_t, accrual, realized_prod);
    return -(f + 1.0 / accrual) * loading_b(p, tau_t);
}

double realized_average(const FuturesContract& c, const Date& t, const AccruedFixings& accrued) {
    const std::size_t n_total = c.fixing_dates.size();
    double sum = 0.0;
    std::string missing;
    for (std::size_t i = 0; i < n_total && c.fixing_dates[i] < t; ++i) {
        if (auto r = accrued.rate(c.fixing_dates[i])) {
            sum += *r;
        } else {
            if (!missing.empty()) missing += ", ";
            missing += c.fixing_dates[i].to_string();
        }
    }
    if (!missing.empty())
        throw DataError("contract " + c.contract_id + ": missing fixings for " + missing);
    return sum / static_cast<double>(n_total);
}

double realized_product(const FuturesContract& c, const Date& t, const AccruedFixings& accrued) {
    double prod = 1.0;
    std::string missing;
    for (std::size_t i = 0; i < c.fixing_dates.size() && c.fixing_dates[i] < t; ++i) {
        if (auto r = accrued.rate(c.fixing_dates[i])) {
            prod *= 1.0 + c.day_weights[i] * (*r);
        } else {
            if (!missing.empty()) missing += ", ";
            missing += c.fixing_dates[i].to_string();
        }
    }
    if (!missing.empty())
        throw DataError("contract " + c.contract_id + ": missing fixings for " + missing);
    return prod;
}

double price_1m(const ModelParams& p, const Eigen::VectorXd& state, const FuturesContract& c,
                const Date& t, const AccruedFixings& accrued) {
    require_gaussian(p, "price_1m");
    if (t > c.accrual_end) throw std::invalid_argument("price_1m: valuation after settlement");
    if (t <= c.accrual_start)
        return price_1m_pre(p, state, act360(t, c.accrual_start), act360(t, c.accrual_end));
    return price_1m_mid(p, state, act360(t, c.accrual_end), c.accrual_fraction(),
                        realized_average(c, t, accrued));
}

double price_3m(const ModelParams& p, const Eigen::VectorXd& state, const FuturesContract& c,
                const Date& t, const AccruedFixings& accrued) {
    require_gaussian(p, "price_3m");
    if (t > c.accrual_end) throw std::invalid_argument("price_3m: valuation after settlement");
    if (t <= c.accrual_start)
        return price_3m_pre(p, state, act360(t, c.accrual_start), act360(t, c.accrual_end));
    return price_3m_mid(p, state, act360(t, c.accrual_end), c.accrual_fraction(),
                        realized_product(c, t, accrued));
}

double price_1m_exact(const ModelParams& p, const Eigen::VectorXd& state,
                      const FuturesContract& c, const Date& t) {
    require_gaussian(p, "price_1m_exact");
    if (t > c.accrual_start)
        throw std::invalid_argument("price_1m_exact: requires valuation at or before accrual");
    const std::size_t n = c.fixing_dates.size();
    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double d = c.day_weights[i];
        const double tau_i = act360(t, c.fixing_dates[i]);
        const Eigen::VectorXd b = loading_b(p, d);
        const Eigen::VectorXd mu = q_conditional_mean(p, state, tau_i);
        const Eigen::MatrixXd v = q_transition_cov(p, tau_i);
        const double expo = -loading_a(p, d) + drift_integral(p, d) - b.dot(mu) +
                            0.5 * b.dot(v * b);
        sum += std::expm1(expo) / d;
    }
    return sum / static_cast<double>(n);
}

namespace {

// c * w^p * e^{a w} on a shifted interval; the factor loading components
// decompose into at most four such terms.
struct KernelTerm {
    double c;
    int p;
    double a;
};

using TermList = std::vector<KernelTerm>;

// -B-style bond volatility component (without sigma) for factor k as a
// function of w = tau - shift, maturing at remaining time rem0 - w.
TermList volatility_terms(Variant variant, int k, double lam, double rem0) {
    switch (variant) {
        case Variant::Vasicek:
            if (lam < 1e-8) return {{-rem0, 0, 0.0}, {1.0, 1, 0.0}};  // kappa -> 0 level limit
            return {{-1.0 / lam, 0, 0.0}, {std::exp(-lam * rem0) / lam, 0, lam}};
        case Variant::Afns2:
            if (k == 0) return {{-rem0, 0, 0.0}, {1.0, 1, 0.0}};
            return {{-1.0 / lam, 0, 0.0}, {std::exp(-lam * rem0) / lam, 0, lam}};
        default:
            if (k == 0) return {{-rem0, 0, 0.0}, {1.0, 1, 0.0}};
            if (k == 1) return {{-1.0 / lam, 0, 0.0}, {std::exp(-lam * rem0) / lam, 0, lam}};
            {
                const double e = std::exp(-lam * rem0);
                return {{rem0 * e, 0, lam}, {-e, 1, lam}, {-1.0 / lam, 0, 0.0},
                        {e / lam, 0, lam}};
            }
    }
}

// int_0^L w^p e^{a w} dw, a >= 0, p <= 4.
double integrate_kernel(int p, double a, double L) {
    if (a * L < 1e-8) {
        // short series in a
        double v = std::pow(L, p + 1) / (p + 1);
        v += a * std::pow(L, p + 2) / (p + 2);
        v += a * a * std::pow(L, p + 3) / (2.0 * (p + 3));
        return v;
    }
    const double eaL = std::exp(a * L);
    double j = std::expm1(a * L) / a;  // p = 0
    double lp = 1.0;
    for (int q = 1; q <= p; ++q) {
        lp *= L;
        j = (lp * eaL - q * j) / a;
    }
    return j;
}

double integrate_terms(const TermList& f, const TermList& g, double L, double sign) {
    double acc = 0.0;
    for (const auto& a : f)
        for (const auto& b : g)
            acc += sign * a.c * b.c * integrate_kernel(a.p + b.p, a.a + b.a, L);
    return acc;
}

}  // namespace

double gamma_log(const ModelParams& p, double s, double e, double u, double v) {
    if (e <= s) return 0.0;
    const double L = e - s;
    const Eigen::VectorXd sd = p.sigma_diag();
    const double lam = p.decay();
    double acc = 0.0;
    for (int k = 0; k < p.n(); ++k) {
        if (sd(k) == 0.0) continue;
        const TermList tv = volatility_terms(p.spec().variant, k, lam, v - s);
        const TermList tu = volatility_terms(p.spec().variant, k, lam, u - s);
        double part = integrate_terms(tv, tv, L, 1.0) + integrate_terms(tv, tu, L, -1.0);
        acc += sd(k) * sd(k) * part;
    }
    return acc;
}

double price_3m_exact(const ModelParams& p, const Eigen::VectorXd& state,
                      const FuturesContract& c, const Date& t) {
    require_gaussian(p, "price_3m_exact");
    if (t > c.accrual_start)
        throw std::invalid_argument("price_3m_exact: requires valuation at or before accrual");
    const double tau_s = act360(t, c.accrual_start);
    const double tau_t = act360(t, c.accrual_end);
    const double delta = tau_t - tau_s;

    // Compounding boundaries in years from t: S, interior fixing dates, T.
    std::vector<double> x;
    x.reserve(c.fixing_dates.size() + 2);
    x.push_back(tau_s);
    for (const Date& d : c.fixing_dates)
        if (d > c.accrual_start) x.push_back(act360(t, d));
    x.push_back(tau_t);

    double glog = 0.0;
    const std::size_t n = x.size() - 1;  // number of compounding periods
    for (std::size_t i = 1; i <= n; ++i) {
        const double lo = (i == 1) ? 0.0 : x[i - 2];
        glog += gamma_log(p, lo, x[i - 1], x[i - 1], x[n]);
    }
    const double fwd = zcb_price(p, state, tau_s) / zcb_price(p, state, tau_t);
    return (fwd * std::exp(glog) - 1.0) / delta;
}

}  // namespace dtsm
