#pragma once

#include <Eigen/Dense>
#include <optional>
#include <string>
#include <vector>

#include "dtsm/date.hpp"
#include "dtsm/errors.hpp"
#include "dtsm/models.hpp"

namespace dtsm {

enum class ContractKind { OneMonth, ThreeMonth };

std::string to_string(ContractKind k);

/// A single SOFR/EFFR futures contract: accrual window plus the fixing
/// schedule. day_weights[i] is the ACT/360 fraction covered by fixing i
/// (3/360 on Fridays, more over holidays); they sum to the accrual
/// fraction of [S, T].
struct FuturesContract {
    ContractKind kind = ContractKind::OneMonth;
    Date accrual_start;               // S
    Date accrual_end;                 // T
    std::vector<Date> fixing_dates;   // increasing, inside [S, T)
    std::vector<double> day_weights;  // d_i
    std::string contract_id;

    void validate() const;
    double accrual_fraction() const { return act360(accrual_start, accrual_end); }
};

/// Fixings already published at the valuation date (decimal rates).
class AccruedFixings {
public:
    AccruedFixings() = default;
    explicit AccruedFixings(std::vector<std::pair<Date, double>> fixings);

    std::optional<double> rate(const Date& d) const;
    bool empty() const { return fixings_.empty(); }

private:
    std::vector<std::pair<Date, double>> fixings_;  // sorted by date
};

struct FuturesQuote {
    Date valuation_date;
    std::string contract_id;
    double rate = 0.0;   // decimal futures rate R
    double price = 100;  // 100 (1 - R)

    static FuturesQuote from_price(Date d, std::string id, double price);
    static FuturesQuote from_rate(Date d, std::string id, double rate);
    void validate() const;
};

// --- tau-based pricing kernels (valuation time = 0, times in years) ---
// These carry the closed forms; the date-based operations below wrap them.

/// One-month rate before accrual: E[int_S^T r] / (T-S).
double price_1m_pre(const ModelParams& p, const Eigen::VectorXd& state, double tau_s,
                    double tau_t);
/// One-month rate during accrual: realized average part + E[int_t^T r]/(T-S).
double price_1m_mid(const ModelParams& p, const Eigen::VectorXd& state, double tau_t,
                    double accrual, double realized_avg);
/// Three-month rate before accrual: (E[e^{int_S^T r}] - 1)/(T-S).
double price_3m_pre(const ModelParams& p, const Eigen::VectorXd& state, double tau_s,
                    double tau_t);
/// Three-month rate during accrual, with the compounded realized product.
double price_3m_mid(const ModelParams& p, const Eigen::VectorXd& state, double tau_t,
                    double accrual, double realized_prod);

Eigen::VectorXd grad_price_1m_pre(const ModelParams& p, double tau_s, double tau_t);
Eigen::VectorXd grad_price_1m_mid(const ModelParams& p, double tau_t, double accrual);
/// Gradients of the exponential-affine three-month rates at the given state.
Eigen::VectorXd grad_price_3m_pre(const ModelParams& p, const Eigen::VectorXd& state,
                                  double tau_s, double tau_t);
Eigen::VectorXd grad_price_3m_mid(const ModelParams& p, const Eigen::VectorXd& state,
                                  double tau_t, double accrual, double realized_prod);

// --- contract-level pricing ---

double price_1m(const ModelParams& p, const Eigen::VectorXd& state, const FuturesContract& c,
                const Date& t, const AccruedFixings& accrued = {});
double price_3m(const ModelParams& p, const Eigen::VectorXd& state, const FuturesContract& c,
                const Date& t, const AccruedFixings& accrued = {});

/// Discrete-average one-month rate without the continuous approximation
/// (pre-accrual only).
double price_1m_exact(const ModelParams& p, const Eigen::VectorXd& state,
                      const FuturesContract& c, const Date& t);

/// Daily-compounded three-month rate in closed form (Gaussian HJM product
/// of per-period adjustment factors; pre-accrual only).
double price_3m_exact(const ModelParams& p, const Eigen::VectorXd& state,
                      const FuturesContract& c, const Date& t);

/// log of the adjustment factor gamma(s,e,u,v) =
/// exp(int_s^e nu(tau,v) (nu(tau,v) - nu(tau,u))' dtau) with nu the bond
/// volatility; evaluated analytically per factor. Times are year offsets
/// from the valuation date.
double gamma_log(const ModelParams& p, double s, double e, double u, double v);

/// Realized sum (1/N) sum R_i over published fixings strictly before t, plus
/// the count consistency checks. Throws DataError naming missing dates.
double realized_average(const FuturesContract& c, const Date& t, const AccruedFixings& accrued);
/// Realized compounded product prod (1 + d_i R_i) over fixings strictly before t.
double realized_product(const FuturesContract& c, const Date& t, const AccruedFixings& accrued);

}  // namespace dtsm
