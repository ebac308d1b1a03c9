#pragma once

#include <array>
#include <optional>
#include <span>
#include <vector>

#include "ltvboot/daily_series.hpp"

namespace ltvboot {

// Least-squares power-law fit of a daily response curve,
//
//   log(value_i) = beta0 + beta1 * log(day_i) [+ weekday effect] + eps_i
//
// solved by normal equations (the design never has more than 8 columns).
// Residuals and fitted values are kept in log space. The observed day and
// weekday vectors are retained so the fit can extrapolate on its own.
struct LogLogFit {
    double beta0 = 0.0;
    double beta1 = 0.0;
    // Coefficients for weekday categories 1..6 relative to weekday 0.
    // A category absent from the data keeps coefficient 0.
    std::optional<std::array<double, 6>> weekday_coefs;
    std::vector<double> residuals;   // log space, sums to ~0
    std::vector<double> fitted_log;  // beta0 + beta1*log(day) + weekday term
    double sigma2 = 0.0;             // SSR / (n - #params)
    std::size_t n = 0;
    std::vector<int> days;
    std::vector<int> weekday;  // empty when the fit has no weekday terms
};

struct ExtrapolationConfig {
    int horizon = 365;  // lifetime span in days; must cover the observed days
    // Whether observed days contribute their (pseudo-)data to the lifetime
    // sum or the model's own prediction for those days.
    bool include_observed_pseudo = true;
};

// Fits the log-log model. Throws DegenerateDesign when the regression is
// unidentifiable (all days equal, or fewer observations than parameters + 1).
LogLogFit fit_loglog(const DailySeries& series);

// Model prediction in log space for an arbitrary day. A weekday category is
// required exactly when the fit has weekday terms (MissingCovariate
// otherwise).
double predict_log(const LogLogFit& fit, int day,
                   std::optional<int> weekday = std::nullopt);

// Daily values over days 1..horizon as used by the lifetime sum: observed
// days carry pseudo_values (or exp(fitted) when pseudo_values is empty),
// every other day the back-transformed prediction exp(predict_log).
// Extrapolated weekdays cycle by calendar position from the first observed
// day. Throws HorizonTooShort when the horizon does not reach the last
// observed day.
std::vector<double> extrapolation_curve(const LogLogFit& fit,
                                        std::span<const double> pseudo_values,
                                        const ExtrapolationConfig& config);

// Lifetime value: the sum of extrapolation_curve.
double extrapolate_ltv(const LogLogFit& fit, std::span<const double> pseudo_values,
                       const ExtrapolationConfig& config);

}  // namespace ltvboot
