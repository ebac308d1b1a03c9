#include "ltvboot/loglog.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>

#include "ltvboot/errors.hpp"

namespace ltvboot {

namespace {

// Cholesky solve of the (symmetric positive definite) normal equations.
// The design has at most 8 columns, so no pivoting beyond a relative
// tolerance check on the diagonal. Returns false when a pivot collapses,
// which signals a rank-deficient design.
bool cholesky_solve(std::vector<double>& a, std::vector<double>& b, std::size_t p) {
    double max_diag = 0.0;
    for (std::size_t i = 0; i < p; ++i)
        max_diag = std::max(max_diag, std::abs(a[i * p + i]));
    const double tol = 1e-12 * std::max(max_diag, 1.0);

    for (std::size_t k = 0; k < p; ++k) {
        double pivot = a[k * p + k];
        for (std::size_t j = 0; j < k; ++j) pivot -= a[k * p + j] * a[k * p + j];
        if (!(pivot > tol)) return false;
        const double lkk = std::sqrt(pivot);
        a[k * p + k] = lkk;
        for (std::size_t i = k + 1; i < p; ++i) {
            double s = a[i * p + k];
            for (std::size_t j = 0; j < k; ++j) s -= a[i * p + j] * a[k * p + j];
            a[i * p + k] = s / lkk;
        }
    }
    // L y = b, then L^T x = y, in place.
    for (std::size_t i = 0; i < p; ++i) {
        double s = b[i];
        for (std::size_t j = 0; j < i; ++j) s -= a[i * p + j] * b[j];
        b[i] = s / a[i * p + i];
    }
    for (std::size_t ii = p; ii-- > 0;) {
        double s = b[ii];
        for (std::size_t j = ii + 1; j < p; ++j) s -= a[j * p + ii] * b[j];
        b[ii] = s / a[ii * p + ii];
    }
    return true;
}

int cycled_weekday(const LogLogFit& fit, int day) {
    const int first_day = fit.days.front();
    const int first_wd = fit.weekday.front();
    return ((first_wd + day - first_day) % 7 + 7) % 7;
}

}  // namespace

LogLogFit fit_loglog(const DailySeries& series) {
    const std::size_t n = series.size();
    const bool with_weekday = series.has_weekday();

    // Dummy columns only for weekday categories that actually occur
    // (category 0 is always the reference). Absent categories keep a zero
    // coefficient rather than producing an all-zero design column.
    std::array<int, 7> cat_col{};  // category -> design column, -1 if none
    cat_col.fill(-1);
    std::size_t p = 2;
    if (with_weekday) {
        for (int wd : series.weekday())
            if (wd != 0 && cat_col[wd] < 0) cat_col[wd] = static_cast<int>(p++);
    }

    if (series.days().front() == series.days().back())
        throw Error(ErrorCode::DegenerateDesign, "all day indices are equal");
    if (n < p + 1)
        throw Error(ErrorCode::DegenerateDesign,
                    "need at least " + std::to_string(p + 1) + " observations to fit " +
                        std::to_string(p) + " parameters, got " + std::to_string(n));

    // Accumulate X'X and X'y for design rows [1, log(day), dummies...].
    std::vector<double> xtx(p * p, 0.0);
    std::vector<double> xty(p, 0.0);
    std::vector<double> row(p);
    std::vector<double> log_y(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::fill(row.begin(), row.end(), 0.0);
        row[0] = 1.0;
        row[1] = std::log(static_cast<double>(series.days()[i]));
        if (with_weekday) {
            const int col = cat_col[series.weekday()[i]];
            if (col >= 0) row[col] = 1.0;
        }
        log_y[i] = std::log(series.values()[i]);
        for (std::size_t a = 0; a < p; ++a) {
            for (std::size_t b = a; b < p; ++b) xtx[a * p + b] += row[a] * row[b];
            xty[a] += row[a] * log_y[i];
        }
    }
    for (std::size_t a = 0; a < p; ++a)
        for (std::size_t b = 0; b < a; ++b) xtx[a * p + b] = xtx[b * p + a];

    std::vector<double> beta = xty;
    if (!cholesky_solve(xtx, beta, p))
        throw Error(ErrorCode::DegenerateDesign,
                    "normal equations are numerically singular");

    LogLogFit fit;
    fit.beta0 = beta[0];
    fit.beta1 = beta[1];
    fit.n = n;
    fit.days = series.days();
    if (with_weekday) {
        fit.weekday = series.weekday();
        std::array<double, 6> coefs{};
        for (int c = 1; c <= 6; ++c)
            if (cat_col[c] >= 0) coefs[c - 1] = beta[cat_col[c]];
        fit.weekday_coefs = coefs;
    }

    fit.fitted_log.resize(n);
    fit.residuals.resize(n);
    double ssr = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double yhat = fit.beta0 + fit.beta1 * std::log(static_cast<double>(fit.days[i]));
        if (with_weekday && series.weekday()[i] != 0)
            yhat += (*fit.weekday_coefs)[series.weekday()[i] - 1];
        fit.fitted_log[i] = yhat;
        fit.residuals[i] = log_y[i] - yhat;
        ssr += fit.residuals[i] * fit.residuals[i];
    }
    fit.sigma2 = ssr / static_cast<double>(n - p);
    return fit;
}

double predict_log(const LogLogFit& fit, int day, std::optional<int> weekday) {
    if (day < 1) throw Error(ErrorCode::InvalidInput, "day index must be >= 1");
    if (fit.weekday_coefs && !weekday)
        throw Error(ErrorCode::MissingCovariate,
                    "fit has weekday terms; a weekday category is required");
    if (!fit.weekday_coefs && weekday)
        throw Error(ErrorCode::InvalidInput,
                    "weekday supplied but the fit has no weekday terms");
    double y = fit.beta0 + fit.beta1 * std::log(static_cast<double>(day));
    if (weekday) {
        if (*weekday < 0 || *weekday > 6)
            throw Error(ErrorCode::InvalidInput, "weekday outside 0..6");
        if (*weekday != 0) y += (*fit.weekday_coefs)[*weekday - 1];
    }
    return y;
}

std::vector<double> extrapolation_curve(const LogLogFit& fit,
                                        std::span<const double> pseudo_values,
                                        const ExtrapolationConfig& config) {
    const int horizon = config.horizon;
    if (horizon < fit.days.back())
        throw Error(ErrorCode::HorizonTooShort,
                    "horizon " + std::to_string(horizon) + " ends before observed day " +
                        std::to_string(fit.days.back()));
    if (!pseudo_values.empty()) {
        if (pseudo_values.size() != fit.n)
            throw Error(ErrorCode::LengthMismatch,
                        "pseudo data has " + std::to_string(pseudo_values.size()) +
                            " entries, fit has " + std::to_string(fit.n));
        for (double v : pseudo_values)
            if (!(v > 0.0))
                throw Error(ErrorCode::NonPositiveResponse,
                            "pseudo data must be positive");
    }

    const bool with_weekday = fit.weekday_coefs.has_value();
    std::vector<double> curve(static_cast<std::size_t>(horizon));
    std::size_t obs = 0;  // next observed index; fit.days is increasing
    for (int day = 1; day <= horizon; ++day) {
        double value;
        if (obs < fit.n && fit.days[obs] == day) {
            value = (config.include_observed_pseudo && !pseudo_values.empty())
                        ? pseudo_values[obs]
                        : std::exp(fit.fitted_log[obs]);
            ++obs;
        } else {
            std::optional<int> wd;
            if (with_weekday) wd = cycled_weekday(fit, day);
            value = std::exp(predict_log(fit, day, wd));
        }
        curve[static_cast<std::size_t>(day - 1)] = value;
    }
    return curve;
}

double extrapolate_ltv(const LogLogFit& fit, std::span<const double> pseudo_values,
                       const ExtrapolationConfig& config) {
    double total = 0.0;
    for (double v : extrapolation_curve(fit, pseudo_values, config)) total += v;
    return total;
}

}  // namespace ltvboot
