#pragma once

#include <cmath>
#include <cstdint>
#include <string_view>
#include <vector>

#include "ltvboot/daily_series.hpp"
#include "ltvboot/errors.hpp"
#include "ltvboot/loglog.hpp"
#include "ltvboot/rng.hpp"
#include "ltvboot/winner.hpp"

namespace ltvboot {

struct BootstrapConfig {
    int iterations = 2000;  // bootstrap replicates B
    std::uint64_t seed = 0;
    ExtrapolationConfig extrapolation{};
};

// B forecasted lifetime values for one group, plus the lifetime value of the
// original (non-resampled) fit. samples[j] is a pure function of
// (series, config, j).
struct LtvDistribution {
    std::string group_label;
    std::vector<double> samples;
    double point_estimate = 0.0;
};

// Paired per-iteration differences control - test and the two strict
// one-sided proportions (ties counted in neither).
struct DifferenceVerdict {
    std::vector<double> diffs;
    double p_control_minus_test_positive = 0.0;
    double p_test_minus_control_positive = 0.0;
    double alpha = 0.05;
    Winner decision = Winner::Control;
};

// RNG stream for bootstrap iteration j of a group; the public determinism
// contract (see rng.hpp).
inline CounterRng iteration_stream(std::uint64_t seed, std::string_view group_label,
                                   std::uint64_t iteration) {
    return CounterRng(derive_stream_key(seed, fnv1a64(group_label), iteration));
}

// One residual-bootstrap pseudo dataset: draws n residuals with replacement
// and re-adds them to the fit in log space, value*_i = exp(fitted_i + e*_i).
// Day indices and weekday labels are unchanged. Rng needs only
// next_index(n); tests substitute a scripted stream.
template <class Rng>
DailySeries resample_pseudo_series(const LogLogFit& fit, const DailySeries& series,
                                   Rng& rng) {
    if (fit.n != series.size() || fit.days != series.days())
        throw Error(ErrorCode::LengthMismatch,
                    "fit was not produced from this series");
    const std::size_t n = fit.n;
    std::vector<double> values(n);
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t k = rng.next_index(n);
        values[i] = std::exp(fit.fitted_log[i] + fit.residuals[k]);
    }
    return DailySeries(series.group_label(), series.days(), std::move(values),
                       series.weekday());
}

// Full residual-bootstrap pipeline for one group: fit once on the sample,
// then per iteration resample, refit and extrapolate to the horizon.
// Output is bitwise independent of n_threads; iterations are assembled by
// index and each draws from its own derived stream.
LtvDistribution bootstrap_ltv(const DailySeries& series, const BootstrapConfig& config,
                              unsigned n_threads = 1);

// diffs[j] = control.samples[j] - test.samples[j]; both one-sided proportions
// with strict inequality; decision per decide_winner. Throws LengthMismatch
// on unequal sample counts.
DifferenceVerdict difference_test(const LtvDistribution& control,
                                  const LtvDistribution& test, double alpha);

// The asymmetric decision policy: keep the control group unless the bootstrap
// evidence that test is better is significant, i.e. Test iff
// (1 - p_test_minus_control_positive) <= alpha.
Winner decide_winner(double p_test_minus_control_positive, double alpha);

}  // namespace ltvboot
