#pragma once

#include <cstdint>

#include "ltvboot/daily_series.hpp"
#include "ltvboot/winner.hpp"

namespace ltvboot {

// Generative knobs for one cohort: users churn independently with a constant
// per-day hazard (survival to day t is (1-churn_rate)^(t-1)), and while
// active earn daily_revenue_per_active scaled by mean-one log-normal noise
// exp(N(-sd^2/2, sd^2)). The mean-one form keeps the closed-form expected
// cumulative exact for any noise level.
struct GroupParams {
    int n_users = 1000;
    double daily_revenue_per_active = 0.03;
    double churn_rate = 0.05;
    double revenue_noise_sd = 0.0;
};

struct SimScenario {
    GroupParams control;
    GroupParams test;
    int horizon_days = 60;
    std::uint64_t seed = 0;
    int evaluation_day = 14;  // when the early decision is made
    int truth_day = 60;       // when the real winner is scored

    void validate() const;  // throws InvalidInput
};

// Outcome of one synthetic experiment. Daily series are average revenue per
// recruited user with group labels "control" and "test"; trailing days on
// which every user has churned are dropped. The true winner comes from the
// closed-form expected cumulative at truth_day, not from the noisy sample
// (ties go to control).
struct SimulatedExperiment {
    DailySeries control_daily;
    DailySeries test_daily;
    UserCumulative control_at_evaluation;
    UserCumulative test_at_evaluation;
    UserCumulative control_at_truth;
    UserCumulative test_at_truth;
    Winner true_winner = Winner::Control;
};

// Expected per-user cumulative revenue through `day`:
// r * (1 - (1-churn)^day) / churn, or r * day for zero churn.
double expected_cumulative(const GroupParams& group, int day);

// Pure function of the scenario; per-user streams are derived from
// (seed, group label hash, user index), see rng.hpp.
SimulatedExperiment simulate(const SimScenario& scenario);

// Preset that mirrors the classic short-term/long-term reversal: test leads
// expected cumulative revenue by about +2% at day 14 and trails by about -2%
// at day 90, crossing near day 40.
SimScenario crossover_scenario();

}  // namespace ltvboot
