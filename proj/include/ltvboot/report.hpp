#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "ltvboot/bootstrap.hpp"
#include "ltvboot/daily_series.hpp"
#include "ltvboot/simulator.hpp"
#include "ltvboot/winner.hpp"

namespace ltvboot {

struct EvaluationOptions {
    std::uint64_t seed = 0;
    int iterations = 2000;
    int horizon = 365;
    double alpha = 0.05;
    unsigned threads = 1;      // cannot affect results
    double log_offset = 0.0;   // echoed into the report only
};

struct GroupEvaluation {
    std::string label;
    double beta0 = 0.0;
    double beta1 = 0.0;
    double ltv_point = 0.0;
    // 2.5 / 25 / 50 / 75 / 97.5 percent sample quantiles of the bootstrap
    // lifetime values, type-7 interpolation.
    std::array<double, 5> ltv_quantiles{};
    // Per-day band across bootstrap iterations, index i is day i+1.
    std::vector<double> band_median;
    std::vector<double> band_p05;
    std::vector<double> band_p95;
};

struct EvaluationReport {
    GroupEvaluation control;
    GroupEvaluation test;
    double p_control_minus_test_positive = 0.0;
    double p_test_minus_control_positive = 0.0;
    double alpha = 0.05;
    Winner decision = Winner::Control;
    std::uint64_t seed = 0;
    int iterations = 0;
    int horizon = 0;
    double log_offset = 0.0;
};

// Full pipeline for one experiment: bootstrap both groups with streams
// derived from (seed, group label, iteration), test the paired differences,
// and collect the per-day extrapolation band. The bootstrap samples are
// identical to bootstrap_ltv's for the same config.
EvaluationReport evaluate_groups(const DailySeries& control, const DailySeries& test,
                                 const EvaluationOptions& options);

// Single JSON document; serialization is deterministic, two identical runs
// produce byte-identical text.
std::string report_to_json(const EvaluationReport& report);

// Plot data, one row per (group, day): columns
// group,day,observed,extrap_median,extrap_p05,extrap_p95 with observed empty
// on days without an observation.
void write_plot_csv(const EvaluationReport& report, const DailySeries& control,
                    const DailySeries& test, std::ostream& out);

// Replay of the retrospective protocol over simulated experiments: decide at
// evaluation_day with both methods, score against the analytic truth at
// truth_day.
struct MethodTally {
    int success = 0;
    int failure = 0;
    double accuracy = 0.0;
};

struct RetrospectiveSummary {
    int n_experiments = 0;
    MethodTally proposed;  // bootstrap lifetime-value test
    MethodTally standard;  // Welch t-test on cumulative response
};

struct ReplicateOutcome {
    Winner proposed = Winner::Control;
    Winner standard = Winner::Control;
    Winner truth = Winner::Control;
};

struct RetrospectiveResult {
    RetrospectiveSummary summary;
    std::vector<ReplicateOutcome> replicates;
};

struct RetrospectiveOptions {
    int n_experiments = 100;
    std::uint64_t master_seed = 0;  // per-replicate seeds derive from this
    int iterations = 2000;
    int horizon = 365;
    double alpha = 0.05;
    unsigned threads = 1;  // parallelism over replicates, result-invariant
};

RetrospectiveResult run_retrospective(const SimScenario& scenario,
                                      const RetrospectiveOptions& options);

std::string summary_to_json(const RetrospectiveSummary& summary);
// method,success,failure,accuracy table, one row per method.
std::string summary_to_csv(const RetrospectiveSummary& summary);

// Scenario files: one flat JSON object whose keys are the SimScenario fields
// with group prefixes (control_n_users, test_churn_rate, ..., horizon_days,
// seed, evaluation_day, truth_day).
SimScenario scenario_from_json_text(const std::string& text);
std::string scenario_to_json_text(const SimScenario& scenario);
SimScenario load_scenario(const std::string& path);

}  // namespace ltvboot
