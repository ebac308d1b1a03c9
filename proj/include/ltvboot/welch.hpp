#pragma once

#include "ltvboot/daily_series.hpp"
#include "ltvboot/winner.hpp"

namespace ltvboot {

struct WelchResult {
    double t = 0.0;   // (mean_test - mean_control) / standard error
    double df = 0.0;  // Welch-Satterthwaite degrees of freedom
    double p = 0.0;   // one-sided, evidence that the test mean is larger
};

// Unequal-variance two-sample t-test on per-user cumulative response, the
// short-term comparison baseline. Throws ZeroVariance when both groups are
// constant (no test possible).
WelchResult welch_t_test(const UserCumulative& control, const UserCumulative& test);

// Test iff p <= alpha (boundary counts as significant); otherwise Control.
Winner decide_winner_standard(double p_one_sided, double alpha);

// Student-t survival function P(T_nu > t), evaluated through the regularized
// incomplete beta function. Absolute error well below 1e-6 over the range
// used here.
double student_t_sf(double t, double nu);

// Regularized incomplete beta I_x(a, b) by Lentz's continued fraction.
double regularized_incomplete_beta(double a, double b, double x);

}  // namespace ltvboot
