#pragma once

#include <string>
#include <vector>

namespace ltvboot {

// One group's observed daily mean response: value[i] is the average response
// per recruited user on day days[i]. Day indices are 1-based and strictly
// increasing but need not be contiguous. Values must be strictly positive
// (the model works on logs). An optional weekday category (0..6) per
// observation enables weekday adjustment in the fit.
//
// Invariants are enforced at construction; instances are immutable.
class DailySeries {
public:
    DailySeries(std::string group_label, std::vector<int> days,
                std::vector<double> values, std::vector<int> weekday = {});

    const std::string& group_label() const noexcept { return group_label_; }
    const std::vector<int>& days() const noexcept { return days_; }
    const std::vector<double>& values() const noexcept { return values_; }
    const std::vector<int>& weekday() const noexcept { return weekday_; }

    bool has_weekday() const noexcept { return !weekday_.empty(); }
    std::size_t size() const noexcept { return days_.size(); }
    int last_day() const noexcept { return days_.back(); }

    // Sub-series with days <= last_day (used to replay a decision made
    // part-way into an experiment).
    DailySeries truncated(int last_day) const;

private:
    std::string group_label_;
    std::vector<int> days_;
    std::vector<double> values_;
    std::vector<int> weekday_;
};

// Per-user cumulative response through some evaluation day. Unlike
// DailySeries this is raw scale, zeros allowed.
struct UserCumulative {
    std::string group_label;
    std::vector<double> values;

    std::size_t n_users() const noexcept { return values.size(); }
};

}  // namespace ltvboot
