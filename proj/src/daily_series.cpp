#include "ltvboot/daily_series.hpp"

#include <utility>

#include "ltvboot/errors.hpp"

namespace ltvboot {

DailySeries::DailySeries(std::string group_label, std::vector<int> days,
                         std::vector<double> values, std::vector<int> weekday)
    : group_label_(std::move(group_label)),
      days_(std::move(days)),
      values_(std::move(values)),
      weekday_(std::move(weekday)) {
    if (values_.size() != days_.size())
        throw Error(ErrorCode::LengthMismatch,
                    "group '" + group_label_ + "': " + std::to_string(days_.size()) +
                        " days vs " + std::to_string(values_.size()) + " values");
    if (!weekday_.empty() && weekday_.size() != days_.size())
        throw Error(ErrorCode::LengthMismatch,
                    "group '" + group_label_ + "': weekday column has " +
                        std::to_string(weekday_.size()) + " entries, expected " +
                        std::to_string(days_.size()));
    if (days_.size() < 3)
        throw Error(ErrorCode::DegenerateDesign,
                    "group '" + group_label_ + "': need at least 3 observations, got " +
                        std::to_string(days_.size()));
    int prev = 0;
    for (std::size_t i = 0; i < days_.size(); ++i) {
        if (days_[i] < 1 || days_[i] <= prev)
            throw Error(ErrorCode::InvalidInput,
                        "group '" + group_label_ +
                            "': day indices must be >= 1 and strictly increasing");
        prev = days_[i];
        if (!(values_[i] > 0.0))
            throw Error(ErrorCode::NonPositiveResponse,
                        "group '" + group_label_ + "': value " +
                            std::to_string(values_[i]) + " on day " +
                            std::to_string(days_[i]) +
                            " (all responses must be positive for the log model)");
        if (!weekday_.empty() && (weekday_[i] < 0 || weekday_[i] > 6))
            throw Error(ErrorCode::InvalidInput,
                        "group '" + group_label_ + "': weekday " +
                            std::to_string(weekday_[i]) + " outside 0..6");
    }
}

DailySeries DailySeries::truncated(int last_day) const {
    std::size_t keep = 0;
    while (keep < days_.size() && days_[keep] <= last_day) ++keep;
    std::vector<int> d(days_.begin(), days_.begin() + keep);
    std::vector<double> v(values_.begin(), values_.begin() + keep);
    std::vector<int> w;
    if (!weekday_.empty()) w.assign(weekday_.begin(), weekday_.begin() + keep);
    return DailySeries(group_label_, std::move(d), std::move(v), std::move(w));
}

}  // namespace ltvboot
