#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "ltvboot/daily_series.hpp"

namespace ltvboot {

// Daily CSV schema (header required, exact):
//   group,day,avg_revenue
//   group,day,avg_revenue,weekday
// Rows may arrive in any order; they are grouped by label (first-appearance
// order) and sorted by day. Duplicate (group, day) rows and non-positive
// responses are rejected with the offending line number. log_offset, when
// non-zero, is added to every avg_revenue before validation (explicit opt-in
// for data containing zeros; it distorts lifetime sums and is off by
// default).
std::vector<DailySeries> load_daily_csv(const std::string& path,
                                        double log_offset = 0.0);
std::vector<DailySeries> read_daily_csv(std::istream& in, double log_offset = 0.0);

// Values are written with enough digits to round-trip bit-exactly.
void save_daily_csv(const std::vector<DailySeries>& series, const std::string& path);
void write_daily_csv(const std::vector<DailySeries>& series, std::ostream& out);

}  // namespace ltvboot
