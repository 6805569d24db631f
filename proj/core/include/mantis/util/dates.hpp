#pragma once

#include <cstdint>
#include <string>

namespace mantis::util {

// Civil dates are handled as "YYYY-MM-DD" strings in UTC; timestamps are unix seconds.
int64_t day_start(const std::string& date);           // 00:00:00 UTC of that date
std::string date_of(int64_t unix_seconds);            // date containing the timestamp
std::string add_days(const std::string& date, int n);
bool is_valid_date(const std::string& date);

constexpr int64_t kSecondsPerDay = 86400;

}  // namespace mantis::util
