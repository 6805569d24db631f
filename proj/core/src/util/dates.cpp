#include "mantis/util/dates.hpp"

#include <cstdio>
#include <stdexcept>

namespace mantis::util {

namespace {

// Howard Hinnant's civil-from-days / days-from-civil arithmetic.
int64_t days_from_civil(int y, unsigned m, unsigned d) {
  y -= m <= 2;
  const int64_t era = (y >= 0 ? y : y - 399) / 400;
  const unsigned yoe = static_cast<unsigned>(y - era * 400);
  const unsigned doy = (153 * (m + (m > 2 ? -3 : 9)) + 2) / 5 + d - 1;
  const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
  return era * 146097 + static_cast<int64_t>(doe) - 719468;
}

void civil_from_days(int64_t z, int& y, unsigned& m, unsigned& d) {
  z += 719468;
  const int64_t era = (z >= 0 ? z : z - 146096) / 146097;
  const unsigned doe = static_cast<unsigned>(z - era * 146097);
  const unsigned yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
  const int64_t yy = static_cast<int64_t>(yoe) + era * 400;
  const unsigned doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
  const unsigned mp = (5 * doy + 2) / 153;
  d = doy - (153 * mp + 2) / 5 + 1;
  m = mp + (mp < 10 ? 3 : -9);
  y = static_cast<int>(yy + (m <= 2));
}

}  // namespace

bool is_valid_date(const std::string& date) {
  if (date.size() != 10 || date[4] != '-' || date[7] != '-') return false;
  for (size_t i : {0u, 1u, 2u, 3u, 5u, 6u, 8u, 9u})
    if (date[i] < '0' || date[i] > '9') return false;
  int m = (date[5] - '0') * 10 + (date[6] - '0');
  int d = (date[8] - '0') * 10 + (date[9] - '0');
  return m >= 1 && m <= 12 && d >= 1 && d <= 31;
}

int64_t day_start(const std::string& date) {
  if (!is_valid_date(date)) throw std::invalid_argument("bad date: " + date);
  int y = std::stoi(date.substr(0, 4));
  unsigned m = static_cast<unsigned>(std::stoi(date.substr(5, 2)));
  unsigned d = static_cast<unsigned>(std::stoi(date.substr(8, 2)));
  return days_from_civil(y, m, d) * kSecondsPerDay;
}

std::string date_of(int64_t unix_seconds) {
  int64_t z = unix_seconds / kSecondsPerDay;
  if (unix_seconds < 0 && unix_seconds % kSecondsPerDay != 0) --z;
  int y;
  unsigned m, d;
  civil_from_days(z, y, m, d);
  char buf[16];
  std::snprintf(buf, sizeof(buf), "%04d-%02u-%02u", y, m, d);
  return buf;
}

std::string add_days(const std::string& date, int n) {
  return date_of(day_start(date) + static_cast<int64_t>(n) * kSecondsPerDay);
}

}  // namespace mantis::util
