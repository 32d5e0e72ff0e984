#include "dtsm/date.hpp"

#include <array>
#include <charconv>
#include <cstdio>
#include <ostream>

namespace dtsm {

namespace {

// Days-from-civil / civil-from-days (Howard Hinnant's algorithms).
std::int64_t days_from_civil(int y, int m, int d) {
    y -= m <= 2;
    const std::int64_t era = (y >= 0 ? y : y - 399) / 400;
    const unsigned yoe = static_cast<unsigned>(y - era * 400);
    const unsigned doy = (153u * (m + (m > 2 ? -3 : 9)) + 2) / 5 + d - 1;
    const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
    return era * 146097 + static_cast<std::int64_t>(doe) - 719468;
}

void civil_from_days(std::int64_t z, int& y, int& m, int& d) {
    z += 719468;
    const std::int64_t era = (z >= 0 ? z : z - 146096) / 146097;
    const unsigned doe = static_cast<unsigned>(z - era * 146097);
    const unsigned yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
    const std::int64_t yy = static_cast<std::int64_t>(yoe) + era * 400;
    const unsigned doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
    const unsigned mp = (5 * doy + 2) / 153;
    d = static_cast<int>(doy - (153 * mp + 2) / 5 + 1);
    m = static_cast<int>(mp + (mp < 10 ? 3 : -9));
    y = static_cast<int>(yy + (m <= 2));
}

}  // namespace

int days_in_month(int year, int month) {
    static constexpr std::array<int, 12> lengths = {31, 28, 31, 30, 31, 30,
                                                    31, 31, 30, 31, 30, 31};
    if (month == 2 && is_leap(year)) return 29;
    return lengths[month - 1];
}

Date::Date(int year, int month, int day) {
    if (month < 1 || month > 12 || day < 1 || day > days_in_month(year, month))
        throw std::invalid_argument("Date: invalid year-month-day " + std::to_string(year) +
                                    "-" + std::to_string(month) + "-" + std::to_string(day));
    serial_ = days_from_civil(year, month, day);
}

Date Date::parse(const std::string& s) {
    int y = 0, m = 0, d = 0;
    if (s.size() != 10 || s[4] != '-' || s[7] != '-' ||
        std::from_chars(s.data(), s.data() + 4, y).ec != std::errc{} ||
        std::from_chars(s.data() + 5, s.data() + 7, m).ec != std::errc{} ||
        std::from_chars(s.data() + 8, s.data() + 10, d).ec != std::errc{})
        throw std::invalid_argument("Date: expected YYYY-MM-DD, got '" + s + "'");
    return Date(y, m, d);
}

void Date::to_ymd(int& y, int& m, int& d) const { civil_from_days(serial_, y, m, d); }

int Date::year() const { int y, m, d; to_ymd(y, m, d); return y; }
int Date::month() const { int y, m, d; to_ymd(y, m, d); return m; }
int Date::day() const { int y, m, d; to_ymd(y, m, d); return d; }

int Date::weekday() const {
    // 1970-01-01 was a Thursday (=3 with Monday=0).
    std::int64_t w = (serial_ + 3) % 7;
    if (w < 0) w += 7;
    return static_cast<int>(w);
}

Date Date::plus_months(int n) const {
    int y, m, d;
    to_ymd(y, m, d);
    int total = (y * 12 + (m - 1)) + n;
    int ny = total / 12, nm = total % 12 + 1;
    if (nm <= 0) { nm += 12; --ny; }
    int nd = std::min(d, days_in_month(ny, nm));
    return Date(ny, nm, nd);
}

std::string Date::to_string() const {
    int y, m, d;
    to_ymd(y, m, d);
    char buf[16];
    std::snprintf(buf, sizeof(buf), "%04d-%02d-%02d", y, m, d);
    return buf;
}

std::ostream& operator<<(std::ostream& os, const Date& d) { return os << d.to_string(); }

}  // namespace dtsm
