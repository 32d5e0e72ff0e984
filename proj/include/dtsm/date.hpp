#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>

namespace dtsm {

/// Calendar date stored as a serial day count (days since 1970-01-01).
/// Proleptic Gregorian, valid for the whole range we care about.
class Date {
public:
    Date() : serial_(0) {}
    Date(int year, int month, int day);

    static Date from_serial(std::int64_t s) { Date d; d.serial_ = s; return d; }
    static Date parse(const std::string& iso8601);  // "YYYY-MM-DD"

    std::int64_t serial() const { return serial_; }
    int year() const;
    int month() const;
    int day() const;

    /// 0 = Monday ... 6 = Sunday
    int weekday() const;
    bool is_weekend() const { int w = weekday(); return w >= 5; }

    Date plus_days(std::int64_t n) const { return from_serial(serial_ + n); }
    /// Same day-of-month n months later, clipped to the target month end.
    Date plus_months(int n) const;

    std::string to_string() const;  // ISO-8601

    friend auto operator<=>(const Date&, const Date&) = default;
    friend std::int64_t operator-(const Date& a, const Date& b) { return a.serial_ - b.serial_; }

private:
    std::int64_t serial_;
    void to_ymd(int& y, int& m, int& d) const;
};

std::ostream& operator<<(std::ostream& os, const Date& d);

/// ACT/360 year fraction between two dates.
inline double act360(const Date& from, const Date& to) {
    return static_cast<double>(to - from) / 360.0;
}

inline bool is_leap(int y) {
    return (y % 4 == 0 && y % 100 != 0) || y % 400 == 0;
}

int days_in_month(int year, int month);

}  // namespace dtsm
