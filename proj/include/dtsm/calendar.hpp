#pragma once

#include <set>
#include <string>
#include <vector>

#include "dtsm/date.hpp"

namespace dtsm {

/// Business-day calendar: Saturday/Sunday weekends plus an explicit holiday set.
class Calendar {
public:
    /// Empty holiday set (weekends only).
    Calendar() = default;
    explicit Calendar(std::set<Date> holidays) : holidays_(std::move(holidays)) {}

    /// US federal holidays (observed dates), 2018-2030, shipped as data.
    static const Calendar& us_federal();

    /// One ISO-8601 date per line, '#' starts a comment.
    static Calendar load(const std::string& path);

    bool is_holiday(const Date& d) const { return holidays_.count(d) > 0; }
    bool is_business_day(const Date& d) const { return !d.is_weekend() && !is_holiday(d); }

    Date next_business_day(const Date& d) const;      // strictly after d
    Date prev_business_day(const Date& d) const;      // strictly before d
    Date adjust_following(const Date& d) const;       // d if business, else forward
    Date adjust_preceding(const Date& d) const;
    /// Forward unless that crosses a month end, then backward.
    Date adjust_modified_following(const Date& d) const;

    std::vector<Date> business_days(const Date& from, const Date& to_exclusive) const;

    const std::set<Date>& holidays() const { return holidays_; }

private:
    std::set<Date> holidays_;
};

}  // namespace dtsm
