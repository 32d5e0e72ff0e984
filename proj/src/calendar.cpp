#include "dtsm/calendar.hpp"

#include <fstream>

namespace dtsm {

namespace {

struct Ymd { int y, m, d; };

// Observed US federal holidays 2018-2030 (Saturday observed Friday,
// Sunday observed Monday; Juneteenth from 2021).
constexpr Ymd kUsFederal[] = {
    {2018,1,1}, {2018,1,15}, {2018,2,19}, {2018,5,28}, {2018,7,4}, {2018,9,3},
    {2018,10,8}, {2018,11,12}, {2018,11,22}, {2018,12,25}, {2019,1,1}, {2019,1,21},
    {2019,2,18}, {2019,5,27}, {2019,7,4}, {2019,9,2}, {2019,10,14}, {2019,11,11},
    {2019,11,28}, {2019,12,25}, {2020,1,1}, {2020,1,20}, {2020,2,17}, {2020,5,25},
    {2020,7,3}, {2020,9,7}, {2020,10,12}, {2020,11,11}, {2020,11,26}, {2020,12,25},
    {2021,1,1}, {2021,1,18}, {2021,2,15}, {2021,5,31}, {2021,6,18}, {2021,7,5},
    {2021,9,6}, {2021,10,11}, {2021,11,11}, {2021,11,25}, {2021,12,24}, {2021,12,31},
    {2022,1,17}, {2022,2,21}, {2022,5,30}, {2022,6,20}, {2022,7,4}, {2022,9,5},
    {2022,10,10}, {2022,11,11}, {2022,11,24}, {2022,12,26}, {2023,1,2}, {2023,1,16},
    {2023,2,20}, {2023,5,29}, {2023,6,19}, {2023,7,4}, {2023,9,4}, {2023,10,9},
    {2023,11,10}, {2023,11,23}, {2023,12,25}, {2024,1,1}, {2024,1,15}, {2024,2,19},
    {2024,5,27}, {2024,6,19}, {2024,7,4}, {2024,9,2}, {2024,10,14}, {2024,11,11},
    {2024,11,28}, {2024,12,25}, {2025,1,1}, {2025,1,20}, {2025,2,17}, {2025,5,26},
    {2025,6,19}, {2025,7,4}, {2025,9,1}, {2025,10,13}, {2025,11,11}, {2025,11,27},
    {2025,12,25}, {2026,1,1}, {2026,1,19}, {2026,2,16}, {2026,5,25}, {2026,6,19},
    {2026,7,3}, {2026,9,7}, {2026,10,12}, {2026,11,11}, {2026,11,26}, {2026,12,25},
    {2027,1,1}, {2027,1,18}, {2027,2,15}, {2027,5,31}, {2027,6,18}, {2027,7,5},
    {2027,9,6}, {2027,10,11}, {2027,11,11}, {2027,11,25}, {2027,12,24}, {2027,12,31},
    {2028,1,17}, {2028,2,21}, {2028,5,29}, {2028,6,19}, {2028,7,4}, {2028,9,4},
    {2028,10,9}, {2028,11,10}, {2028,11,23}, {2028,12,25}, {2029,1,1}, {2029,1,15},
    {2029,2,19}, {2029,5,28}, {2029,6,19}, {2029,7,4}, {2029,9,3}, {2029,10,8},
    {2029,11,12}, {2029,11,22}, {2029,12,25}, {2030,1,1}, {2030,1,21}, {2030,2,18},
    {2030,5,27}, {2030,6,19}, {2030,7,4}, {2030,9,2}, {2030,10,14}, {2030,11,11},
    {2030,11,28}, {2030,12,25},
};

}  // namespace

const Calendar& Calendar::us_federal() {
    static const Calendar cal = [] {
        std::set<Date> hs;
        for (const auto& h : kUsFederal) hs.insert(Date(h.y, h.m, h.d));
        return Calendar(std::move(hs));
    }();
    return cal;
}

Calendar Calendar::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("Calendar: cannot open " + path);
    std::set<Date> hs;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        // trim
        auto b = line.find_first_not_of(" \t\r");
        if (b == std::string::npos) continue;
        auto e = line.find_last_not_of(" \t\r");
        try {
            hs.insert(Date::parse(line.substr(b, e - b + 1)));
        } catch (const std::exception& ex) {
            throw std::runtime_error("Calendar: " + path + ":" + std::to_string(lineno) +
                                     ": " + ex.what());
        }
    }
    return Calendar(std::move(hs));
}

Date Calendar::next_business_day(const Date& d) const {
    Date x = d.plus_days(1);
    while (!is_business_day(x)) x = x.plus_days(1);
    return x;
}

Date Calendar::prev_business_day(const Date& d) const {
    Date x = d.plus_days(-1);
    while (!is_business_day(x)) x = x.plus_days(-1);
    return x;
}

Date Calendar::adjust_following(const Date& d) const {
    Date x = d;
    while (!is_business_day(x)) x = x.plus_days(1);
    return x;
}

Date Calendar::adjust_preceding(const Date& d) const {
    Date x = d;
    while (!is_business_day(x)) x = x.plus_days(-1);
    return x;
}

Date Calendar::adjust_modified_following(const Date& d) const {
    Date x = adjust_following(d);
    if (x.month() != d.month()) return adjust_preceding(d);
    return x;
}

std::vector<Date> Calendar::business_days(const Date& from, const Date& to_exclusive) const {
    std::vector<Date> out;
    for (Date x = from; x < to_exclusive; x = x.plus_days(1))
        if (is_business_day(x)) out.push_back(x);
    return out;
}

}  // namespace dtsm
