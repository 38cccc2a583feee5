#pragma once

#include <compare>
#include <string>
#include <string_view>

namespace hfindex {

/// Calendar month. Adjustments, flows and NAVs are all keyed by month;
/// intra-month time only appears through fee accrual and finalization days.
struct MonthId {
    int year = 0;
    int month = 1; // 1..12

    auto operator<=>(const MonthId&) const = default;
};

MonthId add_months(MonthId m, int n);

/// a - b in whole months.
int month_diff(MonthId a, MonthId b);

/// Serial month number (year * 12 + month). Used for redemption grids.
long month_serial(MonthId m);

int days_in_month(MonthId m);

std::string to_string(MonthId m); // "YYYY-MM"
MonthId parse_month(std::string_view text);

/// Calendar date, used only where day resolution matters (NAV as-of dates,
/// the 45-day finalization rule).
struct Date {
    int year = 0;
    int month = 1;
    int day = 1;

    auto operator<=>(const Date&) const = default;
};

/// Days since 1970-01-01 (proleptic Gregorian).
long days_from_civil(Date d);

/// Calendar days elapsed from the last day of `m` to `d`. Positive once the
/// month has ended.
int days_past_month_end(MonthId m, Date d);

std::string to_string(Date d); // "YYYY-MM-DD"
Date parse_date(std::string_view text);

} // namespace hfindex
