#include "hfindex/month.hpp"

#include <cstdio>
#include <cstdlib>

#include "hfindex/errors.hpp"

namespace hfindex {

namespace {

void check_month(MonthId m, const char* where) {
    if (m.month < 1 || m.month > 12) {
        throw Error(ErrorKind::invalid_calendar,
                    std::string(where) + ": month out of range: " + std::to_string(m.month));
    }
}

bool is_leap(int y) {
    return (y % 4 == 0 && y % 100 != 0) || y % 400 == 0;
}

} // namespace

MonthId add_months(MonthId m, int n) {
    check_month(m, "add_months");
    long serial = static_cast<long>(m.year) * 12 + (m.month - 1) + n;
    long year = serial / 12;
    long month = serial % 12;
    if (month < 0) {
        month += 12;
        year -= 1;
    }
    return MonthId{static_cast<int>(year), static_cast<int>(month) + 1};
}

int month_diff(MonthId a, MonthId b) {
    return static_cast<int>(month_serial(a) - month_serial(b));
}

long month_serial(MonthId m) {
    return static_cast<long>(m.year) * 12 + m.month;
}

int days_in_month(MonthId m) {
    check_month(m, "days_in_month");
    static const int lengths[12] = {31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
    if (m.month == 2 && is_leap(m.year)) return 29;
    return lengths[m.month - 1];
}

std::string to_string(MonthId m) {
    char buf[16];
    std::snprintf(buf, sizeof(buf), "%04d-%02d", m.year, m.month);
    return buf;
}

MonthId parse_month(std::string_view text) {
    int y = 0, mo = 0;
    if (text.size() != 7 || text[4] != '-' ||
        std::sscanf(std::string(text).c_str(), "%d-%d", &y, &mo) != 2 || mo < 1 || mo > 12) {
        throw Error(ErrorKind::parse_error,
                    "bad month '" + std::string(text) + "' (expected YYYY-MM)");
    }
    return MonthId{y, mo};
}

long days_from_civil(Date d) {
    // Howard Hinnant's days-from-civil algorithm.
    int y = d.year;
    unsigned m = static_cast<unsigned>(d.month);
    unsigned day = static_cast<unsigned>(d.day);
    y -= m <= 2;
    const long era = (y >= 0 ? y : y - 399) / 400;
    const unsigned yoe = static_cast<unsigned>(y - era * 400);
    const unsigned doy = (153 * (m + (m > 2 ? -3 : 9)) + 2) / 5 + day - 1;
    const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
    return era * 146097 + static_cast<long>(doe) - 719468;
}

int days_past_month_end(MonthId m, Date d) {
    Date month_end{m.year, m.month, days_in_month(m)};
    return static_cast<int>(days_from_civil(d) - days_from_civil(month_end));
}

std::string to_string(Date d) {
    char buf[16];
    std::snprintf(buf, sizeof(buf), "%04d-%02d-%02d", d.year, d.month, d.day);
    return buf;
}

Date parse_date(std::string_view text) {
    int y = 0, mo = 0, day = 0;
    if (text.size() != 10 || text[4] != '-' || text[7] != '-' ||
        std::sscanf(std::string(text).c_str(), "%d-%d-%d", &y, &mo, &day) != 3 ||
        mo < 1 || mo > 12 || day < 1 || day > days_in_month(MonthId{y, mo})) {
        throw Error(ErrorKind::parse_error,
                    "bad date '" + std::string(text) + "' (expected YYYY-MM-DD)");
    }
    return Date{y, mo, day};
}

} // namespace hfindex
