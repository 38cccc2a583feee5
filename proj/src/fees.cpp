#include "hfindex/fees.hpp"

#include "hfindex/errors.hpp"

namespace hfindex {

double monthly_fee(const FeeSchedule& schedule, bool full_month) {
    if (schedule.total_days_in_month <= 0) {
        throw Error(ErrorKind::invalid_calendar, "fee schedule: total_days_in_month must be > 0");
    }
    if (schedule.days_into_month < 0 || schedule.days_into_month > schedule.total_days_in_month) {
        throw Error(ErrorKind::invalid_calendar, "fee schedule: days_into_month out of range");
    }
    double full = schedule.annual_fee / 12.0;
    if (full_month) return full;
    return (static_cast<double>(schedule.days_into_month) / schedule.total_days_in_month) * full;
}

} // namespace hfindex
