#pragma once

namespace hfindex {

/// Index fee terms. The fee accrues linearly through the month; a full month
/// charges annual_fee / 12 regardless of day counts.
struct FeeSchedule {
    double annual_fee = 0.0095;
    int days_into_month = 0;
    int total_days_in_month = 30;
};

/// Monthly index fee, full or accrued-to-date.
double monthly_fee(const FeeSchedule& schedule, bool full_month);

} // namespace hfindex
