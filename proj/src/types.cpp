#include "hfindex/types.hpp"

#include <cmath>

namespace hfindex {

double weight_sum(const WeightVector& w) {
    double sum = 0.0;
    for (const auto& [fund, value] : w) sum += value;
    return sum;
}

bool is_normalized(const WeightVector& w, double tol) {
    return std::fabs(weight_sum(w) - 1.0) <= tol;
}

Usd FundRecord::aum_at(MonthId m) const {
    auto it = aum_series.upper_bound(m);
    if (it == aum_series.begin()) return Usd::from_cents(0);
    return std::prev(it)->second;
}

} // namespace hfindex
