#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>

#include "hfindex/money.hpp"
#include "hfindex/month.hpp"

namespace hfindex {

using FundId = std::string;
using StrategyId = std::string;

/// Fund weights as fractions of the index (1.0 = 100%). Keyed maps keep
/// every iteration order deterministic.
using WeightVector = std::map<FundId, double>;

double weight_sum(const WeightVector& w);
bool is_normalized(const WeightVector& w, double tol = 1e-9);

/// Liquidity and capacity terms of a fund.
struct FundTerms {
    int redemption_frequency_months = 1;    // 1 = monthly, 3 = quarterly, ...
    int notice_period_months = 0;           // months of notice before a redemption
    int settlement_lag_months = 0;          // months from effective redemption to cash receipt
    double min_investment_weight = 0.0;     // weight floor while invested
    bool closed_to_new_investment = false;  // floor at current weight, no additions
    std::optional<Usd> exposure_cap_usd;    // nullopt = unbounded
    bool accepting_allocations = true;
};

/// Static fund identity plus its monthly data series.
struct FundRecord {
    FundId fund;
    StrategyId strategy;
    FundTerms terms;
    std::map<MonthId, Usd> aum_series;
    std::map<MonthId, double> return_series; // reported NAV return estimates
    bool due_diligence_passed = true;

    Usd aum_at(MonthId m) const; // latest known AUM at or before m (zero if none)
};

/// Total AUM per strategy and per fund for one month of the universe.
struct UniverseSnapshot {
    MonthId month;
    std::map<StrategyId, Usd> strategy_aum;
    std::map<FundId, Usd> fund_aum;
};

/// Screening thresholds a fund must pass to be index-eligible.
struct EligibilityPolicy {
    Usd min_aum_usd = Usd::from_cents(0);
    bool require_due_diligence = true;
    int max_notice_months = 3;
    int max_redemption_frequency_months = 3;
};

/// Engine-wide rule constants. Defaults follow the index rules; everything
/// is configurable for tests.
struct EngineConfig {
    double annual_fee = 0.0095;
    double base_level = 1000.0;
    int horizon_months = 12;
    int finalize_after_days = 45;
    double global_fund_cap = 0.01;          // no fund above 1%
    double allocation_ceiling = 0.0075;     // allocations never raise a weight above 75bp
    double strategy_cap_ratio = 1.2;        // breach when SW >= 1.2 * TSW
    double strategy_redemption_floor = 0.0025; // 25bp floor for strategy-cap redemptions
    int fund_count_multiplier = 250;        // N_I ~ 250 * TSW_I
    EligibilityPolicy eligibility;
};

} // namespace hfindex
