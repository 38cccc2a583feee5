#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hfindex/money.hpp"
#include "hfindex/month.hpp"
#include "hfindex/types.hpp"

namespace hfindex {

/// One fund's return state for one month. The raw NAV return estimate `r`
/// may be revised until the fund NAV is finalized; the index fund return
/// `rho` is derived from it and the residual weight.
struct FundMonthRecord {
    FundId fund;
    MonthId month;
    double nav_return_estimate = 0.0;       // r
    bool nav_finalized = false;
    std::optional<double> admin_override;   // administrator-set r, wins when present
    double index_fund_return = 0.0;         // rho, derived

    /// The return that enters the index: override when set, else estimate.
    double effective_nav_return() const {
        return admin_override ? *admin_override : nav_return_estimate;
    }
};

/// Full index state for one month. Residual ("passive") weights are the
/// portions of fund weights owed to outstanding redemptions; they earn no
/// performance. `next_residuals` and `normalization_factor` describe the
/// transition from this month into the next.
struct MonthLedger {
    MonthId month;
    double index_level_begin = 0.0;   // lambda_m
    double index_return = 0.0;        // kappa_m
    double fee = 0.0;                 // phi for the month
    WeightVector begin_weights;       // omega^b, normalized
    WeightVector begin_residuals;     // residual part of omega^b
    WeightVector end_weights;         // omega^e, normalized
    WeightVector end_residuals;       // zeta^e, residual part of omega^e
    WeightVector next_residuals;      // delta^b for month m+1 (pre-normalization)
    double normalization_factor = 1.0; // gamma for the m -> m+1 transition
    Usd flow_gap;                      // realized flow-consistency gap at that transition
    std::map<FundId, FundMonthRecord> fund_records;
    bool finalized = false;
    int revision_count = 0;

    double index_level_end() const { return index_level_begin * (1.0 + index_return); }
};

enum class AdjustmentReason {
    inflow,
    outflow,
    strategy_cap,
    fund_cap,
    fund_ineligible,
    count_shortfall,
};

const char* to_string(AdjustmentReason reason);
AdjustmentReason parse_adjustment_reason(const std::string& text);

/// A scheduled weight adjustment: decided in month `decided_in`, effective at
/// the start of month `effective`. `weight` is signed (negative = redemption)
/// and refers to `notional_estimate`, the estimate of next-month notional
/// made when the adjustment was decided. For redemptions, cash is expected in
/// `receipt`; until then the amount is carried as a residual weight.
struct AdjustmentEntry {
    FundId fund;
    MonthId decided_in;
    MonthId effective;
    double weight = 0.0;
    Usd notional_estimate;
    AdjustmentReason reason = AdjustmentReason::inflow;
    MonthId receipt;

    /// Signed dollar size of the adjustment (alpha * eta).
    Usd amount() const { return notional_estimate.scaled_by(weight); }
};

/// Net notional of index-linked products, actual and estimated. The notional
/// is constant within a month (client flows happen at month boundaries), so
/// eta_m^e == eta_m^b and the flow of month m+1 is eta_{m+1}^b - eta_m^e.
struct NotionalSchedule {
    std::map<MonthId, Usd> actual;                        // eta^b == eta^e per month
    std::map<std::pair<MonthId, MonthId>, Usd> estimates; // (effective, vintage) -> eta

    /// Best value for month `m` as seen from month `vintage`: actual when the
    /// month has begun, else the freshest estimate, else flat extrapolation
    /// of the last value known at that vintage.
    Usd at_vintage(MonthId m, MonthId vintage) const;

    bool has_actual(MonthId m) const { return actual.count(m) > 0; }
};

/// Forward-looking weight estimate for one target month at one vintage.
struct ProjectionRecord {
    MonthId as_of;                 // vintage n
    MonthId target;                // month m
    WeightVector projected;        // pfw at the time arw was computed
    WeightVector estimated;        // efw after this month's scheduled adjustments
    WeightVector residual;         // projected residual weights for month m
    double aggregate_reallocation = 0.0; // arw = 1 - sum(pfw) - sum(residual)
};

/// Per-strategy targets for one month.
struct StrategyTargets {
    StrategyId strategy;
    double aw_12m_ma = 0.0;  // 12-month moving average universe AUM share
    double tswl = 1.0;       // target strategy weight limit
    double tsw = 0.0;        // min(tswl, aw_12m_ma)
    double sw = 0.0;         // realized strategy weight
    int target_fund_count = 0;
};

/// Amounts the rules wanted to move but could not place this month
/// (liquidity, notice, caps). They roll forward to later months.
struct UnplacedRecord {
    MonthId month;            // projected month the amount was meant for
    MonthId as_of;            // vintage that detected it
    StrategyId strategy;      // empty for cross-strategy leftovers
    double amount = 0.0;      // positive fraction of the index
    bool redemption = false;
    std::string note;
};

/// Revisions rejected or skipped while loading/applying NAV reports.
struct SkippedRevision {
    FundId fund;
    MonthId month;
    std::string reason;
};

/// Complete engine state for one index run: every ledger, the adjustment
/// schedule, notionals, targets and diagnostics. Value type; snapshot and
/// restore round-trip it exactly.
struct EngineState {
    EngineConfig config;
    std::map<FundId, FundRecord> funds;
    std::map<StrategyId, double> strategy_limits;       // TSWL per strategy
    std::vector<UniverseSnapshot> universe;             // ascending by month
    std::map<MonthId, MonthLedger> ledgers;
    std::vector<AdjustmentEntry> schedule;
    NotionalSchedule notionals;
    std::map<MonthId, std::map<StrategyId, StrategyTargets>> targets;
    std::map<MonthId, std::vector<ProjectionRecord>> projections; // by vintage
    std::map<MonthId, std::map<FundId, Usd>> executed;  // realized adjustment $ by effective month
    std::map<MonthId, std::map<FundId, Usd>> received;  // realized residual receipts by receipt month
    std::vector<UnplacedRecord> unplaced;
    std::map<MonthId, double> clamped_mass;             // preliminary-weight clamping per transition
    std::vector<SkippedRevision> skipped_revisions;

    MonthId first_month() const;
    MonthId last_month() const;
    const MonthLedger& ledger(MonthId m) const;
    MonthLedger& ledger(MonthId m);

    /// strategy of every fund that appears in `weights`.
    std::map<FundId, StrategyId> membership_of(const WeightVector& weights) const;
};

} // namespace hfindex
