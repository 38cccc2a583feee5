#include "hfindex/ledger.hpp"

#include "hfindex/errors.hpp"

namespace hfindex {

const char* to_string(AdjustmentReason reason) {
    switch (reason) {
    case AdjustmentReason::inflow: return "inflow";
    case AdjustmentReason::outflow: return "outflow";
    case AdjustmentReason::strategy_cap: return "strategy_cap";
    case AdjustmentReason::fund_cap: return "fund_cap";
    case AdjustmentReason::fund_ineligible: return "fund_ineligible";
    case AdjustmentReason::count_shortfall: return "count_shortfall";
    }
    return "unknown";
}

AdjustmentReason parse_adjustment_reason(const std::string& text) {
    if (text == "inflow") return AdjustmentReason::inflow;
    if (text == "outflow") return AdjustmentReason::outflow;
    if (text == "strategy_cap") return AdjustmentReason::strategy_cap;
    if (text == "fund_cap") return AdjustmentReason::fund_cap;
    if (text == "fund_ineligible") return AdjustmentReason::fund_ineligible;
    if (text == "count_shortfall") return AdjustmentReason::count_shortfall;
    throw Error(ErrorKind::parse_error, "unknown adjustment reason '" + text + "'");
}

Usd NotionalSchedule::at_vintage(MonthId m, MonthId vintage) const {
    if (m <= vintage) {
        auto it = actual.find(m);
        if (it != actual.end()) return it->second;
    }
    // Freshest estimate made at or before the vintage.
    std::optional<Usd> best;
    MonthId best_vintage{};
    for (const auto& [key, value] : estimates) {
        if (key.first == m && key.second <= vintage) {
            if (!best || key.second >= best_vintage) {
                best = value;
                best_vintage = key.second;
            }
        }
    }
    if (best) return *best;
    // Flat extrapolation of the last value known at this vintage.
    std::optional<Usd> last;
    MonthId last_month{};
    for (const auto& [am, value] : actual) {
        if (am <= vintage && am <= m && (!last || am >= last_month)) {
            last = value;
            last_month = am;
        }
    }
    for (const auto& [key, value] : estimates) {
        if (key.second <= vintage && key.first <= m && (!last || key.first >= last_month)) {
            last = value;
            last_month = key.first;
        }
    }
    if (last) return *last;
    throw Error(ErrorKind::insufficient_data,
                "no notional data usable for " + to_string(m) + " at vintage " + to_string(vintage));
}

MonthId EngineState::first_month() const {
    if (ledgers.empty()) throw Error(ErrorKind::insufficient_data, "no ledgers");
    return ledgers.begin()->first;
}

MonthId EngineState::last_month() const {
    if (ledgers.empty()) throw Error(ErrorKind::insufficient_data, "no ledgers");
    return ledgers.rbegin()->first;
}

const MonthLedger& EngineState::ledger(MonthId m) const {
    auto it = ledgers.find(m);
    if (it == ledgers.end()) {
        throw Error(ErrorKind::insufficient_data, "no ledger for " + to_string(m));
    }
    return it->second;
}

MonthLedger& EngineState::ledger(MonthId m) {
    auto it = ledgers.find(m);
    if (it == ledgers.end()) {
        throw Error(ErrorKind::insufficient_data, "no ledger for " + to_string(m));
    }
    return it->second;
}

std::map<FundId, StrategyId> EngineState::membership_of(const WeightVector& weights) const {
    std::map<FundId, StrategyId> membership;
    for (const auto& [fund, w] : weights) {
        auto it = funds.find(fund);
        if (it == funds.end()) {
            throw Error(ErrorKind::missing_strategy, "fund '" + fund + "' not in universe");
        }
        membership[fund] = it->second.strategy;
    }
    return membership;
}

} // namespace hfindex
