#pragma once

#include <stdexcept>
#include <string>

namespace hfindex {

/// Error taxonomy shared by all engines. Kinds map onto CLI exit codes:
/// input/configuration problems exit 1, violated runtime invariants exit 2.
enum class ErrorKind {
    invalid_calendar,
    invariant_violation,
    incomplete_data,
    level_collapse,
    degenerate_denominator,
    conservation_failure,
    finalized_month,
    zero_notional,
    empty_index,
    insufficient_data,
    missing_strategy,
    no_eligible_funds,
    parse_error,
    schema_error,
    version_mismatch,
    io_error,
};

class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

    /// True for errors caused by bad inputs rather than broken internal state.
    bool is_input_error() const {
        switch (kind_) {
        case ErrorKind::parse_error:
        case ErrorKind::schema_error:
        case ErrorKind::io_error:
        case ErrorKind::version_mismatch:
        case ErrorKind::insufficient_data:
        case ErrorKind::invalid_calendar:
            return true;
        default:
            return false;
        }
    }

  private:
    ErrorKind kind_;
};

} // namespace hfindex
