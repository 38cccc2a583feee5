#include "hfindex/money.hpp"

#include <cmath>
#include <cstdio>

#include "hfindex/errors.hpp"

namespace hfindex {

Usd Usd::from_dollars(double dollars) {
    if (!std::isfinite(dollars)) {
        throw Error(ErrorKind::invariant_violation, "non-finite USD amount");
    }
    double cents = dollars * 100.0;
    double rounded = cents >= 0 ? std::floor(cents + 0.5) : std::ceil(cents - 0.5);
    return Usd(static_cast<std::int64_t>(rounded));
}

double Usd::ratio_to(Usd denom) const {
    if (denom.cents_ == 0) {
        throw Error(ErrorKind::zero_notional, "division by zero notional");
    }
    return static_cast<double>(cents_) / static_cast<double>(denom.cents_);
}

std::string to_string(Usd v) {
    std::int64_t c = v.cents();
    const char* sign = c < 0 ? "-" : "";
    if (c < 0) c = -c;
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%s%lld.%02lld", sign,
                  static_cast<long long>(c / 100), static_cast<long long>(c % 100));
    return buf;
}

Usd parse_usd(std::string_view text) {
    if (text.empty()) {
        throw Error(ErrorKind::parse_error, "empty USD amount");
    }
    char* end = nullptr;
    std::string owned(text);
    double dollars = std::strtod(owned.c_str(), &end);
    if (end != owned.c_str() + owned.size() || !std::isfinite(dollars)) {
        throw Error(ErrorKind::parse_error, "bad USD amount '" + owned + "'");
    }
    return Usd::from_dollars(dollars);
}

} // namespace hfindex
