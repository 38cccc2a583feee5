#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace hfindex {

/// USD amount held as integer cents so that notional flow accounting is
/// exact. Weight math stays in doubles; the boundary between the two is
/// `scaled_by` / `ratio`.
class Usd {
  public:
    constexpr Usd() = default;

    static constexpr Usd from_cents(std::int64_t cents) { return Usd(cents); }
    static Usd from_dollars(double dollars); // rounds half away from zero

    constexpr std::int64_t cents() const { return cents_; }
    double dollars() const { return static_cast<double>(cents_) / 100.0; }

    constexpr bool is_zero() const { return cents_ == 0; }

    constexpr Usd operator+(Usd other) const { return Usd(cents_ + other.cents_); }
    constexpr Usd operator-(Usd other) const { return Usd(cents_ - other.cents_); }
    constexpr Usd operator-() const { return Usd(-cents_); }
    Usd& operator+=(Usd other) { cents_ += other.cents_; return *this; }
    Usd& operator-=(Usd other) { cents_ -= other.cents_; return *this; }

    auto operator<=>(const Usd&) const = default;

    /// this * factor, rounded to the nearest cent.
    Usd scaled_by(double factor) const { return from_dollars(dollars() * factor); }

    /// this / denom as a dimensionless fraction.
    double ratio_to(Usd denom) const;

    Usd abs() const { return Usd(cents_ < 0 ? -cents_ : cents_); }

  private:
    constexpr explicit Usd(std::int64_t cents) : cents_(cents) {}
    std::int64_t cents_ = 0;
};

/// Canonical text form: dollars with exactly two decimals ("-12345.06").
std::string to_string(Usd v);
Usd parse_usd(std::string_view text);

inline Usd usd(double dollars) { return Usd::from_dollars(dollars); }

} // namespace hfindex
