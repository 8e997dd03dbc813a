#pragma once

#include <compare>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace ordalg {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Nonnegative exact rational extended with +infinity, i.e. an element of [0,inf].
///
/// Follows the conventions inf + a = inf, a * inf = inf for a > 0, and
/// 0 * inf = 0 so that 0 stays absorbing in the semiring [0,inf].
class XReal {
 public:
  XReal() = default;
  XReal(long long n);  // NOLINT(google-explicit-constructor)
  explicit XReal(const BigInt& n);
  explicit XReal(const Rational& q);
  XReal(const BigInt& num, const BigInt& den);

  static XReal inf();

  bool is_inf() const noexcept { return inf_; }
  bool is_zero() const noexcept { return !inf_ && q_ == 0; }
  bool is_integer() const;
  /// Finite value; throws Domain on inf.
  const Rational& rational() const;

  friend XReal operator+(const XReal& a, const XReal& b);
  friend XReal operator*(const XReal& a, const XReal& b);
  friend bool operator==(const XReal& a, const XReal& b) = default;
  friend std::strong_ordering operator<=>(const XReal& a, const XReal& b);

  /// Canonical literal: "p/q", "p" or "inf".
  std::string str() const;
  static XReal parse(std::string_view text);

 private:
  bool inf_ = false;
  Rational q_ = 0;
};

XReal xr_add(const XReal& a, const XReal& b);
XReal xr_mul(const XReal& a, const XReal& b);
/// Exact quotient a / b for finite a and finite b > 0.
XReal xr_div(const XReal& a, const XReal& b);
/// a - b for a >= b (inf - finite = inf). Used only by signed arithmetic.
XReal xr_sub(const XReal& a, const XReal& b);

}  // namespace ordalg
