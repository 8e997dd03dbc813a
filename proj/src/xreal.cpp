#include "ordalg/xreal.hpp"

#include <cctype>

#include "ordalg/error.hpp"

namespace ordalg {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Parse: return "parse";
    case ErrorKind::Usage: return "usage";
    case ErrorKind::Shape: return "shape";
    case ErrorKind::Capability: return "capability";
    case ErrorKind::Domain: return "domain";
    case ErrorKind::NotSummable: return "not-summable";
    case ErrorKind::NotRepresentable: return "not-representable";
    case ErrorKind::Validation: return "validation";
  }
  return "unknown";
}

XReal::XReal(long long n) : q_(n) {
  if (n < 0) fail(ErrorKind::Domain, "negative value in [0,inf]");
}

XReal::XReal(const BigInt& n) : q_(n) {
  if (n < 0) fail(ErrorKind::Domain, "negative value in [0,inf]");
}

XReal::XReal(const Rational& q) : q_(q) {
  if (q < 0) fail(ErrorKind::Domain, "negative value in [0,inf]");
}

XReal::XReal(const BigInt& num, const BigInt& den) {
  if (den == 0) fail(ErrorKind::Domain, "zero denominator");
  q_ = Rational(num, den);
  if (q_ < 0) fail(ErrorKind::Domain, "negative value in [0,inf]");
}

XReal XReal::inf() {
  XReal x;
  x.inf_ = true;
  return x;
}

bool XReal::is_integer() const { return !inf_ && denominator(q_) == 1; }

const Rational& XReal::rational() const {
  if (inf_) fail(ErrorKind::Domain, "inf has no rational value");
  return q_;
}

XReal operator+(const XReal& a, const XReal& b) {
  if (a.inf_ || b.inf_) return XReal::inf();
  return XReal(a.q_ + b.q_);
}

XReal operator*(const XReal& a, const XReal& b) {
  if (a.is_zero() || b.is_zero()) return XReal();
  if (a.inf_ || b.inf_) return XReal::inf();
  return XReal(a.q_ * b.q_);
}

std::strong_ordering operator<=>(const XReal& a, const XReal& b) {
  if (a.inf_ || b.inf_) return a.inf_ <=> b.inf_;
  if (a.q_ < b.q_) return std::strong_ordering::less;
  if (b.q_ < a.q_) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string XReal::str() const {
  if (inf_) return "inf";
  if (denominator(q_) == 1) return numerator(q_).str();
  return numerator(q_).str() + "/" + denominator(q_).str();
}

namespace {

BigInt parse_digits(std::string_view text, std::size_t offset) {
  if (text.empty()) throw ParseError("expected digits", offset);
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
      throw ParseError("unexpected character '" + std::string(1, text[i]) + "' in number", offset + i);
    }
  }
  return BigInt(std::string(text));
}

}  // namespace

XReal XReal::parse(std::string_view text) {
  if (text == "inf") return inf();
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return XReal(parse_digits(text, 0));
  BigInt num = parse_digits(text.substr(0, slash), 0);
  BigInt den = parse_digits(text.substr(slash + 1), slash + 1);
  if (den == 0) throw ParseError("zero denominator", slash + 1);
  return XReal(num, den);
}

XReal xr_add(const XReal& a, const XReal& b) { return a + b; }
XReal xr_mul(const XReal& a, const XReal& b) { return a * b; }

XReal xr_div(const XReal& a, const XReal& b) {
  if (a.is_inf() || b.is_inf()) fail(ErrorKind::Domain, "division involving inf");
  if (b.is_zero()) fail(ErrorKind::Domain, "division by zero");
  return XReal(a.rational() / b.rational());
}

XReal xr_sub(const XReal& a, const XReal& b) {
  if (b.is_inf()) fail(ErrorKind::Domain, "subtracting inf");
  if (a.is_inf()) return a;
  if (a < b) fail(ErrorKind::Domain, "negative difference in [0,inf]");
  return XReal(a.rational() - b.rational());
}

}  // namespace ordalg
