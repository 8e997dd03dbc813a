#include "ordalg/arith.hpp"

#include <utility>

#include "ordalg/error.hpp"

namespace ordalg {

namespace {

using K = Value::Kind;

bool is_integer_base(const StructDesc& d) {
  return d.kind() == DescKind::Base && (d.base_kind() == BaseKind::N0 || d.base_kind() == BaseKind::Z);
}

BigInt int_of(const Value& v) { return v.is_zero() ? BigInt(0) : v.as_int(); }
XReal real_of(const Value& v) { return v.is_zero() ? XReal() : v.as_real(); }

std::strong_ordering order_of(const BigInt& a, const BigInt& b) {
  if (a < b) return std::strong_ordering::less;
  if (b < a) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

// Residue structure of an insertion-like descriptor at a given level.
StructDesc residue_desc(const StructDesc& d, const Value& lvl) {
  if (d.kind() != DescKind::Mixed) return d.second();
  auto b = d.mixed_at(int_of(lvl).convert_to<long long>());
  if (!b) fail(ErrorKind::Shape, "level " + lvl.str() + " outside " + d.str());
  return *b;
}

StructDesc level_desc(const StructDesc& d) {
  return d.kind() == DescKind::Mixed ? StructDesc::base(d.base_kind()) : d.first();
}

// Components of an element of an s-insertion; 0 is (0,0).
std::pair<Value, Value> components(const Value& x) {
  if (x.is_zero()) return {Value::zero(), Value::zero()};
  return {x.first(), x.second()};
}

void require_double_support(const StructDesc& d) {
  if (d.kind() != DescKind::Double) fail(ErrorKind::Capability, d.str() + " is not a double");
  const StructDesc& l = d.first();
  bool ok = l.kind() == DescKind::Ins && !l.bar() && l.has_integer_levels() &&
            l.second().kind() == DescKind::Base &&
            (l.second().base_kind() == BaseKind::Rc || l.second().base_kind() == BaseKind::Ro);
  if (!ok) fail(ErrorKind::Capability, "signed addition is only defined for doubles of S, O and P, not " + d.str());
}

}  // namespace

std::strong_ordering cmp(const StructDesc& d, const Value& x, const Value& y) {
  switch (d.kind()) {
    case DescKind::Base:
      if (is_integer_base(d)) return order_of(int_of(x), int_of(y));
      return real_of(x) <=> real_of(y);
    case DescKind::Double: {
      auto sign = [](const Value& v) { return v.is_zero() ? 0 : (v.negative() ? -1 : 1); };
      int sx = sign(x), sy = sign(y);
      if (sx != sy) return sx <=> sy;
      if (sx == 0) return std::strong_ordering::equal;
      auto c = cmp(d.first(), x.magnitude(), y.magnitude());
      return sx > 0 ? c : 0 <=> c;
    }
    default: break;
  }
  if (x.is_top() || y.is_top()) return x.is_top() <=> y.is_top();
  if (d.kind() == DescKind::SIns) {
    auto [g, s] = components(x);
    auto [h, t] = components(y);
    if (auto c = cmp(d.first(), g, h); c != 0) return c;
    return cmp(d.second(), s, t);
  }
  if (x.is_zero() || y.is_zero()) return !x.is_zero() <=> !y.is_zero();
  const StructDesc a = level_desc(d);
  if (auto c = cmp(a, x.first(), y.first()); c != 0) return c;
  return cmp(residue_desc(d, x.first()), x.second(), y.second());
}

const Value& max_of(const StructDesc& d, const Value& x, const Value& y) { return cmp(d, x, y) < 0 ? y : x; }

Value make_element(const StructDesc& d, Value lvl, Value res) {
  if (d.kind() == DescKind::SIns) {
    if (lvl.is_zero() && res.is_zero()) return Value::zero();
  } else if (d.kind() == DescKind::Ins || d.kind() == DescKind::Mixed) {
    if (res.is_zero()) fail(ErrorKind::Shape, "insertion removes the zero of the residue structure");
  } else {
    fail(ErrorKind::Shape, d.str() + " has no pairs");
  }
  return Value::pair(std::move(lvl), std::move(res));
}

Value add(const StructDesc& d, const Value& x, const Value& y) {
  switch (d.kind()) {
    case DescKind::Base:
      if (is_integer_base(d)) return Value::integer(int_of(x) + int_of(y));
      return Value::real(real_of(x) + real_of(y));
    case DescKind::Double: return double_add(d, x, y);
    default: break;
  }
  if (x.is_top() || y.is_top()) return Value::top();
  if (d.kind() == DescKind::SIns) {
    auto [g, s] = components(x);
    auto [h, t] = components(y);
    auto c = cmp(d.first(), g, h);
    if (c > 0) return x;
    if (c < 0) return y;
    return make_element(d, g, add(d.second(), s, t));
  }
  if (x.is_zero()) return y;
  if (y.is_zero()) return x;
  auto c = cmp(level_desc(d), x.first(), y.first());
  if (c > 0) return x;
  if (c < 0) return y;
  return make_element(d, x.first(), add(residue_desc(d, x.first()), x.second(), y.second()));
}

Value mul(const StructDesc& d, const Value& x, const Value& y) {
  if (!d.caps().is_semiring) fail(ErrorKind::Capability, d.str() + " has no multiplication");
  if (d.kind() == DescKind::Base) {
    if (is_integer_base(d)) return Value::integer(int_of(x) * int_of(y));
    return Value::real(real_of(x) * real_of(y));
  }
  if (x.is_zero() || y.is_zero()) return Value::zero();
  if (x.is_top() || y.is_top()) return Value::top();
  return make_element(d, add(d.first(), x.first(), y.first()), mul(d.second(), x.second(), y.second()));
}

Value one(const StructDesc& d) {
  if (!d.caps().is_semiring) fail(ErrorKind::Capability, d.str() + " has no multiplicative identity");
  if (d.kind() == DescKind::Base) {
    return is_integer_base(d) ? Value::integer(1) : Value::real(XReal(1));
  }
  return make_element(d, Value::zero(), one(d.second()));
}

Value inv(const StructDesc& d, const Value& x) {
  if (!d.caps().is_semifield) fail(ErrorKind::Capability, d.str() + " is not a semifield");
  if (x.is_zero()) fail(ErrorKind::Domain, "0 has no multiplicative inverse");
  return unit_inverse(d, x);
}

Value divide(const StructDesc& d, const Value& x, const Value& y) { return mul(d, x, inv(d, y)); }

bool is_unit(const StructDesc& d, const Value& x) {
  if (!d.caps().is_semiring || x.is_zero() || x.is_top()) return false;
  if (d.kind() == DescKind::Base) {
    switch (d.base_kind()) {
      case BaseKind::N0: return x.as_int() == 1;
      case BaseKind::NBar0: return x.as_real() == XReal(1);
      case BaseKind::Rc:
      case BaseKind::Ro: return !x.as_real().is_inf();
      case BaseKind::Z: return false;
    }
  }
  // The level must be invertible under addition in A: any integer in Z, only 0 otherwise.
  const StructDesc& a = d.first();
  bool level_ok = x.first().is_zero() || (a.kind() == DescKind::Base && a.base_kind() == BaseKind::Z);
  return level_ok && is_unit(d.second(), x.second());
}

Value unit_inverse(const StructDesc& d, const Value& x) {
  if (!is_unit(d, x)) fail(ErrorKind::Domain, x.str() + " is not invertible in " + d.str());
  if (d.kind() == DescKind::Base) {
    if (is_integer_base(d)) return x;
    return Value::real(xr_div(XReal(1), x.as_real()));
  }
  Value lvl = x.first().is_zero() ? Value::zero() : Value::integer(-x.first().as_int());
  return make_element(d, std::move(lvl), unit_inverse(d.second(), x.second()));
}

const Value& level(const Value& x) {
  if (x.is_zero()) fail(ErrorKind::Domain, "the level of 0 is undefined");
  if (x.is_top()) fail(ErrorKind::Domain, "the level of top is undefined");
  return x.first();
}

Value residue(const Value& x) {
  if (x.is_zero()) return Value::zero();
  if (x.is_top()) fail(ErrorKind::Domain, "the residue of top is undefined");
  return x.second();
}

// --- doubles ---------------------------------------------------------------

Value positive(const Value& magnitude) {
  if (magnitude.is_zero()) return Value::zero();
  return Value::signed_value(false, magnitude);
}

Value negate(const StructDesc& d, const Value& x) {
  if (d.kind() != DescKind::Double) fail(ErrorKind::Capability, d.str() + " has no negation");
  if (x.is_zero()) return x;
  return Value::signed_value(!x.negative(), x.magnitude());
}

Value double_add(const StructDesc& d, const Value& x, const Value& y) {
  require_double_support(d);
  if (x.is_zero()) return y;
  if (y.is_zero()) return x;
  const StructDesc& l = d.first();
  if (x.negative() == y.negative()) {
    return Value::signed_value(x.negative(), add(l, x.magnitude(), y.magnitude()));
  }
  const Value& p = x.negative() ? y.magnitude() : x.magnitude();
  const Value& n = x.negative() ? x.magnitude() : y.magnitude();
  auto c = cmp(l.first(), p.first(), n.first());
  if (c > 0) return Value::signed_value(false, p);
  if (c < 0) return Value::signed_value(true, n);
  const XReal& s = p.second().as_real();
  const XReal& t = n.second().as_real();
  if (s == t) return Value::zero();
  if (s > t) return Value::signed_value(false, Value::pair(p.first(), Value::real(xr_sub(s, t))));
  return Value::signed_value(true, Value::pair(p.first(), Value::real(xr_sub(t, s))));
}

// --- s-insertion reassociation ----------------------------------------------

StructDesc siv_assoc_target(const StructDesc& d) {
  if (d.kind() != DescKind::SIns || d.bar() || d.second().kind() != DescKind::SIns || d.second().bar()) {
    fail(ErrorKind::Shape, "expected A \\/ (B \\/ C), got " + d.str());
  }
  const StructDesc& bc = d.second();
  return StructDesc::s_insert(StructDesc::s_insert(d.first(), bc.first()), bc.second());
}

Value siv_assoc_iso(const StructDesc& d, const Value& x) {
  StructDesc target = siv_assoc_target(d);
  check_shape(d, x);
  auto [a, bc] = components(x);
  auto [b, c] = components(bc);
  return make_element(target, make_element(target.first(), a, b), c);
}

Value siv_assoc_iso_inverse(const StructDesc& target, const Value& x) {
  if (target.kind() != DescKind::SIns || target.first().kind() != DescKind::SIns) {
    fail(ErrorKind::Shape, "expected (A \\/ B) \\/ C, got " + target.str());
  }
  check_shape(target, x);
  StructDesc inner = StructDesc::s_insert(target.first().second(), target.second());
  StructDesc source = StructDesc::s_insert(target.first().first(), inner);
  auto [ab, c] = components(x);
  auto [a, b] = components(ab);
  return make_element(source, a, make_element(inner, b, c));
}

// --- vectors ----------------------------------------------------------------

OVector scalar_mul_vec(const Value& lambda, const OVector& w) {
  check_shape(w.desc, lambda);
  OVector out{w.desc, {}};
  out.entries.reserve(w.entries.size());
  for (const auto& e : w.entries) {
    check_shape(w.desc, e);
    out.entries.push_back(mul(w.desc, lambda, e));
  }
  return out;
}

bool is_lattice_point(const OVector& w) {
  if (w.entries.empty()) return false;
  for (const auto& e : w.entries) {
    if (e.kind() != Value::Kind::Pair || e.second().kind() != Value::Kind::Real || !e.second().as_real().is_inf()) {
      return false;
    }
  }
  return true;
}

}  // namespace ordalg
