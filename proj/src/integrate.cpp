#include "ordalg/integrate.hpp"

#include <algorithm>
#include <optional>

#include "ordalg/arith.hpp"
#include "ordalg/error.hpp"

namespace ordalg {

namespace {

void require_simple_shape(const StructDesc& d) {
  const bool ok = d.kind() == DescKind::Ins && d.has_integer_levels() && d.second().kind() == DescKind::Base &&
                  (d.second().base_kind() == BaseKind::Rc || d.second().base_kind() == BaseKind::Ro);
  if (!ok) fail(ErrorKind::Capability, "integration needs an insertion of N0 or Z over Rc or Ro, got " + d.str());
}

void require_sizes(const LMeasure& m, std::size_t n, const Event& a) {
  if (n != m.space.size()) fail(ErrorKind::Validation, "the integrand needs one value per atom");
  if (a.size() != m.space.size()) fail(ErrorKind::Validation, "event does not belong to this atom space");
}

Value shift(const StructDesc& d, const Value& x, long long k) {
  return mul(d, make_element(d, Value::integer(k), one(d.second())), x);
}

}  // namespace

Value integrate_real(const LMeasure& m, const std::vector<XReal>& f, const Event& a) {
  require_simple_shape(m.desc);
  require_sizes(m, f.size(), a);
  // Atoms that can contribute, i.e. f > 0 and nonzero measure.
  std::optional<long long> top_level;
  for (auto i = a.find_first(); i != Event::npos; i = a.find_next(i)) {
    const Value& v = m.values[i];
    if (f[i].is_zero() || v.is_zero()) continue;
    if (v.is_top()) return Value::top();  // every slice is inf there
    long long l = int_level(v);
    if (!top_level || l > *top_level) top_level = l;
  }
  if (!top_level) return Value::zero();
  // Levels above the top one integrate to 0; the top slice is the first nonzero.
  XReal total;
  for (auto i = a.find_first(); i != Event::npos; i = a.find_next(i)) {
    const Value& v = m.values[i];
    if (f[i].is_zero() || v.is_zero() || int_level(v) != *top_level) continue;
    total = total + f[i] * v.second().as_real();
  }
  if (total.is_inf() && m.desc.second().base_kind() == BaseKind::Ro) {
    fail(ErrorKind::NotRepresentable, "the integral has an infinite residue, outside " + m.desc.str());
  }
  return make_element(m.desc, Value::integer(*top_level), Value::real(total));
}

Value integrate_lvalued(const LMeasure& m, const LFunction& g, const Event& b) {
  require_simple_shape(m.desc);
  if (!(g.desc == m.desc)) {
    fail(ErrorKind::Shape, "integrand in " + g.desc.str() + " does not match the measure's " + m.desc.str());
  }
  require_sizes(m, g.values.size(), b);
  for (const auto& v : g.values) check_shape(g.desc, v);

  std::map<long long, Event> parts;  // B_k
  for (auto i = b.find_first(); i != Event::npos; i = b.find_next(i)) {
    const Value& v = g.values[i];
    if (v.is_zero()) continue;
    if (v.is_top()) {
      if (!m.values[i].is_zero()) return Value::top();
      continue;
    }
    auto [it, fresh] = parts.try_emplace(int_level(v), m.space.none());
    it->second.set(i);
  }
  Value acc = Value::zero();
  for (const auto& [k, bk] : parts) {
    std::vector<XReal> r(m.space.size());
    for (auto i = bk.find_first(); i != Event::npos; i = bk.find_next(i)) r[i] = g.values[i].second().as_real();
    Value inner = integrate_real(m, r, bk);
    if (inner.is_zero()) continue;
    acc = add(m.desc, acc, inner.is_top() ? inner : shift(m.desc, inner, k));
  }
  return acc;
}

SignedIntegral integrate_signed(const LMeasure& m, const LFunction& f, const Event& a) {
  if (f.desc.kind() != DescKind::Double || !(f.desc.first() == m.desc)) {
    fail(ErrorKind::Shape, "signed integrand must live in double(" + m.desc.str() + "), got " + f.desc.str());
  }
  require_sizes(m, f.values.size(), a);
  LFunction pos{m.desc, {}}, neg{m.desc, {}};
  for (const auto& v : f.values) {
    check_shape(f.desc, v);
    bool p = !v.is_zero() && !v.negative();
    bool n = !v.is_zero() && v.negative();
    pos.values.push_back(p ? v.magnitude() : Value::zero());
    neg.values.push_back(n ? v.magnitude() : Value::zero());
  }
  SignedIntegral out;
  out.positive = integrate_lvalued(m, pos, a);
  out.negative = integrate_lvalued(m, neg, a);
  const Value& P = out.positive;
  const Value& N = out.negative;
  out.value = double_add(f.desc, positive(P), negate(f.desc, positive(N)));
  if (N.is_zero()) {
    out.rule = "positive part only";
  } else if (P.is_zero()) {
    out.rule = "negative part only";
  } else if (P == N) {
    out.rule = "equal parts cancel";
  } else if (int_level(P) == int_level(N)) {
    out.rule = "equal levels, residues subtract";
  } else {
    out.rule = int_level(P) > int_level(N) ? "positive level dominates" : "negative level dominates";
  }
  return out;
}

}  // namespace ordalg
