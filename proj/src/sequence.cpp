#include "ordalg/sequence.hpp"

#include <optional>

#include "ordalg/arith.hpp"
#include "ordalg/error.hpp"

namespace ordalg {

namespace {

bool is_level_structure(const StructDesc& d) {
  return d.kind() == DescKind::SIns || d.kind() == DescKind::Ins || d.kind() == DescKind::Mixed;
}

StructDesc level_desc(const StructDesc& d) {
  return d.kind() == DescKind::Mixed ? StructDesc::base(d.base_kind()) : d.first();
}

StructDesc residue_desc(const StructDesc& d, const Value& lvl) {
  if (d.kind() != DescKind::Mixed) return d.second();
  BigInt l = lvl.is_zero() ? BigInt(0) : lvl.as_int();
  auto b = d.mixed_at(l.convert_to<long long>());
  if (!b) fail(ErrorKind::Shape, "level " + l.str() + " outside " + d.str());
  return *b;
}

// Level/residue of an element of a level structure; for s-insertions 0 is (0,0).
Value level_part(const StructDesc& d, const Value& v) { return d.kind() == DescKind::SIns && v.is_zero() ? Value::zero() : v.first(); }
Value residue_part(const StructDesc& d, const Value& v) { return d.kind() == DescKind::SIns && v.is_zero() ? Value::zero() : v.second(); }

// Terms that never contribute: 0 in every structure.
bool skip(const StructDesc& d, const Value& v) { return v.is_zero() && d.kind() != DescKind::SIns; }

void require_integer_levels(const StructDesc& d, const char* what) {
  if (!is_level_structure(d) || !d.has_integer_levels()) {
    fail(ErrorKind::Shape, std::string(what) + " needs a structure with integer levels, got " + d.str());
  }
}

void require_numeric_residue(const StructDesc& b) {
  if (b.kind() != DescKind::Base || b.base_kind() == BaseKind::Z || b.base_kind() == BaseKind::N0) {
    if (b.kind() == DescKind::Base && b.base_kind() == BaseKind::N0) return;
    fail(ErrorKind::Shape, "a residue ramp needs a numeric residue structure, got " + b.str());
  }
}

// A residue-ramp term as an element of the numeric residue structure b.
Value ramp_term(const StructDesc& b, const XReal& x) {
  if (b.base_kind() == BaseKind::N0) {
    if (!x.is_integer()) fail(ErrorKind::Shape, "a residue ramp in N0 needs integer terms, got " + x.str());
    return Value::integer(BigInt(boost::multiprecision::numerator(x.rational())));
  }
  return Value::real(x);
}

void check_seq_shapes(const StructDesc& d, const SeqGen& s) {
  for (const auto& v : s.head) check_shape(d, v);
  if (auto* c = std::get_if<ConstantRepeat>(&s.tail)) check_shape(d, c->value);
  if (auto* r = std::get_if<LevelRamp>(&s.tail)) {
    require_integer_levels(d, "a level ramp");
    if (r->step <= 0) fail(ErrorKind::Shape, "a level ramp needs a positive step");
    if (d.first().base_kind() == BaseKind::N0 && r->start < 0) fail(ErrorKind::Shape, "negative level in N0");
    check_shape(d, make_element(d, Value::integer(r->start), r->residue));
  }
  if (auto* r = std::get_if<ResidueRamp>(&s.tail)) {
    if (!is_level_structure(d)) fail(ErrorKind::Shape, "a residue ramp needs a level structure, got " + d.str());
    if (r->step.is_zero() || r->step.is_inf() || r->start.is_inf()) {
      fail(ErrorKind::Shape, "a residue ramp needs a finite start and a positive finite step");
    }
    StructDesc b = residue_desc(d, r->level);
    require_numeric_residue(b);
    ramp_term(b, r->start);
    check_shape(d, make_element(d, r->level, ramp_term(b, r->start + r->step)));
  }
}

// Sum of countably many copies of a positive element of a base structure.
Value repeat_sum_base(const StructDesc& d) {
  if (d.caps().has_greatest) return Value::real(XReal::inf());
  fail(ErrorKind::NotSummable, "infinitely many positive terms diverge in " + d.str());
}

}  // namespace

Value sum_finite(const StructDesc& d, std::span<const Value> xs) {
  Value acc = Value::zero();
  for (const auto& x : xs) acc = add(d, acc, x);
  return acc;
}

Value sum_sequence(const StructDesc& d, const SeqGen& s) {
  if (d.kind() == DescKind::Double) fail(ErrorKind::Capability, "countable sums are not defined in " + d.str());
  if (d.kind() == DescKind::Base && d.base_kind() == BaseKind::Z) {
    fail(ErrorKind::Capability, "countable sums need an ordered semigroup, got Z");
  }
  check_seq_shapes(d, s);

  for (const auto& v : s.head) {
    if (v.is_top()) return Value::top();
  }
  if (auto* c = std::get_if<ConstantRepeat>(&s.tail); c && c->value.is_top()) return Value::top();

  if (std::holds_alternative<LevelRamp>(s.tail)) {
    if (d.caps().has_top) return Value::top();
    fail(ErrorKind::NotSummable, "summand levels are unbounded in " + d.str());
  }

  if (d.kind() == DescKind::Base) {
    Value acc = sum_finite(d, s.head);
    if (auto* c = std::get_if<ConstantRepeat>(&s.tail); c && !c->value.is_zero()) acc = add(d, acc, repeat_sum_base(d));
    return acc;
  }

  // Greatest level among the contributing terms.
  const StructDesc a = level_desc(d);
  std::optional<Value> top_level;
  auto consider = [&](const Value& lvl) {
    if (!top_level || cmp(a, lvl, *top_level) > 0) top_level = lvl;
  };
  for (const auto& v : s.head) {
    if (!skip(d, v)) consider(level_part(d, v));
  }
  const ConstantRepeat* repeat = std::get_if<ConstantRepeat>(&s.tail);
  if (repeat && skip(d, repeat->value)) repeat = nullptr;
  if (repeat) consider(level_part(d, repeat->value));
  const ResidueRamp* ramp = std::get_if<ResidueRamp>(&s.tail);
  if (ramp) consider(ramp->level);
  if (!top_level) return Value::zero();

  const Value& m = *top_level;
  const StructDesc b = residue_desc(d, m);
  SeqGen residues;
  for (const auto& v : s.head) {
    if (!skip(d, v) && cmp(a, level_part(d, v), m) == 0) residues.head.push_back(residue_part(d, v));
  }
  if (repeat && cmp(a, level_part(d, repeat->value), m) == 0) {
    residues.tail = ConstantRepeat{residue_part(d, repeat->value)};
  }
  Value total = (ramp && cmp(a, ramp->level, m) == 0)
                    ? add(b, sum_finite(b, residues.head), repeat_sum_base(b))
                    : sum_sequence(b, residues);
  return make_element(d, m, total);
}

Value sup(const StructDesc& d, std::span<const Value> xs) {
  Value best = Value::zero();
  bool first = true;
  for (const auto& x : xs) {
    check_shape(d, x);
    if (first || cmp(d, x, best) > 0) best = x;
    first = false;
  }
  return best;
}

Value sup(const StructDesc& d, const SeqGen& s) {
  if (d.kind() == DescKind::Double) fail(ErrorKind::Capability, "suprema of countable sets are not supported in " + d.str());
  check_seq_shapes(d, s);
  for (const auto& v : s.head) {
    if (v.is_top()) return Value::top();
  }
  if (auto* c = std::get_if<ConstantRepeat>(&s.tail)) {
    std::vector<Value> all = s.head;
    all.push_back(c->value);
    return sup(d, all);
  }
  if (std::holds_alternative<std::monostate>(s.tail)) return sup(d, s.head);
  if (std::holds_alternative<LevelRamp>(s.tail)) {
    if (d.caps().has_top) return Value::top();
    fail(ErrorKind::NotRepresentable, "the set is not bounded above in " + d.str());
  }

  const auto& ramp = std::get<ResidueRamp>(s.tail);
  const StructDesc a = level_desc(d);
  Value m = ramp.level;
  for (const auto& v : s.head) {
    if (!skip(d, v) && cmp(a, level_part(d, v), m) > 0) m = level_part(d, v);
  }
  if (cmp(a, m, ramp.level) != 0) {
    // The unbounded residues sit below the greatest level: finite problem.
    return sup(d, s.head);
  }
  const StructDesc b = residue_desc(d, m);
  if (b.caps().has_greatest) {
    // Case (i): the residues are bounded by the greatest element of B.
    Value greatest = b.caps().has_top ? Value::top() : Value::real(XReal::inf());
    return make_element(d, m, greatest);
  }
  if (b.caps().has_least_positive && d.has_integer_levels()) {
    // Case (ii): every element at level M is below (M+1, p).
    BigInt next = (m.is_zero() ? BigInt(0) : m.as_int()) + 1;
    Value lvl = Value::integer(next);
    if (d.kind() == DescKind::Mixed) {
      auto nb = d.mixed_at(next.convert_to<long long>());
      if (!nb || !nb->caps().has_least_positive) {
        fail(ErrorKind::NotRepresentable, "no least upper bound above level " + m.str() + " in " + d.str());
      }
      return make_element(d, lvl, Value::integer(1));
    }
    Value p = b.kind() == DescKind::Base && b.base_kind() == BaseKind::N0 ? Value::integer(1) : Value::real(XReal(1));
    return make_element(d, lvl, p);
  }
  fail(ErrorKind::NotRepresentable,
       "residues at level " + m.str() + " are unbounded and " + b.str() + " has neither a greatest nor a least positive element");
}

}  // namespace ordalg
