#include "ordalg/random.hpp"

#include <map>

#include "ordalg/arith.hpp"
#include "ordalg/error.hpp"

namespace ordalg {

namespace {

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }
bool chance(Rng& rng, int percent) { return uniform(rng, 0, 99) < percent; }

bool integer_base(const StructDesc& d) {
  return d.kind() == DescKind::Base && (d.base_kind() == BaseKind::N0 || d.base_kind() == BaseKind::Z);
}

}  // namespace

XReal random_xreal(Rng& rng, bool allow_inf, bool allow_zero, const RandomSpec& spec) {
  if (allow_inf && chance(rng, spec.percent_inf)) return XReal::inf();
  if (allow_zero && chance(rng, spec.percent_zero)) return XReal();
  static const int dens[] = {1, 2, 3, 4, 6};
  return XReal(BigInt(uniform(rng, 1, 12)), BigInt(dens[uniform(rng, 0, 4)]));
}

namespace {

Value random_level(const StructDesc& a, Rng& rng, const RandomSpec& spec, bool finite);

Value random_any(const StructDesc& d, Rng& rng, const RandomSpec& spec, bool nonzero, bool finite) {
  if (!finite && d.caps().has_top && chance(rng, spec.percent_top)) return Value::top();
  if (!nonzero && chance(rng, spec.percent_zero)) return Value::zero();
  switch (d.kind()) {
    case DescKind::Base:
      switch (d.base_kind()) {
        case BaseKind::N0: return Value::integer(uniform(rng, 1, spec.int_max));
        case BaseKind::Z: {
          int n = uniform(rng, -spec.int_max, spec.int_max);
          if (n == 0) n = 1;
          return Value::integer(n);
        }
        case BaseKind::Rc: return Value::real(random_xreal(rng, !finite, false, spec));
        case BaseKind::Ro: return Value::real(random_xreal(rng, false, false, spec));
        case BaseKind::NBar0:
          if (!finite && chance(rng, spec.percent_inf)) return Value::real(XReal::inf());
          return Value::real(XReal(uniform(rng, 1, spec.int_max)));
      }
      break;
    case DescKind::SIns: {
      // Either component may be the zero of its structure, not both.
      Value l = random_level(d.first(), rng, spec, finite);
      Value r = random_any(d.second(), rng, spec, l.is_zero(), finite);
      return make_element(d, l, r);
    }
    case DescKind::Ins: {
      Value l = random_level(d.first(), rng, spec, finite);
      return make_element(d, l, random_any(d.second(), rng, spec, true, finite));
    }
    case DescKind::Mixed: {
      long long lo = d.mixed_lo().value_or(-spec.level_span);
      long long hi = d.mixed_hi().value_or(lo + 2 * spec.level_span);
      for (int tries = 0; tries < 64; ++tries) {
        long long l = std::uniform_int_distribution<long long>(lo, hi)(rng);
        if (auto b = d.mixed_at(l)) return make_element(d, Value::integer(l), random_any(*b, rng, spec, true, finite));
      }
      fail(ErrorKind::Domain, "no mapped level found in " + d.str());
    }
    case DescKind::Double:
      return Value::signed_value(chance(rng, 50), random_any(d.first(), rng, spec, true, finite));
  }
  fail(ErrorKind::Domain, "cannot sample " + d.str());
}

Value random_level(const StructDesc& a, Rng& rng, const RandomSpec& spec, bool finite) {
  if (integer_base(a)) {
    int lo = a.base_kind() == BaseKind::N0 ? 0 : -spec.level_span;
    return Value::integer(uniform(rng, lo, spec.level_span));
  }
  return random_any(a, rng, spec, false, finite);
}

}  // namespace

Value random_value(const StructDesc& d, Rng& rng, const RandomSpec& spec) { return random_any(d, rng, spec, false, false); }
Value random_nonzero(const StructDesc& d, Rng& rng, const RandomSpec& spec) {
  for (;;) {
    Value v = random_any(d, rng, spec, true, false);
    if (!v.is_zero()) return v;
  }
}
Value random_finite(const StructDesc& d, Rng& rng, const RandomSpec& spec) {
  for (;;) {
    Value v = random_any(d, rng, spec, true, true);
    if (!v.is_zero()) return v;
  }
}

Value random_unit(const StructDesc& d, Rng& rng, const RandomSpec& spec) {
  for (int tries = 0; tries < 1000; ++tries) {
    Value v = random_finite(d, rng, spec);
    if (is_unit(d, v)) return v;
  }
  fail(ErrorKind::Domain, "no units found in " + d.str());
}

StructDesc random_semigroup_base(Rng& rng) {
  static const BaseKind kinds[] = {BaseKind::N0, BaseKind::Rc, BaseKind::Ro, BaseKind::NBar0};
  return StructDesc::base(kinds[uniform(rng, 0, 3)]);
}

LMeasure random_measure(const StructDesc& d, std::size_t atoms, Rng& rng, const RandomSpec& spec) {
  std::vector<std::string> ids;
  std::vector<Value> values;
  for (std::size_t i = 0; i < atoms; ++i) {
    ids.push_back("a" + std::to_string(i));
    values.push_back(random_value(d, rng, spec));
  }
  return LMeasure(d, AtomSpace(ids), values);
}

LMeasure random_probability(std::size_t atoms, Rng& rng) {
  const StructDesc p = StructDesc::P();
  std::vector<std::string> ids;
  std::vector<std::pair<long long, XReal>> raw;
  std::map<long long, XReal> mass;
  for (std::size_t i = 0; i < atoms; ++i) {
    ids.push_back("a" + std::to_string(i));
    long long l = i == 0 ? 0 : -uniform(rng, 0, 2);
    XReal r = random_xreal(rng, false, i != 0);
    raw.push_back({l, r});
    mass[l] = mass[l] + r;
  }
  std::vector<Value> values;
  for (const auto& [l, r] : raw) {
    values.push_back(r.is_zero() ? Value::zero() : make_element(p, Value::integer(l), Value::real(xr_div(r, mass[l]))));
  }
  return LMeasure(p, AtomSpace(ids), values);
}

LTree random_tree(const StructDesc& d, std::size_t nodes, Rng& rng, const RandomSpec& spec) {
  std::vector<std::string> ns;
  std::vector<TreeEdge> es;
  for (std::size_t i = 0; i < nodes; ++i) {
    ns.push_back("n" + std::to_string(i));
    if (i > 0) {
      auto parent = std::uniform_int_distribution<std::size_t>(0, i - 1)(rng);
      es.push_back({ns[parent], ns[i], random_nonzero(d, rng, spec)});
    }
  }
  return LTree(d, ns, es);
}

}  // namespace ordalg
