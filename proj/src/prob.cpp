#include "ordalg/prob.hpp"

#include <algorithm>

#include "ordalg/arith.hpp"
#include "ordalg/error.hpp"

namespace ordalg {

namespace {

// n for Pn(n), 0 if d is not of that shape.
int p_depth(const StructDesc& d) {
  for (int n = 1; n <= 3; ++n) {
    if (d == StructDesc::Pn(n)) return n;
  }
  return 0;
}

int require_p(const StructDesc& d) {
  int n = p_depth(d);
  if (n == 0) fail(ErrorKind::Capability, "probability measures take values in P or Pn(n), n <= 3; got " + d.str());
  return n;
}

// Innermost residue of an element of Pn.
XReal mass_of(const Value& x) {
  const Value* v = &x;
  while (v->kind() == Value::Kind::Pair) v = &v->second();
  return v->as_real();
}

std::string show(const LevelTuple& t) {
  std::string s;
  for (std::size_t i = 0; i < t.size(); ++i) s += (i ? "," : "") + std::to_string(t[i]);
  return t.size() == 1 ? s : "(" + s + ")";
}

}  // namespace

LevelTuple level_tuple(const Value& x) {
  LevelTuple t;
  const Value* v = &x;
  while (v->kind() == Value::Kind::Pair) {
    t.push_back(int_level(*v));
    v = &v->second();
  }
  if (t.empty()) fail(ErrorKind::Domain, "level of " + x.str() + " is undefined");
  return t;
}

ProbabilityReport validate_probability(const LMeasure& m) {
  ProbabilityReport r;
  r.n = require_p(m.desc);
  for (const auto& v : m.values) {
    if (!v.is_zero()) r.level_mass[level_tuple(v)] = r.level_mass[level_tuple(v)] + mass_of(v);
  }

  r.empty_is_zero = measure_of(m, m.space.none()).is_zero();
  if (!r.empty_is_zero) r.problems.push_back("(i) nu(empty) is not 0");

  // (iii): the measure of the whole space is the fold of its atoms, in both orders.
  Value fwd = measure_of(m, m.space.all());
  Value bwd = Value::zero();
  for (auto it = m.values.rbegin(); it != m.values.rend(); ++it) bwd = add(m.desc, *it, bwd);
  r.additive = fwd == bwd;
  if (!r.additive) r.problems.push_back("(iii) additivity fails");

  if (r.n == 1) {
    r.unit_masses = true;
    for (const auto& [lvl, mass] : r.level_mass) {
      if (mass != XReal(1)) {
        r.unit_masses = false;
        r.problems.push_back("(ii) level " + show(lvl) + " has mass " + mass.str() + ", not 1");
      }
    }
    r.finite_depth = true;  // finitely many atoms
    if (!r.level_mass.empty()) {
      long long top = r.level_mass.rbegin()->first[0];
      long long bottom = r.level_mass.begin()->first[0];
      r.standard = top == 0 && static_cast<long long>(r.level_mass.size()) == top - bottom + 1;
    }
  } else {
    r.unit_masses = true;
    for (const auto& [lvl, mass] : r.level_mass) {
      if (std::any_of(lvl.begin(), lvl.end(), [](long long i) { return i > 0; })) {
        r.unit_masses = false;
        r.problems.push_back("(ii) level " + show(lvl) + " has a positive component");
      }
      if (XReal(1) < mass) {
        r.unit_masses = false;
        r.problems.push_back("(ii) level " + show(lvl) + " has mass " + mass.str() + " > 1");
      }
    }
    // (iv): every level tuple above an attained one, inside the box spanned by
    // the attained components and 0, is attained.
    r.finite_depth = true;
    if (!r.level_mass.empty()) {
      LevelTuple lo(r.n, 0);
      for (const auto& [lvl, mass] : r.level_mass) {
        for (int i = 0; i < r.n; ++i) lo[i] = std::min(lo[i], lvl[i]);
      }
      const LevelTuple& least = r.level_mass.begin()->first;
      LevelTuple j = lo;
      for (;;) {
        if (least < j && !r.level_mass.count(j)) {
          r.finite_depth = false;
          r.problems.push_back("(iv) level " + show(j) + " lies above " + show(least) + " but is not attained");
          break;
        }
        // Next tuple of the box in lexicographic order.
        int i = r.n - 1;
        while (i >= 0 && j[i] == 0) {
          j[i] = lo[i];
          --i;
        }
        if (i < 0) break;
        ++j[i];
      }
    }
    r.standard = r.finite_depth;
  }
  return r;
}

StandardForm standardize(const LMeasure& m) {
  if (require_p(m.desc) != 1) fail(ErrorKind::Capability, "standard form is defined for P-measures only");
  auto rep = validate_probability(m);
  if (!rep.ok()) fail(ErrorKind::Validation, "not a probability measure: " + rep.problems.front());
  LMeasure aligned = align_levels(m);
  auto ls = attained_levels(aligned);
  if (ls.empty()) fail(ErrorKind::Domain, "the zero measure has no standard form");
  LMeasure shifted = shift_levels(aligned, -ls.back());
  return {shifted, ls.back() - ls.front()};
}

long long depth(const LMeasure& m, const Event& e) {
  if (require_p(m.desc) != 1) fail(ErrorKind::Capability, "depth is defined for P-measures only");
  auto rep = validate_probability(m);
  if (!rep.ok() || !rep.standard) fail(ErrorKind::Validation, "depth needs a standard probability measure");
  Value v = measure_of(m, e);
  if (v.is_zero()) fail(ErrorKind::Domain, "an event of measure 0 has no depth");
  return -int_level(v);
}

Value cond_prob(const LMeasure& m, const Event& a, const Event& b) {
  require_p(m.desc);
  Value nb = measure_of(m, b);
  if (nb.is_zero()) fail(ErrorKind::Domain, "conditioning on an event of measure 0");
  return divide(m.desc, measure_of(m, a & b), nb);
}

Value prob(const LMeasure& m, const Event& a) { return cond_prob(m, a, m.space.all()); }

BayesTable bayes(const LMeasure& m, const std::vector<std::pair<std::string, Event>>& partition, const Event& b) {
  require_p(m.desc);
  if (partition.empty()) fail(ErrorKind::Validation, "empty partition");
  Event seen = m.space.none();
  for (const auto& [name, cell] : partition) {
    if (cell.size() != seen.size()) fail(ErrorKind::Validation, "cell '" + name + "' does not belong to this atom space");
    if ((seen & cell).any()) fail(ErrorKind::Validation, "cell '" + name + "' overlaps an earlier cell");
    seen |= cell;
  }
  if (!seen.all()) fail(ErrorKind::Validation, "the cells do not cover every atom");
  if (measure_of(m, b).is_zero()) fail(ErrorKind::Domain, "conditioning on an event of measure 0");

  BayesTable t;
  t.total = Value::zero();
  for (const auto& [name, cell] : partition) {
    if (measure_of(m, cell).is_zero()) fail(ErrorKind::Domain, "cell '" + name + "' has measure 0");
    BayesRow row;
    row.name = name;
    row.prior = prob(m, cell);
    row.likelihood = cond_prob(m, b, cell);
    row.joint = mul(m.desc, row.likelihood, row.prior);
    t.total = add(m.desc, t.total, row.joint);
    t.rows.push_back(std::move(row));
  }
  t.direct_total = prob(m, b);
  t.consistent = t.total == t.direct_total;
  for (auto& row : t.rows) {
    row.posterior = divide(m.desc, row.joint, t.total);
    row.direct = cond_prob(m, partition[&row - t.rows.data()].second, b);
    t.consistent = t.consistent && row.posterior == row.direct;
  }
  return t;
}

StandardForm normalize_from_density(const LMeasure& mu, const LFunction& f) {
  if (!(f.desc == mu.desc)) fail(ErrorKind::Shape, "density in " + f.desc.str() + " does not match " + mu.desc.str());
  if (f.values.size() != mu.space.size()) fail(ErrorKind::Validation, "the density needs one value per atom");
  if (!mu.desc.caps().is_semiring || !mu.desc.is_insertion() || !mu.desc.has_integer_levels()) {
    fail(ErrorKind::Capability, "densities need a semiring with integer levels, got " + mu.desc.str());
  }
  const StructDesc p = StructDesc::P();
  std::vector<Value> prod;
  std::map<long long, XReal> mass;
  for (std::size_t i = 0; i < f.values.size(); ++i) {
    check_shape(f.desc, f.values[i]);
    Value v = mul(mu.desc, f.values[i], mu.values[i]);
    if (v.is_top() || (!v.is_zero() && (v.second().kind() != Value::Kind::Real || v.second().as_real().is_inf()))) {
      fail(ErrorKind::NotRepresentable, "atom '" + mu.space.atoms()[i] + "' gets " + v.str() + ", which is not in P");
    }
    if (!v.is_zero()) mass[int_level(v)] = mass[int_level(v)] + v.second().as_real();
    prod.push_back(std::move(v));
  }
  std::vector<Value> out;
  for (const auto& v : prod) {
    if (v.is_zero()) {
      out.push_back(v);
      continue;
    }
    long long l = int_level(v);
    out.push_back(make_element(p, Value::integer(l), Value::real(xr_div(v.second().as_real(), mass[l]))));
  }
  return standardize(LMeasure(p, mu.space, std::move(out)));
}

}  // namespace ordalg
