#include "ordalg/weights.hpp"

#include <algorithm>
#include <set>

#include "ordalg/arith.hpp"
#include "ordalg/error.hpp"

namespace ordalg {

void BranchedGraph::validate() const {
  std::set<std::string> known(sectors.begin(), sectors.end());
  if (known.size() != sectors.size()) fail(ErrorKind::Validation, "duplicate sector");
  std::set<SectorEnd> used;
  for (std::size_t i = 0; i < switches.size(); ++i) {
    const std::string where = "switch " + std::to_string(i + 1);
    if (switches[i].side1.empty() || switches[i].side2.empty()) fail(ErrorKind::Validation, where + " has an empty side");
    for (const auto* side : {&switches[i].side1, &switches[i].side2}) {
      for (const auto& e : *side) {
        if (!known.count(e.sector)) fail(ErrorKind::Validation, where + ": unknown sector '" + e.sector + "'");
        if (e.end != "start" && e.end != "end") {
          fail(ErrorKind::Validation, where + ": end tag must be start or end, got '" + e.end + "'");
        }
        if (!used.insert(e).second) fail(ErrorKind::Validation, where + ": " + e.sector + "." + e.end + " is used twice");
      }
    }
  }
}

Value Cocycle::multiplier(const StructDesc& d, const SectorEnd& at) const {
  for (const auto& c : crossings) {
    if (c.at == at) return c.multiplier;
  }
  return one(d);
}

namespace {

void check_system(const BranchedGraph& g, const WeightSystem& w, const Cocycle& c) {
  g.validate();
  if (!w.desc.caps().is_semiring) fail(ErrorKind::Capability, "weights need a semiring, got " + w.desc.str());
  std::set<std::string> known(g.sectors.begin(), g.sectors.end());
  for (const auto& [s, v] : w.weight) {
    if (!known.count(s)) fail(ErrorKind::Validation, "weight for unknown sector '" + s + "'");
    check_shape(w.desc, v);
  }
  std::set<SectorEnd> seen;
  for (const auto& x : c.crossings) {
    if (!known.count(x.at.sector)) fail(ErrorKind::Validation, "crossing on unknown sector '" + x.at.sector + "'");
    if (!seen.insert(x.at).second) fail(ErrorKind::Validation, "two crossings on " + x.at.sector + "." + x.at.end);
    check_shape(w.desc, x.multiplier);
    if (!is_unit(w.desc, x.multiplier)) {
      fail(ErrorKind::Validation, "multiplier " + x.multiplier.str() + " is not invertible in " + w.desc.str());
    }
  }
}

Value weight_of(const WeightSystem& w, const std::string& sector) {
  auto it = w.weight.find(sector);
  return it == w.weight.end() ? Value::zero() : it->second;
}

}  // namespace

BranchReport check_branch_equations(const BranchedGraph& g, const WeightSystem& w, const Cocycle& c) {
  check_system(g, w, c);
  BranchReport r;
  r.ok = true;
  for (const auto& sw : g.switches) {
    auto side_sum = [&](const std::vector<SectorEnd>& side) {
      Value acc = Value::zero();
      for (const auto& e : side) acc = add(w.desc, acc, mul(w.desc, c.multiplier(w.desc, e), weight_of(w, e.sector)));
      return acc;
    };
    SwitchReport s{side_sum(sw.side1), side_sum(sw.side2), false};
    s.balanced = s.side1 == s.side2;
    r.ok = r.ok && s.balanced;
    r.switches.push_back(std::move(s));
  }
  return r;
}

WeightSystem apply_deck(const WeightSystem& w, const Value& lambda) {
  check_shape(w.desc, lambda);
  if (lambda.is_zero()) fail(ErrorKind::Domain, "the deck scalar must not be 0");
  if (!is_unit(w.desc, lambda)) fail(ErrorKind::Domain, lambda.str() + " is not invertible in " + w.desc.str());
  WeightSystem out{w.desc, {}};
  for (const auto& [s, v] : w.weight) out.weight[s] = mul(w.desc, lambda, v);
  return out;
}

std::vector<CocyclePart> cocycle_split(const StructDesc& d, const Cocycle& c) {
  std::vector<CocyclePart> out;
  for (const auto& x : c.crossings) {
    check_shape(d, x.multiplier);
    if (x.multiplier.is_zero()) fail(ErrorKind::Domain, "multiplier 0 at " + x.at.sector + "." + x.at.end);
    const Value* v = &x.multiplier;
    while (v->kind() == Value::Kind::Pair) v = &v->second();
    out.push_back({x.at, level_tuple(x.multiplier), v->as_real()});
  }
  return out;
}

Value cocycle_join(const StructDesc& d, const CocyclePart& part) {
  // Build (i1, (i2, ... (in, s))) from the inside out.
  std::vector<const StructDesc*> chain{&d};
  for (std::size_t i = 1; i < part.level_shift.size(); ++i) chain.push_back(&chain.back()->second());
  Value v = Value::real(part.stretch);
  for (std::size_t i = part.level_shift.size(); i-- > 0;) {
    v = make_element(*chain[i], Value::integer(part.level_shift[i]), v);
  }
  check_shape(d, v);
  return v;
}

void gauge_move(const BranchedGraph& g, WeightSystem& w, Cocycle& c, const std::string& sector, const Value& u) {
  check_system(g, w, c);
  if (!is_unit(w.desc, u)) fail(ErrorKind::Domain, u.str() + " is not invertible in " + w.desc.str());
  w.weight[sector] = mul(w.desc, weight_of(w, sector), unit_inverse(w.desc, u));
  for (const char* end : {"start", "end"}) {
    SectorEnd at{sector, end};
    auto it = std::find_if(c.crossings.begin(), c.crossings.end(), [&](const Crossing& x) { return x.at == at; });
    if (it == c.crossings.end()) {
      c.crossings.push_back({at, u});
    } else {
      it->multiplier = mul(w.desc, it->multiplier, u);
    }
  }
}

}  // namespace ordalg
