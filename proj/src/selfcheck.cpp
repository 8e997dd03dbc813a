#include "ordalg/selfcheck.hpp"

#include <algorithm>

#include "ordalg/arith.hpp"
#include "ordalg/error.hpp"
#include "ordalg/integrate.hpp"
#include "ordalg/measure.hpp"
#include "ordalg/prob.hpp"
#include "ordalg/random.hpp"
#include "ordalg/tree.hpp"
#include "ordalg/weights.hpp"

namespace ordalg {

Ops default_ops() {
  return {[](const StructDesc& d, const Value& x, const Value& y) { return add(d, x, y); },
          [](const StructDesc& d, const Value& x, const Value& y) { return mul(d, x, y); },
          [](const StructDesc& d, const Value& x, const Value& y) { return cmp(d, x, y); }};
}

bool SelfcheckReport::ok() const {
  return std::all_of(laws.begin(), laws.end(), [](const LawResult& l) { return l.failures == 0; });
}

namespace {

// Collects the laws of one suite by name, in first-use order.
class Suite {
 public:
  explicit Suite(std::string name) : name_(std::move(name)) {}

  void check(const std::string& law, bool holds, const std::function<std::string()>& witness) {
    auto it = std::find_if(laws_.begin(), laws_.end(), [&](const LawResult& l) { return l.law == law; });
    if (it == laws_.end()) {
      laws_.push_back({name_, law, 0, 0, {}});
      it = laws_.end() - 1;
    }
    ++it->cases;
    if (!holds && it->failures++ == 0) it->witness = witness();
  }
  // A law whose evaluation threw counts as failed.
  void guard(const std::string& law, const std::function<bool()>& body, const std::function<std::string()>& witness) {
    bool ok = false;
    std::string err;
    try {
      ok = body();
    } catch (const std::exception& e) {
      err = e.what();
    }
    check(law, ok, [&] { return err.empty() ? witness() : witness() + " threw: " + err; });
  }
  std::vector<LawResult> take() { return std::move(laws_); }

 private:
  std::string name_;
  std::vector<LawResult> laws_;
};

std::string show3(const Value& a, const Value& b, const Value& c) {
  return "a=" + a.str() + " b=" + b.str() + " c=" + c.str();
}

// Level of x as an element of the level structure, for nonzero non-top x.
bool plain(const Value& x) { return !x.is_zero() && !x.is_top(); }

}  // namespace

std::vector<std::pair<std::string, StructDesc>> law_structures() {
  return {{"S", StructDesc::S()},         {"O", StructDesc::O()},         {"P", StructDesc::P()},
          {"Obar", StructDesc::Obar()},   {"Sn(2)", StructDesc::Sn(2)},   {"On(2)", StructDesc::On(2)},
          {"Pn(2)", StructDesc::Pn(2)}};
}

std::vector<LawResult> structure_laws(const std::string& name, const StructDesc& d, std::uint64_t seed,
                                      std::uint64_t cases, const Ops& ops) {
  Suite s("laws " + name);
  Rng rng(seed);
  const Value e = one(d);
  const StructDesc& a_desc = d.first();
  const StructDesc& b_desc = d.second();
  for (std::uint64_t i = 0; i < cases; ++i) {
    Value a = random_value(d, rng), b = random_value(d, rng), c = random_value(d, rng);
    auto w = [&] { return show3(a, b, c); };
    auto eq = [&](const Value& x, const Value& y) { return ops.cmp(d, x, y) == 0 && x == y; };
    s.guard("add commutative", [&] { return eq(ops.add(d, a, b), ops.add(d, b, a)); }, w);
    s.guard("add associative", [&] { return eq(ops.add(d, ops.add(d, a, b), c), ops.add(d, a, ops.add(d, b, c))); }, w);
    s.guard("mul commutative", [&] { return eq(ops.mul(d, a, b), ops.mul(d, b, a)); }, w);
    s.guard("mul associative", [&] { return eq(ops.mul(d, ops.mul(d, a, b), c), ops.mul(d, a, ops.mul(d, b, c))); }, w);
    s.guard("distributive", [&] {
      return eq(ops.mul(d, a, ops.add(d, b, c)), ops.add(d, ops.mul(d, a, b), ops.mul(d, a, c)));
    }, w);
    s.guard("additive identity", [&] { return eq(ops.add(d, a, Value::zero()), a); }, w);
    s.guard("multiplicative identity", [&] { return eq(ops.mul(d, a, e), a); }, w);
    s.guard("zero absorbing", [&] { return ops.mul(d, a, Value::zero()).is_zero(); }, w);
    s.guard("a+b >= b", [&] { return ops.cmp(d, ops.add(d, a, b), b) >= 0; }, w);
    s.guard("order antisymmetric", [&] { return ops.cmp(d, a, b) == (0 <=> ops.cmp(d, b, a)); }, w);
    s.guard("order compatible with add", [&] {
      return ops.cmp(d, a, b) > 0 || ops.cmp(d, ops.add(d, a, c), ops.add(d, b, c)) <= 0;
    }, w);
    // The level laws and inverses get their own nonzero, non-top pair so that
    // every law sees `cases` instances.
    Value x = random_nonzero(d, rng), y = random_nonzero(d, rng);
    while (!plain(x)) x = random_nonzero(d, rng);
    while (!plain(y)) y = random_nonzero(d, rng);
    Value y_same = make_element(d, level(x), residue(y));
    auto wp = [&] { return show3(x, y, y_same); };
    s.guard("level of product", [&] {
      Value p = ops.mul(d, x, y);
      return plain(p) && level(p) == add(a_desc, level(x), level(y));
    }, wp);
    s.guard("level of sum", [&] {
      Value p = ops.add(d, x, y);
      return plain(p) && level(p) == max_of(a_desc, level(x), level(y));
    }, wp);
    s.guard("equal levels add residues", [&] {
      Value p = ops.add(d, x, y_same);
      return plain(p) && residue(p) == add(b_desc, residue(x), residue(y_same));
    }, wp);
    if (d.caps().is_semifield) {
      s.guard("x * inv(x) = 1", [&] { return eq(ops.mul(d, x, inv(d, x)), e); }, wp);
    }
  }
  return s.take();
}

namespace {

std::vector<LawResult> scalar_laws(Rng& rng, std::uint64_t cases) {
  Suite s("xreal");
  for (std::uint64_t i = 0; i < cases; ++i) {
    XReal a = random_xreal(rng, true, true), b = random_xreal(rng, true, true), c = random_xreal(rng, true, true);
    auto w = [&] { return a.str() + " " + b.str() + " " + c.str(); };
    s.check("add commutative", a + b == b + a, w);
    s.check("add associative", (a + b) + c == a + (b + c), w);
    s.check("mul commutative", a * b == b * a, w);
    s.check("mul associative", (a * b) * c == a * (b * c), w);
    s.check("distributive", a * (b + c) == a * b + a * c, w);
    s.check("order compatible", !(a <= b) || (a + c <= b + c && a * c <= b * c), w);
  }
  return s.take();
}

std::vector<LawResult> reassociation_laws(Rng& rng, std::uint64_t cases) {
  Suite s("reassociation");
  for (int k = 0; k < 3; ++k) {
    StructDesc d = StructDesc::s_insert(random_semigroup_base(rng),
                                        StructDesc::s_insert(random_semigroup_base(rng), random_semigroup_base(rng)));
    StructDesc t = siv_assoc_target(d);
    for (std::uint64_t i = 0; i < cases; ++i) {
      Value x = random_value(d, rng), y = random_value(d, rng);
      auto w = [&] { return d.str() + ": " + x.str() + " " + y.str(); };
      Value px = siv_assoc_iso(d, x), py = siv_assoc_iso(d, y);
      s.guard("psi preserves order", [&] { return cmp(d, x, y) == cmp(t, px, py); }, w);
      s.guard("psi preserves addition", [&] { return siv_assoc_iso(d, add(d, x, y)) == add(t, px, py); }, w);
      s.guard("psi invertible", [&] { return siv_assoc_iso_inverse(t, px) == x; }, w);
    }
  }
  return s.take();
}

std::vector<LawResult> roundtrip_laws(Rng& rng, std::uint64_t cases) {
  Suite s("literals");
  std::vector<StructDesc> ds{StructDesc::S(),  StructDesc::Obar(), StructDesc::Pn(3),
                             parse_struct("(N0 \\/ Rc) /\\ Ro"), parse_struct("N0 \\/ (Nbar0 \\/ Rc)"),
                             parse_struct("mixed(Z; -2..2; 0:Nbar0, 1:N0; default:Rc)"), parse_struct("double(O)")};
  for (std::uint64_t i = 0; i < cases; ++i) {
    const StructDesc& d = ds[i % ds.size()];
    Value v = random_value(d, rng);
    s.guard("parse(format(v)) = v", [&] { return parse_value(d, v.str()) == v; }, [&] { return d.str() + ": " + v.str(); });
    s.guard("format is canonical", [&] { return parse_value(d, v.str()).str() == v.str(); }, [&] { return v.str(); });
    s.guard("structure roundtrip", [&] { return parse_struct(d.str()) == d; }, [&] { return d.str(); });
  }
  return s.take();
}

std::string scene_summary(const LMeasure& m) {
  std::string out = m.desc.str() + ":";
  for (const auto& v : m.values) out += " " + v.str();
  return out;
}

Event random_event(const AtomSpace& sp, Rng& rng) {
  Event e = sp.none();
  for (std::size_t i = 0; i < sp.size(); ++i) e[i] = rng() & 1;
  return e;
}

std::vector<LawResult> measure_laws(Rng& rng, std::uint64_t cases) {
  Suite s("measure");
  RandomSpec finite;
  finite.percent_top = 0;
  for (std::uint64_t i = 0; i < cases; ++i) {
    const StructDesc d = i % 2 ? StructDesc::O() : StructDesc::Obar();
    LMeasure m = random_measure(d, 1 + rng() % 8, rng, finite);
    Event e = random_event(m.space, rng), f = random_event(m.space, rng) & ~e;
    auto w = [&] { return scene_summary(m); };
    s.guard("finite additivity", [&] { return measure_of(m, e | f) == add(d, measure_of(m, e), measure_of(m, f)); }, w);
    s.guard("level bounded by nu(X)", [&] {
      Value x = measure_of(m, m.space.all()), v = measure_of(m, e);
      return !plain(v) || int_level(v) <= int_level(x);
    }, w);
    s.guard("slice roundtrip", [&] {
      LMeasure r = recover_from_slices(d, m.space, slice_table(m));
      return r.values == m.values;
    }, w);
    s.guard("align proximal and idempotent", [&] {
      LMeasure a = align_levels(m);
      return is_proximal(a) && align_levels(a).values == a.values;
    }, w);
    long long k = static_cast<long long>(rng() % 7) - 3;
    s.guard("shift then unshift", [&] { return shift_levels(shift_levels(m, k), -k).values == m.values; }, w);
  }
  return s.take();
}

std::vector<LawResult> integral_laws(Rng& rng, std::uint64_t cases) {
  Suite s("integrate");
  RandomSpec finite;
  finite.percent_top = 0;
  const StructDesc o = StructDesc::O();
  const StructDesc dbl = StructDesc::double_of(o);
  for (std::uint64_t i = 0; i < cases; ++i) {
    LMeasure m = random_measure(o, 1 + rng() % 7, rng, finite);
    std::vector<XReal> f;
    LFunction g{o, {}}, h{dbl, {}}, hn{dbl, {}};
    for (std::size_t a = 0; a < m.space.size(); ++a) {
      f.push_back(random_xreal(rng, false, true));
      g.values.push_back(random_value(o, rng, finite));
      h.values.push_back(random_value(dbl, rng, finite));
      hn.values.push_back(negate(dbl, h.values.back()));
    }
    Event e = random_event(m.space, rng), e2 = random_event(m.space, rng) & ~e;
    auto w = [&] { return scene_summary(m); };
    s.guard("real integral additive", [&] {
      return integrate_real(m, f, e | e2) == add(o, integrate_real(m, f, e), integrate_real(m, f, e2));
    }, w);
    s.guard("L-valued integral additive", [&] {
      return integrate_lvalued(m, g, e | e2) == add(o, integrate_lvalued(m, g, e), integrate_lvalued(m, g, e2));
    }, w);
    s.guard("L-valued integral is sum of g nu", [&] {
      Value acc = Value::zero();
      for (auto a = e.find_first(); a != Event::npos; a = e.find_next(a)) acc = add(o, acc, mul(o, g.values[a], m.values[a]));
      return integrate_lvalued(m, g, e) == acc;
    }, w);
    s.guard("signed integral odd", [&] {
      return integrate_signed(m, hn, e).value == negate(dbl, integrate_signed(m, h, e).value);
    }, w);
  }
  return s.take();
}

std::vector<LawResult> probability_laws(Rng& rng, std::uint64_t cases) {
  Suite s("prob");
  const StructDesc p = StructDesc::P();
  for (std::uint64_t i = 0; i < cases; ++i) {
    LMeasure m = random_probability(2 + rng() % 6, rng);
    Event b = random_event(m.space, rng);
    // A random partition into up to three cells with positive measure.
    std::vector<std::pair<std::string, Event>> cells;
    std::vector<Event> parts(3, m.space.none());
    for (std::size_t a = 0; a < m.space.size(); ++a) parts[rng() % 3].set(a);
    for (std::size_t c = 0; c < 3; ++c) {
      if (parts[c].any()) cells.push_back({"C" + std::to_string(c), parts[c]});
    }
    auto w = [&] { return scene_summary(m); };
    s.guard("valid probability", [&] { return validate_probability(m).ok(); }, w);
    bool usable = !measure_of(m, b).is_zero() &&
                  std::all_of(cells.begin(), cells.end(), [&](const auto& c) { return !measure_of(m, c.second).is_zero(); });
    if (usable) {
      s.guard("total probability", [&] { return bayes(m, cells, b).total == prob(m, b); }, w);
      s.guard("posterior equals direct conditional", [&] { return bayes(m, cells, b).consistent; }, w);
    }
    Value sum = Value::zero();
    for (const auto& c : cells) sum = add(p, sum, measure_of(m, c.second));
    s.check("partition sums to nu(X)", sum == measure_of(m, m.space.all()), w);
    Event a = random_event(m.space, rng);
    long long k = static_cast<long long>(rng() % 5) - 2;
    if (!measure_of(m, b).is_zero()) {
      s.guard("shift invariant conditionals", [&] { return cond_prob(shift_levels(m, k), a, b) == cond_prob(m, a, b); }, w);
    }
    s.guard("depth within 0..d", [&] {
      StandardForm sf = standardize(m);
      Value v = measure_of(sf.measure, a);
      if (v.is_zero()) return true;
      long long dep = depth(sf.measure, a);
      return dep >= 0 && dep <= sf.depth;
    }, w);
  }
  return s.take();
}

std::vector<LawResult> tree_laws(Rng& rng, std::uint64_t cases) {
  Suite s("tree");
  const std::vector<StructDesc> ds{StructDesc::S(), StructDesc::O(), parse_struct("N0 \\/ Rc")};
  std::uint64_t trees = std::max<std::uint64_t>(1, cases / 50);
  for (std::uint64_t i = 0; i < trees; ++i) {
    LTree t = random_tree(ds[i % ds.size()], 1 + rng() % 12, rng);
    MetricReport r = verify_metric(t);
    s.check("order-tree and metric axioms", r.ok(), [&] { return r.problems.empty() ? "" : r.problems.front(); });
  }
  return s.take();
}

std::vector<LawResult> weight_laws(Rng& rng, std::uint64_t cases) {
  Suite s("weights");
  const std::vector<StructDesc> ds{StructDesc::P(), StructDesc::O(), StructDesc::Pn(2)};
  std::uint64_t systems = std::max<std::uint64_t>(1, cases / 20);
  for (std::uint64_t i = 0; i < systems; ++i) {
    const StructDesc& d = ds[i % ds.size()];
    // Switches x_k.end | y_k1.start, ..., with x_k's weight solving the equation.
    BranchedGraph g;
    WeightSystem w{d, {}};
    Cocycle c;
    std::size_t nsw = 1 + rng() % 3;
    for (std::size_t k = 0; k < nsw; ++k) {
      std::string x = "x" + std::to_string(k);
      g.sectors.push_back(x);
      Switch sw;
      sw.side1.push_back({x, "end"});
      Value total = Value::zero();
      std::size_t width = 1 + rng() % 3;
      for (std::size_t j = 0; j < width; ++j) {
        std::string y = "y" + std::to_string(k) + "_" + std::to_string(j);
        g.sectors.push_back(y);
        sw.side2.push_back({y, "start"});
        w.weight[y] = random_finite(d, rng);
        Value mult = one(d);
        if (rng() % 2) {
          mult = random_unit(d, rng);
          c.crossings.push_back({{y, "start"}, mult});
        }
        total = add(d, total, mul(d, mult, w.weight[y]));
      }
      Value mx = one(d);
      if (rng() % 2) {
        mx = random_unit(d, rng);
        c.crossings.push_back({{x, "end"}, mx});
      }
      w.weight[x] = mul(d, unit_inverse(d, mx), total);
      g.switches.push_back(sw);
    }
    auto wit = [&] { return d.str(); };
    s.guard("constructed system balanced", [&] { return check_branch_equations(g, w, c).ok; }, wit);
    for (int r = 0; r < 5; ++r) {
      Value lambda = random_unit(d, rng);
      s.guard("deck invariance", [&] { return check_branch_equations(g, apply_deck(w, lambda), c).ok; }, wit);
    }
    WeightSystem w2 = w;
    Cocycle c2 = c;
    const std::string& sector = g.sectors[rng() % g.sectors.size()];
    gauge_move(g, w2, c2, sector, random_unit(d, rng));
    s.guard("gauge invariance", [&] {
      auto before = check_branch_equations(g, w, c), after = check_branch_equations(g, w2, c2);
      for (std::size_t k = 0; k < before.switches.size(); ++k) {
        if (!(before.switches[k].side1 == after.switches[k].side1) || !(before.switches[k].side2 == after.switches[k].side2)) return false;
      }
      return before.ok == after.ok;
    }, wit);
  }
  return s.take();
}

}  // namespace

SelfcheckReport run_selfcheck(std::uint64_t seed, std::uint64_t cases, const Ops& ops) {
  cases = std::max<std::uint64_t>(cases, 1);
  SelfcheckReport rep;
  rep.seed = seed;
  rep.cases = cases;
  auto append = [&rep](std::vector<LawResult> v) { rep.laws.insert(rep.laws.end(), v.begin(), v.end()); };
  // Every suite gets its own stream so that suites are independent of each other.
  std::uint64_t stream = 0;
  auto next_rng = [&] { return Rng(seed * 0x9E3779B97F4A7C15ULL + ++stream); };
  Rng r1 = next_rng();
  append(scalar_laws(r1, cases));
  for (const auto& [name, d] : law_structures()) append(structure_laws(name, d, seed * 0x9E3779B97F4A7C15ULL + ++stream, cases, ops));
  Rng r2 = next_rng();
  append(reassociation_laws(r2, cases));
  Rng r3 = next_rng();
  append(roundtrip_laws(r3, cases));
  std::uint64_t heavy = std::max<std::uint64_t>(1, cases / 10);
  Rng r4 = next_rng();
  append(measure_laws(r4, heavy));
  Rng r5 = next_rng();
  append(integral_laws(r5, heavy));
  Rng r6 = next_rng();
  append(probability_laws(r6, heavy));
  Rng r7 = next_rng();
  append(tree_laws(r7, cases));
  Rng r8 = next_rng();
  append(weight_laws(r8, cases));
  return rep;
}

}  // namespace ordalg
