#include "doctest.h"

#include <algorithm>

#include "ordalg/arith.hpp"
#include "ordalg/error.hpp"
#include "ordalg/expr.hpp"
#include "ordalg/integrate.hpp"
#include "ordalg/io.hpp"
#include "ordalg/measure.hpp"
#include "ordalg/prob.hpp"
#include "ordalg/random.hpp"
#include "ordalg/selfcheck.hpp"
#include "ordalg/tree.hpp"
#include "ordalg/weights.hpp"

using namespace ordalg;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error thrown");
  return ErrorKind::Usage;
}

std::string eval(const char* d, const char* e) { return evaluate(parse_struct(d), e).str(); }

LMeasure scene(const std::string& structure, const std::vector<std::pair<std::string, std::string>>& atoms) {
  StructDesc d = parse_struct(structure);
  std::vector<std::string> ids;
  std::vector<Value> vals;
  for (const auto& [id, lit] : atoms) {
    ids.push_back(id);
    vals.push_back(parse_value(d, lit));
  }
  return LMeasure(d, AtomSpace(ids), vals);
}

}  // namespace

TEST_CASE("events") {
  LMeasure m = builtin_scene("dartboard");
  const AtomSpace& s = m.space;
  CHECK(s.parse_event("X") == s.all());
  CHECK(s.parse_event("{}") == s.none());
  CHECK(s.members(s.parse_event("B & Y")) == std::vector<std::string>{"up", "left", "right", "center"});
  CHECK(s.parse_event("!(A1 | A2 | A3 | A4)") == s.none());
  CHECK(s.parse_event("Q3") == s.from_atoms({"Q3"}));
  CHECK(kind_of([&] { s.parse_event("A &"); }) == ErrorKind::Parse);
  CHECK(kind_of([&] { s.parse_event("nowhere"); }) == ErrorKind::Validation);
}

TEST_CASE("dartboard measure and slices") {
  LMeasure m = builtin_scene("dartboard");
  const StructDesc& d = m.desc;
  CHECK(measure_of(m, m.space.all()) == parse_value(d, "(0,1)"));
  CHECK(measure_of(m, m.space.event("Y")) == parse_value(d, "(-1,1)"));
  CHECK(measure_of(m, m.space.parse_event("B & Y")) == parse_value(d, "(-1,3/4)"));
  CHECK(slice(m, 0, m.space.event("B")) == XReal(1, 2));
  CHECK(slice(m, -1, m.space.event("B")).is_inf());
  CHECK(slice(m, -1, m.space.event("Y")) == XReal(1));
  CHECK(slice(m, 1, m.space.all()).is_zero());
  CHECK(total_height(m).value == 2);
  CHECK(total_height(builtin_scene("dartboard-depth2")).value == 3);
  LMeasure back = recover_from_slices(d, m.space, slice_table(m));
  CHECK(back.values == m.values);
}

TEST_CASE("recover rejects inconsistent tables") {
  LMeasure m = scene("P", {{"a", "(0,1)"}, {"b", "(-1,1)"}});
  SliceTable t = slice_table(m);
  REQUIRE(t.lo == -1);
  t.rows[-1][0] = XReal(3);  // below the level, the slice must be inf
  CHECK(kind_of([&] { recover_from_slices(m.desc, m.space, t); }) == ErrorKind::Validation);
  SliceTable u = slice_table(m);
  u.rows[u.hi][0] = XReal::inf();
  CHECK(kind_of([&] { recover_from_slices(m.desc, m.space, u); }) == ErrorKind::Validation);
}

TEST_CASE("align and shift") {
  LMeasure m = scene("P", {{"a", "(0,1)"}, {"b", "(-2,1)"}, {"c", "0"}});
  CHECK_FALSE(is_proximal(m));
  LMeasure a = align_levels(m);
  CHECK(is_proximal(a));
  CHECK(attained_levels(a) == std::vector<long long>{-2, -1});
  CHECK(align_levels(a).values == a.values);
  CHECK(shift_levels(shift_levels(m, 3), -3).values == m.values);
  CHECK(shift_levels(m, 3).values[0] == parse_value(m.desc, "(3,1)"));
  LMeasure s = scene("S", {{"a", "(0,1)"}});
  CHECK(kind_of([&] { shift_levels(s, -1); }) == ErrorKind::Domain);
  CHECK(kind_of([&] { total_height(scene("P", {{"a", "0"}})); }) == ErrorKind::Domain);
}

TEST_CASE("open-graded picture") {
  GradedIntervalSet open_piece{{{0, XReal(1), XReal(2), false, false}}, std::nullopt, std::nullopt, false, false};
  CHECK(is_open(open_piece));
  CHECK(open_graded_measure(open_piece) == parse_value(StructDesc::Obar(), "(0,1)"));
  GradedIntervalSet closed_end = open_piece;
  closed_end.pieces[0].hi_closed = true;
  CHECK_FALSE(is_open(closed_end));
  GradedIntervalSet to_inf{{{0, XReal(1), XReal::inf(), false, true}}, std::nullopt, std::nullopt, false, false};
  CHECK_FALSE(is_open(to_inf));
  to_inf.pieces.push_back({1, XReal(), XReal(1, 2), false, false});
  CHECK(is_open(to_inf));
  GradedIntervalSet zero_point{{}, std::nullopt, std::nullopt, true, false};
  CHECK_FALSE(is_open(zero_point));
  CHECK(open_graded_measure(zero_point).is_zero());
  GradedIntervalSet tail{{}, std::nullopt, 4, false, true};
  CHECK(open_graded_measure(tail).is_top());
  CHECK(is_open(tail));
  for (long long k : {-5, 0, 3}) CHECK(verify_open_graded(k));
}

TEST_CASE("integrals") {
  LMeasure dirac = scene("P", {{"p", "(0,1)"}, {"q", "0"}});
  CHECK(integrate_real(dirac, {XReal(1), XReal(5)}, dirac.space.all()) == parse_value(dirac.desc, "(0,1)"));

  LMeasure m = builtin_scene("dartboard");
  std::vector<XReal> f(m.space.size(), XReal(2));
  CHECK(integrate_real(m, f, m.space.all()) == parse_value(m.desc, "(0,2)"));
  CHECK(integrate_real(m, f, m.space.event("Y")) == parse_value(m.desc, "(-1,2)"));
  std::vector<XReal> g(m.space.size(), XReal::inf());
  CHECK(kind_of([&] { integrate_real(m, g, m.space.all()); }) == ErrorKind::NotRepresentable);

  LFunction h;
  h.desc = m.desc;
  for (const auto& a : m.space.atoms()) h.values.push_back(parse_value(m.desc, a == "up" ? "(2,4)" : "(0,1)"));
  // up: (2,4)*(-1,1/4) = (1,1) dominates.
  CHECK(integrate_lvalued(m, h, m.space.all()) == parse_value(m.desc, "(1,1)"));
  CHECK(integrate_lvalued(m, h, m.space.event("Q1")) == parse_value(m.desc, "(0,1/4)"));

  LFunction s;
  s.desc = parse_struct("double(P)");
  for (const auto& a : m.space.atoms()) {
    const char* lit = a == "Q1" ? "+(0,2)" : a == "Q2" ? "-(0,1)" : a == "up" ? "-(1,2)" : "0";
    s.values.push_back(parse_value(s.desc, lit));
  }
  SignedIntegral r = integrate_signed(m, s, m.space.all());
  CHECK(r.positive == parse_value(m.desc, "(0,1/2)"));
  CHECK(r.negative == parse_value(m.desc, "(0,3/4)"));
  CHECK(r.value == parse_value(s.desc, "-(0,1/4)"));
  CHECK(r.rule == "equal levels, residues subtract");
  LFunction neg = s;
  for (auto& v : neg.values) v = negate(neg.desc, v);
  SignedIntegral rn = integrate_signed(m, neg, m.space.all());
  CHECK(rn.value == negate(s.desc, r.value));
}

TEST_CASE("dartboard conditional probabilities") {
  LMeasure m = builtin_scene("dartboard");
  const AtomSpace& s = m.space;
  auto P = [&](const char* a, const char* b) { return cond_prob(m, s.parse_event(a), s.parse_event(b)).str(); };
  CHECK(P("Y", "B") == "(-1,3/2)");
  CHECK(P("A", "Y") == "(0,1/4)");
  CHECK(P("A", "B & Y") == "(0,1/3)");
  CHECK(P("A", "B") == "(-1,1/2)");
  CHECK(prob(m, s.event("Y")).str() == "(-1,1)");
  CHECK(kind_of([&] { cond_prob(m, s.event("A"), s.none()); }) == ErrorKind::Domain);
}

TEST_CASE("bayes on the quadrant partition") {
  LMeasure m = builtin_scene("dartboard");
  std::vector<std::pair<std::string, Event>> cells;
  for (const char* c : {"A1", "A2", "A3", "A4"}) cells.push_back({c, m.space.event(c)});
  BayesTable t = bayes(m, cells, m.space.event("H"));
  CHECK(t.consistent);
  CHECK(t.rows[0].likelihood.str() == "(-1,1)");
  CHECK(t.rows[1].likelihood.is_zero());
  CHECK(t.rows[2].likelihood.str() == "(-1,1)");
  CHECK(t.rows[3].likelihood.is_zero());
  CHECK(t.total.str() == "(-1,1/2)");
  CHECK(t.rows[0].posterior.str() == "(0,1/2)");
  cells.pop_back();
  CHECK(kind_of([&] { bayes(m, cells, m.space.event("H")); }) == ErrorKind::Validation);
}

TEST_CASE("probability validation and standard form") {
  ProbabilityReport r = validate_probability(builtin_scene("dartboard"));
  CHECK(r.ok());
  CHECK(r.standard);
  LMeasure bad = scene("P", {{"a", "(0,1/2)"}, {"b", "(-1,1)"}});
  ProbabilityReport rb = validate_probability(bad);
  CHECK_FALSE(rb.ok());
  CHECK_FALSE(rb.unit_masses);

  LMeasure gappy = scene("P", {{"a", "(3,1)"}, {"b", "(1,1/2)"}, {"c", "(1,1/2)"}});
  StandardForm sf = standardize(gappy);
  CHECK(sf.depth == 1);
  CHECK(sf.measure.values[0].str() == "(0,1)");
  CHECK(sf.measure.values[1].str() == "(-1,1/2)");
  CHECK(depth(sf.measure, sf.measure.space.event("b")) == 1);
  CHECK(depth(builtin_scene("dartboard-depth2"), builtin_scene("dartboard-depth2").space.event("center")) == 2);

  LMeasure p2 = scene("Pn(2)", {{"a", "(0,0,1)"}, {"b", "(0,-1,1)"}});
  CHECK(validate_probability(p2).ok());
  CHECK(kind_of([&] { standardize(p2); }) == ErrorKind::Capability);
}

TEST_CASE("density normalisation") {
  LMeasure mu = scene("P", {{"a", "(0,1)"}, {"b", "(0,3)"}, {"c", "(-2,1)"}});
  LFunction f;
  f.desc = mu.desc;
  f.values = {parse_value(mu.desc, "(0,1)"), parse_value(mu.desc, "(0,1)"), parse_value(mu.desc, "(0,5)")};
  StandardForm sf = normalize_from_density(mu, f);
  CHECK(sf.measure.values[0].str() == "(0,1/4)");
  CHECK(sf.measure.values[1].str() == "(0,3/4)");
  CHECK(sf.measure.values[2].str() == "(-1,1)");
  CHECK(validate_probability(sf.measure).ok());
}

TEST_CASE("tree metric") {
  StructDesc o = StructDesc::O();
  LTree t(o, {"r", "u", "v", "w"},
          {{"r", "u", parse_value(o, "(0,1)")}, {"u", "v", parse_value(o, "(1,1/2)")}, {"u", "w", parse_value(o, "(-1,3)")}});
  CHECK(t.segment("v", "w") == std::vector<std::string>{"v", "u", "w"});
  CHECK(t.distance("v", "w").str() == "(1,1/2)");
  CHECK(t.distance("r", "w").str() == "(0,1)");
  CHECK(t.distance("w", "w").is_zero());
  CHECK(t.meet("r", "v", "w") == "u");
  MetricReport rep = verify_metric(t);
  CHECK(rep.ok());
  CHECK(rep.triples == 64);
  CHECK(kind_of([&] { LTree(o, {"a", "b", "c"}, {{"a", "b", one(o)}}); }) == ErrorKind::Validation);
  LTree z(o, {"a", "b"}, {{"a", "b", Value::zero()}});
  MetricReport rz = verify_metric(z);
  CHECK_FALSE(rz.full_support);
  CHECK_FALSE(rz.identity);
}

TEST_CASE("branch equations, deck and gauge moves") {
  Track t = track_from_json(parse_json(R"j({
    "structure": "P", "sectors": ["a", "b", "c"],
    "switches": [{"side1": [["a", "end"]], "side2": [["b", "start"], ["c", "start"]]},
                 {"side1": [["b", "end"]], "side2": [["a", "start"]]}],
    "weights": {"a": "(0,2)", "b": "(0,1)", "c": "(0,1)"},
    "crossings": [{"sector": "a", "end": "start", "multiplier": "(0,1/2)"}]})j",
                                       "inline"));
  CHECK(check_branch_equations(t.graph, t.weights, t.cocycle).ok);
  Cocycle plain;
  CHECK_FALSE(check_branch_equations(t.graph, t.weights, plain).ok);

  WeightSystem scaled = apply_deck(t.weights, parse_value(t.weights.desc, "(-3,7)"));
  CHECK(scaled.weight.at("a").str() == "(-3,14)");
  CHECK(check_branch_equations(t.graph, scaled, t.cocycle).ok);
  CHECK(kind_of([&] { apply_deck(t.weights, Value::zero()); }) == ErrorKind::Domain);

  WeightSystem w = t.weights;
  Cocycle c = t.cocycle;
  gauge_move(t.graph, w, c, "b", parse_value(w.desc, "(2,1/3)"));
  CHECK(w.weight.at("b").str() == "(-2,3)");
  CHECK(check_branch_equations(t.graph, w, c).ok);

  auto parts = cocycle_split(t.weights.desc, t.cocycle);
  REQUIRE(parts.size() == 1);
  CHECK(parts[0].level_shift == LevelTuple{0});
  CHECK(parts[0].stretch == XReal(1, 2));
  CHECK(cocycle_join(t.weights.desc, parts[0]) == t.cocycle.crossings[0].multiplier);

  Switch reused{{{"a", "end"}}, {{"a", "end"}}};
  BranchedGraph g{{"a"}, {reused}};
  CHECK(kind_of([&] { g.validate(); }) == ErrorKind::Validation);
}

TEST_CASE("expressions") {
  CHECK(eval("P", "(-1,3/4) * inv((0,1/2))") == "(-1,3/2)");
  CHECK(eval("S", "(1,1/4)+(1,1/2)") == "(1,3/4)");
  CHECK(eval("N0 /\\ (N0 /\\ N0)", "(1,(1,1))*(2,(1,1))") == "(3,(2,1))");
  CHECK(eval("(N0 /\\ N0) /\\ N0", "((1,1),1)*((2,1),1)") == "((2,1),1)");
  CHECK(eval("P", "cmp((0,1), (-3,100))") == "GT");
  CHECK(eval("P", "level((-2,5))") == "-2");
  CHECK(eval("P", "residue((-2,5))") == "5");
  CHECK(eval("Obar", "sum(levelramp(0,1,1))") == "top");
  CHECK(eval("S", "sup(residueramp(3,1,1))") == "(3,inf)");
  CHECK(eval("P", "(0,1) + (0,1) * (0,2)") == "(0,3)");
  CHECK(kind_of([] { evaluate(StructDesc::P(), "sup(residueramp(3,1,1))"); }) == ErrorKind::NotRepresentable);
  CHECK(kind_of([] { evaluate(StructDesc::O(), "inv((0,1))"); }) == ErrorKind::Capability);
  CHECK(kind_of([] { evaluate(StructDesc::P(), "(0,1) +"); }) == ErrorKind::Parse);
  CHECK(kind_of([] { evaluate(StructDesc::P(), "frob((0,1))"); }) == ErrorKind::Parse);
}

TEST_CASE("scene json roundtrip") {
  LMeasure m = builtin_scene("dartboard-depth2");
  LMeasure back = scene_from_json(parse_json(scene_to_json(m).dump(), "roundtrip"));
  CHECK(back.values == m.values);
  CHECK(back.space.atoms() == m.space.atoms());
  CHECK(back.space.events() == m.space.events());
  CHECK(kind_of([] { builtin_scene("nope"); }) == ErrorKind::Usage);
  CHECK(kind_of([] { parse_json("{", "bad"); }) == ErrorKind::Parse);
  CHECK(kind_of([] { scene_from_json(parse_json(R"j({"structure":"P","atoms":[{"id":"a","value":"(0,1,2)"}]})j", "x")); }) ==
        ErrorKind::Shape);
}

TEST_CASE("selfcheck") {
  SelfcheckReport r = run_selfcheck(7, 60);
  CHECK(r.ok());
  SelfcheckReport again = run_selfcheck(7, 60);
  REQUIRE(again.laws.size() == r.laws.size());
  for (std::size_t i = 0; i < r.laws.size(); ++i) CHECK(again.laws[i].witness == r.laws[i].witness);

  Ops broken = default_ops();
  // Left operand wins on equal levels: no longer commutative.
  broken.add = [](const StructDesc& d, const Value& x, const Value& y) {
    if (x.is_zero() || y.is_zero() || x.is_top() || y.is_top()) return add(d, x, y);
    if (level(x) == level(y)) return x;
    return add(d, x, y);
  };
  auto laws = structure_laws("P", StructDesc::P(), 3, 500, broken);
  auto it = std::find_if(laws.begin(), laws.end(), [](const LawResult& l) { return l.law == "add commutative"; });
  REQUIRE(it != laws.end());
  CHECK(it->failures > 0);
  CHECK_FALSE(it->witness.empty());
}

TEST_CASE("random generators respect shapes") {
  Rng rng(11);
  for (const auto& [name, d] : law_structures()) {
    for (int i = 0; i < 50; ++i) CHECK(is_well_shaped(d, random_value(d, rng)));
  }
  for (int i = 0; i < 20; ++i) CHECK(validate_probability(random_probability(5, rng)).ok());
  LTree t = random_tree(StructDesc::O(), 9, rng);
  CHECK(verify_metric(t).ok());
}
