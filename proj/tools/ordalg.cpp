// ordalg: command-line front end for the ordered-structure library.
//
// Exit codes: 0 success, 1 domain or validation failure, 2 usage or parse error.

#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "ordalg/arith.hpp"
#include "ordalg/error.hpp"
#include "ordalg/expr.hpp"
#include "ordalg/integrate.hpp"
#include "ordalg/io.hpp"
#include "ordalg/measure.hpp"
#include "ordalg/prob.hpp"
#include "ordalg/selfcheck.hpp"
#include "ordalg/tree.hpp"
#include "ordalg/weights.hpp"

using namespace ordalg;

namespace {

struct Options {
  std::string format = "json";
  std::string builtin;
  std::string file;
};

Options opt;

bool json_mode() { return opt.format == "json"; }

void emit(const Json& j, const std::string& text) {
  if (json_mode()) {
    std::cout << j.dump() << '\n';
  } else {
    std::cout << text << '\n';
  }
}

LMeasure load_scene() {
  if (!opt.builtin.empty() && !opt.file.empty()) fail(ErrorKind::Usage, "give either a scene file or --builtin, not both");
  if (!opt.builtin.empty()) return builtin_scene(opt.builtin);
  if (opt.file.empty()) fail(ErrorKind::Usage, "a scene file or --builtin is required");
  return scene_from_json(parse_json(read_file(opt.file), opt.file));
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::string level_str(const LevelTuple& t) {
  if (t.size() == 1) return std::to_string(t[0]);
  std::string s = "(";
  for (std::size_t i = 0; i < t.size(); ++i) s += (i ? "," : "") + std::to_string(t[i]);
  return s + ")";
}

int exit_for(ErrorKind k) {
  switch (k) {
    case ErrorKind::Parse:
    case ErrorKind::Usage:
    case ErrorKind::Shape:
      return 2;
    default:
      return 1;
  }
}

// --- eval --------------------------------------------------------------------------

int cmd_eval(const std::string& structure, const std::string& expr) {
  StructDesc d = parse_struct(structure);
  EvalResult r = evaluate(d, expr);
  Json j = {{"structure", r.desc.str()}};
  if (r.value) {
    j["value"] = r.value->str();
  } else {
    j["order"] = r.str();
  }
  emit(j, r.str());
  return 0;
}

// --- measure -----------------------------------------------------------------------

int cmd_measure(const std::string& action, const std::string& event, long long k, const std::string& function) {
  if (action == "open-graded") {
    bool ok = verify_open_graded(k);
    emit({{"level", k}, {"open_graded", ok}}, std::string("open-graded at level ") + std::to_string(k) + ": " + (ok ? "yes" : "no"));
    return ok ? 0 : 1;
  }
  LMeasure m = load_scene();
  if (action == "eval") {
    Event e = m.space.parse_event(event);
    Value v = measure_of(m, e);
    emit({{"event", event}, {"value", v.str()}}, "nu(" + event + ") = " + v.str());
  } else if (action == "slice") {
    Event e = m.space.parse_event(event);
    XReal s = slice(m, k, e);
    emit({{"event", event}, {"level", k}, {"slice", s.str()}}, "nu_" + std::to_string(k) + "(" + event + ") = " + s.str());
  } else if (action == "slices") {
    SliceTable t = slice_table(m);
    Json rows = Json::object();
    std::string text;
    for (const auto& [lvl, row] : t.rows) {
      Json r = Json::object();
      text += std::to_string(lvl) + ":";
      for (std::size_t i = 0; i < row.size(); ++i) {
        r[m.space.atoms()[i]] = row[i].str();
        text += " " + m.space.atoms()[i] + "=" + row[i].str();
      }
      rows[std::to_string(lvl)] = r;
      text += "\n";
    }
    if (!text.empty()) text.pop_back();
    emit({{"lo", t.lo}, {"hi", t.hi}, {"slices", rows}}, text);
  } else if (action == "height") {
    Height h = total_height(m);
    std::string s = h.infinite ? "infinite" : std::to_string(h.value);
    emit({{"total_height", h.infinite ? Json("infinite") : Json(h.value)}}, "total height " + s);
  } else if (action == "align" || action == "shift") {
    LMeasure out = action == "align" ? align_levels(m) : shift_levels(m, k);
    Json j = scene_to_json(out);
    emit(j, j.dump(2));
  } else if (action == "integrate") {
    if (function.empty()) fail(ErrorKind::Usage, "integrate needs --function");
    SimpleFunction f = function_from_json(parse_json(read_file(function), function), m.space);
    Event e = m.space.parse_event(event.empty() ? "X" : event);
    if (f.kind == FunctionKind::Real) {
      Value v = integrate_real(m, f.real, e);
      emit({{"kind", "real"}, {"value", v.str()}}, v.str());
    } else if (f.kind == FunctionKind::LValued) {
      Value v = integrate_lvalued(m, f.lvalued, e);
      emit({{"kind", "lvalued"}, {"value", v.str()}}, v.str());
    } else {
      SignedIntegral s = integrate_signed(m, f.lvalued, e);
      emit({{"kind", "signed"}, {"value", s.value.str()}, {"positive", s.positive.str()}, {"negative", s.negative.str()},
            {"rule", s.rule}},
           s.value.str() + "  (P = " + s.positive.str() + ", N = " + s.negative.str() + "; " + s.rule + ")");
    }
  } else {
    fail(ErrorKind::Usage, "unknown measure action '" + action + "'");
  }
  return 0;
}

// --- prob --------------------------------------------------------------------------

Json report_json(const ProbabilityReport& r) {
  Json masses = Json::object();
  for (const auto& [lvl, mass] : r.level_mass) masses[level_str(lvl)] = mass.str();
  return {{"valid", r.ok()},
          {"standard", r.standard},
          {"conditions", {{"i", r.empty_is_zero}, {"ii", r.unit_masses}, {"iii", r.additive}, {"iv", r.finite_depth}}},
          {"level_mass", masses},
          {"problems", r.problems}};
}

int cmd_prob(const std::string& action, const std::string& event, const std::string& given, const std::string& partition) {
  LMeasure m = load_scene();
  if (action == "validate") {
    ProbabilityReport r = validate_probability(m);
    std::string text = r.ok() ? "valid probability measure" : "not a probability measure";
    for (const auto& [lvl, mass] : r.level_mass) text += "\n  level " + level_str(lvl) + ": mass " + mass.str();
    for (const auto& p : r.problems) text += "\n  " + p;
    emit(report_json(r), text);
    return r.ok() ? 0 : 1;
  }
  if (action == "cond") {
    if (event.empty() || given.empty()) fail(ErrorKind::Usage, "cond needs --event and --given");
    Value v = cond_prob(m, m.space.parse_event(event), m.space.parse_event(given));
    emit({{"event", event}, {"given", given}, {"value", v.str()}}, "P(" + event + "|" + given + ") = " + v.str());
    return 0;
  }
  if (action == "bayes") {
    if (partition.empty() || given.empty()) fail(ErrorKind::Usage, "bayes needs --partition and --given");
    std::vector<std::pair<std::string, Event>> cells;
    for (const auto& name : split_list(partition)) cells.push_back({name, m.space.parse_event(name)});
    BayesTable t = bayes(m, cells, m.space.parse_event(given));
    Json rows = Json::array();
    std::string text;
    for (const auto& r : t.rows) {
      rows.push_back({{"cell", r.name},
                      {"prior", r.prior.str()},
                      {"likelihood", r.likelihood.str()},
                      {"joint", r.joint.str()},
                      {"posterior", r.posterior.str()}});
      text += "P(" + given + "|" + r.name + ") = " + r.likelihood.str() + "   P(" + r.name + ") = " + r.prior.str() +
              "   P(" + r.name + "|" + given + ") = " + r.posterior.str() + "\n";
    }
    text += "P(" + given + ") = " + t.total.str() + (t.consistent ? "" : "   INCONSISTENT");
    emit({{"given", given}, {"cells", rows}, {"total", t.total.str()}, {"consistent", t.consistent}}, text);
    return t.consistent ? 0 : 1;
  }
  if (action == "standardize") {
    StandardForm s = standardize(m);
    Json j = scene_to_json(s.measure);
    j["depth"] = s.depth;
    emit(j, "total depth " + std::to_string(s.depth) + "\n" + scene_to_json(s.measure).dump(2));
    return 0;
  }
  if (action == "depth") {
    if (event.empty()) fail(ErrorKind::Usage, "depth needs --event");
    long long dep = depth(m, m.space.parse_event(event));
    emit({{"event", event}, {"depth", dep}}, "depth(" + event + ") = " + std::to_string(dep));
    return 0;
  }
  fail(ErrorKind::Usage, "unknown prob action '" + action + "'");
}

// --- tree --------------------------------------------------------------------------

int cmd_tree(const std::string& action, const std::vector<std::string>& nodes) {
  LTree t = tree_from_json(parse_json(read_file(opt.file), opt.file));
  if (action == "dist") {
    if (nodes.size() != 2) fail(ErrorKind::Usage, "dist needs two nodes");
    Value d = t.distance(nodes[0], nodes[1]);
    auto seg = t.segment(nodes[0], nodes[1]);
    std::string path;
    for (const auto& n : seg) path += (path.empty() ? "" : " ") + n;
    emit({{"from", nodes[0]}, {"to", nodes[1]}, {"distance", d.str()}, {"segment", seg}},
         "d(" + nodes[0] + "," + nodes[1] + ") = " + d.str() + "   [" + path + "]");
    return 0;
  }
  if (action == "verify") {
    MetricReport r = verify_metric(t);
    Json j = {{"ok", r.ok()},
              {"full_support", r.full_support},
              {"identity", r.identity},
              {"symmetry", r.symmetry},
              {"triangle", r.triangle},
              {"additivity", r.additivity},
              {"monotone", r.monotone},
              {"meets", r.meets},
              {"concatenation", r.concatenation},
              {"triples", r.triples},
              {"problems", r.problems}};
    std::string text = std::string(r.ok() ? "L-metric tree" : "axioms fail") + " (" + std::to_string(r.triples) + " triples)";
    for (const auto& p : r.problems) text += "\n  " + p;
    emit(j, text);
    return r.ok() ? 0 : 1;
  }
  fail(ErrorKind::Usage, "unknown tree action '" + action + "'");
}

// --- weights -----------------------------------------------------------------------

Json branch_json(const BranchReport& r) {
  Json sw = Json::array();
  for (const auto& s : r.switches) sw.push_back({{"side1", s.side1.str()}, {"side2", s.side2.str()}, {"balanced", s.balanced}});
  return {{"ok", r.ok}, {"switches", sw}};
}

std::string branch_text(const BranchReport& r) {
  std::string text = r.ok ? "branch equations hold" : "branch equations fail";
  for (std::size_t i = 0; i < r.switches.size(); ++i) {
    const auto& s = r.switches[i];
    text += "\n  switch " + std::to_string(i + 1) + ": " + s.side1.str() + (s.balanced ? " = " : " != ") + s.side2.str();
  }
  return text;
}

int cmd_weights(const std::string& action, const std::string& scalar) {
  Track t = track_from_json(parse_json(read_file(opt.file), opt.file));
  if (action == "check") {
    BranchReport r = check_branch_equations(t.graph, t.weights, t.cocycle);
    emit(branch_json(r), branch_text(r));
    return r.ok ? 0 : 1;
  }
  if (action == "deck") {
    if (scalar.empty()) fail(ErrorKind::Usage, "deck needs --scalar");
    Track out = t;
    out.weights = apply_deck(t.weights, parse_value(t.weights.desc, scalar));
    BranchReport r = check_branch_equations(out.graph, out.weights, out.cocycle);
    Json j = track_to_json(out);
    j["check"] = branch_json(r);
    emit(j, track_to_json(out).dump(2) + "\n" + branch_text(r));
    return r.ok ? 0 : 1;
  }
  if (action == "split") {
    Json parts = Json::array();
    std::string text;
    for (const auto& p : cocycle_split(t.weights.desc, t.cocycle)) {
      parts.push_back({{"sector", p.at.sector}, {"end", p.at.end}, {"level_shift", p.level_shift}, {"stretch", p.stretch.str()}});
      text += p.at.sector + "." + p.at.end + ": level shift " + level_str(p.level_shift) + ", stretch " + p.stretch.str() + "\n";
    }
    if (!text.empty()) text.pop_back();
    emit({{"crossings", parts}}, text);
    return 0;
  }
  fail(ErrorKind::Usage, "unknown weights action '" + action + "'");
}

// --- selfcheck ---------------------------------------------------------------------

int cmd_selfcheck(std::uint64_t seed, std::uint64_t cases) {
  SelfcheckReport r = run_selfcheck(seed, cases);
  if (json_mode()) {
    for (const auto& l : r.laws) {
      Json j = {{"suite", l.suite}, {"law", l.law}, {"cases", l.cases}, {"failures", l.failures}};
      if (l.failures) j["witness"] = l.witness;
      std::cout << j.dump() << '\n';
    }
    std::cout << Json{{"seed", r.seed}, {"cases", r.cases}, {"ok", r.ok()}}.dump() << '\n';
  } else {
    for (const auto& l : r.laws) {
      std::cout << (l.failures ? "FAIL " : "ok   ") << l.suite << ": " << l.law << " (" << l.cases << ")";
      if (l.failures) std::cout << "  " << l.failures << " failures, e.g. " << l.witness;
      std::cout << '\n';
    }
    std::cout << (r.ok() ? "all laws hold" : "some laws fail") << '\n';
  }
  return r.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact arithmetic in ordered semi-algebraic structures"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"json", "text"}));

  std::string structure, expr, action, event, given, partition, function, scalar;
  long long level = 0;
  std::vector<std::string> nodes;
  std::uint64_t seed = 42, cases = 1000;

  auto* eval = app.add_subcommand("eval", "Evaluate an expression over element literals");
  eval->add_option("structure", structure, "Structure, e.g. \"P\" or \"Z /\\ Rc\"")->required();
  eval->add_option("expression", expr, "Expression, e.g. \"(-1,3/4) * inv((0,1/2))\"")->required();

  auto* measure = app.add_subcommand("measure", "Query an L-measure scene");
  measure->add_option("action", action, "eval | slice | slices | height | align | shift | integrate | open-graded")
      ->required();
  measure->add_option("scene", opt.file, "Scene file");
  measure->add_option("--builtin", opt.builtin, "Built-in scene: dartboard, dartboard-depth2");
  measure->add_option("--event", event, "Event expression (names, &, |, !)");
  measure->add_option("--level,--by", level, "Level k for slice / open-graded, shift amount for shift");
  measure->add_option("--function", function, "Function file for integrate");

  auto* probc = app.add_subcommand("prob", "Probability queries on a P-measure scene");
  probc->add_option("action", action, "validate | cond | bayes | standardize | depth")->required();
  probc->add_option("scene", opt.file, "Scene file");
  probc->add_option("--builtin", opt.builtin, "Built-in scene: dartboard, dartboard-depth2");
  probc->add_option("--event", event, "Event A");
  probc->add_option("--given", given, "Conditioning event B");
  probc->add_option("--partition", partition, "Comma-separated partition cells");

  auto* tree = app.add_subcommand("tree", "Distances and axiom checks on an L-tree");
  tree->add_option("action", action, "dist | verify")->required();
  tree->add_option("file", opt.file, "Tree file")->required();
  tree->add_option("nodes", nodes, "Two nodes for dist");

  auto* weights = app.add_subcommand("weights", "Branch equations on a weighted track");
  weights->add_option("action", action, "check | deck | split")->required();
  weights->add_option("file", opt.file, "Track file")->required();
  weights->add_option("--scalar", scalar, "Deck scalar literal");

  auto* self = app.add_subcommand("selfcheck", "Run the property suites");
  self->add_option("--seed", seed, "Random seed");
  self->add_option("--cases", cases, "Cases per suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*eval) return cmd_eval(structure, expr);
    if (*measure) return cmd_measure(action, event, level, function);
    if (*probc) return cmd_prob(action, event, given, partition);
    if (*tree) return cmd_tree(action, nodes);
    if (*weights) return cmd_weights(action, scalar);
    if (*self) return cmd_selfcheck(seed, cases);
  } catch (const Error& e) {
    if (json_mode()) {
      std::cout << Json{{"error", to_string(e.kind())}, {"message", e.what()}}.dump() << '\n';
    } else {
      std::cerr << "error (" << to_string(e.kind()) << "): " << e.what() << '\n';
    }
    return exit_for(e.kind());
  }
  return 2;
}
