#include "ordalg/io.hpp"

#include <fstream>
#include <sstream>

#include "ordalg/error.hpp"

namespace ordalg {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorKind::Usage, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json parse_json(const std::string& text, const std::string& origin) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(origin + ": malformed JSON: " + e.what(), e.byte);
  }
}

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) fail(ErrorKind::Usage, std::string("missing field '") + key + "'");
  return j.at(key);
}

std::string text(const Json& j, const char* what) {
  if (!j.is_string()) fail(ErrorKind::Usage, std::string(what) + " must be a string");
  return j.get<std::string>();
}

std::vector<std::string> strings(const Json& j, const char* what) {
  if (!j.is_array()) fail(ErrorKind::Usage, std::string(what) + " must be an array");
  std::vector<std::string> out;
  for (const auto& x : j) out.push_back(text(x, what));
  return out;
}

Value literal(const StructDesc& d, const Json& j, const std::string& where) {
  std::string s = j.is_number_integer() ? std::to_string(j.get<long long>()) : text(j, where.c_str());
  try {
    return parse_value(d, s);
  } catch (const Error& e) {
    throw Error(e.kind(), where + ": " + e.what());
  }
}

}  // namespace

LMeasure scene_from_json(const Json& j) {
  StructDesc d = parse_struct(text(field(j, "structure"), "structure"));
  std::vector<std::string> ids;
  std::vector<Value> values;
  const Json& atoms = field(j, "atoms");
  if (!atoms.is_array()) fail(ErrorKind::Usage, "atoms must be an array");
  for (const auto& a : atoms) {
    ids.push_back(text(field(a, "id"), "atom id"));
    values.push_back(literal(d, field(a, "value"), "atom '" + ids.back() + "'"));
  }
  AtomSpace space(ids);
  if (j.contains("events")) {
    if (!j.at("events").is_object()) fail(ErrorKind::Usage, "events must be an object");
    for (const auto& [name, members] : j.at("events").items()) {
      space.define_event(name, space.from_atoms(strings(members, "event members")));
    }
  }
  return LMeasure(d, space, values);
}

Json scene_to_json(const LMeasure& m) {
  Json atoms = Json::array();
  for (std::size_t i = 0; i < m.space.size(); ++i) {
    atoms.push_back({{"id", m.space.atoms()[i]}, {"value", m.values[i].str()}});
  }
  Json events = Json::object();
  for (const auto& [name, e] : m.space.events()) events[name] = m.space.members(e);
  return {{"structure", m.desc.str()}, {"atoms", atoms}, {"events", events}};
}

LMeasure builtin_scene(const std::string& name) {
  if (name != "dartboard" && name != "dartboard-depth2") {
    fail(ErrorKind::Usage, "unknown built-in scene '" + name + "' (dartboard, dartboard-depth2)");
  }
  // Open quadrants have area 1/4; the four open rays of the cross have length
  // 1/4; the centre is a point of neither.
  Json j = {
      {"structure", "P"},
      {"atoms",
       {{{"id", "Q1"}, {"value", "(0,1/4)"}},
        {{"id", "Q2"}, {"value", "(0,1/4)"}},
        {{"id", "Q3"}, {"value", "(0,1/4)"}},
        {{"id", "Q4"}, {"value", "(0,1/4)"}},
        {{"id", "up"}, {"value", "(-1,1/4)"}},
        {{"id", "down"}, {"value", "(-1,1/4)"}},
        {{"id", "left"}, {"value", "(-1,1/4)"}},
        {{"id", "right"}, {"value", "(-1,1/4)"}},
        {{"id", "center"}, {"value", name == "dartboard" ? "0" : "(-2,1)"}}}},
      {"events",
       {{"Y", {"up", "down", "left", "right", "center"}},
        {"B", {"Q1", "Q2", "up", "left", "right", "center"}},
        {"A", {"up"}},
        {"H", {"left", "right", "center"}},
        {"A1", {"Q1", "up", "right", "center"}},
        {"A2", {"Q2"}},
        {"A3", {"Q3", "left", "down"}},
        {"A4", {"Q4"}}}},
  };
  return scene_from_json(j);
}

SimpleFunction function_from_json(const Json& j, const AtomSpace& space) {
  SimpleFunction f;
  std::string kind = text(field(j, "kind"), "kind");
  const Json& values = field(j, "values");
  if (!values.is_object()) fail(ErrorKind::Usage, "values must be an object");
  for (const auto& [atom, v] : values.items()) space.index_of(atom);
  if (kind == "real") {
    f.kind = FunctionKind::Real;
    f.real.assign(space.size(), XReal());
    for (const auto& [atom, v] : values.items()) {
      std::string s = v.is_number_integer() ? std::to_string(v.get<long long>()) : text(v, "value");
      f.real[space.index_of(atom)] = XReal::parse(s);
    }
    return f;
  }
  if (kind != "lvalued" && kind != "signed") fail(ErrorKind::Usage, "kind must be real, lvalued or signed");
  f.kind = kind == "lvalued" ? FunctionKind::LValued : FunctionKind::Signed;
  f.lvalued.desc = parse_struct(text(field(j, "structure"), "structure"));
  if ((f.kind == FunctionKind::Signed) != (f.lvalued.desc.kind() == DescKind::Double)) {
    fail(ErrorKind::Usage, "signed functions take values in double(L), and only they do");
  }
  f.lvalued.values.assign(space.size(), Value::zero());
  for (const auto& [atom, v] : values.items()) {
    f.lvalued.values[space.index_of(atom)] = literal(f.lvalued.desc, v, "value of '" + atom + "'");
  }
  return f;
}

LTree tree_from_json(const Json& j) {
  StructDesc d = parse_struct(text(field(j, "structure"), "structure"));
  std::vector<TreeEdge> edges;
  const Json& es = field(j, "edges");
  if (!es.is_array()) fail(ErrorKind::Usage, "edges must be an array");
  for (const auto& e : es) {
    TreeEdge te{text(field(e, "a"), "edge end"), text(field(e, "b"), "edge end"), {}};
    te.value = literal(d, field(e, "value"), "edge " + te.a + "-" + te.b);
    edges.push_back(std::move(te));
  }
  return LTree(d, strings(field(j, "nodes"), "nodes"), std::move(edges));
}

namespace {

std::vector<SectorEnd> side_from_json(const Json& j) {
  if (!j.is_array()) fail(ErrorKind::Usage, "a switch side must be an array");
  std::vector<SectorEnd> out;
  for (const auto& e : j) {
    auto pair = strings(e, "sector-end");
    if (pair.size() != 2) fail(ErrorKind::Usage, "a sector-end is [sector, end]");
    out.push_back({pair[0], pair[1]});
  }
  return out;
}

Json side_to_json(const std::vector<SectorEnd>& side) {
  Json out = Json::array();
  for (const auto& e : side) out.push_back({e.sector, e.end});
  return out;
}

}  // namespace

Track track_from_json(const Json& j) {
  Track t;
  t.weights.desc = parse_struct(text(field(j, "structure"), "structure"));
  const StructDesc& d = t.weights.desc;
  t.graph.sectors = strings(field(j, "sectors"), "sectors");
  const Json& sw = field(j, "switches");
  if (!sw.is_array()) fail(ErrorKind::Usage, "switches must be an array");
  for (const auto& s : sw) t.graph.switches.push_back({side_from_json(field(s, "side1")), side_from_json(field(s, "side2"))});
  const Json& ws = field(j, "weights");
  if (!ws.is_object()) fail(ErrorKind::Usage, "weights must be an object");
  for (const auto& [sector, v] : ws.items()) t.weights.weight[sector] = literal(d, v, "weight of '" + sector + "'");
  if (j.contains("crossings")) {
    for (const auto& c : j.at("crossings")) {
      SectorEnd at{text(field(c, "sector"), "sector"), text(field(c, "end"), "end")};
      t.cocycle.crossings.push_back({at, literal(d, field(c, "multiplier"), "multiplier at " + at.sector + "." + at.end)});
    }
  }
  t.graph.validate();
  return t;
}

Json track_to_json(const Track& t) {
  Json switches = Json::array();
  for (const auto& s : t.graph.switches) switches.push_back({{"side1", side_to_json(s.side1)}, {"side2", side_to_json(s.side2)}});
  Json weights = Json::object();
  for (const auto& [s, v] : t.weights.weight) weights[s] = v.str();
  Json crossings = Json::array();
  for (const auto& c : t.cocycle.crossings) {
    crossings.push_back({{"sector", c.at.sector}, {"end", c.at.end}, {"multiplier", c.multiplier.str()}});
  }
  return {{"structure", t.weights.desc.str()}, {"sectors", t.graph.sectors}, {"switches", switches},
          {"weights", weights}, {"crossings", crossings}};
}

}  // namespace ordalg
