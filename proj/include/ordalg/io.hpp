#pragma once

#include <string>

#include "json.hpp"

#include "ordalg/integrate.hpp"
#include "ordalg/measure.hpp"
#include "ordalg/tree.hpp"
#include "ordalg/weights.hpp"

namespace ordalg {

using Json = nlohmann::json;

/// Reads a whole file; Usage error if it cannot be opened.
std::string read_file(const std::string& path);
Json parse_json(const std::string& text, const std::string& origin);

// Scene: {"structure": ..., "atoms": [{"id", "value"}], "events": {name: [ids]}}
LMeasure scene_from_json(const Json& j);
Json scene_to_json(const LMeasure& m);

/// "dartboard" or "dartboard-depth2".
LMeasure builtin_scene(const std::string& name);

enum class FunctionKind { Real, LValued, Signed };

struct SimpleFunction {
  FunctionKind kind = FunctionKind::Real;
  std::vector<XReal> real;  ///< kind Real
  LFunction lvalued;        ///< kinds LValued and Signed
};

// Function: {"kind": "real|lvalued|signed", "structure": ..., "values": {atom: literal}}
// Atoms missing from "values" get 0.
SimpleFunction function_from_json(const Json& j, const AtomSpace& space);

// Tree: {"structure", "nodes": [...], "edges": [{"a", "b", "value"}]}
LTree tree_from_json(const Json& j);

struct Track {
  BranchedGraph graph;
  WeightSystem weights;
  Cocycle cocycle;
};

// Track: {"structure", "sectors", "switches": [{"side1": [[sec, end]...], "side2"}],
//         "weights": {sec: literal}, "crossings": [{"sector", "end", "multiplier"}]}
Track track_from_json(const Json& j);
Json track_to_json(const Track& t);

}  // namespace ordalg
