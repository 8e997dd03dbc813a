#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ordalg/structure.hpp"
#include "ordalg/value.hpp"

namespace ordalg {

struct TreeEdge {
  std::string a, b;
  Value value;
};

/// Finite tree whose edges carry lengths in an ordered semigroup; nodes carry
/// no mass. Zero edge lengths are accepted and show up in verify_metric.
class LTree {
 public:
  LTree(StructDesc d, std::vector<std::string> nodes, std::vector<TreeEdge> edges);

  const StructDesc& desc() const { return desc_; }
  const std::vector<std::string>& nodes() const { return nodes_; }
  const std::vector<TreeEdge>& edges() const { return edges_; }
  std::size_t index_of(const std::string& node) const;

  /// The path from x to y, x first. segment(x, x) = [x].
  std::vector<std::string> segment(const std::string& x, const std::string& y) const;
  /// Last common node of segment(x, y) and segment(x, z).
  std::string meet(const std::string& x, const std::string& y, const std::string& z) const;
  /// Sum of the edge lengths along segment(x, y).
  Value distance(const std::string& x, const std::string& y) const;
  /// Sum of the edge lengths between consecutive nodes of a path.
  Value length(const std::vector<std::string>& path) const;

 private:
  std::vector<std::size_t> path(std::size_t x, std::size_t y) const;

  StructDesc desc_;
  std::vector<std::string> nodes_;
  std::vector<TreeEdge> edges_;
  std::map<std::string, std::size_t> index_;
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> adj_;  // (neighbour, edge)
};

struct MetricReport {
  bool full_support = true;  ///< no edge of length 0
  bool identity = true;      ///< d(x,y) = 0 iff x = y
  bool symmetry = true;      ///< d(x,y) = d(y,x) and [y,x] is [x,y] reversed
  bool triangle = true;      ///< d(y,z) <= d(y,x) + d(x,z)
  bool additivity = true;    ///< w on [x,y]: d(x,y) = d(x,w) + d(w,y)
  bool monotone = true;      ///< lengths grow along a segment
  bool meets = true;         ///< [x,y] n [x,z] = [x, meet], and meet lies on all three segments
  bool concatenation = true; ///< [x,y] n [y,z] = {y} implies [x,y] u [y,z] = [x,z]
  std::uint64_t triples = 0;
  std::vector<std::string> problems;

  bool ok() const {
    return full_support && identity && symmetry && triangle && additivity && monotone && meets && concatenation;
  }
};

/// Checks the order-tree axioms and the metric axioms over every node triple,
/// or over `sample` seeded random triples when given.
MetricReport verify_metric(const LTree& t, std::optional<std::uint64_t> sample = std::nullopt,
                           std::uint64_t seed = 0);

}  // namespace ordalg
