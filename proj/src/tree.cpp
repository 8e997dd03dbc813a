#include "ordalg/tree.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "ordalg/arith.hpp"
#include "ordalg/error.hpp"

namespace ordalg {

LTree::LTree(StructDesc d, std::vector<std::string> nodes, std::vector<TreeEdge> edges)
    : desc_(std::move(d)), nodes_(std::move(nodes)), edges_(std::move(edges)) {
  if (!desc_.caps().is_semigroup) fail(ErrorKind::Capability, "edge lengths need an ordered semigroup, got " + desc_.str());
  if (nodes_.empty()) fail(ErrorKind::Validation, "a tree needs at least one node");
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    if (!index_.emplace(nodes_[i], i).second) fail(ErrorKind::Validation, "duplicate node '" + nodes_[i] + "'");
  }
  if (edges_.size() + 1 != nodes_.size()) {
    fail(ErrorKind::Validation, "a tree on " + std::to_string(nodes_.size()) + " nodes has " +
                                    std::to_string(nodes_.size() - 1) + " edges, got " + std::to_string(edges_.size()));
  }
  adj_.resize(nodes_.size());
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    std::size_t a = index_of(edges_[e].a), b = index_of(edges_[e].b);
    if (a == b) fail(ErrorKind::Validation, "loop at '" + edges_[e].a + "'");
    check_shape(desc_, edges_[e].value);
    adj_[a].push_back({b, e});
    adj_[b].push_back({a, e});
  }
  // n-1 edges and connected means acyclic.
  std::vector<bool> seen(nodes_.size());
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  std::size_t count = 1;
  while (!stack.empty()) {
    std::size_t u = stack.back();
    stack.pop_back();
    for (auto [v, e] : adj_[u]) {
      if (!seen[v]) {
        seen[v] = true;
        ++count;
        stack.push_back(v);
      }
    }
  }
  if (count != nodes_.size()) fail(ErrorKind::Validation, "the edges do not connect every node");
}

std::size_t LTree::index_of(const std::string& node) const {
  auto it = index_.find(node);
  if (it == index_.end()) fail(ErrorKind::Validation, "unknown node '" + node + "'");
  return it->second;
}

std::vector<std::size_t> LTree::path(std::size_t x, std::size_t y) const {
  std::vector<std::size_t> parent(nodes_.size(), nodes_.size());
  std::vector<std::size_t> queue{y};
  parent[y] = y;
  for (std::size_t q = 0; q < queue.size() && parent[x] == nodes_.size(); ++q) {
    for (auto [v, e] : adj_[queue[q]]) {
      if (parent[v] == nodes_.size()) {
        parent[v] = queue[q];
        queue.push_back(v);
      }
    }
  }
  // Walking parents from x leads to y.
  std::vector<std::size_t> out{x};
  while (out.back() != y) out.push_back(parent[out.back()]);
  return out;
}

std::vector<std::string> LTree::segment(const std::string& x, const std::string& y) const {
  std::vector<std::string> out;
  for (auto i : path(index_of(x), index_of(y))) out.push_back(nodes_[i]);
  return out;
}

std::string LTree::meet(const std::string& x, const std::string& y, const std::string& z) const {
  auto p = path(index_of(x), index_of(y));
  auto q = path(index_of(x), index_of(z));
  std::size_t i = 0;
  while (i + 1 < p.size() && i + 1 < q.size() && p[i + 1] == q[i + 1]) ++i;
  return nodes_[p[i]];
}

Value LTree::length(const std::vector<std::string>& path) const {
  Value acc = Value::zero();
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    std::size_t a = index_of(path[i]), b = index_of(path[i + 1]);
    auto it = std::find_if(adj_[a].begin(), adj_[a].end(), [&](auto p) { return p.first == b; });
    if (it == adj_[a].end()) fail(ErrorKind::Validation, "'" + path[i] + "' and '" + path[i + 1] + "' are not adjacent");
    acc = add(desc_, acc, edges_[it->second].value);
  }
  return acc;
}

Value LTree::distance(const std::string& x, const std::string& y) const { return length(segment(x, y)); }

namespace {

std::set<std::string> as_set(const std::vector<std::string>& v) { return {v.begin(), v.end()}; }

}  // namespace

MetricReport verify_metric(const LTree& t, std::optional<std::uint64_t> sample, std::uint64_t seed) {
  MetricReport r;
  const auto& d = t.desc();
  const auto& ns = t.nodes();
  const std::size_t n = ns.size();
  auto note = [&r](bool& flag, const std::string& what) {
    if (flag) r.problems.push_back(what);
    flag = false;
  };
  for (const auto& e : t.edges()) {
    if (e.value.is_zero()) note(r.full_support, "edge " + e.a + "-" + e.b + " has length 0");
  }

  // Pairwise data.
  std::vector<std::vector<std::vector<std::string>>> seg(n, std::vector<std::vector<std::string>>(n));
  std::vector<std::vector<Value>> dist(n, std::vector<Value>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      seg[i][j] = t.segment(ns[i], ns[j]);
      dist[i][j] = t.length(seg[i][j]);
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (dist[i][j].is_zero() != (i == j)) note(r.identity, "d(" + ns[i] + "," + ns[j] + ") = " + dist[i][j].str());
      auto rev = seg[j][i];
      std::reverse(rev.begin(), rev.end());
      if (!(dist[i][j] == dist[j][i]) || rev != seg[i][j]) note(r.symmetry, "asymmetry at " + ns[i] + "," + ns[j]);
      Value prefix = Value::zero();
      const auto& s = seg[i][j];
      for (std::size_t k = 0; k < s.size(); ++k) {
        std::size_t w = t.index_of(s[k]);
        Value part = add(d, dist[i][w], dist[w][j]);
        if (!(part == dist[i][j])) note(r.additivity, "d(x,w)+d(w,y) != d(x,y) for " + ns[i] + "," + s[k] + "," + ns[j]);
        if (less(d, dist[i][w], prefix)) note(r.monotone, "length decreases along [" + ns[i] + "," + ns[j] + "]");
        prefix = dist[i][w];
      }
    }
  }

  auto triple = [&](std::size_t x, std::size_t y, std::size_t z) {
    ++r.triples;
    if (less(d, add(d, dist[y][x], dist[x][z]), dist[y][z])) {
      note(r.triangle, "triangle fails at " + ns[y] + "," + ns[x] + "," + ns[z]);
    }
    // [x,y] n [x,z] is the segment [x,w].
    std::string w = t.meet(ns[x], ns[y], ns[z]);
    std::set<std::string> both;
    auto sy = as_set(seg[x][y]), sz = as_set(seg[x][z]);
    std::set_intersection(sy.begin(), sy.end(), sz.begin(), sz.end(), std::inserter(both, both.end()));
    std::size_t wi = t.index_of(w);
    if (both != as_set(seg[x][wi]) || !as_set(seg[y][z]).count(w)) {
      note(r.meets, "meet(" + ns[x] + "," + ns[y] + "," + ns[z] + ") = " + w + " is not the intersection");
    }
    // Segments meeting only at y compose.
    auto a = as_set(seg[x][y]), b = as_set(seg[y][z]);
    std::set<std::string> ab;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::inserter(ab, ab.end()));
    if (ab == std::set<std::string>{ns[y]}) {
      auto joined = seg[x][y];
      joined.insert(joined.end(), seg[y][z].begin() + 1, seg[y][z].end());
      if (joined != seg[x][z]) note(r.concatenation, "[" + ns[x] + "," + ns[y] + "] u [" + ns[y] + "," + ns[z] + "] is not a segment");
    }
  };

  if (sample) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    for (std::uint64_t s = 0; s < *sample; ++s) triple(pick(rng), pick(rng), pick(rng));
  } else {
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        for (std::size_t z = 0; z < n; ++z) triple(x, y, z);
  }
  return r;
}

}  // namespace ordalg
