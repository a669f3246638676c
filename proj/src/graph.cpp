#include "udpkit/graph.hpp"

#include <algorithm>
#include <numeric>

#include "fast_ideal.hpp"
#include "path_codes.hpp"

namespace udpkit {

LabeledGraph::LabeledGraph(Ring ring, std::vector<std::string> vertices, std::vector<Edge> edges)
    : ring_(ring), vertices_(std::move(vertices)), edges_(std::move(edges)) {
  if (vertices_.empty()) throw GraphError("graph has no vertices");
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (vertices_[i].empty()) throw GraphError("empty vertex name");
    if (!vertex_lookup_.emplace(vertices_[i], i).second) {
      throw GraphError("duplicate vertex '" + vertices_[i] + "'");
    }
  }
  adjacency_.resize(vertices_.size());
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    const Edge& edge = edges_[e];
    if (!edge_lookup_.emplace(edge.id, e).second) throw GraphError("duplicate edge id '" + edge.id + "'");
    const auto u = vertex_lookup_.find(edge.u);
    const auto v = vertex_lookup_.find(edge.v);
    if (u == vertex_lookup_.end() || v == vertex_lookup_.end()) {
      throw GraphError("edge '" + edge.id + "' references undeclared vertex '" +
                       (u == vertex_lookup_.end() ? edge.u : edge.v) + "'");
    }
    if (u->second == v->second) throw GraphError("edge '" + edge.id + "' is a loop");
    if (!(edge.label.ring() == ring_)) {
      throw GraphError("edge '" + edge.id + "' label is not an ideal of " + ring_.literal());
    }
    ends_.emplace_back(u->second, v->second);
    adjacency_[u->second].push_back({v->second, e});
    adjacency_[v->second].push_back({u->second, e});
  }
  for (auto& list : adjacency_) {
    std::sort(list.begin(), list.end(), [&](const Incidence& a, const Incidence& b) {
      const auto& na = vertices_[a.neighbor];
      const auto& nb = vertices_[b.neighbor];
      if (na != nb) return na < nb;
      return edges_[a.edge].id < edges_[b.edge].id;
    });
  }
  // connectivity
  std::vector<char> seen(vertices_.size(), 0);
  std::vector<std::size_t> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const auto x = stack.back();
    stack.pop_back();
    for (const auto& inc : adjacency_[x]) {
      if (!seen[inc.neighbor]) {
        seen[inc.neighbor] = 1;
        ++reached;
        stack.push_back(inc.neighbor);
      }
    }
  }
  if (reached != vertices_.size()) {
    const auto missing = std::find(seen.begin(), seen.end(), 0) - seen.begin();
    throw GraphError("graph is disconnected (vertex '" + vertices_[missing] + "' unreachable from '" +
                     vertices_[0] + "')");
  }
}

LabeledGraph LabeledGraph::from_skeleton(const Ring& ring, const Skeleton& skeleton,
                                         std::span<const Ideal> labels) {
  if (labels.size() != skeleton.edges.size()) throw GraphError("label count does not match edge count");
  std::vector<Edge> edges;
  edges.reserve(labels.size());
  for (std::size_t i = 0; i < labels.size(); ++i) {
    const auto& e = skeleton.edges[i];
    edges.push_back({e.id, e.u, e.v, labels[i]});
  }
  return LabeledGraph(ring, skeleton.vertices, std::move(edges));
}

bool LabeledGraph::has_vertex(std::string_view name) const {
  return vertex_lookup_.count(std::string(name)) != 0;
}

std::size_t LabeledGraph::vertex_index(std::string_view name) const {
  const auto it = vertex_lookup_.find(std::string(name));
  if (it == vertex_lookup_.end()) throw GraphError("unknown vertex '" + std::string(name) + "'");
  return it->second;
}

bool LabeledGraph::has_edge(std::string_view id) const { return edge_lookup_.count(std::string(id)) != 0; }

std::size_t LabeledGraph::edge_index(std::string_view id) const {
  const auto it = edge_lookup_.find(std::string(id));
  if (it == edge_lookup_.end()) throw GraphError("unknown edge '" + std::string(id) + "'");
  return it->second;
}

std::size_t LabeledGraph::other_end(std::size_t edge, std::size_t vertex) const {
  return ends_[edge].first == vertex ? ends_[edge].second : ends_[edge].first;
}

bool LabeledGraph::is_simple() const {
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (auto [u, v] : ends_) {
    if (!seen.emplace(std::min(u, v), std::max(u, v)).second) return false;
  }
  return true;
}

Skeleton LabeledGraph::skeleton() const {
  Skeleton s{vertices_, {}};
  for (const auto& e : edges_) s.edges.push_back({e.id, e.u, e.v});
  return s;
}

LabeledGraph LabeledGraph::relabeled(std::span<const Ideal> labels) const {
  return from_skeleton(ring_, skeleton(), labels);
}

bool operator==(const LabeledGraph& a, const LabeledGraph& b) {
  if (!(a.ring_ == b.ring_) || a.vertices_ != b.vertices_ || a.edges_.size() != b.edges_.size()) return false;
  for (std::size_t i = 0; i < a.edges_.size(); ++i) {
    const auto& x = a.edges_[i];
    const auto& y = b.edges_[i];
    if (x.id != y.id || x.u != y.u || x.v != y.v || x.label.to_string() != y.label.to_string()) return false;
  }
  return true;
}

// --- paths -----------------------------------------------------------------

std::vector<std::vector<std::size_t>> all_path_edges(const LabeledGraph& g, std::size_t u, std::size_t v) {
  if (u == v) throw GraphError("path endpoints must differ");
  std::vector<std::vector<std::size_t>> out;
  std::vector<char> on_path(g.vertex_count(), 0);
  std::vector<std::size_t> edges;
  auto dfs = [&](auto& self, std::size_t x) -> void {
    if (x == v) {
      out.push_back(edges);
      return;
    }
    for (const auto& inc : g.incident(x)) {
      if (on_path[inc.neighbor]) continue;
      on_path[inc.neighbor] = 1;
      edges.push_back(inc.edge);
      self(self, inc.neighbor);
      edges.pop_back();
      on_path[inc.neighbor] = 0;
    }
  };
  on_path[u] = 1;
  dfs(dfs, u);
  return out;
}

std::vector<Path> all_paths(const LabeledGraph& g, std::string_view u, std::string_view v) {
  const auto ui = g.vertex_index(u);
  const auto vi = g.vertex_index(v);
  std::vector<Path> out;
  for (const auto& edges : all_path_edges(g, ui, vi)) {
    Path p;
    std::size_t at = ui;
    p.vertices.push_back(g.vertices()[at]);
    for (auto e : edges) {
      at = g.other_end(e, at);
      p.vertices.push_back(g.vertices()[at]);
      p.edges.push_back(g.edges()[e].id);
    }
    out.push_back(std::move(p));
  }
  return out;
}

Ideal path_label_sum(const LabeledGraph& g, const Path& path) {
  if (path.edges.empty()) throw GraphError("empty path");
  if (path.vertices.size() != path.edges.size() + 1) throw GraphError("malformed path");
  std::vector<Ideal> labels;
  for (std::size_t i = 0; i < path.edges.size(); ++i) {
    const Edge& e = g.edge(path.edges[i]);
    const auto& a = path.vertices[i];
    const auto& b = path.vertices[i + 1];
    if (!((e.u == a && e.v == b) || (e.u == b && e.v == a))) {
      throw GraphError("edge '" + e.id + "' does not join '" + a + "' and '" + b + "'");
    }
    labels.push_back(e.label);
  }
  return ideal_sum(labels);
}

Ideal paths_intersection(const LabeledGraph& g, std::string_view u, std::string_view v) {
  const Ring& ring = g.ring();
  ring.require(Capability::Intersect, "paths_intersection");
  const auto paths = all_path_edges(g, g.vertex_index(u), g.vertex_index(v));
  if (ring.is_finite()) {
    detail::FastIdeals alg(ring);
    std::vector<std::uint64_t> codes;
    for (const auto& e : g.edges()) codes.push_back(alg.code(e.label));
    std::uint64_t acc = alg.unit();
    for (const auto& path : paths) {
      std::uint64_t s = codes[path.front()];
      for (std::size_t i = 1; i < path.size(); ++i) s = alg.sum(s, codes[path[i]]);
      acc = alg.meet(acc, s);
    }
    return alg.ideal(acc);
  }
  std::optional<Ideal> acc;
  for (const auto& path : paths) {
    Ideal s = g.edges()[path.front()].label;
    for (std::size_t i = 1; i < path.size(); ++i) s = ideal_sum(s, g.edges()[path[i]].label);
    acc = acc ? ideal_intersect(*acc, s) : s;
  }
  return *acc;
}

namespace detail {

std::vector<std::uint64_t> intersection_codes(const LabeledGraph& g, const FastIdeals& alg) {
  const std::size_t n = g.vertex_count();
  std::vector<std::uint64_t> codes;
  for (const auto& e : g.edges()) codes.push_back(alg.code(e.label));
  std::vector<std::uint64_t> out(n * n, alg.unit());
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      std::uint64_t acc = alg.unit();
      for (const auto& path : all_path_edges(g, a, b)) {
        std::uint64_t s = codes[path.front()];
        for (std::size_t i = 1; i < path.size(); ++i) s = alg.sum(s, codes[path[i]]);
        acc = alg.meet(acc, s);
      }
      out[a * n + b] = out[b * n + a] = acc;
    }
  }
  return out;
}

}  // namespace detail

// --- structure -------------------------------------------------------------

bool is_tree(const LabeledGraph& g) { return g.edge_count() + 1 == g.vertex_count(); }

bool is_cycle(const LabeledGraph& g) {
  if (g.vertex_count() < 2 || g.edge_count() != g.vertex_count()) return false;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if (g.incident(v).size() != 2) return false;
  }
  return true;
}

bool is_unicyclic(const LabeledGraph& g) { return g.edge_count() == g.vertex_count(); }

std::string_view to_string(StructureClass c) {
  switch (c) {
    case StructureClass::Tree: return "tree";
    case StructureClass::Cycle: return "cycle";
    case StructureClass::Other: return "other";
  }
  return "?";
}

StructureClass classify_structure(const LabeledGraph& g) {
  if (is_tree(g)) return StructureClass::Tree;
  if (is_cycle(g)) return StructureClass::Cycle;
  return StructureClass::Other;
}

bool has_pedpp(const LabeledGraph& g) {
  std::vector<char> mark(g.edge_count(), 0);
  for (std::size_t u = 0; u < g.vertex_count(); ++u) {
    for (std::size_t v = u + 1; v < g.vertex_count(); ++v) {
      const auto paths = all_path_edges(g, u, v);
      for (std::size_t i = 0; i < paths.size(); ++i) {
        for (auto e : paths[i]) mark[e] = 1;
        for (std::size_t j = i + 1; j < paths.size(); ++j) {
          for (auto e : paths[j]) {
            if (mark[e]) return false;
          }
        }
        for (auto e : paths[i]) mark[e] = 0;
      }
    }
  }
  return true;
}

std::set<std::string> choke_points(const LabeledGraph& g, std::string_view u, std::string_view v) {
  const auto ui = g.vertex_index(u);
  const auto vi = g.vertex_index(v);
  std::vector<char> in_union(g.edge_count(), 0);
  for (const auto& path : all_path_edges(g, ui, vi)) {
    for (auto e : path) in_union[e] = 1;
  }
  std::set<std::string> out;
  for (std::size_t x = 0; x < g.vertex_count(); ++x) {
    std::set<std::size_t> neighbors;
    for (const auto& inc : g.incident(x)) {
      if (in_union[inc.edge]) neighbors.insert(inc.neighbor);
    }
    if (neighbors.size() >= 3) out.insert(g.vertices()[x]);
  }
  return out;
}

}  // namespace udpkit
