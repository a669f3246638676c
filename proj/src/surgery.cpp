#include <algorithm>
#include <unordered_set>

#include "udpkit/graph.hpp"

namespace udpkit {

Subdivision subdivide_labeled(const LabeledGraph& g, std::span<const SubdivisionStep> plan) {
  std::map<std::string, std::size_t> segments;
  for (const auto& step : plan) {
    if (!g.has_edge(step.edge)) throw GraphError("subdivision plan names unknown edge '" + step.edge + "'");
    if (step.segments < 2) throw GraphError("subdivision of edge '" + step.edge + "' needs at least 2 segments");
    if (!segments.emplace(step.edge, step.segments).second) {
      throw GraphError("edge '" + step.edge + "' appears twice in the subdivision plan");
    }
  }
  std::vector<std::string> vertices = g.vertices();
  std::unordered_set<std::string> vertex_names(vertices.begin(), vertices.end());
  std::unordered_set<std::string> edge_ids;
  for (const auto& e : g.edges()) edge_ids.insert(e.id);

  std::vector<Edge> edges;
  std::map<std::string, std::string> origin;
  for (const auto& e : g.edges()) {
    const auto it = segments.find(e.id);
    if (it == segments.end()) {
      edges.push_back(e);
      origin[e.id] = e.id;
      continue;
    }
    const std::size_t k = it->second;
    std::string prev = e.u;
    for (std::size_t i = 1; i <= k; ++i) {
      std::string next = e.v;
      if (i < k) {
        next = e.id + ".s" + std::to_string(i);
        if (!vertex_names.insert(next).second) throw GraphError("fresh vertex name '" + next + "' already in use");
        vertices.push_back(next);
      }
      std::string id = e.id + "." + std::to_string(i);
      if (edge_ids.count(id)) throw GraphError("fresh edge id '" + id + "' already in use");
      edges.push_back({id, prev, next, e.label});
      origin[id] = e.id;
      prev = std::move(next);
    }
  }
  return Subdivision{LabeledGraph(g.ring(), std::move(vertices), std::move(edges)), std::move(origin)};
}

LabeledGraph reduce_multigraph(const LabeledGraph& g) {
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> first_of_class;
  std::vector<std::optional<Ideal>> merged(g.edge_count());
  std::vector<char> keep(g.edge_count(), 0);
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    const auto a = g.endpoint_u(e), b = g.endpoint_v(e);
    const auto key = std::make_pair(std::min(a, b), std::max(a, b));
    const auto [it, fresh] = first_of_class.emplace(key, e);
    if (fresh) {
      keep[e] = 1;
      merged[e] = g.edges()[e].label;
    } else {
      merged[it->second] = ideal_intersect(*merged[it->second], g.edges()[e].label);
    }
  }
  std::vector<Edge> edges;
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    if (!keep[e]) continue;
    Edge copy = g.edges()[e];
    copy.label = *merged[e];
    edges.push_back(std::move(copy));
  }
  return LabeledGraph(g.ring(), g.vertices(), std::move(edges));
}

Pasting paste_at_vertex(const LabeledGraph& g1, const LabeledGraph& g2, std::string_view z1,
                        std::string_view z2) {
  if (!(g1.ring() == g2.ring())) {
    throw RingMismatchError("paste_at_vertex: graphs over " + g1.ring().literal() + " and " +
                            g2.ring().literal());
  }
  const std::string joint(g1.vertices()[g1.vertex_index(z1)]);
  const std::string second_joint(g2.vertices()[g2.vertex_index(z2)]);

  std::vector<std::string> vertices = g1.vertices();
  std::unordered_set<std::string> used(vertices.begin(), vertices.end());
  std::map<std::string, std::string> vmap;
  vmap[second_joint] = joint;
  for (const auto& v : g2.vertices()) {
    if (v == second_joint) continue;
    std::string name = v;
    while (used.count(name)) name = "g2." + name;
    used.insert(name);
    vertices.push_back(name);
    vmap[v] = name;
  }

  std::vector<Edge> edges = g1.edges();
  std::unordered_set<std::string> used_ids;
  for (const auto& e : edges) used_ids.insert(e.id);
  std::map<std::string, std::string> emap;
  for (const auto& e : g2.edges()) {
    std::string id = e.id;
    while (used_ids.count(id)) id = "g2." + id;
    used_ids.insert(id);
    emap[e.id] = id;
    edges.push_back({id, vmap.at(e.u), vmap.at(e.v), e.label});
  }
  return Pasting{LabeledGraph(g1.ring(), std::move(vertices), std::move(edges)), joint, std::move(vmap),
                 std::move(emap)};
}

LabeledGraph extend_with_unit_labels(const LabeledGraph& g, const Skeleton& host) {
  std::map<std::string, const EdgeSpec*> host_edges;
  for (const auto& e : host.edges) host_edges[e.id] = &e;
  for (const auto& v : g.vertices()) {
    if (std::find(host.vertices.begin(), host.vertices.end(), v) == host.vertices.end()) {
      throw GraphError("vertex '" + v + "' does not embed in the host skeleton");
    }
  }
  std::map<std::string, Ideal> labels;
  for (const auto& e : g.edges()) {
    const auto it = host_edges.find(e.id);
    if (it == host_edges.end()) throw GraphError("edge '" + e.id + "' does not embed in the host skeleton");
    const EdgeSpec& h = *it->second;
    if (!((h.u == e.u && h.v == e.v) || (h.u == e.v && h.v == e.u))) {
      throw GraphError("edge '" + e.id + "' has different endpoints in the host skeleton");
    }
    labels.emplace(e.id, e.label);
  }
  std::vector<Ideal> out;
  const Ideal unit = Ideal::unit(g.ring());
  for (const auto& e : host.edges) {
    const auto it = labels.find(e.id);
    out.push_back(it == labels.end() ? unit : it->second);
  }
  return LabeledGraph::from_skeleton(g.ring(), host, out);
}

}  // namespace udpkit
