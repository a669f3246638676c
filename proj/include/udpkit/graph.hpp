#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "udpkit/ring.hpp"

namespace udpkit {

/// Unlabeled edge: id plus endpoints.
struct EdgeSpec {
  std::string id;
  std::string u;
  std::string v;

  friend bool operator==(const EdgeSpec&, const EdgeSpec&) = default;
};

/// An unlabeled multigraph (a graph "skeleton").
struct Skeleton {
  std::vector<std::string> vertices;
  std::vector<EdgeSpec> edges;
};

struct Edge {
  std::string id;
  std::string u;
  std::string v;
  Ideal label;
};

/// Neighbor entry of the adjacency list.
struct Incidence {
  std::size_t neighbor;
  std::size_t edge;
};

/// A connected, loop-free multigraph whose edges carry ideals of one ring.
/// Vertex and edge order is declaration order; adjacency lists are sorted by
/// neighbor name and then by edge id, which fixes every enumeration order.
class LabeledGraph {
 public:
  /// Validates: nonempty, unique vertex names and edge ids, known endpoints,
  /// no loops, labels from `ring`, connected. Throws GraphError.
  LabeledGraph(Ring ring, std::vector<std::string> vertices, std::vector<Edge> edges);

  static LabeledGraph from_skeleton(const Ring& ring, const Skeleton& skeleton,
                                    std::span<const Ideal> labels);

  const Ring& ring() const { return ring_; }
  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  bool has_vertex(std::string_view name) const;
  std::size_t vertex_index(std::string_view name) const;
  bool has_edge(std::string_view id) const;
  std::size_t edge_index(std::string_view id) const;
  const Edge& edge(std::string_view id) const { return edges_[edge_index(id)]; }

  const std::vector<Incidence>& incident(std::size_t vertex) const { return adjacency_[vertex]; }
  /// Endpoint of `edge` opposite to `vertex`.
  std::size_t other_end(std::size_t edge, std::size_t vertex) const;
  std::size_t endpoint_u(std::size_t edge) const { return ends_[edge].first; }
  std::size_t endpoint_v(std::size_t edge) const { return ends_[edge].second; }

  bool is_simple() const;
  Skeleton skeleton() const;
  /// Same skeleton, labels replaced (in edge order).
  LabeledGraph relabeled(std::span<const Ideal> labels) const;

  /// Same vertex list, edge ids/endpoints and labels (labels compared by
  /// their printed canonical form, so zpoly graphs compare too).
  friend bool operator==(const LabeledGraph& a, const LabeledGraph& b);

 private:
  Ring ring_;
  std::vector<std::string> vertices_;
  std::vector<Edge> edges_;
  std::unordered_map<std::string, std::size_t> vertex_lookup_;
  std::unordered_map<std::string, std::size_t> edge_lookup_;
  std::vector<std::pair<std::size_t, std::size_t>> ends_;
  std::vector<std::vector<Incidence>> adjacency_;
};

/// A simple path: vertex sequence plus the edge used at each step. Paths are
/// identified by their edge-id sequence, so parallel edges give distinct paths.
struct Path {
  std::vector<std::string> vertices;
  std::vector<std::string> edges;

  friend bool operator==(const Path& a, const Path& b) { return a.edges == b.edges; }
};

/// Every simple u,v-path exactly once, in depth-first order over the sorted
/// adjacency lists.
std::vector<Path> all_paths(const LabeledGraph& g, std::string_view u, std::string_view v);

/// Same enumeration on indices; each path is its list of edge indices.
std::vector<std::vector<std::size_t>> all_path_edges(const LabeledGraph& g, std::size_t u, std::size_t v);

/// Sum of the edge labels along the path.
Ideal path_label_sum(const LabeledGraph& g, const Path& path);

/// Intersection over all simple u,v-paths of the path label sums.
Ideal paths_intersection(const LabeledGraph& g, std::string_view u, std::string_view v);

bool is_tree(const LabeledGraph& g);
/// A connected 2-regular multigraph; the 2-vertex graph with two parallel
/// edges counts as a cycle.
bool is_cycle(const LabeledGraph& g);
/// Connected with exactly one cycle (|E| == |V|).
bool is_unicyclic(const LabeledGraph& g);

enum class StructureClass { Tree, Cycle, Other };
std::string_view to_string(StructureClass c);
StructureClass classify_structure(const LabeledGraph& g);

/// Direct check: every two distinct paths with the same endpoints are
/// edge-disjoint.
bool has_pedpp(const LabeledGraph& g);

/// Vertices with at least three distinct neighbors inside the union F of all
/// u,v-paths, i.e. internal vertices of a star S_k (k >= 3) contained in F.
std::set<std::string> choke_points(const LabeledGraph& g, std::string_view u, std::string_view v);

// --- surgeries -------------------------------------------------------------

struct SubdivisionStep {
  std::string edge;
  std::size_t segments;
};

struct Subdivision {
  LabeledGraph graph;
  /// Edge id in the subdivision -> originating edge id in the source graph.
  std::map<std::string, std::string> origin;
};

/// Replaces each planned edge by a path of `segments` edges through fresh
/// vertices "<id>.s1", "<id>.s2", ...; the new edges are "<id>.1" ... "<id>.k"
/// and carry the original label.
Subdivision subdivide_labeled(const LabeledGraph& g, std::span<const SubdivisionStep> plan);

/// Collapses every class of parallel edges into its first edge, labeled by
/// the intersection of the class.
LabeledGraph reduce_multigraph(const LabeledGraph& g);

struct Pasting {
  LabeledGraph graph;
  /// Name of the identified vertex in the result (z1).
  std::string joint;
  /// Second graph's vertex name -> name in the result.
  std::map<std::string, std::string> second_vertices;
  /// Second graph's edge id -> id in the result.
  std::map<std::string, std::string> second_edges;
};

/// Disjoint union with z1 and z2 identified. Second-graph vertex names and
/// edge ids that collide with the first graph are prefixed with "g2.".
Pasting paste_at_vertex(const LabeledGraph& g1, const LabeledGraph& g2, std::string_view z1,
                        std::string_view z2);

/// Labeling of `host` that agrees with `g` on g's edges (matched by edge id and
/// endpoints) and is <1> elsewhere.
LabeledGraph extend_with_unit_labels(const LabeledGraph& g, const Skeleton& host);

}  // namespace udpkit
