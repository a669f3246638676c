#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "udpkit/graph.hpp"

namespace udpkit {

/// Small simple graph on vertices 0..n-1, edges (a, b) with a < b in
/// lexicographic order.
struct SimpleGraph {
  std::size_t n = 0;
  std::vector<std::pair<std::size_t, std::size_t>> edges;

  friend bool operator==(const SimpleGraph&, const SimpleGraph&) = default;
};

/// Canonical adjacency code: the largest upper-triangle bit string over all
/// relabelings that list vertices by descending degree. Isomorphic graphs get
/// equal codes. n <= 11.
std::uint64_t canonical_code(const SimpleGraph& g);

/// Every connected simple graph on exactly n vertices, one per isomorphism
/// class, in a deterministic order. Built by adding a vertex with a nonempty
/// neighborhood to each graph on n - 1 vertices.
std::vector<SimpleGraph> connected_graphs(std::size_t n);

/// Orbits of the automorphism group on vertices, each sorted, ordered by
/// smallest member.
std::vector<std::vector<std::size_t>> vertex_orbits(const SimpleGraph& g);

bool is_connected(const SimpleGraph& g);

/// Skeleton with vertices "1".."n" and edges "e1".."em".
Skeleton to_skeleton(const SimpleGraph& g);

}  // namespace udpkit
