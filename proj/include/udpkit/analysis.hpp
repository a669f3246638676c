#pragma once

#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "udpkit/graph.hpp"
#include "udpkit/spline.hpp"
#include "udpkit/verdict.hpp"

namespace udpkit {

/// Decides UDP from the structure of the graph alone where a rule applies:
/// trees, cycles and graphs with PEDPP hold; simple unicyclic graphs go
/// through unicyclic_check. Anything else is Undecided.
UdpVerdict udp_structural(const LabeledGraph& g);

struct PastingCheck {
  bool holds = true;
  /// Number of (u, w) pairs examined.
  std::size_t pairs = 0;
  /// First violating pair and both sides of the equality there.
  std::optional<std::string> u;
  std::optional<std::string> w;
  std::optional<Ideal> lhs;
  std::optional<Ideal> rhs;
};

/// For every u in side1 and w in side2 (z excluded) tests
///   paths_intersection(u, w) == paths_intersection(u, z) + paths_intersection(z, w).
/// z must separate the two sides in g. Needs intersect and canonical equality.
PastingCheck pasting_condition(const LabeledGraph& g, std::string_view z, const std::set<std::string>& side1,
                               const std::set<std::string>& side2);

/// Cycle-with-pendant-trees decision: each tree is pasted in turn and the
/// pasting condition checked against everything pasted before it.
UdpVerdict unicyclic_check(const LabeledGraph& g);

/// Carries a Fails verdict over to subdivide_labeled(g, plan). Both witness
/// vertices survive subdivision and their path intersection is unchanged.
UdpVerdict subdivision_transfer(const LabeledGraph& g, const UdpVerdict& verdict,
                                std::span<const SubdivisionStep> plan);

/// A constructed graph with its designated vertices.
struct Construction {
  LabeledGraph graph;
  std::string u;
  std::string w;
  /// Cut vertex, where the construction has one.
  std::optional<std::string> z;
};

/// Pendant edge u-z labeled I on a 4-cycle z-a-w-b-z labeled J, J, K, K.
/// Requires I + (J ∩ K) != (I + J) ∩ (I + K).
Construction build_unicyclic_counterexample(const Ideal& i, const Ideal& j, const Ideal& k);

/// The diamond multigraph on u, c, v: parallel edges u-c labeled I and J,
/// u-v labeled I + K, c-v labeled K. Requires (I + K) ∩ (J + K) != (I ∩ J) + K.
Construction build_diamond_multigraph(const Ideal& i, const Ideal& j, const Ideal& k);

/// First triple of nonzero ideals (all_ideals order) with
/// (I + K) ∩ (J + K) != (I ∩ J) + K. Finite rings only.
std::optional<IdealTriple> find_diamond_triple(const Ring& ring);

/// The diamond graph: the multigraph above with its I edge split at b.
Construction build_diamond_counterexample(const Ideal& i, const Ideal& j, const Ideal& k);

/// Pendant edge 1-2 labeled I on the triangle 2-3 (K), 2-4 (J), 3-4 (J).
/// Requires I + (J ∩ K) != (I + J) ∩ (I + K).
Construction build_prufer_graph(const Ideal& i, const Ideal& j, const Ideal& k);

/// Labels a connected simple skeleton that is neither a tree nor a cycle so
/// that UDP fails: pendant edge u-z labeled I onto a shortest cycle, the two
/// z,w-arcs labeled J and K, every other edge <1>.
Construction construct_failing_labeling(const Skeleton& skeleton, const Ring& ring);

struct PruferReport {
  Ring ring;
  /// First triple violating I ∩ (J + K) == (I ∩ J) + (I ∩ K).
  std::optional<IdealTriple> triple;
  /// Triple used to label the obstruction graph.
  std::optional<IdealTriple> construction_triple;
  std::optional<Construction> graph;
  std::optional<UdpVerdict> verdict;
};

/// Searches a finite ring for a non-distributive ideal triple and, if one
/// exists, builds and brute-forces the obstruction graph.
PruferReport check_prufer_obstruction(const Ring& ring, const SearchOptions& options = {});

}  // namespace udpkit
