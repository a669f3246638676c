#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "udpkit/graph.hpp"
#include "udpkit/verdict.hpp"

namespace udpkit {

using VertexValues = std::map<std::string, Element>;

/// A generalized spline: one ring element per vertex such that across every
/// edge the difference of the endpoint values lies in the edge label.
struct Spline {
  VertexValues values;

  friend bool operator==(const Spline&, const Spline&) = default;
  friend bool operator<(const Spline& a, const Spline& b) { return a.values < b.values; }
};

struct SplineCheck {
  bool ok = true;
  /// Ids of edges whose condition fails, in edge order.
  std::vector<std::string> failing_edges;
};

/// Checks every edge condition. Throws GraphError if a vertex has no value and
/// RingMismatchError if a value is from another ring.
SplineCheck verify_spline(const LabeledGraph& g, const VertexValues& values);

struct SearchOptions {
  /// Refuse instances with |R|^(|V|-1) above this.
  double max_assignments = 1e8;
  /// Worker threads for the spline search; results do not depend on it.
  unsigned workers = 1;
};

/// Every spline with value 0 at `base`, each once, in lexicographic order of
/// the search. Finite rings only.
std::vector<Spline> enumerate_splines(const LabeledGraph& g, std::string_view base,
                                      const SearchOptions& options = {});

/// All differences rho(u) - rho(w) over the splines of a graph, computed by one
/// exhaustive search and then served for every vertex pair.
class SplineSpace {
 public:
  explicit SplineSpace(const LabeledGraph& g, const SearchOptions& options = {});
  ~SplineSpace();
  SplineSpace(SplineSpace&&) noexcept;
  SplineSpace& operator=(SplineSpace&&) noexcept;

  /// Number of splines normalized to 0 at the first vertex.
  std::uint64_t spline_count() const;
  bool achievable(std::size_t u, std::size_t w, std::uint64_t element_index) const;
  /// Sorted achievable differences for the pair.
  std::vector<Element> differences(std::size_t u, std::size_t w) const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

/// { rho(u) - rho(w) : rho a spline on g }, sorted.
std::vector<Element> achievable_differences(const LabeledGraph& g, std::string_view u, std::string_view w,
                                            const SearchOptions& options = {});

/// Decides the Universal Difference Property by exhaustive search: for every
/// ordered pair (u, w), each element of the path intersection must be some
/// spline difference. Throws CapabilityError over infinite rings and
/// SearchSpaceError above the cap.
UdpVerdict udp_bruteforce(const LabeledGraph& g, const SearchOptions& options = {});

/// Re-checks a Fails witness: x lies in paths_intersection(u, w) and, over a
/// finite ring, no spline achieves it. Returns false for non-Fails verdicts.
bool reverify_witness(const LabeledGraph& g, const UdpVerdict& verdict, const SearchOptions& options = {});

/// Builds a spline on a tree with rho(u) - rho(w) == x by decomposing x along
/// the unique w,u-path; off-path vertices copy their parent's value.
Spline construct_tree_spline(const LabeledGraph& g, std::string_view u, std::string_view w, const Element& x);

}  // namespace udpkit
