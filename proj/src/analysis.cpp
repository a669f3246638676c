#include "udpkit/analysis.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "fast_ideal.hpp"
#include "path_codes.hpp"

namespace udpkit {

namespace {

bool has_canonical_intersect(const Ring& ring) {
  return ring.has(Capability::Intersect) && ring.kind() != RingKind::ZPoly;
}

UdpVerdict undecided(std::string_view rule, std::string evidence) {
  UdpVerdict v;
  v.status = UdpStatus::Undecided;
  v.rule = std::string(rule);
  v.evidence.push_back(std::move(evidence));
  return v;
}

UdpVerdict holds(std::string_view rule, std::string evidence) {
  UdpVerdict v = undecided(rule, std::move(evidence));
  v.status = UdpStatus::Holds;
  return v;
}

void require_same_ring(const Ideal& i, const Ideal& j, const Ideal& k) {
  if (!(i.ring() == j.ring()) || !(i.ring() == k.ring())) {
    throw RingMismatchError("ideal triple spans more than one ring");
  }
  if (!has_canonical_intersect(i.ring())) {
    throw CapabilityError("checking the construction precondition needs intersect over " + i.ring().literal());
  }
}

void require_sum_nondistributive(const Ideal& i, const Ideal& j, const Ideal& k) {
  require_same_ring(i, j, k);
  if (is_sum_distributive_triple(i, j, k)) {
    throw PreconditionError("I + (J ∩ K) equals (I + J) ∩ (I + K) for I = " + i.to_string() + ", J = " +
                            j.to_string() + ", K = " + k.to_string());
  }
}

/// Pair intersections, computed lazily for infinite rings and eagerly (as
/// codes) for finite ones.
class IntersectionTable {
 public:
  explicit IntersectionTable(const LabeledGraph& g) : g_(g) {
    if (g.ring().is_finite()) {
      alg_.emplace(g.ring());
      codes_ = detail::intersection_codes(g, *alg_);
    }
  }

  bool sum_equals(std::size_t u, std::size_t z, std::size_t w) {
    const std::size_t n = g_.vertex_count();
    if (alg_) return codes_[u * n + w] == alg_->sum(codes_[u * n + z], codes_[z * n + w]);
    return get(u, w) == ideal_sum(get(u, z), get(z, w));
  }

  Ideal get(std::size_t a, std::size_t b) {
    const std::size_t n = g_.vertex_count();
    if (alg_) return alg_->ideal(codes_[a * n + b]);
    const auto key = std::make_pair(std::min(a, b), std::max(a, b));
    auto it = cache_.find(key);
    if (it == cache_.end()) {
      it = cache_.emplace(key, paths_intersection(g_, g_.vertices()[a], g_.vertices()[b])).first;
    }
    return it->second;
  }

 private:
  const LabeledGraph& g_;
  std::optional<detail::FastIdeals> alg_;
  std::vector<std::uint64_t> codes_;
  std::map<std::pair<std::size_t, std::size_t>, Ideal> cache_;
};

std::vector<char> membership(const LabeledGraph& g, const std::set<std::string>& names) {
  std::vector<char> in(g.vertex_count(), 0);
  for (const auto& name : names) in[g.vertex_index(name)] = 1;
  return in;
}

std::string set_literal(const std::vector<Element>& xs) {
  std::string out = "{";
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? ", " : "") + xs[i].to_string();
  return out + "}";
}

}  // namespace

// --- pasting ---------------------------------------------------------------

PastingCheck pasting_condition(const LabeledGraph& g, std::string_view z, const std::set<std::string>& side1,
                               const std::set<std::string>& side2) {
  if (!has_canonical_intersect(g.ring())) {
    throw CapabilityError("pasting condition needs intersect and ideal equality; " + g.ring().literal() +
                          " has neither");
  }
  const std::size_t zi = g.vertex_index(z);
  auto in1 = membership(g, side1);
  auto in2 = membership(g, side2);
  in1[zi] = in2[zi] = 0;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if (in1[v] && in2[v]) throw PreconditionError("vertex '" + g.vertices()[v] + "' lies on both sides");
  }
  // z must separate the sides.
  std::vector<char> seen(g.vertex_count(), 0);
  std::vector<std::size_t> stack;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if (in1[v]) {
      seen[v] = 1;
      stack.push_back(v);
    }
  }
  seen[zi] = 1;
  while (!stack.empty()) {
    const auto x = stack.back();
    stack.pop_back();
    if (in2[x]) {
      throw PreconditionError("'" + std::string(z) + "' does not separate the two sides (reached '" +
                              g.vertices()[x] + "')");
    }
    for (const auto& inc : g.incident(x)) {
      if (!seen[inc.neighbor]) {
        seen[inc.neighbor] = 1;
        stack.push_back(inc.neighbor);
      }
    }
  }

  IntersectionTable table(g);
  PastingCheck out;
  for (std::size_t u = 0; u < g.vertex_count(); ++u) {
    if (!in1[u]) continue;
    for (std::size_t w = 0; w < g.vertex_count(); ++w) {
      if (!in2[w]) continue;
      ++out.pairs;
      if (table.sum_equals(u, zi, w)) continue;
      out.holds = false;
      out.u = g.vertices()[u];
      out.w = g.vertices()[w];
      out.lhs = table.get(u, w);
      out.rhs = ideal_sum(table.get(u, zi), table.get(zi, w));
      return out;
    }
  }
  return out;
}

// --- unicyclic -------------------------------------------------------------

UdpVerdict unicyclic_check(const LabeledGraph& g) {
  if (!is_unicyclic(g)) throw StructuralError("unicyclic_check needs a connected graph with exactly one cycle");
  if (is_cycle(g)) return holds(rules::kCycle, "graph is a cycle");
  if (!g.is_simple()) {
    return undecided(rules::kNoRule, "unicyclic multigraph: parallel edges change the path sums");
  }
  if (!has_canonical_intersect(g.ring())) {
    return undecided(rules::kCapability, g.ring().literal() + " lacks intersect; pasting condition not decidable");
  }

  // Peel leaves; what is left is the cycle.
  const std::size_t n = g.vertex_count();
  std::vector<std::size_t> degree(n);
  std::vector<char> on_cycle(n, 1);
  std::deque<std::size_t> leaves;
  for (std::size_t v = 0; v < n; ++v) {
    degree[v] = g.incident(v).size();
    if (degree[v] == 1) leaves.push_back(v);
  }
  while (!leaves.empty()) {
    const auto v = leaves.front();
    leaves.pop_front();
    on_cycle[v] = 0;
    for (const auto& inc : g.incident(v)) {
      if (on_cycle[inc.neighbor] && --degree[inc.neighbor] == 1) leaves.push_back(inc.neighbor);
    }
  }
  std::vector<std::size_t> cycle;
  {
    std::size_t start = 0;
    while (!on_cycle[start]) ++start;
    std::size_t prev = n, at = start;
    do {
      cycle.push_back(at);
      std::size_t next = n;
      for (const auto& inc : g.incident(at)) {
        if (on_cycle[inc.neighbor] && inc.neighbor != prev) {
          next = inc.neighbor;
          break;
        }
      }
      prev = at;
      at = next;
    } while (at != start);
  }

  UdpVerdict verdict;
  verdict.rule = std::string(rules::kUnicyclic);
  std::set<std::string> pasted;
  for (auto v : cycle) pasted.insert(g.vertices()[v]);
  verdict.evidence.push_back("cycle has " + std::to_string(cycle.size()) + " vertices");

  for (auto root : cycle) {
    std::set<std::string> tree{g.vertices()[root]};
    std::vector<std::size_t> stack{root};
    std::vector<char> seen(n, 0);
    seen[root] = 1;
    while (!stack.empty()) {
      const auto x = stack.back();
      stack.pop_back();
      for (const auto& inc : g.incident(x)) {
        if (seen[inc.neighbor] || on_cycle[inc.neighbor]) continue;
        seen[inc.neighbor] = 1;
        tree.insert(g.vertices()[inc.neighbor]);
        stack.push_back(inc.neighbor);
      }
    }
    if (tree.size() == 1) continue;
    const auto& z = g.vertices()[root];
    const auto check = pasting_condition(g, z, tree, pasted);
    if (check.holds) {
      verdict.evidence.push_back("tree at '" + z + "' (" + std::to_string(tree.size() - 1) +
                                 " vertices): pasting condition holds for " + std::to_string(check.pairs) +
                                 " pairs");
      pasted.insert(tree.begin(), tree.end());
      continue;
    }

    verdict.status = UdpStatus::Fails;
    const auto& u = *check.u;
    const auto& w = *check.w;
    verdict.evidence.push_back("tree at '" + z + "': paths intersection(" + u + ", " + w +
                               ") = " + check.lhs->to_string() + " but paths intersection(" + u + ", " + z +
                               ") + paths intersection(" + z + ", " + w + ") = " + check.rhs->to_string());
    if (g.ring().is_finite()) {
      // Spline differences between u and w are exactly the right-hand side.
      std::optional<Element> x;
      for (const auto& e : ideal_elements(*check.lhs)) {
        if (!ideal_member(e, *check.rhs)) {
          x = e;
          break;
        }
      }
      bool certified = false;
      try {
        const SplineSpace space(g);
        certified = !space.achievable(g.vertex_index(u), g.vertex_index(w), x->index());
        verdict.evidence.push_back("achievable differences(" + u + ", " + w +
                                   ") = " + set_literal(space.differences(g.vertex_index(u), g.vertex_index(w))));
      } catch (const SearchSpaceError&) {
        verdict.evidence.push_back("witness not re-checked by enumeration: search space above the cap");
      }
      verdict.witness = Witness{u, w, *x, certified};
    } else {
      // Principal ideal rings: the generator of the left side escapes the right side.
      verdict.witness = Witness{u, w, check.lhs->canonical_generators().front(), false};
      verdict.evidence.push_back("witness is symbolic: no enumeration over " + g.ring().literal());
    }
    return verdict;
  }
  verdict.status = UdpStatus::Holds;
  return verdict;
}

// --- structural dispatcher ---------------------------------------------------

UdpVerdict udp_structural(const LabeledGraph& g) {
  if (is_tree(g)) return holds(rules::kTree, "graph is a tree");
  if (is_cycle(g)) return holds(rules::kCycle, "graph is a cycle");
  if (has_pedpp(g)) return holds(rules::kPedpp, "distinct paths with common endpoints are edge-disjoint");
  if (!has_canonical_intersect(g.ring())) {
    return undecided(rules::kCapability, g.ring().literal() + " lacks intersect; no structural rule applies");
  }
  if (is_unicyclic(g)) return unicyclic_check(g);
  return undecided(rules::kNoRule, "graph is neither a tree, a cycle, nor unicyclic");
}

// --- subdivision -------------------------------------------------------------

UdpVerdict subdivision_transfer(const LabeledGraph& g, const UdpVerdict& verdict,
                                std::span<const SubdivisionStep> plan) {
  if (verdict.status != UdpStatus::Fails || !verdict.witness) {
    throw PreconditionError("subdivision transfer needs a Fails verdict with a witness");
  }
  if (!g.has_vertex(verdict.witness->u) || !g.has_vertex(verdict.witness->w)) {
    throw PreconditionError("witness vertices are not in the graph");
  }
  if (plan.empty()) return verdict;
  // Validates the plan against g.
  const auto sub = subdivide_labeled(g, plan);
  (void)sub;
  UdpVerdict out;
  out.status = UdpStatus::Fails;
  out.rule = std::string(rules::kSubdivision);
  out.witness = verdict.witness;
  for (const auto& step : plan) {
    out.evidence.push_back("edge '" + step.edge + "' split into " + std::to_string(step.segments) + " segments");
  }
  out.evidence.push_back("witness carried over from rule " + verdict.rule);
  return out;
}

// --- constructions -----------------------------------------------------------

Construction build_unicyclic_counterexample(const Ideal& i, const Ideal& j, const Ideal& k) {
  require_sum_nondistributive(i, j, k);
  LabeledGraph g(i.ring(), {"u", "z", "a", "w", "b"},
                 {{"uz", "u", "z", i}, {"za", "z", "a", j}, {"aw", "a", "w", j}, {"zb", "z", "b", k},
                  {"bw", "b", "w", k}});
  return {std::move(g), "u", "w", "z"};
}

namespace {

void require_diamond(const Ideal& i, const Ideal& j, const Ideal& k) {
  require_same_ring(i, j, k);
  const Ideal lhs = ideal_intersect(ideal_sum(i, k), ideal_sum(j, k));
  const Ideal rhs = ideal_sum(ideal_intersect(i, j), k);
  if (lhs == rhs) {
    throw PreconditionError("(I + K) ∩ (J + K) equals (I ∩ J) + K = " + rhs.to_string() + " for I = " +
                            i.to_string() + ", J = " + j.to_string() + ", K = " + k.to_string());
  }
}

}  // namespace

std::optional<IdealTriple> find_diamond_triple(const Ring& ring) {
  const auto ideals = all_ideals(ring);
  for (const auto& i : ideals) {
    if (i.is_zero()) continue;
    for (const auto& j : ideals) {
      if (j.is_zero()) continue;
      const Ideal ij = ideal_intersect(i, j);
      for (const auto& k : ideals) {
        if (k.is_zero()) continue;
        if (!(ideal_intersect(ideal_sum(i, k), ideal_sum(j, k)) == ideal_sum(ij, k))) return IdealTriple{i, j, k};
      }
    }
  }
  return std::nullopt;
}

Construction build_diamond_multigraph(const Ideal& i, const Ideal& j, const Ideal& k) {
  require_diamond(i, j, k);
  LabeledGraph g(i.ring(), {"u", "c", "v"},
                 {{"uc1", "u", "c", i}, {"uc2", "u", "c", j}, {"uv", "u", "v", ideal_sum(i, k)},
                  {"cv", "c", "v", k}});
  return {std::move(g), "u", "v", std::nullopt};
}

Construction build_diamond_counterexample(const Ideal& i, const Ideal& j, const Ideal& k) {
  require_diamond(i, j, k);
  LabeledGraph g(i.ring(), {"u", "b", "c", "v"},
                 {{"ub", "u", "b", i}, {"bc", "b", "c", i}, {"uc", "u", "c", j},
                  {"uv", "u", "v", ideal_sum(i, k)}, {"cv", "c", "v", k}});
  return {std::move(g), "u", "v", std::nullopt};
}

Construction build_prufer_graph(const Ideal& i, const Ideal& j, const Ideal& k) {
  require_sum_nondistributive(i, j, k);
  LabeledGraph g(i.ring(), {"1", "2", "3", "4"},
                 {{"12", "1", "2", i}, {"23", "2", "3", k}, {"24", "2", "4", j}, {"34", "3", "4", j}});
  return {std::move(g), "1", "3", "2"};
}

Construction construct_failing_labeling(const Skeleton& skeleton, const Ring& ring) {
  std::vector<Ideal> zero_labels(skeleton.edges.size(), Ideal::zero(ring));
  const auto shape = LabeledGraph::from_skeleton(ring, skeleton, zero_labels);
  if (!shape.is_simple()) throw PreconditionError("construct_failing_labeling needs a simple graph");
  if (is_tree(shape)) throw StructuralError("skeleton is a tree; every labeling satisfies UDP");
  if (is_cycle(shape)) throw StructuralError("skeleton is a cycle; every labeling satisfies UDP");
  if (!ring.is_finite()) {
    throw ObstructionError("no non-distributive ideal triple can be searched for over " + ring.literal());
  }
  const auto triple = find_sum_nondistributive_triple(ring);
  if (!triple) throw ObstructionError(ring.literal() + " has a distributive ideal lattice");

  // Shortest cycle: close each edge by a BFS path that avoids it.
  const std::size_t n = shape.vertex_count();
  std::vector<std::size_t> best_cycle;
  for (std::size_t e = 0; e < shape.edge_count(); ++e) {
    const auto a = shape.endpoint_u(e), b = shape.endpoint_v(e);
    std::vector<std::size_t> parent(n, n);
    std::deque<std::size_t> queue{a};
    parent[a] = a;
    while (!queue.empty() && parent[b] == n) {
      const auto x = queue.front();
      queue.pop_front();
      for (const auto& inc : shape.incident(x)) {
        if (inc.edge == e || parent[inc.neighbor] != n) continue;
        parent[inc.neighbor] = x;
        queue.push_back(inc.neighbor);
      }
    }
    if (parent[b] == n) continue;
    std::vector<std::size_t> cyc;
    for (std::size_t x = b; x != a; x = parent[x]) cyc.push_back(x);
    cyc.push_back(a);
    if (best_cycle.empty() || cyc.size() < best_cycle.size()) best_cycle = std::move(cyc);
  }
  std::vector<char> on_cycle(n, 0);
  for (auto v : best_cycle) on_cycle[v] = 1;

  std::size_t u = n, z = n;
  for (std::size_t v = 0; v < n && u == n; ++v) {
    if (on_cycle[v]) continue;
    for (const auto& inc : shape.incident(v)) {
      if (on_cycle[inc.neighbor] && (z == n || inc.neighbor < z)) {
        u = v;
        z = inc.neighbor;
      }
    }
  }
  // Rotate the cycle so it starts at z.
  const auto zpos = std::find(best_cycle.begin(), best_cycle.end(), z) - best_cycle.begin();
  std::rotate(best_cycle.begin(), best_cycle.begin() + zpos, best_cycle.end());
  const std::size_t len = best_cycle.size();
  const std::size_t split = len / 2;
  const std::size_t w = best_cycle[split];

  auto edge_between = [&](std::size_t a, std::size_t b) {
    for (const auto& inc : shape.incident(a)) {
      if (inc.neighbor == b) return inc.edge;
    }
    throw GraphError("internal: missing cycle edge");
  };
  std::vector<Ideal> labels(shape.edge_count(), Ideal::unit(ring));
  labels[edge_between(u, z)] = triple->i;
  for (std::size_t p = 0; p < len; ++p) {
    const auto e = edge_between(best_cycle[p], best_cycle[(p + 1) % len]);
    labels[e] = p < split ? triple->j : triple->k;
  }
  return {shape.relabeled(labels), shape.vertices()[u], shape.vertices()[w], shape.vertices()[z]};
}

// --- obstruction report --------------------------------------------------------

PruferReport check_prufer_obstruction(const Ring& ring, const SearchOptions& options) {
  if (!ring.is_finite()) {
    throw CapabilityError("obstruction search needs a finite ring; " + ring.literal() + " cannot be enumerated");
  }
  PruferReport report{ring, find_nondistributive_triple(ring), std::nullopt, std::nullopt, std::nullopt};
  if (!report.triple) return report;
  report.construction_triple = find_sum_nondistributive_triple(ring);
  if (!report.construction_triple) return report;
  const auto& t = *report.construction_triple;
  report.graph = build_prufer_graph(t.i, t.j, t.k);
  report.verdict = udp_bruteforce(report.graph->graph, options);
  return report;
}

}  // namespace udpkit
