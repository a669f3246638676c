#include "udpkit/spline.hpp"

#include <algorithm>

#include "path_codes.hpp"
#include "spline_search.hpp"

namespace udpkit {

std::string_view to_string(UdpStatus status) {
  switch (status) {
    case UdpStatus::Holds: return "holds";
    case UdpStatus::Fails: return "fails";
    case UdpStatus::Undecided: return "undecided";
  }
  return "?";
}

namespace {

detail::CodedGraph coded(const LabeledGraph& g, const detail::FastIdeals& alg) {
  detail::CodedGraph c;
  c.vertices = g.vertex_count();
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    c.ends.emplace_back(g.endpoint_u(e), g.endpoint_v(e));
    c.labels.push_back(alg.code(g.edges()[e].label));
  }
  return c;
}

void require_finite(const Ring& ring, std::string_view operation) {
  if (!ring.is_finite()) {
    throw CapabilityError(std::string(operation) + " needs a finite ring; " + ring.literal() +
                          " has no enumerate capability");
  }
}

std::string element_list(const std::vector<Element>& xs) {
  std::string out = "{";
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? ", " : "") + xs[i].to_string();
  return out + "}";
}

}  // namespace

SplineCheck verify_spline(const LabeledGraph& g, const VertexValues& values) {
  for (const auto& v : g.vertices()) {
    const auto it = values.find(v);
    if (it == values.end()) throw GraphError("spline has no value at vertex '" + v + "'");
    if (!(it->second.ring() == g.ring())) {
      throw RingMismatchError("value at '" + v + "' is not an element of " + g.ring().literal());
    }
  }
  for (const auto& [name, _] : values) {
    if (!g.has_vertex(name)) throw GraphError("spline assigns a value to unknown vertex '" + name + "'");
  }
  SplineCheck out;
  for (const auto& e : g.edges()) {
    if (!ideal_member(values.at(e.u) - values.at(e.v), e.label)) out.failing_edges.push_back(e.id);
  }
  out.ok = out.failing_edges.empty();
  return out;
}

std::vector<Spline> enumerate_splines(const LabeledGraph& g, std::string_view base, const SearchOptions& options) {
  require_finite(g.ring(), "enumerate_splines");
  const auto b = g.vertex_index(base);
  detail::check_search_space(g.ring().size(), g.vertex_count(), options.max_assignments);
  const detail::FastIdeals alg(g.ring());
  const auto cg = coded(g, alg);
  const detail::SplineSearch search(alg, cg, b);
  std::vector<Spline> out;
  search.for_each([&](const std::vector<std::uint64_t>& values) {
    Spline s;
    for (std::size_t v = 0; v < values.size(); ++v) {
      s.values.emplace(g.vertices()[v], Element::from_index(g.ring(), values[v]));
    }
    out.push_back(std::move(s));
  });
  return out;
}

struct SplineSpace::Impl {
  Ring ring;
  detail::FastIdeals alg;
  detail::DifferenceTable table;
  std::uint64_t count;
};

SplineSpace::SplineSpace(const LabeledGraph& g, const SearchOptions& options) {
  require_finite(g.ring(), "spline search");
  detail::check_search_space(g.ring().size(), g.vertex_count(), options.max_assignments);
  detail::FastIdeals alg(g.ring());
  const auto cg = coded(g, alg);
  const detail::SplineSearch search(alg, cg, 0);
  auto [table, count] = detail::collect_differences(alg, search, std::max(1u, options.workers));
  impl_ = std::make_unique<Impl>(Impl{g.ring(), alg, std::move(table), count});
}

SplineSpace::~SplineSpace() = default;
SplineSpace::SplineSpace(SplineSpace&&) noexcept = default;
SplineSpace& SplineSpace::operator=(SplineSpace&&) noexcept = default;

std::uint64_t SplineSpace::spline_count() const { return impl_->count; }

bool SplineSpace::achievable(std::size_t u, std::size_t w, std::uint64_t element_index) const {
  if (u == w) return element_index == 0;
  if (u < w) return impl_->table.test(u, w, element_index);
  return impl_->table.test(w, u, impl_->alg.sub(0, element_index));
}

std::vector<Element> SplineSpace::differences(std::size_t u, std::size_t w) const {
  std::vector<Element> out;
  for (std::uint64_t d = 0; d < impl_->alg.size(); ++d) {
    if (achievable(u, w, d)) out.push_back(Element::from_index(impl_->ring, d));
  }
  return out;
}

std::vector<Element> achievable_differences(const LabeledGraph& g, std::string_view u, std::string_view w,
                                            const SearchOptions& options) {
  const auto ui = g.vertex_index(u);
  const auto wi = g.vertex_index(w);
  return SplineSpace(g, options).differences(ui, wi);
}

UdpVerdict udp_bruteforce(const LabeledGraph& g, const SearchOptions& options) {
  require_finite(g.ring(), "brute-force UDP check");
  const SplineSpace space(g, options);
  const detail::FastIdeals alg(g.ring());
  const std::size_t n = g.vertex_count();

  const auto inter = detail::intersection_codes(g, alg);

  UdpVerdict verdict;
  verdict.rule = std::string(rules::kBruteForce);
  std::size_t pairs = 0;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t w = 0; w < n; ++w) {
      if (u == w) continue;
      ++pairs;
      for (auto x : alg.elements(inter[u * n + w])) {
        if (space.achievable(u, w, x)) continue;
        const auto& un = g.vertices()[u];
        const auto& wn = g.vertices()[w];
        verdict.status = UdpStatus::Fails;
        verdict.witness = Witness{un, wn, Element::from_index(g.ring(), x), true};
        verdict.evidence.push_back("paths intersection(" + un + ", " + wn +
                                   ") = " + alg.ideal(inter[u * n + w]).to_string());
        verdict.evidence.push_back("achievable differences(" + un + ", " + wn +
                                   ") = " + element_list(space.differences(u, w)));
        verdict.evidence.push_back("searched " + std::to_string(space.spline_count()) +
                                   " splines normalized at '" + g.vertices()[0] + "'");
        return verdict;
      }
    }
  }
  verdict.status = UdpStatus::Holds;
  verdict.evidence.push_back("checked " + std::to_string(pairs) + " ordered pairs against " +
                             std::to_string(space.spline_count()) + " splines normalized at '" +
                             g.vertices()[0] + "'");
  return verdict;
}

bool reverify_witness(const LabeledGraph& g, const UdpVerdict& verdict, const SearchOptions& options) {
  if (verdict.status != UdpStatus::Fails || !verdict.witness) return false;
  const Witness& wit = *verdict.witness;
  if (!g.has_vertex(wit.u) || !g.has_vertex(wit.w) || wit.u == wit.w) return false;
  if (!(wit.x.ring() == g.ring())) return false;
  if (!ideal_member(wit.x, paths_intersection(g, wit.u, wit.w))) return false;
  if (!g.ring().is_finite()) return true;
  const SplineSpace space(g, options);
  return !space.achievable(g.vertex_index(wit.u), g.vertex_index(wit.w), wit.x.index());
}

Spline construct_tree_spline(const LabeledGraph& g, std::string_view u, std::string_view w, const Element& x) {
  if (!is_tree(g)) throw StructuralError("construct_tree_spline needs a tree");
  g.ring().require(Capability::Decompose, "construct_tree_spline");
  if (!(x.ring() == g.ring())) throw RingMismatchError("target difference is not an element of " + g.ring().literal());
  const auto ui = g.vertex_index(u);
  const auto wi = g.vertex_index(w);

  std::vector<std::optional<Element>> value(g.vertex_count());
  value[wi] = Element::zero(g.ring());
  if (ui != wi) {
    const auto paths = all_path_edges(g, wi, ui);
    const auto& path = paths.front();
    std::vector<Ideal> labels;
    for (auto e : path) labels.push_back(g.edges()[e].label);
    const auto parts = decompose_in_sum(x, labels);
    std::size_t at = wi;
    for (std::size_t i = 0; i < path.size(); ++i) {
      const auto next = g.other_end(path[i], at);
      value[next] = *value[at] + parts[i];
      at = next;
    }
  } else if (!x.is_zero()) {
    throw PreconditionError("rho(u) - rho(u) is always 0");
  }
  // Off-path vertices inherit the value of the vertex they hang from.
  std::vector<std::size_t> stack;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if (value[v]) stack.push_back(v);
  }
  while (!stack.empty()) {
    const auto v = stack.back();
    stack.pop_back();
    for (const auto& inc : g.incident(v)) {
      if (value[inc.neighbor]) continue;
      value[inc.neighbor] = value[v];
      stack.push_back(inc.neighbor);
    }
  }
  Spline s;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) s.values.emplace(g.vertices()[v], *value[v]);
  return s;
}

}  // namespace udpkit
