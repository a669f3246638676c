#pragma once
// Shared helpers for the test suites. The naive_* functions are deliberately
// independent of the library's search and path code so they can serve as
// oracles: they enumerate every assignment and every path from scratch.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "udpkit/graph.hpp"
#include "udpkit/graph_io.hpp"
#include "udpkit/ring.hpp"
#include "udpkit/spline.hpp"

#ifndef UDP_FIXTURE_DIR
#error "UDP_FIXTURE_DIR must point at the fixture directory"
#endif

namespace udptest {

using namespace udpkit;

inline std::string fixture(const std::string& name) { return std::string(UDP_FIXTURE_DIR) + "/" + name; }

inline LabeledGraph load_fixture(const std::string& name) { return load_graph_document(fixture(name)).graph; }

inline Ring W() { return Ring::witness(); }

/// W ideals by name: "0", "x", "y", "x+y", "xy" (= <x, y>), "1".
inline Ideal wi(const std::string& name) {
  const Ring w = W();
  if (name == "0") return Ideal::zero(w);
  if (name == "1") return Ideal::unit(w);
  if (name == "x") return Ideal::principal(Element::w(false, true, false));
  if (name == "y") return Ideal::principal(Element::w(false, false, true));
  if (name == "x+y") return Ideal::principal(Element::w(false, true, true));
  if (name == "xy") return Ideal::generated(w, {Element::w(false, true, false), Element::w(false, false, true)});
  throw std::invalid_argument("unknown W ideal " + name);
}

inline Element we(const std::string& literal) { return parse_element(W(), literal); }

/// Graph from (u, v, label) triples; vertices in first-seen order, edges e1..em.
inline LabeledGraph make_graph(const Ring& ring,
                               const std::vector<std::tuple<std::string, std::string, Ideal>>& edges) {
  std::vector<std::string> vertices;
  std::vector<Edge> out;
  for (const auto& [u, v, label] : edges) {
    for (const auto& x : {u, v}) {
      if (std::find(vertices.begin(), vertices.end(), x) == vertices.end()) vertices.push_back(x);
    }
    out.push_back({"e" + std::to_string(out.size() + 1), u, v, label});
  }
  return LabeledGraph(ring, std::move(vertices), std::move(out));
}

/// Element indices of an ideal of a finite ring, as a set.
inline std::set<std::uint64_t> index_set(const Ideal& ideal) {
  std::set<std::uint64_t> out;
  const auto& ring = ideal.ring();
  for (std::uint64_t i = 0; i < ring.size(); ++i) {
    if (ideal_member(Element::from_index(ring, i), ideal)) out.insert(i);
  }
  return out;
}

/// Every spline with value 0 at vertex 0, by trying all |R|^(|V|-1) assignments.
inline std::vector<std::vector<std::uint64_t>> naive_splines(const LabeledGraph& g) {
  const auto& ring = g.ring();
  const auto n = g.vertex_count();
  std::vector<std::set<std::uint64_t>> labels;
  for (const auto& e : g.edges()) labels.push_back(index_set(e.label));
  std::vector<Element> elems;
  for (std::uint64_t i = 0; i < ring.size(); ++i) elems.push_back(Element::from_index(ring, i));

  std::vector<std::vector<std::uint64_t>> out;
  std::vector<std::uint64_t> value(n, 0);
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == n) {
      for (std::size_t e = 0; e < g.edge_count(); ++e) {
        const auto d = (elems[value[g.endpoint_u(e)]] - elems[value[g.endpoint_v(e)]]).index();
        if (!labels[e].count(d)) return;
      }
      out.push_back(value);
      return;
    }
    for (std::uint64_t i = 0; i < ring.size(); ++i) {
      value[k] = i;
      rec(k + 1);
    }
  };
  rec(1);
  return out;
}

/// Intersection over all simple u,v-paths of the label sums, as element sets.
/// Paths come from a plain DFS; sums are closed under addition by hand.
inline std::set<std::uint64_t> naive_intersection(const LabeledGraph& g, std::size_t u, std::size_t v) {
  const auto& ring = g.ring();
  std::vector<Element> elems;
  for (std::uint64_t i = 0; i < ring.size(); ++i) elems.push_back(Element::from_index(ring, i));
  auto sum_sets = [&](const std::set<std::uint64_t>& a, const std::set<std::uint64_t>& b) {
    std::set<std::uint64_t> out;
    for (auto x : a) {
      for (auto y : b) out.insert((elems[x] + elems[y]).index());
    }
    return out;
  };

  std::set<std::uint64_t> result;
  for (std::uint64_t i = 0; i < ring.size(); ++i) result.insert(i);
  std::vector<char> seen(g.vertex_count(), 0);
  std::function<void(std::size_t, std::set<std::uint64_t>)> dfs = [&](std::size_t at, std::set<std::uint64_t> acc) {
    if (at == v) {
      std::set<std::uint64_t> keep;
      std::set_intersection(result.begin(), result.end(), acc.begin(), acc.end(), std::inserter(keep, keep.end()));
      result = std::move(keep);
      return;
    }
    seen[at] = 1;
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
      std::size_t next;
      if (g.endpoint_u(e) == at) next = g.endpoint_v(e);
      else if (g.endpoint_v(e) == at) next = g.endpoint_u(e);
      else continue;
      if (seen[next]) continue;
      dfs(next, sum_sets(acc, index_set(g.edges()[e].label)));
    }
    seen[at] = 0;
  };
  dfs(u, {0});
  return result;
}

/// UDP by definition, from the two naive oracles above.
inline bool naive_udp(const LabeledGraph& g) {
  const auto splines = naive_splines(g);
  const auto& ring = g.ring();
  for (std::size_t u = 0; u < g.vertex_count(); ++u) {
    for (std::size_t w = 0; w < g.vertex_count(); ++w) {
      if (u == w) continue;
      std::set<std::uint64_t> achieved;
      for (const auto& s : splines) {
        achieved.insert((Element::from_index(ring, s[u]) - Element::from_index(ring, s[w])).index());
      }
      for (auto x : naive_intersection(g, u, w)) {
        if (!achieved.count(x)) return false;
      }
    }
  }
  return true;
}

}  // namespace udptest
