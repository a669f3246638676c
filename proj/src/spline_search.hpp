#pragma once

// Exhaustive spline search over a finite ring on index-coded data.
//
// Vertices are assigned in BFS order from the base vertex (value 0). Each
// later vertex takes its BFS parent's value plus an element of the tree-edge
// label and is kept only if every edge back to an already assigned vertex is
// satisfied. Splines are translation invariant, so one pass with the base
// fixed at 0 yields every difference rho(a) - rho(b).

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "fast_ideal.hpp"
#include "udpkit/errors.hpp"

namespace udpkit::detail {

struct CodedGraph {
  std::size_t vertices = 0;
  std::vector<std::pair<std::size_t, std::size_t>> ends;
  std::vector<std::uint64_t> labels;
};

inline void check_search_space(std::uint64_t ring_size, std::size_t vertices, double cap) {
  const double estimate = std::pow(static_cast<double>(ring_size), static_cast<double>(vertices) - 1.0);
  if (estimate > cap) {
    throw SearchSpaceError("brute-force search space " + std::to_string(ring_size) + "^" +
                           std::to_string(vertices - 1) + " exceeds the cap of " +
                           std::to_string(static_cast<std::uint64_t>(cap)));
  }
}

class SplineSearch {
 public:
  SplineSearch(const FastIdeals& alg, const CodedGraph& g, std::size_t base) : alg_(alg), n_(g.vertices) {
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> adj(n_);
    for (std::size_t e = 0; e < g.ends.size(); ++e) {
      adj[g.ends[e].first].push_back({g.ends[e].second, e});
      adj[g.ends[e].second].push_back({g.ends[e].first, e});
    }
    std::vector<std::size_t> pos(n_, n_);
    std::vector<std::size_t> parent_edge(n_, g.ends.size());
    std::vector<std::size_t> order{base};
    pos[base] = 0;
    for (std::size_t head = 0; head < order.size(); ++head) {
      const auto x = order[head];
      for (auto [y, e] : adj[x]) {
        if (pos[y] != n_) continue;
        pos[y] = order.size();
        parent_edge[y] = e;
        order.push_back(y);
      }
    }
    if (order.size() != n_) throw GraphError("spline search needs a connected graph");
    steps_.resize(n_);
    for (std::size_t i = 1; i < n_; ++i) {
      Step& s = steps_[i];
      s.vertex = order[i];
      const auto pe = parent_edge[s.vertex];
      s.parent = g.ends[pe].first == s.vertex ? g.ends[pe].second : g.ends[pe].first;
      s.tree_elements = alg.elements(g.labels[pe]);
      for (auto [y, e] : adj[s.vertex]) {
        if (e != pe && pos[y] < i) s.back.push_back({y, g.labels[e]});
      }
    }
  }

  std::size_t vertex_count() const { return n_; }

  /// Calls visit(values) for every spline; values is indexed by vertex.
  template <class Visit>
  void for_each(Visit&& visit) const {
    std::vector<std::uint64_t> values(n_, 0);
    if (n_ == 1) {
      visit(values);
      return;
    }
    run(values, 1, 0, steps_[1].tree_elements.size(), visit);
  }

  /// Same, restricted to the given slice of first-level choices.
  template <class Visit>
  void for_each_slice(std::size_t begin, std::size_t end, Visit&& visit) const {
    std::vector<std::uint64_t> values(n_, 0);
    if (n_ == 1) {
      if (begin == 0 && end > 0) visit(values);
      return;
    }
    run(values, 1, begin, end, visit);
  }

  std::size_t first_level_width() const { return n_ == 1 ? 1 : steps_[1].tree_elements.size(); }

 private:
  struct Step {
    std::size_t vertex = 0;
    std::size_t parent = 0;
    std::vector<std::uint64_t> tree_elements;
    std::vector<std::pair<std::size_t, std::uint64_t>> back;
  };

  template <class Visit>
  void run(std::vector<std::uint64_t>& values, std::size_t i, std::size_t begin, std::size_t end,
           Visit& visit) const {
    const Step& s = steps_[i];
    const std::uint64_t pv = values[s.parent];
    for (std::size_t c = begin; c < end; ++c) {
      const std::uint64_t x = alg_.add(pv, s.tree_elements[c]);
      bool ok = true;
      for (const auto& [y, code] : s.back) {
        if (!alg_.member(alg_.sub(x, values[y]), code)) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      values[s.vertex] = x;
      if (i + 1 == n_) {
        visit(values);
      } else {
        run(values, i + 1, 0, steps_[i + 1].tree_elements.size(), visit);
      }
    }
    values[s.vertex] = 0;
  }

  const FastIdeals& alg_;
  std::size_t n_;
  std::vector<Step> steps_;
};

/// Bitset table of achieved differences rho(a) - rho(b) for a < b.
class DifferenceTable {
 public:
  DifferenceTable(std::size_t vertices, std::uint64_t ring_size)
      : n_(vertices), words_((ring_size + 63) / 64), bits_(pair_count() * words_, 0) {}

  std::size_t pair_index(std::size_t a, std::size_t b) const {
    // a < b
    return a * n_ - a * (a + 1) / 2 + (b - a - 1);
  }

  void mark(const FastIdeals& alg, const std::vector<std::uint64_t>& values) {
    std::size_t p = 0;
    for (std::size_t a = 0; a < n_; ++a) {
      for (std::size_t b = a + 1; b < n_; ++b, ++p) {
        const auto d = alg.sub(values[a], values[b]);
        bits_[p * words_ + d / 64] |= std::uint64_t{1} << (d % 64);
      }
    }
  }

  bool test(std::size_t a, std::size_t b, std::uint64_t d) const {
    const auto p = pair_index(a, b);
    return (bits_[p * words_ + d / 64] >> (d % 64)) & 1u;
  }

  void merge(const DifferenceTable& other) {
    for (std::size_t i = 0; i < bits_.size(); ++i) bits_[i] |= other.bits_[i];
  }

 private:
  std::size_t pair_count() const { return n_ * (n_ - 1) / 2; }

  std::size_t n_;
  std::size_t words_;
  std::vector<std::uint64_t> bits_;
};

/// Runs the search (optionally split over worker threads) and returns the
/// difference table plus the number of splines.
inline std::pair<DifferenceTable, std::uint64_t> collect_differences(const FastIdeals& alg,
                                                                      const SplineSearch& search,
                                                                      unsigned workers) {
  const std::size_t n = search.vertex_count();
  const std::size_t width = search.first_level_width();
  const std::size_t parts = std::max<std::size_t>(1, std::min<std::size_t>(workers, width));
  std::vector<DifferenceTable> tables(parts, DifferenceTable(n, alg.size()));
  std::vector<std::uint64_t> counts(parts, 0);
  auto work = [&](std::size_t part) {
    const std::size_t begin = width * part / parts;
    const std::size_t end = width * (part + 1) / parts;
    search.for_each_slice(begin, end, [&](const std::vector<std::uint64_t>& values) {
      tables[part].mark(alg, values);
      ++counts[part];
    });
  };
  if (parts == 1) {
    work(0);
  } else {
    std::vector<std::thread> threads;
    for (std::size_t p = 0; p < parts; ++p) threads.emplace_back(work, p);
    for (auto& t : threads) t.join();
  }
  std::uint64_t total = 0;
  for (std::size_t p = 0; p < parts; ++p) {
    total += counts[p];
    if (p > 0) tables[0].merge(tables[p]);
  }
  return {std::move(tables[0]), total};
}

}  // namespace udpkit::detail
