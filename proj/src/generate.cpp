#include "udpkit/generate.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <unordered_set>

namespace udpkit {

namespace {

using Matrix = std::vector<std::vector<char>>;

Matrix adjacency(const SimpleGraph& g) {
  Matrix m(g.n, std::vector<char>(g.n, 0));
  for (auto [a, b] : g.edges) m[a][b] = m[b][a] = 1;
  return m;
}

std::vector<std::size_t> degrees(const SimpleGraph& g) {
  std::vector<std::size_t> d(g.n, 0);
  for (auto [a, b] : g.edges) ++d[a], ++d[b];
  return d;
}

/// Calls visit(perm) for every permutation mapping each vertex to a vertex
/// of equal degree; perm[v] is the new position of v.
void for_each_degree_permutation(const SimpleGraph& g, const std::function<void(const std::vector<std::size_t>&)>& visit) {
  const auto deg = degrees(g);
  // Positions are handed out by descending degree.
  std::vector<std::size_t> by_degree(g.n);
  std::iota(by_degree.begin(), by_degree.end(), 0);
  std::stable_sort(by_degree.begin(), by_degree.end(), [&](auto a, auto b) { return deg[a] > deg[b]; });
  std::vector<std::vector<std::size_t>> classes;
  std::vector<std::size_t> first_position;
  for (std::size_t i = 0; i < g.n; ++i) {
    if (i == 0 || deg[by_degree[i]] != deg[by_degree[i - 1]]) {
      classes.emplace_back();
      first_position.push_back(i);
    }
    classes.back().push_back(by_degree[i]);
  }
  std::vector<std::size_t> perm(g.n);
  std::function<void(std::size_t)> rec = [&](std::size_t c) {
    if (c == classes.size()) {
      visit(perm);
      return;
    }
    auto members = classes[c];
    std::sort(members.begin(), members.end());
    do {
      for (std::size_t k = 0; k < members.size(); ++k) perm[members[k]] = first_position[c] + k;
      rec(c + 1);
    } while (std::next_permutation(members.begin(), members.end()));
  };
  rec(0);
}

std::uint64_t code_under(const Matrix& m, const std::vector<std::size_t>& perm, std::size_t n) {
  std::vector<std::size_t> inverse(n);
  for (std::size_t v = 0; v < n; ++v) inverse[perm[v]] = v;
  std::uint64_t code = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) code = (code << 1) | static_cast<std::uint64_t>(m[inverse[i]][inverse[j]]);
  }
  return code;
}

}  // namespace

bool is_connected(const SimpleGraph& g) {
  if (g.n == 0) return false;
  const auto m = adjacency(g);
  std::vector<char> seen(g.n, 0);
  std::vector<std::size_t> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const auto x = stack.back();
    stack.pop_back();
    for (std::size_t y = 0; y < g.n; ++y) {
      if (m[x][y] && !seen[y]) {
        seen[y] = 1;
        ++reached;
        stack.push_back(y);
      }
    }
  }
  return reached == g.n;
}

std::uint64_t canonical_code(const SimpleGraph& g) {
  if (g.n > 11) throw GraphError("canonical_code supports at most 11 vertices");
  const auto m = adjacency(g);
  std::uint64_t best = 0;
  bool any = false;
  for_each_degree_permutation(g, [&](const std::vector<std::size_t>& perm) {
    const auto c = code_under(m, perm, g.n);
    if (!any || c > best) best = c;
    any = true;
  });
  return best;
}

std::vector<SimpleGraph> connected_graphs(std::size_t n) {
  if (n == 0) return {};
  if (n == 1) return {SimpleGraph{1, {}}};
  std::vector<SimpleGraph> out;
  std::unordered_set<std::uint64_t> seen;
  for (const auto& base : connected_graphs(n - 1)) {
    for (std::uint64_t nbhd = 1; nbhd < (std::uint64_t{1} << (n - 1)); ++nbhd) {
      SimpleGraph g{n, base.edges};
      for (std::size_t v = 0; v + 1 < n; ++v) {
        if (nbhd & (std::uint64_t{1} << v)) g.edges.emplace_back(v, n - 1);
      }
      std::sort(g.edges.begin(), g.edges.end());
      if (seen.insert(canonical_code(g)).second) out.push_back(std::move(g));
    }
  }
  return out;
}

std::vector<std::vector<std::size_t>> vertex_orbits(const SimpleGraph& g) {
  const auto m = adjacency(g);
  std::vector<std::size_t> root(g.n);
  std::iota(root.begin(), root.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    return root[x] == x ? x : root[x] = find(root[x]);
  };
  // Two relabelings with equal codes differ by an automorphism: v -> inv_q[p0[v]].
  std::vector<std::size_t> p0;
  std::uint64_t best = 0;
  for_each_degree_permutation(g, [&](const std::vector<std::size_t>& perm) {
    const auto c = code_under(m, perm, g.n);
    if (p0.empty() || c > best) {
      best = c;
      p0 = perm;
    }
  });
  for_each_degree_permutation(g, [&](const std::vector<std::size_t>& perm) {
    if (code_under(m, perm, g.n) != best) return;
    std::vector<std::size_t> inverse(g.n);
    for (std::size_t v = 0; v < g.n; ++v) inverse[perm[v]] = v;
    for (std::size_t v = 0; v < g.n; ++v) {
      const auto a = find(v), b = find(inverse[p0[v]]);
      if (a != b) root[std::max(a, b)] = std::min(a, b);
    }
  });
  std::vector<std::vector<std::size_t>> orbits;
  std::vector<std::size_t> slot(g.n, g.n);
  for (std::size_t v = 0; v < g.n; ++v) {
    const auto r = find(v);
    if (slot[r] == g.n) {
      slot[r] = orbits.size();
      orbits.emplace_back();
    }
    orbits[slot[r]].push_back(v);
  }
  return orbits;
}

Skeleton to_skeleton(const SimpleGraph& g) {
  Skeleton s;
  for (std::size_t v = 0; v < g.n; ++v) s.vertices.push_back(std::to_string(v + 1));
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    s.edges.push_back({"e" + std::to_string(e + 1), std::to_string(g.edges[e].first + 1),
                       std::to_string(g.edges[e].second + 1)});
  }
  return s;
}

}  // namespace udpkit
