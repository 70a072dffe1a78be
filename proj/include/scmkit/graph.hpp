#pragma once

// Simple undirected graphs on vertices 1..n and their binomial edge ideals.

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "scmkit/groebner.hpp"

namespace scmkit {

class Graph {
 public:
  using Edge = std::pair<int, int>;

  explicit Graph(int n, const std::vector<Edge>& edges = {}) : n_(n) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    for (auto [i, j] : edges) {
      check_vertex(i);
      check_vertex(j);
      if (i == j) throw std::invalid_argument("loop at vertex " + std::to_string(i));
      edges_.insert({std::min(i, j), std::max(i, j)});
    }
  }

  int vertex_count() const { return n_; }
  /// Sorted, each edge as (i, j) with i < j.
  std::vector<Edge> edges() const { return {edges_.begin(), edges_.end()}; }
  bool has_edge(int i, int j) const { return edges_.count({std::min(i, j), std::max(i, j)}) > 0; }

  std::vector<int> neighbors(int v) const {
    check_vertex(v);
    std::vector<int> out;
    for (auto [i, j] : edges_) {
      if (i == v) out.push_back(j);
      if (j == v) out.push_back(i);
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  void check_vertex(int v) const {
    if (v < 1 || v > n_) throw std::invalid_argument("vertex " + std::to_string(v) + " out of range 1.." + std::to_string(n_));
  }

  bool operator==(const Graph&) const = default;

 private:
  int n_;
  std::set<Edge> edges_;
};

/// Components of G minus `removed`, each sorted, ordered by smallest vertex.
inline std::vector<std::vector<int>> connected_components(const Graph& G, const std::vector<int>& removed = {}) {
  const int n = G.vertex_count();
  std::vector<int> parent(n + 1);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  std::vector<bool> gone(n + 1, false);
  for (int v : removed) {
    G.check_vertex(v);
    gone[v] = true;
  }
  for (auto [i, j] : G.edges())
    if (!gone[i] && !gone[j]) parent[find(i)] = find(j);
  std::vector<std::vector<int>> comps;
  std::vector<int> slot(n + 1, -1);
  for (int v = 1; v <= n; ++v) {
    if (gone[v]) continue;
    int r = find(v);
    if (slot[r] < 0) {
      slot[r] = static_cast<int>(comps.size());
      comps.emplace_back();
    }
    comps[slot[r]].push_back(v);
  }
  return comps;
}

/// x_i y_j - x_j y_i in a ring whose variables are x_1..x_n, y_1..y_n.
template <CoefficientField F>
Poly<F> edge_binomial(const RingPtr<F>& ring, int n, int i, int j) {
  auto x = [&](int v) { return Poly<F>::variable(ring, v - 1); };
  auto y = [&](int v) { return Poly<F>::variable(ring, n + v - 1); };
  return x(i) * y(j) - x(j) * y(i);
}

template <CoefficientField F>
void require_edge_ring(const Graph& G, const RingPtr<F>& ring) {
  if (ring->nvars() != 2 * static_cast<std::size_t>(G.vertex_count()))
    throw std::invalid_argument("binomial edge ideal of a graph on " + std::to_string(G.vertex_count()) +
                                " vertices needs a ring with " + std::to_string(2 * G.vertex_count()) +
                                " variables, got " + std::to_string(ring->nvars()));
}

template <CoefficientField F>
Ideal<F> binomial_edge_ideal(const Graph& G, const RingPtr<F>& ring) {
  require_edge_ring(G, ring);
  std::vector<Poly<F>> gens;
  for (auto [i, j] : G.edges()) gens.push_back(edge_binomial(ring, G.vertex_count(), i, j));
  return Ideal<F>(ring, std::move(gens));
}

}  // namespace scmkit
