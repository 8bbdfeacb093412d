// Brute-force reference implementations used only by tests. They work from a
// plain edge list and dense matrices and share no code with the library's
// graph or metric routines.
#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <random>
#include <set>
#include <utility>
#include <vector>

namespace oracle {

using EdgeList = std::vector<std::pair<int, int>>;
using Matrix = std::vector<std::vector<int>>;

inline Matrix adjacency(int n, const EdgeList& edges) {
  Matrix a(n, std::vector<int>(n, 0));
  for (auto [u, v] : edges) a[u][v] = 1;
  return a;
}

inline Matrix undirected(int n, const EdgeList& edges) {
  Matrix a(n, std::vector<int>(n, 0));
  for (auto [u, v] : edges) a[u][v] = a[v][u] = 1;
  return a;
}

// Reflexive transitive closure.
inline Matrix closure(Matrix r) {
  const int n = static_cast<int>(r.size());
  for (int i = 0; i < n; ++i) r[i][i] = 1;
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (r[i][k] && r[k][j]) r[i][j] = 1;
  return r;
}

inline std::vector<std::vector<int>> classes(const Matrix& related) {
  const int n = static_cast<int>(related.size());
  std::vector<int> owner(n, -1);
  std::vector<std::vector<int>> out;
  for (int i = 0; i < n; ++i) {
    if (owner[i] >= 0) continue;
    out.emplace_back();
    for (int j = 0; j < n; ++j) {
      if (related[i][j]) {
        owner[j] = static_cast<int>(out.size()) - 1;
        out.back().push_back(j);
      }
    }
  }
  return out;  // members ascending, classes ordered by smallest member
}

inline std::vector<std::vector<int>> scc(int n, const EdgeList& edges) {
  const auto r = closure(adjacency(n, edges));
  Matrix mutual(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) mutual[i][j] = r[i][j] && r[j][i];
  return classes(mutual);
}

inline std::vector<std::vector<int>> wcc(int n, const EdgeList& edges) {
  return classes(closure(undirected(n, edges)));
}

constexpr int kInf = std::numeric_limits<int>::max() / 4;

// Floyd-Warshall distances on the undirected subgraph induced by `nodes`.
inline Matrix induced_distances(int n, const EdgeList& edges, const std::vector<int>& nodes) {
  const auto u = undirected(n, edges);
  const int k = static_cast<int>(nodes.size());
  Matrix d(k, std::vector<int>(k, kInf));
  for (int i = 0; i < k; ++i) {
    d[i][i] = 0;
    for (int j = 0; j < k; ++j)
      if (u[nodes[i]][nodes[j]]) d[i][j] = 1;
  }
  for (int m = 0; m < k; ++m)
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j)
        if (d[i][m] + d[m][j] < d[i][j]) d[i][j] = d[i][m] + d[m][j];
  return d;
}

inline int diameter(int n, const EdgeList& edges, const std::vector<int>& nodes) {
  int best = 0;
  for (const auto& row : induced_distances(n, edges, nodes))
    for (int x : row) best = std::max(best, x);
  return best;
}

inline double structural_virality(int n, const EdgeList& edges, const std::vector<int>& nodes) {
  const int k = static_cast<int>(nodes.size());
  if (k == 1) return 0.0;
  long long sum = 0;
  for (const auto& row : induced_distances(n, edges, nodes))
    for (int x : row) sum += x;
  return static_cast<double>(sum) / (static_cast<double>(k) * (k - 1));
}

inline double clustering(int n, const EdgeList& edges) {
  if (n == 0) return 0.0;
  const auto u = undirected(n, edges);
  double total = 0;
  for (int v = 0; v < n; ++v) {
    std::vector<int> nb;
    for (int w = 0; w < n; ++w)
      if (w != v && u[v][w]) nb.push_back(w);
    const int k = static_cast<int>(nb.size());
    if (k < 2) continue;
    int closed = 0;
    for (int i = 0; i < k; ++i)
      for (int j = i + 1; j < k; ++j) closed += u[nb[i]][nb[j]];
    total += closed / (k * (k - 1) / 2.0);
  }
  return total / n;
}

// Largest k such that some nonempty node subset has minimum internal total
// degree >= k, found by enumerating every subset.
inline int kcore(int n, const EdgeList& edges) {
  const auto a = adjacency(n, edges);
  int best = 0;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    int min_deg = std::numeric_limits<int>::max();
    for (int v = 0; v < n; ++v) {
      if (!(mask >> v & 1)) continue;
      int deg = 0;
      for (int w = 0; w < n; ++w)
        if (mask >> w & 1) deg += a[v][w] + a[w][v];
      min_deg = std::min(min_deg, deg);
    }
    best = std::max(best, min_deg);
  }
  return best;
}

inline double density(int n, const EdgeList& edges) {
  if (n < 2) return 0.0;
  const auto a = adjacency(n, edges);
  int m = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m += a[i][j];
  return static_cast<double>(m) / (static_cast<double>(n) * (n - 1));
}

// Random simple-ish directed graph: up to `max_nodes` nodes, possible parallel
// edges, never self-loops.
inline EdgeList random_edges(std::mt19937_64& rng, int n) {
  EdgeList edges;
  if (n < 2) return edges;
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double p = unit(rng) * 0.6;
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (u != v && unit(rng) < p) edges.emplace_back(u, v);
  if (unit(rng) < 0.3 && !edges.empty()) edges.push_back(edges.front());
  return edges;
}

}  // namespace oracle
