#pragma once
#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

namespace vcs {

using Vertex = uint32_t;
using EdgeId = uint64_t;

inline uint64_t pair_count(uint64_t n) { return n * (n - 1) / 2; }

// Row-major index of the unordered pair {u, v} among all pairs over [n]:
// pairs (0,1), (0,2), ..., (0,n-1), (1,2), ... in order. O(1) both ways.
inline EdgeId edge_id(Vertex u, Vertex v, uint32_t n) {
  if (u == v || u >= n || v >= n) throw std::invalid_argument("edge_id: bad endpoints");
  if (u > v) std::swap(u, v);
  uint64_t uu = u;
  return uu * n - uu * (uu + 1) / 2 + (v - u - 1);
}

inline std::pair<Vertex, Vertex> edge_from_id(EdgeId id, uint32_t n) {
  if (id >= pair_count(n)) throw std::invalid_argument("edge_from_id: id out of range");
  // Row u starts at offset u*n - u(u+1)/2; invert the quadratic, then nudge
  // to absorb the floating-point sqrt error.
  double nn = static_cast<double>(n);
  double disc = (2 * nn - 1) * (2 * nn - 1) - 8.0 * static_cast<double>(id);
  uint64_t u = static_cast<uint64_t>((2 * nn - 1 - std::sqrt(std::max(disc, 0.0))) / 2);
  if (u > 0) u--;
  auto row_start = [n](uint64_t r) { return r * n - r * (r + 1) / 2; };
  while (u + 1 < n && row_start(u + 1) <= id) u++;
  uint64_t v = id - row_start(u) + u + 1;
  return {static_cast<Vertex>(u), static_cast<Vertex>(v)};
}

// One turnstile update: delta is +1 (insert) or -1 (delete).
struct StreamUpdate {
  Vertex u;
  Vertex v;
  int8_t delta;
};

// A set of vertex-disjoint edges.
struct Matching {
  uint32_t n = 0;
  std::vector<std::pair<Vertex, Vertex>> edges;

  std::vector<bool> matched_mask() const {
    std::vector<bool> m(n, false);
    for (auto [u, v] : edges) {
      m[u] = true;
      m[v] = true;
    }
    return m;
  }

  bool is_vertex_disjoint() const {
    std::vector<bool> seen(n, false);
    for (auto [u, v] : edges) {
      if (u == v || u >= n || v >= n || seen[u] || seen[v]) return false;
      seen[u] = true;
      seen[v] = true;
    }
    return true;
  }
};

// Net result of a valid stream: a simple graph.
struct FinalGraph {
  uint32_t n = 0;
  std::vector<std::pair<Vertex, Vertex>> edges;  // canonical u < v, sorted

  bool has_edge(Vertex u, Vertex v) const {
    if (u > v) std::swap(u, v);
    return std::binary_search(edges.begin(), edges.end(), std::make_pair(u, v));
  }

  std::vector<std::vector<Vertex>> adjacency() const {
    std::vector<std::vector<Vertex>> adj(n);
    for (auto [u, v] : edges) {
      adj[u].push_back(v);
      adj[v].push_back(u);
    }
    return adj;
  }
};

}  // namespace vcs
