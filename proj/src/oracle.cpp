#include "vcs/oracle.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <stdexcept>

namespace vcs {

namespace {

// Max clique on a bitset adjacency via branch-and-bound with a greedy
// coloring bound (color classes are independent sets, so |R| + colors(P)
// bounds any clique through R and P).
class CliqueSolver {
 public:
  CliqueSolver(uint32_t n, const std::vector<uint64_t>& adj, uint64_t budget)
      : n_(n), w_((n + 63) / 64), adj_(adj), budget_(budget) {}

  std::vector<uint32_t> solve() {
    std::vector<uint32_t> r;
    std::vector<uint64_t> p(w_, 0);
    for (uint32_t v = 0; v < n_; v++) p[v >> 6] |= uint64_t(1) << (v & 63);
    expand(r, p);
    return best_;
  }

 private:
  const uint64_t* row(uint32_t v) const { return adj_.data() + size_t(v) * w_; }

  static bool test_bit(const std::vector<uint64_t>& s, uint32_t v) {
    return (s[v >> 6] >> (v & 63)) & 1;
  }
  static void clear_bit(std::vector<uint64_t>& s, uint32_t v) {
    s[v >> 6] &= ~(uint64_t(1) << (v & 63));
  }
  static bool empty_set(const std::vector<uint64_t>& s) {
    for (uint64_t w : s)
      if (w) return false;
    return true;
  }

  void expand(std::vector<uint32_t>& r, const std::vector<uint64_t>& p) {
    if (++nodes_ > budget_) throw std::runtime_error("exact_min_vc: search budget exceeded");
    // Greedy coloring of p in ascending color order.
    std::vector<uint32_t> order;
    std::vector<uint32_t> color;
    std::vector<uint64_t> uncolored = p;
    uint32_t c = 0;
    while (!empty_set(uncolored)) {
      c++;
      std::vector<uint64_t> q = uncolored;
      while (true) {
        uint32_t v = first_bit(q);
        if (v == n_) break;
        clear_bit(q, v);
        clear_bit(uncolored, v);
        for (uint32_t i = 0; i < w_; i++) q[i] &= ~row(v)[i];
        order.push_back(v);
        color.push_back(c);
      }
    }
    std::vector<uint64_t> avail = p;
    for (size_t i = order.size(); i-- > 0;) {
      if (r.size() + color[i] <= best_.size()) return;
      uint32_t v = order[i];
      r.push_back(v);
      std::vector<uint64_t> next(w_);
      bool any = false;
      for (uint32_t j = 0; j < w_; j++) {
        next[j] = avail[j] & row(v)[j];
        any |= next[j] != 0;
      }
      if (!any) {
        if (r.size() > best_.size()) best_ = r;
      } else {
        expand(r, next);
      }
      r.pop_back();
      clear_bit(avail, v);
    }
  }

  uint32_t first_bit(const std::vector<uint64_t>& s) const {
    for (uint32_t i = 0; i < w_; i++)
      if (s[i]) return (i << 6) + static_cast<uint32_t>(std::countr_zero(s[i]));
    return n_;
  }

  uint32_t n_;
  uint32_t w_;
  const std::vector<uint64_t>& adj_;
  uint64_t budget_;
  uint64_t nodes_ = 0;
  std::vector<uint32_t> best_;
};

}  // namespace

VcSolution exact_min_vc(const FinalGraph& g, uint64_t node_budget) {
  if (g.n == 0) return {};
  if (g.n > 512) throw std::invalid_argument("exact_min_vc: n too large for exact search");
  uint32_t w = (g.n + 63) / 64;
  // Complement adjacency: max independent set of g = max clique of the complement.
  std::vector<uint64_t> comp(size_t(g.n) * w, 0);
  for (uint32_t v = 0; v < g.n; v++) {
    for (uint32_t u = 0; u < g.n; u++)
      if (u != v) comp[size_t(v) * w + (u >> 6)] |= uint64_t(1) << (u & 63);
  }
  for (auto [u, v] : g.edges) {
    comp[size_t(u) * w + (v >> 6)] &= ~(uint64_t(1) << (v & 63));
    comp[size_t(v) * w + (u >> 6)] &= ~(uint64_t(1) << (u & 63));
  }
  CliqueSolver solver(g.n, comp, node_budget);
  std::vector<uint32_t> independent = solver.solve();
  std::vector<bool> in_is(g.n, false);
  for (uint32_t v : independent) in_is[v] = true;
  VcSolution sol;
  for (uint32_t v = 0; v < g.n; v++)
    if (!in_is[v]) sol.cover.push_back(v);
  sol.size = static_cast<uint32_t>(sol.cover.size());
  return sol;
}

bool verify_cover(const FinalGraph& g, const std::vector<Vertex>& cover) {
  std::vector<bool> in(g.n, false);
  for (Vertex v : cover) {
    if (v >= g.n) return false;
    in[v] = true;
  }
  for (auto [u, v] : g.edges)
    if (!in[u] && !in[v]) return false;
  return true;
}

ResidualSubgraph residual_subgraph(const FinalGraph& g, const Matching& m) {
  if (m.n != g.n) throw std::invalid_argument("residual_subgraph: vertex count mismatch");
  if (!m.is_vertex_disjoint()) throw std::invalid_argument("residual_subgraph: not a matching");
  for (auto [u, v] : m.edges)
    if (!g.has_edge(u, v)) throw std::invalid_argument("residual_subgraph: matching edge not in graph");
  std::vector<bool> matched = m.matched_mask();
  ResidualSubgraph out;
  out.graph.n = g.n;
  for (auto [u, v] : g.edges)
    if (!matched[u] && !matched[v]) out.graph.edges.emplace_back(u, v);
  out.edge_count = out.graph.edges.size();
  return out;
}

std::map<Vertex, double> ne_distribution(const FinalGraph& g, const std::vector<Vertex>& s) {
  std::vector<bool> in_s(g.n, false);
  for (Vertex v : s) {
    if (v >= g.n) throw std::invalid_argument("ne_distribution: vertex out of range");
    in_s[v] = true;
  }
  std::set<Vertex> nbh;
  for (auto [u, v] : g.edges) {
    if (in_s[u]) nbh.insert(v);
    if (in_s[v]) nbh.insert(u);
  }
  std::map<Vertex, double> dist;
  if (nbh.empty()) return dist;
  double p = 1.0 / static_cast<double>(nbh.size());
  for (Vertex v : nbh) dist[v] = p;
  return dist;
}

namespace {

uint32_t max_matching_rec(const std::vector<std::vector<Vertex>>& adj, std::vector<bool>& used,
                          uint32_t from) {
  uint32_t v = from;
  while (v < used.size()) {
    if (!used[v]) {
      bool has_free_nbr = false;
      for (Vertex u : adj[v])
        if (!used[u]) {
          has_free_nbr = true;
          break;
        }
      if (has_free_nbr) break;
    }
    v++;
  }
  if (v >= used.size()) return 0;
  // Branch: leave v unmatched, or match it to each free neighbor.
  uint32_t best = max_matching_rec(adj, used, v + 1);
  used[v] = true;
  for (Vertex u : adj[v]) {
    if (used[u]) continue;
    used[u] = true;
    best = std::max(best, 1 + max_matching_rec(adj, used, v + 1));
    used[u] = false;
  }
  used[v] = false;
  return best;
}

}  // namespace

uint32_t exact_max_matching(const FinalGraph& g) {
  if (g.n > 24) throw std::invalid_argument("exact_max_matching: n too large (diagnostics-only oracle)");
  auto adj = g.adjacency();
  std::vector<bool> used(g.n, false);
  return max_matching_rec(adj, used, 0);
}

}  // namespace vcs
