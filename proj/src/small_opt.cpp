#include "vcs/small_opt.hpp"

#include <algorithm>
#include <stdexcept>

#include "vcs/hashing.hpp"
#include "vcs/rng.hpp"

namespace vcs {

SmallOptSketch::SmallOptSketch(uint32_t n, uint32_t k, uint64_t seed) {
  if (n < 2) throw std::invalid_argument("SmallOptSketch: need n >= 2");
  if (k < 2) throw std::invalid_argument("SmallOptSketch: need k >= 2");
  n_ = n;
  k_ = k;
  seed_ = seed;
  uint64_t log_n = std::max<uint32_t>(ceil_log2(n), 1);
  uint64_t cap = std::min<uint64_t>(pair_count(n), uint64_t(8) * k * k * log_n);
  if (cap > 50'000'000)
    throw std::invalid_argument("SmallOptSketch: recovery capacity too large to allocate");
  capacity_ = static_cast<uint32_t>(cap);
  sr_ = SparseRecoverySketch(pair_count(n), capacity_, derive_seed(seed, 0x736f));
}

void SmallOptSketch::update(const StreamUpdate& up) {
  sr_.update(edge_id(up.u, up.v, n_), up.delta);
}

SoDecode SmallOptSketch::decode() const {
  auto dec = sr_.decode();
  if (!dec) return {};
  std::vector<std::pair<Vertex, Vertex>> edges;
  edges.reserve(dec->size());
  for (auto& [id, w] : *dec)
    if (w != 0) edges.push_back(edge_from_id(id, n_));
  auto cover = min_vc_bounded(n_, edges, k_ - 1);
  if (!cover) return {};
  std::sort(cover->begin(), cover->end());
  return {SoDecode::Kind::Exact, std::move(*cover)};
}

void SmallOptSketch::merge(const SmallOptSketch& other) {
  if (n_ != other.n_ || k_ != other.k_ || seed_ != other.seed_)
    throw std::invalid_argument("SmallOptSketch::merge: shape or seed mismatch");
  sr_.merge(other.sr_);
}

void SmallOptSketch::serialize(ByteWriter& out) const {
  out.u32(n_);
  out.u32(k_);
  out.u32(capacity_);
  out.u64(seed_);
  sr_.serialize(out);
}

namespace {

struct VcSearch {
  uint32_t n;
  std::vector<std::vector<Vertex>> adj;
  std::vector<bool> in_cover;
  std::vector<Vertex> current;
  std::vector<Vertex> best;
  bool found = false;
  uint32_t limit;

  uint32_t live_degree(Vertex v) const {
    if (in_cover[v]) return 0;
    uint32_t d = 0;
    for (Vertex u : adj[v])
      if (!in_cover[u]) d++;
    return d;
  }

  void take(Vertex v) {
    in_cover[v] = true;
    current.push_back(v);
  }
  void untake(Vertex v) {
    in_cover[v] = false;
    current.pop_back();
  }

  void record_if_better() {
    if (!found || current.size() < best.size()) {
      best = current;
      found = true;
    }
  }

  void search() {
    if (found && current.size() >= best.size()) return;  // only improvements matter
    uint32_t budget = (found ? static_cast<uint32_t>(best.size()) - 1 : limit);
    if (current.size() > budget) return;
    uint32_t slack = budget - static_cast<uint32_t>(current.size());

    // Forced: a vertex with more live edges than the remaining budget must
    // join (covering its edges endpoint-by-endpoint would already overrun).
    // Folded: a degree-1 vertex's edge is always optimally covered from the
    // other side.
    for (uint32_t v = 0; v < n; v++) {
      if (in_cover[v]) continue;
      uint32_t d = live_degree(v);
      if (d == 0) continue;
      if (d > slack) {
        take(v);
        search();
        untake(v);
        return;
      }
      if (d == 1) {
        Vertex w = 0;
        for (Vertex u : adj[v])
          if (!in_cover[u]) {
            w = u;
            break;
          }
        take(w);
        search();
        untake(w);
        return;
      }
    }

    // Pick the max-degree vertex; no live edges means we have a cover.
    Vertex pick = 0;
    uint32_t pick_deg = 0;
    for (uint32_t v = 0; v < n; v++) {
      uint32_t d = live_degree(v);
      if (d > pick_deg) {
        pick_deg = d;
        pick = v;
      }
    }
    if (pick_deg == 0) {
      record_if_better();
      return;
    }
    if (slack == 0) return;

    // Branch 1: pick joins the cover.
    take(pick);
    search();
    untake(pick);
    // Branch 2: pick stays out, so all its live neighbors join.
    std::vector<Vertex> forced;
    for (Vertex u : adj[pick])
      if (!in_cover[u]) forced.push_back(u);
    if (forced.size() <= slack) {
      for (Vertex u : forced) take(u);
      search();
      for (size_t i = forced.size(); i-- > 0;) untake(forced[i]);
    }
  }
};

}  // namespace

std::optional<std::vector<Vertex>> min_vc_bounded(
    uint32_t n, const std::vector<std::pair<Vertex, Vertex>>& edges, uint32_t budget) {
  VcSearch s;
  s.n = n;
  s.adj.assign(n, {});
  for (auto [u, v] : edges) {
    if (u >= n || v >= n || u == v) throw std::invalid_argument("min_vc_bounded: bad edge");
    s.adj[u].push_back(v);
    s.adj[v].push_back(u);
  }
  s.in_cover.assign(n, false);
  s.limit = budget;
  s.search();
  if (!s.found) return std::nullopt;
  return s.best;
}

}  // namespace vcs
