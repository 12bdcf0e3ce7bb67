#pragma once
#include <cstdint>
#include <vector>

#include "vcs/bytes.hpp"
#include "vcs/edge.hpp"
#include "vcs/hashing.hpp"
#include "vcs/ne_sampler.hpp"

namespace vcs {

struct MosOptions {
  double scale = 1.0;     // multiplies the sample-count formula (knob, default 1)
  uint32_t cascades = 3;  // per-sampler decode attempts; the bank tolerates misses
};

struct MosDiagnostics {
  uint32_t decoded = 0;  // samplers returning an edge
  uint32_t empties = 0;
  uint32_t fails = 0;
  // Per-edge provenance in recovery order: (sampler index, edge).
  std::vector<std::pair<uint32_t, std::pair<Vertex, Vertex>>> sampled;
};

struct MosResult {
  Matching matching;
  MosDiagnostics diag;
};

// Scan edges in order, keep each edge whose endpoints are both still free.
Matching greedy_matching(uint32_t n, const std::vector<std::pair<Vertex, Vertex>>& edges);

// The match-or-sparsify bank: 2s pairwise hashes h_i : V -> [k] with
// k = ceil(n/alpha), each defining V_i = h_i^{-1}(1) and feeding a
// neighborhood edge sampler on V_i; recovery decodes e_1..e_2s in index
// order and returns their greedy matching. s = max(ceil(scale * n^2 /
// (alpha^2 * ceil(log2 n)^3)), ceil(n/alpha)) — the divided form is forced
// by the source's own space and expectation arithmetic, and the floor keeps
// desk-scale instances sampling enough to reach the n/(4*alpha) expectation.
class MatchOrSparsifyState {
 public:
  MatchOrSparsifyState() = default;
  MatchOrSparsifyState(uint32_t n, uint32_t alpha, double delta, uint64_t seed,
                       MosOptions opts = {});

  void update(const StreamUpdate& up);
  MosResult finalize() const;

  uint32_t n() const { return n_; }
  uint32_t alpha() const { return alpha_; }
  uint32_t k() const { return k_; }
  uint32_t s() const { return s_; }
  uint32_t sampler_count() const { return static_cast<uint32_t>(samplers_.size()); }
  const NeighborhoodEdgeSampler& sampler(uint32_t i) const { return samplers_[i]; }
  std::vector<Vertex> group_members(uint32_t i) const;  // V_i, recomputed from h_i

  void serialize(ByteWriter& out) const;

 private:
  uint32_t n_ = 0;
  uint32_t alpha_ = 0;
  double delta_ = 0.0;
  uint64_t seed_ = 0;
  uint32_t k_ = 0;
  uint32_t s_ = 0;
  uint64_t r_ = 0;
  std::vector<uint64_t> r_pow_;  // r^v for all v, shared across the bank
  std::vector<KWiseHash> hashes_;
  std::vector<NeighborhoodEdgeSampler> samplers_;
  std::vector<uint64_t> touch_;  // vertex-major bitset over samplers containing it
  uint32_t touch_words_ = 0;
};

}  // namespace vcs
