#pragma once
#include <cstdint>
#include <vector>

#include "vcs/bytes.hpp"
#include "vcs/edge.hpp"
#include "vcs/l0_sampler.hpp"

namespace vcs {

struct NeOptions {
  uint32_t cascades = 4;      // independent decode attempts, first success wins
  uint32_t outer_cells = 8;   // cells per level, vertex-support sketch
  uint32_t nested_cells = 6;  // cells per level, S-endpoint sketches
  // Expected scale of |N(v) ∩ S| at decode time; bounds the nested sketches'
  // level count. 0 = no assumption (full log n levels).
  uint32_t support_hint = 0;
  uint64_t fixed_r = 0;  // nonzero: share this fingerprint base (bank callers)
};

struct NeSample {
  enum class Kind : uint8_t { Empty, Edge, Fail };
  Kind kind = Kind::Fail;
  Vertex u = 0;  // endpoint inside S
  Vertex v = 0;  // the near-uniform N(S) endpoint
};

// Neighborhood edge sampling: S is fixed before the stream; decode returns an
// edge (u, v) with u in S and v near-uniform over N(S) = { v : N(v) ∩ S ≠ ∅ }.
// Per cascade, an outer L0 sketch holds the counts c_v = |N(v) ∩ S|, and each
// outer subsampling level l carries a nested L0 sketch over the S-side
// endpoints of edges whose N(S)-side endpoint survives level l. Decoding
// scans outer levels for the first one that recovers completely as a
// singleton {v}; at that level the nested vector is exactly the indicator of
// N(v) ∩ S, so its sample yields u. Empty is certified by outer level 0
// (the un-subsampled c-vector) recovering as the zero vector.
class NeighborhoodEdgeSampler {
 public:
  NeighborhoodEdgeSampler() = default;
  NeighborhoodEdgeSampler(uint32_t n, const std::vector<Vertex>& s, uint64_t seed,
                          NeOptions opts = {});

  void update(const StreamUpdate& up);
  // Hot path: caller supplies r^u and r^v under the shared fingerprint base.
  void update_pow(const StreamUpdate& up, uint64_t r_pow_u, uint64_t r_pow_v);

  NeSample decode() const;

  bool in_s(Vertex v) const { return (s_mask_[v >> 6] >> (v & 63)) & 1; }
  uint32_t n() const { return n_; }
  uint32_t cascades() const { return cascades_; }
  uint64_t fingerprint_base() const { return r_; }
  bool is_zero_state() const;

  void merge(const NeighborhoodEdgeSampler& other);
  void serialize(ByteWriter& out) const;

  bool operator==(const NeighborhoodEdgeSampler& o) const = default;

 private:
  uint32_t n_ = 0;
  uint64_t seed_ = 0;
  uint32_t cascades_ = 0;
  uint32_t outer_levels_ = 0;
  uint64_t r_ = 0;
  std::vector<uint64_t> s_mask_;
  std::vector<L0Sketch> outer_;   // one per cascade
  std::vector<L0Sketch> nested_;  // cascade-major, outer_levels_ per cascade
};

}  // namespace vcs
