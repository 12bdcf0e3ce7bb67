#pragma once
#include <cstdint>
#include <optional>
#include <vector>

#include "vcs/bytes.hpp"
#include "vcs/edge.hpp"
#include "vcs/sparse_recovery.hpp"

namespace vcs {

struct SoDecode {
  enum class Kind : uint8_t { Exact, Inconclusive };
  Kind kind = Kind::Inconclusive;
  std::vector<Vertex> cover;  // sorted; only meaningful for Exact
};

// Exact minimum vertex cover under the promise opt < k: sparse recovery over
// the whole EdgeId vector with capacity min(C(n,2), 8k^2 log n), then a
// bounded branch-and-bound exact solve on the recovered edge set. Exact is
// returned only when recovery succeeds and the optimum is < k, so a wrong
// Exact would require the sketch itself to mis-decode. Graphs whose total
// edge count exceeds the recovery capacity come back Inconclusive — that is
// this substitute's documented gap versus the cited construction.
class SmallOptSketch {
 public:
  SmallOptSketch() = default;
  SmallOptSketch(uint32_t n, uint32_t k, uint64_t seed);

  void update(const StreamUpdate& up);
  SoDecode decode() const;

  uint32_t n() const { return n_; }
  uint32_t k() const { return k_; }
  uint32_t capacity() const { return capacity_; }

  void merge(const SmallOptSketch& other);
  void serialize(ByteWriter& out) const;

  bool operator==(const SmallOptSketch& o) const = default;

 private:
  uint32_t n_ = 0;
  uint32_t k_ = 0;
  uint32_t capacity_ = 0;
  uint64_t seed_ = 0;
  SparseRecoverySketch sr_;
};

// Minimum vertex cover of the given edge list when its size is at most
// budget; nullopt when every cover needs more than budget vertices.
// Complete 2-way branching on an uncovered edge with degree-1 folding and
// best-so-far pruning — exact for any budget it answers under.
std::optional<std::vector<Vertex>> min_vc_bounded(
    uint32_t n, const std::vector<std::pair<Vertex, Vertex>>& edges, uint32_t budget);

}  // namespace vcs
