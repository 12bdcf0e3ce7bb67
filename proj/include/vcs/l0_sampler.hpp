#pragma once
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "vcs/bytes.hpp"
#include "vcs/field.hpp"
#include "vcs/one_sparse.hpp"

namespace vcs {

struct L0Options {
  uint32_t cells_per_level = 8;  // one-sparse cells per subsampling level (min 2)
  uint32_t levels = 0;           // 0 = ceil(log2 universe)+1; else clamped to that
  uint32_t subsample_k = 2;      // independence degree of the level-selection hash
  uint64_t fixed_r = 0;          // nonzero: share this fingerprint base instead of deriving one
};

struct L0Decode {
  enum class Kind : uint8_t { Empty, Sample, Fail };
  Kind kind = Kind::Fail;
  uint64_t id = 0;
};

// L0 sampler over the net update vector. Level l holds the ids whose
// subsample hash has at least l trailing zero bits (rate 2^-l, nested), each
// level bucketing its survivors into cells_per_level one-sparse cells.
// Decode scans levels from the full vector down and applies an 8-wise picker
// to the first level whose cells all decode; level 0 holds the whole vector,
// so Empty is exact. All coefficients live in one flat array so a bank of
// thousands of samplers costs two heap blocks each.
class L0Sketch {
 public:
  L0Sketch() = default;
  L0Sketch(uint64_t universe, uint64_t seed, L0Options opts = {});

  void update(uint64_t id, int64_t delta);
  // Hot path for callers that precompute r^id (shared fingerprint base).
  void update_pow(uint64_t id, int64_t delta, uint64_t r_pow_id);

  L0Decode decode() const;

  // Exact multiset of one level when every cell decodes cleanly, sorted by
  // id; nullopt when any cell reports Multi or a decoded id fails the
  // bucket/level consistency audit.
  std::optional<std::vector<std::pair<uint64_t, int64_t>>> recover_level(uint32_t level) const;

  bool is_zero_state() const;
  void merge(const L0Sketch& other);
  void serialize(ByteWriter& out) const;

  uint64_t universe() const { return universe_; }
  uint32_t levels() const { return levels_; }
  uint32_t cells_per_level() const { return cells_b_; }
  uint64_t fingerprint_base() const { return r_; }
  uint32_t survive_depth(uint64_t id) const;

  bool operator==(const L0Sketch& o) const = default;

 private:
  uint64_t poly_raw(uint32_t offset, uint32_t k, uint64_t x) const;
  uint32_t bucket_of(uint32_t level, uint64_t id) const;
  uint32_t picker_offset() const { return sub_k_; }
  uint32_t bucket_offset(uint32_t level) const { return sub_k_ + 8 + 2 * level; }

  uint64_t universe_ = 0;
  uint64_t seed_ = 0;
  uint32_t levels_ = 0;
  uint32_t cells_b_ = 0;
  uint32_t sub_k_ = 2;
  uint64_t r_ = 0;
  std::vector<uint64_t> coeffs_;      // [subsample k | picker 8 | 2 per level]
  std::vector<OneSparseCell> cells_;  // levels_ * cells_b_, level-major
};

}  // namespace vcs
