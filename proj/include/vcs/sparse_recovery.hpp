#pragma once
#include <array>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "vcs/bytes.hpp"
#include "vcs/one_sparse.hpp"

namespace vcs {

struct SrOptions {
  uint64_t fixed_r = 0;  // nonzero: share this fingerprint base instead of deriving one
};

// Exact sparse recovery by peeling: three rows of one-sparse cells with
// independent pairwise bucket hashes. Decoding repeatedly pops any cell that
// decodes to a single coordinate and subtracts it everywhere; success means
// an all-zero residue, so the output is the exact net vector. Supports up to
// about the stated capacity (the guarantee targets support <= capacity/2,
// sized with a 2.4x cell surplus so full-capacity loads still peel with high
// probability).
class SparseRecoverySketch {
 public:
  static constexpr uint32_t kRows = 3;

  SparseRecoverySketch() = default;
  SparseRecoverySketch(uint64_t universe, uint32_t capacity, uint64_t seed, SrOptions opts = {});

  void update(uint64_t id, int64_t delta);
  void update_pow(uint64_t id, int64_t delta, uint64_t r_pow_id);

  // Exact support (id, net weight), sorted by id; nullopt = Fail (peeling
  // stalled or the work guard tripped).
  std::optional<std::vector<std::pair<uint64_t, int64_t>>> decode() const;

  bool is_zero_state() const;
  void merge(const SparseRecoverySketch& other);
  void serialize(ByteWriter& out) const;

  uint64_t universe() const { return universe_; }
  uint32_t capacity() const { return capacity_; }
  uint32_t row_len() const { return row_len_; }
  uint64_t fingerprint_base() const { return r_; }

  bool operator==(const SparseRecoverySketch& o) const = default;

 private:
  uint32_t bucket_of(uint32_t row, uint64_t id) const;

  uint64_t universe_ = 0;
  uint64_t seed_ = 0;
  uint32_t capacity_ = 0;
  uint32_t row_len_ = 0;
  uint64_t r_ = 0;
  std::array<uint64_t, 2 * kRows> coeffs_{};  // pairwise hash per row
  std::vector<OneSparseCell> cells_;          // kRows * row_len_, row-major
};

}  // namespace vcs
