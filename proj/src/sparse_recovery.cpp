#include "vcs/sparse_recovery.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "vcs/field.hpp"
#include "vcs/rng.hpp"

namespace vcs {

SparseRecoverySketch::SparseRecoverySketch(uint64_t universe, uint32_t capacity, uint64_t seed,
                                           SrOptions opts) {
  if (universe == 0) throw std::invalid_argument("SparseRecoverySketch: universe must be positive");
  if (universe > (uint64_t(1) << 60))
    throw std::invalid_argument("SparseRecoverySketch: universe too large");
  if (capacity == 0) throw std::invalid_argument("SparseRecoverySketch: capacity must be positive");
  universe_ = universe;
  seed_ = seed;
  capacity_ = capacity;
  row_len_ = std::max<uint32_t>(4, (capacity * 4 + 4) / 5 + 2);

  auto rng = make_rng(derive_seed(seed, 0x58ec));
  std::uniform_int_distribution<uint64_t> elem(0, Field::P - 1);
  std::uniform_int_distribution<uint64_t> unit(1, Field::P - 1);
  r_ = opts.fixed_r != 0 ? opts.fixed_r : unit(rng);
  for (uint64_t& c : coeffs_) c = elem(rng);
  cells_.assign(size_t(kRows) * row_len_, OneSparseCell{});
}

uint32_t SparseRecoverySketch::bucket_of(uint32_t row, uint64_t id) const {
  uint64_t acc = Field::add(Field::mul(coeffs_[2 * row + 1], id), coeffs_[2 * row]);
  return static_cast<uint32_t>(acc % row_len_);
}

void SparseRecoverySketch::update(uint64_t id, int64_t delta) {
  if (id >= universe_)
    throw std::invalid_argument("SparseRecoverySketch::update: id outside universe");
  update_pow(id, delta, Field::pow(r_, id));
}

void SparseRecoverySketch::update_pow(uint64_t id, int64_t delta, uint64_t r_pow_id) {
  for (uint32_t row = 0; row < kRows; row++)
    cells_[size_t(row) * row_len_ + bucket_of(row, id)].update(id, delta, r_pow_id);
}

std::optional<std::vector<std::pair<uint64_t, int64_t>>> SparseRecoverySketch::decode() const {
  std::vector<OneSparseCell> work = cells_;
  std::map<uint64_t, int64_t> recovered;
  // Each peel removes one coordinate entirely; anything beyond the guard
  // means fingerprint math went inconsistent, which we report as Fail.
  size_t guard = size_t(4) * capacity_ + 16;
  bool progress = true;
  while (progress && recovered.size() <= guard) {
    progress = false;
    for (size_t i = 0; i < work.size() && recovered.size() <= guard; i++) {
      auto dec = work[i].decode(r_, universe_);
      if (dec.state != OneSparseCell::State::One) continue;
      uint64_t rp = Field::pow(r_, dec.id);
      for (uint32_t row = 0; row < kRows; row++)
        work[size_t(row) * row_len_ + bucket_of(row, dec.id)].update(dec.id, -dec.weight, rp);
      recovered[dec.id] += dec.weight;
      progress = true;
    }
  }
  for (const auto& c : work)
    if (!c.is_zero()) return std::nullopt;
  std::vector<std::pair<uint64_t, int64_t>> items;
  items.reserve(recovered.size());
  for (auto& [id, w] : recovered)
    if (w != 0) items.emplace_back(id, w);
  return items;
}

bool SparseRecoverySketch::is_zero_state() const {
  for (const auto& c : cells_)
    if (!c.is_zero()) return false;
  return true;
}

void SparseRecoverySketch::merge(const SparseRecoverySketch& other) {
  if (universe_ != other.universe_ || seed_ != other.seed_ || capacity_ != other.capacity_ ||
      row_len_ != other.row_len_ || r_ != other.r_ || coeffs_ != other.coeffs_)
    throw std::invalid_argument("SparseRecoverySketch::merge: shape or seed mismatch");
  for (size_t i = 0; i < cells_.size(); i++) {
    cells_[i].count += other.cells_[i].count;
    cells_[i].id_sum += other.cells_[i].id_sum;
    cells_[i].fp = Field::add(cells_[i].fp, other.cells_[i].fp);
  }
}

void SparseRecoverySketch::serialize(ByteWriter& out) const {
  out.u64(universe_);
  out.u64(seed_);
  out.u32(capacity_);
  out.u32(kRows);
  out.u32(row_len_);
  out.u64(r_);
  for (uint64_t c : coeffs_) out.u64(c);
  for (const auto& c : cells_) c.serialize(out);
}

}  // namespace vcs
