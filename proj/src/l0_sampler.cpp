#include "vcs/l0_sampler.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "vcs/hashing.hpp"
#include "vcs/rng.hpp"

namespace vcs {

L0Sketch::L0Sketch(uint64_t universe, uint64_t seed, L0Options opts) {
  if (universe == 0) throw std::invalid_argument("L0Sketch: universe must be positive");
  if (universe > (uint64_t(1) << 60)) throw std::invalid_argument("L0Sketch: universe too large");
  universe_ = universe;
  seed_ = seed;
  uint32_t full = ceil_log2(universe) + 1;
  levels_ = opts.levels == 0 ? full : std::min(opts.levels, full);
  levels_ = std::max<uint32_t>(levels_, 1);
  cells_b_ = std::max<uint32_t>(opts.cells_per_level, 2);
  sub_k_ = std::max<uint32_t>(opts.subsample_k, 2);

  auto rng = make_rng(derive_seed(seed, 0x10aa));
  std::uniform_int_distribution<uint64_t> elem(0, Field::P - 1);
  std::uniform_int_distribution<uint64_t> unit(1, Field::P - 1);
  r_ = opts.fixed_r != 0 ? opts.fixed_r : unit(rng);
  coeffs_.resize(sub_k_ + 8 + 2 * levels_);
  for (uint64_t& c : coeffs_) c = elem(rng);
  cells_.assign(size_t(levels_) * cells_b_, OneSparseCell{});
}

uint64_t L0Sketch::poly_raw(uint32_t offset, uint32_t k, uint64_t x) const {
  uint64_t acc = 0;
  for (uint32_t i = k; i-- > 0;) acc = Field::add(Field::mul(acc, x), coeffs_[offset + i]);
  return acc;
}

uint32_t L0Sketch::survive_depth(uint64_t id) const {
  uint64_t raw = poly_raw(0, sub_k_, id);
  uint32_t d = raw == 0 ? 63 : static_cast<uint32_t>(std::countr_zero(raw));
  return std::min(d, levels_ - 1);
}

uint32_t L0Sketch::bucket_of(uint32_t level, uint64_t id) const {
  return static_cast<uint32_t>(poly_raw(bucket_offset(level), 2, id) % cells_b_);
}

void L0Sketch::update(uint64_t id, int64_t delta) {
  if (id >= universe_) throw std::invalid_argument("L0Sketch::update: id outside universe");
  update_pow(id, delta, Field::pow(r_, id));
}

void L0Sketch::update_pow(uint64_t id, int64_t delta, uint64_t r_pow_id) {
  uint32_t depth = survive_depth(id);
  for (uint32_t l = 0; l <= depth; l++)
    cells_[size_t(l) * cells_b_ + bucket_of(l, id)].update(id, delta, r_pow_id);
}

std::optional<std::vector<std::pair<uint64_t, int64_t>>> L0Sketch::recover_level(
    uint32_t level) const {
  if (level >= levels_) throw std::invalid_argument("L0Sketch::recover_level: level out of range");
  std::vector<std::pair<uint64_t, int64_t>> items;
  for (uint32_t b = 0; b < cells_b_; b++) {
    const OneSparseCell& cell = cells_[size_t(level) * cells_b_ + b];
    auto dec = cell.decode(r_, universe_);
    if (dec.state == OneSparseCell::State::Zero) continue;
    if (dec.state == OneSparseCell::State::Multi) return std::nullopt;
    // Audit: a decoded id must belong to this bucket at this level, else the
    // fingerprint collided and the level is untrustworthy.
    if (bucket_of(level, dec.id) != b || survive_depth(dec.id) < level) return std::nullopt;
    items.emplace_back(dec.id, dec.weight);
  }
  std::sort(items.begin(), items.end());
  return items;
}

L0Decode L0Sketch::decode() const {
  for (uint32_t l = 0; l < levels_; l++) {
    auto rec = recover_level(l);
    if (!rec) continue;
    if (rec->empty()) {
      if (l == 0) return {L0Decode::Kind::Empty, 0};
      break;  // levels are nested: deeper ones are empty too
    }
    uint64_t best_id = 0;
    uint64_t best_key = ~uint64_t(0);
    for (auto& [id, w] : *rec) {
      uint64_t key = poly_raw(picker_offset(), 8, id);
      if (key < best_key || (key == best_key && id < best_id)) {
        best_key = key;
        best_id = id;
      }
    }
    return {L0Decode::Kind::Sample, best_id};
  }
  return {L0Decode::Kind::Fail, 0};
}

bool L0Sketch::is_zero_state() const {
  for (const auto& c : cells_)
    if (!c.is_zero()) return false;
  return true;
}

void L0Sketch::merge(const L0Sketch& other) {
  if (universe_ != other.universe_ || seed_ != other.seed_ || levels_ != other.levels_ ||
      cells_b_ != other.cells_b_ || sub_k_ != other.sub_k_ || r_ != other.r_ ||
      coeffs_ != other.coeffs_)
    throw std::invalid_argument("L0Sketch::merge: shape or seed mismatch");
  for (size_t i = 0; i < cells_.size(); i++) {
    cells_[i].count += other.cells_[i].count;
    cells_[i].id_sum += other.cells_[i].id_sum;
    cells_[i].fp = Field::add(cells_[i].fp, other.cells_[i].fp);
  }
}

void L0Sketch::serialize(ByteWriter& out) const {
  out.u64(universe_);
  out.u64(seed_);
  out.u32(levels_);
  out.u32(cells_b_);
  out.u32(sub_k_);
  out.u64(r_);
  for (uint64_t c : coeffs_) out.u64(c);
  for (const auto& c : cells_) c.serialize(out);
}

}  // namespace vcs
