#include "vcs/ne_sampler.hpp"

#include <algorithm>
#include <stdexcept>

#include "vcs/field.hpp"
#include "vcs/hashing.hpp"
#include "vcs/rng.hpp"

namespace vcs {

NeighborhoodEdgeSampler::NeighborhoodEdgeSampler(uint32_t n, const std::vector<Vertex>& s,
                                                 uint64_t seed, NeOptions opts) {
  if (n < 2) throw std::invalid_argument("NeighborhoodEdgeSampler: need n >= 2");
  n_ = n;
  seed_ = seed;
  cascades_ = std::max<uint32_t>(opts.cascades, 1);
  outer_levels_ = ceil_log2(n) + 1;
  s_mask_.assign((n + 63) / 64, 0);
  for (Vertex v : s) {
    if (v >= n) throw std::invalid_argument("NeighborhoodEdgeSampler: S member out of range");
    s_mask_[v >> 6] |= uint64_t(1) << (v & 63);
  }

  auto rng = make_rng(derive_seed(seed, 0x4e53));
  std::uniform_int_distribution<uint64_t> unit(1, Field::P - 1);
  r_ = opts.fixed_r != 0 ? opts.fixed_r : unit(rng);

  uint32_t nested_levels = outer_levels_;
  if (opts.support_hint != 0) {
    uint32_t hint = std::max<uint32_t>(opts.support_hint, 2);
    nested_levels = std::min(outer_levels_, ceil_log2(uint64_t(2) * hint) + 2);
  }

  outer_.reserve(cascades_);
  nested_.reserve(size_t(cascades_) * outer_levels_);
  for (uint32_t j = 0; j < cascades_; j++) {
    L0Options outer_opts;
    outer_opts.cells_per_level = opts.outer_cells;
    outer_opts.subsample_k = 4;  // the v-marginal rides on this hash's symmetry
    outer_opts.fixed_r = r_;
    outer_.emplace_back(n, derive_seed(seed, 0x6f75, j), outer_opts);
    for (uint32_t l = 0; l < outer_levels_; l++) {
      L0Options nested_opts;
      nested_opts.cells_per_level = opts.nested_cells;
      nested_opts.levels = nested_levels;
      nested_opts.fixed_r = r_;
      nested_.emplace_back(n, derive_seed(seed, 0x6e65, size_t(j) * outer_levels_ + l),
                           nested_opts);
    }
  }
}

void NeighborhoodEdgeSampler::update(const StreamUpdate& up) {
  update_pow(up, Field::pow(r_, up.u), Field::pow(r_, up.v));
}

void NeighborhoodEdgeSampler::update_pow(const StreamUpdate& up, uint64_t r_pow_u,
                                         uint64_t r_pow_v) {
  if (up.u >= n_ || up.v >= n_)
    throw std::invalid_argument("NeighborhoodEdgeSampler::update: vertex out of range");
  // For each endpoint in S, the opposite endpoint is a member of N(S): bump
  // its count coordinate, and at every outer level it survives, record the
  // S-side endpoint in that level's nested sketch.
  struct Role {
    Vertex s_end, other;
    uint64_t pow_s, pow_other;
  };
  Role roles[2];
  uint32_t nroles = 0;
  if (in_s(up.u)) roles[nroles++] = {up.u, up.v, r_pow_u, r_pow_v};
  if (in_s(up.v)) roles[nroles++] = {up.v, up.u, r_pow_v, r_pow_u};
  if (nroles == 0) return;
  for (uint32_t j = 0; j < cascades_; j++) {
    L0Sketch& outer = outer_[j];
    L0Sketch* nest = nested_.data() + size_t(j) * outer_levels_;
    for (uint32_t i = 0; i < nroles; i++) {
      const Role& role = roles[i];
      outer.update_pow(role.other, up.delta, role.pow_other);
      uint32_t depth = outer.survive_depth(role.other);
      for (uint32_t l = 0; l <= depth; l++)
        nest[l].update_pow(role.s_end, up.delta, role.pow_s);
    }
  }
}

NeSample NeighborhoodEdgeSampler::decode() const {
  for (uint32_t j = 0; j < cascades_; j++) {
    const L0Sketch* nest = nested_.data() + size_t(j) * outer_levels_;
    for (uint32_t l = 0; l < outer_levels_; l++) {
      auto rec = outer_[j].recover_level(l);
      if (!rec) continue;  // too dense here, subsample further
      if (rec->empty()) {
        if (l == 0) return {NeSample::Kind::Empty, 0, 0};
        break;  // levels are nested: nothing deeper either
      }
      if (rec->size() > 1) continue;
      // Unique survivor v: the nested vector at this level is exactly the
      // indicator of N(v) ∩ S.
      Vertex v = static_cast<Vertex>((*rec)[0].first);
      L0Decode nd = nest[l].decode();
      if (nd.kind != L0Decode::Kind::Sample) break;
      Vertex u = static_cast<Vertex>(nd.id);
      if (!in_s(u) || u == v) break;  // inconsistent cascade, try the next
      return {NeSample::Kind::Edge, u, v};
    }
  }
  return {NeSample::Kind::Fail, 0, 0};
}

bool NeighborhoodEdgeSampler::is_zero_state() const {
  for (const auto& sk : outer_)
    if (!sk.is_zero_state()) return false;
  for (const auto& sk : nested_)
    if (!sk.is_zero_state()) return false;
  return true;
}

void NeighborhoodEdgeSampler::merge(const NeighborhoodEdgeSampler& other) {
  if (n_ != other.n_ || seed_ != other.seed_ || cascades_ != other.cascades_ ||
      outer_levels_ != other.outer_levels_ || r_ != other.r_ || s_mask_ != other.s_mask_)
    throw std::invalid_argument("NeighborhoodEdgeSampler::merge: shape or seed mismatch");
  for (size_t i = 0; i < outer_.size(); i++) outer_[i].merge(other.outer_[i]);
  for (size_t i = 0; i < nested_.size(); i++) nested_[i].merge(other.nested_[i]);
}

void NeighborhoodEdgeSampler::serialize(ByteWriter& out) const {
  out.u32(n_);
  out.u64(seed_);
  out.u32(cascades_);
  out.u32(outer_levels_);
  out.u64(r_);
  for (uint64_t w : s_mask_) out.u64(w);
  for (const auto& sk : outer_) sk.serialize(out);
  for (const auto& sk : nested_) sk.serialize(out);
}

}  // namespace vcs
