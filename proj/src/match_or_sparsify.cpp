#include "vcs/match_or_sparsify.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

#include "vcs/field.hpp"
#include "vcs/rng.hpp"

namespace vcs {

Matching greedy_matching(uint32_t n, const std::vector<std::pair<Vertex, Vertex>>& edges) {
  Matching m;
  m.n = n;
  std::vector<bool> used(n, false);
  for (auto [u, v] : edges) {
    if (u >= n || v >= n || u == v) throw std::invalid_argument("greedy_matching: bad edge");
    if (used[u] || used[v]) continue;
    used[u] = true;
    used[v] = true;
    m.edges.emplace_back(u, v);
  }
  return m;
}

MatchOrSparsifyState::MatchOrSparsifyState(uint32_t n, uint32_t alpha, double delta, uint64_t seed,
                                           MosOptions opts) {
  if (n < 2) throw std::invalid_argument("MatchOrSparsifyState: need n >= 2");
  if (delta <= 0.0) throw std::invalid_argument("MatchOrSparsifyState: need delta > 0");
  if (alpha < 1 || double(alpha) > std::pow(double(n), 1.0 - delta) + 1e-9)
    throw std::invalid_argument("MatchOrSparsifyState: need 1 <= alpha <= n^(1-delta)");
  n_ = n;
  alpha_ = alpha;
  delta_ = delta;
  seed_ = seed;
  k_ = static_cast<uint32_t>(ceil_div(n, alpha));

  uint64_t log_n = std::max<uint32_t>(ceil_log2(n), 1);
  uint64_t base = ceil_div(uint64_t(n) * n, uint64_t(alpha) * alpha * log_n * log_n * log_n);
  uint64_t scaled = static_cast<uint64_t>(std::ceil(opts.scale * double(base)));
  s_ = static_cast<uint32_t>(std::max<uint64_t>(scaled, ceil_div(n, alpha)));

  auto rng = make_rng(derive_seed(seed, 0x6d6f));
  std::uniform_int_distribution<uint64_t> unit(1, Field::P - 1);
  r_ = unit(rng);
  r_pow_.resize(n);
  r_pow_[0] = 1;
  for (uint32_t v = 1; v < n; v++) r_pow_[v] = Field::mul(r_pow_[v - 1], r_);

  uint32_t count = 2 * s_;
  touch_words_ = (count + 63) / 64;
  touch_.assign(size_t(n) * touch_words_, 0);
  hashes_.reserve(count);
  samplers_.reserve(count);
  uint32_t hint = std::max<uint32_t>(2, static_cast<uint32_t>(std::llround(double(n) / k_)));
  for (uint32_t i = 0; i < count; i++) {
    auto hrng = make_rng(derive_seed(seed, 0x6873, i));
    hashes_.push_back(KWiseHash::sample(2, n, k_, hrng));
    std::vector<Vertex> vi;
    uint64_t member_val = 1 % k_;
    for (uint32_t v = 0; v < n; v++) {
      if (hashes_[i].eval(v) == member_val) {
        vi.push_back(v);
        touch_[size_t(v) * touch_words_ + (i >> 6)] |= uint64_t(1) << (i & 63);
      }
    }
    NeOptions ne;
    ne.cascades = opts.cascades;
    ne.support_hint = hint;
    ne.fixed_r = r_;
    samplers_.emplace_back(n, vi, derive_seed(seed, 0x6e73, i), ne);
  }
}

std::vector<Vertex> MatchOrSparsifyState::group_members(uint32_t i) const {
  std::vector<Vertex> vi;
  uint64_t member_val = 1 % k_;
  for (uint32_t v = 0; v < n_; v++)
    if (hashes_[i].eval(v) == member_val) vi.push_back(v);
  return vi;
}

void MatchOrSparsifyState::update(const StreamUpdate& up) {
  if (up.u >= n_ || up.v >= n_)
    throw std::invalid_argument("MatchOrSparsifyState::update: vertex out of range");
  uint64_t rp_u = r_pow_[up.u];
  uint64_t rp_v = r_pow_[up.v];
  const uint64_t* tu = touch_.data() + size_t(up.u) * touch_words_;
  const uint64_t* tv = touch_.data() + size_t(up.v) * touch_words_;
  for (uint32_t w = 0; w < touch_words_; w++) {
    uint64_t hits = tu[w] | tv[w];
    while (hits) {
      uint32_t bit = static_cast<uint32_t>(std::countr_zero(hits));
      hits &= hits - 1;
      samplers_[(w << 6) + bit].update_pow(up, rp_u, rp_v);
    }
  }
}

MosResult MatchOrSparsifyState::finalize() const {
  MosResult out;
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (uint32_t i = 0; i < samplers_.size(); i++) {
    NeSample smp = samplers_[i].decode();
    switch (smp.kind) {
      case NeSample::Kind::Edge:
        out.diag.decoded++;
        out.diag.sampled.push_back({i, {smp.u, smp.v}});
        edges.emplace_back(smp.u, smp.v);
        break;
      case NeSample::Kind::Empty:
        out.diag.empties++;
        break;
      case NeSample::Kind::Fail:
        out.diag.fails++;
        break;
    }
  }
  out.matching = greedy_matching(n_, edges);
  return out;
}

void MatchOrSparsifyState::serialize(ByteWriter& out) const {
  out.u32(n_);
  out.u32(alpha_);
  out.u64(std::bit_cast<uint64_t>(delta_));
  out.u32(k_);
  out.u32(s_);
  out.u64(r_);
  for (const auto& h : hashes_) h.serialize(out);
  for (const auto& smp : samplers_) smp.serialize(out);
}

}  // namespace vcs
