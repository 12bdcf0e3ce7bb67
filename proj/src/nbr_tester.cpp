#include "vcs/nbr_tester.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "vcs/field.hpp"
#include "vcs/hashing.hpp"
#include "vcs/rng.hpp"

namespace vcs {

namespace {

// P[Bin(trials, p) >= 2], the chance a repetition sees enough sampled
// neighborhood survivors to vote Yes when |N(S) \ T| = trials.
double yes_rate(uint32_t trials, double p) {
  if (trials == 0) return 0.0;
  double q = 1.0 - p;
  return 1.0 - std::pow(q, trials) - trials * p * std::pow(q, trials > 0 ? trials - 1 : 0);
}

}  // namespace

NeighborhoodTester::NeighborhoodTester(uint32_t n, const std::vector<Vertex>& s, uint32_t a,
                                       uint32_t b, uint64_t seed, NtOptions opts) {
  if (b < 2 || a < b) throw std::invalid_argument("NeighborhoodTester: need a >= b >= 2");
  if (n < 2) throw std::invalid_argument("NeighborhoodTester: need n >= 2");
  n_ = n;
  a_ = a;
  b_ = b;
  seed_ = seed;
  uint32_t log_n = std::max<uint32_t>(ceil_log2(n), 1);
  reps_ = opts.reps != 0 ? opts.reps
                         : static_cast<uint32_t>(std::ceil(8.0 * std::log(double(n))));
  reps_ = std::max<uint32_t>(reps_, 3);
  capacity_ = static_cast<uint32_t>(ceil_div(uint64_t(3) * a, uint64_t(2) * b)) + log_n + 6;

  double p = b <= 2 ? 1.0 : 2.0 / double(b);
  vote_cut_ = reps_ * (yes_rate(b, p) + yes_rate(b / 2, p)) / 2.0;

  s_mask_.assign((n + 63) / 64, 0);
  for (Vertex v : s) {
    if (v >= n) throw std::invalid_argument("NeighborhoodTester: S member out of range");
    s_mask_[v >> 6] |= uint64_t(1) << (v & 63);
  }

  auto rng = make_rng(derive_seed(seed, 0x4e54));
  std::uniform_int_distribution<uint64_t> elem(0, Field::P - 1);
  std::uniform_int_distribution<uint64_t> unit(1, Field::P - 1);
  r_ = opts.fixed_r != 0 ? opts.fixed_r : unit(rng);
  sub_coeffs_.resize(size_t(2) * reps_);
  for (uint64_t& c : sub_coeffs_) c = elem(rng);
  reps_sr_.reserve(reps_);
  SrOptions sr_opts;
  sr_opts.fixed_r = r_;
  for (uint32_t j = 0; j < reps_; j++)
    reps_sr_.emplace_back(n, capacity_, derive_seed(seed, 0x7372, j), sr_opts);
}

bool NeighborhoodTester::rep_samples(uint32_t rep, Vertex v) const {
  // Pairwise subsample at rate exactly 2/b (1 for b = 2).
  uint64_t acc = Field::add(Field::mul(sub_coeffs_[2 * rep + 1], v), sub_coeffs_[2 * rep]);
  return acc % b_ < 2;
}

void NeighborhoodTester::update(const StreamUpdate& up) {
  update_pow(up, Field::pow(r_, up.u), Field::pow(r_, up.v));
}

void NeighborhoodTester::update_pow(const StreamUpdate& up, uint64_t r_pow_u, uint64_t r_pow_v) {
  if (up.u >= n_ || up.v >= n_)
    throw std::invalid_argument("NeighborhoodTester::update: vertex out of range");
  struct Role {
    Vertex other;
    uint64_t pow_other;
  };
  Role roles[2];
  uint32_t nroles = 0;
  if (in_s(up.u)) roles[nroles++] = {up.v, r_pow_v};
  if (in_s(up.v)) roles[nroles++] = {up.u, r_pow_u};
  for (uint32_t i = 0; i < nroles; i++) {
    for (uint32_t j = 0; j < reps_; j++)
      if (rep_samples(j, roles[i].other))
        reps_sr_[j].update_pow(roles[i].other, up.delta, roles[i].pow_other);
  }
}

bool NeighborhoodTester::query(const std::vector<Vertex>& t) const {
  if (t.size() > a_) throw std::invalid_argument("NeighborhoodTester::query: |T| exceeds a");
  std::vector<uint64_t> t_mask((n_ + 63) / 64, 0);
  for (Vertex v : t) {
    if (v >= n_) throw std::invalid_argument("NeighborhoodTester::query: T member out of range");
    t_mask[v >> 6] |= uint64_t(1) << (v & 63);
  }
  uint32_t yes = 0;
  for (uint32_t j = 0; j < reps_; j++) {
    auto dec = reps_sr_[j].decode();
    if (!dec) {
      yes++;  // overload reads as a large neighborhood
      continue;
    }
    uint32_t seen = 0;
    for (auto& [id, w] : *dec)
      if (w != 0 && !((t_mask[id >> 6] >> (id & 63)) & 1)) seen++;
    if (seen >= 2) yes++;
  }
  return double(yes) >= vote_cut_ - 1e-9;
}

void NeighborhoodTester::merge(const NeighborhoodTester& other) {
  if (n_ != other.n_ || a_ != other.a_ || b_ != other.b_ || reps_ != other.reps_ ||
      seed_ != other.seed_ || r_ != other.r_ || s_mask_ != other.s_mask_ ||
      sub_coeffs_ != other.sub_coeffs_)
    throw std::invalid_argument("NeighborhoodTester::merge: shape or seed mismatch");
  for (size_t j = 0; j < reps_sr_.size(); j++) reps_sr_[j].merge(other.reps_sr_[j]);
}

void NeighborhoodTester::serialize(ByteWriter& out) const {
  out.u32(n_);
  out.u32(a_);
  out.u32(b_);
  out.u32(reps_);
  out.u32(capacity_);
  out.u64(seed_);
  out.u64(r_);
  for (uint64_t w : s_mask_) out.u64(w);
  for (uint64_t c : sub_coeffs_) out.u64(c);
  for (const auto& sr : reps_sr_) sr.serialize(out);
}

}  // namespace vcs
