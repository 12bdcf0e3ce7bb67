#include "vcs/hashing.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "vcs/rng.hpp"

namespace vcs {

KWiseHash::KWiseHash(std::vector<uint64_t> coeffs, uint64_t domain, uint64_t range)
    : coeffs_(std::move(coeffs)), domain_(domain), range_(range) {
  if (coeffs_.empty()) throw std::invalid_argument("KWiseHash: need at least one coefficient");
  if (range_ == 0) throw std::invalid_argument("KWiseHash: range must be positive");
  for (uint64_t c : coeffs_)
    if (c >= Field::P) throw std::invalid_argument("KWiseHash: coefficient outside field");
}

KWiseHash KWiseHash::sample(uint32_t k, uint64_t domain, uint64_t range, std::mt19937_64& rng) {
  if (k < 1) throw std::invalid_argument("KWiseHash::sample: k must be >= 1");
  if (domain > (uint64_t(1) << 60)) throw std::invalid_argument("KWiseHash::sample: domain too large");
  std::uniform_int_distribution<uint64_t> dist(0, Field::P - 1);
  std::vector<uint64_t> coeffs(k);
  for (uint32_t i = 0; i < k; i++) coeffs[i] = dist(rng);
  return KWiseHash(std::move(coeffs), domain, range);
}

void KWiseHash::serialize(ByteWriter& out) const {
  out.u64(domain_);
  out.u64(range_);
  out.u32(k());
  for (uint64_t c : coeffs_) out.u64(c);
}

std::vector<std::vector<uint32_t>> Partition::members() const {
  std::vector<std::vector<uint32_t>> out(num_groups_);
  for (uint32_t g = 0; g < num_groups_; g++) out[g].reserve(sizes_[g]);
  for (uint32_t v = 0; v < n_; v++) out[group_of_[v]].push_back(v);
  return out;
}

void Partition::serialize(ByteWriter& out) const {
  out.u32(n_);
  out.u32(alpha_);
  out.u8(static_cast<uint8_t>(mode_));
  out.u32(num_groups_);
  if (mode_ == Mode::Permutation) {
    uint32_t bits = std::max<uint32_t>(ceil_log2(n_), 1);
    BitWriter bw(out);
    for (uint32_t v : perm_) bw.append(v, bits);
  } else {
    hash_.serialize(out);
  }
}

Partition random_partition(uint32_t n, uint32_t alpha, uint64_t seed,
                           const PartitionOptions& opts) {
  if (n == 0) throw std::invalid_argument("random_partition: n must be positive");
  if (alpha == 0 || alpha > n) throw std::invalid_argument("random_partition: need 1 <= alpha <= n");

  Partition part;
  part.n_ = n;
  part.alpha_ = alpha;
  part.group_of_.assign(n, 0);

  uint32_t log_n = ceil_log2(n);
  bool permutation_mode = static_cast<uint64_t>(alpha) < static_cast<uint64_t>(log_n) * log_n;
  auto rng = make_rng(derive_seed(seed, 0x9a71));

  if (permutation_mode) {
    part.mode_ = Partition::Mode::Permutation;
    part.num_groups_ = std::max<uint32_t>(n / alpha, 1);
    part.perm_.resize(n);
    std::iota(part.perm_.begin(), part.perm_.end(), 0);
    std::shuffle(part.perm_.begin(), part.perm_.end(), rng);
    part.sizes_.assign(part.num_groups_, 0);
    for (uint32_t i = 0; i < n; i++) {
      uint32_t g = std::min(i / alpha, part.num_groups_ - 1);
      part.group_of_[part.perm_[i]] = g;
      part.sizes_[g]++;
    }
    return part;
  }

  part.mode_ = Partition::Mode::Hash;
  part.num_groups_ = static_cast<uint32_t>(ceil_div(n, alpha));
  uint32_t k = std::max<uint32_t>(10 * log_n, 2);
  double lo = opts.size_lo * alpha - 1e-9;
  double hi = opts.size_hi * alpha + 1e-9;
  for (uint32_t attempt = 0; attempt < opts.max_retries; attempt++) {
    KWiseHash h = KWiseHash::sample(k, n, part.num_groups_, rng);
    part.sizes_.assign(part.num_groups_, 0);
    for (uint32_t v = 0; v < n; v++) {
      uint32_t g = static_cast<uint32_t>(h.eval(v));
      part.group_of_[v] = g;
      part.sizes_[g]++;
    }
    bool ok = true;
    for (uint32_t s : part.sizes_)
      if (s < lo || s > hi) {
        ok = false;
        break;
      }
    if (ok) {
      part.hash_ = h;
      return part;
    }
  }
  throw std::runtime_error("random_partition: retry budget exhausted");
}

}  // namespace vcs
