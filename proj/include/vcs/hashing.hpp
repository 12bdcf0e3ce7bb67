#pragma once
#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include "vcs/bytes.hpp"
#include "vcs/field.hpp"

namespace vcs {

// k-wise independent hash: a degree-(k-1) polynomial over GF(2^61-1),
// reduced modulo the range. Storage is exactly the k coefficients. The
// final reduction carries a modulo bias of at most range / P, which is
// negligible for every range used here.
class KWiseHash {
 public:
  KWiseHash() = default;
  KWiseHash(std::vector<uint64_t> coeffs, uint64_t domain, uint64_t range);

  static KWiseHash sample(uint32_t k, uint64_t domain, uint64_t range, std::mt19937_64& rng);

  // Polynomial value in [0, P); no range reduction. Used for subsampling
  // where low-order bits drive geometric level selection.
  uint64_t raw_eval(uint64_t x) const {
    uint64_t acc = 0;
    for (size_t i = coeffs_.size(); i-- > 0;) acc = Field::add(Field::mul(acc, x), coeffs_[i]);
    return acc;
  }

  uint64_t eval(uint64_t x) const {
    if (x >= domain_) throw std::out_of_range("KWiseHash::eval: input outside domain");
    return raw_eval(x) % range_;
  }

  uint32_t k() const { return static_cast<uint32_t>(coeffs_.size()); }
  uint64_t domain() const { return domain_; }
  uint64_t range() const { return range_; }
  const std::vector<uint64_t>& coefficients() const { return coeffs_; }

  void serialize(ByteWriter& out) const;
  bool operator==(const KWiseHash& o) const = default;

 private:
  std::vector<uint64_t> coeffs_;  // coeffs_[i] multiplies x^i
  uint64_t domain_ = 1;
  uint64_t range_ = 1;
};

struct PartitionOptions {
  // Rejection bracket for hash mode, as multiples of alpha.
  double size_lo = 0.5;
  double size_hi = 2.0;
  uint32_t max_retries = 100;
};

// Partition of [n] into groups of size about alpha. Small alpha uses an
// explicit random permutation (sizes land in [alpha, 2*alpha) exactly,
// remainder folded into the last group); large alpha stores only a k-wise
// hash and resamples until all group sizes fall inside the bracket.
class Partition {
 public:
  enum class Mode : uint8_t { Permutation = 0, Hash = 1 };

  uint32_t n() const { return n_; }
  uint32_t alpha() const { return alpha_; }
  Mode mode() const { return mode_; }
  uint32_t num_groups() const { return num_groups_; }

  uint32_t group_of(uint32_t v) const { return group_of_[v]; }
  uint32_t group_size(uint32_t g) const { return sizes_[g]; }
  const std::vector<uint32_t>& sizes() const { return sizes_; }
  std::vector<std::vector<uint32_t>> members() const;

  void serialize(ByteWriter& out) const;

  friend Partition random_partition(uint32_t n, uint32_t alpha, uint64_t seed,
                                    const PartitionOptions& opts);

 private:
  uint32_t n_ = 0;
  uint32_t alpha_ = 1;
  Mode mode_ = Mode::Permutation;
  uint32_t num_groups_ = 1;
  std::vector<uint32_t> group_of_;
  std::vector<uint32_t> sizes_;
  std::vector<uint32_t> perm_;  // permutation mode backing store
  KWiseHash hash_;              // hash mode backing store
};

// Mode rule: permutation when alpha < ceil(log2 n)^2, hash otherwise.
// Hash mode draws a (10 * ceil(log2 n))-wise hash into ceil(n/alpha) groups
// and retries until every group size lies in [size_lo*alpha, size_hi*alpha];
// throws std::runtime_error when retries run out.
Partition random_partition(uint32_t n, uint32_t alpha, uint64_t seed,
                           const PartitionOptions& opts = {});

inline uint32_t ceil_log2(uint64_t x) {
  uint32_t r = 0;
  uint64_t v = 1;
  while (v < x) {
    v <<= 1;
    r++;
  }
  return r;
}

inline uint64_t ceil_div(uint64_t a, uint64_t b) { return (a + b - 1) / b; }

}  // namespace vcs
