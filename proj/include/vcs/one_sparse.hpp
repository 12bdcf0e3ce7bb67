#pragma once
#include <cstdint>

#include "vcs/bytes.hpp"
#include "vcs/field.hpp"

namespace vcs {

// Linear cell over one bucket of coordinates: running count, id-weighted
// count, and a fingerprint sum(delta * r^id) over GF(2^61-1). Detects
// whether the bucket's net vector is empty, a single coordinate, or more;
// a multi-coordinate bucket masquerades as one-sparse only if the
// fingerprint collides, probability <= universe / P per check.
struct OneSparseCell {
  int64_t count = 0;
  int64_t id_sum = 0;
  uint64_t fp = 0;

  void update(uint64_t id, int64_t delta, uint64_t r_pow_id) {
    count += delta;
    id_sum += delta * static_cast<int64_t>(id);
    uint64_t term = Field::mul(static_cast<uint64_t>(delta >= 0 ? delta : -delta) % Field::P, r_pow_id);
    fp = delta >= 0 ? Field::add(fp, term) : Field::sub(fp, term);
  }

  bool is_zero() const { return count == 0 && id_sum == 0 && fp == 0; }

  enum class State { Zero, One, Multi };

  struct Decoded {
    State state;
    uint64_t id = 0;
    int64_t weight = 0;
  };

  // r is the sketch's fingerprint base; universe bounds candidate ids.
  // Weight may be negative: the fingerprint of w < 0 is P - |w|*r^id.
  Decoded decode(uint64_t r, uint64_t universe) const {
    if (is_zero()) return {State::Zero};
    if (count == 0 || id_sum % count != 0) return {State::Multi};
    int64_t q = id_sum / count;
    if (q < 0 || static_cast<uint64_t>(q) >= universe) return {State::Multi};
    uint64_t mag = Field::mul(static_cast<uint64_t>(count >= 0 ? count : -count) % Field::P,
                              Field::pow(r, static_cast<uint64_t>(q)));
    uint64_t expect = count >= 0 ? mag : Field::sub(0, mag);
    if (expect != fp) return {State::Multi};
    return {State::One, static_cast<uint64_t>(q), count};
  }

  void serialize(ByteWriter& out) const {
    out.i64(count);
    out.i64(id_sum);
    out.u64(fp);
  }

  bool operator==(const OneSparseCell& o) const = default;
};

}  // namespace vcs
