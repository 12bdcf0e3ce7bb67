#pragma once
#include <cstdint>
#include <vector>

#include "vcs/bytes.hpp"
#include "vcs/edge.hpp"
#include "vcs/sparse_recovery.hpp"

namespace vcs {

struct NtOptions {
  uint32_t reps = 0;     // 0 = ceil(8 * ln n); callers embedding many testers pass fewer
  uint64_t fixed_r = 0;  // nonzero: share this fingerprint base (bank callers)
};

// Gap tester for |N(S) \ T|: S fixed before the stream, T given at query
// time (|T| <= a). Answers Yes when the count is >= b and No when <= b/2,
// each with small constant error; the open gap is unconstrained. Each of R
// repetitions subsamples vertices at rate p = 2/b with a pairwise hash and
// sketches the counts c_v = |N(v) ∩ S| of sampled vertices in a sparse
// recovery structure of capacity ~1.5a/b + log n; a repetition votes Yes when
// at least 2 sampled members of N(S) \ T decode (the splitting threshold
// (3/4)·p·b), or when decoding fails outright — overload correlates with a
// large neighborhood, so a failed repetition is evidence for Yes. The final
// answer compares the Yes-vote count against the midpoint of the two
// boundary acceptance rates P[Bin(b, p) >= 2] and P[Bin(b/2, p) >= 2], which
// splits gap instances evenly instead of assuming the votes cross 1/2.
class NeighborhoodTester {
 public:
  NeighborhoodTester() = default;
  NeighborhoodTester(uint32_t n, const std::vector<Vertex>& s, uint32_t a, uint32_t b,
                     uint64_t seed, NtOptions opts = {});

  void update(const StreamUpdate& up);
  void update_pow(const StreamUpdate& up, uint64_t r_pow_u, uint64_t r_pow_v);

  // Yes = true. Pure: identical T gives identical answers. Throws when |T| > a.
  bool query(const std::vector<Vertex>& t) const;

  bool in_s(Vertex v) const { return (s_mask_[v >> 6] >> (v & 63)) & 1; }
  uint32_t a() const { return a_; }
  uint32_t b() const { return b_; }
  uint32_t reps() const { return reps_; }
  uint32_t capacity() const { return capacity_; }
  double vote_cut() const { return vote_cut_; }  // Yes-votes needed (fractional midpoint)

  void merge(const NeighborhoodTester& other);
  void serialize(ByteWriter& out) const;

  bool operator==(const NeighborhoodTester& o) const = default;

 private:
  bool rep_samples(uint32_t rep, Vertex v) const;

  uint32_t n_ = 0;
  uint32_t a_ = 0;
  uint32_t b_ = 0;
  uint32_t reps_ = 0;
  uint32_t capacity_ = 0;
  uint64_t seed_ = 0;
  uint64_t r_ = 0;
  double vote_cut_ = 0.0;
  std::vector<uint64_t> s_mask_;
  std::vector<uint64_t> sub_coeffs_;         // pairwise per repetition
  std::vector<SparseRecoverySketch> reps_sr_;
};

}  // namespace vcs
