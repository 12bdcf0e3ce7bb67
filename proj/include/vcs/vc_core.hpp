#pragma once
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "vcs/bytes.hpp"
#include "vcs/edge.hpp"
#include "vcs/hashing.hpp"
#include "vcs/match_or_sparsify.hpp"
#include "vcs/nbr_tester.hpp"
#include "vcs/small_opt.hpp"
#include "vcs/stream.hpp"

namespace vcs {

struct VcOptions {
  uint32_t tester_reps = 0;   // 0 = tester default; multi-run drivers pass fewer
  double mos_scale = 1.0;     // forwarded to the match-or-sparsify bank
  uint32_t mos_cascades = 3;  // decode attempts per sampler inside the bank
  PartitionOptions partition;
};

enum class GroupClass : uint8_t { Simple = 0, Residual = 1, Clean = 2 };

// A vertex cover in one of two encodings. The implicit form is used exactly
// when the partition is hash-backed (large alpha): the cover is one bit per
// group — ceil(n/alpha) bits on top of the partition the algorithm already
// keeps — instead of the n-bit vertex mask the explicit form stands for.
struct CoverResult {
  enum class Provenance : uint8_t {
    MatchCase = 0,     // large easy matching: cover = all vertices
    GroupCover = 1,    // simple + residual + matched clean groups
    SmallOptExact = 2, // exact small-optimum recovery
    Failed = 3,
  };

  Provenance provenance = Provenance::Failed;
  std::string failure_reason;  // set only for Failed
  uint32_t n = 0;
  bool implicit = false;
  std::vector<Vertex> vertices;    // explicit encoding, sorted
  Partition partition;             // implicit encoding backing
  std::vector<uint8_t> group_bits; // implicit encoding: group in cover?

  bool failed() const { return provenance == Provenance::Failed; }
  bool contains(Vertex v) const;
  uint64_t size() const;
  std::vector<Vertex> to_explicit() const;  // sorted vertex list, either encoding
  uint64_t encoding_bits() const;           // n for explicit, partition + group bits for implicit
};

struct VcDiagnostics {
  uint32_t a = 0;                 // tester query budget ceil(n / alpha)
  uint32_t b = 0;                 // tester gap threshold ceil(n^(delta/2))
  uint32_t modulus = 0;           // pair-counter modulus c
  Partition partition;            // the run's group structure, for offline audits
  uint32_t easy_matching = 0;     // edges recovered by the bank's greedy matching
  uint32_t easy_threshold = 0;    // ceil(n / (8 alpha)); >= means match case
  uint32_t simple_groups = 0;
  uint32_t residual_groups = 0;
  uint32_t clean_groups = 0;
  uint32_t matched_clean_groups = 0;
  uint32_t contracted_edges = 0;        // distinct clean pairs with nonzero residue
  std::vector<GroupClass> classes;      // per group; empty when the match case fired
  MosDiagnostics mos;
};

struct VcOutcome {
  CoverResult cover;
  VcDiagnostics diag;
};

// Bit counts from the serialized form of each live component. Counter banks
// are bit-packed (ceil(log2 c) bits per pair residue), everything else is
// byte-serialized. The output term is filled in only when a cover is given.
struct SpaceReport {
  uint64_t partition_bits = 0;
  uint64_t mos_bits = 0;
  uint64_t tester_bits = 0;
  uint64_t pair_counter_bits = 0;
  uint64_t internal_counter_bits = 0;
  uint64_t small_opt_bits = 0;  // full-stream driver only
  uint64_t output_bits = 0;

  uint64_t state_total() const {
    return partition_bits + mos_bits + tester_bits + pair_counter_bits + internal_counter_bits +
           small_opt_bits;
  }
  uint64_t total() const { return state_total() + output_bits; }
};

// Contracted multigraph over clean groups: one edge per unordered group pair
// whose cross-edge count is nonzero modulo the counter modulus.
struct ContractedMultigraph {
  uint32_t num_groups = 0;
  std::vector<std::pair<uint32_t, uint32_t>> edges;  // (i, j), i < j, ascending
};

// Both endpoints of a greedy maximal matching on the contracted graph,
// scanning edges in the order given.
std::vector<uint32_t> greedy_group_cover(const ContractedMultigraph& g);

// One-pass vertex-cover state for a single (alpha, delta) run: a random
// partition into ~n/alpha groups of size ~alpha, a match-or-sparsify bank,
// one neighborhood tester per group (S = the group, thresholds a = ceil(n /
// alpha), b = ceil(n^(delta/2))), modular cross-pair counters with modulus
// c = ceil(15 / delta), and exact per-group internal counters.
//
// finalize(): if the bank's matching has >= ceil(n/(8 alpha)) edges, the
// whole vertex set is the cover (match case). Otherwise groups are
// classified — simple (a matched member, or internal edges survive), then
// residual (tester says the group still has >= b outside neighbors beyond
// the matched vertices), then clean — and the cover is all simple and
// residual groups plus both-endpoint groups of a greedy matching on the
// contracted clean-pair graph.
class VcState {
 public:
  VcState() = default;
  VcState(uint32_t n, uint32_t alpha, double delta, uint64_t seed, VcOptions opts = {});

  void update(const StreamUpdate& up);
  VcOutcome finalize() const;

  uint32_t n() const { return n_; }
  uint32_t alpha() const { return alpha_; }
  double delta() const { return delta_; }
  uint32_t a() const { return a_; }
  uint32_t b() const { return b_; }
  uint32_t modulus() const { return c_; }
  uint32_t num_groups() const { return groups_; }
  const Partition& partition() const { return part_; }
  const MatchOrSparsifyState& bank() const { return mos_; }
  const NeighborhoodTester& tester(uint32_t g) const { return testers_[g]; }

  SpaceReport space_report(const CoverResult* cover = nullptr) const;
  void serialize(ByteWriter& out) const;

 private:
  uint32_t n_ = 0;
  uint32_t alpha_ = 0;
  double delta_ = 0.0;
  uint64_t seed_ = 0;
  uint32_t a_ = 0;
  uint32_t b_ = 0;
  uint32_t c_ = 0;
  uint32_t groups_ = 0;
  Partition part_;
  MatchOrSparsifyState mos_;
  uint64_t r_ = 0;                // fingerprint base shared by the tester bank
  std::vector<uint64_t> r_pow_;   // r^v for all v
  std::vector<NeighborhoodTester> testers_;
  std::vector<uint16_t> pair_mod_;   // cross-pair counters mod c, EdgeId over groups
  std::vector<int64_t> internal_;    // exact internal edge counts per group
};

struct SolveOptions {
  uint32_t runs = 0;          // 0 = ceil(40 / delta)
  uint32_t tester_reps = 0;   // 0 = ceil(2.5 * ln n), min 3 (cheaper than the
                              // standalone default; the run count supplies the
                              // repetition the per-tester budget gives up)
  double mos_scale = 1.0;
  bool keep_run_details = true;  // retain per-run outcomes in the result
};

// Full-stream driver: rho = ceil(40/delta) independent runs at the working
// approximation alpha' = max(1, alpha/10) — the 10x headroom pays for the
// residual groups each run may add — plus, when k = ceil(n / (alpha *
// ceil(log2 n)^2)) >= 2, a small-optimum sketch that short-circuits
// everything if opt < k. Selection: the exact small-opt cover when it
// decodes; otherwise the smallest cover among non-failed runs whose
// residual-group count stays within n / (alpha * ceil(log2 n)^2); otherwise
// the smallest non-failed cover; otherwise a Failed result.
struct SolveResult {
  CoverResult cover;
  uint32_t selected_run = UINT32_MAX;  // index into runs; UINT32_MAX = small-opt or failed
  bool small_opt_enabled = false;
  bool small_opt_used = false;
  SoDecode small_opt;
  std::vector<VcOutcome> runs;  // per-run outcomes when keep_run_details
  SpaceReport space;            // run 0's report (shapes are seed-invariant) + small-opt bits
};

SolveResult solve_full(const std::vector<StreamUpdate>& updates, uint32_t n, uint32_t alpha,
                       double delta, uint64_t seed, const SolveOptions& opts = {});

// The space report solve_full would produce, from one run state plus the
// small-opt sketch. The driver itself keeps all rho run states live during
// the pass, so measuring this way costs 1/rho of the driver's memory.
SpaceReport measure_driver_bits(uint32_t n, uint32_t alpha, double delta, uint64_t seed,
                                const SolveOptions& opts = {});

}  // namespace vcs
