#pragma once
#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "vcs/edge.hpp"
#include "vcs/generators.hpp"
#include "vcs/ne_sampler.hpp"
#include "vcs/stream.hpp"
#include "vcs/vc_core.hpp"

namespace vcs {

// Offline audit of one run against the true surviving graph: every recovered
// bank edge must be a real edge, tester answers must respect the gap promise
// (violations only count outside the open (b/2, b) band), and every
// clean-clean group pair with edges but a wrapped (== 0 mod c) counter is a
// recorded miss. clean() means the run's sketches gave zero wrong answers.
struct RunAudit {
  uint32_t sampled_total = 0;
  uint32_t sampled_wrong = 0;  // bank edges absent from the graph
  bool matching_valid = true;  // greedy matching vertex-disjoint, edges real
  uint32_t tester_checked = 0;
  uint32_t tester_wrong = 0;
  uint32_t counter_missed_pairs = 0;
  uint64_t uncovered_edges = 0;
  std::vector<std::pair<Vertex, Vertex>> uncovered_sample;  // first few misses

  bool clean() const {
    return sampled_wrong == 0 && matching_valid && tester_wrong == 0 &&
           counter_missed_pairs == 0;
  }
};

RunAudit audit_outcome(const FinalGraph& g, const VcOutcome& out);

// One pass of a single Algorithm-1 state over a full update sequence.
VcOutcome run_algorithm1(const std::vector<StreamUpdate>& updates, uint32_t n, uint32_t alpha,
                         double delta, uint64_t seed, const VcOptions& opts = {});

// Serialized-state sizes are stream-independent (cells change values, not
// shape), so the meter reads a freshly constructed state.
SpaceReport measure_state_bits(uint32_t n, uint32_t alpha, double delta, uint64_t seed,
                               const VcOptions& opts = {});

// The 200-instance validity corpus: n in {64,128,256} weighted toward the
// small end for runtime, alpha in {2,4,8}, delta = 0.5, all generator
// families, deletion fractions up to 0.5.
struct CorpusInstance {
  std::string label;
  GeneratorSpec gspec;
  uint32_t alpha = 2;
  double delta = 0.5;
  uint64_t run_seed = 1;
};

std::vector<CorpusInstance> validity_corpus(uint64_t seed0 = 7);

// Empirical NE-sampler distribution check: `samples` independent samplers
// each ingest the graph's edges and decode once. tv is total-variation
// distance between the v-marginal of Edge outputs and the exact uniform
// distribution over N(S); wrong counts Edge outputs violating the contract
// (u not in S, v without an S-neighbor, or a non-edge).
struct DistReport {
  uint64_t samples = 0;
  uint64_t edges = 0;
  uint64_t empties = 0;
  uint64_t fails = 0;
  uint64_t wrong = 0;
  double tv = 0.0;
  std::map<Vertex, double> empirical;  // v-marginal over Edge outputs
};

DistReport ne_distribution_test(const FinalGraph& g, const std::vector<Vertex>& s,
                                uint32_t samples, uint64_t seed0, NeOptions opts = {});

// Planted counter-wrap instance: a K_{6,5} between two groups contributes
// exactly c cross edges (so the pair counter reads 0), a complete bipartite
// fog of 120 spreaders versus all remaining vertices keeps the maximum
// matching at 125 < ceil(n/(8 alpha)) = 128 (the match case structurally
// cannot fire) and swamps the samplers so the planted edges stay unsampled,
// and both planted groups' outside neighborhoods stay at or below b/2 so
// their testers answer No. Result: both groups classified clean, contracted
// edge suppressed by the wrap, planted edges uncovered.
struct ModwrapDemo {
  uint32_t n = 0;
  uint32_t alpha = 0;
  double delta = 0.0;
  uint64_t vc_seed = 0;
  std::vector<StreamUpdate> updates;
  FinalGraph graph;
  uint32_t group_a = 0;
  uint32_t group_b = 0;
  std::vector<std::pair<Vertex, Vertex>> planted;  // the c cross edges
};

ModwrapDemo build_modwrap_demo(uint64_t vc_seed, uint64_t build_seed);

struct DemoOutcome {
  bool fired = false;     // wrap suppressed the pair, a planted edge is uncovered
  std::string detail;     // why it did or did not fire
  VcOutcome outcome;
  RunAudit audit;
};

DemoOutcome run_modwrap_demo(const ModwrapDemo& demo, const VcOptions& opts = {});

// Frozen seeds for the demonstration (found by offline search; the partition
// draw and the planted-stream layout must cooperate).
ModwrapDemo frozen_modwrap_demo();

// Sweep cells: check is "solve" (full driver; validity + audit), "algorithm1"
// (single run; validity + audit + oracle ratio when n <= 96), or "modwrap"
// (the frozen demonstration; passing means failing as documented).
struct SweepCell {
  std::string label;
  GeneratorSpec gspec;
  uint32_t alpha = 2;
  double delta = 0.5;
  uint32_t seeds = 3;
  uint64_t seed0 = 1;
  std::string check = "solve";
};

struct SweepRowResult {
  SweepCell cell;
  uint32_t runs = 0;
  uint32_t valid = 0;
  uint32_t clean = 0;
  uint32_t failed = 0;       // Failed provenance
  uint64_t min_cover = 0;
  uint64_t max_cover = 0;
  double mean_cover = 0.0;
  uint64_t state_bits = 0;   // per-run serialized state
  int64_t oracle_opt = -1;   // -1 when the oracle was skipped
  double max_ratio = 0.0;    // cover / opt when oracle ran
  bool expected_failure = false;
  bool pass = false;
  std::string note;
};

std::vector<SweepCell> default_sweep_grid();
SweepRowResult run_sweep_cell(const SweepCell& cell);

// CSV column order (documented in the README):
// label,family,n,alpha,delta,seeds,check,runs,valid,clean,failed,min_cover,
// max_cover,mean_cover,state_bits,oracle_opt,max_ratio,status,note
void write_sweep_csv(std::ostream& out, const std::vector<SweepRowResult>& rows);

}  // namespace vcs
