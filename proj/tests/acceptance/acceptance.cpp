// Acceptance suite: one criterion per function, one PASS/FAIL line each, all
// thresholds pinned as named constants next to the check they guard. Run all
// criteria by default or a single one with --criterion N. The process exit
// code is the number of failed criteria.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdint>
#include <cstdio>
#include <cstring>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include "vcs/bytes.hpp"
#include "vcs/generators.hpp"
#include "vcs/hashing.hpp"
#include "vcs/l0_sampler.hpp"
#include "vcs/match_or_sparsify.hpp"
#include "vcs/nbr_tester.hpp"
#include "vcs/ne_sampler.hpp"
#include "vcs/oracle.hpp"
#include "vcs/rng.hpp"
#include "vcs/sparse_recovery.hpp"
#include "vcs/sweep.hpp"
#include "vcs/vc_core.hpp"

using namespace vcs;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(const char* format, ...) {
  char buf[512];
  va_list args;
  va_start(args, format);
  vsnprintf(buf, sizeof(buf), format, args);
  va_end(args);
  return buf;
}

// ---------------------------------------------------------------------------
// 1. Cover validity: 200 corpus runs of the full driver; >= 195/200 valid
//    overall and 200/200 among runs whose sketch-error audit is clean.
// ---------------------------------------------------------------------------
Outcome criterion1() {
  constexpr uint32_t kMinValid = 195;
  constexpr double kBudgetSeconds = 600.0;
  auto t0 = std::chrono::steady_clock::now();

  auto corpus = validity_corpus();
  uint32_t valid = 0, clean_runs = 0, clean_valid = 0, failed = 0;
  for (const auto& inst : corpus) {
    auto gen = generate_stream(inst.gspec);
    auto res = solve_full(gen.updates, inst.gspec.n, inst.alpha, inst.delta, inst.run_seed);
    bool ok = !res.cover.failed() && verify_cover(gen.final_graph, res.cover.to_explicit());
    if (res.cover.failed()) failed++;
    valid += ok;
    bool clean = false;
    if (!res.cover.failed()) {
      if (res.small_opt_used) {
        clean = true;  // exact recovery path; no randomized answer involved
      } else if (res.selected_run != UINT32_MAX) {
        clean = audit_outcome(gen.final_graph, res.runs[res.selected_run]).clean();
      }
    }
    if (clean) {
      clean_runs++;
      clean_valid += ok;
    }
  }
  double dt = seconds_since(t0);
  bool pass = valid >= kMinValid && clean_valid == clean_runs && dt < kBudgetSeconds;
  return {pass, fmt("%u/200 valid, %u/%u clean-audit runs valid, %u failed, %.1fs",
                    valid, clean_valid, clean_runs, failed, dt)};
}

// ---------------------------------------------------------------------------
// 2. Approximation ratio on dense instances: 50 seeded G(256, 1/2) streams at
//    alpha = 2, every successful single run within 10 * alpha * opt; the
//    instances must actually sit in the dense regime opt >= n/(alpha log^2 n).
// ---------------------------------------------------------------------------
Outcome criterion2() {
  constexpr uint32_t kInstances = 50;
  constexpr uint32_t kAlpha = 2;
  uint32_t in_regime = 0, successes = 0, violations = 0;
  uint64_t worst_cover = 0;
  for (uint32_t t = 0; t < kInstances; t++) {
    GeneratorSpec spec;
    spec.family = Family::Gnp;
    spec.n = 256;
    spec.p = 0.5;
    spec.seed = derive_seed(201, t);
    auto gen = generate_stream(spec);
    auto opt = exact_min_vc(gen.final_graph);
    uint32_t log_n = ceil_log2(256);
    if (opt.size * kAlpha * log_n * log_n >= 256) in_regime++;
    auto out = run_algorithm1(gen.updates, 256, kAlpha, 0.5, derive_seed(202, t));
    if (out.cover.failed()) continue;
    successes++;
    worst_cover = std::max(worst_cover, out.cover.size());
    if (out.cover.size() > uint64_t(10) * kAlpha * opt.size) violations++;
  }
  bool pass = in_regime == kInstances && violations == 0 && successes == kInstances;
  return {pass, fmt("%u/%u successful within 10*alpha*opt, %u violations, "
                    "%u/%u in regime, worst cover %llu",
                    successes, kInstances, violations, in_regime, kInstances,
                    static_cast<unsigned long long>(worst_cover))};
}

// ---------------------------------------------------------------------------
// 3. Match-or-sparsify dichotomy: every bank run satisfies the lemma's
//    disjunction (checked literally, the sparsify bound is vacuous at desk
//    scale), >= 99% of recovered edges are real, and the perfect-matching
//    family fires the match case in >= 90/100 seeds.
// ---------------------------------------------------------------------------
Outcome criterion3() {
  constexpr uint32_t kBankRuns = 40;
  constexpr uint32_t kMatchSeeds = 100;
  constexpr uint32_t kMinFired = 90;

  uint32_t disj_ok = 0, matchings_valid = 0;
  uint64_t sampled_total = 0, sampled_wrong = 0;
  for (uint32_t t = 0; t < kBankRuns; t++) {
    GeneratorSpec spec;
    spec.n = t % 2 == 0 ? 64 : 128;
    spec.seed = derive_seed(203, t);
    switch (t % 4) {
      case 0: spec.family = Family::Gnp; spec.p = 0.1; break;
      case 1: spec.family = Family::PerfectMatching; break;
      case 2: spec.family = Family::Star; break;
      default:
        spec.family = Family::Gnp;
        spec.p = 0.3;
        spec.deletion_fraction = 0.4;
        break;
    }
    uint32_t alpha = t % 3 == 0 ? 4 : 2;
    auto gen = generate_stream(spec);
    MatchOrSparsifyState bank(spec.n, alpha, 0.5, derive_seed(204, t));
    for (const auto& up : gen.updates) bank.update(up);
    auto res = bank.finalize();

    bool edges_real = true;
    for (auto [u, v] : res.matching.edges)
      if (!gen.final_graph.has_edge(u, v)) edges_real = false;
    bool matching_ok = res.matching.is_vertex_disjoint() && edges_real;
    if (matching_ok) matchings_valid++;

    for (auto& [idx, e] : res.diag.sampled) {
      sampled_total++;
      if (!bank.sampler(idx).in_s(e.first) || !gen.final_graph.has_edge(e.first, e.second))
        sampled_wrong++;
    }

    uint64_t log_n = ceil_log2(spec.n);
    uint64_t sparsify_bound = 20 * ceil_div(spec.n, alpha) * log_n * log_n * log_n * log_n;
    uint64_t match_threshold = ceil_div(spec.n, 8 * alpha);
    if (res.matching.edges.size() >= match_threshold) {
      disj_ok++;
    } else if (matching_ok) {  // residual_subgraph requires a valid matching
      uint64_t residual_edges = residual_subgraph(gen.final_graph, res.matching).edge_count;
      if (residual_edges <= sparsify_bound) disj_ok++;
    }
  }

  uint32_t fired = 0;
  for (uint32_t t = 0; t < kMatchSeeds; t++) {
    GeneratorSpec spec;
    spec.family = Family::PerfectMatching;
    spec.n = 256;
    spec.seed = derive_seed(205, t);
    auto gen = generate_stream(spec);
    MatchOrSparsifyState bank(256, 2, 0.5, derive_seed(206, t));
    for (const auto& up : gen.updates) bank.update(up);
    if (bank.finalize().matching.edges.size() >= 16) fired++;  // ceil(256 / (8*2))
  }

  bool pct99 = sampled_wrong * 100 <= sampled_total && sampled_total > 0;
  bool pass = disj_ok == kBankRuns && matchings_valid == kBankRuns && pct99 &&
              fired >= kMinFired;
  return {pass, fmt("dichotomy %u/%u, matchings valid %u/%u, sampled real %llu/%llu, "
                    "match case %u/%u",
                    disj_ok, kBankRuns, matchings_valid, kBankRuns,
                    static_cast<unsigned long long>(sampled_total - sampled_wrong),
                    static_cast<unsigned long long>(sampled_total), fired, kMatchSeeds)};
}

// ---------------------------------------------------------------------------
// 4. Sampler distribution: ten fixed graphs (n <= 16), 1e5 fresh samplers
//    each; per graph TV <= 0.05, Fail <= 5%, contract violations <= 1e-3.
// ---------------------------------------------------------------------------
Outcome criterion4() {
  constexpr uint32_t kSamples = 100000;
  constexpr double kMaxTv = 0.05;
  constexpr double kMaxFailRate = 0.05;
  constexpr double kMaxWrongRate = 1e-3;
  constexpr double kBudgetSeconds = 300.0;
  auto t0 = std::chrono::steady_clock::now();

  struct Case {
    const char* name;
    FinalGraph g;
    std::vector<Vertex> s;
  };
  auto graph = [](uint32_t n, std::vector<std::pair<Vertex, Vertex>> edges) {
    FinalGraph g;
    g.n = n;
    for (auto [u, v] : edges) g.edges.push_back({std::min(u, v), std::max(u, v)});
    std::sort(g.edges.begin(), g.edges.end());
    return g;
  };
  std::vector<Case> cases;
  cases.push_back({"path", graph(4, {{0, 1}, {1, 2}}), {1}});
  cases.push_back({"star_hub", graph(8, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}, {0, 6}, {0, 7}}),
                   {0}});
  cases.push_back({"star_leaves",
                   graph(8, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}, {0, 6}, {0, 7}}),
                   {1, 2, 3, 4, 5, 6, 7}});
  cases.push_back({"edge_in_s", graph(4, {{0, 1}}), {0, 1}});
  cases.push_back({"skew", graph(12, {{0, 9}, {1, 9}, {2, 9}, {3, 10}, {0, 11}, {5, 6}}),
                   {0, 1, 2, 3}});
  cases.push_back({"cycle", graph(8, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7},
                                      {0, 7}}),
                   {0, 4}});
  cases.push_back({"two_comp", graph(10, {{0, 1}, {1, 2}, {5, 6}, {6, 7}, {7, 8}}), {1, 6}});
  cases.push_back({"bipartite", graph(8, {{0, 4}, {0, 5}, {0, 6}, {0, 7}, {1, 4}, {1, 5}, {1, 6},
                                          {1, 7}, {2, 4}, {2, 5}, {2, 6}, {2, 7}, {3, 4}, {3, 5},
                                          {3, 6}, {3, 7}}),
                   {0, 1, 2, 3}});
  cases.push_back({"matching", graph(16, {{0, 1}, {2, 3}, {4, 5}, {6, 7}, {8, 9}, {10, 11},
                                          {12, 13}, {14, 15}}),
                   {0, 2, 4, 6, 8, 10, 12, 14}});
  {
    std::vector<std::pair<Vertex, Vertex>> dense;
    for (Vertex u = 0; u < 16; u++)
      for (Vertex v = u + 1; v < 16; v++)
        if (!(u % 2 == 0 && v == u + 1)) dense.push_back({u, v});
    cases.push_back({"dense_minus_matching", graph(16, dense), {0, 1, 2, 3}});
  }

  // Decode succeeds only at a subsample level whose survivor set is exactly
  // a singleton; a halving chain from support ~16 skips size one about half
  // the time, so the per-decode budget is sized to the corpus's densest case
  // (0.49^6 ~ 1.4% expected Fail) rather than the sparse-stream default.
  NeOptions ne_opts;
  ne_opts.cascades = 6;

  uint32_t passed = 0;
  std::string failing;
  double worst_tv = 0.0, worst_fail = 0.0;
  for (size_t i = 0; i < cases.size(); i++) {
    auto rep = ne_distribution_test(cases[i].g, cases[i].s, kSamples, derive_seed(207, i),
                                    ne_opts);
    bool ok = rep.tv <= kMaxTv && double(rep.fails) <= kMaxFailRate * rep.samples &&
              double(rep.wrong) <= kMaxWrongRate * rep.samples;
    if (ok) passed++;
    else failing += fmt("%s(tv=%.4f,fail=%.4f,wrong=%llu) ", cases[i].name, rep.tv,
                        double(rep.fails) / rep.samples,
                        static_cast<unsigned long long>(rep.wrong));
    worst_tv = std::max(worst_tv, rep.tv);
    worst_fail = std::max(worst_fail, double(rep.fails) / rep.samples);
  }
  double dt = seconds_since(t0);
  bool pass = passed == cases.size() && dt < kBudgetSeconds;
  return {pass, fmt("%u/%zu graphs within tolerances, worst tv %.4f, worst fail %.4f, "
                    "%.1fs%s%s",
                    passed, cases.size(), worst_tv, worst_fail, dt,
                    failing.empty() ? "" : "; failing: ", failing.c_str())};
}

// ---------------------------------------------------------------------------
// 5. Tester gap correctness: b in {4, 16}, a = 4b, counts {b, 2b} answer Yes
//    and {b/4, b/2} answer No in >= 990/1000 fresh seeded queries per cell.
//    Repetitions are pinned at 100 — the log-n budget the guarantee assumes,
//    which desk-scale defaults undershoot.
// ---------------------------------------------------------------------------
Outcome criterion5() {
  constexpr uint32_t kQueries = 1000;
  constexpr uint32_t kMinCorrect = 990;
  constexpr uint32_t kReps = 100;
  std::string cells;
  bool pass = true;
  for (uint32_t b : {4u, 16u}) {
    uint32_t a = 4 * b;
    for (uint32_t count : {b / 4, b / 2, b, 2 * b}) {
      bool want_yes = count >= b;
      if (count == 0) continue;
      uint32_t correct = 0;
      for (uint32_t q = 0; q < kQueries; q++) {
        NtOptions opts;
        opts.reps = kReps;
        NeighborhoodTester t(256, {0}, a, b, derive_seed(208, b * 100000 + count * 1000 + q),
                             opts);
        for (uint32_t v = 1; v <= count; v++) t.update({0, v, 1});
        if (t.query({}) == want_yes) correct++;
      }
      if (correct < kMinCorrect) pass = false;
      cells += fmt("%s b=%u c=%u:%u ", want_yes ? "Y" : "N", b, count, correct);
    }
  }
  return {pass, fmt("per-cell correct of %u (need >= %u): %s", kQueries, kMinCorrect,
                    cells.c_str())};
}

// ---------------------------------------------------------------------------
// 6. Sketch linearity: for each of the four stream sketches, 100 random
//    split streams give byte-identical states via merge; insert-then-delete
//    decodes Empty 100/100.
// ---------------------------------------------------------------------------
Outcome criterion6() {
  constexpr uint32_t kPairs = 100;
  auto rand_updates = [](uint64_t seed, uint32_t n, uint32_t count) {
    auto rng = make_rng(seed);
    std::vector<StreamUpdate> ups;
    for (uint32_t i = 0; i < count; i++) {
      Vertex u = static_cast<Vertex>(rng() % n);
      Vertex v = static_cast<Vertex>(rng() % n);
      if (u == v) continue;
      int8_t d = rng() % 4 == 0 ? -1 : 1;
      ups.push_back({u, v, d});
    }
    return ups;
  };

  uint32_t l0_ok = 0, sr_ok = 0, ne_ok = 0, nt_ok = 0, empty_ok = 0;
  for (uint32_t t = 0; t < kPairs; t++) {
    uint64_t seed = derive_seed(209, t);
    auto sigma1 = rand_updates(derive_seed(210, t), 32, 40);
    auto sigma2 = rand_updates(derive_seed(211, t), 32, 40);

    {
      L0Sketch whole(1024, seed), left(1024, seed), right(1024, seed);
      auto rng = make_rng(derive_seed(212, t));
      for (uint32_t i = 0; i < 60; i++) {
        uint64_t id = rng() % 1024;
        int64_t d = rng() % 3 == 0 ? -1 : 1;
        whole.update(id, d);
        (i % 2 ? left : right).update(id, d);
      }
      left.merge(right);
      ByteWriter wa, wb;
      whole.serialize(wa);
      left.serialize(wb);
      if (wa.bytes() == wb.bytes()) l0_ok++;
    }
    {
      SparseRecoverySketch whole(4096, 16, seed), left(4096, 16, seed), right(4096, 16, seed);
      auto rng = make_rng(derive_seed(213, t));
      for (uint32_t i = 0; i < 60; i++) {
        uint64_t id = rng() % 4096;
        int64_t d = rng() % 2 == 0 ? -1 : 2;
        whole.update(id, d);
        (i % 2 ? left : right).update(id, d);
      }
      left.merge(right);
      ByteWriter wa, wb;
      whole.serialize(wa);
      left.serialize(wb);
      if (wa.bytes() == wb.bytes()) sr_ok++;
    }
    {
      std::vector<Vertex> s = {0, 3, 17};
      NeighborhoodEdgeSampler whole(32, s, seed), left(32, s, seed), right(32, s, seed);
      for (size_t i = 0; i < sigma1.size(); i++) {
        whole.update(sigma1[i]);
        left.update(sigma1[i]);
      }
      for (size_t i = 0; i < sigma2.size(); i++) {
        whole.update(sigma2[i]);
        right.update(sigma2[i]);
      }
      left.merge(right);
      ByteWriter wa, wb;
      whole.serialize(wa);
      left.serialize(wb);
      if (wa.bytes() == wb.bytes()) ne_ok++;
    }
    {
      std::vector<Vertex> s = {1, 4};
      NeighborhoodTester whole(32, s, 8, 4, seed), left(32, s, 8, 4, seed),
          right(32, s, 8, 4, seed);
      for (const auto& up : sigma1) {
        whole.update(up);
        left.update(up);
      }
      for (const auto& up : sigma2) {
        whole.update(up);
        right.update(up);
      }
      left.merge(right);
      ByteWriter wa, wb;
      whole.serialize(wa);
      left.serialize(wb);
      if (wa.bytes() == wb.bytes()) nt_ok++;
    }
    {
      // Insert a random edge set, delete it in a shuffled order: both the
      // element sampler and the edge sampler must certify Empty.
      auto rng = make_rng(derive_seed(214, t));
      std::vector<std::pair<Vertex, Vertex>> edges;
      std::set<std::pair<Vertex, Vertex>> seen;
      while (edges.size() < 12) {
        Vertex u = static_cast<Vertex>(rng() % 32);
        Vertex v = static_cast<Vertex>(rng() % 32);
        if (u == v) continue;
        auto e = std::minmax(u, v);
        if (!seen.insert({e.first, e.second}).second) continue;
        edges.push_back({e.first, e.second});
      }
      L0Sketch l0(1024, seed);
      NeighborhoodEdgeSampler ne(32, {0, 1, 2, 3}, seed);
      for (auto [u, v] : edges) {
        l0.update(edge_id(u, v, 32), 1);
        ne.update({u, v, 1});
      }
      std::shuffle(edges.begin(), edges.end(), rng);
      for (auto [u, v] : edges) {
        l0.update(edge_id(u, v, 32), -1);
        ne.update({u, v, -1});
      }
      if (l0.decode().kind == L0Decode::Kind::Empty &&
          ne.decode().kind == NeSample::Kind::Empty)
        empty_ok++;
    }
  }
  bool pass = l0_ok == kPairs && sr_ok == kPairs && ne_ok == kPairs && nt_ok == kPairs &&
              empty_ok == kPairs;
  return {pass, fmt("merge identity l0 %u/100, sr %u/100, sampler %u/100, tester %u/100; "
                    "insert-delete empty %u/100",
                    l0_ok, sr_ok, ne_ok, nt_ok, empty_ok)};
}

// ---------------------------------------------------------------------------
// 7. Partition concentration: hash-mode partitions at n = 4096, alpha = 256
//    land every group size inside [0.9, 1.1] * alpha across 100 seeds without
//    exhausting the resample budget.
// ---------------------------------------------------------------------------
Outcome criterion7() {
  constexpr uint32_t kSeeds = 100;
  PartitionOptions opts;
  opts.size_lo = 0.9;
  opts.size_hi = 1.1;
  opts.max_retries = 100;
  uint32_t ok = 0, exhausted = 0;
  for (uint32_t t = 0; t < kSeeds; t++) {
    try {
      Partition p = random_partition(4096, 256, derive_seed(215, t), opts);
      bool within = p.mode() == Partition::Mode::Hash;
      for (uint32_t g = 0; g < p.num_groups(); g++) {
        double size = p.group_size(g);
        if (size < 0.9 * 256.0 || size > 1.1 * 256.0) within = false;
      }
      if (within) ok++;
    } catch (const std::runtime_error&) {
      exhausted++;
    }
  }
  bool pass = ok == kSeeds && exhausted == 0;
  return {pass, fmt("%u/%u partitions within [0.9, 1.1]*alpha, %u retry exhaustions", ok,
                    kSeeds, exhausted)};
}

// ---------------------------------------------------------------------------
// 8. Space scaling: with n/alpha = 32, doubling (n, alpha) at most triples
//    the serialized state; at n = 1024, halving alpha from 8 to 4 grows the
//    state by a factor in [2.5, 6].
// ---------------------------------------------------------------------------
Outcome criterion8() {
  constexpr double kMaxDoubling = 3.0;
  constexpr double kAlphaLo = 2.5;
  constexpr double kAlphaHi = 6.0;
  uint64_t t256 = measure_state_bits(256, 8, 0.5, 216).state_total();
  uint64_t t512 = measure_state_bits(512, 16, 0.5, 216).state_total();
  uint64_t t1024 = measure_state_bits(1024, 32, 0.5, 216).state_total();
  double r1 = double(t512) / double(t256);
  double r2 = double(t1024) / double(t512);
  uint64_t a4 = measure_state_bits(1024, 4, 0.5, 217).state_total();
  uint64_t a8 = measure_state_bits(1024, 8, 0.5, 217).state_total();
  double ra = double(a4) / double(a8);
  bool pass = r1 <= kMaxDoubling && r2 <= kMaxDoubling && ra >= kAlphaLo && ra <= kAlphaHi;
  return {pass, fmt("doubling ratios %.2f, %.2f (<= %.1f); alpha-halving ratio %.2f in "
                    "[%.1f, %.1f]",
                    r1, r2, kMaxDoubling, ra, kAlphaLo, kAlphaHi)};
}

// ---------------------------------------------------------------------------
// 9. Small-opt exactness: 100 instances with opt < k and edges within
//    recovery capacity decode Exact at the oracle optimum in >= 99; 100
//    instances with opt >= k never produce a wrong Exact.
// ---------------------------------------------------------------------------
Outcome criterion9() {
  constexpr uint32_t kK = 6;
  constexpr uint32_t kMinExact = 99;

  uint32_t exact_right = 0, capacity_ok = 0;
  for (uint32_t t = 0; t < 100; t++) {
    GeneratorSpec spec;
    spec.seed = derive_seed(218, t);
    if (t % 3 == 0) {
      spec.family = Family::Star;
      spec.n = 256;
      spec.hub = t % 7;
    } else {
      spec.family = Family::PlantedCover;
      spec.n = 256;
      spec.cover_size = 1 + t % 5;
      spec.p = 0.3;
    }
    auto gen = generate_stream(spec);
    auto opt = exact_min_vc(gen.final_graph);
    SmallOptSketch sk(256, kK, derive_seed(219, t));
    // The peel guarantee targets support <= capacity / 2.
    if (gen.final_graph.edges.size() <= sk.capacity() / 2) capacity_ok++;
    for (const auto& up : gen.updates) sk.update(up);
    auto dec = sk.decode();
    if (dec.kind == SoDecode::Kind::Exact && dec.cover.size() == opt.size &&
        verify_cover(gen.final_graph, dec.cover))
      exact_right++;
  }

  uint32_t wrong_exact = 0, big_opt = 0;
  for (uint32_t t = 0; t < 100; t++) {
    GeneratorSpec spec;
    spec.family = Family::Gnp;
    spec.n = 24;
    spec.p = 0.4;
    spec.seed = derive_seed(220, t);
    auto gen = generate_stream(spec);
    auto opt = exact_min_vc(gen.final_graph);
    if (opt.size < kK) continue;  // G(24, .4) optimum is far above 6
    big_opt++;
    SmallOptSketch sk(24, kK, derive_seed(221, t));
    for (const auto& up : gen.updates) sk.update(up);
    if (sk.decode().kind == SoDecode::Kind::Exact) wrong_exact++;
  }

  bool pass = exact_right >= kMinExact && capacity_ok == 100 && wrong_exact == 0 &&
              big_opt == 100;
  return {pass, fmt("exact at optimum %u/100 (capacity ok %u/100); wrong Exact %u on "
                    "%u large-opt instances",
                    exact_right, capacity_ok, wrong_exact, big_opt)};
}

// ---------------------------------------------------------------------------
// 10. Counter-wrap demonstration: the frozen instance leaves a clean-clean
//     pair's counter at 0 mod c and a planted edge uncovered, and the sweep
//     row reports it as an expected failure.
// ---------------------------------------------------------------------------
Outcome criterion10() {
  auto demo = frozen_modwrap_demo();
  auto out = run_modwrap_demo(demo);

  SweepCell cell;
  cell.label = "modwrap_demo";
  cell.check = "modwrap";
  for (const auto& c : default_sweep_grid())
    if (c.check == "modwrap") cell = c;
  auto row = run_sweep_cell(cell);

  bool pass = out.fired && row.expected_failure && row.pass;
  return {pass, fmt("fired=%s (%s); sweep expected_failure=%s pass=%s, uncovered=%llu",
                    out.fired ? "yes" : "no", out.detail.c_str(),
                    row.expected_failure ? "yes" : "no", row.pass ? "yes" : "no",
                    static_cast<unsigned long long>(out.audit.uncovered_edges))};
}

struct Criterion {
  int id;
  const char* name;
  Outcome (*run)();
};

const Criterion kCriteria[] = {
    {1, "cover-validity", criterion1},
    {2, "approximation-ratio", criterion2},
    {3, "match-or-sparsify-dichotomy", criterion3},
    {4, "sampler-distribution", criterion4},
    {5, "tester-gap", criterion5},
    {6, "sketch-linearity", criterion6},
    {7, "partition-concentration", criterion7},
    {8, "space-scaling", criterion8},
    {9, "small-opt-exactness", criterion9},
    {10, "counter-wrap-demo", criterion10},
};

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  for (int i = 1; i < argc; i++) {
    if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc) {
      only = std::atoi(argv[++i]);
    } else {
      std::cerr << "usage: acceptance [--criterion N]\n";
      return 2;
    }
  }
  if (only < 0 || only > 10) {
    std::cerr << "criterion must be 1..10\n";
    return 2;
  }

  int failures = 0;
  for (const auto& c : kCriteria) {
    if (only != 0 && c.id != only) continue;
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    std::cout << "c" << c.id << " " << c.name << ": " << (out.pass ? "PASS" : "FAIL") << " ("
              << out.detail << ")\n";
    if (!out.pass) failures++;
  }
  return failures;
}
