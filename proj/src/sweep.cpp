#include "vcs/sweep.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <set>

#include "vcs/oracle.hpp"
#include "vcs/rng.hpp"

namespace vcs {

RunAudit audit_outcome(const FinalGraph& g, const VcOutcome& out) {
  RunAudit a;
  std::vector<std::pair<Vertex, Vertex>> sampled;
  sampled.reserve(out.diag.mos.sampled.size());
  for (const auto& rec : out.diag.mos.sampled) {
    a.sampled_total++;
    if (!g.has_edge(rec.second.first, rec.second.second)) a.sampled_wrong++;
    sampled.push_back(rec.second);
  }
  Matching m = greedy_matching(g.n, sampled);
  if (!m.is_vertex_disjoint()) a.matching_valid = false;
  for (auto [u, v] : m.edges)
    if (!g.has_edge(u, v)) a.matching_valid = false;

  if (out.cover.failed()) return a;

  for (auto [u, v] : g.edges) {
    if (out.cover.contains(u) || out.cover.contains(v)) continue;
    a.uncovered_edges++;
    if (a.uncovered_sample.size() < 8) a.uncovered_sample.emplace_back(u, v);
  }

  if (out.diag.classes.empty()) return a;  // match case: no tester/counter decisions

  const Partition& part = out.diag.partition;
  const uint32_t groups = part.num_groups();
  std::vector<std::vector<Vertex>> nb(groups);
  for (auto [u, v] : g.edges) {
    nb[part.group_of(u)].push_back(v);
    nb[part.group_of(v)].push_back(u);
  }
  std::vector<bool> in_t(g.n, false);
  for (auto [u, v] : m.edges) {
    in_t[u] = true;
    in_t[v] = true;
  }
  for (uint32_t gi = 0; gi < groups; gi++) {
    if (out.diag.classes[gi] == GroupClass::Simple) continue;  // tester unconsulted
    auto& list = nb[gi];
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
    uint32_t truth = 0;
    for (Vertex v : list)
      if (!in_t[v]) truth++;
    bool yes = out.diag.classes[gi] == GroupClass::Residual;
    a.tester_checked++;
    if (truth >= out.diag.b && !yes) a.tester_wrong++;
    if (truth <= out.diag.b / 2 && yes) a.tester_wrong++;
  }

  std::map<std::pair<uint32_t, uint32_t>, uint64_t> cross;
  for (auto [u, v] : g.edges) {
    uint32_t gu = part.group_of(u), gv = part.group_of(v);
    if (gu == gv) continue;
    if (out.diag.classes[gu] != GroupClass::Clean) continue;
    if (out.diag.classes[gv] != GroupClass::Clean) continue;
    cross[{std::min(gu, gv), std::max(gu, gv)}]++;
  }
  for (const auto& [pr, cnt] : cross)
    if (cnt % out.diag.modulus == 0) a.counter_missed_pairs++;
  return a;
}

VcOutcome run_algorithm1(const std::vector<StreamUpdate>& updates, uint32_t n, uint32_t alpha,
                         double delta, uint64_t seed, const VcOptions& opts) {
  VcState st(n, alpha, delta, seed, opts);
  for (const auto& up : updates) st.update(up);
  return st.finalize();
}

SpaceReport measure_state_bits(uint32_t n, uint32_t alpha, double delta, uint64_t seed,
                               const VcOptions& opts) {
  VcState st(n, alpha, delta, seed, opts);
  return st.space_report();
}

std::vector<CorpusInstance> validity_corpus(uint64_t seed0) {
  std::vector<CorpusInstance> out;
  out.reserve(200);
  const double dels[3] = {0.0, 0.25, 0.5};
  const uint32_t alphas[3] = {2, 4, 8};
  for (uint32_t i = 0; i < 200; i++) {
    CorpusInstance ci;
    // Weighted toward small n so the 200-run validity pass stays inside its
    // ten-minute budget on one core.
    uint32_t n = i < 150 ? 64 : (i < 186 ? 128 : 256);
    ci.alpha = alphas[i % 3];
    ci.delta = 0.5;
    GeneratorSpec& gs = ci.gspec;
    gs.n = n;
    gs.seed = derive_seed(seed0, 0x67656e, i);
    gs.deletion_fraction = dels[(i / 3) % 3];
    switch (i % 8) {
      case 0:
        gs.family = Family::Gnp;
        gs.p = 0.08 * 64.0 / n + 0.02;
        break;
      case 1:
        gs.family = Family::Gnp;
        gs.p = 0.15 * 64.0 / n + 0.03;
        break;
      case 2:
        gs.family = Family::PlantedCover;
        gs.cover_size = std::max<uint32_t>(2, n / 8);
        gs.p = 0.3;
        break;
      case 3:
        gs.family = Family::Star;
        gs.hub = i % n;
        break;
      case 4:
        gs.family = Family::CliquePlusCliques;
        gs.big_clique = n / 4;
        gs.small_clique = 3;
        break;
      case 5:
        gs.family = Family::Churn;
        gs.p = 0.1 * 64.0 / n + 0.02;
        break;
      case 6:
        gs.family = Family::PerfectMatching;
        break;
      case 7:
        gs.family = Family::Gnp;
        gs.p = 0.04;
        break;
    }
    ci.run_seed = derive_seed(seed0, 0x72756e, i);
    ci.label = family_name(gs.family) + "-n" + std::to_string(n) + "-a" +
               std::to_string(ci.alpha) + "-i" + std::to_string(i);
    out.push_back(std::move(ci));
  }
  return out;
}

DistReport ne_distribution_test(const FinalGraph& g, const std::vector<Vertex>& s,
                                uint32_t samples, uint64_t seed0, NeOptions opts) {
  DistReport r;
  r.samples = samples;
  auto exact = ne_distribution(g, s);
  std::vector<bool> in_s(g.n, false);
  for (Vertex v : s) in_s[v] = true;
  std::vector<uint64_t> counts(g.n, 0);
  for (uint32_t i = 0; i < samples; i++) {
    NeighborhoodEdgeSampler sam(g.n, s, derive_seed(seed0, 0x646973, i), opts);
    for (auto [u, v] : g.edges) sam.update({u, v, +1});
    NeSample d = sam.decode();
    if (d.kind == NeSample::Kind::Empty) {
      r.empties++;
      if (!exact.empty()) r.wrong++;
    } else if (d.kind == NeSample::Kind::Fail) {
      r.fails++;
    } else {
      r.edges++;
      counts[d.v]++;
      if (!in_s[d.u] || !g.has_edge(std::min(d.u, d.v), std::max(d.u, d.v)) ||
          exact.find(d.v) == exact.end())
        r.wrong++;
    }
  }
  if (r.edges == 0) {
    r.tv = exact.empty() ? 0.0 : 1.0;
    return r;
  }
  double tv = 0.0;
  for (Vertex v = 0; v < g.n; v++) {
    double emp = double(counts[v]) / double(r.edges);
    auto it = exact.find(v);
    double ex = it == exact.end() ? 0.0 : it->second;
    tv += std::abs(emp - ex);
    if (counts[v] > 0) r.empirical[v] = emp;
  }
  r.tv = tv / 2.0;
  return r;
}

ModwrapDemo build_modwrap_demo(uint64_t vc_seed, uint64_t build_seed) {
  ModwrapDemo d;
  d.n = 16384;
  d.alpha = 16;
  d.delta = 0.5;
  d.vc_seed = vc_seed;
  // Must match the partition VcState(n, alpha, delta, vc_seed) will draw.
  Partition part = random_partition(d.n, d.alpha, derive_seed(vc_seed, 0x7061), {});
  auto members = part.members();
  const uint32_t groups = part.num_groups();

  auto rng = make_rng(derive_seed(build_seed, 0x64656d6f));
  d.group_a = static_cast<uint32_t>(rng() % groups);
  do {
    d.group_b = static_cast<uint32_t>(rng() % groups);
  } while (d.group_b == d.group_a);

  auto pick = [&](const std::vector<Vertex>& from, uint32_t count) {
    std::vector<Vertex> v = from;
    std::shuffle(v.begin(), v.end(), rng);
    v.resize(count);
    return v;
  };
  std::vector<Vertex> side_a = pick(members[d.group_a], 6);
  std::vector<Vertex> side_b = pick(members[d.group_b], 5);
  for (Vertex x : side_a)
    for (Vertex y : side_b) d.planted.emplace_back(std::min(x, y), std::max(x, y));

  std::vector<bool> off_limits(d.n, false);
  for (Vertex v : members[d.group_a]) off_limits[v] = true;
  for (Vertex v : members[d.group_b]) off_limits[v] = true;
  std::vector<Vertex> pool;
  pool.reserve(d.n);
  for (Vertex v = 0; v < d.n; v++)
    if (!off_limits[v]) pool.push_back(v);
  std::shuffle(pool.begin(), pool.end(), rng);
  const uint32_t num_spreaders = 120;  // max matching 120 + 5 < ceil(n/(8 alpha)) = 128
  std::vector<Vertex> spreaders(pool.begin(), pool.begin() + num_spreaders);
  std::vector<Vertex> leaves(pool.begin() + num_spreaders, pool.end());

  std::vector<std::pair<Vertex, Vertex>> edges = d.planted;
  edges.reserve(d.planted.size() + size_t(num_spreaders) * leaves.size());
  for (Vertex sp : spreaders)
    for (Vertex lf : leaves) edges.emplace_back(std::min(sp, lf), std::max(sp, lf));
  std::shuffle(edges.begin(), edges.end(), rng);

  d.updates.reserve(edges.size());
  for (auto [u, v] : edges) d.updates.push_back({u, v, +1});
  std::sort(edges.begin(), edges.end());
  d.graph.n = d.n;
  d.graph.edges = std::move(edges);
  return d;
}

DemoOutcome run_modwrap_demo(const ModwrapDemo& demo, const VcOptions& opts) {
  DemoOutcome res;
  res.outcome = run_algorithm1(demo.updates, demo.n, demo.alpha, demo.delta, demo.vc_seed, opts);
  res.audit = audit_outcome(demo.graph, res.outcome);
  const auto& diag = res.outcome.diag;
  if (res.outcome.cover.failed()) {
    res.detail = "run failed: " + res.outcome.cover.failure_reason;
    return res;
  }
  if (diag.classes.empty()) {
    res.detail = "match case fired (easy matching reached the threshold)";
    return res;
  }
  if (diag.classes[demo.group_a] != GroupClass::Clean ||
      diag.classes[demo.group_b] != GroupClass::Clean) {
    res.detail = "a planted group was not classified clean";
    return res;
  }
  uint64_t uncovered_planted = 0;
  for (auto [u, v] : demo.planted)
    if (!res.outcome.cover.contains(u) && !res.outcome.cover.contains(v)) uncovered_planted++;
  if (uncovered_planted == 0) {
    res.detail = "planted edges all covered";
    return res;
  }
  if (res.audit.counter_missed_pairs == 0) {
    res.detail = "no wrapped counter recorded";  // should not happen with the above
    return res;
  }
  res.fired = true;
  res.detail = "clean-clean pair with exactly c cross edges left " +
               std::to_string(uncovered_planted) + " planted edges uncovered";
  return res;
}

ModwrapDemo frozen_modwrap_demo() {
  // Seeds found by offline search (tools/seed_search); the partition draw,
  // the sampler bank, and the planted layout must cooperate.
  return build_modwrap_demo(20250815, 1);
}

std::vector<SweepCell> default_sweep_grid() {
  std::vector<SweepCell> cells;
  auto add = [&](std::string label, Family fam, uint32_t n, uint32_t alpha, std::string check,
                 double p = 0.1, double del = 0.0) {
    SweepCell c;
    c.label = std::move(label);
    c.gspec.family = fam;
    c.gspec.n = n;
    c.gspec.p = p;
    c.gspec.deletion_fraction = del;
    if (fam == Family::PlantedCover) c.gspec.cover_size = std::max<uint32_t>(2, n / 8);
    if (fam == Family::CliquePlusCliques) c.gspec.big_clique = n / 4;
    c.alpha = alpha;
    c.delta = 0.5;
    c.seeds = 3;
    c.seed0 = 11;
    c.check = std::move(check);
    cells.push_back(std::move(c));
  };
  add("gnp-solve", Family::Gnp, 64, 2, "solve", 0.1);
  add("gnp-del-solve", Family::Gnp, 64, 4, "solve", 0.15, 0.5);
  add("star-solve", Family::Star, 64, 8, "solve");
  add("churn-solve", Family::Churn, 64, 4, "solve", 0.12, 0.25);
  add("planted-alg1", Family::PlantedCover, 64, 2, "algorithm1", 0.3);
  add("clique-alg1", Family::CliquePlusCliques, 96, 4, "algorithm1");
  add("matching-alg1", Family::PerfectMatching, 128, 2, "algorithm1");
  SweepCell demo;
  demo.label = "modwrap-demo";
  demo.check = "modwrap";
  demo.gspec.n = 16384;
  demo.alpha = 16;
  demo.seeds = 1;
  cells.push_back(std::move(demo));
  return cells;
}

SweepRowResult run_sweep_cell(const SweepCell& cell) {
  SweepRowResult row;
  row.cell = cell;
  if (cell.check == "modwrap") {
    row.expected_failure = true;
    ModwrapDemo demo = frozen_modwrap_demo();
    DemoOutcome out = run_modwrap_demo(demo);
    row.runs = 1;
    row.valid = out.audit.uncovered_edges == 0 ? 1 : 0;
    row.clean = out.audit.clean() ? 1 : 0;
    row.min_cover = row.max_cover = out.outcome.cover.size();
    row.mean_cover = double(row.min_cover);
    row.pass = out.fired;  // passing means failing as documented
    row.note = out.detail;
    return row;
  }

  uint64_t cover_sum = 0;
  bool ratios_ok = true;
  for (uint32_t i = 0; i < cell.seeds; i++) {
    GeneratorSpec gs = cell.gspec;
    gs.seed = derive_seed(cell.seed0, 0x6773, i);
    GeneratedStream gen = generate_stream(gs);
    CoverResult cover;
    RunAudit audit;
    uint64_t bits = 0;
    if (cell.check == "solve") {
      SolveResult res = solve_full(gen.updates, gs.n, cell.alpha, cell.delta,
                                   derive_seed(cell.seed0, 0x736c76, i));
      cover = res.cover;
      bits = res.space.state_total();
      if (res.selected_run != UINT32_MAX && res.selected_run < res.runs.size())
        audit = audit_outcome(gen.final_graph, res.runs[res.selected_run]);
    } else {
      VcOutcome out = run_algorithm1(gen.updates, gs.n, cell.alpha, cell.delta,
                                     derive_seed(cell.seed0, 0x616c67, i));
      cover = out.cover;
      audit = audit_outcome(gen.final_graph, out);
      if (bits == 0 && i == 0)
        bits = measure_state_bits(gs.n, cell.alpha, cell.delta, derive_seed(cell.seed0, 1))
                   .state_total();
    }
    row.runs++;
    if (cover.failed()) {
      row.failed++;
      continue;
    }
    bool valid = verify_cover(gen.final_graph, cover.to_explicit());
    if (valid) row.valid++;
    if (audit.clean()) row.clean++;
    uint64_t sz = cover.size();
    cover_sum += sz;
    row.min_cover = row.runs == 1 ? sz : std::min(row.min_cover, sz);
    row.max_cover = std::max(row.max_cover, sz);
    if (bits) row.state_bits = bits;
    if (cell.check == "algorithm1" && gen.final_graph.n <= 96) {
      VcSolution opt = exact_min_vc(gen.final_graph);
      row.oracle_opt = int64_t(opt.size);
      if (opt.size > 0) {
        double ratio = double(sz) / double(opt.size);
        row.max_ratio = std::max(row.max_ratio, ratio);
        if (sz > uint64_t(10) * cell.alpha * opt.size) ratios_ok = false;
      }
    }
  }
  uint32_t counted = row.runs - row.failed;
  row.mean_cover = counted ? double(cover_sum) / counted : 0.0;
  row.pass = row.failed == 0 && row.valid == counted && ratios_ok;
  if (!row.pass && row.note.empty())
    row.note = row.failed ? "run failures" : (!ratios_ok ? "ratio bound exceeded" : "invalid cover");
  return row;
}

void write_sweep_csv(std::ostream& out, const std::vector<SweepRowResult>& rows) {
  out << "label,family,n,alpha,delta,seeds,check,runs,valid,clean,failed,min_cover,max_cover,"
         "mean_cover,state_bits,oracle_opt,max_ratio,status,note\n";
  for (const auto& r : rows) {
    const char* status = r.pass ? (r.expected_failure ? "expected_failure" : "ok") : "fail";
    std::string note = r.note;
    for (char& ch : note)
      if (ch == ',') ch = ';';
    out << r.cell.label << ',' << family_name(r.cell.gspec.family) << ',' << r.cell.gspec.n << ','
        << r.cell.alpha << ',' << r.cell.delta << ',' << r.cell.seeds << ',' << r.cell.check << ','
        << r.runs << ',' << r.valid << ',' << r.clean << ',' << r.failed << ',' << r.min_cover
        << ',' << r.max_cover << ',' << r.mean_cover << ',' << r.state_bits << ',' << r.oracle_opt
        << ',' << r.max_ratio << ',' << status << ',' << note << '\n';
  }
}

}  // namespace vcs
