#include "vcs/vc_core.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <stdexcept>

#include "vcs/field.hpp"
#include "vcs/rng.hpp"

namespace vcs {

bool CoverResult::contains(Vertex v) const {
  if (provenance == Provenance::Failed || v >= n) return false;
  if (implicit) return group_bits[partition.group_of(v)] != 0;
  return std::binary_search(vertices.begin(), vertices.end(), v);
}

uint64_t CoverResult::size() const {
  if (provenance == Provenance::Failed) return 0;
  if (!implicit) return vertices.size();
  uint64_t total = 0;
  for (uint32_t g = 0; g < partition.num_groups(); g++)
    if (group_bits[g]) total += partition.group_size(g);
  return total;
}

std::vector<Vertex> CoverResult::to_explicit() const {
  if (provenance == Provenance::Failed) return {};
  if (!implicit) return vertices;
  std::vector<Vertex> out;
  out.reserve(size());
  for (Vertex v = 0; v < n; v++)
    if (group_bits[partition.group_of(v)]) out.push_back(v);
  return out;
}

uint64_t CoverResult::encoding_bits() const {
  if (provenance == Provenance::Failed) return 0;
  // Implicit: one bit per group, on top of the partition the state already
  // stores. Explicit: the characteristic vector over V.
  return implicit ? partition.num_groups() : n;
}

std::vector<uint32_t> greedy_group_cover(const ContractedMultigraph& g) {
  Matching m = greedy_matching(g.num_groups, g.edges);
  std::vector<uint32_t> out;
  out.reserve(2 * m.edges.size());
  for (auto [i, j] : m.edges) {
    out.push_back(i);
    out.push_back(j);
  }
  std::sort(out.begin(), out.end());
  return out;
}

VcState::VcState(uint32_t n, uint32_t alpha, double delta, uint64_t seed, VcOptions opts) {
  if (n < 2) throw std::invalid_argument("VcState: need n >= 2");
  if (delta <= 0.0 || delta > 1.0) throw std::invalid_argument("VcState: need 0 < delta <= 1");
  if (alpha < 1 || double(alpha) > std::pow(double(n), 1.0 - delta) + 1e-9)
    throw std::invalid_argument("VcState: need 1 <= alpha <= n^(1-delta)");
  n_ = n;
  alpha_ = alpha;
  delta_ = delta;
  seed_ = seed;
  a_ = static_cast<uint32_t>(ceil_div(n, alpha));
  b_ = std::max<uint32_t>(
      2, static_cast<uint32_t>(std::ceil(std::pow(double(n), delta / 2.0) - 1e-9)));
  c_ = static_cast<uint32_t>(std::ceil(15.0 / delta - 1e-9));
  if (c_ > 60000) throw std::invalid_argument("VcState: delta too small (counter modulus)");

  part_ = random_partition(n, alpha, derive_seed(seed, 0x7061), opts.partition);
  groups_ = part_.num_groups();

  MosOptions mo;
  mo.scale = opts.mos_scale;
  mo.cascades = opts.mos_cascades;
  mos_ = MatchOrSparsifyState(n, alpha, delta, derive_seed(seed, 0x6d73), mo);

  auto rng = make_rng(derive_seed(seed, 0x7663));
  std::uniform_int_distribution<uint64_t> unit(1, Field::P - 1);
  r_ = unit(rng);
  r_pow_.resize(n);
  r_pow_[0] = 1;
  for (uint32_t v = 1; v < n; v++) r_pow_[v] = Field::mul(r_pow_[v - 1], r_);

  NtOptions nt;
  nt.reps = opts.tester_reps;
  nt.fixed_r = r_;
  auto members = part_.members();
  testers_.reserve(groups_);
  for (uint32_t g = 0; g < groups_; g++)
    testers_.emplace_back(n, members[g], a_, b_, derive_seed(seed, 0x6e74, g), nt);

  pair_mod_.assign(groups_ >= 2 ? pair_count(groups_) : 0, 0);
  internal_.assign(groups_, 0);
}

void VcState::update(const StreamUpdate& up) {
  mos_.update(up);
  uint32_t gu = part_.group_of(up.u);
  uint32_t gv = part_.group_of(up.v);
  testers_[gu].update_pow(up, r_pow_[up.u], r_pow_[up.v]);
  if (gv != gu) testers_[gv].update_pow(up, r_pow_[up.u], r_pow_[up.v]);

  if (gu == gv) {
    internal_[gu] += up.delta;
  } else {
    uint64_t eid = edge_id(std::min(gu, gv), std::max(gu, gv), groups_);
    uint32_t cur = pair_mod_[eid];
    pair_mod_[eid] = static_cast<uint16_t>((cur + c_ + (up.delta > 0 ? 1 : c_ - 1)) % c_);
  }
}

VcOutcome VcState::finalize() const {
  VcOutcome out;
  VcDiagnostics& d = out.diag;
  d.a = a_;
  d.b = b_;
  d.modulus = c_;
  d.partition = part_;
  d.easy_threshold = static_cast<uint32_t>(ceil_div(n_, 8ull * alpha_));

  MosResult mr = mos_.finalize();
  d.easy_matching = static_cast<uint32_t>(mr.matching.edges.size());
  d.mos = std::move(mr.diag);

  const bool implied = part_.mode() == Partition::Mode::Hash;
  auto seal = [&](CoverResult::Provenance prov, std::vector<uint8_t> bits) {
    out.cover.provenance = prov;
    out.cover.n = n_;
    out.cover.implicit = implied;
    if (implied) {
      out.cover.partition = part_;
      out.cover.group_bits = std::move(bits);
    } else {
      for (Vertex v = 0; v < n_; v++)
        if (bits[part_.group_of(v)]) out.cover.vertices.push_back(v);
    }
  };

  if (d.easy_matching >= d.easy_threshold) {
    seal(CoverResult::Provenance::MatchCase, std::vector<uint8_t>(groups_, 1));
    return out;
  }

  // Classify groups: simple first (matched member or surviving internal
  // edge), then residual by tester vote against T = V(easy matching).
  d.classes.assign(groups_, GroupClass::Clean);
  std::vector<bool> matched = mr.matching.matched_mask();
  for (Vertex v = 0; v < n_; v++)
    if (matched[v]) d.classes[part_.group_of(v)] = GroupClass::Simple;
  for (uint32_t g = 0; g < groups_; g++)
    if (internal_[g] != 0) d.classes[g] = GroupClass::Simple;

  std::vector<Vertex> t;
  for (Vertex v = 0; v < n_; v++)
    if (matched[v]) t.push_back(v);
  if (t.size() > a_) {
    out.cover.provenance = CoverResult::Provenance::Failed;
    out.cover.failure_reason = "matched vertex set exceeds tester query budget";
    out.cover.n = n_;
    return out;
  }
  for (uint32_t g = 0; g < groups_; g++) {
    if (d.classes[g] != GroupClass::Clean) continue;
    if (testers_[g].query(t)) d.classes[g] = GroupClass::Residual;
  }

  ContractedMultigraph cg;
  cg.num_groups = groups_;
  for (uint32_t i = 0; i + 1 < groups_; i++) {
    if (d.classes[i] != GroupClass::Clean) continue;
    for (uint32_t j = i + 1; j < groups_; j++) {
      if (d.classes[j] != GroupClass::Clean) continue;
      if (pair_mod_[edge_id(i, j, groups_)] != 0) cg.edges.emplace_back(i, j);
    }
  }
  d.contracted_edges = static_cast<uint32_t>(cg.edges.size());
  std::vector<uint32_t> matched_groups = greedy_group_cover(cg);
  d.matched_clean_groups = static_cast<uint32_t>(matched_groups.size());

  std::vector<uint8_t> bits(groups_, 0);
  for (uint32_t g = 0; g < groups_; g++) {
    if (d.classes[g] == GroupClass::Simple) {
      bits[g] = 1;
      d.simple_groups++;
    } else if (d.classes[g] == GroupClass::Residual) {
      bits[g] = 1;
      d.residual_groups++;
    } else {
      d.clean_groups++;
    }
  }
  for (uint32_t g : matched_groups) bits[g] = 1;
  seal(CoverResult::Provenance::GroupCover, std::move(bits));
  return out;
}

SpaceReport VcState::space_report(const CoverResult* cover) const {
  SpaceReport rep;
  {
    ByteWriter w;
    part_.serialize(w);
    rep.partition_bits = w.size() * 8;
  }
  {
    ByteWriter w;
    mos_.serialize(w);
    rep.mos_bits = w.size() * 8;
  }
  for (const auto& t : testers_) {
    ByteWriter w;
    t.serialize(w);
    rep.tester_bits += w.size() * 8;
  }
  rep.pair_counter_bits = uint64_t(std::max<uint32_t>(ceil_log2(c_), 1)) * pair_mod_.size();
  rep.internal_counter_bits = 64ull * groups_;
  if (cover) rep.output_bits = cover->encoding_bits();
  return rep;
}

void VcState::serialize(ByteWriter& out) const {
  out.u32(n_);
  out.u32(alpha_);
  uint64_t dbits;
  static_assert(sizeof(dbits) == sizeof(delta_));
  std::memcpy(&dbits, &delta_, sizeof(dbits));
  out.u64(dbits);
  out.u64(seed_);
  out.u32(a_);
  out.u32(b_);
  out.u32(c_);
  out.u32(groups_);
  part_.serialize(out);
  mos_.serialize(out);
  for (const auto& t : testers_) t.serialize(out);
  {
    BitWriter bw(out);
    uint32_t bits = std::max<uint32_t>(ceil_log2(c_), 1);
    for (uint16_t v : pair_mod_) bw.append(v, bits);
  }
  for (int64_t v : internal_) out.i64(v);
}

namespace {

// Derived driver shape; shared by solve_full and the space meter so the two
// can never disagree about what a run looks like.
struct DriverShape {
  uint32_t rho = 0;
  uint32_t alpha_p = 0;  // working approximation target
  uint64_t k_so = 0;     // small-opt promise; sketch enabled iff >= 2
  VcOptions run_opts;
};

DriverShape driver_shape(uint32_t n, uint32_t alpha, double delta, const SolveOptions& opts) {
  if (n < 2) throw std::invalid_argument("solve_full: need n >= 2");
  if (delta <= 0.0 || delta > 1.0) throw std::invalid_argument("solve_full: need 0 < delta <= 1");
  if (alpha < 1 || double(alpha) > std::pow(double(n), 1.0 - delta) + 1e-9)
    throw std::invalid_argument("solve_full: need 1 <= alpha <= n^(1-delta)");

  DriverShape sh;
  uint32_t log_n = std::max<uint32_t>(ceil_log2(n), 1);
  sh.rho = opts.runs ? opts.runs : static_cast<uint32_t>(std::ceil(40.0 / delta - 1e-9));
  sh.alpha_p = std::max<uint32_t>(1, alpha / 10);
  sh.k_so = ceil_div(n, uint64_t(alpha) * log_n * log_n);
  sh.run_opts.tester_reps =
      opts.tester_reps ? opts.tester_reps
                       : std::max<uint32_t>(
                             3, static_cast<uint32_t>(std::ceil(2.5 * std::log(double(n)))));
  sh.run_opts.mos_scale = opts.mos_scale;
  return sh;
}

}  // namespace

SpaceReport measure_driver_bits(uint32_t n, uint32_t alpha, double delta, uint64_t seed,
                                const SolveOptions& opts) {
  DriverShape sh = driver_shape(n, alpha, delta, opts);
  VcState run0(n, sh.alpha_p, delta, derive_seed(seed, 0x72756e, 0), sh.run_opts);
  SpaceReport rep = run0.space_report();
  if (sh.k_so >= 2) {
    SmallOptSketch so(n, static_cast<uint32_t>(sh.k_so), derive_seed(seed, 0x736f70));
    ByteWriter w;
    so.serialize(w);
    rep.small_opt_bits = w.size() * 8;
  }
  return rep;
}

SolveResult solve_full(const std::vector<StreamUpdate>& updates, uint32_t n, uint32_t alpha,
                       double delta, uint64_t seed, const SolveOptions& opts) {
  DriverShape shape = driver_shape(n, alpha, delta, opts);
  SolveResult res;
  uint32_t log_n = std::max<uint32_t>(ceil_log2(n), 1);
  uint32_t rho = shape.rho;
  uint32_t alpha_p = shape.alpha_p;
  const VcOptions& ro = shape.run_opts;
  std::vector<std::unique_ptr<VcState>> states;
  states.reserve(rho);
  for (uint32_t i = 0; i < rho; i++)
    states.push_back(
        std::make_unique<VcState>(n, alpha_p, delta, derive_seed(seed, 0x72756e, i), ro));

  uint64_t k_so = shape.k_so;
  std::unique_ptr<SmallOptSketch> so;
  if (k_so >= 2) {
    so = std::make_unique<SmallOptSketch>(n, static_cast<uint32_t>(k_so),
                                          derive_seed(seed, 0x736f70));
    res.small_opt_enabled = true;
  }

  for (const auto& up : updates) {
    for (auto& st : states) st->update(up);
    if (so) so->update(up);
  }

  res.space = states[0]->space_report();
  if (so) {
    ByteWriter w;
    so->serialize(w);
    res.space.small_opt_bits = w.size() * 8;
  }

  res.runs.reserve(rho);
  for (auto& st : states) {
    res.runs.push_back(st->finalize());
    st.reset();
  }

  if (so) res.small_opt = so->decode();
  if (res.small_opt.kind == SoDecode::Kind::Exact) {
    res.small_opt_used = true;
    res.cover.provenance = CoverResult::Provenance::SmallOptExact;
    res.cover.n = n;
    res.cover.implicit = false;
    res.cover.vertices = res.small_opt.cover;
  } else {
    // Prefer runs whose residual-group count fits the target budget
    // n / (alpha * log^2 n); among eligible runs, smallest cover wins.
    auto better = [&](uint32_t i, uint32_t j) {  // is run i better than run j
      return res.runs[i].cover.size() < res.runs[j].cover.size();
    };
    uint32_t best_pass = UINT32_MAX;
    uint32_t best_any = UINT32_MAX;
    for (uint32_t i = 0; i < rho; i++) {
      if (res.runs[i].cover.failed()) continue;
      if (best_any == UINT32_MAX || better(i, best_any)) best_any = i;
      bool pass = uint64_t(res.runs[i].diag.residual_groups) * alpha * log_n * log_n <= n;
      if (pass && (best_pass == UINT32_MAX || better(i, best_pass))) best_pass = i;
    }
    uint32_t pick = best_pass != UINT32_MAX ? best_pass : best_any;
    if (pick == UINT32_MAX) {
      res.cover.provenance = CoverResult::Provenance::Failed;
      res.cover.failure_reason = "all runs failed";
      res.cover.n = n;
    } else {
      res.selected_run = pick;
      res.cover = res.runs[pick].cover;
    }
  }
  res.space.output_bits = res.cover.encoding_bits();
  if (!opts.keep_run_details) res.runs.clear();
  return res;
}

}  // namespace vcs
