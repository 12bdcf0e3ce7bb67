// Command-line front end: stream generation, the full vertex-cover driver,
// space metering, sampler distribution checks, and the evaluation sweep.
// Exit codes: 0 success, 1 the solver or a sweep row reported failure,
// 2 bad input (malformed stream, unusable parameters, missing file).
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "vcs/generators.hpp"
#include "vcs/oracle.hpp"
#include "vcs/stream.hpp"
#include "vcs/sweep.hpp"
#include "vcs/vc_core.hpp"

using nlohmann::json;
using namespace vcs;

namespace {

const char* provenance_name(CoverResult::Provenance p) {
  switch (p) {
    case CoverResult::Provenance::MatchCase: return "match_case";
    case CoverResult::Provenance::GroupCover: return "group_cover";
    case CoverResult::Provenance::SmallOptExact: return "small_opt_exact";
    default: return "failed";
  }
}

const char* stream_error_kind(StreamError::Kind k) {
  switch (k) {
    case StreamError::Kind::DeleteAbsent: return "delete_absent";
    case StreamError::Kind::DuplicateInsert: return "duplicate_insert";
    case StreamError::Kind::OutOfRange: return "out_of_range";
    default: return "parse";
  }
}

void emit(const json& j, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw std::runtime_error("cannot open output file: " + out_path);
  out << j.dump(2) << "\n";
}

json space_json(const SpaceReport& rep) {
  return json{{"partition_bits", rep.partition_bits},
              {"mos_bits", rep.mos_bits},
              {"tester_bits", rep.tester_bits},
              {"pair_counter_bits", rep.pair_counter_bits},
              {"internal_counter_bits", rep.internal_counter_bits},
              {"small_opt_bits", rep.small_opt_bits},
              {"output_bits", rep.output_bits},
              {"state_total", rep.state_total()},
              {"total", rep.total()}};
}

struct GenArgs {
  std::string family = "gnp";
  GeneratorSpec spec;
  std::string out;
};

struct RunArgs {
  std::string input;
  uint32_t alpha = 2;
  double delta = 0.5;
  uint64_t seed = 1;
  SolveOptions opts;
  bool details = false;
  bool oracle = false;
  std::string cover_out;
  std::string out;
};

struct SpaceArgs {
  uint32_t n = 0;
  uint32_t alpha = 2;
  double delta = 0.5;
  uint64_t seed = 1;
  SolveOptions opts;
  std::string out;
};

struct DistArgs {
  std::string input;
  std::string family = "gnp";
  GeneratorSpec spec;
  std::string s_list;
  uint32_t samples = 2000;
  uint64_t seed = 1;
  std::string out;
};

struct SweepArgs {
  std::string out;
  std::string grid;
  bool skip_modwrap = false;
};

void add_generator_options(CLI::App* cmd, std::string& family, GeneratorSpec& spec) {
  cmd->add_option("--family", family,
                  "gnp | planted_cover | star | clique_plus_cliques | churn | perfect_matching")
      ->capture_default_str();
  cmd->add_option("--n", spec.n, "vertex count")->capture_default_str();
  cmd->add_option("--p", spec.p, "edge probability (gnp, churn)")->capture_default_str();
  cmd->add_option("--cover-size", spec.cover_size, "planted cover size")->capture_default_str();
  cmd->add_option("--hub", spec.hub, "star hub vertex")->capture_default_str();
  cmd->add_option("--big-clique", spec.big_clique, "big clique size (0 = n/2)")
      ->capture_default_str();
  cmd->add_option("--small-clique", spec.small_clique, "small clique size")
      ->capture_default_str();
  cmd->add_option("--deletion-fraction", spec.deletion_fraction,
                  "extra churn inserted then deleted, as a fraction of the final edges")
      ->capture_default_str();
  cmd->add_option("--gen-seed", spec.seed, "generator seed")->capture_default_str();
}

std::vector<Vertex> parse_vertex_list(const std::string& text, uint32_t n) {
  std::vector<Vertex> out;
  size_t pos = 0;
  while (pos < text.size()) {
    size_t comma = text.find(',', pos);
    if (comma == std::string::npos) comma = text.size();
    std::string tok = text.substr(pos, comma - pos);
    pos = comma + 1;
    if (tok.empty()) continue;
    unsigned long v = std::stoul(tok);
    if (v >= n) throw std::invalid_argument("vertex list entry out of range: " + tok);
    out.push_back(static_cast<Vertex>(v));
  }
  if (out.empty()) throw std::invalid_argument("vertex list is empty");
  return out;
}

FinalGraph load_graph(const std::string& input, const std::string& family, GeneratorSpec spec) {
  if (!input.empty()) {
    auto sf = read_stream_file(input);
    return validate_stream(sf.updates, sf.n);
  }
  spec.family = family_from_name(family);
  return generate_stream(spec).final_graph;
}

int do_gen(const GenArgs& args) {
  GeneratorSpec spec = args.spec;
  spec.family = family_from_name(args.family);
  auto gen = generate_stream(spec);
  write_stream_file(args.out, {spec.n, gen.updates});
  json j{{"family", family_name(spec.family)},
         {"n", spec.n},
         {"updates", gen.updates.size()},
         {"edges", gen.final_graph.edges.size()},
         {"out", args.out}};
  std::cout << j.dump(2) << "\n";
  return 0;
}

int do_run(const RunArgs& args) {
  auto sf = read_stream_file(args.input);
  validate_stream(sf.updates, sf.n);

  SolveOptions opts = args.opts;
  opts.keep_run_details = true;
  auto res = solve_full(sf.updates, sf.n, args.alpha, args.delta, args.seed, opts);

  json j{{"n", sf.n},
         {"alpha", args.alpha},
         {"delta", args.delta},
         {"seed", args.seed},
         {"updates", sf.updates.size()}};
  json cover{{"provenance", provenance_name(res.cover.provenance)},
             {"size", res.cover.size()},
             {"encoding", res.cover.implicit ? "implicit" : "explicit"},
             {"encoding_bits", res.cover.encoding_bits()}};
  if (res.cover.failed()) cover["failure_reason"] = res.cover.failure_reason;
  if (args.details && !res.cover.failed()) cover["vertices"] = res.cover.to_explicit();
  j["cover"] = cover;
  j["small_opt"] = json{{"enabled", res.small_opt_enabled}, {"used", res.small_opt_used}};
  if (res.selected_run != UINT32_MAX) j["selected_run"] = res.selected_run;

  if (args.details) {
    json runs = json::array();
    for (const auto& run : res.runs) {
      runs.push_back(json{{"provenance", provenance_name(run.cover.provenance)},
                          {"size", run.cover.size()},
                          {"easy_matching", run.diag.easy_matching},
                          {"easy_threshold", run.diag.easy_threshold},
                          {"simple_groups", run.diag.simple_groups},
                          {"residual_groups", run.diag.residual_groups},
                          {"clean_groups", run.diag.clean_groups},
                          {"matched_clean_groups", run.diag.matched_clean_groups},
                          {"contracted_edges", run.diag.contracted_edges}});
    }
    j["runs"] = runs;
  }

  uint32_t rho = opts.runs != 0
                     ? opts.runs
                     : static_cast<uint32_t>(std::ceil(40.0 / args.delta));
  json space = space_json(res.space);
  space["runs"] = rho;
  space["all_runs_total"] = rho * (res.space.state_total() - res.space.small_opt_bits) +
                            res.space.small_opt_bits + res.space.output_bits;
  j["space"] = space;

  if (args.oracle) {
    auto sol = exact_min_vc(validate_stream(sf.updates, sf.n));
    json o{{"opt", sol.size}};
    if (sol.size > 0 && !res.cover.failed())
      o["ratio"] = double(res.cover.size()) / double(sol.size);
    j["oracle"] = o;
  }

  if (!args.cover_out.empty() && !res.cover.failed()) {
    std::ofstream out(args.cover_out);
    if (!out) throw std::runtime_error("cannot open cover output file: " + args.cover_out);
    for (Vertex v : res.cover.to_explicit()) out << v << "\n";
  }

  emit(j, args.out);
  return res.cover.failed() ? 1 : 0;
}

int do_space(const SpaceArgs& args) {
  SolveOptions opts = args.opts;
  opts.keep_run_details = false;
  SpaceReport rep = measure_driver_bits(args.n, args.alpha, args.delta, args.seed, opts);
  uint32_t rho = opts.runs != 0
                     ? opts.runs
                     : static_cast<uint32_t>(std::ceil(40.0 / args.delta));
  json driver = space_json(rep);
  driver["runs"] = rho;
  driver["all_runs_total"] =
      rho * (rep.state_total() - rep.small_opt_bits) + rep.small_opt_bits;
  json j{{"n", args.n},
         {"alpha", args.alpha},
         {"delta", args.delta},
         {"driver", driver},
         {"single_run", space_json(measure_state_bits(args.n, args.alpha, args.delta, args.seed))}};
  emit(j, args.out);
  return 0;
}

int do_dist(const DistArgs& args) {
  auto g = load_graph(args.input, args.family, args.spec);
  auto s = parse_vertex_list(args.s_list, g.n);
  auto rep = ne_distribution_test(g, s, args.samples, args.seed);
  json marginal = json::object();
  for (auto& [v, p] : rep.empirical) marginal[std::to_string(v)] = p;
  json j{{"n", g.n},
         {"edges_in_graph", g.edges.size()},
         {"samples", rep.samples},
         {"edge_outputs", rep.edges},
         {"empties", rep.empties},
         {"fails", rep.fails},
         {"contract_violations", rep.wrong},
         {"tv_distance", rep.tv},
         {"marginal", marginal}};
  emit(j, args.out);
  return 0;
}

std::vector<SweepCell> load_grid(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open grid file: " + path);
  json j = json::parse(in);
  std::vector<SweepCell> cells;
  for (const auto& row : j) {
    SweepCell cell;
    cell.label = row.at("label").get<std::string>();
    cell.gspec.family = family_from_name(row.value("family", std::string("gnp")));
    cell.gspec.n = row.value("n", 64u);
    cell.gspec.p = row.value("p", 0.1);
    cell.gspec.cover_size = row.value("cover_size", 4u);
    cell.gspec.hub = row.value("hub", 0u);
    cell.gspec.big_clique = row.value("big_clique", 0u);
    cell.gspec.small_clique = row.value("small_clique", 3u);
    cell.gspec.deletion_fraction = row.value("deletion_fraction", 0.0);
    cell.gspec.seed = row.value("gen_seed", uint64_t{1});
    cell.alpha = row.value("alpha", 2u);
    cell.delta = row.value("delta", 0.5);
    cell.seeds = row.value("seeds", 3u);
    cell.seed0 = row.value("seed0", uint64_t{1});
    cell.check = row.value("check", std::string("solve"));
    cells.push_back(std::move(cell));
  }
  return cells;
}

int do_sweep(const SweepArgs& args) {
  auto cells = args.grid.empty() ? default_sweep_grid() : load_grid(args.grid);
  if (args.skip_modwrap)
    std::erase_if(cells, [](const SweepCell& c) { return c.check == "modwrap"; });
  if (cells.empty()) throw std::invalid_argument("sweep grid is empty");

  std::vector<SweepRowResult> rows;
  rows.reserve(cells.size());
  json failed_rows = json::array();
  for (const auto& cell : cells) {
    std::cerr << "sweep: " << cell.label << "\n";
    rows.push_back(run_sweep_cell(cell));
    if (!rows.back().pass) failed_rows.push_back(cell.label);
  }

  std::ofstream out(args.out);
  if (!out) throw std::runtime_error("cannot open output file: " + args.out);
  write_sweep_csv(out, rows);

  json j{{"rows", rows.size()},
         {"passed", rows.size() - failed_rows.size()},
         {"failed", failed_rows.size()},
         {"failed_rows", failed_rows},
         {"out", args.out}};
  std::cout << j.dump(2) << "\n";
  return failed_rows.empty() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"dynamic graph stream vertex cover toolkit"};
  app.require_subcommand(1);

  GenArgs gen_args;
  auto* gen = app.add_subcommand("gen", "generate a stream file");
  add_generator_options(gen, gen_args.family, gen_args.spec);
  gen->add_option("--out", gen_args.out, "stream file to write")->required();

  RunArgs run_args;
  auto* run = app.add_subcommand("run", "solve a stream file");
  run->add_option("--input", run_args.input, "stream file")->required();
  run->add_option("--alpha", run_args.alpha, "approximation target")->required();
  run->add_option("--delta", run_args.delta, "space/accuracy exponent")->capture_default_str();
  run->add_option("--seed", run_args.seed, "driver seed")->capture_default_str();
  run->add_option("--runs", run_args.opts.runs, "independent runs (0 = ceil(40/delta))")
      ->capture_default_str();
  run->add_option("--tester-reps", run_args.opts.tester_reps,
                  "tester repetitions per group (0 = ceil(2.5 ln n))")
      ->capture_default_str();
  run->add_option("--mos-scale", run_args.opts.mos_scale, "sampler-count multiplier")
      ->capture_default_str();
  run->add_flag("--details", run_args.details, "include per-run diagnostics and the vertex list");
  run->add_flag("--oracle", run_args.oracle, "compare against the exact optimum (small n only)");
  run->add_option("--cover-out", run_args.cover_out, "write the cover, one vertex per line");
  run->add_option("--out", run_args.out, "write the JSON result here instead of stdout");

  SpaceArgs space_args;
  auto* space = app.add_subcommand("space", "report serialized state sizes in bits");
  space->add_option("--n", space_args.n, "vertex count")->required();
  space->add_option("--alpha", space_args.alpha, "approximation target")->required();
  space->add_option("--delta", space_args.delta, "space/accuracy exponent")
      ->capture_default_str();
  space->add_option("--seed", space_args.seed, "driver seed")->capture_default_str();
  space->add_option("--runs", space_args.opts.runs, "independent runs (0 = ceil(40/delta))")
      ->capture_default_str();
  space->add_option("--tester-reps", space_args.opts.tester_reps,
                    "tester repetitions per group (0 = ceil(2.5 ln n))")
      ->capture_default_str();
  space->add_option("--mos-scale", space_args.opts.mos_scale, "sampler-count multiplier")
      ->capture_default_str();
  space->add_option("--out", space_args.out, "write the JSON result here instead of stdout");

  DistArgs dist_args;
  auto* dist = app.add_subcommand("dist-test", "empirical neighborhood-sampler distribution");
  dist->add_option("--input", dist_args.input, "stream file (overrides the generator options)");
  add_generator_options(dist, dist_args.family, dist_args.spec);
  dist->add_option("--s", dist_args.s_list, "comma-separated S vertices")->required();
  dist->add_option("--samples", dist_args.samples, "independent samplers to decode")
      ->capture_default_str();
  dist->add_option("--seed", dist_args.seed, "sampler seed root")->capture_default_str();
  dist->add_option("--out", dist_args.out, "write the JSON result here instead of stdout");

  SweepArgs sweep_args;
  auto* sweep = app.add_subcommand("sweep", "run an evaluation grid and write a CSV");
  sweep->add_option("--out", sweep_args.out, "CSV file to write")->required();
  sweep->add_option("--grid", sweep_args.grid, "JSON grid file (default: built-in grid)");
  sweep->add_flag("--skip-modwrap", sweep_args.skip_modwrap,
                  "drop the counter-wrap demonstration row");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (gen->parsed()) return do_gen(gen_args);
    if (run->parsed()) return do_run(run_args);
    if (space->parsed()) return do_space(space_args);
    if (dist->parsed()) return do_dist(dist_args);
    if (sweep->parsed()) return do_sweep(sweep_args);
  } catch (const StreamError& e) {
    json err{{"error",
              json{{"kind", stream_error_kind(e.kind)},
                   {"position", e.position},
                   {"message", e.what()}}}};
    std::cerr << err.dump(2) << "\n";
    return 2;
  } catch (const std::exception& e) {
    json err{{"error", json{{"kind", "invalid"}, {"message", e.what()}}}};
    std::cerr << err.dump(2) << "\n";
    return 2;
  }
  return 2;
}
