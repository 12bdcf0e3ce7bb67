#include "vcs/generators.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

#include "vcs/rng.hpp"

namespace vcs {

Family family_from_name(const std::string& name) {
  if (name == "gnp") return Family::Gnp;
  if (name == "planted_cover") return Family::PlantedCover;
  if (name == "star") return Family::Star;
  if (name == "clique_plus_cliques") return Family::CliquePlusCliques;
  if (name == "churn") return Family::Churn;
  if (name == "perfect_matching") return Family::PerfectMatching;
  throw std::invalid_argument("unknown family: " + name);
}

std::string family_name(Family f) {
  switch (f) {
    case Family::Gnp: return "gnp";
    case Family::PlantedCover: return "planted_cover";
    case Family::Star: return "star";
    case Family::CliquePlusCliques: return "clique_plus_cliques";
    case Family::Churn: return "churn";
    case Family::PerfectMatching: return "perfect_matching";
  }
  return "?";
}

namespace {

// Target edge set of the family, before any churn decoration.
std::vector<EdgeId> family_edges(const GeneratorSpec& spec, std::mt19937_64& rng) {
  const uint32_t n = spec.n;
  std::vector<EdgeId> edges;
  std::bernoulli_distribution coin(std::clamp(spec.p, 0.0, 1.0));
  switch (spec.family) {
    case Family::Gnp:
    case Family::Churn: {
      for (Vertex u = 0; u < n; u++)
        for (Vertex v = u + 1; v < n; v++)
          if (coin(rng)) edges.push_back(edge_id(u, v, n));
      break;
    }
    case Family::PlantedCover: {
      std::vector<Vertex> perm(n);
      std::iota(perm.begin(), perm.end(), 0);
      std::shuffle(perm.begin(), perm.end(), rng);
      uint32_t q = std::min(spec.cover_size, n);
      std::vector<bool> in_cover(n, false);
      for (uint32_t i = 0; i < q; i++) in_cover[perm[i]] = true;
      for (Vertex u = 0; u < n; u++)
        for (Vertex v = u + 1; v < n; v++)
          if ((in_cover[u] || in_cover[v]) && coin(rng)) edges.push_back(edge_id(u, v, n));
      break;
    }
    case Family::Star: {
      Vertex hub = spec.hub % std::max<uint32_t>(n, 1);
      for (Vertex v = 0; v < n; v++)
        if (v != hub) edges.push_back(edge_id(hub, v, n));
      break;
    }
    case Family::CliquePlusCliques: {
      uint32_t q = spec.big_clique ? std::min(spec.big_clique, n) : std::max<uint32_t>(n / 4, 2);
      for (Vertex u = 0; u < q; u++)
        for (Vertex v = u + 1; v < q; v++) edges.push_back(edge_id(u, v, n));
      uint32_t r = std::max<uint32_t>(spec.small_clique, 2);
      for (Vertex base = q; base + 1 < n; base += r) {
        Vertex end = std::min<uint64_t>(base + r, n);
        for (Vertex u = base; u < end; u++)
          for (Vertex v = u + 1; v < end; v++) edges.push_back(edge_id(u, v, n));
      }
      break;
    }
    case Family::PerfectMatching: {
      std::vector<Vertex> perm(n);
      std::iota(perm.begin(), perm.end(), 0);
      std::shuffle(perm.begin(), perm.end(), rng);
      for (uint32_t i = 0; i + 1 < n; i += 2)
        edges.push_back(edge_id(perm[i], perm[i + 1], n));
      break;
    }
  }
  return edges;
}

}  // namespace

GeneratedStream generate_stream(const GeneratorSpec& spec) {
  if (spec.n < 2) throw std::invalid_argument("generate_stream: need n >= 2");
  if (spec.deletion_fraction < 0 || spec.deletion_fraction >= 1)
    throw std::invalid_argument("generate_stream: deletion_fraction in [0,1)");
  auto rng = make_rng(derive_seed(spec.seed, 0xfeed));

  std::vector<EdgeId> target = family_edges(spec, rng);
  std::unordered_set<EdgeId> in_target(target.begin(), target.end());

  // Extra edges inserted then deleted, sized so deletes make up the requested
  // fraction of all inserted edges.
  uint64_t m = pair_count(spec.n);
  double f = spec.deletion_fraction;
  uint64_t want_extra = static_cast<uint64_t>(f / (1.0 - f) * static_cast<double>(target.size()));
  want_extra = std::min(want_extra, m - target.size());
  std::vector<EdgeId> extra;
  extra.reserve(want_extra);
  std::uniform_int_distribution<uint64_t> pick(0, m - 1);
  std::unordered_set<EdgeId> used = in_target;
  while (extra.size() < want_extra) {
    EdgeId id = pick(rng);
    if (used.insert(id).second) extra.push_back(id);
  }

  GeneratedStream out;
  auto push = [&](EdgeId id, int8_t delta) {
    auto [u, v] = edge_from_id(id, spec.n);
    out.updates.push_back({u, v, delta});
  };

  std::vector<EdgeId> inserts = target;
  inserts.insert(inserts.end(), extra.begin(), extra.end());
  std::shuffle(inserts.begin(), inserts.end(), rng);
  for (EdgeId id : inserts) push(id, 1);

  std::shuffle(extra.begin(), extra.end(), rng);
  for (EdgeId id : extra) push(id, -1);

  if (spec.family == Family::Churn && !target.empty()) {
    // Delete/reinsert a random half of the target so surviving edges have
    // non-trivial update histories.
    std::vector<EdgeId> cycled = target;
    std::shuffle(cycled.begin(), cycled.end(), rng);
    cycled.resize(cycled.size() / 2);
    for (EdgeId id : cycled) push(id, -1);
    std::shuffle(cycled.begin(), cycled.end(), rng);
    for (EdgeId id : cycled) push(id, 1);
  }

  out.final_graph.n = spec.n;
  out.final_graph.edges.reserve(target.size());
  for (EdgeId id : target) out.final_graph.edges.push_back(edge_from_id(id, spec.n));
  std::sort(out.final_graph.edges.begin(), out.final_graph.edges.end());
  return out;
}

}  // namespace vcs
