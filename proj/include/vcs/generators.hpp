#pragma once
#include <cstdint>
#include <string>
#include <vector>

#include "vcs/edge.hpp"

namespace vcs {

enum class Family {
  Gnp,              // each pair independently with probability p
  PlantedCover,     // edges only incident to a random cover of cover_size vertices
  Star,             // hub adjacent to every other vertex
  CliquePlusCliques,  // one big clique plus disjoint small cliques
  Churn,            // gnp base with delete/reinsert cycles on part of it
  PerfectMatching,  // random pairing of all vertices (n even; odd leaves one out)
};

struct GeneratorSpec {
  Family family = Family::Gnp;
  uint32_t n = 16;
  double p = 0.1;            // Gnp / PlantedCover edge probability
  uint32_t cover_size = 4;   // PlantedCover
  uint32_t hub = 0;          // Star
  uint32_t big_clique = 0;   // CliquePlusCliques; 0 means n/4
  uint32_t small_clique = 3; // CliquePlusCliques
  double deletion_fraction = 0.0;  // fraction of inserted edges later deleted
  uint64_t seed = 1;
};

struct GeneratedStream {
  std::vector<StreamUpdate> updates;
  FinalGraph final_graph;
};

Family family_from_name(const std::string& name);
std::string family_name(Family f);

// Emits all inserts (shuffled), then deletes of a seeded random extra edge
// set, so the stream is valid by construction and the surviving graph is
// exactly the family's target edge set. Churn additionally cycles part of
// the target set through delete/reinsert.
GeneratedStream generate_stream(const GeneratorSpec& spec);

}  // namespace vcs
