#pragma once
#include <cstdint>
#include <map>
#include <vector>

#include "vcs/edge.hpp"

namespace vcs {

struct VcSolution {
  uint32_t size = 0;
  std::vector<Vertex> cover;  // sorted
};

// Exact minimum vertex cover via branch-and-bound maximum independent set
// (clique search on the complement with a greedy-coloring bound). node_budget
// caps branch expansions; exceeding it throws rather than returning a
// non-optimal answer. Practical to n = 256 on dense random graphs.
VcSolution exact_min_vc(const FinalGraph& g, uint64_t node_budget = 200'000'000);

// True iff every edge has at least one endpoint in cover.
bool verify_cover(const FinalGraph& g, const std::vector<Vertex>& cover);

struct ResidualSubgraph {
  FinalGraph graph;  // same vertex ids, only edges with both endpoints unmatched
  uint64_t edge_count = 0;
};

// Induced subgraph on the vertices left unmatched by m. The matching must be
// vertex-disjoint and consist of edges of g.
ResidualSubgraph residual_subgraph(const FinalGraph& g, const Matching& m);

// Exact target law of neighborhood edge sampling: uniform over
// N(S) = { v : some neighbor of v lies in S }. Empty map when N(S) is empty.
std::map<Vertex, double> ne_distribution(const FinalGraph& g, const std::vector<Vertex>& s);

// Exact maximum matching size by branching; diagnostics only, guarded to n <= 24.
uint32_t exact_max_matching(const FinalGraph& g);

}  // namespace vcs
