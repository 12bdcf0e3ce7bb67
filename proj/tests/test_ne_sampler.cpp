#include <map>
#include <vector>

#include "doctest.h"
#include "vcs/bytes.hpp"
#include "vcs/edge.hpp"
#include "vcs/ne_sampler.hpp"
#include "vcs/oracle.hpp"
#include "vcs/rng.hpp"
#include "vcs/sweep.hpp"

using namespace vcs;

namespace {

FinalGraph make_graph(uint32_t n, std::vector<std::pair<Vertex, Vertex>> edges) {
  FinalGraph g;
  g.n = n;
  for (auto [u, v] : edges) g.edges.push_back({std::min(u, v), std::max(u, v)});
  std::sort(g.edges.begin(), g.edges.end());
  return g;
}

std::vector<uint8_t> bytes_of(const NeighborhoodEdgeSampler& s) {
  ByteWriter w;
  s.serialize(w);
  return w.bytes();
}

}  // namespace

TEST_CASE("sampler certifies an empty neighborhood") {
  // No edges at all.
  NeighborhoodEdgeSampler s(8, {2, 3}, 11);
  CHECK(s.is_zero_state());
  CHECK(s.decode().kind == NeSample::Kind::Empty);

  // Edges exist but none touch S.
  NeighborhoodEdgeSampler t(8, {6, 7}, 12);
  t.update({0, 1, 1});
  t.update({1, 2, 1});
  CHECK(t.decode().kind == NeSample::Kind::Empty);

  // Insert then delete nets out to empty again.
  t.update({6, 0, 1});
  t.update({6, 0, -1});
  CHECK(t.decode().kind == NeSample::Kind::Empty);
}

TEST_CASE("single surviving edge is recovered exactly") {
  // Net vector after deletions has one S-incident edge; every successful
  // decode must return it.
  uint32_t hits = 0, tries = 200;
  for (uint32_t t = 0; t < tries; t++) {
    NeighborhoodEdgeSampler s(16, {3}, derive_seed(21, t));
    s.update({3, 7, 1});
    s.update({3, 9, 1});
    s.update({5, 9, 1});
    s.update({3, 9, -1});
    s.update({5, 9, -1});
    auto d = s.decode();
    REQUIRE(d.kind != NeSample::Kind::Empty);
    if (d.kind == NeSample::Kind::Fail) continue;
    CHECK(d.u == 3);
    CHECK(d.v == 7);
    hits++;
  }
  CHECK(hits >= tries * 9 / 10);
}

TEST_CASE("edge outputs satisfy the contract on small graphs") {
  // Path 0-1-2 with S = {1}: N(S) = {0, 2}, u is always 1.
  auto path = make_graph(4, {{0, 1}, {1, 2}});
  auto rep = ne_distribution_test(path, {1}, 4000, 31);
  CHECK(rep.wrong == 0);
  CHECK(rep.empties == 0);
  CHECK(rep.edges > rep.samples * 8 / 10);
  CHECK(rep.tv < 0.05);

  // Star, S = leaves: every sample's v is the hub.
  auto star = make_graph(8, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}, {0, 6}, {0, 7}});
  auto rep2 = ne_distribution_test(star, {1, 2, 3, 4, 5, 6, 7}, 1500, 32);
  CHECK(rep2.wrong == 0);
  CHECK(rep2.edges > 0);
  for (auto& [v, mass] : rep2.empirical)
    if (mass > 0) CHECK(v == 0);
}

TEST_CASE("v may land inside S when S spans an edge") {
  // Single edge 0-1 with S = {0, 1}: N(S) = {0, 1} and the v-marginal is
  // uniform over both, so outputs with v in S are required, not tolerated.
  auto g = make_graph(4, {{0, 1}});
  auto rep = ne_distribution_test(g, {0, 1}, 6000, 41);
  CHECK(rep.wrong == 0);
  REQUIRE(rep.empirical.count(0));
  REQUIRE(rep.empirical.count(1));
  CHECK(rep.empirical.at(0) == doctest::Approx(0.5).epsilon(0.12));
  CHECK(rep.empirical.at(1) == doctest::Approx(0.5).epsilon(0.12));
  CHECK(rep.tv < 0.06);
}

TEST_CASE("v-marginal is near uniform over N(S)") {
  // Deliberately skewed S-side degrees: vertex 9 sees three S members,
  // vertex 10 sees one. The v-marginal must stay uniform regardless.
  auto g = make_graph(12, {{0, 9}, {1, 9}, {2, 9}, {3, 10}, {0, 11}, {5, 6}});
  std::vector<Vertex> s = {0, 1, 2, 3};
  auto exact = ne_distribution(g, s);
  REQUIRE(exact.size() == 3);  // {9, 10, 11}
  auto rep = ne_distribution_test(g, s, 20000, 51);
  CHECK(rep.wrong == 0);
  CHECK(rep.fails < rep.samples / 10);
  CHECK(rep.tv < 0.05);
}

TEST_CASE("update_pow matches update byte for byte") {
  std::vector<Vertex> s = {1, 4, 5};
  NeighborhoodEdgeSampler a(16, s, 99);
  NeighborhoodEdgeSampler b(16, s, 99);
  uint64_t r = a.fingerprint_base();
  std::vector<uint64_t> rp(16);
  rp[0] = 1;
  for (uint32_t i = 1; i < 16; i++) rp[i] = Field::mul(rp[i - 1], r);
  auto rng = make_rng(7);
  for (int i = 0; i < 300; i++) {
    Vertex u = static_cast<Vertex>(rng() % 16);
    Vertex v = static_cast<Vertex>(rng() % 16);
    if (u == v) continue;
    StreamUpdate up{u, v, 1};
    a.update(up);
    b.update_pow(up, rp[u], rp[v]);
  }
  CHECK(bytes_of(a) == bytes_of(b));
  CHECK(a == b);
}

TEST_CASE("merge combines disjoint halves byte for byte") {
  std::vector<Vertex> s = {0, 2, 7};
  for (uint32_t t = 0; t < 100; t++) {
    uint64_t seed = derive_seed(61, t);
    NeighborhoodEdgeSampler whole(12, s, seed);
    NeighborhoodEdgeSampler left(12, s, seed);
    NeighborhoodEdgeSampler right(12, s, seed);
    auto rng = make_rng(derive_seed(62, t));
    for (int i = 0; i < 40; i++) {
      Vertex u = static_cast<Vertex>(rng() % 12);
      Vertex v = static_cast<Vertex>(rng() % 12);
      if (u == v) continue;
      StreamUpdate up{u, v, 1};
      whole.update(up);
      (i % 2 ? left : right).update(up);
    }
    CHECK(bytes_of(left) != bytes_of(whole));
    left.merge(right);
    CHECK(bytes_of(left) == bytes_of(whole));
  }
}

TEST_CASE("constructor and merge reject bad arguments") {
  CHECK_THROWS_AS(NeighborhoodEdgeSampler(1, {0}, 5), std::invalid_argument);
  CHECK_THROWS_AS(NeighborhoodEdgeSampler(8, {9}, 5), std::invalid_argument);
  NeighborhoodEdgeSampler a(8, {1}, 5);
  NeighborhoodEdgeSampler b(8, {1}, 6);
  CHECK_THROWS_AS(a.merge(b), std::invalid_argument);
  CHECK_THROWS_AS(a.update({0, 8, 1}), std::invalid_argument);
}

TEST_CASE("membership mask and accessors") {
  NeighborhoodEdgeSampler s(70, {0, 63, 64, 69}, 5);
  CHECK(s.n() == 70);
  CHECK(s.cascades() == NeOptions{}.cascades);
  CHECK(s.in_s(0));
  CHECK(s.in_s(63));
  CHECK(s.in_s(64));
  CHECK(s.in_s(69));
  CHECK(!s.in_s(1));
  CHECK(!s.in_s(65));
  CHECK(s.fingerprint_base() != 0);
}

TEST_CASE("fixed fingerprint base is honored") {
  NeOptions opts;
  opts.fixed_r = 424242;
  NeighborhoodEdgeSampler s(8, {1}, 5, opts);
  CHECK(s.fingerprint_base() == 424242);
}
