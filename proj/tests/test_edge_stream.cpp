#include <sstream>

#include "doctest.h"
#include "vcs/stream.hpp"

using namespace vcs;

TEST_CASE("edge_id is a bijection onto [0, C(n,2))") {
  for (uint32_t n : {2u, 3u, 7u, 16u, 33u}) {
    uint64_t next = 0;
    for (Vertex u = 0; u < n; u++) {
      for (Vertex v = u + 1; v < n; v++) {
        EdgeId id = edge_id(u, v, n);
        CHECK(id == next++);
        auto [ru, rv] = edge_from_id(id, n);
        CHECK(ru == u);
        CHECK(rv == v);
      }
    }
    CHECK(next == pair_count(n));
  }
  CHECK(edge_id(3, 1, 16) == edge_id(1, 3, 16));  // order-insensitive
  CHECK_THROWS_AS(edge_id(2, 2, 16), std::invalid_argument);
  CHECK_THROWS_AS(edge_id(0, 16, 16), std::invalid_argument);
  CHECK_THROWS_AS(edge_from_id(pair_count(16), 16), std::invalid_argument);
}

TEST_CASE("edge_from_id survives large ids") {
  uint32_t n = 100000;
  for (EdgeId id : {uint64_t(0), pair_count(n) / 2, pair_count(n) - 1}) {
    auto [u, v] = edge_from_id(id, n);
    CHECK(edge_id(u, v, n) == id);
  }
}

TEST_CASE("validate_stream tracks multiplicities") {
  std::vector<StreamUpdate> ups = {{0, 1, +1}, {1, 2, +1}, {0, 1, -1}, {0, 1, +1}};
  FinalGraph g = validate_stream(ups, 4);
  CHECK(g.edges == std::vector<std::pair<Vertex, Vertex>>{{0, 1}, {1, 2}});
  CHECK(g.has_edge(2, 1));
  CHECK(!g.has_edge(0, 2));
}

TEST_CASE("validate_stream rejects bad streams with positions") {
  auto expect = [](std::vector<StreamUpdate> ups, StreamError::Kind kind, size_t pos) {
    try {
      validate_stream(ups, 8);
      FAIL("expected StreamError");
    } catch (const StreamError& e) {
      CHECK(e.kind == kind);
      CHECK(e.position == pos);
    }
  };
  expect({{0, 1, -1}}, StreamError::Kind::DeleteAbsent, 1);
  expect({{0, 1, +1}, {0, 1, +1}}, StreamError::Kind::DuplicateInsert, 2);
  expect({{0, 1, +1}, {1, 0, -1}, {0, 1, -1}}, StreamError::Kind::DeleteAbsent, 3);
  expect({{0, 8, +1}}, StreamError::Kind::OutOfRange, 1);
  expect({{3, 3, +1}}, StreamError::Kind::OutOfRange, 1);
}

TEST_CASE("stream file roundtrip") {
  StreamFile sf;
  sf.n = 6;
  sf.updates = {{0, 5, +1}, {2, 3, +1}, {0, 5, -1}};
  std::stringstream ss;
  write_stream(ss, sf);
  StreamFile back = read_stream(ss);
  CHECK(back.n == sf.n);
  REQUIRE(back.updates.size() == sf.updates.size());
  for (size_t i = 0; i < sf.updates.size(); i++) {
    CHECK(back.updates[i].u == sf.updates[i].u);
    CHECK(back.updates[i].v == sf.updates[i].v);
    CHECK(back.updates[i].delta == sf.updates[i].delta);
  }
}

TEST_CASE("stream parser reports bad lines") {
  std::stringstream ss("n 4\n+ 0 1\n* 1 2\n");
  try {
    read_stream(ss);
    FAIL("expected StreamError");
  } catch (const StreamError& e) {
    CHECK(e.kind == StreamError::Kind::Parse);
    CHECK(e.position == 3);
  }
}

TEST_CASE("matching helpers") {
  Matching m{6, {{0, 1}, {2, 3}}};
  CHECK(m.is_vertex_disjoint());
  auto mask = m.matched_mask();
  CHECK(mask == std::vector<bool>{true, true, true, true, false, false});
  Matching bad{6, {{0, 1}, {1, 2}}};
  CHECK(!bad.is_vertex_disjoint());
}
