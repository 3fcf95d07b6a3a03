#include <doctest.h>

#include <set>

#include "factorpack/error.hpp"
#include "factorpack/matching.hpp"
#include "factorpack/oracle.hpp"
#include "support.hpp"

using namespace factorpack;

namespace {

// Restates the certificate conditions directly, without the library checker.
bool certificate_sound(const SimpleGraph& g, const OddCycleCertificate& cert) {
  const Matching& m = cert.matching;
  for (const Edge& e : m.edges()) {
    if (!g.has_edge(e)) return false;
  }
  std::set<Vertex> keys;
  std::set<Vertex> on_cycles;
  for (const auto& [x, cycle] : cert.cycles) {
    keys.insert(x);
    const std::size_t len = cycle.size();
    if (len < 3 || len % 2 == 0 || cycle.front() != x || m.covers(x)) return false;
    for (std::size_t i = 0; i < len; ++i) {
      if (!on_cycles.insert(cycle[i]).second) return false;
      if (!g.has_edge(Edge(cycle[i], cycle[(i + 1) % len]))) return false;
    }
    for (std::size_t i = 1; i < len; i += 2) {
      if (m.mate(cycle[i]) != cycle[i + 1]) return false;
    }
  }
  const auto uncovered = m.uncovered();
  return keys == std::set<Vertex>(uncovered.begin(), uncovered.end());
}

}  // namespace

TEST_CASE("toggling alternating paths") {
  Matching m(3);
  m.add(Edge(1, 2));
  SUBCASE("empty path is the identity") {
    CHECK(toggle_alternating_path(m, {}) == m);
  }
  SUBCASE("a-b-c moves the hole from a to c") {
    const Vertex path[] = {0, 1, 2};
    const auto out = toggle_alternating_path(m, path);
    CHECK(out.contains(Edge(0, 1)));
    CHECK_FALSE(out.covers(2));
    CHECK(out.size() == 1);
  }
  SUBCASE("odd edge count is rejected") {
    const Vertex path[] = {0, 1};
    try {
      toggle_alternating_path(m, path);
      FAIL("expected OddLengthPath");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::OddLengthPath);
    }
  }
  SUBCASE("path starting at a covered vertex is rejected") {
    const Vertex path[] = {1, 2, 0};
    CHECK_THROWS_AS(toggle_alternating_path(m, path), Error);
  }
}

TEST_CASE("toggling four edges around C5 keeps the matching size") {
  auto m = Matching::from_edges(5, std::vector<Edge>{Edge(1, 2), Edge(3, 4)});
  const Vertex path[] = {0, 1, 2, 3, 4};
  const auto out = toggle_alternating_path(m, path);
  CHECK(out.size() == 2);
  CHECK(out.uncovered() == std::vector<Vertex>{4});
  const auto c5 = testing::cycle_graph(5);
  for (const Edge& e : out.edges()) CHECK(c5.has_edge(e));
}

TEST_CASE("maximum matching examples") {
  CHECK(maximum_matching(testing::cycle_graph(4)).size() == 2);
  CHECK(maximum_matching(testing::complete_graph(3)).size() == 1);
  const auto triangles = testing::disjoint_union({testing::complete_graph(3), testing::complete_graph(3)});
  CHECK(maximum_matching(triangles).size() == 2);
  CHECK(bf_max_matching(triangles).size == 2);
  CHECK(maximum_matching(testing::petersen_graph()).size() == 5);
}

TEST_CASE("maximum matching rejects an initial matching outside the graph") {
  const auto m = Matching::from_edges(4, std::vector<Edge>{Edge(0, 2)});
  try {
    maximum_matching(testing::cycle_graph(4), m);
    FAIL("expected InvalidInitial");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InvalidInitial);
  }
}

TEST_CASE("maximum matching agrees with brute force on random graphs") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 400; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 11);
    const int density = 1 + static_cast<int>(rng() % 5);
    SimpleGraph g(n);
    for (const Edge& e : testing::complete_graph(n).edges()) {
      if (static_cast<int>(rng() % 10) < density) g.add_edge(e);
    }
    const auto brute = bf_max_matching(g);
    Matching seed(n);
    for (const Edge& e : brute.matching.edges()) {
      if (rng() % 3 == 0) seed.add(e);
    }
    const auto fast = maximum_matching(g, seed);
    REQUIRE(fast.size() == brute.size);
    for (const Edge& e : fast.edges()) CHECK(g.has_edge(e));
  }
}

TEST_CASE("odd cycle certificate examples") {
  SUBCASE("C4 is perfectly matched") {
    const auto cert = lemma_odd_certificate(testing::cycle_graph(4));
    CHECK(cert.matching.is_perfect());
    CHECK(cert.cycles.empty());
  }
  SUBCASE("triangle") {
    const auto g = testing::complete_graph(3);
    const auto cert = lemma_odd_certificate(g);
    CHECK(cert.matching.size() == 1);
    REQUIRE(cert.cycles.size() == 1);
    CHECK(cert.cycles.begin()->second.size() == 3);
    CHECK(certificate_sound(g, cert));
  }
  SUBCASE("two disjoint triangles") {
    const auto g = testing::disjoint_union({testing::complete_graph(3), testing::complete_graph(3)});
    const auto cert = lemma_odd_certificate(g);
    CHECK(cert.matching.size() == 2);
    REQUIRE(cert.cycles.size() == 2);
    std::set<Vertex> sides;
    for (const auto& [x, cycle] : cert.cycles) sides.insert(x < 3 ? 0 : 1);
    CHECK(sides.size() == 2);
    CHECK(certificate_sound(g, cert));
    CHECK(check_odd_cycle_certificate(g, cert).empty());
  }
}

TEST_CASE("odd cycle certificate needs a regular graph of positive degree") {
  SimpleGraph path(3);
  path.add_edge(Edge(0, 1));
  path.add_edge(Edge(1, 2));
  CHECK_THROWS_AS(lemma_odd_certificate(path), Error);
  CHECK_THROWS_AS(lemma_odd_certificate(SimpleGraph(4)), Error);
}

TEST_CASE("odd cycle certificates on random regular graphs") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 300; ++trial) {
    const int d = 2 + static_cast<int>(rng() % 4);
    int n = d + 1 + static_cast<int>(rng() % (14 - d));
    if (n * d % 2 != 0) ++n;
    const auto g = testing::random_regular(n, d, rng);
    const auto cert = lemma_odd_certificate(g);
    CAPTURE(n);
    CAPTURE(d);
    REQUIRE(cert.matching.size() == bf_max_matching(g).size);
    CHECK(certificate_sound(g, cert));
    CHECK(check_odd_cycle_certificate(g, cert).empty());
    CHECK(cert.matching.uncovered().size() % 2 == static_cast<std::size_t>(n % 2));
  }
}

TEST_CASE("library certificate checker flags a broken alternation") {
  const auto g = testing::cycle_graph(5);
  auto cert = lemma_odd_certificate(g);
  REQUIRE(cert.cycles.size() == 1);
  auto& cycle = cert.cycles.begin()->second;
  std::swap(cycle[1], cycle[2]);
  CHECK_FALSE(check_odd_cycle_certificate(g, cert).empty());
  CHECK_FALSE(certificate_sound(g, cert));
}
