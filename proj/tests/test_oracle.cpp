#include <doctest.h>

#include <functional>
#include <set>

#include "factorpack/error.hpp"
#include "factorpack/factorize.hpp"
#include "factorpack/matching.hpp"
#include "factorpack/oracle.hpp"
#include "factorpack/realize.hpp"
#include "support.hpp"

using namespace factorpack;

namespace {

void check_disjoint_perfect(const SimpleGraph& g, const std::vector<Matching>& ms) {
  std::set<Edge> used;
  for (const auto& m : ms) {
    CHECK(m.is_perfect());
    for (const Edge& e : m.edges()) {
      CHECK(g.has_edge(e));
      CHECK(used.insert(e).second);
    }
  }
}

bool has_violation(const VerifyReport& report, const std::string& kind) {
  return std::any_of(report.violations.begin(), report.violations.end(),
                     [&](const Violation& v) { return v.kind == kind; });
}

}  // namespace

TEST_CASE("brute-force maximum matching") {
  CHECK(bf_max_matching(testing::complete_graph(3)).size == 1);
  CHECK(bf_max_matching(testing::cycle_graph(6)).size == 3);
  const auto petersen = testing::petersen_graph();
  const auto brute = bf_max_matching(petersen);
  CHECK(brute.size == 5);
  CHECK(brute.matching.size() == 5);
  CHECK(maximum_matching(petersen).size() == brute.size);
  CHECK(bf_max_matching(SimpleGraph(1)).size == 0);
}

TEST_CASE("brute-force searches report an exhausted budget") {
  try {
    bf_max_matching(testing::complete_graph(12), 10);
    FAIL("expected BudgetExceeded");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::BudgetExceeded);
  }
  CHECK_THROWS_AS(bf_disjoint_one_factors(testing::complete_graph(12), 11, 10), Error);
}

TEST_CASE("brute-force disjoint one-factors") {
  const auto k4 = testing::complete_graph(4);
  const auto k4_factors = bf_disjoint_one_factors(k4, 3);
  REQUIRE(k4_factors.has_value());
  CHECK(k4_factors->size() == 3);
  check_disjoint_perfect(k4, *k4_factors);

  const auto c6 = testing::cycle_graph(6);
  const auto c6_factors = bf_disjoint_one_factors(c6, 2);
  REQUIRE(c6_factors.has_value());
  check_disjoint_perfect(c6, *c6_factors);
  CHECK_FALSE(bf_disjoint_one_factors(c6, 3).has_value());

  const auto triangles = testing::disjoint_union({testing::complete_graph(3), testing::complete_graph(3)});
  CHECK_FALSE(bf_disjoint_one_factors(triangles, 1).has_value());

  const auto k6 = testing::complete_graph(6);
  const auto k6_factors = bf_disjoint_one_factors(k6, 5);
  REQUIRE(k6_factors.has_value());
  check_disjoint_perfect(k6, *k6_factors);

  // Two disjoint perfect matchings would leave a third and 3-edge-color it.
  CHECK(bf_disjoint_one_factors(testing::petersen_graph(), 1).has_value());
  CHECK_FALSE(bf_disjoint_one_factors(testing::petersen_graph(), 2).has_value());
}

TEST_CASE("conjecture search") {
  SUBCASE("single edge") {
    const auto w = bf_conjecture_search(DegreeSequence({1, 1}), 1);
    REQUIRE(w.has_value());
    CHECK(w->realization.edges() == std::vector<Edge>{Edge(0, 1)});
    CHECK(w->one_factors.size() == 1);
  }
  SUBCASE("C4") {
    const auto w = bf_conjecture_search(DegreeSequence({2, 2, 2, 2}), 2);
    REQUIRE(w.has_value());
    CHECK(w->realization.regular_degree() == 2);
    check_disjoint_perfect(w->realization, w->one_factors);
  }
  SUBCASE("six vertices of degree two need the hexagon") {
    const auto w = bf_conjecture_search(DegreeSequence({2, 2, 2, 2, 2, 2}), 2);
    REQUIRE(w.has_value());
    check_disjoint_perfect(w->realization, w->one_factors);
    CHECK(lemma_odd_certificate(w->realization).matching.is_perfect());
  }
}

TEST_CASE("graphic sequence enumeration") {
  auto as_lists = [](const std::vector<DegreeSequence>& seqs) {
    std::vector<std::vector<int>> out;
    for (const auto& s : seqs) out.push_back(s.original());
    return out;
  };
  CHECK(as_lists(enumerate_graphic(2, 1)) == std::vector<std::vector<int>>{{0, 0}, {1, 1}});
  CHECK(as_lists(enumerate_graphic(3, 2)) ==
        std::vector<std::vector<int>>{{0, 0, 0}, {1, 1, 0}, {2, 1, 1}, {2, 2, 2}});
  const auto four = as_lists(enumerate_graphic(4, 3));
  CHECK(std::find(four.begin(), four.end(), std::vector<int>{3, 3, 3, 3}) != four.end());
  CHECK(std::find(four.begin(), four.end(), std::vector<int>{3, 3, 1, 1}) == four.end());

  // Count distinct sorted degree lists over all 1024 labelled graphs on 5 vertices.
  const auto pairs = testing::complete_graph(5).edges();
  std::set<std::vector<int>> realized;
  for (std::uint32_t mask = 0; mask < (1u << pairs.size()); ++mask) {
    std::vector<int> deg(5, 0);
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      if (mask >> i & 1u) {
        ++deg[static_cast<std::size_t>(pairs[i].u)];
        ++deg[static_cast<std::size_t>(pairs[i].v)];
      }
    }
    std::sort(deg.begin(), deg.end(), std::greater<>());
    realized.insert(deg);
  }
  CHECK(enumerate_graphic(5, 4).size() == realized.size());
}

TEST_CASE("reduction test agrees with Erdos-Gallai") {
  for (int n = 1; n <= 8; ++n) {
    std::vector<int> seq(static_cast<std::size_t>(n));
    std::function<void(int, int)> walk = [&](int pos, int cap) {
      if (pos == n) {
        REQUIRE(graphic_by_reduction(seq) == erdos_gallai_graphic(seq));
        return;
      }
      for (int d = 0; d <= cap; ++d) {
        seq[static_cast<std::size_t>(pos)] = d;
        walk(pos + 1, d);
      }
    };
    walk(0, n);
  }
}

TEST_CASE("certificate verification") {
  const DegreeSequence pi({5, 5, 5, 5, 5, 5});
  const auto good = four_ones(pi, 5, 0);
  const auto report = verify_certificate(pi, 5, good);
  CHECK(report.pass);
  CHECK(report.class_sizes.at("one:0") == 3);
  CHECK(report.class_sizes.at("residual") == 3);

  SUBCASE("a missing matching edge uncovers its ends") {
    auto bad = good;
    const Edge dropped = bad.one_factors[1].back();
    bad.one_factors[1].pop_back();
    bad.black_edges.push_back(dropped);
    const auto r = verify_certificate(pi, 5, bad);
    CHECK_FALSE(r.pass);
    REQUIRE(has_violation(r, "NotPerfectMatching"));
    const auto& v = *std::find_if(r.violations.begin(), r.violations.end(),
                                  [](const Violation& x) { return x.kind == "NotPerfectMatching"; });
    CHECK(v.vertices == std::vector<Vertex>{dropped.u, dropped.v});
  }
  SUBCASE("two classes sharing an edge") {
    auto bad = good;
    bad.one_factors[1] = bad.one_factors[0];
    const auto r = verify_certificate(pi, 5, bad);
    REQUIRE(has_violation(r, "ClassOverlap"));
    const auto& v = *std::find_if(r.violations.begin(), r.violations.end(),
                                  [](const Violation& x) { return x.kind == "ClassOverlap"; });
    CHECK(v.edges.size() == 1);
  }
  SUBCASE("wrong mode count") {
    auto bad = good;
    bad.mode = CertificateMode::HalfK;
    CHECK(has_violation(verify_certificate(pi, 5, bad), "CountMismatch"));
  }
  SUBCASE("wrong request") {
    CHECK(has_violation(verify_certificate(DegreeSequence({5, 5, 5, 5, 5, 4}), 5, good), "HeaderMismatch"));
    CHECK(has_violation(verify_certificate(pi, 4, good), "HeaderMismatch"));
  }
  SUBCASE("degrees off pi") {
    auto bad = good;
    bad.residual->edges.pop_back();
    const auto r = verify_certificate(pi, 5, bad);
    CHECK(has_violation(r, "DegreeMismatch"));
    CHECK(has_violation(r, "ResidualNotRegular"));
  }
  SUBCASE("out of range edge") {
    auto bad = good;
    bad.black_edges.push_back(Edge(2, 9));
    CHECK(has_violation(verify_certificate(pi, 5, bad), "InvalidEdge"));
  }
}
