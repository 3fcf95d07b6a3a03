#include <doctest.h>

#include "factorpack/error.hpp"
#include "factorpack/switch.hpp"
#include "support.hpp"

using namespace factorpack;

namespace {

constexpr Vertex U = 0, V = 1, W = 2, T = 3;

ColoredRealization square_instance() {
  const Color c = Color::one_factor(0);
  return testing::make_filled(4,
                              {{Edge(U, W), Color::white()},
                               {Edge(W, V), c},
                               {Edge(U, T), c},
                               {Edge(T, V), Color::white()},
                               {Edge(U, V), Color::black()},
                               {Edge(W, T), Color::black()}},
                              {{c, 1}});
}

bool connected(const SimpleGraph& g) {
  std::vector<char> seen(static_cast<std::size_t>(g.n()), 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  while (!stack.empty()) {
    const Vertex x = stack.back();
    stack.pop_back();
    for (Vertex y : g.neighbors(x)) {
      if (!seen[static_cast<std::size_t>(y)]++) stack.push_back(y);
    }
  }
  return std::all_of(seen.begin(), seen.end(), [](char s) { return s != 0; });
}

}  // namespace

TEST_CASE("two-link white chain on four vertices") {
  auto r = square_instance();
  const auto before = r;
  const auto report = multi_switch(r, U, V, W, SwitchMode::White);
  REQUIRE(report.length() == 2);
  CHECK(report.chain[1].x == Edge(U, T));
  CHECK(report.chain[1].y == Edge(T, V));
  CHECK(report.swapped == std::vector<std::size_t>{0, 1});
  CHECK(r.color(U, W) == Color::one_factor(0));
  CHECK(r.color(W, V) == Color::white());
  CHECK(r.color(U, T) == Color::white());
  CHECK(r.color(T, V) == Color::one_factor(0));
  CHECK(testing::color_table(r) == testing::color_table(before));
  CHECK(testing::multi_switch_violations(before, r, {U, V, W, SwitchMode::White, {}, {}}, report).empty());
}

TEST_CASE("white mode needs deg(u) >= deg(v)") {
  auto r = testing::make_filled(5,
                                {{Edge(U, W), Color::white()},
                                 {Edge(W, V), Color::black()},
                                 {Edge(U, T), Color::black()},
                                 {Edge(T, V), Color::white()},
                                 {Edge(U, V), Color::black()},
                                 {Edge(W, T), Color::black()},
                                 {Edge(V, 4), Color::black()}},
                                {});
  REQUIRE(r.degree(U) < r.degree(V));
  try {
    multi_switch(r, U, V, W, SwitchMode::White);
    FAIL("expected PreconditionViolated");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::PreconditionViolated);
  }
  CHECK(r.trace().batches.empty());
}

TEST_CASE("multi-switch rejects malformed requests") {
  auto r = square_instance();
  CHECK_THROWS_AS(multi_switch(r, U, U, W, SwitchMode::White), Error);
  // x1 = uw is White, not Black.
  CHECK_THROWS_AS(multi_switch(r, U, V, W, SwitchMode::Black), Error);
  // z3 must be colored like y1.
  CHECK_THROWS_AS(multi_switch(r, U, V, W, SwitchMode::White, Edge(V, T)), Error);
  // u-t is the only c-edge at u, so it cannot be held back as z2.
  CHECK_THROWS_AS(multi_switch(r, U, V, W, SwitchMode::White, std::nullopt, Edge(U, T)), Error);
}

TEST_CASE("white switch merges two residual triangles into a hexagon") {
  std::vector<std::pair<Edge, Color>> a;
  for (const Edge& e : {Edge(0, 1), Edge(1, 2), Edge(0, 2), Edge(3, 4), Edge(4, 5), Edge(3, 5)}) {
    a.push_back({e, Color::residual()});
  }
  auto r = testing::make_filled(6, a, {{Color::residual(), 2}});
  const auto before = r;
  // u = u2, v = v3, w = v2 with triangles (u1,u2,u3) = (0,1,2), (v1,v2,v3) = (3,4,5).
  const auto report = multi_switch(r, 1, 5, 4, SwitchMode::White);
  const auto residual = r.graph_of(Color::residual());
  CHECK(residual.regular_degree() == 2);
  CHECK(connected(residual));
  CHECK(r.color(1, 4) == Color::residual());
  CHECK(testing::multi_switch_violations(before, r, {1, 5, 4, SwitchMode::White, {}, {}}, report).empty());
}

TEST_CASE("protected z3 splits the chain and spends z2") {
  // u = 0, v = 1, w = 2. Residual is the 6-cycle 2-1-3-4-0-5-2 where y1 = 2-1,
  // z3 = 1-3 and z2 = 0-4; 0-5 is the other residual edge at u.
  std::vector<std::pair<Edge, Color>> a;
  for (const Edge& e : {Edge(2, 1), Edge(1, 3), Edge(3, 4), Edge(4, 0), Edge(0, 5), Edge(5, 2)}) {
    a.push_back({e, Color::residual()});
  }
  a.push_back({Edge(0, 3), Color::black()});
  a.push_back({Edge(1, 5), Color::black()});
  auto r = testing::make_filled(6, a, {{Color::residual(), 2}});
  const auto before = r;
  const testing::SwitchCase sc{0, 1, 2, SwitchMode::White, Edge(1, 3), Edge(0, 4)};
  const auto report = multi_switch(r, sc.u, sc.v, sc.w, sc.mode, sc.z3, sc.z2);
  CHECK(testing::multi_switch_violations(before, r, sc, report).empty());
  CHECK(r.color(1, 3) == Color::residual());
}

TEST_CASE("parallel two-switch") {
  SUBCASE("one-factor and residual exchange an alternating square") {
    // u1 = 0, u2 = 1, v2 = 2, v3 = 3.
    auto r = testing::make_filled(4,
                                  {{Edge(0, 2), Color::one_factor(0)},
                                   {Edge(1, 3), Color::one_factor(0)},
                                   {Edge(0, 1), Color::residual()},
                                   {Edge(2, 3), Color::residual()}},
                                  {{Color::one_factor(0), 1}, {Color::residual(), 1}});
    const auto before = testing::color_table(r);
    parallel_two_switch(r, Edge(0, 2), Edge(1, 3), Edge(0, 1), Edge(2, 3));
    CHECK(r.edges_of(Color::one_factor(0)) == std::vector<Edge>{Edge(0, 1), Edge(2, 3)});
    CHECK(r.graph_of(Color::one_factor(0)).regular_degree() == 1);
    CHECK(testing::color_table(r) == before);
  }
  SUBCASE("classical black/white two-switch") {
    auto r = testing::make_filled(4, {{Edge(0, 1), Color::black()}, {Edge(2, 3), Color::black()}}, {});
    const auto pi = r.pi();
    parallel_two_switch(r, Edge(0, 1), Edge(2, 3), Edge(0, 2), Edge(1, 3));
    CHECK(r.pi() == pi);
    CHECK(r.color(0, 2) == Color::black());
    CHECK(r.color(0, 1) == Color::white());
  }
  SUBCASE("pairs on different vertex sets are rejected") {
    auto r = testing::make_filled(6, {{Edge(0, 1), Color::black()}, {Edge(2, 3), Color::black()}}, {});
    CHECK_THROWS_AS(parallel_two_switch(r, Edge(0, 1), Edge(2, 3), Edge(4, 5), Edge(0, 4)), Error);
  }
}

TEST_CASE("random multi-switches keep every promise") {
  std::mt19937_64 rng(314);
  int done = 0;
  for (int attempt = 0; done < 1500 && attempt < 20000; ++attempt) {
    const int n = 6 + 2 * static_cast<int>(rng() % 4);
    auto r = testing::random_colored(n, rng);
    const auto sc = testing::random_switch_case(r, rng);
    if (!sc) continue;
    const auto before = r;
    const auto report = multi_switch(r, sc->u, sc->v, sc->w, sc->mode, sc->z3, sc->z2);
    const auto bad = testing::multi_switch_violations(before, r, *sc, report);
    CHECK_MESSAGE(bad.empty(), bad.front());
    CHECK(report.length() <= static_cast<std::size_t>(n - 1));
    CHECK(r.trace().replay() == std::vector<Color>(r.coloring().begin(), r.coloring().end()));
    ++done;
  }
  CHECK(done == 1500);
}
