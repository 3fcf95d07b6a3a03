#include "factorpack/realize.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>

#include "factorpack/error.hpp"
#include "factorpack/matching.hpp"
#include "factorpack/switch.hpp"

namespace factorpack {

bool erdos_gallai_graphic(std::span<const int> degrees) {
  std::vector<long long> d(degrees.begin(), degrees.end());
  std::sort(d.begin(), d.end(), std::greater<>());
  const auto n = static_cast<long long>(d.size());
  if (n == 0) return true;
  if (d.back() < 0 || d.front() > n - 1) return false;
  if (std::accumulate(d.begin(), d.end(), 0LL) % 2 != 0) return false;
  long long prefix = 0;
  for (long long k = 1; k <= n; ++k) {
    prefix += d[static_cast<std::size_t>(k - 1)];
    long long tail = 0;
    for (long long i = k; i < n; ++i) tail += std::min(d[static_cast<std::size_t>(i)], k);
    if (prefix > k * (k - 1) + tail) return false;
  }
  return true;
}

bool erdos_gallai_graphic(const DegreeSequence& seq) { return erdos_gallai_graphic(seq.original()); }

SimpleGraph havel_hakimi_realize(const DegreeSequence& seq) {
  if (!erdos_gallai_graphic(seq)) {
    throw Error(ErrorCode::NotGraphic, seq.to_string() + " is not graphic");
  }
  const int n = seq.n();
  std::vector<int> remaining = seq.original();
  SimpleGraph g(n);
  auto by_demand = [&](Vertex a, Vertex b) {
    const auto ra = remaining[static_cast<std::size_t>(a)];
    const auto rb = remaining[static_cast<std::size_t>(b)];
    return ra != rb ? ra > rb : a < b;
  };
  std::vector<Vertex> order(static_cast<std::size_t>(n));
  for (;;) {
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), by_demand);
    const Vertex hub = order.front();
    const int demand = remaining[static_cast<std::size_t>(hub)];
    if (demand == 0) break;
    if (demand > n - 1 || remaining[static_cast<std::size_t>(order[static_cast<std::size_t>(demand)])] == 0) {
      throw Error(ErrorCode::NotGraphic, seq.to_string() + " ran out of partners");
    }
    for (int i = 1; i <= demand; ++i) {
      const Vertex x = order[static_cast<std::size_t>(i)];
      g.add_edge(Edge(hub, x));
      --remaining[static_cast<std::size_t>(x)];
    }
    remaining[static_cast<std::size_t>(hub)] = 0;
  }
  return g;
}

namespace {

std::uint64_t draw(std::mt19937_64& rng, std::uint64_t bound) { return rng() % bound; }

// Tries one random two-switch ab,cd -> ac,bd. Returns the removed/added edges.
struct TwoSwitch {
  Edge removed[2];
  Edge added[2];
};

std::optional<TwoSwitch> random_two_switch(const std::vector<Edge>& edges, const SimpleGraph& g,
                                           std::mt19937_64& rng) {
  if (edges.size() < 2) return std::nullopt;
  const auto i = draw(rng, edges.size());
  const auto j = draw(rng, edges.size());
  if (i == j) return std::nullopt;
  const Vertex a = edges[i].u, b = edges[i].v;
  Vertex c = edges[j].u, d = edges[j].v;
  if (draw(rng, 2) == 1) std::swap(c, d);
  if (a == c || a == d || b == c || b == d) return std::nullopt;
  if (g.has_edge(a, c) || g.has_edge(b, d)) return std::nullopt;
  return TwoSwitch{{edges[i], edges[j]}, {Edge(a, c), Edge(b, d)}};
}

void apply(SimpleGraph& g, const TwoSwitch& s) {
  for (const Edge& e : s.removed) g.remove_edge(e);
  for (const Edge& e : s.added) g.add_edge(e);
}

void undo(SimpleGraph& g, const TwoSwitch& s) {
  for (const Edge& e : s.added) g.remove_edge(e);
  for (const Edge& e : s.removed) g.add_edge(e);
}

// Degree-constrained subgraph gadget. Each host edge becomes a pair of linked
// "side" nodes; vertex v gets deg(v) - b(v) core nodes joined to its sides.
// A side pair matched together means the edge is kept.
struct Gadget {
  std::vector<Edge> host_edges;
  SimpleGraph graph;
  std::size_t cores = 0;
};

Gadget build_gadget(const SimpleGraph& host, int bound) {
  Gadget gadget;
  gadget.host_edges = host.edges();
  const auto m = gadget.host_edges.size();
  std::vector<std::vector<Vertex>> sides(static_cast<std::size_t>(host.n()));
  for (std::size_t e = 0; e < m; ++e) {
    sides[static_cast<std::size_t>(gadget.host_edges[e].u)].push_back(static_cast<Vertex>(2 * e));
    sides[static_cast<std::size_t>(gadget.host_edges[e].v)].push_back(static_cast<Vertex>(2 * e + 1));
  }
  std::vector<int> core_count(static_cast<std::size_t>(host.n()));
  for (Vertex v = 0; v < host.n(); ++v) {
    core_count[static_cast<std::size_t>(v)] = host.degree(v) - std::min(bound, host.degree(v));
    gadget.cores += static_cast<std::size_t>(core_count[static_cast<std::size_t>(v)]);
  }
  gadget.graph = SimpleGraph(static_cast<int>(2 * m + gadget.cores));
  for (std::size_t e = 0; e < m; ++e) {
    gadget.graph.add_edge(Edge(static_cast<Vertex>(2 * e), static_cast<Vertex>(2 * e + 1)));
  }
  auto next_core = static_cast<Vertex>(2 * m);
  for (Vertex v = 0; v < host.n(); ++v) {
    for (int c = 0; c < core_count[static_cast<std::size_t>(v)]; ++c, ++next_core) {
      for (Vertex side : sides[static_cast<std::size_t>(v)]) gadget.graph.add_edge(Edge(side, next_core));
    }
  }
  return gadget;
}

}  // namespace

SimpleGraph switch_randomize(SimpleGraph g, std::uint64_t steps, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto edges = g.edges();
  for (std::uint64_t step = 0; step < steps; ++step) {
    auto s = random_two_switch(edges, g, rng);
    if (!s) continue;
    apply(g, *s);
    std::replace(edges.begin(), edges.end(), s->removed[0], s->added[0]);
    std::replace(edges.begin(), edges.end(), s->removed[1], s->added[1]);
  }
  return g;
}

std::optional<SimpleGraph> find_regular_factor(const SimpleGraph& host, int k) {
  if (k < 0) return std::nullopt;
  SimpleGraph factor(host.n());
  if (k == 0) return factor;
  for (Vertex v = 0; v < host.n(); ++v) {
    if (host.degree(v) < k) return std::nullopt;
  }
  const Gadget gadget = build_gadget(host, k);
  const Matching m = maximum_matching(gadget.graph);
  if (!m.is_perfect()) return std::nullopt;
  for (std::size_t e = 0; e < gadget.host_edges.size(); ++e) {
    if (m.contains(Edge(static_cast<Vertex>(2 * e), static_cast<Vertex>(2 * e + 1)))) {
      factor.add_edge(gadget.host_edges[e]);
    }
  }
  return factor;
}

std::size_t max_bounded_subgraph_size(const SimpleGraph& host, int bound) {
  if (bound <= 0) return 0;
  const Gadget gadget = build_gadget(host, bound);
  return maximum_matching(gadget.graph).size() - gadget.cores;
}

namespace {

// Depth-first over realizations of `demand`, vertex by vertex; after vertex i
// is settled, the rest is an unconstrained realization problem, so the
// Erdos-Gallai test on the remaining demands prunes exactly.
class ExactKunduSearch {
 public:
  ExactKunduSearch(std::vector<int> demand, int k, std::uint64_t budget)
      : n_(static_cast<int>(demand.size())), k_(k), budget_(budget),
        remaining_(std::move(demand)), black_(n_) {}

  std::optional<std::pair<SimpleGraph, SimpleGraph>> run() {
    if (settle(0)) return std::make_pair(black_, *factor_);
    return std::nullopt;
  }

 private:
  bool settle(Vertex i) {
    if (++nodes_ > budget_) {
      throw Error(ErrorCode::SearchExhausted, "exact realization search hit its node budget");
    }
    if (i == n_) {
      factor_ = find_regular_factor(black_.complement(), k_);
      return factor_.has_value();
    }
    std::vector<Vertex> candidates;
    for (Vertex j = i + 1; j < n_; ++j) {
      if (remaining_[static_cast<std::size_t>(j)] > 0) candidates.push_back(j);
    }
    return choose(i, candidates, 0, remaining_[static_cast<std::size_t>(i)]);
  }

  bool choose(Vertex i, const std::vector<Vertex>& candidates, std::size_t from, int need) {
    if (need == 0) {
      std::span<const int> rest(remaining_.begin() + i + 1, remaining_.end());
      return erdos_gallai_graphic(rest) && settle(i + 1);
    }
    for (std::size_t idx = from; idx + static_cast<std::size_t>(need) <= candidates.size(); ++idx) {
      const Vertex j = candidates[idx];
      --remaining_[static_cast<std::size_t>(j)];
      black_.add_edge(Edge(i, j));
      const bool found = choose(i, candidates, idx + 1, need - 1);
      black_.remove_edge(Edge(i, j));
      ++remaining_[static_cast<std::size_t>(j)];
      if (found) return true;
    }
    return false;
  }

  int n_;
  int k_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::vector<int> remaining_;
  SimpleGraph black_;
  std::optional<SimpleGraph> factor_;
};

void shuffle_colors(ColoredRealization& r, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const int n = r.n();
  if (n < 4) return;
  const auto attempts = static_cast<std::uint64_t>(8 * n * n);
  for (std::uint64_t t = 0; t < attempts; ++t) {
    Vertex q[4];
    for (auto& x : q) x = static_cast<Vertex>(draw(rng, static_cast<std::uint64_t>(n)));
    if (q[0] == q[1] || q[0] == q[2] || q[0] == q[3] || q[1] == q[2] || q[1] == q[3] ||
        q[2] == q[3]) {
      continue;
    }
    const Edge ab(q[0], q[1]), bc(q[1], q[2]), cd(q[2], q[3]), da(q[3], q[0]);
    if (r.color(ab) == r.color(cd) && r.color(bc) == r.color(da) && r.color(ab) != r.color(bc)) {
      parallel_two_switch(r, ab, cd, bc, da);
    }
  }
}

}  // namespace

ColoredRealization kundu_realize(const DegreeSequence& pi, int k, std::uint64_t seed,
                                 const KunduOptions& options) {
  const int n = pi.n();
  if (n < 2) throw Error(ErrorCode::InvalidArgument, "need at least two vertices");
  if (k < 0) throw Error(ErrorCode::InvalidArgument, "k must be non-negative");
  if (!erdos_gallai_graphic(pi)) throw Error(ErrorCode::NotGraphic, pi.to_string() + " is not graphic");
  const DegreeSequence reduced = pi.minus(k);
  if (!erdos_gallai_graphic(reduced)) {
    throw Error(ErrorCode::NotGraphicMinusK, "pi - " + std::to_string(k) + " = " +
                                                 reduced.to_string() + " is not graphic");
  }

  SimpleGraph black = havel_hakimi_realize(reduced);
  std::optional<SimpleGraph> factor = find_regular_factor(black.complement(), k);

  if (!factor) {
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
    const std::uint64_t steps = options.climb_steps
                                    ? options.climb_steps
                                    : 200ULL * static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(n);
    const auto target = static_cast<std::size_t>(n) * static_cast<std::size_t>(k) / 2;
    std::size_t score = max_bounded_subgraph_size(black.complement(), k);
    auto edges = black.edges();
    for (std::uint64_t step = 0; step < steps && !factor; ++step) {
      auto s = random_two_switch(edges, black, rng);
      if (!s) continue;
      apply(black, *s);
      const std::size_t next = max_bounded_subgraph_size(black.complement(), k);
      if (next < score) {
        undo(black, *s);
        continue;
      }
      score = next;
      std::replace(edges.begin(), edges.end(), s->removed[0], s->added[0]);
      std::replace(edges.begin(), edges.end(), s->removed[1], s->added[1]);
      if (score == target) factor = find_regular_factor(black.complement(), k);
    }
  }
  if (!factor && options.exact_fallback && n <= options.exact_max_n) {
    ExactKunduSearch search(reduced.original(), k, options.exact_node_budget);
    if (auto found = search.run()) {
      black = std::move(found->first);
      factor = std::move(found->second);
    }
  }
  if (!factor) {
    throw Error(ErrorCode::SearchExhausted,
                "no realization with a " + std::to_string(k) + "-factor found for " + pi.to_string());
  }

  const std::pair<Color, SimpleGraph> classes[] = {{Color::residual(), *factor}};
  ColoredRealization r = ColoredRealization::from_graphs(black, classes, k);
  if (seed != 0) shuffle_colors(r, seed);
  r.reset_trace();
  return r;
}

}  // namespace factorpack
