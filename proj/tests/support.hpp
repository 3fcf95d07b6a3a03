#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "factorpack/coloring.hpp"
#include "factorpack/graph.hpp"
#include "factorpack/switch.hpp"

namespace factorpack::testing {

inline SimpleGraph cycle_graph(int n) {
  SimpleGraph g(n);
  for (Vertex v = 0; v < n; ++v) g.add_edge(Edge(v, (v + 1) % n));
  return g;
}

inline SimpleGraph complete_graph(int n) {
  SimpleGraph g(n);
  for (Vertex b = 1; b < n; ++b) {
    for (Vertex a = 0; a < b; ++a) g.add_edge(Edge(a, b));
  }
  return g;
}

inline SimpleGraph circulant(int n, std::initializer_list<int> offsets) {
  SimpleGraph g(n);
  for (Vertex v = 0; v < n; ++v) {
    for (int d : offsets) g.add_edge(Edge(v, (v + d) % n));
  }
  return g;
}

inline SimpleGraph petersen_graph() {
  SimpleGraph g(10);
  for (Vertex i = 0; i < 5; ++i) {
    g.add_edge(Edge(i, (i + 1) % 5));
    g.add_edge(Edge(i, i + 5));
    g.add_edge(Edge(5 + i, 5 + (i + 2) % 5));
  }
  return g;
}

// Vertex-disjoint copies laid out one after another.
inline SimpleGraph disjoint_union(const std::vector<SimpleGraph>& parts) {
  int n = 0;
  for (const auto& p : parts) n += p.n();
  SimpleGraph g(n);
  int offset = 0;
  for (const auto& p : parts) {
    for (const Edge& e : p.edges()) g.add_edge(Edge(e.u + offset, e.v + offset));
    offset += p.n();
  }
  return g;
}

// Uniform-ish random d-regular graph: pairing model, restarted on loops or
// repeated pairs. Dense degrees go through the complement, where simple
// pairings are far more likely.
inline SimpleGraph random_regular(int n, int d, std::mt19937_64& rng) {
  if (2 * d > n - 1) return random_regular(n, n - 1 - d, rng).complement();
  for (;;) {
    std::vector<Vertex> points;
    for (Vertex v = 0; v < n; ++v) points.insert(points.end(), static_cast<std::size_t>(d), v);
    std::shuffle(points.begin(), points.end(), rng);
    SimpleGraph g(n);
    bool ok = true;
    for (std::size_t i = 0; ok && i + 1 < points.size(); i += 2) {
      ok = points[i] != points[i + 1] && g.add_edge(Edge(points[i], points[i + 1]));
    }
    if (ok) return g;
  }
}

// Every connected 2-regular graph on n vertices is a relabelled n-cycle;
// a random relabelling exercises vertex order.
inline SimpleGraph relabel(const SimpleGraph& g, std::mt19937_64& rng) {
  std::vector<Vertex> perm(static_cast<std::size_t>(g.n()));
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  SimpleGraph out(g.n());
  for (const Edge& e : g.edges()) {
    out.add_edge(Edge(perm[static_cast<std::size_t>(e.u)], perm[static_cast<std::size_t>(e.v)]));
  }
  return out;
}

// Fills every pair not listed with White, then validates.
inline ColoredRealization make_filled(int n, std::vector<std::pair<Edge, Color>> assignments,
                                      std::map<Color, int> declared) {
  std::vector<char> taken(pair_count(n), 0);
  for (const auto& a : assignments) taken[pair_index(a.first)] = 1;
  for (Vertex b = 1; b < n; ++b) {
    for (Vertex a = 0; a < b; ++a) {
      if (!taken[pair_index(Edge(a, b))]) assignments.push_back({Edge(a, b), Color::white()});
    }
  }
  return ColoredRealization::make(n, assignments, std::move(declared));
}

// Per-vertex count of incident edges in each color, recomputed from scratch.
inline std::vector<std::map<Color, int>> color_table(const ColoredRealization& r) {
  std::vector<std::map<Color, int>> table(static_cast<std::size_t>(r.n()));
  for (Vertex b = 1; b < r.n(); ++b) {
    for (Vertex a = 0; a < b; ++a) {
      const Color c = r.color(a, b);
      ++table[static_cast<std::size_t>(a)][c];
      ++table[static_cast<std::size_t>(b)][c];
    }
  }
  return table;
}

inline bool is_perfect_matching(int n, const std::vector<Edge>& edges) {
  std::vector<int> deg(static_cast<std::size_t>(n), 0);
  for (const Edge& e : edges) {
    ++deg[static_cast<std::size_t>(e.u)];
    ++deg[static_cast<std::size_t>(e.v)];
  }
  return std::all_of(deg.begin(), deg.end(), [](int d) { return d == 1; });
}

// Random coloring of K_n (n even) whose declared classes are unions of
// relabelled circulant offsets, so they are regular by construction. The
// remaining pairs are White or Black at random.
inline ColoredRealization random_colored(int n, std::mt19937_64& rng) {
  std::vector<Vertex> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<int> offsets(static_cast<std::size_t>(n / 2));
  std::iota(offsets.begin(), offsets.end(), 1);
  std::shuffle(offsets.begin(), offsets.end(), rng);

  std::vector<std::pair<Edge, Color>> assignment;
  std::map<Color, int> declared;
  auto add_offset = [&](int d, std::optional<Color> c) {
    for (Vertex x = 0; x < n; ++x) {
      const Vertex y = (x + d) % n;
      if (d * 2 == n && y < x) continue;
      const Edge e(perm[static_cast<std::size_t>(x)], perm[static_cast<std::size_t>(y)]);
      assignment.push_back({e, c ? *c : (rng() % 2 ? Color::black() : Color::white())});
    }
    if (c) declared[*c] += d * 2 == n ? 1 : 2;
  };
  for (int d : offsets) {
    const bool half = d * 2 == n;
    switch (rng() % 5) {
      case 0: add_offset(d, Color::residual()); break;
      case 1:
        if (half) {
          add_offset(d, Color::one_factor(0));
        } else if (!declared.contains(Color::two_factor(0))) {
          add_offset(d, Color::two_factor(0));
        } else {
          add_offset(d, std::nullopt);
        }
        break;
      default: add_offset(d, std::nullopt); break;
    }
  }
  return ColoredRealization::make(n, assignment, declared);
}

struct SwitchCase {
  Vertex u = 0;
  Vertex v = 0;
  Vertex w = 0;
  SwitchMode mode = SwitchMode::White;
  std::optional<Edge> z3;
  std::optional<Edge> z2;
};

// A random (u, v, w, mode, hints) meeting every multi_switch precondition,
// checked here from raw color counts.
inline std::optional<SwitchCase> random_switch_case(const ColoredRealization& r,
                                                    std::mt19937_64& rng) {
  const int n = r.n();
  const auto table = color_table(r);
  auto count = [&](Vertex x, Color c) {
    const auto& row = table[static_cast<std::size_t>(x)];
    const auto it = row.find(c);
    return it == row.end() ? 0 : it->second;
  };
  std::vector<SwitchCase> options;
  for (SwitchMode mode : {SwitchMode::White, SwitchMode::Black}) {
    const Color terminal = terminal_color(mode);
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = 0; v < n; ++v) {
        if (u == v) continue;
        bool dominates = true;
        for (const auto& [c, m] : table[static_cast<std::size_t>(v)]) {
          if (c != terminal && count(u, c) < m) dominates = false;
        }
        const bool order = mode == SwitchMode::White ? r.degree(u) >= r.degree(v)
                                                     : r.degree(u) <= r.degree(v);
        if (!dominates || !order) continue;
        for (Vertex w = 0; w < n; ++w) {
          if (w == u || w == v) continue;
          if (r.color(u, w) == terminal && r.color(w, v) != terminal) {
            options.push_back({u, v, w, mode, std::nullopt, std::nullopt});
          }
        }
      }
    }
  }
  if (options.empty()) return std::nullopt;
  SwitchCase pick = options[rng() % options.size()];
  const Color c = r.color(pick.w, pick.v);
  std::vector<Edge> z3s;
  std::vector<Edge> z2s;
  for (Vertex t = 0; t < n; ++t) {
    if (t == pick.u || t == pick.v) continue;
    if (t != pick.w && r.color(pick.v, t) == c) z3s.emplace_back(pick.v, t);
    if (r.color(pick.u, t) == c) z2s.emplace_back(pick.u, t);
  }
  if (!z3s.empty() && rng() % 3 != 0) pick.z3 = z3s[rng() % z3s.size()];
  // z2 is an extra c-edge at u, so a second one must remain for z1.
  if (z2s.size() >= 2 && rng() % 3 != 0) pick.z2 = z2s[rng() % z2s.size()];
  return pick;
}

// Every promise of a multi-switch, checked against the colorings before and
// after. Returns one line per broken promise.
inline std::vector<std::string> multi_switch_violations(const ColoredRealization& before,
                                                        const ColoredRealization& after,
                                                        const SwitchCase& sc,
                                                        const MultiSwitchReport& report) {
  std::vector<std::string> bad;
  const Color terminal = terminal_color(sc.mode);
  const Edge x1(sc.u, sc.w);
  const Edge y1(sc.w, sc.v);
  if (color_table(before) != color_table(after)) bad.push_back("per-vertex color degrees changed");

  std::set<Edge> changed;
  for (Vertex b = 1; b < before.n(); ++b) {
    for (Vertex a = 0; a < b; ++a) {
      if (before.color(a, b) != after.color(a, b)) changed.insert(Edge(a, b));
    }
  }
  for (const Edge& e : changed) {
    if (!e.touches(sc.u) && !e.touches(sc.v)) bad.push_back("recolored " + to_string(e) + " away from u, v");
  }
  if (after.color(x1) != before.color(y1) || after.color(y1) != terminal) bad.push_back("x1, y1 not swapped");
  if (sc.z3 && changed.contains(*sc.z3)) bad.push_back("z3 was recolored");

  const auto& chain = report.chain;
  if (chain.size() < 2) bad.push_back("chain shorter than two links");
  std::set<Vertex> mids;
  for (std::size_t i = 0; i < chain.size(); ++i) {
    const auto& link = chain[i];
    if (link.midpoint == sc.u || link.midpoint == sc.v || !mids.insert(link.midpoint).second) {
      bad.push_back("midpoint repeated or equal to u/v");
    }
    if (link.x != Edge(sc.u, link.midpoint) || link.y != Edge(link.midpoint, sc.v)) bad.push_back("link shape");
    if (before.color(link.x) != link.x_color || before.color(link.y) != link.y_color) {
      bad.push_back("link colors misreported");
    }
    if (i + 1 < chain.size() && chain[i + 1].x_color != link.y_color) bad.push_back("color rule broken");
    if ((link.y_color == terminal) != (i + 1 == chain.size())) bad.push_back("terminal y not last");
  }

  std::set<Edge> expected;
  std::set<std::size_t> swapped(report.swapped.begin(), report.swapped.end());
  for (std::size_t i : swapped) {
    if (chain[i].x_color != chain[i].y_color) {
      expected.insert(chain[i].x);
      expected.insert(chain[i].y);
    }
  }
  if (expected != changed) bad.push_back("recolored edges differ from the reported swaps");

  if (sc.z2 && chain.size() >= 2) {
    const bool z1_used = swapped.contains(1);
    bool z2_used = false;
    for (std::size_t i : swapped) z2_used = z2_used || chain[i].x == *sc.z2;
    if (z1_used == z2_used) bad.push_back("not exactly one of z1, z2 consumed");
    if (!z2_used && changed.contains(*sc.z2)) bad.push_back("z2 recolored without being consumed");
  }
  return bad;
}

}  // namespace factorpack::testing
