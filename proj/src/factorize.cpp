#include "factorpack/factorize.hpp"

#include <algorithm>
#include <set>

#include "factorpack/error.hpp"
#include "factorpack/realize.hpp"

namespace factorpack {

TripleChoice monotone_triple(std::span<const Vertex> cycle, std::span<const int> degrees,
                             std::size_t cycle_id) {
  const std::size_t len = cycle.size();
  if (len < 3 || len % 2 == 0) {
    throw Error(ErrorCode::EvenCycle, "need an odd cycle, got length " + std::to_string(len));
  }
  auto deg = [&](Vertex v) { return degrees[static_cast<std::size_t>(v)]; };
  for (bool reversed : {false, true}) {
    for (std::size_t i = 0; i < len; ++i) {
      const std::size_t j = reversed ? (i + len - 1) % len : (i + 1) % len;
      const std::size_t l = reversed ? (i + len - 2) % len : (i + 2) % len;
      if (deg(cycle[i]) >= deg(cycle[j]) && deg(cycle[j]) >= deg(cycle[l])) {
        return {cycle_id, {cycle[i], cycle[j], cycle[l]}, reversed};
      }
    }
  }
  // Strictly alternating comparisons around an odd cycle are impossible.
  throw Error(ErrorCode::CaseAnalysisExhausted, "odd cycle without a monotone triple");
}

void PipelineStats::record(const MergeOutcome& outcome) {
  switch (outcome.kind) {
    case CrossCaseKind::DirectBridge: ++direct_bridges; break;
    case CrossCaseKind::ParallelPair: ++parallel_switches; break;
    case CrossCaseKind::WhiteSwitch:
    case CrossCaseKind::BlackSwitch:
      ++multi_switches;
      if (outcome.multi_switch) max_chain = std::max(max_chain, outcome.multi_switch->length());
      break;
  }
}

namespace {

std::size_t position(std::span<const Vertex> cycle, Vertex x) {
  const auto it = std::find(cycle.begin(), cycle.end(), x);
  if (it == cycle.end()) {
    throw Error(ErrorCode::PreconditionViolated, "vertex " + std::to_string(x) + " not on cycle");
  }
  return static_cast<std::size_t>(it - cycle.begin());
}

std::pair<Vertex, Vertex> cycle_neighbors(std::span<const Vertex> cycle, Vertex x) {
  const std::size_t p = position(cycle, x);
  const std::size_t len = cycle.size();
  return {cycle[(p + len - 1) % len], cycle[(p + 1) % len]};
}

// Hamiltonian path of the cycle from `start` that avoids the edge to `skip`.
std::vector<Vertex> path_from(std::span<const Vertex> cycle, Vertex start, Vertex skip) {
  const std::size_t p = position(cycle, start);
  const std::size_t len = cycle.size();
  const auto [prev, next] = cycle_neighbors(cycle, start);
  if (skip != prev && skip != next) {
    throw Error(ErrorCode::PreconditionViolated, "skipped vertex is not a cycle neighbor");
  }
  const bool backwards = skip == next;
  std::vector<Vertex> path;
  path.reserve(len);
  for (std::size_t step = 0; step < len; ++step) {
    path.push_back(cycle[backwards ? (p + len - step) % len : (p + step) % len]);
  }
  return path;
}

std::vector<Vertex> path_to(std::span<const Vertex> cycle, Vertex end, Vertex skip) {
  auto path = path_from(cycle, end, skip);
  std::reverse(path.begin(), path.end());
  return path;
}

// Neighbor of x on the cycle whose edge has left `color`, else the lower one.
Vertex broken_or_lower_neighbor(const ColoredRealization& r, std::span<const Vertex> cycle, Vertex x,
                                Color color) {
  const auto [a, b] = cycle_neighbors(cycle, x);
  if (r.color(x, a) != color) return a;
  if (r.color(x, b) != color) return b;
  return std::min(a, b);
}

void check_cycle_pair(const ColoredRealization& r, std::span<const Vertex> c1,
                      std::span<const Vertex> c2, Color cycle_color) {
  std::set<Vertex> seen;
  for (auto cycle : {c1, c2}) {
    if (cycle.size() < 3 || cycle.size() % 2 == 0) {
      throw Error(ErrorCode::PreconditionViolated, "merge needs odd cycles of length >= 3");
    }
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      const Vertex x = cycle[i];
      if (x < 0 || x >= r.n() || !seen.insert(x).second) {
        throw Error(ErrorCode::PreconditionViolated, "cycles must be vertex-disjoint and simple");
      }
      const Edge e(x, cycle[(i + 1) % cycle.size()]);
      if (r.color(e) != cycle_color) {
        throw Error(ErrorCode::PreconditionViolated,
                    "cycle edge " + to_string(e) + " is " + to_string(r.color(e)) + ", expected " +
                        to_string(cycle_color));
      }
    }
  }
}

Matching rebuild(const ColoredRealization& r, const Matching& base, std::span<const Vertex> c1,
                 std::span<const Vertex> c2, const std::vector<Vertex>& path, Color color) {
  Matching out = base;
  for (auto cycle : {c1, c2}) {
    for (Vertex x : cycle) {
      if (out.covers(x)) out.remove(Edge(x, out.mate(x)));
    }
  }
  if (path.size() != c1.size() + c2.size() || path.size() % 2 != 0) {
    throw Error(ErrorCode::CaseAnalysisExhausted, "merged path does not cover both cycles");
  }
  for (std::size_t i = 0; i < path.size(); i += 2) {
    const Edge e(path[i], path[i + 1]);
    if (r.color(e) != color) {
      throw Error(ErrorCode::CaseAnalysisExhausted,
                  "merged edge " + to_string(e) + " is " + to_string(r.color(e)) + ", expected " +
                      to_string(color));
    }
    out.add(e);
  }
  return out;
}

std::vector<Vertex> concat(std::vector<Vertex> a, const std::vector<Vertex>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

Vertex successor(std::span<const Vertex> cycle, Vertex x, bool reversed) {
  const auto [prev, next] = cycle_neighbors(cycle, x);
  return reversed ? prev : next;
}

MergeOutcome merge_in_residual(ColoredRealization& r, const Matching& matching,
                               std::span<const Vertex> c1, std::span<const Vertex> c2,
                               Color factor) {
  const auto& degrees = r.pi().original();
  auto deg = [&](Vertex v) { return degrees[static_cast<std::size_t>(v)]; };
  TripleChoice t1 = monotone_triple(c1, degrees, 0);
  TripleChoice t2 = monotone_triple(c2, degrees, 1);
  std::span<const Vertex> first = c1;
  std::span<const Vertex> second = c2;
  if (deg(t1.vertices[1]) < deg(t2.vertices[1])) {
    std::swap(first, second);
    std::swap(t1, t2);
  }
  const auto [u1, u2, u3] = t1.vertices;
  const auto [v1, v2, v3] = t2.vertices;

  CrossEdgeCase cross;
  cross.first = t1.vertices;
  cross.second = t2.vertices;
  const std::array<Vertex, 4> near{u1, u1, u2, u2};
  const std::array<Vertex, 4> far{v2, v3, v2, v3};
  for (std::size_t i = 0; i < 4; ++i) {
    cross.edges[i] = Edge(near[i], far[i]);
    cross.colors[i] = r.color(cross.edges[i]);
  }

  MergeOutcome out;
  for (SwitchMode mode : {SwitchMode::White, SwitchMode::Black}) {
    for (std::size_t i = 0; i < 4; ++i) {
      if (cross.colors[i] != terminal_color(mode)) continue;
      // White: the high-degree side plays u. Black: the low-degree side does.
      const bool white = mode == SwitchMode::White;
      const Vertex u = white ? near[i] : far[i];
      const Vertex w = white ? far[i] : near[i];
      const Vertex v = white ? (w == v2 ? v3 : v2) : (w == u1 ? u2 : u1);
      const auto u_cycle = white ? first : second;
      const auto w_cycle = white ? second : first;
      const bool u_reversed = white ? t1.reversed : t2.reversed;
      const auto [vp, vn] = cycle_neighbors(w_cycle, v);
      const Edge z3(v, vp == w ? vn : vp);
      const Edge z2(u, successor(u_cycle, u, u_reversed));

      cross.kind = white ? CrossCaseKind::WhiteSwitch : CrossCaseKind::BlackSwitch;
      cross.which = i;
      out.kind = cross.kind;
      out.multi_switch = multi_switch(r, u, v, w, mode, z3, z2);
      out.bridge = Edge(u, w);
      const auto left = path_to(u_cycle, u, broken_or_lower_neighbor(r, u_cycle, u, factor));
      const auto right = path_from(w_cycle, w, v);
      out.matching = rebuild(r, matching, c1, c2, concat(left, right), factor);
      out.cross_case = cross;
      return out;
    }
  }

  const Edge g(u1, u2);
  const Edge h(v2, v3);
  if (cross.colors[0] == cross.colors[3]) {
    cross.kind = CrossCaseKind::ParallelPair;
    cross.which = 0;
    parallel_two_switch(r, cross.edges[0], cross.edges[3], g, h);
    out.bridge = cross.edges[3];
    out.matching = rebuild(r, matching, c1, c2,
                           concat(path_from(first, u1, u2), path_from(second, v3, v2)), factor);
  } else if (cross.colors[1] == cross.colors[2]) {
    cross.kind = CrossCaseKind::ParallelPair;
    cross.which = 1;
    parallel_two_switch(r, cross.edges[1], cross.edges[2], g, h);
    out.bridge = cross.edges[2];
    out.matching = rebuild(r, matching, c1, c2,
                           concat(path_from(first, u1, u2), path_from(second, v2, v3)), factor);
  } else {
    std::string colors;
    for (Color c : cross.colors) colors += " " + to_string(c);
    throw Error(ErrorCode::CaseAnalysisExhausted, "cross edges colored" + colors +
                                                      " leave no switch and no parallel pair");
  }
  out.kind = CrossCaseKind::ParallelPair;
  out.cross_case = cross;
  return out;
}

MergeOutcome merge_in_temp_black(ColoredRealization& r, const Matching& matching,
                                 std::span<const Vertex> c1, std::span<const Vertex> c2) {
  const Color black = Color::black();
  auto lower_degree = [&](Vertex a, Vertex b) {
    return r.degree(a) != r.degree(b) ? r.degree(a) < r.degree(b) : a < b;
  };
  const Vertex min1 = *std::min_element(c1.begin(), c1.end(), lower_degree);
  const Vertex min2 = *std::min_element(c2.begin(), c2.end(), lower_degree);
  const bool u_in_first = lower_degree(min1, min2);
  const Vertex u = u_in_first ? min1 : min2;
  const auto u_cycle = u_in_first ? c1 : c2;
  const auto v_cycle = u_in_first ? c2 : c1;
  const Vertex v = *std::min_element(v_cycle.begin(), v_cycle.end(), [&](Vertex a, Vertex b) {
    return r.degree(a) != r.degree(b) ? r.degree(a) > r.degree(b) : a < b;
  });
  const auto [up, un] = cycle_neighbors(u_cycle, u);
  const Vertex w = std::min(up, un);

  MergeOutcome out;
  out.kind = CrossCaseKind::BlackSwitch;
  out.multi_switch = multi_switch(r, u, v, w, SwitchMode::Black);
  out.bridge = Edge(w, v);
  const auto left = path_to(u_cycle, w, u);
  const auto right = path_from(v_cycle, v, broken_or_lower_neighbor(r, v_cycle, v, black));
  out.matching = rebuild(r, matching, c1, c2, concat(left, right), black);
  return out;
}

}  // namespace

MergeOutcome merge_odd_cycle_pair(ColoredRealization& r, const Matching& matching,
                                  std::span<const Vertex> c1, std::span<const Vertex> c2,
                                  Color factor, MergeContext context) {
  const Color cycle_color = context == MergeContext::Residual ? factor : Color::black();
  if (matching.n() != r.n()) {
    throw Error(ErrorCode::PreconditionViolated, "matching vertex count differs");
  }
  check_cycle_pair(r, c1, c2, cycle_color);

  std::optional<Edge> bridge;
  for (Vertex a : c1) {
    for (Vertex b : c2) {
      const Edge e(a, b);
      if (r.color(e) == cycle_color && (!bridge || e < *bridge)) bridge = e;
    }
  }
  if (bridge) {
    const bool u_first = std::find(c1.begin(), c1.end(), bridge->u) != c1.end();
    const Vertex a = u_first ? bridge->u : bridge->v;
    const Vertex b = bridge->other(a);
    const auto [ap, an] = cycle_neighbors(c1, a);
    const auto [bp, bn] = cycle_neighbors(c2, b);
    MergeOutcome out;
    out.kind = CrossCaseKind::DirectBridge;
    out.bridge = *bridge;
    out.matching = rebuild(r, matching, c1, c2,
                           concat(path_to(c1, a, std::min(ap, an)), path_from(c2, b, std::min(bp, bn))),
                           cycle_color);
    return out;
  }
  if (context == MergeContext::TempBlack) return merge_in_temp_black(r, matching, c1, c2);
  return merge_in_residual(r, matching, c1, c2, factor);
}

void peel_one_factor(ColoredRealization& r, PipelineStats* stats) {
  const Color residual = Color::residual();
  const auto degree = r.declared_degree(residual);
  if (!degree || *degree < 1) throw Error(ErrorCode::NoResidual, "no Residual class of degree >= 1");
  if (r.n() % 2 != 0) throw Error(ErrorCode::OddVertexCount, "perfect matchings need even n");
  const int ones = r.count_declared(ColorKind::OneFactor);
  if (ones > 3 || r.count_declared(ColorKind::TwoFactor) > 0) {
    throw Error(ErrorCode::TooManyOneFactors,
                "peeling is guaranteed only with at most three 1-factors and no 2-factors");
  }
  const auto pi_before = r.pi();

  Matching matching(r.n());
  for (;;) {
    const auto cert = lemma_odd_certificate(r.graph_of(residual), matching);
    if (cert.matching.is_perfect()) {
      matching = cert.matching;
      break;
    }
    auto it = cert.cycles.begin();
    const auto& c1 = it->second;
    const auto& c2 = std::next(it)->second;
    auto outcome = merge_odd_cycle_pair(r, cert.matching, c1, c2, residual, MergeContext::Residual);
    if (outcome.matching.size() != cert.matching.size() + 1) {
      throw Error(ErrorCode::CaseAnalysisExhausted, "merge did not grow the matching");
    }
    if (stats) stats->record(outcome);
    matching = std::move(outcome.matching);
  }

  const Color fresh = Color::one_factor(ones);
  std::vector<Recolor> batch;
  for (const Edge& e : matching.edges()) batch.push_back({e, fresh});
  auto declared = r.declared();
  declared[residual] = *degree - 1;
  declared[fresh] = 1;
  r.reclassify(batch, std::move(declared), "peel_one_factor", to_string(fresh));
  if (r.pi() != pi_before) throw Error(ErrorCode::ConservationViolation, "peeling changed pi");
}

namespace {

std::vector<std::vector<Vertex>> cycles_of(const SimpleGraph& two_regular) {
  const int n = two_regular.n();
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::vector<std::vector<Vertex>> cycles;
  for (Vertex start = 0; start < n; ++start) {
    if (seen[static_cast<std::size_t>(start)]) continue;
    std::vector<Vertex> cycle{start};
    seen[static_cast<std::size_t>(start)] = 1;
    Vertex prev = start;
    Vertex cur = two_regular.neighbors(start).front();
    while (cur != start) {
      cycle.push_back(cur);
      seen[static_cast<std::size_t>(cur)] = 1;
      const auto nb = two_regular.neighbors(cur);
      const Vertex next = nb[0] == prev ? nb[1] : nb[0];
      prev = cur;
      cur = next;
    }
    cycles.push_back(std::move(cycle));
  }
  return cycles;
}

}  // namespace

void convert_two_factor(ColoredRealization& r, Color f, PipelineStats* stats) {
  if (f.kind != ColorKind::TwoFactor || r.declared_degree(f) != 2) {
    throw Error(ErrorCode::PreconditionViolated, to_string(f) + " is not a declared 2-factor");
  }
  if (r.n() % 2 != 0) throw Error(ErrorCode::OddVertexCount, "perfect matchings need even n");
  const auto pi_before = r.pi();
  const int n = r.n();
  const auto cycles = cycles_of(r.graph_of(f));

  Matching matching(n);
  std::vector<std::vector<Vertex>> odd;
  for (const auto& cycle : cycles) {
    if (cycle.size() % 2 == 0) {
      for (std::size_t i = 0; i < cycle.size(); i += 2) matching.add(Edge(cycle[i], cycle[i + 1]));
    } else {
      odd.push_back(cycle);
    }
  }

  // Pair odd cycles through existing Black bridges first, as many as possible.
  std::vector<int> owner(static_cast<std::size_t>(n), -1);
  for (std::size_t i = 0; i < odd.size(); ++i) {
    for (Vertex x : odd[i]) owner[static_cast<std::size_t>(x)] = static_cast<int>(i);
  }
  SimpleGraph bridges(static_cast<int>(odd.size()));
  for (const Edge& e : r.edges_of(Color::black())) {
    const int a = owner[static_cast<std::size_t>(e.u)];
    const int b = owner[static_cast<std::size_t>(e.v)];
    if (a >= 0 && b >= 0 && a != b) bridges.add_edge(Edge(a, b));
  }
  const Matching pairing = maximum_matching(bridges);
  std::vector<std::size_t> unpaired;
  for (std::size_t i = 0; i < odd.size(); ++i) {
    const Vertex j = pairing.mate(static_cast<Vertex>(i));
    if (j == kUnmatched) {
      unpaired.push_back(i);
    } else if (static_cast<std::size_t>(j) > i) {
      // The Black bridge joins two f-colored cycles; rebuild() checks colors per
      // edge, so match along the cycles and the bridge by hand here.
      std::optional<Edge> bridge;
      for (Vertex a : odd[i]) {
        for (Vertex b : odd[static_cast<std::size_t>(j)]) {
          if (r.color(a, b) == Color::black() && (!bridge || Edge(a, b) < *bridge)) bridge = Edge(a, b);
        }
      }
      const auto& ci = odd[i];
      const auto& cj = odd[static_cast<std::size_t>(j)];
      const bool u_in_i = std::find(ci.begin(), ci.end(), bridge->u) != ci.end();
      const Vertex a = u_in_i ? bridge->u : bridge->v;
      const Vertex b = bridge->other(a);
      const auto [ap, an] = cycle_neighbors(ci, a);
      const auto [bp, bn] = cycle_neighbors(cj, b);
      const auto path = concat(path_to(ci, a, std::min(ap, an)), path_from(cj, b, std::min(bp, bn)));
      for (std::size_t p = 0; p < path.size(); p += 2) matching.add(Edge(path[p], path[p + 1]));
      if (stats) ++stats->direct_bridges;
    }
  }

  for (std::size_t p = 0; p + 1 < unpaired.size(); p += 2) {
    const auto& c1 = odd[unpaired[p]];
    const auto& c2 = odd[unpaired[p + 1]];
    std::vector<Recolor> to_black;
    for (auto cycle : {std::span<const Vertex>(c1), std::span<const Vertex>(c2)}) {
      for (std::size_t i = 0; i < cycle.size(); ++i) {
        to_black.push_back({Edge(cycle[i], cycle[(i + 1) % cycle.size()]), Color::black()});
      }
    }
    r.apply_swap_batch(to_black, Conservation::Skip, "temp_black", to_string(f));
    auto outcome = merge_odd_cycle_pair(r, matching, c1, c2, f, MergeContext::TempBlack);
    if (stats) stats->record(outcome);
    matching = std::move(outcome.matching);
  }
  if (!matching.is_perfect()) {
    throw Error(ErrorCode::CaseAnalysisExhausted, "2-factor conversion left vertices uncovered");
  }

  const Color fresh = Color::one_factor(r.count_declared(ColorKind::OneFactor));
  std::vector<Recolor> batch;
  for (const Edge& e : matching.edges()) batch.push_back({e, fresh});
  for (const Edge& e : r.edges_of(f)) {
    if (!matching.contains(e)) batch.push_back({e, Color::black()});
  }
  std::map<Color, int> declared;
  for (const auto& [c, m] : r.declared()) {
    if (c == f) continue;
    if (c.kind == ColorKind::TwoFactor && c.index > f.index) {
      const Color shifted = Color::two_factor(c.index - 1);
      for (const Edge& e : r.edges_of(c)) batch.push_back({e, shifted});
      declared[shifted] = m;
    } else {
      declared[c] = m;
    }
  }
  declared[fresh] = 1;
  r.reclassify(batch, std::move(declared), "convert_two_factor", to_string(f) + "->" + to_string(fresh));
  if (r.pi() != pi_before) throw Error(ErrorCode::ConservationViolation, "conversion changed pi");
}

namespace {

void check_inputs(const DegreeSequence& pi, int k, bool need_even) {
  if (k < 0) throw Error(ErrorCode::InvalidArgument, "k must be non-negative");
  if (!erdos_gallai_graphic(pi)) throw Error(ErrorCode::NotGraphic, pi.to_string() + " is not graphic");
  if (!erdos_gallai_graphic(pi.minus(k))) {
    throw Error(ErrorCode::NotGraphicMinusK, "pi - " + std::to_string(k) + " is not graphic");
  }
  if (need_even && pi.n() % 2 != 0) {
    throw Error(ErrorCode::OddVertexCount, "1-factors need an even number of vertices");
  }
}

PipelineResult finish(const ColoredRealization& r, CertificateMode mode, PipelineStats stats) {
  r.validate();
  return {FactorCertificate::from_realization(r, mode), r.trace(),
          std::vector<Color>(r.coloring().begin(), r.coloring().end()), stats};
}

ColoredRealization four_ones_realization(const DegreeSequence& pi, int k, std::uint64_t seed,
                                         PipelineStats& stats) {
  check_inputs(pi, k, true);
  if (k < 1) throw Error(ErrorCode::InvalidArgument, "four-ones needs k >= 1");
  ColoredRealization r = kundu_realize(pi, k, seed);
  for (int i = 0; i < std::min(k, 4); ++i) peel_one_factor(r, &stats);
  return r;
}

}  // namespace

PipelineResult run_kundu(const DegreeSequence& pi, int k, std::uint64_t seed) {
  check_inputs(pi, k, false);
  return finish(kundu_realize(pi, k, seed), CertificateMode::Kundu, {});
}

PipelineResult run_four_ones(const DegreeSequence& pi, int k, std::uint64_t seed) {
  PipelineStats stats;
  auto r = four_ones_realization(pi, k, seed, stats);
  return finish(r, CertificateMode::FourOnes, stats);
}

PipelineResult run_half_k(const DegreeSequence& pi, int k, std::uint64_t seed) {
  check_inputs(pi, k, true);
  if (k < 4) {
    throw Error(ErrorCode::KTooSmall,
                "half-k needs k >= 4; floor(k/2) + 2 exceeds k below that, use four-ones");
  }
  PipelineStats stats;
  auto r = four_ones_realization(pi, k, seed, stats);
  const Color residual = Color::residual();

  if (k % 2 == 1) {
    // Fold the last peeled 1-factor back so the residual degree is even.
    const Color last = Color::one_factor(3);
    std::vector<Recolor> batch;
    for (const Edge& e : r.edges_of(last)) batch.push_back({e, residual});
    auto declared = r.declared();
    declared.erase(last);
    declared[residual] = k - 3;
    r.reclassify(batch, std::move(declared), "fold_one_factor", to_string(last));
  }

  const int residual_degree = *r.declared_degree(residual);
  std::vector<Recolor> batch;
  auto declared = r.declared();
  declared.erase(residual);
  const auto factors = petersen_two_factorize(r.graph_of(residual), residual_degree / 2);
  for (std::size_t j = 0; j < factors.size(); ++j) {
    const Color c = Color::two_factor(static_cast<int>(j));
    for (const Edge& e : factors[j].edges()) batch.push_back({e, c});
    declared[c] = 2;
  }
  r.reclassify(batch, std::move(declared), "petersen_two_factorize",
               std::to_string(factors.size()) + " two-factors");

  for (int j = static_cast<int>(factors.size()) - 1; j >= 0; --j) {
    convert_two_factor(r, Color::two_factor(j), &stats);
  }
  return finish(r, CertificateMode::HalfK, stats);
}

FactorCertificate four_ones(const DegreeSequence& pi, int k, std::uint64_t seed) {
  return run_four_ones(pi, k, seed).certificate;
}

FactorCertificate half_k(const DegreeSequence& pi, int k, std::uint64_t seed) {
  return run_half_k(pi, k, seed).certificate;
}

}  // namespace factorpack
