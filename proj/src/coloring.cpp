#include "factorpack/coloring.hpp"

#include <charconv>
#include <set>

#include "factorpack/error.hpp"

namespace factorpack {

std::string to_string(Color c) {
  switch (c.kind) {
    case ColorKind::White: return "white";
    case ColorKind::Black: return "black";
    case ColorKind::Residual: return "residual";
    case ColorKind::OneFactor: return "one:" + std::to_string(c.index);
    case ColorKind::TwoFactor: return "two:" + std::to_string(c.index);
  }
  return "?";
}

Color parse_color(std::string_view text) {
  if (text == "white") return Color::white();
  if (text == "black") return Color::black();
  if (text == "residual") return Color::residual();
  auto indexed = [&](std::string_view prefix, ColorKind kind) -> std::optional<Color> {
    if (!text.starts_with(prefix)) return std::nullopt;
    int index = -1;
    const auto digits = text.substr(prefix.size());
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), index);
    if (ec != std::errc() || ptr != digits.data() + digits.size() || index < 0 || index > 255) {
      throw Error(ErrorCode::ParseError, "bad color index in '" + std::string(text) + "'");
    }
    return Color{kind, static_cast<std::uint8_t>(index)};
  };
  if (auto c = indexed("one:", ColorKind::OneFactor)) return *c;
  if (auto c = indexed("two:", ColorKind::TwoFactor)) return *c;
  throw Error(ErrorCode::ParseError, "unknown color '" + std::string(text) + "'");
}

std::vector<Color> SwitchTrace::replay() const {
  std::vector<Color> colors = initial;
  for (const auto& batch : batches) {
    for (const auto& change : batch.changes) colors[pair_index(change.edge)] = change.to;
  }
  return colors;
}

namespace {

DegreeSequence derive_pi(int n, std::span<const Color> colors) {
  std::vector<int> degrees(static_cast<std::size_t>(n), 0);
  for (Vertex b = 1; b < n; ++b) {
    for (Vertex a = 0; a < b; ++a) {
      if (colors[pair_index(Edge(a, b))].kind != ColorKind::White) {
        ++degrees[static_cast<std::size_t>(a)];
        ++degrees[static_cast<std::size_t>(b)];
      }
    }
  }
  return DegreeSequence(std::move(degrees));
}

}  // namespace

ColoredRealization ColoredRealization::make(int n,
                                            std::span<const std::pair<Edge, Color>> assignments,
                                            std::map<Color, int> declared,
                                            std::optional<int> k) {
  if (n < 2) throw Error(ErrorCode::InvalidArgument, "need n >= 2, got " + std::to_string(n));
  ColoredRealization r;
  r.n_ = n;
  r.colors_.assign(pair_count(n), Color::white());
  std::vector<char> seen(pair_count(n), 0);
  for (const auto& [e, c] : assignments) {
    if (e.u == e.v || e.u < 0 || e.v >= n) {
      throw Error(ErrorCode::InvalidEdge, "pair " + to_string(e) + " not in K_" + std::to_string(n));
    }
    const auto idx = pair_index(e);
    if (seen[idx]) throw Error(ErrorCode::DuplicateEdge, "pair " + to_string(e) + " assigned twice");
    seen[idx] = 1;
    r.colors_[idx] = c;
  }
  for (Vertex b = 1; b < n; ++b) {
    for (Vertex a = 0; a < b; ++a) {
      if (!seen[pair_index(Edge(a, b))]) {
        throw Error(ErrorCode::MissingEdge, "pair " + to_string(Edge(a, b)) + " has no color");
      }
    }
  }
  int sum = 0;
  for (const auto& [c, m] : declared) {
    if (!c.is_declared_kind()) {
      throw Error(ErrorCode::InvalidArgument, "only factor classes take a degree: " + to_string(c));
    }
    sum += m;
  }
  r.declared_ = std::move(declared);
  r.k_ = k.value_or(sum);
  r.pi_ = derive_pi(n, r.colors_);
  r.validate();
  r.reset_trace();
  return r;
}

ColoredRealization ColoredRealization::from_graphs(
    const SimpleGraph& black, std::span<const std::pair<Color, SimpleGraph>> classes, int k) {
  const int n = black.n();
  std::vector<std::pair<Edge, Color>> assignment;
  std::vector<Color> colors(pair_count(n), Color::white());
  std::vector<char> taken(pair_count(n), 0);
  std::map<Color, int> declared;
  auto place = [&](const SimpleGraph& g, Color c) {
    for (const Edge& e : g.edges()) {
      auto idx = pair_index(e);
      if (taken[idx]) throw Error(ErrorCode::DuplicateEdge, "edge " + to_string(e) + " in two classes");
      taken[idx] = 1;
      colors[idx] = c;
    }
  };
  place(black, Color::black());
  for (const auto& [c, g] : classes) {
    place(g, c);
    declared[c] = g.regular_degree().value_or(-1);
  }
  assignment.reserve(colors.size());
  for (Vertex b = 1; b < n; ++b) {
    for (Vertex a = 0; a < b; ++a) assignment.emplace_back(Edge(a, b), colors[pair_index(Edge(a, b))]);
  }
  return make(n, assignment, std::move(declared), k);
}

int ColoredRealization::color_degree(Vertex v, Color c) const {
  int count = 0;
  for (Vertex x = 0; x < n_; ++x) {
    if (x != v && colors_[pair_index(Edge(v, x))] == c) ++count;
  }
  return count;
}

std::map<Color, int> ColoredRealization::color_degrees(Vertex v) const {
  std::map<Color, int> out;
  for (Vertex x = 0; x < n_; ++x) {
    if (x != v) ++out[colors_[pair_index(Edge(v, x))]];
  }
  return out;
}

std::vector<Vertex> ColoredRealization::neighbors_in(Vertex v, Color c) const {
  std::vector<Vertex> out;
  for (Vertex x = 0; x < n_; ++x) {
    if (x != v && colors_[pair_index(Edge(v, x))] == c) out.push_back(x);
  }
  return out;
}

std::vector<Edge> ColoredRealization::edges_of(Color c) const {
  std::vector<Edge> out;
  for (Vertex a = 0; a < n_; ++a) {
    for (Vertex b = a + 1; b < n_; ++b) {
      if (colors_[pair_index(Edge(a, b))] == c) out.emplace_back(a, b);
    }
  }
  return out;
}

SimpleGraph ColoredRealization::graph_of(Color c) const {
  const auto edges = edges_of(c);
  return SimpleGraph(n_, edges);
}

SimpleGraph ColoredRealization::realization_graph() const {
  SimpleGraph g(n_);
  for (Vertex a = 0; a < n_; ++a) {
    for (Vertex b = a + 1; b < n_; ++b) {
      if (colors_[pair_index(Edge(a, b))].kind != ColorKind::White) g.add_edge(Edge(a, b));
    }
  }
  return g;
}

std::optional<int> ColoredRealization::declared_degree(Color c) const {
  auto it = declared_.find(c);
  if (it == declared_.end()) return std::nullopt;
  return it->second;
}

int ColoredRealization::count_declared(ColorKind kind) const {
  int count = 0;
  for (const auto& [c, m] : declared_) count += c.kind == kind ? 1 : 0;
  return count;
}

void ColoredRealization::reset_trace() {
  trace_ = SwitchTrace{n_, colors_, {}};
}

std::vector<std::map<Color, int>> ColoredRealization::degree_table() const {
  std::vector<std::map<Color, int>> table(static_cast<std::size_t>(n_));
  for (Vertex b = 1; b < n_; ++b) {
    for (Vertex a = 0; a < b; ++a) {
      const Color c = colors_[pair_index(Edge(a, b))];
      ++table[static_cast<std::size_t>(a)][c];
      ++table[static_cast<std::size_t>(b)][c];
    }
  }
  return table;
}

void ColoredRealization::check_batch_shape(std::span<const Recolor> batch) const {
  std::set<Edge> seen;
  for (const auto& [e, to] : batch) {
    if (e.u == e.v || e.u < 0 || e.v >= n_) {
      throw Error(ErrorCode::InvalidEdge, "pair " + to_string(e) + " not in K_" + std::to_string(n_));
    }
    if (!seen.insert(e).second) {
      throw Error(ErrorCode::DuplicateEdge, "pair " + to_string(e) + " twice in one batch");
    }
    if (color(e) == to) {
      throw Error(ErrorCode::PreconditionViolated,
                  "recoloring " + to_string(e) + " to its current color " + to_string(to));
    }
  }
}

void ColoredRealization::record_and_apply(std::span<const Recolor> batch, std::string_view op,
                                          std::string params) {
  TraceBatch record{std::string(op), std::move(params), {}};
  record.changes.reserve(batch.size());
  std::vector<int> degrees = pi_.original();
  for (const auto& [e, to] : batch) {
    auto& slot = colors_[pair_index(e)];
    record.changes.push_back({e, slot, to});
    const int delta = (to.kind != ColorKind::White) - (slot.kind != ColorKind::White);
    degrees[static_cast<std::size_t>(e.u)] += delta;
    degrees[static_cast<std::size_t>(e.v)] += delta;
    slot = to;
  }
  pi_ = DegreeSequence(std::move(degrees));
  trace_.batches.push_back(std::move(record));
}

void ColoredRealization::apply_swap_batch(std::span<const Recolor> batch,
                                          Conservation conservation, std::string_view op,
                                          std::string params) {
  if (batch.empty()) return;
  check_batch_shape(batch);
  if (conservation == Conservation::Check) {
    // Endpoint check: only endpoints of recolored pairs can change degree.
    std::map<std::pair<Vertex, Color>, int> delta;
    for (const auto& [e, to] : batch) {
      const Color from = color(e);
      for (Vertex x : {e.u, e.v}) {
        --delta[{x, from}];
        ++delta[{x, to}];
      }
    }
    for (const auto& [key, d] : delta) {
      if (d != 0) {
        throw Error(ErrorCode::ConservationViolation,
                    std::string(op) + ": vertex " + std::to_string(key.first) + " color " +
                        to_string(key.second) + " delta " + std::to_string(d));
      }
    }
  }
  if (kFullValidation && conservation == Conservation::Check) {
    const auto before = degree_table();
    const auto saved = colors_;
    const auto saved_pi = pi_;
    record_and_apply(batch, op, std::move(params));
    const auto after = degree_table();
    for (Vertex v = 0; v < n_; ++v) {
      if (before[static_cast<std::size_t>(v)] != after[static_cast<std::size_t>(v)]) {
        colors_ = saved;
        pi_ = saved_pi;
        trace_.batches.pop_back();
        throw Error(ErrorCode::ConservationViolation,
                    std::string(op) + ": color degrees changed at vertex " + std::to_string(v));
      }
    }
    return;
  }
  record_and_apply(batch, op, std::move(params));
}

void ColoredRealization::reclassify(std::span<const Recolor> batch, std::map<Color, int> declared,
                                    std::string_view op, std::string params) {
  check_batch_shape(batch);
  const auto saved = colors_;
  const auto saved_declared = declared_;
  const auto saved_pi = pi_;
  const auto saved_batches = trace_.batches.size();
  record_and_apply(batch, op, std::move(params));
  declared_ = std::move(declared);
  try {
    validate();
  } catch (...) {
    colors_ = saved;
    declared_ = saved_declared;
    pi_ = saved_pi;
    trace_.batches.resize(saved_batches);
    throw;
  }
}

void ColoredRealization::validate() const {
  const auto table = degree_table();
  for (Vertex v = 0; v < n_; ++v) {
    const auto& row = table[static_cast<std::size_t>(v)];
    int non_white = 0;
    for (const auto& [c, count] : row) {
      if (c.kind != ColorKind::White) non_white += count;
      if (c.is_declared_kind() && !declared_.contains(c)) {
        throw Error(ErrorCode::RegularityViolation,
                    "color " + to_string(c) + " used at vertex " + std::to_string(v) +
                        " but not declared");
      }
    }
    if (non_white != pi_[v]) {
      throw Error(ErrorCode::RegularityViolation,
                  "degree of vertex " + std::to_string(v) + " drifted from the coloring");
    }
    for (const auto& [c, m] : declared_) {
      auto it = row.find(c);
      const int have = it == row.end() ? 0 : it->second;
      if (have != m) {
        throw Error(ErrorCode::RegularityViolation,
                    "vertex " + std::to_string(v) + " has " + std::to_string(have) + " edges of " +
                        to_string(c) + ", declared " + std::to_string(m));
      }
    }
  }
}

}  // namespace factorpack
