#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "factorpack/graph.hpp"

namespace factorpack {

#ifndef FACTORPACK_FULL_VALIDATION
#define FACTORPACK_FULL_VALIDATION 1
#endif

inline constexpr bool kFullValidation = FACTORPACK_FULL_VALIDATION != 0;

enum class ColorKind : std::uint8_t { White, Black, Residual, OneFactor, TwoFactor };

// Color class of a vertex pair of K_n. White pairs are non-edges of the
// realization, Black edges belong to no declared factor, and the remaining
// kinds are the declared regular factors.
struct Color {
  ColorKind kind = ColorKind::White;
  std::uint8_t index = 0;

  static constexpr Color white() { return {ColorKind::White, 0}; }
  static constexpr Color black() { return {ColorKind::Black, 0}; }
  static constexpr Color residual() { return {ColorKind::Residual, 0}; }
  static constexpr Color one_factor(int i) {
    return {ColorKind::OneFactor, static_cast<std::uint8_t>(i)};
  }
  static constexpr Color two_factor(int i) {
    return {ColorKind::TwoFactor, static_cast<std::uint8_t>(i)};
  }

  constexpr bool is_declared_kind() const { return kind >= ColorKind::Residual; }

  friend constexpr auto operator<=>(const Color&, const Color&) = default;
};

std::string to_string(Color c);
// Inverse of to_string: "white", "black", "residual", "one:<i>", "two:<i>".
Color parse_color(std::string_view text);

struct Recolor {
  Edge edge;
  Color to;
};

struct ColorChange {
  Edge edge;
  Color from;
  Color to;
};

struct TraceBatch {
  std::string op;
  std::string params;
  std::vector<ColorChange> changes;
};

// Every recoloring applied to a realization, in order, from a snapshot.
struct SwitchTrace {
  int n = 0;
  std::vector<Color> initial;
  std::vector<TraceBatch> batches;

  std::vector<Color> replay() const;
};

enum class Conservation { Check, Skip };

// A total coloring of the pairs of K_n into White, Black and declared regular
// classes. The degree sequence is always derived from the non-White edges.
class ColoredRealization {
 public:
  // Throws MissingEdge/DuplicateEdge/InvalidEdge on bad coverage and
  // RegularityViolation if a declared class is not regular of its degree.
  // k defaults to the sum of the declared degrees.
  static ColoredRealization make(int n, std::span<const std::pair<Edge, Color>> assignments,
                                 std::map<Color, int> declared,
                                 std::optional<int> k = std::nullopt);

  // Black edges from `black`, the declared classes from `classes`, White elsewhere.
  static ColoredRealization from_graphs(const SimpleGraph& black,
                                        std::span<const std::pair<Color, SimpleGraph>> classes,
                                        int k);

  int n() const { return n_; }
  int k() const { return k_; }
  const DegreeSequence& pi() const { return pi_; }
  int degree(Vertex v) const { return pi_[v]; }

  Color color(const Edge& e) const { return colors_[pair_index(e)]; }
  Color color(Vertex a, Vertex b) const { return color(Edge(a, b)); }

  int color_degree(Vertex v, Color c) const;
  std::map<Color, int> color_degrees(Vertex v) const;
  std::vector<Vertex> neighbors_in(Vertex v, Color c) const;
  std::vector<Edge> edges_of(Color c) const;
  SimpleGraph graph_of(Color c) const;
  SimpleGraph realization_graph() const;

  const std::map<Color, int>& declared() const { return declared_; }
  std::optional<int> declared_degree(Color c) const;
  int count_declared(ColorKind kind) const;

  std::span<const Color> coloring() const { return colors_; }
  const SwitchTrace& trace() const { return trace_; }
  // Starts a fresh trace whose initial snapshot is the current coloring.
  void reset_trace();

  // Recolors the batch atomically. With Conservation::Check every per-vertex
  // per-color degree must be unchanged, otherwise ConservationViolation is
  // thrown and nothing is applied.
  void apply_swap_batch(std::span<const Recolor> batch, Conservation conservation,
                        std::string_view op, std::string params = {});

  // Recolors the batch and replaces the declared classes, then validates.
  // Used when classes are created, dissolved or renumbered.
  void reclassify(std::span<const Recolor> batch, std::map<Color, int> declared,
                  std::string_view op, std::string params = {});

  // Checks declared regularity, the derived degree sequence and that no
  // undeclared factor color is in use.
  void validate() const;

 private:
  ColoredRealization() = default;

  void check_batch_shape(std::span<const Recolor> batch) const;
  void record_and_apply(std::span<const Recolor> batch, std::string_view op,
                        std::string params);
  std::vector<std::map<Color, int>> degree_table() const;

  int n_ = 0;
  int k_ = 0;
  std::vector<Color> colors_;
  std::map<Color, int> declared_;
  DegreeSequence pi_;
  SwitchTrace trace_;
};

}  // namespace factorpack
