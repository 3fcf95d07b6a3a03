#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "factorpack/coloring.hpp"
#include "factorpack/graph.hpp"

namespace factorpack {

// Terminal color of a multi-switch chain. White needs deg(u) >= deg(v),
// Black needs deg(u) <= deg(v), degrees taken in the realization.
enum class SwitchMode { White, Black };

constexpr Color terminal_color(SwitchMode mode) {
  return mode == SwitchMode::White ? Color::white() : Color::black();
}

// One length-two path u - midpoint - v of the chain, colors before the switch.
struct ChainLink {
  Vertex midpoint = 0;
  Edge x;  // {u, midpoint}
  Edge y;  // {midpoint, v}
  Color x_color;
  Color y_color;
};

struct MultiSwitchReport {
  std::vector<ChainLink> chain;
  // Chain indices whose x/y colors were exchanged, ascending.
  std::vector<std::size_t> swapped;
  Edge z1;                       // x of the second link
  std::optional<Edge> z2;        // c-colored edge at u taken after z3, if that happened
  std::optional<std::size_t> z3_index;  // chain index whose y played z3
  bool z2_consumed = false;
  Color terminal;

  std::size_t length() const { return chain.size(); }
  std::vector<Vertex> midpoints() const;
  std::vector<Edge> recolored_edges() const;
};

// Recolors a chain of length-two u-v paths so that x1 = {u,w} takes the color
// c of y1 = {w,v} and y1 takes the terminal color, keeping every vertex's
// degree in every color. Only edges at u or v change; z3_hint (a c-colored
// edge at v) is never touched; z2_hint (a c-colored edge at u, not the only
// one) is used only once a c-colored edge at v other than y1 has entered the chain.
MultiSwitchReport multi_switch(ColoredRealization& r, Vertex u, Vertex v, Vertex w,
                               SwitchMode mode, std::optional<Edge> z3_hint = std::nullopt,
                               std::optional<Edge> z2_hint = std::nullopt);

// e, f share color alpha and g, h share beta != alpha, the four edges forming
// an alternating 4-cycle; afterwards e, f are beta and g, h are alpha.
void parallel_two_switch(ColoredRealization& r, Edge e, Edge f, Edge g, Edge h);

}  // namespace factorpack
