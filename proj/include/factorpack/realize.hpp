#pragma once

#include <cstdint>
#include <optional>
#include <span>

#include "factorpack/coloring.hpp"
#include "factorpack/graph.hpp"

namespace factorpack {

bool erdos_gallai_graphic(std::span<const int> degrees);
bool erdos_gallai_graphic(const DegreeSequence& seq);

// Vertex v receives degree seq[v]. Repeatedly joins the vertex with the most
// remaining demand to the next-highest ones; ties go to the lowest id.
SimpleGraph havel_hakimi_realize(const DegreeSequence& seq);

// Up to `steps` random two-switch attempts; deterministic for a given seed.
SimpleGraph switch_randomize(SimpleGraph g, std::uint64_t steps, std::uint64_t seed);

// Spanning k-regular subgraph of host, if one exists (exact, via the
// degree-constrained-subgraph gadget and a maximum matching).
std::optional<SimpleGraph> find_regular_factor(const SimpleGraph& host, int k);

// Largest edge count of a subgraph of host with maximum degree <= bound.
std::size_t max_bounded_subgraph_size(const SimpleGraph& host, int bound);

struct KunduOptions {
  // Two-switch attempts spent hill-climbing; 0 picks 200 * n^2.
  std::uint64_t climb_steps = 0;
  bool exact_fallback = true;
  int exact_max_n = 12;
  std::uint64_t exact_node_budget = 20'000'000;
};

// Realization of pi whose Residual class (declared degree k) is a spanning
// k-regular subgraph; Black holds the other edges. A nonzero seed shuffles the
// result with random color-preserving two-switches. The trace starts empty.
ColoredRealization kundu_realize(const DegreeSequence& pi, int k, std::uint64_t seed,
                                 const KunduOptions& options = {});

}  // namespace factorpack
