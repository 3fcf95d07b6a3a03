#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "factorpack/certificate.hpp"
#include "factorpack/coloring.hpp"
#include "factorpack/graph.hpp"
#include "factorpack/matching.hpp"
#include "factorpack/switch.hpp"

namespace factorpack {

// Three consecutive cycle vertices with non-increasing degrees.
struct TripleChoice {
  std::size_t cycle_id = 0;
  std::array<Vertex, 3> vertices{};
  // True when the triple runs against the listed cycle order.
  bool reversed = false;
};

// Scans forward triples first, then backward ones. `degrees` is indexed by vertex.
TripleChoice monotone_triple(std::span<const Vertex> cycle, std::span<const int> degrees,
                             std::size_t cycle_id = 0);

enum class MergeContext {
  Residual,   // cycles and bridge live in the factor class
  TempBlack,  // the cycles were recolored Black; the bridge is a Black edge
};

enum class CrossCaseKind { DirectBridge, WhiteSwitch, BlackSwitch, ParallelPair };

// The four pairs e1 = u1v2, e2 = u1v3, e3 = u2v2, e4 = u2v3 between two odd
// cycles, after orienting so that deg(u2) >= deg(v2).
struct CrossEdgeCase {
  std::array<Vertex, 3> first{};   // u1, u2, u3
  std::array<Vertex, 3> second{};  // v1, v2, v3
  std::array<Edge, 4> edges{};
  std::array<Color, 4> colors{};
  CrossCaseKind kind = CrossCaseKind::DirectBridge;
  // Switch cases: index into edges. ParallelPair: 0 for {e1,e4}, 1 for {e2,e3}.
  std::size_t which = 0;
};

struct MergeOutcome {
  Matching matching;
  CrossCaseKind kind = CrossCaseKind::DirectBridge;
  Edge bridge;
  std::optional<CrossEdgeCase> cross_case;
  std::optional<MultiSwitchReport> multi_switch;
};

// Joins two disjoint odd cycles of the factor class into one even alternating
// structure and returns `matching` with C1 and C2 fully covered.
MergeOutcome merge_odd_cycle_pair(ColoredRealization& r, const Matching& matching,
                                  std::span<const Vertex> c1, std::span<const Vertex> c2,
                                  Color factor, MergeContext context);

struct PipelineStats {
  std::size_t multi_switches = 0;
  std::size_t parallel_switches = 0;
  std::size_t direct_bridges = 0;
  std::size_t max_chain = 0;

  std::size_t switches() const { return multi_switches + parallel_switches; }
  void record(const MergeOutcome& outcome);
};

// Moves one perfect matching out of the Residual class into a new OneFactor
// class. Needs at most three existing OneFactor classes and no TwoFactor ones.
void peel_one_factor(ColoredRealization& r, PipelineStats* stats = nullptr);

// Splits a 2r-regular graph into r edge-disjoint spanning 2-regular graphs.
std::vector<SimpleGraph> petersen_two_factorize(const SimpleGraph& g, int r);

// Replaces the 2-factor class f by a new OneFactor class; the leftover
// edges of f become Black.
void convert_two_factor(ColoredRealization& r, Color f, PipelineStats* stats = nullptr);

struct PipelineResult {
  FactorCertificate certificate;
  SwitchTrace trace;
  std::vector<Color> final_coloring;
  PipelineStats stats;
};

PipelineResult run_kundu(const DegreeSequence& pi, int k, std::uint64_t seed);
PipelineResult run_four_ones(const DegreeSequence& pi, int k, std::uint64_t seed);
PipelineResult run_half_k(const DegreeSequence& pi, int k, std::uint64_t seed);

// min(k, 4) one-factors plus a (k - 4)-regular residual (empty for k <= 4).
FactorCertificate four_ones(const DegreeSequence& pi, int k, std::uint64_t seed);
// floor(k/2) + 2 edge-disjoint one-factors; k >= 4.
FactorCertificate half_k(const DegreeSequence& pi, int k, std::uint64_t seed);

}  // namespace factorpack
