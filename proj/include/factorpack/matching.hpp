#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "factorpack/graph.hpp"

namespace factorpack {

inline constexpr Vertex kUnmatched = -1;

class Matching {
 public:
  explicit Matching(int n = 0) : mate_(static_cast<std::size_t>(n), kUnmatched) {}
  // Throws InvalidInitial if two edges share a vertex.
  static Matching from_edges(int n, std::span<const Edge> edges);

  int n() const { return static_cast<int>(mate_.size()); }
  std::size_t size() const { return size_; }
  bool covers(Vertex v) const { return mate_[static_cast<std::size_t>(v)] != kUnmatched; }
  Vertex mate(Vertex v) const { return mate_[static_cast<std::size_t>(v)]; }
  bool contains(const Edge& e) const { return mate(e.u) == e.v; }
  bool is_perfect() const { return 2 * size_ == mate_.size(); }

  void add(const Edge& e);
  void remove(const Edge& e);

  std::vector<Edge> edges() const;
  std::vector<Vertex> uncovered() const;

  friend bool operator==(const Matching&, const Matching&) = default;

 private:
  std::vector<Vertex> mate_;
  std::size_t size_ = 0;
};

// Toggles an even alternating path that starts at an uncovered vertex:
// the uncovered vertex moves to the last vertex of the path.
Matching toggle_alternating_path(const Matching& m, std::span<const Vertex> path);

// Maximum cardinality matching by alternating-tree search with blossom
// contraction, grown from `initial`.
Matching maximum_matching(const SimpleGraph& g, const Matching& initial);
Matching maximum_matching(const SimpleGraph& g);

// Maximum matching whose uncovered vertices each sit on a fully matched odd
// cycle, the cycles pairwise disjoint. Each cycle is listed starting at its
// uncovered vertex; cycle edges (c1,c2), (c3,c4), ... are matched.
struct OddCycleCertificate {
  Matching matching;
  std::map<Vertex, std::vector<Vertex>> cycles;
};

// Requires g to be r-regular with r >= 1 (NotRegular otherwise).
OddCycleCertificate lemma_odd_certificate(const SimpleGraph& g, const Matching& initial);
OddCycleCertificate lemma_odd_certificate(const SimpleGraph& g);

// Linear scan of the certificate conditions (maximality excluded). Returns
// human-readable violations; empty means sound.
std::vector<std::string> check_odd_cycle_certificate(const SimpleGraph& g,
                                                     const OddCycleCertificate& cert);

}  // namespace factorpack
