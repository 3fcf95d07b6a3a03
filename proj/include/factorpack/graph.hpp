#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace factorpack {

using Vertex = int;

// Unordered vertex pair, always stored as (min, max).
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  constexpr Edge() = default;
  constexpr Edge(Vertex a, Vertex b) : u(std::min(a, b)), v(std::max(a, b)) {}

  constexpr bool touches(Vertex x) const { return u == x || v == x; }
  constexpr Vertex other(Vertex x) const { return x == u ? v : u; }
  constexpr bool shares_vertex(const Edge& e) const {
    return touches(e.u) || touches(e.v);
  }

  friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

std::string to_string(const Edge& e);

// Index of {u, v} in the strict lower triangle, row-major by the larger end.
constexpr std::size_t pair_index(const Edge& e) {
  return static_cast<std::size_t>(e.v) * static_cast<std::size_t>(e.v - 1) / 2 +
         static_cast<std::size_t>(e.u);
}

constexpr std::size_t pair_count(int n) {
  return n < 2 ? 0 : static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2;
}

// A degree list. Entry i is the intended degree of vertex i; the sorted
// (non-increasing) view is what graphicality tests work with.
class DegreeSequence {
 public:
  DegreeSequence() = default;
  explicit DegreeSequence(std::vector<int> degrees);

  int n() const { return static_cast<int>(original_.size()); }
  int operator[](Vertex v) const { return original_[static_cast<std::size_t>(v)]; }

  const std::vector<int>& original() const { return original_; }
  const std::vector<int>& sorted() const { return sorted_; }

  long long sum() const;
  int min() const;
  int max() const;

  // The sequence (d_1 - k, ..., d_n - k), vertex labels kept.
  DegreeSequence minus(int k) const;

  std::string to_string() const;

  friend bool operator==(const DegreeSequence& a, const DegreeSequence& b) {
    return a.original_ == b.original_;
  }

 private:
  std::vector<int> original_;
  std::vector<int> sorted_;
};

// Simple undirected graph on vertices 0..n-1 with sorted adjacency lists.
class SimpleGraph {
 public:
  SimpleGraph() = default;
  explicit SimpleGraph(int n);
  // Throws InvalidEdge for loops/out-of-range ends, DuplicateEdge for repeats.
  SimpleGraph(int n, std::span<const Edge> edges);

  int n() const { return static_cast<int>(neighbors_.size()); }
  std::size_t edge_count() const { return edge_count_; }

  bool has_edge(Vertex a, Vertex b) const;
  bool has_edge(const Edge& e) const { return has_edge(e.u, e.v); }
  // Returns false if the edge was already present.
  bool add_edge(const Edge& e);
  bool remove_edge(const Edge& e);

  int degree(Vertex v) const {
    return static_cast<int>(neighbors_[static_cast<std::size_t>(v)].size());
  }
  std::span<const Vertex> neighbors(Vertex v) const {
    return neighbors_[static_cast<std::size_t>(v)];
  }

  std::vector<Edge> edges() const;
  std::vector<int> degrees() const;
  std::optional<int> regular_degree() const;
  SimpleGraph complement() const;

  friend bool operator==(const SimpleGraph& a, const SimpleGraph& b) {
    return a.neighbors_ == b.neighbors_;
  }

 private:
  std::vector<std::vector<Vertex>> neighbors_;
  std::size_t edge_count_ = 0;
};

}  // namespace factorpack
