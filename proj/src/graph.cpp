#include "factorpack/graph.hpp"

#include <functional>
#include <numeric>
#include <sstream>

#include "factorpack/error.hpp"

namespace factorpack {

std::string to_string(const Edge& e) {
  return "{" + std::to_string(e.u) + "," + std::to_string(e.v) + "}";
}

DegreeSequence::DegreeSequence(std::vector<int> degrees)
    : original_(std::move(degrees)), sorted_(original_) {
  std::sort(sorted_.begin(), sorted_.end(), std::greater<>());
}

long long DegreeSequence::sum() const {
  return std::accumulate(original_.begin(), original_.end(), 0LL);
}

int DegreeSequence::min() const { return sorted_.empty() ? 0 : sorted_.back(); }

int DegreeSequence::max() const { return sorted_.empty() ? 0 : sorted_.front(); }

DegreeSequence DegreeSequence::minus(int k) const {
  std::vector<int> out(original_);
  for (int& d : out) d -= k;
  return DegreeSequence(std::move(out));
}

std::string DegreeSequence::to_string() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < original_.size(); ++i) {
    if (i) os << ",";
    os << original_[i];
  }
  os << ")";
  return os.str();
}

SimpleGraph::SimpleGraph(int n) : neighbors_(static_cast<std::size_t>(std::max(n, 0))) {}

SimpleGraph::SimpleGraph(int n, std::span<const Edge> edges) : SimpleGraph(n) {
  for (const Edge& e : edges) {
    if (e.u == e.v || e.u < 0 || e.v >= n) {
      throw Error(ErrorCode::InvalidEdge, "edge " + to_string(e) + " invalid for n=" +
                                              std::to_string(n));
    }
    if (!add_edge(e)) {
      throw Error(ErrorCode::DuplicateEdge, "edge " + to_string(e) + " listed twice");
    }
  }
}

bool SimpleGraph::has_edge(Vertex a, Vertex b) const {
  if (a == b || a < 0 || b < 0 || a >= n() || b >= n()) return false;
  const auto& adj = neighbors_[static_cast<std::size_t>(a)];
  return std::binary_search(adj.begin(), adj.end(), b);
}

bool SimpleGraph::add_edge(const Edge& e) {
  if (has_edge(e)) return false;
  auto insert_sorted = [](std::vector<Vertex>& adj, Vertex x) {
    adj.insert(std::lower_bound(adj.begin(), adj.end(), x), x);
  };
  insert_sorted(neighbors_[static_cast<std::size_t>(e.u)], e.v);
  insert_sorted(neighbors_[static_cast<std::size_t>(e.v)], e.u);
  ++edge_count_;
  return true;
}

bool SimpleGraph::remove_edge(const Edge& e) {
  if (!has_edge(e)) return false;
  auto erase_sorted = [](std::vector<Vertex>& adj, Vertex x) {
    adj.erase(std::lower_bound(adj.begin(), adj.end(), x));
  };
  erase_sorted(neighbors_[static_cast<std::size_t>(e.u)], e.v);
  erase_sorted(neighbors_[static_cast<std::size_t>(e.v)], e.u);
  --edge_count_;
  return true;
}

std::vector<Edge> SimpleGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex a = 0; a < n(); ++a) {
    for (Vertex b : neighbors(a)) {
      if (a < b) out.emplace_back(a, b);
    }
  }
  return out;
}

std::vector<int> SimpleGraph::degrees() const {
  std::vector<int> out;
  out.reserve(neighbors_.size());
  for (const auto& adj : neighbors_) out.push_back(static_cast<int>(adj.size()));
  return out;
}

std::optional<int> SimpleGraph::regular_degree() const {
  if (neighbors_.empty()) return 0;
  const int r = degree(0);
  for (Vertex v = 1; v < n(); ++v) {
    if (degree(v) != r) return std::nullopt;
  }
  return r;
}

SimpleGraph SimpleGraph::complement() const {
  SimpleGraph out(n());
  for (Vertex a = 0; a < n(); ++a) {
    for (Vertex b = a + 1; b < n(); ++b) {
      if (!has_edge(a, b)) out.add_edge(Edge(a, b));
    }
  }
  return out;
}

}  // namespace factorpack
