#include <algorithm>
#include <functional>

#include "factorpack/error.hpp"
#include "factorpack/factorize.hpp"

namespace factorpack {

namespace {

struct Arc {
  Vertex from;
  Vertex to;
};

// Orients every edge along an Euler circuit of its component, so each vertex
// of a 2r-regular graph ends up with r arcs out and r arcs in.
std::vector<Arc> euler_orientation(const SimpleGraph& g) {
  const auto n = static_cast<std::size_t>(g.n());
  const auto edges = g.edges();
  std::vector<std::vector<std::pair<Vertex, std::size_t>>> incident(n);
  for (std::size_t id = 0; id < edges.size(); ++id) {
    incident[static_cast<std::size_t>(edges[id].u)].emplace_back(edges[id].v, id);
    incident[static_cast<std::size_t>(edges[id].v)].emplace_back(edges[id].u, id);
  }
  std::vector<char> used(edges.size(), 0);
  std::vector<std::size_t> cursor(n, 0);
  std::vector<Arc> arcs;
  arcs.reserve(edges.size());
  for (Vertex start = 0; start < g.n(); ++start) {
    std::vector<Vertex> stack{start};
    std::vector<Vertex> circuit;
    while (!stack.empty()) {
      const Vertex v = stack.back();
      auto& at = cursor[static_cast<std::size_t>(v)];
      const auto& inc = incident[static_cast<std::size_t>(v)];
      while (at < inc.size() && used[inc[at].second]) ++at;
      if (at < inc.size()) {
        used[inc[at].second] = 1;
        stack.push_back(inc[at].first);
      } else {
        circuit.push_back(v);
        stack.pop_back();
      }
    }
    for (std::size_t i = 0; i + 1 < circuit.size(); ++i) arcs.push_back({circuit[i], circuit[i + 1]});
  }
  return arcs;
}

// Kuhn's augmenting paths over the out-copy / in-copy bipartite graph.
class BipartiteMatcher {
 public:
  BipartiteMatcher(std::size_t n, const std::vector<std::vector<Vertex>>& out)
      : out_(out), match_in_(n, -1), seen_(n, 0) {}

  std::vector<Vertex> perfect() {
    for (Vertex v = 0; v < static_cast<Vertex>(out_.size()); ++v) {
      std::fill(seen_.begin(), seen_.end(), 0);
      if (!augment(v)) {
        throw Error(ErrorCode::NotEvenRegular, "orientation has no perfect in/out matching");
      }
    }
    std::vector<Vertex> head_of(out_.size(), -1);
    for (std::size_t to = 0; to < match_in_.size(); ++to) {
      head_of[static_cast<std::size_t>(match_in_[to])] = static_cast<Vertex>(to);
    }
    return head_of;
  }

 private:
  bool augment(Vertex v) {
    for (Vertex to : out_[static_cast<std::size_t>(v)]) {
      auto& seen = seen_[static_cast<std::size_t>(to)];
      if (seen) continue;
      seen = 1;
      auto& owner = match_in_[static_cast<std::size_t>(to)];
      if (owner == -1 || augment(owner)) {
        owner = v;
        return true;
      }
    }
    return false;
  }

  const std::vector<std::vector<Vertex>>& out_;
  std::vector<Vertex> match_in_;
  std::vector<char> seen_;
};

}  // namespace

std::vector<SimpleGraph> petersen_two_factorize(const SimpleGraph& g, int r) {
  const auto degree = g.regular_degree();
  if (r < 0 || !degree || *degree != 2 * r) {
    throw Error(ErrorCode::NotEvenRegular, "graph is not " + std::to_string(2 * r) + "-regular");
  }
  const auto n = static_cast<std::size_t>(g.n());
  std::vector<std::vector<Vertex>> out(n);
  for (const Arc& a : euler_orientation(g)) out[static_cast<std::size_t>(a.from)].push_back(a.to);
  for (auto& heads : out) std::sort(heads.begin(), heads.end());

  std::vector<SimpleGraph> factors;
  for (int round = 0; round < r; ++round) {
    BipartiteMatcher matcher(n, out);
    const auto head_of = matcher.perfect();
    SimpleGraph factor(g.n());
    for (std::size_t v = 0; v < n; ++v) {
      factor.add_edge(Edge(static_cast<Vertex>(v), head_of[v]));
      auto& heads = out[v];
      heads.erase(std::find(heads.begin(), heads.end(), head_of[v]));
    }
    factors.push_back(std::move(factor));
  }
  return factors;
}

}  // namespace factorpack
