#include "factorpack/matching.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

#include "factorpack/error.hpp"

namespace factorpack {

Matching Matching::from_edges(int n, std::span<const Edge> edges) {
  Matching m(n);
  for (const Edge& e : edges) {
    if (e.u == e.v || e.u < 0 || e.v >= n || m.covers(e.u) || m.covers(e.v)) {
      throw Error(ErrorCode::InvalidInitial, "edge " + to_string(e) + " breaks the matching");
    }
    m.add(e);
  }
  return m;
}

void Matching::add(const Edge& e) {
  mate_[static_cast<std::size_t>(e.u)] = e.v;
  mate_[static_cast<std::size_t>(e.v)] = e.u;
  ++size_;
}

void Matching::remove(const Edge& e) {
  mate_[static_cast<std::size_t>(e.u)] = kUnmatched;
  mate_[static_cast<std::size_t>(e.v)] = kUnmatched;
  --size_;
}

std::vector<Edge> Matching::edges() const {
  std::vector<Edge> out;
  out.reserve(size_);
  for (Vertex v = 0; v < n(); ++v) {
    if (mate(v) > v) out.emplace_back(v, mate(v));
  }
  return out;
}

std::vector<Vertex> Matching::uncovered() const {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < n(); ++v) {
    if (!covers(v)) out.push_back(v);
  }
  return out;
}

Matching toggle_alternating_path(const Matching& m, std::span<const Vertex> path) {
  if (path.size() <= 1) return m;
  if ((path.size() - 1) % 2 != 0) {
    throw Error(ErrorCode::OddLengthPath,
                "path has " + std::to_string(path.size() - 1) + " edges");
  }
  if (m.covers(path.front())) {
    throw Error(ErrorCode::NotAlternating, "path must start at an uncovered vertex");
  }
  std::set<Vertex> distinct(path.begin(), path.end());
  if (distinct.size() != path.size()) {
    throw Error(ErrorCode::NotAlternating, "path repeats a vertex");
  }
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    const bool matched = m.contains(Edge(path[i], path[i + 1]));
    if (matched != (i % 2 == 1)) {
      throw Error(ErrorCode::NotAlternating,
                  "edge " + to_string(Edge(path[i], path[i + 1])) + " breaks alternation");
    }
  }
  Matching out = m;
  for (std::size_t i = 1; i + 1 < path.size(); i += 2) out.remove(Edge(path[i], path[i + 1]));
  for (std::size_t i = 0; i + 1 < path.size(); i += 2) out.add(Edge(path[i], path[i + 1]));
  return out;
}

namespace {

// Edmonds' search from a single root; bases track contracted blossoms.
class BlossomSearch {
 public:
  BlossomSearch(const SimpleGraph& g, std::vector<Vertex>& mate)
      : g_(g), mate_(mate), n_(static_cast<std::size_t>(g.n())) {}

  bool augment_from(Vertex root) {
    const Vertex end = find_path(root);
    if (end == kUnmatched) return false;
    for (Vertex v = end; v != kUnmatched;) {
      const Vertex pv = parent_[at(v)];
      const Vertex next = mate_[at(pv)];
      mate_[at(v)] = pv;
      mate_[at(pv)] = v;
      v = next;
    }
    return true;
  }

 private:
  static std::size_t at(Vertex v) { return static_cast<std::size_t>(v); }

  Vertex lca(Vertex a, Vertex b) {
    std::vector<char> seen(n_, 0);
    for (;;) {
      a = base_[at(a)];
      seen[at(a)] = 1;
      if (mate_[at(a)] == kUnmatched) break;
      a = parent_[at(mate_[at(a)])];
    }
    for (;;) {
      b = base_[at(b)];
      if (seen[at(b)]) return b;
      b = parent_[at(mate_[at(b)])];
    }
  }

  void mark_path(Vertex v, Vertex b, Vertex child) {
    while (base_[at(v)] != b) {
      in_blossom_[at(base_[at(v)])] = 1;
      in_blossom_[at(base_[at(mate_[at(v)])])] = 1;
      parent_[at(v)] = child;
      child = mate_[at(v)];
      v = parent_[at(mate_[at(v)])];
    }
  }

  Vertex find_path(Vertex root) {
    used_.assign(n_, 0);
    parent_.assign(n_, kUnmatched);
    base_.resize(n_);
    std::iota(base_.begin(), base_.end(), 0);
    used_[at(root)] = 1;
    std::deque<Vertex> queue{root};
    while (!queue.empty()) {
      const Vertex v = queue.front();
      queue.pop_front();
      for (Vertex to : g_.neighbors(v)) {
        if (base_[at(v)] == base_[at(to)] || mate_[at(v)] == to) continue;
        if (to == root || (mate_[at(to)] != kUnmatched && parent_[at(mate_[at(to)])] != kUnmatched)) {
          const Vertex cur = lca(v, to);
          in_blossom_.assign(n_, 0);
          mark_path(v, cur, to);
          mark_path(to, cur, v);
          for (std::size_t i = 0; i < n_; ++i) {
            if (in_blossom_[at(base_[i])]) {
              base_[i] = cur;
              if (!used_[i]) {
                used_[i] = 1;
                queue.push_back(static_cast<Vertex>(i));
              }
            }
          }
        } else if (parent_[at(to)] == kUnmatched) {
          parent_[at(to)] = v;
          if (mate_[at(to)] == kUnmatched) return to;
          used_[at(mate_[at(to)])] = 1;
          queue.push_back(mate_[at(to)]);
        }
      }
    }
    return kUnmatched;
  }

  const SimpleGraph& g_;
  std::vector<Vertex>& mate_;
  std::size_t n_;
  std::vector<Vertex> parent_;
  std::vector<Vertex> base_;
  std::vector<char> used_;
  std::vector<char> in_blossom_;
};

}  // namespace

Matching maximum_matching(const SimpleGraph& g, const Matching& initial) {
  if (initial.n() != g.n()) {
    throw Error(ErrorCode::InvalidInitial, "initial matching has the wrong vertex count");
  }
  for (const Edge& e : initial.edges()) {
    if (!g.has_edge(e)) {
      throw Error(ErrorCode::InvalidInitial, "initial edge " + to_string(e) + " not in graph");
    }
  }
  std::vector<Vertex> mate(static_cast<std::size_t>(g.n()), kUnmatched);
  for (Vertex v = 0; v < g.n(); ++v) mate[static_cast<std::size_t>(v)] = initial.mate(v);

  // A root with no augmenting path never gains one later, so one pass suffices.
  BlossomSearch search(g, mate);
  for (Vertex v = 0; v < g.n(); ++v) {
    if (mate[static_cast<std::size_t>(v)] == kUnmatched) search.augment_from(v);
  }
  Matching out(g.n());
  for (Vertex v = 0; v < g.n(); ++v) {
    const Vertex w = mate[static_cast<std::size_t>(v)];
    if (w > v) out.add(Edge(v, w));
  }
  return out;
}

Matching maximum_matching(const SimpleGraph& g) { return maximum_matching(g, Matching(g.n())); }

namespace {

enum class TreeState : char { Unseen, Outer, Inner };

struct OddCycleFound {
  std::vector<Vertex> stem;   // root ... z, even length
  std::vector<Vertex> cycle;  // z first
};

// Plain alternating BFS tree from an uncovered root, no contraction. With a
// maximum matching in a regular graph the outer set cannot be independent, so
// an outer-outer edge always turns up.
OddCycleFound find_fully_matched_cycle(const SimpleGraph& g, const Matching& m, Vertex root) {
  const auto n = static_cast<std::size_t>(g.n());
  std::vector<TreeState> state(n, TreeState::Unseen);
  std::vector<Vertex> parent(n, kUnmatched);
  auto at = [](Vertex v) { return static_cast<std::size_t>(v); };
  state[at(root)] = TreeState::Outer;
  std::deque<Vertex> queue{root};
  while (!queue.empty()) {
    const Vertex x = queue.front();
    queue.pop_front();
    for (Vertex y : g.neighbors(x)) {
      if (m.mate(x) == y || state[at(y)] == TreeState::Inner) continue;
      if (state[at(y)] == TreeState::Outer) {
        std::vector<Vertex> up_x;
        for (Vertex a = x; a != kUnmatched; a = parent[at(a)]) up_x.push_back(a);
        std::vector<Vertex> up_y;
        Vertex z = y;
        for (; std::find(up_x.begin(), up_x.end(), z) == up_x.end(); z = parent[at(z)]) {
          up_y.push_back(z);
        }
        OddCycleFound found;
        // z down to x along the tree, then y back up towards z.
        const auto z_pos = std::find(up_x.begin(), up_x.end(), z);
        found.cycle.assign(std::make_reverse_iterator(z_pos + 1), up_x.rend());
        found.cycle.insert(found.cycle.end(), up_y.begin(), up_y.end());
        for (Vertex a = z; a != kUnmatched; a = parent[at(a)]) found.stem.push_back(a);
        std::reverse(found.stem.begin(), found.stem.end());
        return found;
      }
      if (!m.covers(y)) {
        throw Error(ErrorCode::InvalidInitial, "matching is not maximum: augmenting path to " +
                                                   std::to_string(y));
      }
      state[at(y)] = TreeState::Inner;
      parent[at(y)] = x;
      const Vertex z = m.mate(y);
      state[at(z)] = TreeState::Outer;
      parent[at(z)] = y;
      queue.push_back(z);
    }
  }
  throw Error(ErrorCode::NotRegular, "no outer-outer edge from root " + std::to_string(root));
}

}  // namespace

OddCycleCertificate lemma_odd_certificate(const SimpleGraph& g, const Matching& initial) {
  const auto r = g.regular_degree();
  if (!r || *r < 1 || g.n() == 0) {
    throw Error(ErrorCode::NotRegular, "graph must be r-regular with r >= 1");
  }
  OddCycleCertificate cert{maximum_matching(g, initial), {}};
  for (Vertex root : cert.matching.uncovered()) {
    auto found = find_fully_matched_cycle(g, cert.matching, root);
    cert.matching = toggle_alternating_path(cert.matching, found.stem);
    cert.cycles.emplace(found.cycle.front(), std::move(found.cycle));
  }
  return cert;
}

OddCycleCertificate lemma_odd_certificate(const SimpleGraph& g) {
  return lemma_odd_certificate(g, Matching(g.n()));
}

std::vector<std::string> check_odd_cycle_certificate(const SimpleGraph& g,
                                                     const OddCycleCertificate& cert) {
  std::vector<std::string> problems;
  const Matching& m = cert.matching;
  if (m.n() != g.n()) return {"matching vertex count differs from graph"};
  for (const Edge& e : m.edges()) {
    if (!g.has_edge(e)) problems.push_back("matched pair " + to_string(e) + " is not an edge");
  }
  const auto uncovered = m.uncovered();
  std::set<Vertex> keys;
  for (const auto& [z, cycle] : cert.cycles) keys.insert(z);
  if (std::set<Vertex>(uncovered.begin(), uncovered.end()) != keys) {
    problems.push_back("cycle map keys differ from the uncovered vertices");
  }
  std::vector<char> used(static_cast<std::size_t>(g.n()), 0);
  for (const auto& [z, cycle] : cert.cycles) {
    const std::string tag = "cycle of " + std::to_string(z) + ": ";
    const std::size_t len = cycle.size();
    if (len < 3 || len % 2 == 0) {
      problems.push_back(tag + "length " + std::to_string(len) + " is not odd >= 3");
      continue;
    }
    if (cycle.front() != z) problems.push_back(tag + "does not start at its uncovered vertex");
    for (Vertex x : cycle) {
      if (x < 0 || x >= g.n()) {
        problems.push_back(tag + "vertex out of range");
        continue;
      }
      if (used[static_cast<std::size_t>(x)]++) {
        problems.push_back(tag + "vertex " + std::to_string(x) + " shared with another cycle");
      }
    }
    for (std::size_t i = 0; i < len; ++i) {
      const Edge e(cycle[i], cycle[(i + 1) % len]);
      if (!g.has_edge(e)) problems.push_back(tag + "pair " + to_string(e) + " is not an edge");
    }
    for (std::size_t i = 1; i + 1 < len; i += 2) {
      if (!m.contains(Edge(cycle[i], cycle[i + 1]))) {
        problems.push_back(tag + "cycle edge " + to_string(Edge(cycle[i], cycle[i + 1])) +
                           " should be matched");
      }
    }
  }
  return problems;
}

}  // namespace factorpack
