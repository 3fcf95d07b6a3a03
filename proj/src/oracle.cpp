#include "factorpack/oracle.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "factorpack/error.hpp"

namespace factorpack {

namespace {

class NodeBudget {
 public:
  NodeBudget(std::uint64_t limit, std::string what) : limit_(limit), what_(std::move(what)) {}

  void tick() {
    if (++used_ > limit_) {
      throw Error(ErrorCode::BudgetExceeded,
                  what_ + " exceeded its budget of " + std::to_string(limit_) + " nodes");
    }
  }
  std::uint64_t used() const { return used_; }

 private:
  std::uint64_t limit_;
  std::uint64_t used_ = 0;
  std::string what_;
};

class AdjacencyMatrix {
 public:
  explicit AdjacencyMatrix(int n) : n_(n), cells_(static_cast<std::size_t>(n * n), 0) {}

  char& at(Vertex a, Vertex b) { return cells_[static_cast<std::size_t>(a * n_ + b)]; }
  char at(Vertex a, Vertex b) const { return cells_[static_cast<std::size_t>(a * n_ + b)]; }
  void set(Vertex a, Vertex b, char value) { at(a, b) = at(b, a) = value; }

 private:
  int n_;
  std::vector<char> cells_;
};

AdjacencyMatrix matrix_of(const SimpleGraph& g) {
  AdjacencyMatrix m(g.n());
  for (const Edge& e : g.edges()) m.set(e.u, e.v, 1);
  return m;
}

}  // namespace

BruteMatching bf_max_matching(const SimpleGraph& g, std::uint64_t budget) {
  const int n = g.n();
  const AdjacencyMatrix adj = matrix_of(g);
  NodeBudget nodes(budget, "bf_max_matching");
  std::vector<Vertex> mate(static_cast<std::size_t>(n), kUnmatched);
  std::vector<char> skipped(static_cast<std::size_t>(n), 0);
  std::vector<Vertex> best_mate = mate;
  std::size_t best = 0;

  std::function<void(Vertex, std::size_t, int)> search = [&](Vertex from, std::size_t size,
                                                              int undecided) {
    nodes.tick();
    if (size + static_cast<std::size_t>(undecided / 2) <= best) return;
    Vertex v = from;
    while (v < n && (mate[static_cast<std::size_t>(v)] != kUnmatched || skipped[static_cast<std::size_t>(v)])) ++v;
    if (v == n) {
      best = size;
      best_mate = mate;
      return;
    }
    for (Vertex w = v + 1; w < n; ++w) {
      if (!adj.at(v, w) || mate[static_cast<std::size_t>(w)] != kUnmatched ||
          skipped[static_cast<std::size_t>(w)]) {
        continue;
      }
      mate[static_cast<std::size_t>(v)] = w;
      mate[static_cast<std::size_t>(w)] = v;
      search(v + 1, size + 1, undecided - 2);
      mate[static_cast<std::size_t>(v)] = kUnmatched;
      mate[static_cast<std::size_t>(w)] = kUnmatched;
    }
    skipped[static_cast<std::size_t>(v)] = 1;
    search(v + 1, size, undecided - 1);
    skipped[static_cast<std::size_t>(v)] = 0;
  };
  search(0, 0, n);

  BruteMatching out{best, Matching(n)};
  for (Vertex v = 0; v < n; ++v) {
    const Vertex w = best_mate[static_cast<std::size_t>(v)];
    if (w > v) out.matching.add(Edge(v, w));
  }
  return out;
}

std::optional<std::vector<Matching>> bf_disjoint_one_factors(const SimpleGraph& g, int t,
                                                             std::uint64_t budget) {
  const int n = g.n();
  if (t < 0) throw Error(ErrorCode::InvalidArgument, "t must be non-negative");
  if (t == 0) return std::vector<Matching>{};
  if (n % 2 != 0) return std::nullopt;
  for (Vertex v = 0; v < n; ++v) {
    if (g.degree(v) < t) return std::nullopt;
  }
  AdjacencyMatrix free_edge = matrix_of(g);
  NodeBudget nodes(budget, "bf_disjoint_one_factors");
  std::vector<std::vector<Vertex>> mates(static_cast<std::size_t>(t),
                                         std::vector<Vertex>(static_cast<std::size_t>(n), kUnmatched));

  // Factors are unordered, so vertex 0's partner strictly increases with the index.
  std::function<bool(int, Vertex)> search = [&](int factor, Vertex from) -> bool {
    nodes.tick();
    auto& mate = mates[static_cast<std::size_t>(factor)];
    Vertex v = from;
    while (v < n && mate[static_cast<std::size_t>(v)] != kUnmatched) ++v;
    if (v == n) return factor + 1 == t || search(factor + 1, 0);
    const Vertex lowest =
        v == 0 && factor > 0 ? mates[static_cast<std::size_t>(factor - 1)][0] + 1 : v + 1;
    for (Vertex w = lowest; w < n; ++w) {
      if (!free_edge.at(v, w) || mate[static_cast<std::size_t>(w)] != kUnmatched) continue;
      free_edge.set(v, w, 0);
      mate[static_cast<std::size_t>(v)] = w;
      mate[static_cast<std::size_t>(w)] = v;
      if (search(factor, v + 1)) return true;
      mate[static_cast<std::size_t>(v)] = kUnmatched;
      mate[static_cast<std::size_t>(w)] = kUnmatched;
      free_edge.set(v, w, 1);
    }
    return false;
  };
  if (!search(0, 0)) return std::nullopt;

  std::vector<Matching> out;
  for (const auto& mate : mates) {
    Matching m(n);
    for (Vertex v = 0; v < n; ++v) {
      if (mate[static_cast<std::size_t>(v)] > v) m.add(Edge(v, mate[static_cast<std::size_t>(v)]));
    }
    out.push_back(std::move(m));
  }
  return out;
}

bool graphic_by_reduction(std::vector<int> degrees) {
  for (;;) {
    std::sort(degrees.begin(), degrees.end(), std::greater<>());
    while (!degrees.empty() && degrees.back() == 0) degrees.pop_back();
    if (degrees.empty()) return true;
    if (degrees.back() < 0) return false;
    const int d = degrees.front();
    if (d >= static_cast<int>(degrees.size())) return false;
    degrees.erase(degrees.begin());
    for (int i = 0; i < d; ++i) {
      if (--degrees[static_cast<std::size_t>(i)] < 0) return false;
    }
  }
}

std::optional<ConjectureWitness> bf_conjecture_search(const DegreeSequence& pi, int k,
                                                      std::uint64_t budget) {
  const int n = pi.n();
  if (k < 0) throw Error(ErrorCode::InvalidArgument, "k must be non-negative");
  if (n % 2 != 0) throw Error(ErrorCode::OddVertexCount, "1-factors need an even number of vertices");
  if (!graphic_by_reduction(pi.original())) {
    throw Error(ErrorCode::NotGraphic, pi.to_string() + " is not graphic");
  }

  NodeBudget nodes(budget, "bf_conjecture_search");
  std::vector<int> demand = pi.original();
  SimpleGraph g(n);
  std::optional<ConjectureWitness> found;
  std::uint64_t tried = 0;

  auto rest_feasible = [&](Vertex from) {
    return graphic_by_reduction(std::vector<int>(demand.begin() + from, demand.end()));
  };

  // Vertex v takes all of its remaining demand from higher-numbered vertices,
  // choosing candidates in increasing order.
  std::function<bool(Vertex)> place;
  std::function<bool(Vertex, Vertex)> choose = [&](Vertex v, Vertex from) -> bool {
    nodes.tick();
    auto& need = demand[static_cast<std::size_t>(v)];
    if (need == 0) return rest_feasible(v + 1) && place(v + 1);
    for (Vertex w = from; w < n; ++w) {
      if (demand[static_cast<std::size_t>(w)] == 0) continue;
      if (n - w < need) break;
      --need;
      --demand[static_cast<std::size_t>(w)];
      g.add_edge(Edge(v, w));
      const bool done = choose(v, w + 1);
      g.remove_edge(Edge(v, w));
      ++demand[static_cast<std::size_t>(w)];
      ++need;
      if (done) return true;
    }
    return false;
  };
  place = [&](Vertex v) -> bool {
    if (v == n) {
      ++tried;
      auto factors = bf_disjoint_one_factors(g, k, budget);
      if (!factors) return false;
      found = ConjectureWitness{g, std::move(*factors), tried};
      return true;
    }
    return choose(v, v + 1);
  };
  place(0);
  return found;
}

std::vector<DegreeSequence> enumerate_graphic(int n, int d_max) {
  if (n < 0 || d_max < 0) throw Error(ErrorCode::InvalidArgument, "n and d_max must be non-negative");
  std::vector<DegreeSequence> out;
  std::vector<int> seq(static_cast<std::size_t>(n));
  std::function<void(int, int)> extend = [&](int pos, int cap) {
    if (pos == n) {
      if (graphic_by_reduction(seq)) out.emplace_back(seq);
      return;
    }
    for (int d = 0; d <= cap; ++d) {
      seq[static_cast<std::size_t>(pos)] = d;
      extend(pos + 1, d);
    }
  };
  extend(0, std::min(d_max, std::max(n - 1, 0)));
  return out;
}

namespace {

class Verifier {
 public:
  Verifier(const DegreeSequence& pi, int k, const FactorCertificate& cert)
      : pi_(pi), k_(k), cert_(cert), n_(cert.n) {}

  VerifyReport run() {
    check_header();
    if (n_ < 0 || n_ > 100000) return finish();
    owner_.assign(static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_), "");
    total_degree_.assign(static_cast<std::size_t>(n_), 0);

    for (std::size_t i = 0; i < cert_.one_factors.size(); ++i) {
      const auto name = "one:" + std::to_string(i);
      claim(name, cert_.one_factors[i]);
      check_regular(name, cert_.one_factors[i], 1, "NotPerfectMatching");
    }
    for (std::size_t i = 0; i < cert_.two_factors.size(); ++i) {
      const auto name = "two:" + std::to_string(i);
      claim(name, cert_.two_factors[i]);
      check_regular(name, cert_.two_factors[i], 2, "NotTwoRegular");
    }
    if (cert_.residual) {
      claim("residual", cert_.residual->edges);
      check_regular("residual", cert_.residual->edges, cert_.residual->degree, "ResidualNotRegular");
    }
    claim("black", cert_.black_edges);
    check_union_degrees();
    check_counts();
    return finish();
  }

 private:
  void add(std::string kind, std::vector<Vertex> vertices, std::vector<Edge> edges,
           std::string detail) {
    report_.violations.push_back({std::move(kind), std::move(vertices), std::move(edges),
                                  std::move(detail)});
  }

  void check_header() {
    if (cert_.n != pi_.n()) {
      add("HeaderMismatch", {}, {}, "n is " + std::to_string(cert_.n) + ", expected " +
                                         std::to_string(pi_.n()));
    }
    if (cert_.pi != pi_.original()) add("HeaderMismatch", {}, {}, "pi differs from the request");
    if (cert_.k != k_) {
      add("HeaderMismatch", {}, {}, "k is " + std::to_string(cert_.k) + ", expected " +
                                         std::to_string(k_));
    }
  }

  bool valid(const Edge& e) const { return e.u >= 0 && e.v < n_ && e.u < e.v; }

  void claim(const std::string& name, const std::vector<Edge>& edges) {
    report_.class_sizes[name] = edges.size();
    for (const Edge& e : edges) {
      if (!valid(e)) {
        add("InvalidEdge", {}, {e}, name + " holds an edge outside 0.." + std::to_string(n_ - 1));
        continue;
      }
      auto& who = owner_[static_cast<std::size_t>(e.u * n_ + e.v)];
      if (!who.empty()) {
        add("ClassOverlap", {}, {e}, to_string(e) + " is in both " + who + " and " + name);
        continue;
      }
      who = name;
      ++total_degree_[static_cast<std::size_t>(e.u)];
      ++total_degree_[static_cast<std::size_t>(e.v)];
    }
  }

  void check_regular(const std::string& name, const std::vector<Edge>& edges, int degree,
                     const std::string& kind) {
    std::vector<int> deg(static_cast<std::size_t>(n_), 0);
    for (const Edge& e : edges) {
      if (!valid(e)) continue;
      ++deg[static_cast<std::size_t>(e.u)];
      ++deg[static_cast<std::size_t>(e.v)];
    }
    std::vector<Vertex> bad;
    for (Vertex v = 0; v < n_; ++v) {
      if (deg[static_cast<std::size_t>(v)] != degree) bad.push_back(v);
    }
    if (!bad.empty()) {
      add(kind, bad, {}, name + " is not " + std::to_string(degree) + "-regular at the listed vertices");
    }
  }

  void check_union_degrees() {
    if (cert_.n != pi_.n()) return;
    std::vector<Vertex> bad;
    for (Vertex v = 0; v < n_; ++v) {
      if (total_degree_[static_cast<std::size_t>(v)] != pi_[v]) bad.push_back(v);
    }
    if (!bad.empty()) add("DegreeMismatch", bad, {}, "union of all classes does not realize pi");
  }

  void check_counts() {
    std::size_t ones = 0;
    bool residual_expected = true;
    int residual_degree = 0;
    switch (cert_.mode) {
      case CertificateMode::Kundu:
        residual_degree = k_;
        break;
      case CertificateMode::FourOnes:
        ones = static_cast<std::size_t>(std::min(k_, 4));
        residual_degree = std::max(k_ - 4, 0);
        break;
      case CertificateMode::HalfK:
        ones = static_cast<std::size_t>(k_ / 2 + 2);
        residual_expected = false;
        break;
    }
    const std::string mode(to_string(cert_.mode));
    if (cert_.one_factors.size() != ones) {
      add("CountMismatch", {}, {}, mode + " needs " + std::to_string(ones) + " one-factors, found " +
                                       std::to_string(cert_.one_factors.size()));
    }
    if (!cert_.two_factors.empty()) {
      add("CountMismatch", {}, {}, mode + " certificates carry no two-factors");
    }
    if (residual_expected && (!cert_.residual || cert_.residual->degree != residual_degree)) {
      add("CountMismatch", {}, {}, mode + " needs a residual of degree " + std::to_string(residual_degree));
    }
    if (!residual_expected && cert_.residual) {
      add("CountMismatch", {}, {}, mode + " certificates carry no residual");
    }
  }

  VerifyReport finish() {
    report_.pass = report_.violations.empty();
    return std::move(report_);
  }

  const DegreeSequence& pi_;
  int k_;
  const FactorCertificate& cert_;
  int n_;
  std::vector<std::string> owner_;
  std::vector<int> total_degree_;
  VerifyReport report_;
};

}  // namespace

VerifyReport verify_certificate(const DegreeSequence& pi, int k, const FactorCertificate& cert) {
  return Verifier(pi, k, cert).run();
}

std::string to_string(const Violation& v) {
  std::ostringstream out;
  out << v.kind << ": " << v.detail;
  if (!v.vertices.empty()) {
    out << " vertices";
    for (Vertex x : v.vertices) out << ' ' << x;
  }
  if (!v.edges.empty()) {
    out << " edges";
    for (const Edge& e : v.edges) out << ' ' << to_string(e);
  }
  return out.str();
}

}  // namespace factorpack
