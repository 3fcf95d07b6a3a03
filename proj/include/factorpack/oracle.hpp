#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "factorpack/certificate.hpp"
#include "factorpack/graph.hpp"
#include "factorpack/matching.hpp"

namespace factorpack {

// Brute-force searches count visited nodes and throw BudgetExceeded past this.
inline constexpr std::uint64_t kDefaultOracleBudget = 50'000'000;

struct BruteMatching {
  std::size_t size = 0;
  Matching matching;
};

BruteMatching bf_max_matching(const SimpleGraph& g, std::uint64_t budget = kDefaultOracleBudget);

// t pairwise edge-disjoint perfect matchings of g, or nullopt after an
// exhausted search.
std::optional<std::vector<Matching>> bf_disjoint_one_factors(
    const SimpleGraph& g, int t, std::uint64_t budget = kDefaultOracleBudget);

struct ConjectureWitness {
  SimpleGraph realization;
  std::vector<Matching> one_factors;
  std::uint64_t realizations_tried = 0;
};

// Walks every labelled realization of pi until one carries k disjoint
// perfect matchings. nullopt means none does: a counterexample.
std::optional<ConjectureWitness> bf_conjecture_search(const DegreeSequence& pi, int k,
                                                      std::uint64_t budget = kDefaultOracleBudget);

// Havel-Hakimi reduction test, kept separate from the Erdos-Gallai check
// used by the constructive code.
bool graphic_by_reduction(std::vector<int> degrees);

// Non-increasing graphic sequences of length n with entries <= d_max, in
// ascending lexicographic order.
std::vector<DegreeSequence> enumerate_graphic(int n, int d_max);

struct Violation {
  std::string kind;
  std::vector<Vertex> vertices;
  std::vector<Edge> edges;
  std::string detail;
};

struct VerifyReport {
  bool pass = true;
  std::vector<Violation> violations;
  // Edge count per class name: "one:i", "two:i", "residual", "black".
  std::map<std::string, std::size_t> class_sizes;
};

VerifyReport verify_certificate(const DegreeSequence& pi, int k, const FactorCertificate& cert);

std::string to_string(const Violation& v);

}  // namespace factorpack
