#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "factorpack/coloring.hpp"
#include "factorpack/graph.hpp"

namespace factorpack {

enum class CertificateMode { Kundu, FourOnes, HalfK };

std::string_view to_string(CertificateMode mode);
CertificateMode parse_mode(std::string_view text);

struct ResidualFactor {
  int degree = 0;
  std::vector<Edge> edges;

  friend bool operator==(const ResidualFactor&, const ResidualFactor&) = default;
};

// The deliverable of a pipeline run: a realization split into declared
// factors. Edge lists are sorted; factor lists are sorted by first edge.
struct FactorCertificate {
  int n = 0;
  std::vector<int> pi;
  int k = 0;
  CertificateMode mode = CertificateMode::Kundu;
  std::vector<std::vector<Edge>> one_factors;
  std::vector<std::vector<Edge>> two_factors;
  std::optional<ResidualFactor> residual;
  std::vector<Edge> black_edges;

  static FactorCertificate from_realization(const ColoredRealization& r, CertificateMode mode);

  // Sorts every list into the canonical order described above.
  void canonicalize();

  friend bool operator==(const FactorCertificate&, const FactorCertificate&) = default;
};

}  // namespace factorpack
