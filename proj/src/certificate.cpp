#include "factorpack/certificate.hpp"

#include <algorithm>

#include "factorpack/error.hpp"

namespace factorpack {

std::string_view to_string(CertificateMode mode) {
  switch (mode) {
    case CertificateMode::Kundu: return "kundu";
    case CertificateMode::FourOnes: return "four-ones";
    case CertificateMode::HalfK: return "half-k";
  }
  return "?";
}

CertificateMode parse_mode(std::string_view text) {
  if (text == "kundu") return CertificateMode::Kundu;
  if (text == "four-ones") return CertificateMode::FourOnes;
  if (text == "half-k") return CertificateMode::HalfK;
  throw Error(ErrorCode::ParseError, "unknown certificate mode '" + std::string(text) + "'");
}

FactorCertificate FactorCertificate::from_realization(const ColoredRealization& r,
                                                      CertificateMode mode) {
  FactorCertificate cert;
  cert.n = r.n();
  cert.pi = r.pi().original();
  cert.k = r.k();
  cert.mode = mode;
  for (const auto& [c, degree] : r.declared()) {
    switch (c.kind) {
      case ColorKind::OneFactor: cert.one_factors.push_back(r.edges_of(c)); break;
      case ColorKind::TwoFactor: cert.two_factors.push_back(r.edges_of(c)); break;
      case ColorKind::Residual: cert.residual = ResidualFactor{degree, r.edges_of(c)}; break;
      default: break;
    }
  }
  cert.black_edges = r.edges_of(Color::black());
  cert.canonicalize();
  return cert;
}

void FactorCertificate::canonicalize() {
  auto sort_lists = [](std::vector<std::vector<Edge>>& lists) {
    for (auto& l : lists) std::sort(l.begin(), l.end());
    std::sort(lists.begin(), lists.end());
  };
  sort_lists(one_factors);
  sort_lists(two_factors);
  if (residual) std::sort(residual->edges.begin(), residual->edges.end());
  std::sort(black_edges.begin(), black_edges.end());
}

}  // namespace factorpack
