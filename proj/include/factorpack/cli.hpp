#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "factorpack/certificate.hpp"
#include "factorpack/coloring.hpp"
#include "factorpack/graph.hpp"

namespace factorpack::cli {

using Json = nlohmann::ordered_json;

enum ExitCode : int {
  kOk = 0,
  kNotGraphic = 1,
  kNotGraphicMinusK = 2,
  kOddLength = 3,
  kInternal = 4,
  kUsage = 5,
};

// "@path" reads the file; otherwise the text itself.
std::string read_argument(std::string_view text);

// Integers separated by commas and/or whitespace.
DegreeSequence parse_pi(std::string_view text);

Json edge_to_json(const Edge& e);
Json edges_to_json(const std::vector<Edge>& edges);
std::vector<Edge> edges_from_json(const Json& j);

Json certificate_to_json(FactorCertificate cert);
FactorCertificate certificate_from_json(const Json& j);
std::string certificate_to_text(FactorCertificate cert);

Json trace_to_json(const SwitchTrace& trace);
SwitchTrace trace_from_json(const Json& j);

SimpleGraph graph_from_json(const Json& j);

struct SweepRow {
  int n = 0;
  DegreeSequence pi;
  int k = 0;
  CertificateMode mode = CertificateMode::FourOnes;
  bool ok = false;
  std::size_t one_factors = 0;
  std::size_t switches = 0;
  std::size_t max_chain = 0;
  double millis = 0.0;
  std::string error;
};

struct SweepReport {
  std::vector<SweepRow> rows;

  std::size_t passed() const;
  std::size_t failed() const { return rows.size() - passed(); }
};

struct SweepInstance {
  DegreeSequence pi;
  int k = 0;
};

// Every graphic pi of length n with each k >= 1 (>= 4 for half-k) that keeps
// pi - k graphic, in canonical (pi, k) order. Four-ones and half-k skip odd n.
std::vector<SweepInstance> sweep_instances(const std::vector<int>& sizes, CertificateMode mode);

// Rows come back in instance order whatever the thread count.
SweepReport run_sweep(const std::vector<SweepInstance>& instances, CertificateMode mode,
                      unsigned threads);

void write_sweep_csv(const SweepReport& report, std::ostream& out);

// Thread count from FACTORPACK_THREADS, else the hardware concurrency.
unsigned default_threads();

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace factorpack::cli
