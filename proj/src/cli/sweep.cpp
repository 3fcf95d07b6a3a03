#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <ostream>
#include <thread>

#include "factorpack/cli.hpp"
#include "factorpack/error.hpp"
#include "factorpack/factorize.hpp"
#include "factorpack/oracle.hpp"
#include "factorpack/realize.hpp"

namespace factorpack::cli {

std::size_t SweepReport::passed() const {
  return static_cast<std::size_t>(
      std::count_if(rows.begin(), rows.end(), [](const SweepRow& r) { return r.ok; }));
}

std::vector<SweepInstance> sweep_instances(const std::vector<int>& sizes, CertificateMode mode) {
  std::vector<int> ordered = sizes;
  std::sort(ordered.begin(), ordered.end());
  ordered.erase(std::unique(ordered.begin(), ordered.end()), ordered.end());
  const int k_min = mode == CertificateMode::HalfK ? 4 : 1;
  std::vector<SweepInstance> out;
  for (int n : ordered) {
    if (n < 2 || (mode != CertificateMode::Kundu && n % 2 != 0)) continue;
    for (const auto& pi : enumerate_graphic(n, n - 1)) {
      for (int k = k_min; k <= pi.min(); ++k) {
        if (erdos_gallai_graphic(pi.minus(k))) out.push_back({pi, k});
      }
    }
  }
  return out;
}

namespace {

SweepRow run_instance(const SweepInstance& inst, CertificateMode mode) {
  SweepRow row;
  row.n = inst.pi.n();
  row.pi = inst.pi;
  row.k = inst.k;
  row.mode = mode;
  const auto start = std::chrono::steady_clock::now();
  try {
    PipelineResult result;
    switch (mode) {
      case CertificateMode::Kundu: result = run_kundu(inst.pi, inst.k, 0); break;
      case CertificateMode::FourOnes: result = run_four_ones(inst.pi, inst.k, 0); break;
      case CertificateMode::HalfK: result = run_half_k(inst.pi, inst.k, 0); break;
    }
    const auto report = verify_certificate(inst.pi, inst.k, result.certificate);
    row.ok = report.pass;
    if (!report.pass) row.error = to_string(report.violations.front());
    row.one_factors = result.certificate.one_factors.size();
    row.switches = result.stats.switches();
    row.max_chain = result.stats.max_chain;
  } catch (const std::exception& e) {
    row.error = e.what();
  }
  row.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return row;
}

}  // namespace

SweepReport run_sweep(const std::vector<SweepInstance>& instances, CertificateMode mode,
                      unsigned threads) {
  SweepReport report;
  report.rows.resize(instances.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < instances.size(); i = next++) {
      report.rows[i] = run_instance(instances[i], mode);
    }
  };
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(instances.size())));
  if (threads <= 1) {
    worker();
    return report;
  }
  std::vector<std::jthread> pool;
  for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  pool.clear();
  return report;
}

void write_sweep_csv(const SweepReport& report, std::ostream& out) {
  out << "n,pi,k,mode,ok,n_one_factors,n_switches,max_chain_r,millis\n";
  for (const auto& row : report.rows) {
    out << row.n << ",\"" << row.pi.to_string() << "\"," << row.k << ',' << to_string(row.mode) << ','
        << (row.ok ? 1 : 0) << ',' << row.one_factors << ',' << row.switches << ',' << row.max_chain
        << ',' << row.millis << '\n';
  }
}

unsigned default_threads() {
  if (const char* env = std::getenv("FACTORPACK_THREADS")) {
    try {
      const int value = std::stoi(env);
      if (value > 0) return static_cast<unsigned>(value);
    } catch (const std::exception&) {
    }
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

}  // namespace factorpack::cli
