#include <algorithm>
#include <fstream>
#include <ostream>

#include <CLI11.hpp>

#include "factorpack/cli.hpp"
#include "factorpack/error.hpp"
#include "factorpack/factorize.hpp"
#include "factorpack/oracle.hpp"
#include "factorpack/realize.hpp"

namespace factorpack::cli {

namespace {

struct Options {
  std::string pi;
  int k = -1;
  std::uint64_t seed = 0;
  std::string format = "json";
  std::string trace_path;
  std::string report_path;
  std::string graph;
  std::string cert;
  std::string sizes = "4,6,8";
  std::string mode = "four-ones";
  unsigned threads = 0;
};

bool text_format(const Options& o) { return o.format == "text"; }

void emit(std::ostream& out, const Json& j) { out << j.dump() << '\n'; }

void write_file(const std::string& path, const std::string& body) {
  std::ofstream file(path);
  if (!file) throw Error(ErrorCode::ParseError, "cannot write '" + path + "'");
  file << body << '\n';
}

int cmd_graphic(const Options& o, std::ostream& out) {
  const auto pi = parse_pi(o.pi);
  const bool graphic = erdos_gallai_graphic(pi);
  Json j;
  j["pi"] = pi.original();
  j["graphic"] = graphic;
  std::optional<bool> minus_k;
  if (o.k >= 0) {
    minus_k = graphic && erdos_gallai_graphic(pi.minus(o.k));
    j["k"] = o.k;
    j["minus_k_graphic"] = *minus_k;
  }
  if (text_format(o)) {
    out << pi.to_string() << (graphic ? " is graphic" : " is not graphic");
    if (minus_k) out << "; pi-" << o.k << (*minus_k ? " is graphic" : " is not graphic");
    out << '\n';
  } else {
    emit(out, j);
  }
  if (!graphic) return kNotGraphic;
  if (minus_k && !*minus_k) return kNotGraphicMinusK;
  return kOk;
}

int cmd_realize(const Options& o, std::ostream& out) {
  const auto pi = parse_pi(o.pi);
  auto g = havel_hakimi_realize(pi);
  if (o.seed != 0) {
    const auto n = static_cast<std::uint64_t>(pi.n());
    g = switch_randomize(std::move(g), 10 * n * n, o.seed);
  }
  if (text_format(o)) {
    out << "edges:";
    for (const Edge& e : g.edges()) out << ' ' << e.u << '-' << e.v;
    out << '\n';
  } else {
    Json j;
    j["n"] = pi.n();
    j["pi"] = pi.original();
    j["edges"] = edges_to_json(g.edges());
    emit(out, j);
  }
  return kOk;
}

int cmd_pipeline(const Options& o, CertificateMode mode, std::ostream& out) {
  const auto pi = parse_pi(o.pi);
  PipelineResult result;
  switch (mode) {
    case CertificateMode::Kundu: result = run_kundu(pi, o.k, o.seed); break;
    case CertificateMode::FourOnes: result = run_four_ones(pi, o.k, o.seed); break;
    case CertificateMode::HalfK: result = run_half_k(pi, o.k, o.seed); break;
  }
  const auto report = verify_certificate(pi, o.k, result.certificate);
  if (!report.pass) {
    throw Error(ErrorCode::PreconditionViolated,
                "generated certificate failed verification: " + to_string(report.violations.front()));
  }
  if (!o.trace_path.empty()) write_file(o.trace_path, trace_to_json(result.trace).dump());
  if (text_format(o)) {
    out << certificate_to_text(result.certificate);
  } else {
    emit(out, certificate_to_json(result.certificate));
  }
  return kOk;
}

int cmd_petersen(const Options& o, std::ostream& out) {
  Json input;
  try {
    input = Json::parse(read_argument(o.graph));
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("graph is not JSON: ") + e.what());
  }
  const auto g = graph_from_json(input);
  const auto degree = g.regular_degree().value_or(-1);
  if (degree < 0 || degree % 2 != 0) {
    throw Error(ErrorCode::NotEvenRegular, "petersen needs an even-regular graph");
  }
  const auto factors = petersen_two_factorize(g, degree / 2);
  if (text_format(o)) {
    for (std::size_t i = 0; i < factors.size(); ++i) {
      out << "two-factor " << i << ':';
      for (const Edge& e : factors[i].edges()) out << ' ' << e.u << '-' << e.v;
      out << '\n';
    }
  } else {
    Json j;
    j["n"] = g.n();
    j["r"] = degree / 2;
    j["two_factors"] = Json::array();
    for (const auto& f : factors) j["two_factors"].push_back(edges_to_json(f.edges()));
    emit(out, j);
  }
  return kOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  Json input;
  try {
    input = Json::parse(read_argument(o.cert));
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("certificate is not JSON: ") + e.what());
  }
  const auto cert = certificate_from_json(input);
  const auto pi = o.pi.empty() ? DegreeSequence(cert.pi) : parse_pi(o.pi);
  const int k = o.k >= 0 ? o.k : cert.k;
  const auto report = verify_certificate(pi, k, cert);
  if (text_format(o)) {
    out << (report.pass ? "pass" : "fail") << '\n';
    for (const auto& v : report.violations) out << "  " << to_string(v) << '\n';
  } else {
    Json j;
    j["pass"] = report.pass;
    j["violations"] = Json::array();
    for (const auto& v : report.violations) {
      j["violations"].push_back(Json{{"kind", v.kind},
                                     {"vertices", v.vertices},
                                     {"edges", edges_to_json(v.edges)},
                                     {"detail", v.detail}});
    }
    Json sizes = Json::object();
    for (const auto& [name, count] : report.class_sizes) sizes[name] = count;
    j["class_sizes"] = std::move(sizes);
    emit(out, j);
  }
  return report.pass ? kOk : kInternal;
}

std::vector<int> parse_sizes(const std::string& text) {
  std::vector<int> sizes = parse_pi(text).original();
  for (int n : sizes) {
    if (n < 2 || n > 10) throw Error(ErrorCode::InvalidArgument, "sweep sizes must lie in 2..10");
  }
  return sizes;
}

int cmd_sweep(const Options& o, std::ostream& out) {
  const auto mode = parse_mode(o.mode);
  const auto instances = sweep_instances(parse_sizes(o.sizes), mode);
  const auto report = run_sweep(instances, mode, o.threads > 0 ? o.threads : default_threads());
  if (!o.report_path.empty()) {
    std::ofstream file(o.report_path);
    if (!file) throw Error(ErrorCode::ParseError, "cannot write '" + o.report_path + "'");
    write_sweep_csv(report, file);
  }
  std::size_t max_chain = 0;
  std::size_t switches = 0;
  for (const auto& row : report.rows) {
    max_chain = std::max(max_chain, row.max_chain);
    switches += row.switches;
  }
  if (text_format(o)) {
    out << to_string(mode) << ": " << report.passed() << '/' << report.rows.size()
        << " instances passed, " << switches << " switches, longest chain " << max_chain << '\n';
    for (const auto& row : report.rows) {
      if (!row.ok) out << "  FAIL " << row.pi.to_string() << " k=" << row.k << ": " << row.error << '\n';
    }
  } else {
    Json j;
    j["mode"] = std::string(to_string(mode));
    j["instances"] = report.rows.size();
    j["passed"] = report.passed();
    j["failed"] = report.failed();
    j["switches"] = switches;
    j["max_chain_r"] = max_chain;
    j["failures"] = Json::array();
    for (const auto& row : report.rows) {
      if (!row.ok) j["failures"].push_back(Json{{"pi", row.pi.original()}, {"k", row.k}, {"error", row.error}});
    }
    emit(out, j);
  }
  return report.failed() == 0 ? kOk : kInternal;
}

int cmd_conjecture(const Options& o, std::ostream& out, std::ostream& err) {
  const auto pi = parse_pi(o.pi);
  if (!erdos_gallai_graphic(pi)) throw Error(ErrorCode::NotGraphic, pi.to_string() + " is not graphic");
  if (!erdos_gallai_graphic(pi.minus(o.k))) {
    throw Error(ErrorCode::NotGraphicMinusK, "pi - " + std::to_string(o.k) + " is not graphic");
  }
  const auto witness = bf_conjecture_search(pi, o.k);
  Json j;
  j["pi"] = pi.original();
  j["k"] = o.k;
  j["found"] = witness.has_value();
  if (witness) {
    j["realization"] = edges_to_json(witness->realization.edges());
    j["one_factors"] = Json::array();
    for (const auto& m : witness->one_factors) j["one_factors"].push_back(edges_to_json(m.edges()));
    j["realizations_tried"] = witness->realizations_tried;
  }
  if (text_format(o)) {
    out << pi.to_string() << " k=" << o.k << (witness ? ": found" : ": COUNTEREXAMPLE") << '\n';
  } else {
    emit(out, j);
  }
  if (!witness) {
    err << "counterexample: no realization of " << pi.to_string() << " has " << o.k
        << " edge-disjoint perfect matchings\n";
    return kInternal;
  }
  return kOk;
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotGraphic: return kNotGraphic;
    case ErrorCode::NotGraphicMinusK: return kNotGraphicMinusK;
    case ErrorCode::OddVertexCount: return kOddLength;
    case ErrorCode::KTooSmall:
    case ErrorCode::InvalidArgument:
    case ErrorCode::ParseError:
    case ErrorCode::InvalidEdge:
    case ErrorCode::DuplicateEdge:
    case ErrorCode::NotEvenRegular:
      return kUsage;
    default: return kInternal;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Edge-disjoint regular factors in realizations of degree sequences", "factorpack"};
  app.require_subcommand(1);
  Options o;

  auto add_pi = [&](CLI::App* sub, bool required) {
    auto* opt = sub->add_option("--pi", o.pi, "degree sequence, comma/space separated or @file");
    if (required) opt->required();
  };
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "output format")->check(CLI::IsMember({"json", "text"}));
  };
  auto add_k = [&](CLI::App* sub, bool required) {
    auto* opt = sub->add_option("--k", o.k, "factor degree")->check(CLI::NonNegativeNumber);
    if (required) opt->required();
  };
  auto add_seed = [&](CLI::App* sub) {
    sub->add_option("--seed", o.seed, "random seed (0 keeps the canonical realization)");
  };

  auto* graphic = app.add_subcommand("graphic", "test pi (and pi - k) for graphicality");
  add_pi(graphic, true);
  add_k(graphic, false);
  add_common(graphic);

  auto* realize = app.add_subcommand("realize", "Havel-Hakimi realization of pi");
  add_pi(realize, true);
  add_seed(realize);
  add_common(realize);

  std::vector<std::pair<CLI::App*, CertificateMode>> pipelines;
  for (auto [name, mode, help] : {
           std::tuple{"kundu", CertificateMode::Kundu, "realization with a k-factor"},
           std::tuple{"four-ones", CertificateMode::FourOnes, "(k-4)-factor plus four 1-factors"},
           std::tuple{"half-k", CertificateMode::HalfK, "floor(k/2)+2 edge-disjoint 1-factors"},
       }) {
    auto* sub = app.add_subcommand(name, help);
    add_pi(sub, true);
    add_k(sub, true);
    add_seed(sub);
    add_common(sub);
    sub->add_option("--trace", o.trace_path, "write the switch trace as JSON");
    pipelines.emplace_back(sub, mode);
  }

  auto* petersen = app.add_subcommand("petersen", "split a 2r-regular graph into r 2-factors");
  petersen->add_option("--graph", o.graph, "JSON {n, edges} or @file")->required();
  add_common(petersen);

  auto* verify = app.add_subcommand("verify", "check a certificate");
  verify->add_option("--cert", o.cert, "certificate JSON or @file")->required();
  add_pi(verify, false);
  add_k(verify, false);
  add_common(verify);

  auto* sweep = app.add_subcommand("sweep", "run and verify every instance up to the given sizes");
  sweep->add_option("--n", o.sizes, "vertex counts, e.g. 4,6,8");
  sweep->add_option("--mode", o.mode, "kundu, four-ones or half-k")
      ->check(CLI::IsMember({"kundu", "four-ones", "half-k"}));
  sweep->add_option("--report", o.report_path, "write per-instance CSV");
  sweep->add_option("--threads", o.threads, "worker threads (default FACTORPACK_THREADS or all cores)");
  add_common(sweep);

  auto* conjecture = app.add_subcommand("conjecture", "search realizations for k disjoint 1-factors");
  add_pi(conjecture, true);
  add_k(conjecture, true);
  add_common(conjecture);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (graphic->parsed()) return cmd_graphic(o, out);
    if (realize->parsed()) return cmd_realize(o, out);
    for (auto [sub, mode] : pipelines) {
      if (sub->parsed()) return cmd_pipeline(o, mode, out);
    }
    if (petersen->parsed()) return cmd_petersen(o, out);
    if (verify->parsed()) return cmd_verify(o, out);
    if (sweep->parsed()) return cmd_sweep(o, out);
    if (conjecture->parsed()) return cmd_conjecture(o, out, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInternal;
  }
  return kUsage;
}

}  // namespace factorpack::cli
