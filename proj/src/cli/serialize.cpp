#include <cctype>
#include <fstream>
#include <sstream>

#include "factorpack/cli.hpp"
#include "factorpack/error.hpp"

namespace factorpack::cli {

std::string read_argument(std::string_view text) {
  if (text.empty() || text.front() != '@') return std::string(text);
  const std::string path(text.substr(1));
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot read '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

DegreeSequence parse_pi(std::string_view text) {
  const std::string body = read_argument(text);
  std::vector<int> degrees;
  std::string token;
  auto flush = [&] {
    if (token.empty()) return;
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(token, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != token.size()) throw Error(ErrorCode::ParseError, "bad degree '" + token + "'");
    if (value < 0) throw Error(ErrorCode::ParseError, "degrees must be non-negative");
    degrees.push_back(value);
    token.clear();
  };
  for (char ch : body) {
    if (ch == ',' || std::isspace(static_cast<unsigned char>(ch))) {
      flush();
    } else if (ch != '(' && ch != ')' && ch != '[' && ch != ']') {
      token += ch;
    }
  }
  flush();
  if (degrees.empty()) throw Error(ErrorCode::ParseError, "empty degree sequence");
  return DegreeSequence(std::move(degrees));
}

Json edge_to_json(const Edge& e) { return Json::array({e.u, e.v}); }

Json edges_to_json(const std::vector<Edge>& edges) {
  Json out = Json::array();
  for (const Edge& e : edges) out.push_back(edge_to_json(e));
  return out;
}

std::vector<Edge> edges_from_json(const Json& j) {
  if (!j.is_array()) throw Error(ErrorCode::ParseError, "edge list must be an array");
  std::vector<Edge> edges;
  for (const auto& item : j) {
    if (!item.is_array() || item.size() != 2 || !item[0].is_number_integer() ||
        !item[1].is_number_integer()) {
      throw Error(ErrorCode::ParseError, "edge must be [u, v], got " + item.dump());
    }
    // Keep the pair as written so the verifier can flag u >= v.
    Edge e;
    e.u = item[0].get<int>();
    e.v = item[1].get<int>();
    edges.push_back(e);
  }
  return edges;
}

Json certificate_to_json(FactorCertificate cert) {
  cert.canonicalize();
  Json j;
  j["n"] = cert.n;
  j["pi"] = cert.pi;
  j["k"] = cert.k;
  j["mode"] = std::string(to_string(cert.mode));
  j["one_factors"] = Json::array();
  for (const auto& f : cert.one_factors) j["one_factors"].push_back(edges_to_json(f));
  j["two_factors"] = Json::array();
  for (const auto& f : cert.two_factors) j["two_factors"].push_back(edges_to_json(f));
  if (cert.residual) {
    j["residual"] = Json{{"degree", cert.residual->degree}, {"edges", edges_to_json(cert.residual->edges)}};
  } else {
    j["residual"] = nullptr;
  }
  j["black_edges"] = edges_to_json(cert.black_edges);
  return j;
}

FactorCertificate certificate_from_json(const Json& j) {
  try {
    FactorCertificate cert;
    cert.n = j.at("n").get<int>();
    cert.pi = j.at("pi").get<std::vector<int>>();
    cert.k = j.at("k").get<int>();
    cert.mode = parse_mode(j.at("mode").get<std::string>());
    for (const auto& f : j.at("one_factors")) cert.one_factors.push_back(edges_from_json(f));
    for (const auto& f : j.at("two_factors")) cert.two_factors.push_back(edges_from_json(f));
    const auto& residual = j.at("residual");
    if (!residual.is_null()) {
      cert.residual = ResidualFactor{residual.at("degree").get<int>(), edges_from_json(residual.at("edges"))};
    }
    cert.black_edges = edges_from_json(j.at("black_edges"));
    return cert;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("malformed certificate: ") + e.what());
  }
}

namespace {

void write_edges(std::ostream& out, const std::vector<Edge>& edges) {
  for (const Edge& e : edges) out << ' ' << e.u << '-' << e.v;
  out << '\n';
}

}  // namespace

std::string certificate_to_text(FactorCertificate cert) {
  cert.canonicalize();
  std::ostringstream out;
  out << "mode " << to_string(cert.mode) << "  n " << cert.n << "  k " << cert.k << "\npi";
  for (int d : cert.pi) out << ' ' << d;
  out << '\n';
  for (std::size_t i = 0; i < cert.one_factors.size(); ++i) {
    out << "one-factor " << i << ':';
    write_edges(out, cert.one_factors[i]);
  }
  for (std::size_t i = 0; i < cert.two_factors.size(); ++i) {
    out << "two-factor " << i << ':';
    write_edges(out, cert.two_factors[i]);
  }
  if (cert.residual) {
    out << "residual (" << cert.residual->degree << "-regular):";
    write_edges(out, cert.residual->edges);
  }
  out << "black:";
  write_edges(out, cert.black_edges);
  return out.str();
}

Json trace_to_json(const SwitchTrace& trace) {
  Json j;
  j["n"] = trace.n;
  Json initial = Json::array();
  for (Color c : trace.initial) initial.push_back(to_string(c));
  j["initial"] = std::move(initial);
  Json batches = Json::array();
  for (const auto& batch : trace.batches) {
    Json changes = Json::array();
    for (const auto& c : batch.changes) {
      changes.push_back(Json::array({c.edge.u, c.edge.v, to_string(c.from), to_string(c.to)}));
    }
    batches.push_back(Json{{"op", batch.op}, {"params", batch.params}, {"changes", std::move(changes)}});
  }
  j["batches"] = std::move(batches);
  return j;
}

SwitchTrace trace_from_json(const Json& j) {
  try {
    SwitchTrace trace;
    trace.n = j.at("n").get<int>();
    for (const auto& c : j.at("initial")) trace.initial.push_back(parse_color(c.get<std::string>()));
    for (const auto& b : j.at("batches")) {
      TraceBatch batch{b.at("op").get<std::string>(), b.at("params").get<std::string>(), {}};
      for (const auto& c : b.at("changes")) {
        batch.changes.push_back({Edge(c.at(0).get<int>(), c.at(1).get<int>()),
                                 parse_color(c.at(2).get<std::string>()),
                                 parse_color(c.at(3).get<std::string>())});
      }
      trace.batches.push_back(std::move(batch));
    }
    return trace;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("malformed trace: ") + e.what());
  }
}

SimpleGraph graph_from_json(const Json& j) {
  try {
    const int n = j.at("n").get<int>();
    if (n < 0) throw Error(ErrorCode::ParseError, "n must be non-negative");
    std::vector<Edge> edges;
    for (const Edge& e : edges_from_json(j.at("edges"))) edges.emplace_back(e.u, e.v);
    return SimpleGraph(n, edges);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("malformed graph: ") + e.what());
  }
}

}  // namespace factorpack::cli
