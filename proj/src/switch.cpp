#include "factorpack/switch.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "factorpack/error.hpp"

namespace factorpack {

std::vector<Vertex> MultiSwitchReport::midpoints() const {
  std::vector<Vertex> out;
  out.reserve(chain.size());
  for (const auto& link : chain) out.push_back(link.midpoint);
  return out;
}

std::vector<Edge> MultiSwitchReport::recolored_edges() const {
  std::vector<Edge> out;
  for (std::size_t i : swapped) {
    out.push_back(chain[i].x);
    out.push_back(chain[i].y);
  }
  return out;
}

namespace {

[[noreturn]] void violated(const std::string& clause) {
  throw Error(ErrorCode::PreconditionViolated, "multi_switch: " + clause);
}

}  // namespace

MultiSwitchReport multi_switch(ColoredRealization& r, Vertex u, Vertex v, Vertex w,
                               SwitchMode mode, std::optional<Edge> z3_hint,
                               std::optional<Edge> z2_hint) {
  const int n = r.n();
  for (Vertex x : {u, v, w}) {
    if (x < 0 || x >= n) violated("vertex " + std::to_string(x) + " out of range");
  }
  if (u == v || u == w || v == w) violated("u, v, w must be distinct");

  const Color terminal = terminal_color(mode);
  const Edge x1(u, w);
  const Edge y1(w, v);
  if (r.color(x1) != terminal) violated("x1 = " + to_string(x1) + " must be " + to_string(terminal));
  const Color c = r.color(y1);
  if (c == terminal) violated("y1 = " + to_string(y1) + " must not be " + to_string(terminal));
  if (mode == SwitchMode::White ? r.degree(u) < r.degree(v) : r.degree(u) > r.degree(v)) {
    violated(mode == SwitchMode::White ? "white mode needs deg(u) >= deg(v)"
                                       : "black mode needs deg(u) <= deg(v)");
  }
  // The chain needs u to dominate v in every non-terminal color. This follows
  // from the degree inequality while the declared classes are regular at u and v.
  {
    const auto at_u = r.color_degrees(u);
    for (const auto& [col, count_v] : r.color_degrees(v)) {
      if (col == terminal) continue;
      auto it = at_u.find(col);
      if ((it == at_u.end() ? 0 : it->second) < count_v) {
        violated("u has fewer " + to_string(col) + " edges than v");
      }
    }
  }
  const Edge uv(u, v);
  if (z3_hint) {
    if (!z3_hint->touches(v) || *z3_hint == y1 || *z3_hint == uv || r.color(*z3_hint) != c) {
      violated("z3 must be a " + to_string(c) + " edge at v other than y1 and uv");
    }
  }
  if (z2_hint) {
    if (!z2_hint->touches(u) || *z2_hint == uv || r.color(*z2_hint) != c) {
      violated("z2 must be a " + to_string(c) + " edge at u other than uv");
    }
    bool has_z1 = false;
    for (Vertex t = 0; t < n && !has_z1; ++t) {
      has_z1 = t != u && t != v && Edge(u, t) != *z2_hint && r.color(u, t) == c;
    }
    if (!has_z1) violated("z2 needs another " + to_string(c) + " edge at u to serve as z1");
  }

  MultiSwitchReport report;
  report.terminal = terminal;
  report.chain.push_back({w, x1, y1, terminal, c});
  std::vector<char> used(static_cast<std::size_t>(n), 0);
  used[static_cast<std::size_t>(u)] = used[static_cast<std::size_t>(v)] = 1;
  used[static_cast<std::size_t>(w)] = 1;
  bool split = false;

  while (report.chain.back().y_color != terminal) {
    const ChainLink& last = report.chain.back();
    const Color need = last.y_color;
    const std::size_t last_index = report.chain.size() - 1;
    auto fresh = [&](Vertex t) {
      return !used[static_cast<std::size_t>(t)] && r.color(u, t) == need;
    };
    std::optional<Vertex> next;
    const bool z2_reserved = z2_hint && !split;
    if (z3_hint && !split && last.y == *z3_hint) {
      // z3 entered the chain: continue through z2 and leave z1..z3 unswapped.
      if (z2_hint) {
        next = z2_hint->other(u);
        if (!fresh(*next)) throw Error(ErrorCode::ChainStuck, "z2 midpoint already used");
      } else {
        for (Vertex t = 0; t < n && !next; ++t) {
          if (fresh(t)) next = t;
        }
      }
      split = true;
      report.z3_index = last_index;
      report.z2_consumed = true;
    } else {
      for (Vertex t = 0; t < n && !next; ++t) {
        if (fresh(t) && !(z2_reserved && Edge(u, t) == *z2_hint)) next = t;
      }
      if (!next && z2_reserved && !z3_hint && last_index > 0 && need == c &&
          fresh(z2_hint->other(u))) {
        // Without a designated z3, the c-colored y that forced z2 plays its role.
        next = z2_hint->other(u);
        split = true;
        report.z3_index = last_index;
        report.z2_consumed = true;
      }
    }
    if (!next) {
      throw Error(ErrorCode::ChainStuck, "no fresh " + to_string(need) + " edge at u=" +
                                             std::to_string(u) + " after " +
                                             std::to_string(report.chain.size()) + " links");
    }
    used[static_cast<std::size_t>(*next)] = 1;
    const Edge x(u, *next);
    const Edge y(*next, v);
    if (report.z2_consumed && !report.z2) report.z2 = x;
    report.chain.push_back({*next, x, y, r.color(x), r.color(y)});
  }
  report.z1 = report.chain[1].x;

  const std::size_t first_tail = report.z3_index ? *report.z3_index + 1 : 1;
  report.swapped.push_back(0);
  for (std::size_t i = first_tail; i < report.chain.size(); ++i) report.swapped.push_back(i);

  std::vector<Recolor> batch;
  for (std::size_t i : report.swapped) {
    const auto& link = report.chain[i];
    if (link.x_color == link.y_color) continue;
    batch.push_back({link.x, link.y_color});
    batch.push_back({link.y, link.x_color});
  }
  std::ostringstream params;
  params << "u=" << u << " v=" << v << " w=" << w << " mode=" << to_string(terminal)
         << " r=" << report.chain.size();
  r.apply_swap_batch(batch, Conservation::Check, "multi_switch", params.str());
  return report;
}

void parallel_two_switch(ColoredRealization& r, Edge e, Edge f, Edge g, Edge h) {
  auto fail = [](const std::string& why) -> void {
    throw Error(ErrorCode::PreconditionViolated, "parallel_two_switch: " + why);
  };
  const std::set<Edge> distinct{e, f, g, h};
  if (distinct.size() != 4) fail("edges must be distinct");
  const Color alpha = r.color(e);
  const Color beta = r.color(g);
  if (r.color(f) != alpha || r.color(h) != beta || alpha == beta) {
    fail("need color(e) = color(f) != color(g) = color(h)");
  }
  if (e.shares_vertex(f) || g.shares_vertex(h)) fail("e, f and g, h must be disjoint pairs");
  const std::set<Vertex> ef{e.u, e.v, f.u, f.v};
  const std::set<Vertex> gh{g.u, g.v, h.u, h.v};
  if (ef != gh) fail("e, f and g, h must span the same four vertices");
  for (const Edge& a : {e, f}) {
    for (const Edge& b : {g, h}) {
      const int shared = (a.touches(b.u) ? 1 : 0) + (a.touches(b.v) ? 1 : 0);
      if (shared != 1) fail("edges do not form an alternating 4-cycle");
    }
  }
  const Recolor batch[] = {{e, beta}, {f, beta}, {g, alpha}, {h, alpha}};
  r.apply_swap_batch(batch, Conservation::Check, "parallel_two_switch",
                     to_string(e) + to_string(f) + "<->" + to_string(g) + to_string(h));
}

}  // namespace factorpack
