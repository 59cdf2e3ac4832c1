// Copyright 2026 The crkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "crkit/mcvp.hpp"

#include <fstream>
#include <random>
#include <sstream>

#include "crkit/refinement.hpp"

namespace crkit {

void MonotoneCircuit::validate() const {
  if (gates.empty()) throw InvalidArgument("circuit has no gates");
  if (output >= gates.size()) throw InvalidArgument("output gate does not exist");
  for (std::size_t k = 0; k < gates.size(); ++k) {
    const Gate& g = gates[k];
    if (g.kind != GateKind::And && g.kind != GateKind::Or) continue;
    if (g.a >= k || g.b >= k) {
      throw InvalidArgument("gate " + std::to_string(k) + " reads a later gate");
    }
    if (g.a == g.b) throw InvalidArgument("gate " + std::to_string(k) + " has equal inputs");
  }
}

MonotoneCircuit parse_circuit(std::string_view text) {
  MonotoneCircuit c;
  std::optional<std::size_t> out;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag)) continue;
    auto number = [&](const char* what) {
      long long x;
      if (!(ls >> x) || x < 0) throw ParseError(lineno, std::string("expected ") + what);
      return static_cast<std::size_t>(x);
    };
    if (tag == "g") {
      const std::size_t id = number("gate id");
      if (id != c.gates.size()) {
        throw ParseError(lineno, "gate ids must be consecutive from 0");
      }
      std::string kind;
      if (!(ls >> kind)) throw ParseError(lineno, "expected gate kind");
      Gate g;
      if (kind == "const0") {
        g.kind = GateKind::Const0;
      } else if (kind == "const1") {
        g.kind = GateKind::Const1;
      } else if (kind == "and" || kind == "or") {
        g.kind = kind == "and" ? GateKind::And : GateKind::Or;
        g.a = number("input gate");
        g.b = number("input gate");
        if (g.a >= id || g.b >= id) throw ParseError(lineno, "input must be an earlier gate");
        if (g.a == g.b) throw ParseError(lineno, "inputs must be distinct gates");
      } else {
        throw ParseError(lineno, "unknown gate kind '" + kind + "'");
      }
      c.gates.push_back(g);
    } else if (tag == "out") {
      if (out) throw ParseError(lineno, "duplicate out line");
      out = number("output gate");
    } else {
      throw ParseError(lineno, "unknown line type '" + tag + "'");
    }
    std::string extra;
    if (ls >> extra) throw ParseError(lineno, "trailing text");
  }
  if (!out) throw ParseError(lineno, "missing out line");
  if (*out >= c.gates.size()) throw ParseError(lineno, "output gate does not exist");
  c.output = *out;
  return c;
}

MonotoneCircuit load_circuit_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw InvalidArgument("cannot open " + path);
  std::stringstream buf;
  buf << f.rdbuf();
  return parse_circuit(buf.str());
}

std::string save_circuit(const MonotoneCircuit& c) {
  std::ostringstream out;
  for (std::size_t k = 0; k < c.gates.size(); ++k) {
    const Gate& g = c.gates[k];
    out << "g " << k << ' ';
    switch (g.kind) {
      case GateKind::Const0: out << "const0"; break;
      case GateKind::Const1: out << "const1"; break;
      case GateKind::And: out << "and " << g.a << ' ' << g.b; break;
      case GateKind::Or: out << "or " << g.a << ' ' << g.b; break;
    }
    out << '\n';
  }
  out << "out " << c.output << '\n';
  return out.str();
}

std::vector<bool> evaluate_all(const MonotoneCircuit& c) {
  c.validate();
  std::vector<bool> value(c.gates.size());
  for (std::size_t k = 0; k < c.gates.size(); ++k) {
    const Gate& g = c.gates[k];
    switch (g.kind) {
      case GateKind::Const0: value[k] = false; break;
      case GateKind::Const1: value[k] = true; break;
      case GateKind::And: value[k] = value[g.a] && value[g.b]; break;
      case GateKind::Or: value[k] = value[g.a] || value[g.b]; break;
    }
  }
  return value;
}

bool evaluate(const MonotoneCircuit& c) { return evaluate_all(c)[c.output]; }

MonotoneCircuit random_circuit(std::size_t gates, std::uint64_t seed) {
  if (gates == 0) throw InvalidArgument("circuit needs at least one gate");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coin(0, 2);
  MonotoneCircuit c;
  for (std::size_t k = 0; k < gates; ++k) {
    Gate g;
    if (k < 2 || coin(rng) == 0) {
      g.kind = (rng() & 1u) ? GateKind::Const1 : GateKind::Const0;
    } else {
      g.kind = (rng() & 1u) ? GateKind::And : GateKind::Or;
      std::uniform_int_distribution<std::size_t> pick(0, k - 1);
      g.a = pick(rng);
      do g.b = pick(rng);
      while (g.b == g.a);
    }
    c.gates.push_back(g);
  }
  c.output = gates - 1;
  return c;
}

std::string to_string(Variant v) {
  switch (v) {
    case Variant::G: return "G";
    case Variant::Gp: return "Gp";
    case Variant::Gpp: return "Gpp";
  }
  return "?";
}

Variant parse_variant(std::string_view s) {
  if (s == "G") return Variant::G;
  if (s == "Gp") return Variant::Gp;
  if (s == "Gpp") return Variant::Gpp;
  throw InvalidArgument("unknown variant '" + std::string(s) + "'");
}

namespace {

struct Edge {
  Vertex u, v;
  unsigned mult;
};

class Construction {
 public:
  Vertex add_vertex(Color c) {
    colors_.push_back(c);
    return static_cast<Vertex>(colors_.size() - 1);
  }
  Color fresh_color() { return next_color_++; }
  VertexPair add_pair(bool split = false) {
    const Color c = fresh_color();
    const Vertex a = add_vertex(c);
    const Vertex b = add_vertex(split ? fresh_color() : c);
    return {a, b};
  }
  void edge(Vertex u, Vertex v, unsigned mult = 1) { edges_.push_back({u, v, mult}); }

  // e_xy is adjacent to p[x], q[y] and r[x xor y].
  GadgetInstance cfi(const VertexPair& p, const VertexPair& q, const VertexPair& r,
                     std::size_t gate) {
    GadgetInstance gi{"CFI", gate, {p, q, r}, {}, {}};
    const Color c = fresh_color();
    gi.colors.push_back(c);
    for (unsigned x = 0; x < 2; ++x)
      for (unsigned y = 0; y < 2; ++y) {
        const Vertex e = add_vertex(c);
        gi.internal.push_back(e);
        edge(e, p[x]);
        edge(e, q[y]);
        edge(e, r[x ^ y]);
      }
    return gi;
  }

  // Splitting `from` forces `to` to split, not conversely.
  GadgetInstance imp(const VertexPair& from, const VertexPair& to, std::size_t gate) {
    GadgetInstance gi{"IMP", gate, {from, to}, {}, {}};
    const VertexPair p1 = add_pair();
    const VertexPair p2 = add_pair();
    gi.colors = {colors_[p1[0]], colors_[p2[0]]};
    for (unsigned x = 0; x < 2; ++x) {
      edge(p1[x], from[x], 2);
      edge(p2[x], from[x], 2);
    }
    GadgetInstance inner = cfi(p1, p2, to, gate);
    gi.internal = {p1[0], p1[1], p2[0], p2[1]};
    gi.internal.insert(gi.internal.end(), inner.internal.begin(), inner.internal.end());
    gi.colors.push_back(inner.colors.front());
    return gi;
  }

  ColoredGraph build() const {
    GraphBuilder b(colors_.size());
    for (Vertex v = 0; v < colors_.size(); ++v) b.set_color(v, colors_[v]);
    for (const Edge& e : edges_) b.add_edge(e.u, e.v, e.mult);
    return b.build();
  }

 private:
  std::vector<Color> colors_;
  std::vector<Edge> edges_;
  Color next_color_ = 0;
};

}  // namespace

ReductionOutput reduce(const MonotoneCircuit& c, Variant variant) {
  c.validate();
  ReductionOutput out;
  out.variant = variant;
  Construction k;
  for (const Gate& g : c.gates) out.pair_of.push_back(k.add_pair(g.kind == GateKind::Const1));
  for (std::size_t id = 0; id < c.gates.size(); ++id) {
    const Gate& g = c.gates[id];
    if (g.kind == GateKind::And) {
      out.gadgets.push_back(k.cfi(out.pair_of[g.a], out.pair_of[g.b], out.pair_of[id], id));
    } else if (g.kind == GateKind::Or) {
      out.gadgets.push_back(k.imp(out.pair_of[g.a], out.pair_of[id], id));
      out.gadgets.push_back(k.imp(out.pair_of[g.b], out.pair_of[id], id));
    }
  }
  const std::size_t l = c.output;
  if (variant != Variant::G) {
    const VertexPair& pl = out.pair_of[l];
    for (std::size_t id = 0; id < c.gates.size(); ++id) {
      if (c.gates[id].kind != GateKind::Const0 || id == l) continue;
      const VertexPair& pk = out.pair_of[id];
      k.edge(pl[0], pk[0], 2);
      k.edge(pl[1], pk[1], 2);
      out.gadgets.push_back({"LINK", l, {pl, pk}, {}, {}});
    }
  }
  if (variant == Variant::Gpp) {
    out.extra_pair = k.add_pair();
    out.gadgets.push_back(k.imp(out.pair_of[l], *out.extra_pair, l));
  }
  out.graph = k.build();
  return out;
}

bool verify_gate_propagation(const ReductionOutput& r, const MonotoneCircuit& c) {
  const std::vector<bool> value = evaluate_all(c);
  const Partition p = stable_partition(r.graph).partition;
  for (std::size_t k = 0; k < c.gates.size(); ++k) {
    const bool split = p.class_of[r.pair_of[k][0]] != p.class_of[r.pair_of[k][1]];
    if (split != value[k]) return false;
  }
  return true;
}

ColoredGraph cfi_gadget() {
  Construction k;
  VertexPair p1 = k.add_pair(), p2 = k.add_pair(), p3 = k.add_pair();
  k.cfi(p1, p2, p3, 0);
  return k.build();
}

ColoredGraph separating_graph() {
  Construction k;
  VertexPair p1 = k.add_pair(), p2 = k.add_pair(), p3 = k.add_pair(), p4 = k.add_pair();
  k.cfi(p1, p2, p3, 0);
  k.cfi(p2, p1, p4, 0);
  return k.build();
}

}  // namespace crkit
