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

#include "crkit/graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <numeric>
#include <random>
#include <sstream>
#include <unordered_set>

namespace crkit {

VertexSet::VertexSet(std::vector<Vertex> ids) : ids_(std::move(ids)) {
  std::sort(ids_.begin(), ids_.end());
  if (std::adjacent_find(ids_.begin(), ids_.end()) != ids_.end()) {
    throw InvalidArgument("vertex set contains a repeated vertex");
  }
}

bool VertexSet::contains(Vertex v) const {
  return std::binary_search(ids_.begin(), ids_.end(), v);
}

std::size_t ColoredGraph::degree(Vertex v) const {
  std::size_t d = 0;
  for (const Neighbor& nb : neighbors(v)) d += nb.mult;
  return d;
}

unsigned ColoredGraph::multiplicity(Vertex u, Vertex v) const {
  auto nbs = neighbors(u);
  auto it = std::lower_bound(nbs.begin(), nbs.end(), v,
                             [](const Neighbor& a, Vertex b) { return a.v < b; });
  return (it != nbs.end() && it->v == v) ? it->mult : 0;
}

bool ColoredGraph::is_simple() const {
  return std::all_of(neighbors_.begin(), neighbors_.end(),
                     [](const Neighbor& nb) { return nb.mult == 1; });
}

GraphBuilder::GraphBuilder(std::size_t n) : colors_(n, 0) {}

void GraphBuilder::set_color(Vertex v, Color c) {
  if (v >= colors_.size()) throw InvalidArgument("color for vertex out of range");
  colors_[v] = c;
}

void GraphBuilder::add_edge(Vertex u, Vertex v, unsigned mult) {
  if (u >= colors_.size() || v >= colors_.size()) {
    throw InvalidArgument("edge endpoint out of range");
  }
  if (u == v) throw InvalidArgument("self-loop at vertex " + std::to_string(u));
  if (mult < 1 || mult > 255) throw InvalidArgument("edge multiplicity must be in [1, 255]");
  if (u > v) std::swap(u, v);
  edges_.push_back({u, v, static_cast<std::uint8_t>(mult)});
}

ColoredGraph GraphBuilder::build() const {
  const std::size_t n = colors_.size();
  ColoredGraph g;

  std::vector<Color> distinct(colors_);
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  g.colors_.resize(n);
  for (std::size_t v = 0; v < n; ++v) {
    g.colors_[v] = static_cast<Color>(
        std::lower_bound(distinct.begin(), distinct.end(), colors_[v]) - distinct.begin());
  }
  g.num_colors_ = distinct.size();

  std::vector<std::size_t> deg(n, 0);
  for (const Edge& e : edges_) {
    ++deg[e.u];
    ++deg[e.v];
  }
  g.offsets_.assign(n + 1, 0);
  for (std::size_t v = 0; v < n; ++v) g.offsets_[v + 1] = g.offsets_[v] + deg[v];
  g.neighbors_.resize(g.offsets_[n]);
  std::vector<std::size_t> fill(g.offsets_.begin(), g.offsets_.end() - 1);
  for (const Edge& e : edges_) {
    g.neighbors_[fill[e.u]++] = {e.v, e.mult};
    g.neighbors_[fill[e.v]++] = {e.u, e.mult};
  }
  for (std::size_t v = 0; v < n; ++v) {
    auto first = g.neighbors_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v]);
    auto last = g.neighbors_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v + 1]);
    std::sort(first, last, [](const Neighbor& a, const Neighbor& b) { return a.v < b.v; });
    auto dup = std::adjacent_find(first, last,
                                  [](const Neighbor& a, const Neighbor& b) { return a.v == b.v; });
    if (dup != last) {
      throw InvalidArgument("edge {" + std::to_string(v) + "," + std::to_string(dup->v) +
                            "} listed more than once");
    }
  }
  return g;
}

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

std::uint64_t parse_uint(std::string_view tok, std::size_t line) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw ParseError(line, "expected a non-negative integer, got '" + std::string(tok) + "'");
  }
  return value;
}

}  // namespace

ColoredGraph load(std::string_view text) {
  std::size_t line_no = 0;
  std::size_t declared_edges = 0;
  std::size_t seen_edges = 0;
  std::optional<GraphBuilder> builder;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    auto tok = split_ws(line);
    if (tok.empty()) continue;

    if (tok[0] == "p") {
      if (builder) throw ParseError(line_no, "duplicate header");
      if (tok.size() != 4 || tok[1] != "cgraph") {
        throw ParseError(line_no, "header must be 'p cgraph <n> <m>'");
      }
      builder.emplace(parse_uint(tok[2], line_no));
      declared_edges = parse_uint(tok[3], line_no);
      continue;
    }
    if (!builder) throw ParseError(line_no, "missing 'p cgraph' header");
    try {
      if (tok[0] == "c") {
        if (tok.size() != 3) throw ParseError(line_no, "color line must be 'c <v> <color>'");
        auto v = parse_uint(tok[1], line_no);
        auto c = parse_uint(tok[2], line_no);
        if (v >= builder->n()) throw ParseError(line_no, "vertex out of range");
        builder->set_color(static_cast<Vertex>(v), static_cast<Color>(c));
      } else if (tok[0] == "e") {
        if (tok.size() != 3 && tok.size() != 4) {
          throw ParseError(line_no, "edge line must be 'e <u> <v> [mult]'");
        }
        auto u = parse_uint(tok[1], line_no);
        auto v = parse_uint(tok[2], line_no);
        auto mult = tok.size() == 4 ? parse_uint(tok[3], line_no) : 1;
        if (u >= builder->n() || v >= builder->n()) throw ParseError(line_no, "vertex out of range");
        if (u == v) throw ParseError(line_no, "self-loop at vertex " + std::to_string(u));
        if (mult < 1 || mult > 255) throw ParseError(line_no, "multiplicity must be in [1, 255]");
        builder->add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v),
                          static_cast<unsigned>(mult));
        ++seen_edges;
      } else {
        throw ParseError(line_no, "unknown line type '" + std::string(tok[0]) + "'");
      }
    } catch (const InvalidArgument& e) {
      throw ParseError(line_no, e.what());
    }
  }
  if (!builder) throw ParseError(line_no, "missing 'p cgraph' header");
  if (seen_edges != declared_edges) {
    throw ParseError(line_no, "header declares " + std::to_string(declared_edges) +
                                  " edges but " + std::to_string(seen_edges) + " were listed");
  }
  try {
    return builder->build();
  } catch (const InvalidArgument& e) {
    throw ParseError(line_no, e.what());
  }
}

std::string save(const ColoredGraph& g) {
  std::ostringstream out;
  out << "p cgraph " << g.n() << ' ' << g.num_edges() << '\n';
  for (Vertex v = 0; v < g.n(); ++v) {
    if (g.color(v) != 0) out << "c " << v << ' ' << g.color(v) << '\n';
  }
  for (Vertex u = 0; u < g.n(); ++u) {
    for (const Neighbor& nb : g.neighbors(u)) {
      if (nb.v <= u) continue;
      out << "e " << u << ' ' << nb.v;
      if (nb.mult > 1) out << ' ' << static_cast<unsigned>(nb.mult);
      out << '\n';
    }
  }
  return out.str();
}

ColoredGraph load_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidArgument("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return load(buf.str());
}

void save_file(const ColoredGraph& g, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidArgument("cannot write '" + path + "'");
  out << save(g);
}

ColoredGraph disjoint_union(const ColoredGraph& g, const ColoredGraph& h) {
  GraphBuilder b(g.n() + h.n());
  const auto shift = static_cast<Vertex>(g.n());
  for (Vertex v = 0; v < g.n(); ++v) {
    b.set_color(v, g.color(v));
    for (const Neighbor& nb : g.neighbors(v)) {
      if (nb.v > v) b.add_edge(v, nb.v, nb.mult);
    }
  }
  for (Vertex v = 0; v < h.n(); ++v) {
    b.set_color(v + shift, h.color(v));
    for (const Neighbor& nb : h.neighbors(v)) {
      if (nb.v > v) b.add_edge(v + shift, nb.v + shift, nb.mult);
    }
  }
  return b.build();
}

ColoredGraph complement(const ColoredGraph& g) {
  if (!g.is_simple()) throw InvalidArgument("complement requires a simple graph");
  GraphBuilder b(g.n());
  std::vector<char> adj(g.n(), 0);
  for (Vertex u = 0; u < g.n(); ++u) {
    b.set_color(u, g.color(u));
    for (const Neighbor& nb : g.neighbors(u)) adj[nb.v] = 1;
    for (Vertex v = u + 1; v < g.n(); ++v) {
      if (!adj[v]) b.add_edge(u, v);
    }
    for (const Neighbor& nb : g.neighbors(u)) adj[nb.v] = 0;
  }
  return b.build();
}

namespace {

void check_range(const ColoredGraph& g, const VertexSet& x) {
  if (!x.empty() && x.ids().back() >= g.n()) throw InvalidArgument("vertex set out of range");
}

void check_disjoint(const VertexSet& x, const VertexSet& y) {
  for (Vertex v : x) {
    if (y.contains(v)) throw InvalidArgument("vertex sets X and Y overlap");
  }
}

Subgraph bipartite_impl(const ColoredGraph& g, const VertexSet& x, const VertexSet& y,
                        bool complemented) {
  check_range(g, x);
  check_range(g, y);
  check_disjoint(x, y);
  if (complemented && !g.is_simple()) {
    throw InvalidArgument("bipartite complement requires a simple graph");
  }
  Subgraph out;
  out.original.assign(x.begin(), x.end());
  out.original.insert(out.original.end(), y.begin(), y.end());
  GraphBuilder b(out.original.size());
  const auto xs = static_cast<Vertex>(x.size());
  for (Vertex i = 0; i < out.original.size(); ++i) b.set_color(i, g.color(out.original[i]));
  for (Vertex i = 0; i < x.size(); ++i) {
    for (Vertex j = 0; j < y.size(); ++j) {
      unsigned mult = g.multiplicity(x[i], y[j]);
      if (complemented) mult = mult ? 0 : 1;
      if (mult) b.add_edge(i, xs + j, mult);
    }
  }
  out.graph = b.build();
  return out;
}

}  // namespace

Subgraph induced(const ColoredGraph& g, const VertexSet& x) {
  check_range(g, x);
  Subgraph out;
  out.original.assign(x.begin(), x.end());
  GraphBuilder b(x.size());
  for (Vertex i = 0; i < x.size(); ++i) {
    b.set_color(i, g.color(x[i]));
    for (const Neighbor& nb : g.neighbors(x[i])) {
      if (nb.v <= x[i]) continue;
      auto it = std::lower_bound(x.begin(), x.end(), nb.v);
      if (it != x.end() && *it == nb.v) {
        b.add_edge(i, static_cast<Vertex>(it - x.begin()), nb.mult);
      }
    }
  }
  out.graph = b.build();
  return out;
}

Subgraph bipartite_induced(const ColoredGraph& g, const VertexSet& x, const VertexSet& y) {
  return bipartite_impl(g, x, y, false);
}

Subgraph bipartite_complement(const ColoredGraph& g, const VertexSet& x, const VertexSet& y) {
  return bipartite_impl(g, x, y, true);
}

ColoredGraph permute(const ColoredGraph& g, std::span<const Vertex> perm) {
  if (perm.size() != g.n()) throw InvalidArgument("permutation size mismatch");
  std::vector<char> hit(g.n(), 0);
  for (Vertex p : perm) {
    if (p >= g.n() || hit[p]) throw InvalidArgument("not a permutation");
    hit[p] = 1;
  }
  GraphBuilder b(g.n());
  for (Vertex v = 0; v < g.n(); ++v) {
    b.set_color(perm[v], g.color(v));
    for (const Neighbor& nb : g.neighbors(v)) {
      if (nb.v > v) b.add_edge(perm[v], perm[nb.v], nb.mult);
    }
  }
  return b.build();
}

ColoredGraph recolor(const ColoredGraph& g, std::span<const Color> colors) {
  if (colors.size() != g.n()) throw InvalidArgument("coloring size mismatch");
  GraphBuilder b(g.n());
  for (Vertex v = 0; v < g.n(); ++v) {
    b.set_color(v, colors[v]);
    for (const Neighbor& nb : g.neighbors(v)) {
      if (nb.v > v) b.add_edge(v, nb.v, nb.mult);
    }
  }
  return b.build();
}

bool is_isomorphism(const ColoredGraph& g, const ColoredGraph& h, std::span<const Vertex> map) {
  if (g.n() != h.n() || map.size() != g.n() || g.num_edges() != h.num_edges()) return false;
  std::vector<char> hit(h.n(), 0);
  for (Vertex v = 0; v < g.n(); ++v) {
    if (map[v] >= h.n() || hit[map[v]]) return false;
    hit[map[v]] = 1;
    if (g.color(v) != h.color(map[v])) return false;
  }
  for (Vertex v = 0; v < g.n(); ++v) {
    if (g.neighbors(v).size() != h.neighbors(map[v]).size()) return false;
    for (const Neighbor& nb : g.neighbors(v)) {
      if (h.multiplicity(map[v], map[nb.v]) != nb.mult) return false;
    }
  }
  return true;
}

std::vector<Vertex> random_permutation(std::size_t n, std::uint64_t seed) {
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::mt19937_64 rng(seed);
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

namespace graphs {

ColoredGraph empty(std::size_t n) { return GraphBuilder(n).build(); }

ColoredGraph complete(std::size_t n) {
  GraphBuilder b(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) b.add_edge(u, v);
  return b.build();
}

ColoredGraph complete_bipartite(std::size_t s, std::size_t t) {
  GraphBuilder b(s + t);
  for (Vertex u = 0; u < s; ++u)
    for (Vertex v = 0; v < t; ++v) b.add_edge(u, static_cast<Vertex>(s) + v);
  return b.build();
}

ColoredGraph cycle(std::size_t n) {
  if (n < 3) throw InvalidArgument("cycle needs n >= 3");
  GraphBuilder b(n);
  for (Vertex v = 0; v < n; ++v) b.add_edge(v, static_cast<Vertex>((v + 1) % n));
  return b.build();
}

ColoredGraph path(std::size_t n) {
  GraphBuilder b(n);
  for (Vertex v = 0; v + 1 < n; ++v) b.add_edge(v, v + 1);
  return b.build();
}

ColoredGraph stars(std::size_t s, std::size_t t) {
  GraphBuilder b(s + s * t);
  for (Vertex c = 0; c < s; ++c)
    for (Vertex l = 0; l < t; ++l) b.add_edge(c, static_cast<Vertex>(s + c * t + l));
  return b.build();
}

ColoredGraph matching(std::size_t m) {
  GraphBuilder b(2 * m);
  for (Vertex i = 0; i < m; ++i) b.add_edge(2 * i, 2 * i + 1);
  return b.build();
}

namespace {

std::vector<std::vector<Vertex>> k_subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<Vertex>> out;
  std::vector<Vertex> cur;
  auto rec = [&](auto&& self, Vertex next) -> void {
    if (cur.size() == k) {
      out.push_back(cur);
      return;
    }
    for (Vertex i = next; i < n; ++i) {
      cur.push_back(i);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

std::size_t intersection_size(const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
  std::size_t c = 0;
  for (Vertex x : a) c += std::count(b.begin(), b.end(), x);
  return c;
}

ColoredGraph subset_graph(std::size_t n, std::size_t k, std::size_t meet) {
  if (k > n) throw InvalidArgument("subset size exceeds ground set");
  auto sets = k_subsets(n, k);
  GraphBuilder b(sets.size());
  for (Vertex i = 0; i < sets.size(); ++i)
    for (Vertex j = i + 1; j < sets.size(); ++j)
      if (intersection_size(sets[i], sets[j]) == meet) b.add_edge(i, j);
  return b.build();
}

}  // namespace

ColoredGraph petersen() { return kneser(5, 2); }

ColoredGraph johnson(std::size_t n, std::size_t k) {
  if (k == 0) throw InvalidArgument("johnson graph needs k >= 1");
  return subset_graph(n, k, k - 1);
}

ColoredGraph kneser(std::size_t n, std::size_t k) { return subset_graph(n, k, 0); }

ColoredGraph random_gnp(std::size_t n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  GraphBuilder b(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (coin(rng)) b.add_edge(u, v);
  return b.build();
}

ColoredGraph random_gnm(std::size_t n, std::size_t m, std::uint64_t seed) {
  if (n < 2 || m > n * (n - 1) / 2) throw InvalidArgument("too many edges for gnm");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Vertex> pick(0, static_cast<Vertex>(n - 1));
  std::unordered_set<std::uint64_t> seen;
  seen.reserve(m * 2);
  GraphBuilder b(n);
  while (seen.size() < m) {
    Vertex u = pick(rng), v = pick(rng);
    if (u == v) continue;
    if (u > v) std::swap(u, v);
    if (seen.insert((static_cast<std::uint64_t>(u) << 32) | v).second) b.add_edge(u, v);
  }
  return b.build();
}

ColoredGraph random_tree(std::size_t n, std::uint64_t seed) {
  GraphBuilder b(n);
  if (n <= 1) return b.build();
  if (n == 2) {
    b.add_edge(0, 1);
    return b.build();
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Vertex> pick(0, static_cast<Vertex>(n - 1));
  std::vector<Vertex> code(n - 2);
  for (auto& c : code) c = pick(rng);
  std::vector<std::size_t> deg(n, 1);
  for (Vertex c : code) ++deg[c];
  for (Vertex c : code) {
    Vertex leaf = 0;
    while (deg[leaf] != 1) ++leaf;
    b.add_edge(leaf, c);
    --deg[leaf];
    --deg[c];
  }
  Vertex u = 0;
  while (deg[u] != 1) ++u;
  Vertex v = u + 1;
  while (deg[v] != 1) ++v;
  b.add_edge(u, v);
  return b.build();
}

ColoredGraph from_mask(std::size_t n, std::uint64_t mask) {
  GraphBuilder b(n);
  unsigned bit = 0;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v, ++bit)
      if ((mask >> bit) & 1u) b.add_edge(u, v);
  return b.build();
}

ColoredGraph by_name(std::string_view name, std::span<const std::int64_t> params,
                     std::uint64_t seed) {
  auto need = [&](std::size_t count) {
    if (params.size() != count) {
      throw InvalidArgument(std::string(name) + " expects " + std::to_string(count) +
                            " parameter(s)");
    }
    for (auto p : params)
      if (p < 0) throw InvalidArgument("parameters must be non-negative");
  };
  auto at = [&](std::size_t i) { return static_cast<std::size_t>(params[i]); };
  if (name == "empty") return need(1), empty(at(0));
  if (name == "complete") return need(1), complete(at(0));
  if (name == "complete_bipartite") return need(2), complete_bipartite(at(0), at(1));
  if (name == "cycle") return need(1), cycle(at(0));
  if (name == "path") return need(1), path(at(0));
  if (name == "stars") return need(2), stars(at(0), at(1));
  if (name == "matching") return need(1), matching(at(0));
  if (name == "petersen") return need(0), petersen();
  if (name == "johnson") return need(2), johnson(at(0), at(1));
  if (name == "kneser") return need(2), kneser(at(0), at(1));
  if (name == "tree") return need(1), random_tree(at(0), seed);
  if (name == "gnp") return need(1), random_gnp(at(0), 0.5, seed);
  throw InvalidArgument("unknown graph family '" + std::string(name) + "'");
}

}  // namespace graphs

}  // namespace crkit
