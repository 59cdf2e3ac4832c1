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

#include "crkit/cell_graph.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <sstream>

namespace crkit {

std::string to_string(CellKind k) {
  switch (k) {
    case CellKind::Empty: return "empty";
    case CellKind::Complete: return "complete";
    case CellKind::Matching: return "matching";
    case CellKind::CoMatching: return "co-matching";
    case CellKind::Pentagonal: return "pentagonal";
    case CellKind::Irregular: return "irregular";
  }
  return "?";
}

std::string to_string(PairKind k) {
  switch (k) {
    case PairKind::IsotropicEmpty: return "empty";
    case PairKind::IsotropicComplete: return "complete";
    case PairKind::Constellation: return "constellation";
    case PairKind::CoConstellation: return "co-constellation";
    case PairKind::Irregular: return "irregular";
  }
  return "?";
}

namespace {

// Johnson's list of regular unigraphs.
CellLabel label_cell(std::size_t size, std::size_t d) {
  CellLabel l;
  l.degree = d;
  if (d == 0) {
    l.kind = CellKind::Empty;
  } else if (d + 1 == size) {
    l.kind = CellKind::Complete;
  } else if (d == 1) {
    l.kind = CellKind::Matching;
  } else if (d + 2 == size) {
    l.kind = CellKind::CoMatching;
  } else if (size == 5 && d == 2) {
    l.kind = CellKind::Pentagonal;
  } else {
    l.kind = CellKind::Irregular;
  }
  return l;
}

// Koren's list of biregular bigraphs determined by their degrees.
PairLabel label_pair(std::size_t nx, std::size_t ny, std::size_t d_xy, std::size_t d_yx) {
  PairLabel l;
  l.d_xy = d_xy;
  l.d_yx = d_yx;
  if (d_xy == 0) {
    l.kind = PairKind::IsotropicEmpty;
    return l;
  }
  if (d_xy == ny) {
    l.kind = PairKind::IsotropicComplete;
    return l;
  }
  l.center_is_x = nx <= ny;
  const std::size_t centers = l.center_is_x ? nx : ny;
  const std::size_t leaves = l.center_is_x ? ny : nx;
  const std::size_t leaf_degree = l.center_is_x ? d_yx : d_xy;
  l.s = centers;
  l.t = leaves / centers;
  if (leaf_degree == 1) {
    l.kind = PairKind::Constellation;
  } else if (leaf_degree + 1 == centers) {
    l.kind = PairKind::CoConstellation;
  } else {
    l.kind = PairKind::Irregular;
  }
  return l;
}

}  // namespace

CellLabel classify_cell(const ColoredGraph& g, const VertexSet& x) {
  std::optional<std::size_t> degree;
  bool regular = true;
  for (Vertex v : x) {
    std::size_t d = 0;
    for (const Neighbor& nb : g.neighbors(v)) {
      if (!x.contains(nb.v)) continue;
      if (nb.mult != 1) throw InvalidArgument("cell classification requires a simple graph");
      ++d;
    }
    if (degree && *degree != d) regular = false;
    degree = d;
  }
  if (!regular) return CellLabel{CellKind::Irregular, 0};
  return label_cell(x.size(), degree.value_or(0));
}

PairLabel classify_pair(const ColoredGraph& g, const VertexSet& x, const VertexSet& y) {
  for (Vertex v : x)
    if (y.contains(v)) throw InvalidArgument("vertex sets X and Y overlap");
  auto degrees_into = [&](const VertexSet& from, const VertexSet& to) -> std::optional<std::size_t> {
    std::optional<std::size_t> degree;
    for (Vertex v : from) {
      std::size_t d = 0;
      for (const Neighbor& nb : g.neighbors(v)) {
        if (!to.contains(nb.v)) continue;
        if (nb.mult != 1) throw InvalidArgument("pair classification requires a simple graph");
        ++d;
      }
      if (degree && *degree != d) return std::nullopt;
      degree = d;
    }
    return degree.value_or(0);
  };
  auto dxy = degrees_into(x, y);
  auto dyx = degrees_into(y, x);
  if (!dxy || !dyx) {
    PairLabel l;
    l.kind = PairKind::Irregular;
    return l;
  }
  return label_pair(x.size(), y.size(), *dxy, *dyx);
}

const PairLabel* CellGraphData::find_pair(ClassId a, ClassId b) const {
  if (a > b) std::swap(a, b);
  auto it = std::lower_bound(pairs.begin(), pairs.end(), std::make_pair(a, b),
                             [](const CellPair& p, const std::pair<ClassId, ClassId>& key) {
                               return std::make_pair(p.x, p.y) < key;
                             });
  if (it != pairs.end() && it->x == a && it->y == b) return &it->label;
  return nullptr;
}

PairLabel CellGraphData::pair_label(ClassId a, ClassId b) const {
  if (const PairLabel* l = find_pair(a, b)) {
    if (a <= b) return *l;
    PairLabel flipped = *l;
    std::swap(flipped.d_xy, flipped.d_yx);
    flipped.center_is_x = !flipped.center_is_x;
    return flipped;
  }
  return PairLabel{};
}

namespace {

std::vector<AnisotropicComponent> compute_components(const CellGraphData& cg,
                                                     std::vector<std::size_t>& component_of) {
  const std::size_t k = cg.cells.size();
  std::vector<std::vector<ClassId>> adj(k);
  for (const CellPair& p : cg.pairs) {
    if (!p.label.anisotropic()) continue;
    adj[p.x].push_back(p.y);
    adj[p.y].push_back(p.x);
  }
  for (auto& a : adj) std::sort(a.begin(), a.end());

  std::vector<AnisotropicComponent> comps;
  component_of.assign(k, static_cast<std::size_t>(-1));
  for (ClassId s = 0; s < k; ++s) {
    if (component_of[s] != static_cast<std::size_t>(-1)) continue;
    AnisotropicComponent comp;
    std::deque<ClassId> todo{s};
    component_of[s] = comps.size();
    while (!todo.empty()) {
      ClassId c = todo.front();
      todo.pop_front();
      comp.cells.push_back(c);
      for (ClassId d : adj[c]) {
        if (c < d) comp.edges.emplace_back(c, d);
        if (component_of[d] == static_cast<std::size_t>(-1)) {
          component_of[d] = comps.size();
          todo.push_back(d);
        }
      }
    }
    std::sort(comp.cells.begin(), comp.cells.end());
    std::sort(comp.edges.begin(), comp.edges.end());
    comp.is_tree = comp.edges.size() + 1 == comp.cells.size();
    comp.min_cardinality = cg.cell_size(comp.cells.front());
    for (ClassId c : comp.cells) {
      comp.min_cardinality = std::min(comp.min_cardinality, cg.cell_size(c));
      if (!cg.cell_labels[c].homogeneous()) comp.heterogeneous.push_back(c);
    }
    for (ClassId c : comp.cells)
      if (cg.cell_size(c) == comp.min_cardinality) comp.min_cells.push_back(c);
    comp.root = comp.heterogeneous.size() == 1 ? comp.heterogeneous.front() : comp.min_cells.front();

    if (comp.is_tree) {
      std::vector<char> seen(k, 0);
      std::deque<ClassId> bfs{comp.root};
      seen[comp.root] = 1;
      while (!bfs.empty() && !comp.monotonicity_violation) {
        ClassId c = bfs.front();
        bfs.pop_front();
        for (ClassId d : adj[c]) {
          if (seen[d]) continue;
          seen[d] = 1;
          if (cg.cell_size(c) > cg.cell_size(d)) {
            comp.monotonicity_violation = std::make_pair(c, d);
            break;
          }
          bfs.push_back(d);
        }
      }
    }
    comps.push_back(std::move(comp));
  }
  return comps;
}

}  // namespace

CellGraphData build_cell_graph(const ColoredGraph& g, const Partition& p) {
  if (!g.is_simple()) throw InvalidArgument("cell graph requires a simple graph");
  if (!is_equitable(g, p)) throw InvalidArgument("cell graph requires an equitable partition");
  CellGraphData cg;
  cg.cells = p;
  const std::size_t k = p.size();
  cg.cell_labels.resize(k);

  // degree_from[X] lists (Y, d_XY) for every Y adjacent to a vertex of X.
  std::vector<std::vector<std::pair<ClassId, std::size_t>>> degree_from(k);
  std::vector<std::size_t> count(k, 0);
  std::vector<ClassId> touched;
  for (ClassId x = 0; x < k; ++x) {
    const Vertex rep = p.classes[x][0];
    touched.clear();
    for (const Neighbor& nb : g.neighbors(rep)) {
      ClassId y = p.class_of[nb.v];
      if (count[y]++ == 0) touched.push_back(y);
    }
    std::sort(touched.begin(), touched.end());
    std::size_t inner = 0;
    for (ClassId y : touched) {
      if (y == x) {
        inner = count[y];
      } else {
        degree_from[x].emplace_back(y, count[y]);
      }
      count[y] = 0;
    }
    cg.cell_labels[x] = label_cell(p.classes[x].size(), inner);
  }
  for (ClassId x = 0; x < k; ++x) {
    for (auto [y, dxy] : degree_from[x]) {
      if (y < x) continue;
      auto& back = degree_from[y];
      auto it = std::lower_bound(back.begin(), back.end(), std::make_pair(x, std::size_t{0}));
      const std::size_t dyx = it->second;
      cg.pairs.push_back({x, y, label_pair(p.classes[x].size(), p.classes[y].size(), dxy, dyx)});
    }
  }
  std::sort(cg.pairs.begin(), cg.pairs.end(), [](const CellPair& a, const CellPair& b) {
    return std::make_pair(a.x, a.y) < std::make_pair(b.x, b.y);
  });
  cg.components = compute_components(cg, cg.component_of);
  return cg;
}

CellGraphData build_cell_graph(const ColoredGraph& g) {
  return build_cell_graph(g, stable_partition(g).partition);
}

std::vector<AnisotropicComponent> anisotropic_components(const CellGraphData& cg) {
  return cg.components;
}

namespace {

std::string pair_text(const PairLabel& l) {
  std::ostringstream out;
  out << to_string(l.kind);
  if (l.anisotropic()) out << "(" << l.s << "," << l.t << ")";
  out << " d=" << l.d_xy << "/" << l.d_yx;
  return out.str();
}

}  // namespace

std::string describe(const CellGraphData& cg) {
  std::ostringstream out;
  out << "cells " << cg.cells.size() << "\n";
  for (ClassId c = 0; c < cg.cells.size(); ++c) {
    out << "cell " << c << " size " << cg.cell_size(c) << " " << to_string(cg.cell_labels[c].kind)
        << " d=" << cg.cell_labels[c].degree << " :";
    for (Vertex v : cg.cells.classes[c]) out << ' ' << v;
    out << "\n";
  }
  for (const CellPair& p : cg.pairs) {
    out << "pair " << p.x << " " << p.y << " " << pair_text(p.label) << "\n";
  }
  out << "components " << cg.components.size() << "\n";
  for (std::size_t i = 0; i < cg.components.size(); ++i) {
    const auto& comp = cg.components[i];
    out << "component " << i << " cells";
    for (ClassId c : comp.cells) out << ' ' << c;
    out << " tree=" << (comp.is_tree ? "yes" : "no") << " heterogeneous=" << comp.heterogeneous.size()
        << " min=" << comp.min_cardinality << " root=" << comp.root
        << " monotone=" << (comp.is_tree && !comp.monotonicity_violation ? "yes" : "no") << "\n";
  }
  return out.str();
}

std::string to_dot(const CellGraphData& cg) {
  std::ostringstream out;
  out << "graph cells {\n";
  for (ClassId c = 0; c < cg.cells.size(); ++c) {
    const bool hetero = !cg.cell_labels[c].homogeneous();
    out << "  c" << c << " [label=\"" << c << ": " << to_string(cg.cell_labels[c].kind) << " |"
        << cg.cell_size(c) << "|\"" << (hetero ? ", shape=box" : "") << "];\n";
  }
  for (const CellPair& p : cg.pairs) {
    out << "  c" << p.x << " -- c" << p.y << " [label=\"" << pair_text(p.label) << "\""
        << (p.label.isotropic() ? ", style=dashed" : "") << "];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace crkit
