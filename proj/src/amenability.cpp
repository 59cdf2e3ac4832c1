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

#include "crkit/amenability.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include "crkit/oracles.hpp"

namespace crkit {

namespace {

Violation make(char condition, std::vector<ClassId> cells, std::string kind = {},
               bool cycle = false) {
  return Violation{condition, std::move(kind), std::move(cells), cycle};
}

std::optional<Violation> check_ab(const CellGraphData& cg) {
  for (ClassId c = 0; c < cg.cells.size(); ++c)
    if (cg.cell_labels[c].kind == CellKind::Irregular) return make('A', {c});
  for (const CellPair& p : cg.pairs)
    if (p.label.kind == PairKind::Irregular) return make('B', {p.x, p.y});
  return std::nullopt;
}

// Cells on the tree path from the component root to `to`.
std::vector<ClassId> tree_path(const CellGraphData& cg, const AnisotropicComponent& comp,
                               ClassId to) {
  const std::size_t k = cg.cells.size();
  std::vector<std::vector<ClassId>> adj(k);
  for (auto [a, b] : comp.edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::vector<ClassId> parent(k, comp.root);
  std::vector<char> seen(k, 0);
  std::deque<ClassId> todo{comp.root};
  seen[comp.root] = 1;
  while (!todo.empty()) {
    ClassId c = todo.front();
    todo.pop_front();
    for (ClassId d : adj[c]) {
      if (seen[d]) continue;
      seen[d] = 1;
      parent[d] = c;
      todo.push_back(d);
    }
  }
  std::vector<ClassId> path{to};
  while (path.back() != comp.root) path.push_back(parent[path.back()]);
  std::reverse(path.begin(), path.end());
  return path;
}

bool aniso(const CellGraphData& cg, ClassId a, ClassId b) {
  const PairLabel* l = cg.find_pair(a, b);
  return l && l->anisotropic();
}

bool hetero(const CellGraphData& cg, ClassId c) { return !cg.cell_labels[c].homogeneous(); }

// Distinct valid cells joined consecutively by anisotropic edges.
bool is_aniso_path(const CellGraphData& cg, const std::vector<ClassId>& cells) {
  for (ClassId c : cells)
    if (c >= cg.cells.size()) return false;
  std::vector<ClassId> sorted = cells;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  for (std::size_t i = 0; i + 1 < cells.size(); ++i)
    if (!aniso(cg, cells[i], cells[i + 1])) return false;
  return true;
}

bool sizes_equal(const CellGraphData& cg, const std::vector<ClassId>& cells, std::size_t from,
                 std::size_t to) {
  for (std::size_t i = from; i < to; ++i)
    if (cg.cell_size(cells[i]) != cg.cell_size(cells[from])) return false;
  return true;
}

// Which of C, D, E, F the anisotropic path `p` (at least two cells)
// violates, if any.
std::optional<Violation> classify_path(const CellGraphData& cg, const std::vector<ClassId>& p) {
  const std::size_t len = p.size();
  const bool closes = len >= 3 && aniso(cg, p.back(), p.front());
  if (sizes_equal(cg, p, 0, len)) {
    if (hetero(cg, p.front()) && hetero(cg, p.back())) return make('C', p);
    if (closes) return make('D', p, {}, true);
    return std::nullopt;
  }
  if (cg.cell_size(p[0]) >= cg.cell_size(p[1])) return std::nullopt;
  if (sizes_equal(cg, p, 1, len)) {
    if (closes) return make('E', p, {}, true);
    if (hetero(cg, p.back())) return make('F', p);
    return std::nullopt;
  }
  if (len >= 3 && sizes_equal(cg, p, 1, len - 1) &&
      cg.cell_size(p[len - 2]) > cg.cell_size(p[len - 1])) {
    return make('E', p);
  }
  return std::nullopt;
}

// Whether `p` can still be extended into a violation: it is uniform, or
// |X0| < |X1| = ... = |Xk|.
bool extendable(const CellGraphData& cg, const std::vector<ClassId>& p) {
  if (sizes_equal(cg, p, 0, p.size())) return true;
  return cg.cell_size(p[0]) < cg.cell_size(p[1]) && sizes_equal(cg, p, 1, p.size());
}

}  // namespace

AmenabilityVerdict is_amenable(const ColoredGraph& g) {
  return is_amenable(g, build_cell_graph(g));
}

AmenabilityVerdict is_amenable(const ColoredGraph&, const CellGraphData& cg) {
  AmenabilityVerdict verdict;
  auto fail = [&](Violation v) {
    verdict.amenable = false;
    verdict.violation = std::move(v);
    return verdict;
  };
  if (auto v = check_ab(cg)) return fail(*v);
  for (const AnisotropicComponent& comp : cg.components) {
    if (!comp.is_tree) return fail(make('G', comp.cells, "not-tree"));
    if (comp.heterogeneous.size() > 1) {
      return fail(make('H', {comp.heterogeneous[0], comp.heterogeneous[1]}, "two-heterogeneous"));
    }
    if (comp.heterogeneous.size() == 1 &&
        cg.cell_size(comp.heterogeneous[0]) > comp.min_cardinality) {
      return fail(make('H', {comp.min_cells.front(), comp.heterogeneous[0]},
                       "heterogeneous-not-minimal"));
    }
    if (comp.monotonicity_violation) {
      auto [parent, child] = *comp.monotonicity_violation;
      std::vector<ClassId> path = tree_path(cg, comp, parent);
      path.push_back(child);
      return fail(make('G', std::move(path), "monotonicity"));
    }
  }
  return verdict;
}

AmenabilityVerdict check_cdef(const ColoredGraph& g, std::size_t max_states) {
  const CellGraphData cg = build_cell_graph(g);
  AmenabilityVerdict verdict;
  if (auto v = check_ab(cg)) {
    verdict.amenable = false;
    verdict.violation = *v;
    return verdict;
  }
  const std::size_t k = cg.cells.size();
  std::vector<std::vector<ClassId>> adj(k);
  for (const CellPair& p : cg.pairs) {
    if (!p.label.anisotropic()) continue;
    adj[p.x].push_back(p.y);
    adj[p.y].push_back(p.x);
  }
  for (auto& a : adj) std::sort(a.begin(), a.end());

  std::size_t states = 0;
  std::vector<ClassId> path;
  std::vector<char> on_path(k, 0);
  std::optional<Violation> found;
  auto dfs = [&](auto&& self) -> void {
    if (++states > max_states) {
      throw BudgetExceeded("path enumeration exceeded " + std::to_string(max_states) + " states");
    }
    if ((states & 1023u) == 0) Deadline::check();
    if (path.size() >= 2) {
      if ((found = classify_path(cg, path))) return;
      if (!extendable(cg, path)) return;
    }
    for (ClassId d : adj[path.back()]) {
      if (on_path[d]) continue;
      path.push_back(d);
      on_path[d] = 1;
      self(self);
      on_path[d] = 0;
      path.pop_back();
      if (found) return;
    }
  };
  for (ClassId s = 0; s < k && !found; ++s) {
    path = {s};
    on_path[s] = 1;
    dfs(dfs);
    on_path[s] = 0;
  }
  if (found) {
    verdict.amenable = false;
    verdict.violation = std::move(found);
  }
  return verdict;
}

bool verify_violation(const CellGraphData& cg, const Violation& v) {
  const auto& c = v.cells;
  for (ClassId x : c)
    if (x >= cg.cells.size()) return false;
  switch (v.condition) {
    case 'A':
      return c.size() == 1 && cg.cell_labels[c[0]].kind == CellKind::Irregular;
    case 'B':
      return c.size() == 2 && c[0] != c[1] && cg.pair_label(c[0], c[1]).kind == PairKind::Irregular;
    case 'C':
      return c.size() >= 2 && is_aniso_path(cg, c) && sizes_equal(cg, c, 0, c.size()) &&
             hetero(cg, c.front()) && hetero(cg, c.back());
    case 'D':
      return c.size() >= 3 && is_aniso_path(cg, c) && aniso(cg, c.back(), c.front()) &&
             sizes_equal(cg, c, 0, c.size());
    case 'E':
      if (c.size() < 3 || !is_aniso_path(cg, c)) return false;
      if (cg.cell_size(c[0]) >= cg.cell_size(c[1])) return false;
      if (v.cycle) return aniso(cg, c.back(), c.front()) && sizes_equal(cg, c, 1, c.size());
      return sizes_equal(cg, c, 1, c.size() - 1) &&
             cg.cell_size(c[c.size() - 2]) > cg.cell_size(c.back());
    case 'F':
      return c.size() >= 2 && is_aniso_path(cg, c) && cg.cell_size(c[0]) < cg.cell_size(c[1]) &&
             sizes_equal(cg, c, 1, c.size()) && hetero(cg, c.back());
    case 'G': {
      if (c.empty()) return false;
      const AnisotropicComponent& comp = cg.components[cg.component_of[c[0]]];
      if (v.kind == "not-tree") return !comp.is_tree && c == comp.cells;
      if (v.kind != "monotonicity" || c.size() < 2 || !is_aniso_path(cg, c)) return false;
      const bool root_ok = cg.cell_size(c[0]) == comp.min_cardinality ||
                           (comp.heterogeneous.size() == 1 && comp.heterogeneous[0] == c[0]);
      const std::size_t last = c.size() - 1;
      return comp.is_tree && root_ok && cg.cell_size(c[last - 1]) > cg.cell_size(c[last]);
    }
    case 'H': {
      if (c.size() != 2 || c[0] == c[1] || cg.component_of[c[0]] != cg.component_of[c[1]]) {
        return false;
      }
      if (v.kind == "two-heterogeneous") return hetero(cg, c[0]) && hetero(cg, c[1]);
      if (v.kind == "heterogeneous-not-minimal") {
        return hetero(cg, c[1]) && cg.cell_size(c[0]) < cg.cell_size(c[1]);
      }
      return false;
    }
    default:
      return false;
  }
}

std::string describe(const Violation& v) {
  std::ostringstream out;
  out << "condition " << v.condition;
  if (!v.kind.empty()) out << " (" << v.kind << ")";
  out << (v.cycle ? " cycle" : " cells");
  for (ClassId c : v.cells) out << ' ' << c;
  return out.str();
}

bool amenable_bruteforce(const ColoredGraph& g, std::size_t n_budget) {
  if (g.n() > n_budget) {
    throw BudgetExceeded("brute force limited to " + std::to_string(n_budget) + " vertices");
  }
  std::vector<Color> colors;
  if (g.num_colors() > 1) colors.assign(g.colors().begin(), g.colors().end());
  return SmallGraphCatalog::get(g.n(), colors).amenable(g);
}

}  // namespace crkit
