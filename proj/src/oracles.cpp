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

#include "crkit/oracles.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <numeric>

#include "crkit/amenability.hpp"
#include "crkit/fractional_lp.hpp"
#include "union_search.hpp"

namespace crkit {

namespace {

class NodeCounter {
 public:
  explicit NodeCounter(std::size_t max) : max_(max) {}
  void tick() {
    if (++nodes_ > max_) throw BudgetExceeded("search exceeded " + std::to_string(max_) + " nodes");
    if ((nodes_ & 1023u) == 0) Deadline::check();
  }
  std::size_t nodes() const { return nodes_; }

 private:
  std::size_t max_;
  std::size_t nodes_ = 0;
};

void check_size(const ColoredGraph& g, const SearchBudget& budget) {
  if (g.n() > budget.max_vertices) {
    throw BudgetExceeded("graph has " + std::to_string(g.n()) + " vertices, budget is " +
                         std::to_string(budget.max_vertices));
  }
}

// Individualization-refinement over G+H. The first left vertex of the
// first smallest non-singleton class is matched against every right vertex
// of that class, which makes the search complete. on_leaf receives each
// verified isomorphism and returns true to stop.
template <class OnLeaf>
bool ir_search(detail::UnionSearch& s, const std::vector<ClassId>& coloring, NodeCounter& counter,
               OnLeaf& on_leaf) {
  counter.tick();
  const std::size_t n = s.n();
  std::vector<ClassId> stable = s.stabilize(coloring);
  std::vector<std::size_t> left, right;
  s.counts(stable, left, right);
  if (left != right) return false;
  if (s.num_classes() == n) {
    auto map = s.leaf_map(stable);
    return is_isomorphism(s.left(), s.right(), map) && on_leaf(map);
  }
  ClassId target = 0;
  std::size_t best = n + 1;
  for (ClassId c = 0; c < left.size(); ++c) {
    if (left[c] >= 2 && left[c] < best) {
      best = left[c];
      target = c;
    }
  }
  Vertex u = 0;
  while (stable[u] != target) ++u;
  for (Vertex v = 0; v < n; ++v) {
    if (stable[n + v] != target) continue;
    if (ir_search(s, s.individualize(stable, u, v), counter, on_leaf)) return true;
  }
  return false;
}

struct UnionFind {
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<std::size_t> parent;
};

Partition partition_from_roots(UnionFind& uf, std::size_t n) {
  std::vector<ClassId> id_of_root(n, ~ClassId{0});
  std::vector<ClassId> class_of(n);
  ClassId next = 0;
  for (std::size_t v = 0; v < n; ++v) {
    auto r = uf.find(v);
    if (id_of_root[r] == ~ClassId{0}) id_of_root[r] = next++;
    class_of[v] = id_of_root[r];
  }
  return Partition::from_class_of(std::move(class_of));
}

}  // namespace

AutGroup automorphisms(const ColoredGraph& g, std::size_t max_elements, SearchBudget budget) {
  check_size(g, budget);
  detail::UnionSearch s(g, g);
  NodeCounter counter(budget.max_nodes);
  AutGroup group;
  auto collect = [&](const std::vector<Vertex>& map) {
    if (group.elements.size() >= max_elements) {
      throw BudgetExceeded("automorphism group larger than " + std::to_string(max_elements));
    }
    group.elements.push_back(map);
    return false;
  };
  ir_search(s, s.initial(), counter, collect);
  std::sort(group.elements.begin(), group.elements.end());
  UnionFind uf(g.n());
  for (const auto& a : group.elements)
    for (Vertex v = 0; v < g.n(); ++v) uf.unite(v, a[v]);
  group.orbits = partition_from_roots(uf, g.n());
  return group;
}

std::optional<std::vector<Vertex>> isomorphic(const ColoredGraph& g, const ColoredGraph& h,
                                              SearchBudget budget) {
  if (g.n() != h.n() || g.num_edges() != h.num_edges()) return std::nullopt;
  check_size(g, budget);
  detail::UnionSearch s(g, h);
  NodeCounter counter(budget.max_nodes);
  std::optional<std::vector<Vertex>> found;
  auto first = [&](const std::vector<Vertex>& map) {
    found = map;
    return true;
  };
  ir_search(s, s.initial(), counter, first);
  return found;
}

Partition orbit_partition(const ColoredGraph& g, SearchBudget budget) {
  check_size(g, budget);
  const std::size_t n = g.n();
  detail::UnionSearch s(g, g);
  const std::vector<ClassId> base = s.stabilize(s.initial());
  NodeCounter counter(budget.max_nodes);
  UnionFind uf(n);
  std::vector<std::vector<Vertex>> cells(s.num_classes());
  for (Vertex v = 0; v < n; ++v) cells[base[v]].push_back(v);
  for (auto& cell : cells) {
    std::vector<Vertex> remaining = cell;
    while (!remaining.empty()) {
      const Vertex r = remaining.front();
      for (Vertex v : remaining) {
        if (uf.find(v) == uf.find(r)) continue;
        auto merge = [&](const std::vector<Vertex>& map) {
          for (Vertex x = 0; x < n; ++x) uf.unite(x, map[x]);
          return true;
        };
        ir_search(s, s.individualize(base, r, v), counter, merge);
      }
      std::erase_if(remaining, [&](Vertex v) { return uf.find(v) == uf.find(r); });
    }
  }
  return partition_from_roots(uf, n);
}

bool is_refinable(const ColoredGraph& g, SearchBudget budget) {
  return stable_partition(g).partition.same_cells(orbit_partition(g, budget));
}

bool is_orbit_partition(const ColoredGraph& g, const Partition& p, SearchBudget budget) {
  if (p.is_discrete()) return true;
  // The subgroup fixing every cell is Aut of G recolored by p, provided p
  // refines the colors of G.
  for (const VertexSet& cell : p.classes)
    for (Vertex v : cell)
      if (g.color(v) != g.color(cell[0])) return false;
  ColoredGraph colored = recolor(g, p.class_of);
  return orbit_partition(colored, budget).same_cells(p);
}

std::vector<Partition> equitable_partitions(const ColoredGraph& g, std::size_t max_candidates) {
  const std::size_t n = g.n();
  const Partition stable = stable_partition(g).partition;
  // Vertices in cell order; each vertex joins an existing block of its own
  // cell or opens a new one (restricted growth within the cell).
  std::vector<Vertex> order;
  std::vector<std::size_t> cell_start;
  for (const VertexSet& cell : stable.classes) {
    cell_start.push_back(order.size());
    order.insert(order.end(), cell.begin(), cell.end());
  }
  std::vector<ClassId> block(n);
  std::vector<Partition> out;
  std::size_t candidates = 0;
  // Blocks of the current cell occupy ids [first_block, next_block).
  auto rec = [&](auto&& self, std::size_t i, std::size_t cell_index, ClassId first_block,
                 ClassId next_block) -> void {
    if (i == n) {
      if (++candidates > max_candidates) {
        throw BudgetExceeded("more than " + std::to_string(max_candidates) +
                             " candidate partitions");
      }
      if ((candidates & 1023u) == 0) Deadline::check();
      Partition p = Partition::from_class_of(block);
      if (is_equitable(g, p)) out.push_back(std::move(p));
      return;
    }
    if (cell_index + 1 < cell_start.size() && i == cell_start[cell_index + 1]) {
      ++cell_index;
      first_block = next_block;
    }
    const Vertex v = order[i];
    for (ClassId b = first_block; b <= next_block; ++b) {
      block[v] = b;
      self(self, i + 1, cell_index, first_block, b == next_block ? next_block + 1 : next_block);
    }
  };
  if (n == 0) {
    out.push_back(Partition::from_class_of({}));
    return out;
  }
  rec(rec, 0, 0, 0, 0);
  return out;
}

bool is_godsil(const ColoredGraph& g, std::size_t max_candidates, SearchBudget budget) {
  for (const Partition& p : equitable_partitions(g, max_candidates))
    if (!is_orbit_partition(g, p, budget)) return false;
  return true;
}

TinhoferVerdict is_tinhofer_bruteforce(const ColoredGraph& g, SearchBudget budget) {
  check_size(g, budget);
  const std::size_t n = g.n();
  detail::UnionSearch s(g, g);
  NodeCounter counter(budget.max_nodes);
  TinhoferVerdict verdict;
  std::vector<IndividualizationStep> path;

  auto orbit_reps = [&](const std::vector<ClassId>& side) {
    std::vector<Color> colors(side.begin(), side.end());
    Partition orbits = orbit_partition(recolor(g, colors), budget);
    std::vector<char> rep(n, 0);
    for (const VertexSet& o : orbits.classes) rep[o[0]] = 1;
    return rep;
  };

  auto explore = [&](auto&& self, const std::vector<ClassId>& coloring) -> bool {
    counter.tick();
    std::vector<ClassId> stable = s.stabilize(coloring);
    std::vector<std::size_t> left, right;
    s.counts(stable, left, right);
    if (left != right) {
      verdict.reason = "histogram";
      return false;
    }
    if (s.num_classes() == n) {
      if (is_isomorphism(g, g, s.leaf_map(stable))) return true;
      verdict.reason = "final-map";
      return false;
    }
    const std::size_t classes = left.size();
    std::vector<ClassId> lcol(stable.begin(), stable.begin() + static_cast<std::ptrdiff_t>(n));
    std::vector<ClassId> rcol(stable.begin() + static_cast<std::ptrdiff_t>(n), stable.end());
    const auto lrep = orbit_reps(lcol);
    const auto rrep = orbit_reps(rcol);
    const std::size_t round = path.size();
    for (ClassId c = 0; c < classes; ++c) {
      if (left[c] < 2) continue;
      for (Vertex u = 0; u < n; ++u) {
        if (lcol[u] != c || !lrep[u]) continue;
        for (Vertex v = 0; v < n; ++v) {
          if (rcol[v] != c || !rrep[v]) continue;
          path.push_back({round, c, u, v});
          if (!self(self, s.individualize(stable, u, v))) return false;
          path.pop_back();
        }
      }
    }
    return true;
  };

  verdict.tinhofer = explore(explore, s.initial());
  if (!verdict.tinhofer) verdict.failing = path;
  verdict.nodes = counter.nodes();
  return verdict;
}

SmallGraphCatalog::SmallGraphCatalog(std::size_t n, std::vector<Color> colors)
    : n_(n), colors_(std::move(colors)) {
  if (n > 8) throw BudgetExceeded("catalog limited to 8 vertices");
  if (!colors_.empty() && colors_.size() != n) throw InvalidArgument("coloring size mismatch");
  const std::size_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::uint64_t total = std::uint64_t{1} << bits;
  std::vector<ColoredGraph> reps;  // parallel to all IsoClass entries, flattened
  std::vector<std::vector<std::size_t>> rep_index;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    if ((mask & 0xfffu) == 0) Deadline::check();
    ColoredGraph g = graph(mask);
    auto fp = cr_fingerprint(g);
    auto [it, inserted] = index_.try_emplace(fp, buckets_.size());
    if (inserted) {
      buckets_.push_back({std::move(fp), {{mask, 1}}});
      rep_index.push_back({reps.size()});
      reps.push_back(std::move(g));
      continue;
    }
    Bucket& bucket = buckets_[it->second];
    auto& idx = rep_index[it->second];
    bool placed = false;
    for (std::size_t k = 0; k < bucket.classes.size(); ++k) {
      if (isomorphic(reps[idx[k]], g)) {
        ++bucket.classes[k].count;
        placed = true;
        break;
      }
    }
    if (!placed) {
      bucket.classes.push_back({mask, 1});
      idx.push_back(reps.size());
      reps.push_back(std::move(g));
    }
  }
}

ColoredGraph SmallGraphCatalog::graph(std::uint64_t mask) const {
  GraphBuilder b(n_);
  for (Vertex v = 0; v < colors_.size(); ++v) b.set_color(v, colors_[v]);
  unsigned bit = 0;
  for (Vertex u = 0; u < n_; ++u)
    for (Vertex v = u + 1; v < n_; ++v, ++bit)
      if ((mask >> bit) & 1u) b.add_edge(u, v);
  return b.build();
}

bool SmallGraphCatalog::amenable(const ColoredGraph& g) const {
  if (g.n() != n_) throw InvalidArgument("graph size does not match catalog");
  if (!g.is_simple()) throw InvalidArgument("catalog covers simple graphs only");
  auto it = index_.find(cr_fingerprint(g));
  if (it == index_.end()) throw InvalidArgument("graph coloring does not match catalog");
  return buckets_[it->second].classes.size() == 1;
}

const SmallGraphCatalog& SmallGraphCatalog::get(std::size_t n, const std::vector<Color>& colors) {
  static std::mutex mu;
  static std::map<std::pair<std::size_t, std::vector<Color>>, std::unique_ptr<SmallGraphCatalog>>
      cache;
  std::lock_guard lock(mu);
  auto& slot = cache[{n, colors}];
  if (!slot) slot = std::make_unique<SmallGraphCatalog>(n, colors);
  return *slot;
}

SweepReport sweep(std::size_t n, std::size_t probe_trials, std::uint64_t seed) {
  if (n > 7) throw BudgetExceeded("sweep limited to 7 vertices");
  const SmallGraphCatalog& catalog = SmallGraphCatalog::get(n);
  SweepReport report;
  report.n = n;
  auto violate = [&](bool ok, const std::string& what, std::uint64_t mask, std::size_t weight) {
    if (ok) return;
    report.inclusion_violations += weight;
    if (report.violations.size() < 10)
      report.violations.push_back(what + " (mask " + std::to_string(mask) + ")");
  };
  for (const auto& bucket : catalog.buckets()) {
    const bool amenable_bf = bucket.classes.size() == 1;
    for (const auto& cls : bucket.classes) {
      const std::size_t w = cls.count;
      ColoredGraph g = catalog.graph(cls.mask);
      const bool discrete = is_discrete(g);
      const bool amenable = is_amenable(g).amenable;
      const bool godsil = is_godsil(g);
      const bool tinhofer = is_tinhofer_bruteforce(g).tinhofer;
      const bool refinable = is_refinable(g);
      bool noncompact = false;
      if (probe_trials > 0) noncompact = compact_probe(g, probe_trials, seed).witness.has_value();
      report.labeled += w;
      report.iso_classes += 1;
      report.discrete += discrete ? w : 0;
      report.amenable += amenable ? w : 0;
      report.amenable_bruteforce += amenable_bf ? w : 0;
      report.godsil += godsil ? w : 0;
      report.tinhofer += tinhofer ? w : 0;
      report.refinable += refinable ? w : 0;
      report.probe_noncompact += noncompact ? w : 0;
      violate(!discrete || amenable, "discrete but not amenable", cls.mask, w);
      violate(amenable == amenable_bf, "recognizer disagrees with brute force", cls.mask, w);
      violate(!amenable || !noncompact, "amenable but probe found a non-integral vertex", cls.mask,
              w);
      violate(!amenable || godsil, "amenable but not Godsil", cls.mask, w);
      violate(!godsil || tinhofer, "Godsil but not Tinhofer", cls.mask, w);
      violate(!tinhofer || refinable, "Tinhofer but not refinable", cls.mask, w);
    }
  }
  return report;
}

}  // namespace crkit
