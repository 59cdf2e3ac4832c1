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

#include "crkit/refinement.hpp"

#include <algorithm>
#include <numeric>

namespace crkit {

Partition Partition::from_class_of(std::vector<ClassId> class_of, std::size_t round) {
  Partition p;
  ClassId k = 0;
  for (ClassId c : class_of) k = std::max(k, c + 1);
  std::vector<std::vector<Vertex>> members(k);
  for (Vertex v = 0; v < class_of.size(); ++v) members[class_of[v]].push_back(v);
  p.classes.reserve(k);
  for (ClassId c = 0; c < k; ++c) {
    if (members[c].empty()) {
      throw InvalidArgument("partition class ids are not contiguous (missing " +
                            std::to_string(c) + ")");
    }
    p.classes.emplace_back(std::move(members[c]));
  }
  p.class_of = std::move(class_of);
  p.round = round;
  return p;
}

bool Partition::same_cells(const Partition& other) const {
  if (class_of.size() != other.class_of.size() || size() != other.size()) return false;
  // Equal class counts plus a consistent id mapping means equal cells.
  std::vector<ClassId> map(size(), static_cast<ClassId>(-1));
  for (std::size_t v = 0; v < class_of.size(); ++v) {
    ClassId& m = map[class_of[v]];
    if (m == static_cast<ClassId>(-1)) {
      m = other.class_of[v];
    } else if (m != other.class_of[v]) {
      return false;
    }
  }
  return true;
}

Partition initial_partition(const ColoredGraph& g) {
  return Partition::from_class_of(std::vector<ClassId>(g.colors().begin(), g.colors().end()), 0);
}

namespace {

void check_partition(const ColoredGraph& g, const Partition& p) {
  if (p.class_of.size() != g.n()) throw InvalidArgument("partition size does not match graph");
}

}  // namespace

Partition refine_step(const ColoredGraph& g, const Partition& p) {
  check_partition(g, p);
  const std::size_t n = g.n();
  std::vector<std::size_t> offset(n + 1, 0);
  for (Vertex v = 0; v < n; ++v) offset[v + 1] = offset[v] + g.degree(v);
  std::vector<ClassId> sig(offset[n]);
  for (Vertex v = 0; v < n; ++v) {
    std::size_t k = offset[v];
    for (const Neighbor& nb : g.neighbors(v))
      for (unsigned r = 0; r < nb.mult; ++r) sig[k++] = p.class_of[nb.v];
    std::sort(sig.begin() + static_cast<std::ptrdiff_t>(offset[v]),
              sig.begin() + static_cast<std::ptrdiff_t>(offset[v + 1]));
  }
  auto key_less = [&](Vertex a, Vertex b) {
    if (p.class_of[a] != p.class_of[b]) return p.class_of[a] < p.class_of[b];
    return std::lexicographical_compare(sig.begin() + static_cast<std::ptrdiff_t>(offset[a]),
                                        sig.begin() + static_cast<std::ptrdiff_t>(offset[a + 1]),
                                        sig.begin() + static_cast<std::ptrdiff_t>(offset[b]),
                                        sig.begin() + static_cast<std::ptrdiff_t>(offset[b + 1]));
  };
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), key_less);
  std::vector<ClassId> next(n);
  ClassId id = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (i > 0 && key_less(order[i - 1], order[i])) ++id;
    next[order[i]] = id;
  }
  return Partition::from_class_of(std::move(next), p.round + 1);
}

namespace {

StableResult iterate_rounds(const ColoredGraph& g) {
  StableResult r;
  Partition cur = initial_partition(g);
  r.trace.sizes.push_back(cur.size());
  while (true) {
    Partition next = refine_step(g, cur);
    if (next.size() == cur.size()) break;
    cur = std::move(next);
    r.trace.sizes.push_back(cur.size());
  }
  r.trace.rounds = cur.round;
  r.partition = std::move(cur);
  return r;
}

}  // namespace

StableResult stable_partition(const ColoredGraph& g, RefineOptions opts) {
  if (opts.engine == Engine::Rounds) return iterate_rounds(g);
  StableResult r;
  Refiner refiner(g);
  std::vector<ClassId> init(g.colors().begin(), g.colors().end());
  r.partition = Partition::from_class_of(refiner.refine(init));
  if (opts.trace) {
    StableResult rounds = iterate_rounds(g);
    r.trace = std::move(rounds.trace);
    r.partition.round = r.trace.rounds;
  }
  return r;
}

bool is_equitable(const ColoredGraph& g, const Partition& p) {
  check_partition(g, p);
  const std::size_t k = p.size();
  std::vector<std::uint64_t> ref(k), cur(k);
  std::vector<ClassId> touched;
  for (const VertexSet& cell : p.classes) {
    if (cell.empty()) continue;
    const Vertex rep = cell[0];
    std::fill(ref.begin(), ref.end(), 0);
    for (const Neighbor& nb : g.neighbors(rep)) ref[p.class_of[nb.v]] += nb.mult;
    for (Vertex v : cell) {
      if (g.color(v) != g.color(rep)) return false;
      touched.clear();
      for (const Neighbor& nb : g.neighbors(v)) {
        ClassId c = p.class_of[nb.v];
        if (cur[c] == 0) touched.push_back(c);
        cur[c] += nb.mult;
      }
      bool ok = true;
      std::uint64_t total = 0;
      for (ClassId c : touched) {
        if (cur[c] != ref[c]) ok = false;
        total += cur[c];
        cur[c] = 0;
      }
      if (!ok || total != g.degree(rep)) return false;
    }
  }
  return true;
}

bool cr_equivalent(const ColoredGraph& g, const ColoredGraph& h) {
  if (g.n() != h.n()) return false;
  ColoredGraph u = disjoint_union(g, h);
  Refiner refiner(u);
  std::vector<ClassId> init(u.colors().begin(), u.colors().end());
  auto stable = refiner.refine(init);
  std::vector<std::int64_t> balance(refiner.num_classes(), 0);
  for (Vertex v = 0; v < g.n(); ++v) ++balance[stable[v]];
  for (Vertex v = 0; v < h.n(); ++v) --balance[stable[g.n() + v]];
  return std::all_of(balance.begin(), balance.end(), [](std::int64_t b) { return b == 0; });
}

bool is_discrete(const ColoredGraph& g) { return stable_partition(g).partition.is_discrete(); }

std::vector<std::uint32_t> cr_fingerprint(const ColoredGraph& g) {
  StableResult r = iterate_rounds(g);
  const Partition& p = r.partition;
  std::vector<std::uint32_t> fp{static_cast<std::uint32_t>(g.n()),
                                static_cast<std::uint32_t>(r.trace.rounds),
                                static_cast<std::uint32_t>(p.size())};
  std::vector<ClassId> sig;
  for (const VertexSet& cell : p.classes) {
    const Vertex rep = cell[0];
    sig.clear();
    for (const Neighbor& nb : g.neighbors(rep))
      for (unsigned m = 0; m < nb.mult; ++m) sig.push_back(p.class_of[nb.v]);
    std::sort(sig.begin(), sig.end());
    fp.push_back(static_cast<std::uint32_t>(cell.size()));
    fp.push_back(g.color(rep));
    fp.push_back(static_cast<std::uint32_t>(sig.size()));
    fp.insert(fp.end(), sig.begin(), sig.end());
  }
  return fp;
}

Refiner::Refiner(const ColoredGraph& g)
    : g_(g),
      elems_(g.n()),
      pos_(g.n()),
      cls_(g.n()),
      count_(g.n(), 0) {}

std::vector<ClassId> Refiner::refine(std::span<const ClassId> coloring) {
  const std::size_t n = g_.n();
  if (coloring.size() != n) throw InvalidArgument("coloring size does not match graph");
  ClassId k = 0;
  for (ClassId c : coloring) k = std::max(k, c + 1);
  start_.assign(k, 0);
  end_.assign(k, 0);
  for (ClassId c : coloring) ++end_[c];
  std::uint32_t acc = 0;
  for (ClassId c = 0; c < k; ++c) {
    if (end_[c] == 0) throw InvalidArgument("coloring ids are not contiguous");
    start_[c] = acc;
    acc += end_[c];
    end_[c] = start_[c];
  }
  for (Vertex v = 0; v < n; ++v) {
    ClassId c = coloring[v];
    cls_[v] = c;
    pos_[v] = end_[c];
    elems_[end_[c]++] = v;
  }
  marked_.assign(k, 0);
  queued_.assign(k, 1);
  queue_.resize(k);
  std::iota(queue_.begin(), queue_.end(), 0);
  head_ = 0;
  next_id_ = k;
  splitters_ = 0;

  while (head_ < queue_.size()) {
    ClassId s = queue_[head_++];
    queued_[s] = 0;
    process(s);
  }
  return cls_;
}

void Refiner::process(ClassId splitter) {
  ++splitters_;
  splitter_buf_.assign(elems_.begin() + start_[splitter], elems_.begin() + end_[splitter]);
  touched_vertices_.clear();
  touched_classes_.clear();
  for (Vertex v : splitter_buf_) {
    for (const Neighbor& nb : g_.neighbors(v)) {
      const Vertex w = nb.v;
      if (count_[w] == 0) {
        const ClassId c = cls_[w];
        if (marked_[c] == 0) touched_classes_.push_back(c);
        const std::uint32_t target = end_[c] - 1 - marked_[c];
        const Vertex other = elems_[target];
        elems_[pos_[w]] = other;
        pos_[other] = pos_[w];
        elems_[target] = w;
        pos_[w] = target;
        ++marked_[c];
        touched_vertices_.push_back(w);
      }
      count_[w] += nb.mult;
    }
  }
  std::sort(touched_classes_.begin(), touched_classes_.end());
  for (ClassId c : touched_classes_) split(c);
  for (Vertex w : touched_vertices_) count_[w] = 0;
}

void Refiner::split(ClassId c) {
  const std::uint32_t s = start_[c], e = end_[c], m = marked_[c];
  marked_[c] = 0;
  auto first = elems_.begin() + (e - m);
  auto last = elems_.begin() + e;
  std::sort(first, last, [&](Vertex a, Vertex b) {
    return count_[a] != count_[b] ? count_[a] < count_[b] : a < b;
  });
  for (std::uint32_t i = e - m; i < e; ++i) pos_[elems_[i]] = i;

  // Pieces in order: untouched (count 0) first, then by increasing count.
  struct Piece {
    std::uint32_t begin, end;
  };
  static thread_local std::vector<Piece> pieces;
  pieces.clear();
  if (e - m > s) pieces.push_back({s, e - m});
  for (std::uint32_t i = e - m; i < e;) {
    std::uint32_t j = i + 1;
    while (j < e && count_[elems_[j]] == count_[elems_[i]]) ++j;
    pieces.push_back({i, j});
    i = j;
  }
  if (pieces.size() == 1) return;

  std::size_t largest = 0;
  for (std::size_t i = 1; i < pieces.size(); ++i) {
    if (pieces[i].end - pieces[i].begin > pieces[largest].end - pieces[largest].begin) largest = i;
  }
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    if (i == largest) continue;
    const ClassId id = next_id_++;
    start_.push_back(pieces[i].begin);
    end_.push_back(pieces[i].end);
    marked_.push_back(0);
    queued_.push_back(1);
    queue_.push_back(id);
    for (std::uint32_t q = pieces[i].begin; q < pieces[i].end; ++q) cls_[elems_[q]] = id;
  }
  start_[c] = pieces[largest].begin;
  end_[c] = pieces[largest].end;
}

}  // namespace crkit
