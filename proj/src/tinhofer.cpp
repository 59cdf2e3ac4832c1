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

#include "crkit/tinhofer.hpp"

#include <algorithm>
#include <random>

#include "union_search.hpp"

namespace crkit {

namespace {

struct Choice {
  ClassId cls;
  Vertex u, v;
};

class Chooser {
 public:
  virtual ~Chooser() = default;
  // eligible: classes with >= 2 vertices on each side, ascending.
  virtual Choice choose(std::size_t round, const std::vector<ClassId>& eligible,
                        const std::vector<ClassId>& stable, std::size_t n) = 0;
};

std::vector<Vertex> members(const std::vector<ClassId>& stable, std::size_t n, ClassId c,
                            bool right) {
  std::vector<Vertex> out;
  const std::size_t base = right ? n : 0;
  for (std::size_t v = 0; v < n; ++v)
    if (stable[base + v] == c) out.push_back(static_cast<Vertex>(v));
  return out;
}

class DeterministicChooser : public Chooser {
 public:
  Choice choose(std::size_t, const std::vector<ClassId>& eligible,
                const std::vector<ClassId>& stable, std::size_t n) override {
    ClassId c = eligible.front();
    return {c, members(stable, n, c, false).front(), members(stable, n, c, true).front()};
  }
};

class RandomChooser : public Chooser {
 public:
  explicit RandomChooser(std::uint64_t seed) : rng_(seed) {}
  Choice choose(std::size_t, const std::vector<ClassId>& eligible,
                const std::vector<ClassId>& stable, std::size_t n) override {
    ClassId c = eligible[pick(eligible.size())];
    auto left = members(stable, n, c, false);
    auto right = members(stable, n, c, true);
    Vertex u = left[pick(left.size())];
    Vertex v = right[pick(right.size())];
    return {c, u, v};
  }

 private:
  std::size_t pick(std::size_t size) {
    return std::uniform_int_distribution<std::size_t>(0, size - 1)(rng_);
  }
  std::mt19937_64 rng_;
};

class ReplayChooser : public Chooser {
 public:
  explicit ReplayChooser(const std::vector<IndividualizationStep>& steps) : steps_(steps) {}
  Choice choose(std::size_t, const std::vector<ClassId>& eligible,
                const std::vector<ClassId>& stable, std::size_t n) override {
    if (next_ >= steps_.size()) throw InvalidArgument("transcript ended before termination");
    const auto& s = steps_[next_++];
    if (!std::binary_search(eligible.begin(), eligible.end(), s.cls) || s.u >= n || s.v >= n ||
        stable[s.u] != s.cls || stable[n + s.v] != s.cls) {
      throw InvalidArgument("transcript step is not an eligible choice");
    }
    return {s.cls, s.u, s.v};
  }

 private:
  const std::vector<IndividualizationStep>& steps_;
  std::size_t next_ = 0;
};

IsoResult run(const ColoredGraph& g, const ColoredGraph& h, Chooser& chooser) {
  IsoResult result;
  if (g.n() != h.n()) {
    result.reason = "size";
    return result;
  }
  detail::UnionSearch search(g, h);
  const std::size_t n = g.n();
  std::vector<ClassId> coloring = search.initial();
  std::vector<std::size_t> left, right;
  for (std::size_t round = 0;; ++round) {
    std::vector<ClassId> stable = search.stabilize(coloring);
    search.counts(stable, left, right);
    if (left != right) {
      result.reason = "histogram";
      return result;
    }
    std::vector<ClassId> eligible;
    for (ClassId c = 0; c < left.size(); ++c)
      if (left[c] >= 2) eligible.push_back(c);
    if (eligible.empty()) {
      auto map = search.leaf_map(stable);
      if (is_isomorphism(g, h, map)) {
        result.isomorphic = true;
        result.mapping = std::move(map);
      } else {
        result.reason = "final-map";
      }
      return result;
    }
    Choice ch = chooser.choose(round, eligible, stable, n);
    result.transcript.push_back({round, ch.cls, ch.u, ch.v});
    coloring = search.individualize(std::move(stable), ch.u, ch.v);
  }
}

}  // namespace

IsoResult tinhofer_iso(const ColoredGraph& g, const ColoredGraph& h, TinhoferPolicy policy) {
  if (policy.kind == Policy::SeededRandom) {
    RandomChooser chooser(policy.seed);
    return run(g, h, chooser);
  }
  DeterministicChooser chooser;
  return run(g, h, chooser);
}

IsoResult replay(const ColoredGraph& g, const ColoredGraph& h,
                 const std::vector<IndividualizationStep>& steps) {
  ReplayChooser chooser(steps);
  return run(g, h, chooser);
}

std::uint64_t adjacency_hash(const ColoredGraph& g) {
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&](std::uint64_t x) {
    for (int i = 0; i < 8; ++i) {
      h ^= (x >> (8 * i)) & 0xffu;
      h *= 1099511628211ull;
    }
  };
  mix(g.n());
  for (Vertex v = 0; v < g.n(); ++v) mix(g.color(v));
  for (Vertex u = 0; u < g.n(); ++u)
    for (Vertex v = 0; v < g.n(); ++v) mix(g.multiplicity(u, v));
  return h;
}

CanonicalForm canonical_form(const ColoredGraph& g, TinhoferPolicy policy) {
  const std::size_t n = g.n();
  Refiner refiner(g);
  std::mt19937_64 rng(policy.seed);
  std::vector<ClassId> coloring(g.colors().begin(), g.colors().end());
  std::vector<ClassId> stable = refiner.refine(coloring);
  while (refiner.num_classes() < n) {
    std::vector<std::size_t> size(refiner.num_classes(), 0);
    for (ClassId c : stable) ++size[c];
    ClassId target = 0;
    while (size[target] < 2) ++target;
    std::vector<Vertex> cell;
    for (Vertex v = 0; v < n; ++v)
      if (stable[v] == target) cell.push_back(v);
    Vertex chosen = cell.front();
    if (policy.kind == Policy::SeededRandom) {
      chosen = cell[std::uniform_int_distribution<std::size_t>(0, cell.size() - 1)(rng)];
    }
    stable[chosen] = static_cast<ClassId>(refiner.num_classes());
    stable = refiner.refine(stable);
  }
  CanonicalForm out;
  out.order.resize(n);
  for (Vertex v = 0; v < n; ++v) out.order[stable[v]] = v;
  // Vertex at position i gets id i.
  std::vector<Vertex> perm(n);
  for (Vertex i = 0; i < n; ++i) perm[out.order[i]] = i;
  out.graph = permute(g, perm);
  out.hash = adjacency_hash(out.graph);
  return out;
}

}  // namespace crkit
