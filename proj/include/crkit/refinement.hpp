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

#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "crkit/graph.hpp"

namespace crkit {

using ClassId = std::uint32_t;

// Ordered partition of the vertex set. Class ids are dense, starting at 0.
struct Partition {
  std::vector<ClassId> class_of;
  std::vector<VertexSet> classes;
  // Refinement rounds behind this partition, when known.
  std::size_t round = 0;

  // Validates that the ids cover a contiguous range {0..k-1}.
  static Partition from_class_of(std::vector<ClassId> class_of, std::size_t round = 0);

  std::size_t size() const { return classes.size(); }
  bool is_discrete() const { return classes.size() == class_of.size(); }
  // Same cells, ignoring ids.
  bool same_cells(const Partition& other) const;
};

struct RefinementTrace {
  // Number of classes after round 0, 1, ..., rounds.
  std::vector<std::size_t> sizes;
  std::size_t rounds = 0;
};

struct StableResult {
  Partition partition;
  RefinementTrace trace;
};

enum class Engine {
  // Splitter worklist with the "skip the largest piece" rule.
  Worklist,
  // Literal round-by-round iteration of refine_step.
  Rounds,
};

struct RefineOptions {
  Engine engine = Engine::Worklist;
  // Also record per-round class counts (runs the round iteration).
  bool trace = false;
};

// The color partition of G. Ids equal the color ids.
Partition initial_partition(const ColoredGraph& g);

// One round: new class of u is determined by (class of u, sorted multiset
// of neighbor classes, each neighbor repeated by its multiplicity). New ids
// are ranks of these keys in lexicographic order.
Partition refine_step(const ColoredGraph& g, const Partition& p);

// Coarsest equitable partition refining the vertex colors.
StableResult stable_partition(const ColoredGraph& g, RefineOptions opts = {});

bool is_equitable(const ColoredGraph& g, const Partition& p);
bool cr_equivalent(const ColoredGraph& g, const ColoredGraph& h);
bool is_discrete(const ColoredGraph& g);

// Complete color-refinement invariant: two graphs have equal fingerprints
// iff color refinement does not distinguish them.
std::vector<std::uint32_t> cr_fingerprint(const ColoredGraph& g);

// Reusable worklist engine. refine() takes a dense coloring (ids 0..k-1)
// and returns the stable coloring as dense class ids. The ids depend only
// on the isomorphism type of the colored graph: for an isomorphism f,
// result(f(v)) in the image equals result(v).
class Refiner {
 public:
  explicit Refiner(const ColoredGraph& g);

  std::vector<ClassId> refine(std::span<const ClassId> coloring);
  // Number of classes in the last result.
  std::size_t num_classes() const { return next_id_; }
  // Splitters processed by the last call.
  std::size_t splitters_processed() const { return splitters_; }

 private:
  void process(ClassId splitter);
  void split(ClassId c);

  const ColoredGraph& g_;
  std::vector<Vertex> elems_;
  std::vector<std::uint32_t> pos_;
  std::vector<ClassId> cls_;
  std::vector<std::uint32_t> start_, end_, marked_;
  std::vector<char> queued_;
  std::vector<ClassId> queue_;
  std::size_t head_ = 0;
  std::vector<std::uint64_t> count_;
  std::vector<Vertex> touched_vertices_;
  std::vector<ClassId> touched_classes_;
  std::vector<Vertex> splitter_buf_;
  ClassId next_id_ = 0;
  std::size_t splitters_ = 0;
};

}  // namespace crkit
