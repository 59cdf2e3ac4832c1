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
#include <string>
#include <vector>

#include "crkit/refinement.hpp"

namespace crkit {

struct IndividualizationStep {
  std::size_t round = 0;
  ClassId cls = 0;  // class id in the stable coloring of G+H at that round
  Vertex u = 0;     // vertex of G
  Vertex v = 0;     // vertex of H

  friend bool operator==(const IndividualizationStep&, const IndividualizationStep&) = default;
};

enum class Policy {
  // Lowest-id class with at least two vertices per side, lowest vertex ids.
  Deterministic,
  // Uniformly random eligible class and vertices from a seeded generator.
  SeededRandom,
};

struct TinhoferPolicy {
  Policy kind = Policy::Deterministic;
  std::uint64_t seed = 0;
};

struct IsoResult {
  bool isomorphic = false;
  // G-vertex -> H-vertex; verified edge by edge when isomorphic.
  std::vector<Vertex> mapping;
  std::vector<IndividualizationStep> transcript;
  // "size", "histogram" or "final-map" for negative answers.
  std::string reason;
};

// Individualization-refinement isomorphism test. A negative answer is always
// correct; a positive one carries a verified isomorphism. For Tinhofer
// graphs the answer is correct under every policy.
IsoResult tinhofer_iso(const ColoredGraph& g, const ColoredGraph& h, TinhoferPolicy policy = {});

// Runs the procedure with the given individualization choices. Steps whose
// class or vertices are not eligible at that point raise InvalidArgument.
// Extra steps after termination are ignored.
IsoResult replay(const ColoredGraph& g, const ColoredGraph& h,
                 const std::vector<IndividualizationStep>& steps);

struct CanonicalForm {
  // order[i] is the vertex placed at position i.
  std::vector<Vertex> order;
  ColoredGraph graph;
  std::uint64_t hash = 0;
};

// Canonical labeling by refining, individualizing one vertex of the
// lowest-id non-singleton class (the lowest vertex id, or a seeded random
// one), and repeating until discrete. Canonical for Tinhofer graphs only.
CanonicalForm canonical_form(const ColoredGraph& g, TinhoferPolicy policy = {});

// FNV-1a over n, the colors and the adjacency matrix with multiplicities.
std::uint64_t adjacency_hash(const ColoredGraph& g);

}  // namespace crkit
