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

#include <optional>
#include <string>
#include <vector>

#include "crkit/refinement.hpp"

namespace crkit {

enum class CellKind { Empty, Complete, Matching, CoMatching, Pentagonal, Irregular };

struct CellLabel {
  CellKind kind = CellKind::Empty;
  std::size_t degree = 0;

  bool homogeneous() const { return kind == CellKind::Empty || kind == CellKind::Complete; }
  friend bool operator==(const CellLabel&, const CellLabel&) = default;
};

enum class PairKind { IsotropicEmpty, IsotropicComplete, Constellation, CoConstellation, Irregular };

// Label of G[X,Y]. For (co-)constellations the star centers sit in the
// smaller cell (`center`), s = |centers|, t = |leaves| / s.
struct PairLabel {
  PairKind kind = PairKind::IsotropicEmpty;
  std::size_t d_xy = 0;  // neighbors in Y of a vertex in X
  std::size_t d_yx = 0;  // neighbors in X of a vertex in Y
  std::size_t s = 0, t = 0;
  bool center_is_x = true;

  bool isotropic() const {
    return kind == PairKind::IsotropicEmpty || kind == PairKind::IsotropicComplete;
  }
  bool anisotropic() const {
    return kind == PairKind::Constellation || kind == PairKind::CoConstellation;
  }
  friend bool operator==(const PairLabel&, const PairLabel&) = default;
};

std::string to_string(CellKind k);
std::string to_string(PairKind k);

// Labels G[X] for a set inducing a regular graph; a non-regular set is
// Irregular. Throws InvalidArgument on parallel edges inside X.
CellLabel classify_cell(const ColoredGraph& g, const VertexSet& x);
// Labels G[X,Y] for a biregular pair; a non-biregular pair is Irregular.
PairLabel classify_pair(const ColoredGraph& g, const VertexSet& x, const VertexSet& y);

struct CellPair {
  ClassId x, y;  // x < y
  PairLabel label;
};

struct AnisotropicComponent {
  std::vector<ClassId> cells;  // sorted
  std::vector<std::pair<ClassId, ClassId>> edges;
  bool is_tree = true;
  std::vector<ClassId> heterogeneous;
  std::size_t min_cardinality = 0;
  std::vector<ClassId> min_cells;
  // Root used for the monotonicity check: the heterogeneous cell when there
  // is exactly one, else the lowest-id cell of minimum cardinality.
  ClassId root = 0;
  // For trees: first directed edge (parent, child) from the root with
  // |parent| > |child|; empty when monotone (or not a tree).
  std::optional<std::pair<ClassId, ClassId>> monotonicity_violation;
};

struct CellGraphData {
  Partition cells;
  std::vector<CellLabel> cell_labels;
  // Pairs of distinct cells with at least one edge between them. Every pair
  // not listed is IsotropicEmpty.
  std::vector<CellPair> pairs;
  std::vector<AnisotropicComponent> components;
  std::vector<std::size_t> component_of;  // per cell

  const PairLabel* find_pair(ClassId a, ClassId b) const;
  PairLabel pair_label(ClassId a, ClassId b) const;
  std::size_t cell_size(ClassId c) const { return cells.classes[c].size(); }
};

// Requires a simple graph and an equitable partition; throws
// InvalidArgument otherwise.
CellGraphData build_cell_graph(const ColoredGraph& g, const Partition& p);
// Cell graph of the stable partition.
CellGraphData build_cell_graph(const ColoredGraph& g);

// Anisotropic components with tree-ness, heterogeneous cells and the
// rooted monotonicity check filled in.
std::vector<AnisotropicComponent> anisotropic_components(const CellGraphData& cg);

// Text layout used by the CLI and a DOT rendering (isotropic complete pairs
// dashed; empty pairs omitted).
std::string describe(const CellGraphData& cg);
std::string to_dot(const CellGraphData& cg);

}  // namespace crkit
