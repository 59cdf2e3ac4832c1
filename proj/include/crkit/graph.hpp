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
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "crkit/common.hpp"

namespace crkit {

struct Neighbor {
  Vertex v;
  std::uint8_t mult;

  friend bool operator==(const Neighbor&, const Neighbor&) = default;
};

// Strictly increasing list of vertex ids.
class VertexSet {
 public:
  VertexSet() = default;
  // Sorts the ids; throws InvalidArgument on duplicates.
  explicit VertexSet(std::vector<Vertex> ids);
  VertexSet(std::initializer_list<Vertex> ids)
      : VertexSet(std::vector<Vertex>(ids)) {}

  std::size_t size() const { return ids_.size(); }
  bool empty() const { return ids_.empty(); }
  bool contains(Vertex v) const;
  std::span<const Vertex> ids() const { return ids_; }
  auto begin() const { return ids_.begin(); }
  auto end() const { return ids_.end(); }
  Vertex operator[](std::size_t i) const { return ids_[i]; }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  std::vector<Vertex> ids_;
};

// Vertex-colored undirected multigraph without self-loops. Immutable once
// built; adjacency lists are sorted by neighbor id and symmetric.
class ColoredGraph {
 public:
  ColoredGraph() = default;

  std::size_t n() const { return colors_.size(); }
  // Number of distinct edges (parallel copies counted once).
  std::size_t num_edges() const { return neighbors_.size() / 2; }
  std::size_t num_colors() const { return num_colors_; }

  Color color(Vertex v) const { return colors_[v]; }
  std::span<const Color> colors() const { return colors_; }

  std::span<const Neighbor> neighbors(Vertex v) const {
    return {neighbors_.data() + offsets_[v], neighbors_.data() + offsets_[v + 1]};
  }
  // Multiplicity-weighted degree.
  std::size_t degree(Vertex v) const;
  // 0 when u and v are not adjacent.
  unsigned multiplicity(Vertex u, Vertex v) const;
  bool adjacent(Vertex u, Vertex v) const { return multiplicity(u, v) != 0; }
  bool is_simple() const;

  friend bool operator==(const ColoredGraph&, const ColoredGraph&) = default;

 private:
  friend class GraphBuilder;

  std::vector<Color> colors_;
  std::size_t num_colors_ = 0;
  std::vector<std::size_t> offsets_{0};
  std::vector<Neighbor> neighbors_;
};

class GraphBuilder {
 public:
  explicit GraphBuilder(std::size_t n);

  std::size_t n() const { return colors_.size(); }
  void set_color(Vertex v, Color c);
  // Rejects self-loops, out-of-range ids and multiplicities outside
  // [1, 255].
  void add_edge(Vertex u, Vertex v, unsigned mult = 1);

  // Colors are compacted to a dense range preserving their relative order.
  // Throws InvalidArgument if an edge was added twice.
  ColoredGraph build() const;

 private:
  struct Edge {
    Vertex u, v;
    std::uint8_t mult;
  };
  std::vector<Color> colors_;
  std::vector<Edge> edges_;
};

// A subgraph together with the original id of every new vertex.
struct Subgraph {
  ColoredGraph graph;
  std::vector<Vertex> original;
};

// Graph text format: `p cgraph <n> <m>`, optional `c <v> <color>` lines,
// `e <u> <v> [mult]` lines, '#' comments. Throws ParseError.
ColoredGraph load(std::string_view text);
// Canonical text: colors for nonzero-colored vertices, edges with u < v in
// lexicographic order, multiplicity only when > 1.
std::string save(const ColoredGraph& g);
ColoredGraph load_file(const std::string& path);
void save_file(const ColoredGraph& g, const std::string& path);

ColoredGraph disjoint_union(const ColoredGraph& g, const ColoredGraph& h);
ColoredGraph complement(const ColoredGraph& g);
Subgraph induced(const ColoredGraph& g, const VertexSet& x);
// G[X,Y]: vertices of X first, then Y; only edges between X and Y survive.
Subgraph bipartite_induced(const ColoredGraph& g, const VertexSet& x, const VertexSet& y);
Subgraph bipartite_complement(const ColoredGraph& g, const VertexSet& x, const VertexSet& y);

// Relabels vertex v as perm[v].
ColoredGraph permute(const ColoredGraph& g, std::span<const Vertex> perm);
// Replaces the coloring; the color vector must have one entry per vertex.
ColoredGraph recolor(const ColoredGraph& g, std::span<const Color> colors);

// True iff map (G-vertex -> H-vertex) is a color- and multiplicity-preserving
// bijection.
bool is_isomorphism(const ColoredGraph& g, const ColoredGraph& h, std::span<const Vertex> map);

std::vector<Vertex> random_permutation(std::size_t n, std::uint64_t seed);

namespace graphs {

ColoredGraph empty(std::size_t n);
ColoredGraph complete(std::size_t n);
ColoredGraph complete_bipartite(std::size_t s, std::size_t t);
ColoredGraph cycle(std::size_t n);
ColoredGraph path(std::size_t n);
// s disjoint stars K_{1,t}: centers 0..s-1, leaves follow star by star.
ColoredGraph stars(std::size_t s, std::size_t t);
ColoredGraph matching(std::size_t m);
// Kneser graph K(5,2); vertices are the 2-subsets of {0..4} in
// lexicographic order, adjacent when disjoint.
ColoredGraph petersen();
// k-subsets of {0..n-1} in lexicographic order, adjacent when they share
// k-1 elements.
ColoredGraph johnson(std::size_t n, std::size_t k);
ColoredGraph kneser(std::size_t n, std::size_t k);
ColoredGraph random_gnp(std::size_t n, double p, std::uint64_t seed);
// Uniform random graph with exactly m distinct edges.
ColoredGraph random_gnm(std::size_t n, std::size_t m, std::uint64_t seed);
// Random tree on n vertices from a uniformly random Pruefer sequence.
ColoredGraph random_tree(std::size_t n, std::uint64_t seed);
// Undirected graph on n vertices from the low n(n-1)/2 bits of mask; bit
// index enumerates pairs (0,1),(0,2),...,(0,n-1),(1,2),...
ColoredGraph from_mask(std::size_t n, std::uint64_t mask);

// Name-based constructor used by the CLI: complete, complete_bipartite,
// cycle, path, stars, matching, petersen, johnson, empty, gnp.
ColoredGraph by_name(std::string_view name, std::span<const std::int64_t> params,
                     std::uint64_t seed = 0);

}  // namespace graphs

}  // namespace crkit
