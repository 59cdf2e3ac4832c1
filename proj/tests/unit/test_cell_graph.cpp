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

#include <doctest.h>

#include <random>

#include "crkit/cell_graph.hpp"
#include "crkit/graph.hpp"

using namespace crkit;

namespace {

VertexSet all(std::size_t n) {
  std::vector<Vertex> v(n);
  for (Vertex i = 0; i < n; ++i) v[i] = i;
  return VertexSet(v);
}

CellKind dual(CellKind k) {
  switch (k) {
    case CellKind::Empty: return CellKind::Complete;
    case CellKind::Complete: return CellKind::Empty;
    case CellKind::Matching: return CellKind::CoMatching;
    case CellKind::CoMatching: return CellKind::Matching;
    default: return k;
  }
}

}  // namespace

TEST_CASE("cell labels") {
  CHECK(classify_cell(graphs::empty(4), all(4)).kind == CellKind::Empty);
  CHECK(classify_cell(graphs::complete(4), all(4)).kind == CellKind::Complete);
  CHECK(classify_cell(graphs::matching(3), all(6)).kind == CellKind::Matching);
  CHECK(classify_cell(complement(graphs::matching(3)), all(6)).kind == CellKind::CoMatching);
  CHECK(classify_cell(graphs::cycle(5), all(5)).kind == CellKind::Pentagonal);
  CHECK(classify_cell(graphs::cycle(6), all(6)).kind == CellKind::Irregular);
  CHECK(classify_cell(graphs::petersen(), all(10)).kind == CellKind::Irregular);
  CHECK(classify_cell(graphs::path(3), all(3)).kind == CellKind::Irregular);
  CHECK(classify_cell(graphs::complete(4), all(4)).homogeneous());
  CHECK(!classify_cell(graphs::cycle(5), all(5)).homogeneous());
}

TEST_CASE("pair labels") {
  const ColoredGraph st = graphs::stars(2, 3);
  const VertexSet centers{0, 1}, leaves{2, 3, 4, 5, 6, 7};
  PairLabel l = classify_pair(st, centers, leaves);
  CHECK(l.kind == PairKind::Constellation);
  CHECK(l.d_xy == 3);
  CHECK(l.d_yx == 1);
  CHECK(l.s == 2);
  CHECK(l.t == 3);
  CHECK(l.center_is_x);
  CHECK(l.anisotropic());
  CHECK(!classify_pair(st, leaves, centers).center_is_x);

  const ColoredGraph kb = graphs::complete_bipartite(2, 3);
  CHECK(classify_pair(kb, VertexSet{0, 1}, VertexSet{2, 3, 4}).kind == PairKind::IsotropicComplete);
  CHECK(classify_pair(graphs::empty(4), VertexSet{0, 1}, VertexSet{2, 3}).kind ==
        PairKind::IsotropicEmpty);

  // 3K_{1,2} complemented: centers see four leaves, leaves see two centers.
  const ColoredGraph co = complement(graphs::stars(3, 2));
  const PairLabel cl = classify_pair(co, VertexSet{0, 1, 2}, VertexSet{3, 4, 5, 6, 7, 8});
  CHECK(cl.kind == PairKind::CoConstellation);
  CHECK(cl.d_xy == 4);
  CHECK(cl.d_yx == 2);

  // C8 between two classes of size 4: every vertex has two neighbors.
  GraphBuilder b(8);
  for (Vertex i = 0; i < 4; ++i) {
    b.add_edge(i, 4 + i);
    b.add_edge(i, 4 + (i + 1) % 4);
  }
  CHECK(classify_pair(b.build(), VertexSet{0, 1, 2, 3}, VertexSet{4, 5, 6, 7}).kind ==
        PairKind::Irregular);
}

TEST_CASE("labels are dual under complementation") {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 300; ++i) {
    const ColoredGraph g = graphs::random_gnp(3 + rng() % 10, 0.3, rng());
    const ColoredGraph h = complement(g);
    const CellGraphData cg = build_cell_graph(g);
    const CellGraphData ch = build_cell_graph(h);
    REQUIRE(cg.cells.same_cells(ch.cells));
    for (ClassId c = 0; c < cg.cells.size(); ++c) {
      const CellLabel a = classify_cell(g, cg.cells.classes[c]);
      const CellLabel b = classify_cell(h, cg.cells.classes[c]);
      if (cg.cell_size(c) >= 3) CHECK(b.kind == dual(a.kind));
    }
    for (const CellPair& p : cg.pairs) {
      const VertexSet& x = cg.cells.classes[p.x];
      const VertexSet& y = cg.cells.classes[p.y];
      const PairLabel b = classify_pair(h, x, y);
      if (p.label.kind == PairKind::IsotropicEmpty) CHECK(b.kind == PairKind::IsotropicComplete);
      if (p.label.kind == PairKind::IsotropicComplete) CHECK(b.kind == PairKind::IsotropicEmpty);
      if (p.label.kind == PairKind::Irregular) CHECK(b.kind == PairKind::Irregular);
      if (std::min(x.size(), y.size()) >= 3 && p.label.kind == PairKind::Constellation)
        CHECK(b.kind == PairKind::CoConstellation);
    }
  }
}

TEST_CASE("cell graph of a path") {
  const CellGraphData cg = build_cell_graph(graphs::path(5));
  CHECK(cg.cells.size() == 3);
  // Ends and their neighbors are matched; the center joins isotropically.
  REQUIRE(cg.components.size() == 2);
  const ClassId end = cg.cells.class_of[0];
  const AnisotropicComponent& c = cg.components[cg.component_of[end]];
  CHECK(c.cells.size() == 2);
  CHECK(c.edges.size() == 1);
  CHECK(c.is_tree);
  CHECK(c.heterogeneous.empty());
  CHECK(c.min_cardinality == 2);
  CHECK(!c.monotonicity_violation);
  CHECK(!describe(cg).empty());
  CHECK(to_dot(cg).find("graph") != std::string::npos);
}

TEST_CASE("anisotropic cycle in a three-colored hexagon") {
  const ColoredGraph g = load("p cgraph 6 6\nc 1 1\nc 2 2\nc 4 1\nc 5 2\n"
                              "e 0 1\ne 1 2\ne 2 3\ne 3 4\ne 4 5\ne 5 0\n");
  const CellGraphData cg = build_cell_graph(g);
  CHECK(cg.cells.size() == 3);
  REQUIRE(cg.components.size() == 1);
  CHECK(!cg.components.front().is_tree);
  for (const CellPair& p : cg.pairs) CHECK(p.label.kind == PairKind::Constellation);
}
