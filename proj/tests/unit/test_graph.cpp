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

#include "crkit/graph.hpp"
#include "crkit/oracles.hpp"

using namespace crkit;

TEST_CASE("load parses header, colors and edges") {
  ColoredGraph k2 = load("p cgraph 2 1\ne 0 1\n");
  CHECK(k2.n() == 2);
  CHECK(k2.num_edges() == 1);
  CHECK(k2.color(0) == 0);
  CHECK(k2.color(1) == 0);
  CHECK(k2.adjacent(0, 1));

  ColoredGraph c5 = load(
      "# five cycle\np cgraph 5 5\ne 0 1\ne 1 2\ne 2 3\ne 3 4\ne 4 0  # closing edge\n");
  CHECK(c5.n() == 5);
  CHECK(c5.num_edges() == 5);
  for (Vertex v = 0; v < 5; ++v)
    for (const Neighbor& nb : c5.neighbors(v)) CHECK(nb.mult == 1);

  ColoredGraph colored = load("p cgraph 3 1\nc 2 7\ne 0 2 3\n");
  CHECK(colored.num_colors() == 2);
  CHECK(colored.color(2) == 1);  // compacted
  CHECK(colored.multiplicity(2, 0) == 3);
  CHECK(!colored.is_simple());
}

TEST_CASE("load rejects malformed input with a line number") {
  auto line_of = [](const char* text) -> std::size_t {
    try {
      load(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return 0;
  };
  CHECK(line_of("p cgraph 2 1\ne 0 0\n") == 2);
  CHECK(line_of("p cgraph 2 1\ne 0 5\n") == 2);
  CHECK(line_of("e 0 1\n") == 1);
  CHECK(line_of("p cgraph 2 1\nx 0 1\n") == 2);
  CHECK(line_of("p cgraph 2 1\ne 0 1 0\n") == 2);
  CHECK(line_of("p cgraph 2 1\ne 0 1 256\n") == 2);
  CHECK(line_of("p cgraph 3 2\ne 0 1\ne 1 0\n") > 0);  // duplicate edge
  CHECK(line_of("p cgraph 3 2\ne 0 1\n") > 0);          // edge count mismatch
  CHECK(line_of("p cgraph 2 a\n") == 1);
}

TEST_CASE("save and load round-trip exactly") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 100; ++i) {
    const std::size_t n = 1 + rng() % 12;
    GraphBuilder b(n);
    for (Vertex v = 0; v < n; ++v) b.set_color(v, static_cast<Color>(rng() % 3));
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v)
        if (rng() % 3 == 0) b.add_edge(u, v, 1 + static_cast<unsigned>(rng() % 3));
    ColoredGraph g = b.build();
    const std::string text = save(g);
    ColoredGraph back = load(text);
    CHECK(back == g);
    CHECK(save(back) == text);
  }
}

TEST_CASE("builder enforces the invariants") {
  GraphBuilder b(3);
  CHECK_THROWS_AS(b.add_edge(1, 1), InvalidArgument);
  CHECK_THROWS_AS(b.add_edge(0, 3), InvalidArgument);
  CHECK_THROWS_AS(b.add_edge(0, 1, 0), InvalidArgument);
  CHECK_THROWS_AS(b.add_edge(0, 1, 300), InvalidArgument);
  b.add_edge(0, 1);
  b.add_edge(1, 0);
  CHECK_THROWS_AS(b.build(), InvalidArgument);
}

TEST_CASE("disjoint union") {
  ColoredGraph u = disjoint_union(graphs::cycle(3), graphs::cycle(4));
  CHECK(u.n() == 7);
  CHECK(u.num_edges() == 7);
  CHECK(u.adjacent(3, 6));
  CHECK(!u.adjacent(2, 3));

  ColoredGraph g = graphs::petersen();
  CHECK(disjoint_union(g, graphs::empty(0)) == g);
  CHECK(disjoint_union(graphs::complete(2), graphs::complete(2)) == graphs::matching(2));

  // Associative up to relabeling.
  ColoredGraph a = graphs::path(3), b = graphs::cycle(4), c = graphs::stars(1, 2);
  CHECK(isomorphic(disjoint_union(disjoint_union(a, b), c), disjoint_union(a, disjoint_union(b, c))));
}

TEST_CASE("complement") {
  CHECK(complement(graphs::complete(3)) == graphs::empty(3));
  CHECK(isomorphic(complement(graphs::cycle(5)), graphs::cycle(5)).has_value());
  ColoredGraph cm = complement(graphs::matching(3));
  for (Vertex v = 0; v < 6; ++v) CHECK(cm.degree(v) == 4);
  CHECK_THROWS_AS(complement(load("p cgraph 2 1\ne 0 1 2\n")), InvalidArgument);
  for (std::uint64_t mask = 0; mask < 64; ++mask) {
    ColoredGraph g = graphs::from_mask(4, mask);
    CHECK(complement(complement(g)) == g);
  }
}

TEST_CASE("induced and bipartite subgraphs") {
  Subgraph p3 = induced(graphs::cycle(5), VertexSet{0, 1, 2});
  CHECK(isomorphic(p3.graph, graphs::path(3)).has_value());
  CHECK(p3.original == std::vector<Vertex>{0, 1, 2});

  ColoredGraph st = graphs::stars(2, 3);  // centers 0,1; leaves 2..7
  VertexSet centers{0, 1}, leaves{2, 3, 4, 5, 6, 7};
  Subgraph bi = bipartite_induced(st, centers, leaves);
  CHECK(bi.graph.num_edges() == 6);
  Subgraph co = bipartite_complement(st, centers, leaves);
  CHECK(co.graph.num_edges() == 6);
  CHECK(co.graph.degree(0) == 3);
  CHECK(co.graph.degree(2) == 1);

  CHECK_THROWS_AS(bipartite_induced(st, VertexSet{0, 2}, VertexSet{2, 3}), InvalidArgument);
  CHECK_THROWS_AS(VertexSet({1, 1}), InvalidArgument);
}

TEST_CASE("standard graphs") {
  ColoredGraph p = graphs::petersen();
  CHECK(p.n() == 10);
  CHECK(p.num_edges() == 15);
  for (Vertex v = 0; v < 10; ++v) CHECK(p.degree(v) == 3);

  ColoredGraph j = graphs::johnson(5, 2);
  CHECK(j.n() == 10);
  for (Vertex v = 0; v < 10; ++v) CHECK(j.degree(v) == 6);
  // Two 2-subsets are adjacent in J(5,2) iff they meet, so J(5,2) is the
  // complement of the Kneser graph.
  CHECK(complement(j) == graphs::kneser(5, 2));

  CHECK(graphs::cycle(3) == graphs::complete(3));
  CHECK_THROWS_AS(graphs::cycle(2), InvalidArgument);
  CHECK(graphs::complete_bipartite(2, 3).num_edges() == 6);
  CHECK(graphs::random_gnp(20, 0.5, 9) == graphs::random_gnp(20, 0.5, 9));
  CHECK(graphs::random_gnm(30, 40, 1).num_edges() == 40);
  ColoredGraph t = graphs::random_tree(12, 3);
  CHECK(t.num_edges() == 11);
}

TEST_CASE("permute and is_isomorphism") {
  ColoredGraph g = graphs::random_gnp(15, 0.4, 2);
  auto perm = random_permutation(15, 8);
  ColoredGraph h = permute(g, perm);
  CHECK(is_isomorphism(g, h, perm));
  std::swap(perm[0], perm[1]);
  if (g.degree(0) != g.degree(1)) CHECK(!is_isomorphism(g, h, perm));
}
