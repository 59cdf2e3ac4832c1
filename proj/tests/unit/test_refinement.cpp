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

#include <algorithm>
#include <random>

#include "crkit/graph.hpp"
#include "crkit/refinement.hpp"

using namespace crkit;

namespace {

std::vector<VertexSet> cells_of(const Partition& p) {
  std::vector<VertexSet> cells = p.classes;
  std::sort(cells.begin(), cells.end(),
            [](const VertexSet& a, const VertexSet& b) { return a[0] < b[0]; });
  return cells;
}

}  // namespace

TEST_CASE("stable partition of small examples") {
  CHECK(stable_partition(graphs::cycle(7)).partition.size() == 1);
  CHECK(stable_partition(graphs::complete(5)).partition.size() == 1);
  CHECK(stable_partition(graphs::stars(1, 3)).partition.size() == 2);

  auto cells = cells_of(stable_partition(graphs::path(5)).partition);
  REQUIRE(cells.size() == 3);
  CHECK(cells[0] == VertexSet{0, 4});
  CHECK(cells[1] == VertexSet{1, 3});
  CHECK(cells[2] == VertexSet{2});

  ColoredGraph colored = load("p cgraph 4 3\nc 0 1\ne 0 1\ne 1 2\ne 2 3\n");
  CHECK(stable_partition(colored).partition.is_discrete());
  CHECK(is_discrete(colored));
  CHECK(!is_discrete(graphs::path(4)));
}

TEST_CASE("multiplicities are counted") {
  ColoredGraph g = load("p cgraph 4 2\ne 0 1 2\ne 2 3\n");
  auto cells = cells_of(stable_partition(g).partition);
  REQUIRE(cells.size() == 2);
  CHECK(cells[0] == VertexSet{0, 1});
}

TEST_CASE("the stable partition is equitable and coarsest") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    const ColoredGraph g = graphs::random_gnp(2 + rng() % 14, 0.3, rng());
    const Partition p = stable_partition(g).partition;
    CHECK(is_equitable(g, p));
    CHECK(refine_step(g, p).same_cells(p));
  }
  // The orbits of Aut(Petersen) on vertex pairs give an equitable
  // partition finer than the unit partition.
  const ColoredGraph pet = graphs::petersen();
  Partition fine = Partition::from_class_of({0, 2, 2, 1, 2, 2, 1, 0, 1, 1});
  CHECK(is_equitable(pet, fine));
  CHECK(!is_equitable(pet, Partition::from_class_of({0, 0, 0, 1, 1, 1, 1, 1, 1, 1})));
}

TEST_CASE("worklist and rounds engines agree") {
  auto agree = [](const ColoredGraph& g) {
    const auto a = stable_partition(g, {Engine::Worklist, false}).partition;
    const auto b = stable_partition(g, {Engine::Rounds, true}).partition;
    return a.same_cells(b);
  };
  for (std::size_t n = 1; n <= 5; ++n) {
    const std::uint64_t masks = std::uint64_t{1} << (n * (n - 1) / 2);
    for (std::uint64_t m = 0; m < masks; ++m) CHECK(agree(graphs::from_mask(n, m)));
  }
  std::mt19937_64 rng(12);
  for (int i = 0; i < 300; ++i) {
    const std::size_t n = 2 + rng() % 30;
    GraphBuilder b(n);
    for (Vertex v = 0; v < n; ++v) b.set_color(v, static_cast<Color>(rng() % 2));
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v)
        if (rng() % 5 == 0) b.add_edge(u, v, 1 + static_cast<unsigned>(rng() % 2));
    CHECK(agree(b.build()));
  }
}

TEST_CASE("trace records class counts per round") {
  const StableResult r = stable_partition(graphs::path(7), {Engine::Rounds, true});
  REQUIRE(!r.trace.sizes.empty());
  CHECK(std::is_sorted(r.trace.sizes.begin(), r.trace.sizes.end()));
  CHECK(r.trace.sizes.back() == r.partition.size());
  CHECK(r.partition.size() == 4);
}

TEST_CASE("refinement is invariant under relabeling") {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 200; ++i) {
    const std::size_t n = 1 + rng() % 20;
    const ColoredGraph g = graphs::random_gnp(n, 0.4, rng());
    const auto perm = random_permutation(n, rng());
    const ColoredGraph h = permute(g, perm);
    CHECK(cr_fingerprint(g) == cr_fingerprint(h));
    CHECK(cr_equivalent(g, h));
    const Partition pg = stable_partition(g).partition;
    const Partition ph = stable_partition(h).partition;
    // Class ids are isomorphism invariant, so they transport along perm.
    for (Vertex v = 0; v < n; ++v) CHECK(pg.class_of[v] == ph.class_of[perm[v]]);
  }
}

TEST_CASE("cr equivalence") {
  CHECK(cr_equivalent(disjoint_union(graphs::cycle(3), graphs::cycle(4)), graphs::cycle(7)));
  CHECK(cr_equivalent(graphs::matching(3), disjoint_union(graphs::path(2), graphs::matching(2))));
  CHECK(!cr_equivalent(graphs::path(4), graphs::stars(1, 3)));
  CHECK(!cr_equivalent(graphs::cycle(5), graphs::cycle(6)));
  CHECK(!cr_equivalent(load("p cgraph 2 0\nc 0 1\n"), graphs::empty(2)));
  // Colors are compacted, so a uniform recoloring changes nothing.
  CHECK(cr_equivalent(load("p cgraph 2 0\nc 0 1\nc 1 1\n"), graphs::empty(2)));
}

TEST_CASE("refiner accepts a seed coloring") {
  const ColoredGraph g = graphs::cycle(6);
  Refiner r(g);
  std::vector<ClassId> seed(6, 0);
  seed[0] = 1;
  const auto out = r.refine(seed);
  const Partition p = Partition::from_class_of(out);
  CHECK(p.size() == 4);
  CHECK(p.class_of[1] == p.class_of[5]);
  CHECK(p.class_of[2] == p.class_of[4]);
  CHECK(is_equitable(g, p));
}
