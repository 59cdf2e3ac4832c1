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
#include "crkit/mcvp.hpp"
#include "crkit/oracles.hpp"
#include "crkit/tinhofer.hpp"

using namespace crkit;

TEST_CASE("automorphism group orders") {
  CHECK(automorphisms(graphs::cycle(5)).order() == 10);
  CHECK(automorphisms(graphs::complete(4)).order() == 24);
  CHECK(automorphisms(graphs::path(4)).order() == 2);
  CHECK(automorphisms(graphs::petersen()).order() == 120);
  CHECK(automorphisms(graphs::complete_bipartite(2, 3)).order() == 12);
  CHECK(automorphisms(graphs::empty(0)).order() == 1);

  const AutGroup c6 = automorphisms(graphs::cycle(6));
  CHECK(c6.order() == 12);
  CHECK(c6.orbits.size() == 1);
  CHECK(c6.elements.front() == std::vector<Vertex>{0, 1, 2, 3, 4, 5});
  for (const auto& a : c6.elements) CHECK(is_isomorphism(graphs::cycle(6), graphs::cycle(6), a));
}

TEST_CASE("isomorphism oracle") {
  std::mt19937_64 rng(41);
  for (int i = 0; i < 100; ++i) {
    const std::size_t n = 1 + rng() % 12;
    const ColoredGraph g = graphs::random_gnp(n, 0.5, rng());
    const ColoredGraph h = permute(g, random_permutation(n, rng()));
    const auto m = isomorphic(g, h);
    REQUIRE(m);
    CHECK(is_isomorphism(g, h, *m));
  }
  CHECK(!isomorphic(disjoint_union(graphs::cycle(3), graphs::cycle(4)), graphs::cycle(7)));
  CHECK(!isomorphic(graphs::cycle(6), disjoint_union(graphs::cycle(3), graphs::cycle(3))));
  CHECK(!isomorphic(graphs::path(3), graphs::path(4)));
  CHECK_THROWS_AS(isomorphic(graphs::empty(40), graphs::empty(40)), BudgetExceeded);
}

TEST_CASE("orbit partitions") {
  const Partition p = orbit_partition(graphs::path(5));
  CHECK(p.size() == 3);
  CHECK(orbit_partition(graphs::petersen()).size() == 1);
  CHECK(is_orbit_partition(graphs::path(5), p));
  CHECK(!is_orbit_partition(graphs::path(5), Partition::from_class_of({0, 0, 0, 0, 0})));
  // Spider with legs of length 1, 2 and 3: the smallest asymmetric tree.
  const ColoredGraph t = load("p cgraph 7 6\ne 0 1\ne 0 2\ne 2 3\ne 0 4\ne 4 5\ne 5 6\n");
  CHECK(orbit_partition(t).is_discrete());
}

TEST_CASE("equitable partitions and the Godsil property") {
  CHECK(equitable_partitions(graphs::complete(3)).size() == 5);
  CHECK(equitable_partitions(graphs::path(3)).size() == 2);
  CHECK(is_godsil(graphs::petersen()));
  CHECK(is_godsil(graphs::path(6)));
  // Every labeled graph is refinable, Tinhofer and Godsil up to n = 4.
  for (std::uint64_t m = 0; m < 64; ++m) {
    const ColoredGraph g = graphs::from_mask(4, m);
    CHECK(is_godsil(g));
    CHECK(is_refinable(g));
    CHECK(is_tinhofer_bruteforce(g).tinhofer);
  }
}

TEST_CASE("Tinhofer oracle") {
  CHECK(is_tinhofer_bruteforce(graphs::johnson(4, 2)).tinhofer);
  CHECK(is_tinhofer_bruteforce(graphs::petersen()).tinhofer);
  const ColoredGraph s = separating_graph();
  CHECK(is_refinable(s));
  const TinhoferVerdict v = is_tinhofer_bruteforce(s);
  CHECK(!v.tinhofer);
  REQUIRE(!v.failing.empty());
  CHECK(!replay(s, s, v.failing).isomorphic);
}

TEST_CASE("small graph catalog") {
  const auto& c4 = SmallGraphCatalog::get(4);
  std::size_t classes = 0, labeled = 0;
  for (const auto& b : c4.buckets())
    for (const auto& c : b.classes) {
      ++classes;
      labeled += c.count;
    }
  CHECK(classes == 11);
  CHECK(labeled == 64);
  CHECK(&SmallGraphCatalog::get(4) == &c4);
  CHECK(SmallGraphCatalog::get(6).amenable(graphs::path(6)));
  CHECK(!SmallGraphCatalog::get(6).amenable(graphs::cycle(6)));
}

TEST_CASE("sweep census") {
  const SweepReport r = sweep(5, 5, 1);
  CHECK(r.labeled == 1024);
  CHECK(r.iso_classes == 34);
  CHECK(r.amenable == r.amenable_bruteforce);
  CHECK(r.inclusion_violations == 0);
  CHECK(r.violations.empty());
  CHECK(r.discrete <= r.amenable);
  CHECK(r.amenable <= r.godsil);
  CHECK(r.tinhofer <= r.refinable);
}
