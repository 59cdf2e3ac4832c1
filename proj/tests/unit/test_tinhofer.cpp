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
#include "crkit/tinhofer.hpp"

using namespace crkit;

TEST_CASE("isomorphic inputs yield a verified mapping") {
  std::mt19937_64 rng(51);
  for (int i = 0; i < 100; ++i) {
    const std::size_t n = 1 + rng() % 20;
    const ColoredGraph g = graphs::random_tree(n, rng());
    const ColoredGraph h = permute(g, random_permutation(n, rng()));
    for (Policy p : {Policy::Deterministic, Policy::SeededRandom}) {
      const IsoResult r = tinhofer_iso(g, h, {p, rng()});
      REQUIRE(r.isomorphic);
      CHECK(is_isomorphism(g, h, r.mapping));
    }
  }
  const IsoResult pet = tinhofer_iso(graphs::petersen(), permute(graphs::petersen(),
                                                                 random_permutation(10, 3)));
  CHECK(pet.isomorphic);
  CHECK(!pet.transcript.empty());
}

TEST_CASE("negative answers carry a reason") {
  CHECK(tinhofer_iso(graphs::path(3), graphs::path(4)).reason == "size");
  CHECK(tinhofer_iso(graphs::path(4), graphs::stars(1, 3)).reason == "histogram");
  const IsoResult r = tinhofer_iso(disjoint_union(graphs::cycle(3), graphs::cycle(4)),
                                   graphs::cycle(7));
  CHECK(!r.isomorphic);
  CHECK(r.transcript.size() == 1);
  CHECK(r.reason == "histogram");
}

TEST_CASE("replay reproduces a run") {
  const ColoredGraph g = graphs::cycle(8);
  const ColoredGraph h = permute(g, random_permutation(8, 2));
  const IsoResult r = tinhofer_iso(g, h, {Policy::SeededRandom, 9});
  const IsoResult again = replay(g, h, r.transcript);
  CHECK(again.isomorphic == r.isomorphic);
  CHECK(again.mapping == r.mapping);
  CHECK(again.transcript == r.transcript);

  std::vector<IndividualizationStep> bad = r.transcript;
  REQUIRE(!bad.empty());
  bad.front().cls = 999;
  CHECK_THROWS_AS(replay(g, h, bad), InvalidArgument);
}

TEST_CASE("canonical form") {
  std::mt19937_64 rng(52);
  for (int i = 0; i < 50; ++i) {
    const std::size_t n = 1 + rng() % 15;
    const ColoredGraph g = graphs::random_tree(n, rng());
    const ColoredGraph h = permute(g, random_permutation(n, rng()));
    const CanonicalForm a = canonical_form(g), b = canonical_form(h);
    CHECK(a.graph == b.graph);
    CHECK(a.hash == b.hash);
    CHECK(a.hash == adjacency_hash(a.graph));
    CHECK(permute(g, [&] {
            std::vector<Vertex> inv(n);
            for (Vertex i2 = 0; i2 < n; ++i2) inv[a.order[i2]] = i2;
            return inv;
          }()) == a.graph);
  }
  CHECK(canonical_form(graphs::path(5)).hash != canonical_form(graphs::stars(1, 4)).hash);
}
