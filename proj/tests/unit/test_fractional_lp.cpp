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

#include "crkit/fractional_lp.hpp"
#include "crkit/graph.hpp"

using namespace crkit;

namespace {

RatMatrix uniform(std::size_t n) {
  RatMatrix x(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) x.at(i, j) = Rational(1, static_cast<long>(n));
  return x;
}

RatMatrix recompose(const std::vector<BirkhoffTerm>& terms, std::size_t n) {
  RatMatrix sum(n, n);
  for (const BirkhoffTerm& t : terms) sum = sum + t.coefficient * RatMatrix::permutation(t.permutation);
  return sum;
}

}  // namespace

TEST_CASE("rational matrices") {
  CHECK(RatMatrix::identity(3).is_doubly_stochastic());
  CHECK(uniform(3).is_doubly_stochastic());
  CHECK(!uniform(3).is_integral());
  const std::vector<Vertex> p{2, 0, 1};
  CHECK(RatMatrix::permutation(p).as_permutation() == p);
  CHECK(!uniform(2).as_permutation());
  CHECK(RatMatrix::permutation(p) * RatMatrix::identity(3) == RatMatrix::permutation(p));
  CHECK(uniform(2).to_string() == "1/2 1/2\n1/2 1/2\n");
}

TEST_CASE("fractional automorphisms of K2") {
  const ColoredGraph k2 = graphs::complete(2);
  PolytopeSolver s(build_polytope(k2));
  REQUIRE(s.feasible());
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto x = s.optimal_vertex(seed);
    REQUIRE(x);
    CHECK(x->is_integral());
    CHECK(is_fractional_isomorphism(k2, k2, *x));
  }
  // Minimizing the diagonal lands on the swap.
  const auto swap = s.optimal_vertex(std::vector<long>{1, 0, 0, 1});
  REQUIRE(swap);
  CHECK(swap->as_permutation() == std::vector<Vertex>{1, 0});
}

TEST_CASE("fractional isomorphism feasibility") {
  const ColoredGraph c6 = graphs::cycle(6);
  const ColoredGraph two_c3 = disjoint_union(graphs::cycle(3), graphs::cycle(3));
  CHECK(is_fractionally_isomorphic(c6, two_c3));
  CHECK(is_fractional_isomorphism(c6, two_c3, uniform(6)));
  CHECK(!is_fractionally_isomorphic(graphs::path(4), graphs::stars(1, 3)));
  CHECK(!is_fractionally_isomorphic(graphs::path(4), graphs::path(5)));
  const ColoredGraph red = load("p cgraph 3 2\nc 0 1\ne 0 1\ne 1 2\n");
  const ColoredGraph red_mid = load("p cgraph 3 2\nc 1 1\ne 0 1\ne 1 2\n");
  CHECK(!is_fractionally_isomorphic(red, red_mid));
  CHECK(is_fractionally_isomorphic(red, load("p cgraph 3 2\nc 2 1\ne 0 1\ne 1 2\n")));
}

TEST_CASE("compact probe") {
  const CompactProbeResult amen = compact_probe(graphs::path(6), 30, 4, true);
  CHECK(!amen.witness);
  CHECK(amen.trials_run == 30);
  CHECK(amen.vertices.size() == 30);

  const ColoredGraph g = disjoint_union(graphs::cycle(3), graphs::cycle(4));
  const CompactProbeResult r = compact_probe(g, 200, 0);
  REQUIRE(r.witness);
  CHECK(!r.witness->is_integral());
  CHECK(is_fractional_isomorphism(g, g, *r.witness));
  // The reported seed reproduces the witness.
  PolytopeSolver s(build_polytope(g));
  CHECK(*s.optimal_vertex(r.witness_seed) == *r.witness);
}

TEST_CASE("Birkhoff decomposition") {
  const auto half = birkhoff_decompose(uniform(2));
  REQUIRE(half.size() == 2);
  for (const BirkhoffTerm& t : half) CHECK(t.coefficient == Rational(1, 2));
  CHECK(recompose(half, 2) == uniform(2));

  std::mt19937_64 rng(61);
  for (int i = 0; i < 30; ++i) {
    const std::size_t n = 1 + rng() % 7;
    // Random convex combination of permutations.
    RatMatrix x(n, n);
    const int k = 1 + static_cast<int>(rng() % 5);
    for (int j = 0; j < k; ++j)
      x = x + Rational(1, k) * RatMatrix::permutation(random_permutation(n, rng()));
    const auto terms = birkhoff_decompose(x);
    CHECK(terms.size() <= (n - 1) * (n - 1) + 1);
    CHECK(recompose(terms, n) == x);
    Rational total = 0;
    for (const auto& t : terms) total += t.coefficient;
    CHECK(total == 1);
  }
  RatMatrix bad = RatMatrix::identity(2);
  bad.at(0, 1) = 1;
  CHECK_THROWS_AS(birkhoff_decompose(bad), InvalidArgument);
}
