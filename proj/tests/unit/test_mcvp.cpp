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

#include "crkit/mcvp.hpp"
#include "crkit/oracles.hpp"
#include "crkit/refinement.hpp"

using namespace crkit;

TEST_CASE("circuit evaluation") {
  CHECK(evaluate(parse_circuit("g 0 const1\ng 1 const1\ng 2 and 0 1\nout 2\n")));
  CHECK(!evaluate(parse_circuit("g 0 const1\ng 1 const0\ng 2 and 0 1\nout 2\n")));
  CHECK(evaluate(parse_circuit("g 0 const1\ng 1 const0\ng 2 or 0 1\nout 2\n")));
  CHECK(!evaluate(parse_circuit("g 0 const0\ng 1 const0\ng 2 or 0 1\nout 2\n")));
  CHECK(!evaluate(parse_circuit("g 0 const0  # lone constant\nout 0\n")));
}

TEST_CASE("circuit parse errors") {
  CHECK_THROWS_AS(parse_circuit("g 1 const0\nout 1\n"), ParseError);
  CHECK_THROWS_AS(parse_circuit("g 0 const0\ng 1 and 0 2\nout 1\n"), ParseError);
  CHECK_THROWS_AS(parse_circuit("g 0 const0\ng 1 and 0 0\nout 1\n"), ParseError);
  CHECK_THROWS_AS(parse_circuit("g 0 nand\nout 0\n"), ParseError);
  CHECK_THROWS_AS(parse_circuit("g 0 const0\n"), ParseError);
  CHECK_THROWS_AS(parse_circuit("g 0 const0\nout 3\n"), ParseError);
  CHECK_THROWS_AS(parse_circuit("g 0 const0\nout 0\nout 0\n"), ParseError);
  CHECK_THROWS_AS(parse_variant("H"), InvalidArgument);
}

TEST_CASE("circuit text round-trips") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const MonotoneCircuit c = random_circuit(10, seed);
    const MonotoneCircuit back = parse_circuit(save_circuit(c));
    CHECK(save_circuit(back) == save_circuit(c));
    CHECK(evaluate_all(back) == evaluate_all(c));
  }
}

TEST_CASE("reduction sizes for a single and gate") {
  const MonotoneCircuit c = parse_circuit("g 0 const1\ng 1 const1\ng 2 and 0 1\nout 2\n");
  CHECK(reduce(c, Variant::G).graph.n() == 10);
  CHECK(reduce(c, Variant::Gp).graph.n() == 10);
  const ReductionOutput r = reduce(c, Variant::Gpp);
  CHECK(r.graph.n() == 20);
  CHECK(r.extra_pair);
  CHECK(is_discrete(r.graph));
}

TEST_CASE("refinement propagates gate values") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const MonotoneCircuit c = random_circuit(2 + seed % 15, seed);
    const ReductionOutput r = reduce(c, Variant::G);
    CHECK(verify_gate_propagation(r, c));
    CHECK(is_discrete(reduce(c, Variant::Gpp).graph) == evaluate(c));
  }
}

TEST_CASE("reduction is deterministic") {
  const MonotoneCircuit c = random_circuit(12, 77);
  CHECK(reduce(c, Variant::Gpp).graph == reduce(c, Variant::Gpp).graph);
  CHECK(save_circuit(random_circuit(12, 77)) == save_circuit(c));
}

TEST_CASE("gadgets") {
  const ColoredGraph cfi = cfi_gadget();
  CHECK(cfi.n() == 10);
  CHECK(stable_partition(cfi).partition.size() == 4);
  const AutGroup aut = automorphisms(cfi);
  CHECK(aut.order() == 4);
  // Automorphisms flip an even number of pairs.
  for (const auto& a : aut.elements) {
    int flips = 0;
    for (Vertex p = 0; p < 3; ++p) flips += a[2 * p] != 2 * p;
    CHECK(flips % 2 == 0);
  }
  CHECK(separating_graph().n() == 16);
}
