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

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "crkit/graph.hpp"

namespace crkit {

enum class GateKind { Const0, Const1, And, Or };

struct Gate {
  GateKind kind = GateKind::Const0;
  std::size_t a = 0, b = 0;  // inputs of And/Or gates
};

// Topologically ordered monotone circuit: inputs of gate k are gates < k.
struct MonotoneCircuit {
  std::vector<Gate> gates;
  std::size_t output = 0;

  // Throws InvalidArgument on forward references, equal inputs or a
  // missing output.
  void validate() const;
};

// `g <id> const0|const1|and <i> <j>|or <i> <j>` lines with ids 0, 1, ...
// in order, plus one `out <id>` line. '#' starts a comment.
MonotoneCircuit parse_circuit(std::string_view text);
MonotoneCircuit load_circuit_file(const std::string& path);
std::string save_circuit(const MonotoneCircuit& c);

bool evaluate(const MonotoneCircuit& c);
// Value of every gate.
std::vector<bool> evaluate_all(const MonotoneCircuit& c);

// Random circuit with the given number of gates; the last gate is the
// output. Roughly a third of the gates are constants.
MonotoneCircuit random_circuit(std::size_t gates, std::uint64_t seed);

enum class Variant {
  G,    // gate pairs and gadgets only
  Gp,   // plus links from the output pair to every constant-0 pair
  Gpp,  // plus an implication gadget from the output pair to a fresh pair
};

std::string to_string(Variant v);
Variant parse_variant(std::string_view s);

using VertexPair = std::array<Vertex, 2>;

struct GadgetInstance {
  std::string kind;  // "CFI", "IMP" or "LINK"
  std::size_t gate;  // owning gate (the output gate for LINK and the final IMP)
  // Pairs joined by the gadget, in wiring order.
  std::vector<VertexPair> pairs;
  // Internal vertices: the four parity vertices of a CFI gadget, or for IMP
  // the pairs P', P'' followed by the parity vertices.
  std::vector<Vertex> internal;
  std::vector<Color> colors;  // color classes created by this gadget
};

struct ReductionOutput {
  Variant variant = Variant::G;
  ColoredGraph graph;
  std::vector<VertexPair> pair_of;  // per gate
  std::optional<VertexPair> extra_pair;
  std::vector<GadgetInstance> gadgets;
};

ReductionOutput reduce(const MonotoneCircuit& c, Variant variant);

// For variant G: color refinement splits P_k exactly for the gates k that
// evaluate to 1.
bool verify_gate_propagation(const ReductionOutput& r, const MonotoneCircuit& c);

// Three pairs (vertices 0-5, one color each) joined by a CFI gadget
// (vertices 6-9).
ColoredGraph cfi_gadget();

// A refinable graph that is not Tinhofer: pairs P1..P4 (vertices 0-7) with
// a CFI gadget on (P1, P2, P3) and a second one on (P2, P1, P4).
ColoredGraph separating_graph();

}  // namespace crkit
