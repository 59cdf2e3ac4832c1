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

#include "crkit/cell_graph.hpp"

namespace crkit {

// A failed structural condition together with the cells that witness it.
//
// condition 'A': cells = {X}, G[X] irregular.
// condition 'B': cells = {X, Y}, G[X,Y] irregular.
// condition 'C': anisotropic uniform path between two heterogeneous cells.
// condition 'D': uniform anisotropic cycle (closing edge implied).
// condition 'E': path X Y1..Yl Z with |X| < |Y1| = .. = |Yl| > |Z|, or with
//                cycle = true, X Y1..Yl closing back to X, |X| < |Yi|.
// condition 'F': path X Y1..Yl, |X| < |Y1| = .. = |Yl|, Yl heterogeneous.
// condition 'G': kind "not-tree" (cells of the component) or "monotonicity"
//                (tree path from the root; the last edge shrinks).
// condition 'H': kind "two-heterogeneous" ({S, T} in one component) or
//                "heterogeneous-not-minimal" ({R, S} with |R| > |S|).
struct Violation {
  char condition = 'A';
  std::string kind;
  std::vector<ClassId> cells;
  bool cycle = false;
};

struct AmenabilityVerdict {
  bool amenable = true;
  std::optional<Violation> violation;
};

// Conditions A, B, G, H over the stable partition. Requires a simple graph.
AmenabilityVerdict is_amenable(const ColoredGraph& g);
AmenabilityVerdict is_amenable(const ColoredGraph& g, const CellGraphData& cg);

// Conditions A-F by explicit enumeration of simple anisotropic paths and
// cycles. Throws BudgetExceeded beyond max_states DFS extensions.
AmenabilityVerdict check_cdef(const ColoredGraph& g, std::size_t max_states = std::size_t{1} << 20);

// Re-checks a witness against the definition of its condition.
bool verify_violation(const CellGraphData& cg, const Violation& v);

std::string describe(const Violation& v);

// Semantic oracle: G is amenable iff every graph on the same colored vertex
// set that color refinement cannot tell apart from G is isomorphic to G.
// Enumerates all 2^(n(n-1)/2) graphs; throws BudgetExceeded if n > n_budget.
bool amenable_bruteforce(const ColoredGraph& g, std::size_t n_budget = 7);

}  // namespace crkit
