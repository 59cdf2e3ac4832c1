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
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "crkit/refinement.hpp"
#include "crkit/tinhofer.hpp"

namespace crkit {

struct AutGroup {
  // Every automorphism, identity first.
  std::vector<std::vector<Vertex>> elements;
  Partition orbits;

  std::size_t order() const { return elements.size(); }
};

// Limits for the backtracking oracles. max_nodes bounds search-tree nodes
// per call; graphs above max_vertices are rejected up front.
struct SearchBudget {
  std::size_t max_vertices = 32;
  std::size_t max_nodes = 5'000'000;
};

// Full enumeration of Aut(G) by individualization-refinement on G+G.
// Throws BudgetExceeded when the group has more than max_elements members.
AutGroup automorphisms(const ColoredGraph& g, std::size_t max_elements = 1'000'000,
                       SearchBudget budget = {});

// Verified isomorphism G -> H, or nullopt after an exhausted search.
std::optional<std::vector<Vertex>> isomorphic(const ColoredGraph& g, const ColoredGraph& h,
                                              SearchBudget budget = {});

// Aut(G)-orbits without listing the group: one fixed-pair search per
// candidate vertex. Class ids ordered by smallest member.
Partition orbit_partition(const ColoredGraph& g, SearchBudget budget = {});

bool is_refinable(const ColoredGraph& g, SearchBudget budget = {});

// Whether p is the orbit partition of the subgroup of Aut(G) fixing every
// cell of p setwise (equivalently of some subgroup).
bool is_orbit_partition(const ColoredGraph& g, const Partition& p, SearchBudget budget = {});

// All equitable partitions of G (each refines the stable partition).
// Throws BudgetExceeded after max_candidates candidate partitions.
std::vector<Partition> equitable_partitions(const ColoredGraph& g,
                                            std::size_t max_candidates = 5'000'000);

bool is_godsil(const ColoredGraph& g, std::size_t max_candidates = 5'000'000,
               SearchBudget budget = {});

struct TinhoferVerdict {
  bool tinhofer = true;
  // Replayable with replay(G, G, failing) when tinhofer is false.
  std::vector<IndividualizationStep> failing;
  // "histogram" or "final-map".
  std::string reason;
  std::size_t nodes = 0;
};

// Explores every class choice; within a class one vertex per orbit of the
// currently colored copy on each side.
TinhoferVerdict is_tinhofer_bruteforce(const ColoredGraph& g, SearchBudget budget = {});

// Labeled graphs on n vertices with a fixed coloring, grouped by color
// refinement fingerprint and then into isomorphism classes.
class SmallGraphCatalog {
 public:
  struct IsoClass {
    std::uint64_t mask;  // first labeled member, see graphs::from_mask
    std::size_t count;   // labeled members
  };
  struct Bucket {
    std::vector<std::uint32_t> fingerprint;
    std::vector<IsoClass> classes;
  };

  // Enumerates all 2^(n(n-1)/2) labeled graphs. colors may be empty
  // (uncolored) or have n entries.
  explicit SmallGraphCatalog(std::size_t n, std::vector<Color> colors = {});

  std::size_t n() const { return n_; }
  const std::vector<Bucket>& buckets() const { return buckets_; }
  ColoredGraph graph(std::uint64_t mask) const;
  // True iff every graph with G's fingerprint is isomorphic to G.
  bool amenable(const ColoredGraph& g) const;

  // Shared instance for (n, colors), built on first use.
  static const SmallGraphCatalog& get(std::size_t n, const std::vector<Color>& colors = {});

 private:
  std::size_t n_;
  std::vector<Color> colors_;
  std::vector<Bucket> buckets_;
  std::map<std::vector<std::uint32_t>, std::size_t> index_;
};

struct SweepReport {
  std::size_t n = 0;
  std::size_t labeled = 0;
  std::size_t iso_classes = 0;
  std::size_t discrete = 0, amenable = 0, amenable_bruteforce = 0, godsil = 0, tinhofer = 0,
              refinable = 0;
  // Labeled graphs where compact_probe found a non-integral vertex; only
  // computed when probe_trials > 0.
  std::size_t probe_noncompact = 0;
  std::size_t inclusion_violations = 0;
  std::vector<std::string> violations;  // human-readable, first few
};

// Exhaustive hierarchy census over all labeled graphs on n <= 7 vertices.
// Each isomorphism class is classified once and weighted by its labeled
// count.
SweepReport sweep(std::size_t n, std::size_t probe_trials = 0, std::uint64_t seed = 0);

}  // namespace crkit
