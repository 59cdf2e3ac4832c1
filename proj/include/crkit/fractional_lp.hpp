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
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "crkit/graph.hpp"

namespace crkit {

// Arbitrary-precision rational, always kept in lowest terms.
using Rational = mpq_class;

std::string to_string(const Rational& q);

class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static RatMatrix identity(std::size_t n);
  static RatMatrix permutation(std::span<const Vertex> perm);  // X[i][perm[i]] = 1
  static RatMatrix adjacency(const ColoredGraph& g);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  bool is_doubly_stochastic() const;
  bool is_integral() const;
  // The permutation when this is a permutation matrix.
  std::optional<std::vector<Vertex>> as_permutation() const;

  friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
  friend RatMatrix operator+(const RatMatrix& a, const RatMatrix& b);
  friend RatMatrix operator*(const Rational& c, const RatMatrix& a);
  friend bool operator==(const RatMatrix& a, const RatMatrix& b);

  // Row-major grid of p/q entries, one row per line.
  std::string to_string() const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rational> data_;
};

// Which vertex pairs (u, v) receive a variable.
enum class BlockMode {
  // Same initial color.
  InitialColors,
  // Same class in the stable coloring of G+H. Every fractional isomorphism
  // is block diagonal here, so the feasible set is unchanged.
  StableColoring,
};

// The polytope of doubly stochastic X with AX = XB and X[u][v] = 0 outside
// the blocks, as an equality system over the block variables (x >= 0).
struct FracIsoPolytope {
  std::size_t n = 0;
  std::vector<std::pair<Vertex, Vertex>> vars;
  // Sparse rows: (variable index, coefficient); all coefficients integral.
  std::vector<std::vector<std::pair<std::size_t, long>>> rows;
  std::vector<long> rhs;
  // False when the block sizes already rule out any doubly stochastic X.
  bool blocks_balanced = true;

  RatMatrix to_matrix(const std::vector<Rational>& x) const;
};

FracIsoPolytope build_polytope(const ColoredGraph& g, const ColoredGraph& h,
                               BlockMode mode = BlockMode::StableColoring);
// Fractional automorphisms of G.
FracIsoPolytope build_polytope(const ColoredGraph& g, BlockMode mode = BlockMode::StableColoring);

// Exact simplex over a polytope: one phase-1 solve, then any number of
// seeded phase-2 solves that start from the phase-1 basis.
class PolytopeSolver {
 public:
  explicit PolytopeSolver(const FracIsoPolytope& p);
  ~PolytopeSolver();
  PolytopeSolver(const PolytopeSolver&) = delete;
  PolytopeSolver& operator=(const PolytopeSolver&) = delete;

  bool feasible() const;
  // Some basic feasible solution (the phase-1 vertex).
  std::optional<RatMatrix> any_vertex() const;
  // Vertex minimizing an integral objective drawn uniformly from
  // [-1000, 1000] per variable by a generator seeded with seed.
  std::optional<RatMatrix> optimal_vertex(std::uint64_t seed);
  // Vertex minimizing the given objective (one coefficient per variable).
  std::optional<RatMatrix> optimal_vertex(const std::vector<long>& objective);
  std::size_t pivots() const;

 private:
  struct Impl;
  Impl* impl_;
};

// Exact feasibility of the fractional isomorphism system with blocks given
// by the initial colors.
bool is_fractionally_isomorphic(const ColoredGraph& g, const ColoredGraph& h);

std::optional<RatMatrix> extreme_point(const FracIsoPolytope& p, std::uint64_t objective_seed);

// Doubly stochastic, color preserving, AX = XB.
bool is_fractional_isomorphism(const ColoredGraph& g, const ColoredGraph& h, const RatMatrix& x);

struct CompactProbeResult {
  // A verified non-integral vertex of ds(G), if one was found.
  std::optional<RatMatrix> witness;
  std::size_t trials_run = 0;
  std::uint64_t witness_seed = 0;
  // Sampled vertices in trial order, when requested.
  std::vector<RatMatrix> vertices;
};

// One-sided search for a non-integral vertex of the fractional automorphism
// polytope. Trial i uses objective seed (seed + i). Absence of a witness
// proves nothing.
CompactProbeResult compact_probe(const ColoredGraph& g, std::size_t trials, std::uint64_t seed = 0,
                                 bool keep_vertices = false);

struct BirkhoffTerm {
  Rational coefficient;
  std::vector<Vertex> permutation;
};

// X as a convex combination of at most (n-1)^2 + 1 permutation matrices.
// Throws InvalidArgument unless X is doubly stochastic.
std::vector<BirkhoffTerm> birkhoff_decompose(const RatMatrix& x);

}  // namespace crkit
