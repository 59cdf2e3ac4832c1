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

// Shared machinery for procedures that refine the disjoint union G+H while
// individualizing vertex pairs (Tinhofer's procedure and the brute-force
// oracles). Left vertices are 0..n-1, right vertices n..2n-1.

#include <algorithm>
#include <vector>

#include "crkit/refinement.hpp"

namespace crkit::detail {

class UnionSearch {
 public:
  UnionSearch(const ColoredGraph& g, const ColoredGraph& h)
      : left_(g), right_(h), n_(g.n()), union_(disjoint_union(g, h)), refiner_(union_) {}
  UnionSearch(const UnionSearch&) = delete;
  UnionSearch& operator=(const UnionSearch&) = delete;

  std::size_t n() const { return n_; }
  const ColoredGraph& left() const { return left_; }
  const ColoredGraph& right() const { return right_; }

  std::vector<ClassId> initial() const {
    return {union_.colors().begin(), union_.colors().end()};
  }

  // Stable coloring of the union, dense ids.
  std::vector<ClassId> stabilize(const std::vector<ClassId>& coloring) {
    auto out = refiner_.refine(coloring);
    classes_ = refiner_.num_classes();
    return out;
  }
  std::size_t num_classes() const { return classes_; }

  // Per-class counts on the left side and right side.
  void counts(const std::vector<ClassId>& stable, std::vector<std::size_t>& left,
              std::vector<std::size_t>& right) const {
    left.assign(classes_, 0);
    right.assign(classes_, 0);
    for (std::size_t v = 0; v < n_; ++v) ++left[stable[v]];
    for (std::size_t v = 0; v < n_; ++v) ++right[stable[n_ + v]];
  }

  bool balanced(const std::vector<ClassId>& stable) const {
    std::vector<std::size_t> l, r;
    counts(stable, l, r);
    return l == r;
  }

  // Assumes balanced and discrete on each side (classes_ == n).
  std::vector<Vertex> leaf_map(const std::vector<ClassId>& stable) const {
    std::vector<Vertex> right_of_class(classes_);
    for (std::size_t v = 0; v < n_; ++v) right_of_class[stable[n_ + v]] = static_cast<Vertex>(v);
    std::vector<Vertex> map(n_);
    for (std::size_t v = 0; v < n_; ++v) map[v] = right_of_class[stable[v]];
    return map;
  }

  // u on the left, v on the right (both 0-based within their side). The
  // fresh id is derived from the coloring itself so that callers may
  // recurse between stabilize() and individualize().
  std::vector<ClassId> individualize(std::vector<ClassId> stable, Vertex u, Vertex v) const {
    ClassId fresh = 0;
    for (ClassId c : stable) fresh = std::max(fresh, c + 1);
    stable[u] = fresh;
    stable[n_ + v] = fresh;
    return stable;
  }

 private:
  const ColoredGraph& left_;
  const ColoredGraph& right_;
  std::size_t n_;
  ColoredGraph union_;
  Refiner refiner_;
  std::size_t classes_ = 0;
};

}  // namespace crkit::detail
