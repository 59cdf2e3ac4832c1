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

#include "crkit/fractional_lp.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "crkit/refinement.hpp"

namespace crkit {

std::string to_string(const Rational& q) { return q.get_str(); }

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

RatMatrix RatMatrix::permutation(std::span<const Vertex> perm) {
  RatMatrix m(perm.size(), perm.size());
  for (std::size_t i = 0; i < perm.size(); ++i) m.at(i, perm[i]) = 1;
  return m;
}

RatMatrix RatMatrix::adjacency(const ColoredGraph& g) {
  RatMatrix m(g.n(), g.n());
  for (Vertex u = 0; u < g.n(); ++u)
    for (const Neighbor& nb : g.neighbors(u)) m.at(u, nb.v) = nb.mult;
  return m;
}

bool RatMatrix::is_doubly_stochastic() const {
  if (rows_ != cols_) return false;
  for (const Rational& q : data_)
    if (sgn(q) < 0) return false;
  for (std::size_t i = 0; i < rows_; ++i) {
    Rational row = 0, col = 0;
    for (std::size_t j = 0; j < cols_; ++j) {
      row += at(i, j);
      col += at(j, i);
    }
    if (row != 1 || col != 1) return false;
  }
  return true;
}

bool RatMatrix::is_integral() const {
  return std::all_of(data_.begin(), data_.end(),
                     [](const Rational& q) { return q.get_den() == 1; });
}

std::optional<std::vector<Vertex>> RatMatrix::as_permutation() const {
  if (rows_ != cols_) return std::nullopt;
  std::vector<Vertex> perm(rows_);
  std::vector<char> hit(cols_, 0);
  for (std::size_t i = 0; i < rows_; ++i) {
    std::size_t ones = 0;
    for (std::size_t j = 0; j < cols_; ++j) {
      const Rational& q = at(i, j);
      if (q == 0) continue;
      if (q != 1 || hit[j]) return std::nullopt;
      hit[j] = 1;
      perm[i] = static_cast<Vertex>(j);
      ++ones;
    }
    if (ones != 1) return std::nullopt;
  }
  return perm;
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
  if (a.cols_ != b.rows_) throw InvalidArgument("matrix dimensions do not match");
  RatMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& x = a.at(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        if (b.at(k, j) != 0) c.at(i, j) += x * b.at(k, j);
    }
  return c;
}

RatMatrix operator+(const RatMatrix& a, const RatMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw InvalidArgument("matrix dimensions do not match");
  RatMatrix c = a;
  for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] += b.data_[i];
  return c;
}

RatMatrix operator*(const Rational& s, const RatMatrix& a) {
  RatMatrix c = a;
  for (Rational& q : c.data_) q *= s;
  return c;
}

bool operator==(const RatMatrix& a, const RatMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

std::string RatMatrix::to_string() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out << (j ? " " : "") << at(i, j).get_str();
    out << "\n";
  }
  return out.str();
}

RatMatrix FracIsoPolytope::to_matrix(const std::vector<Rational>& x) const {
  RatMatrix m(n, n);
  for (std::size_t k = 0; k < vars.size(); ++k) m.at(vars[k].first, vars[k].second) = x[k];
  return m;
}

FracIsoPolytope build_polytope(const ColoredGraph& g, const ColoredGraph& h, BlockMode mode) {
  if (g.n() != h.n()) throw InvalidArgument("graphs differ in size");
  const std::size_t n = g.n();
  std::vector<ClassId> bg(n), bh(n);
  if (mode == BlockMode::InitialColors) {
    for (Vertex v = 0; v < n; ++v) {
      bg[v] = g.color(v);
      bh[v] = h.color(v);
    }
  } else {
    ColoredGraph u = disjoint_union(g, h);
    Refiner refiner(u);
    std::vector<ClassId> st = refiner.refine(std::vector<ClassId>(u.colors().begin(), u.colors().end()));
    std::copy(st.begin(), st.begin() + static_cast<std::ptrdiff_t>(n), bg.begin());
    std::copy(st.begin() + static_cast<std::ptrdiff_t>(n), st.end(), bh.begin());
  }

  FracIsoPolytope p;
  p.n = n;
  std::vector<long> var_of(n * n, -1);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = 0; v < n; ++v)
      if (bg[u] == bh[v]) {
        var_of[u * n + v] = static_cast<long>(p.vars.size());
        p.vars.emplace_back(u, v);
      }
  {
    std::vector<ClassId> cg(bg), ch(bh);
    std::sort(cg.begin(), cg.end());
    std::sort(ch.begin(), ch.end());
    p.blocks_balanced = cg == ch;
  }

  using Row = std::vector<std::pair<std::size_t, long>>;
  auto push = [&](Row row, long rhs) {
    std::sort(row.begin(), row.end());
    Row merged;
    for (auto [k, c] : row) {
      if (!merged.empty() && merged.back().first == k) {
        merged.back().second += c;
      } else {
        merged.emplace_back(k, c);
      }
    }
    std::erase_if(merged, [](const auto& e) { return e.second == 0; });
    if (merged.empty() && rhs == 0) return;
    p.rows.push_back(std::move(merged));
    p.rhs.push_back(rhs);
  };
  for (Vertex u = 0; u < n; ++u) {
    Row row;
    for (Vertex v = 0; v < n; ++v)
      if (var_of[u * n + v] >= 0) row.emplace_back(var_of[u * n + v], 1);
    push(std::move(row), 1);
  }
  for (Vertex v = 0; v < n; ++v) {
    Row row;
    for (Vertex u = 0; u < n; ++u)
      if (var_of[u * n + v] >= 0) row.emplace_back(var_of[u * n + v], 1);
    push(std::move(row), 1);
  }
  // (AX)[u][v] - (XB)[u][v] = 0.
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = 0; v < n; ++v) {
      Row row;
      for (const Neighbor& w : g.neighbors(u))
        if (var_of[w.v * n + v] >= 0) row.emplace_back(var_of[w.v * n + v], w.mult);
      for (const Neighbor& w : h.neighbors(v))
        if (var_of[u * n + w.v] >= 0) row.emplace_back(var_of[u * n + w.v], -long{w.mult});
      push(std::move(row), 0);
    }
  return p;
}

FracIsoPolytope build_polytope(const ColoredGraph& g, BlockMode mode) {
  return build_polytope(g, g, mode);
}

// Fraction-free tableau: every entry is an integer and the represented
// value is entry / d. Basic columns hold d in their row. Artificial
// variables are not stored; an artificial basic in row i is recorded as
// basis[i] = nv + i.
struct Tableau {
  std::vector<std::vector<mpz_class>> t;  // constraint rows, then the cost row
  std::vector<std::size_t> basis;
  mpz_class d = 1;
};

struct PolytopeSolver::Impl {
  std::size_t nv = 0;
  std::size_t width = 0;  // nv + 1, the last column is the right-hand side
  Tableau base;
  bool feasible = false;
  std::size_t pivots = 0;
  std::size_t n = 0;
  std::vector<std::pair<Vertex, Vertex>> vars;

  void pivot(Tableau& tab, std::size_t r, std::size_t col) {
    ++pivots;
    if ((pivots & 255u) == 0) Deadline::check();
    auto& prow = tab.t[r];
    if (sgn(prow[col]) < 0)
      for (auto& x : prow) x = -x;
    const mpz_class p = prow[col];
    mpz_class tmp;
    for (std::size_t i = 0; i < tab.t.size(); ++i) {
      if (i == r) continue;
      auto& row = tab.t[i];
      const mpz_class f = row[col];
      for (std::size_t j = 0; j < width; ++j) {
        mpz_mul(tmp.get_mpz_t(), row[j].get_mpz_t(), p.get_mpz_t());
        if (sgn(f) != 0) mpz_submul(tmp.get_mpz_t(), f.get_mpz_t(), prow[j].get_mpz_t());
        mpz_divexact(row[j].get_mpz_t(), tmp.get_mpz_t(), tab.d.get_mpz_t());
      }
    }
    tab.d = p;
    tab.basis[r] = col;
  }

  // Minimizes the cost row over variable columns. Returns false if
  // unbounded (cannot happen for these polytopes).
  bool optimize(Tableau& tab) {
    const std::size_t m = tab.basis.size();
    const std::size_t rhs = width - 1;
    const auto& cost = tab.t[m];
    // Dantzig's rule, falling back to Bland's rule during long degenerate
    // stretches so the method cannot cycle.
    std::size_t degenerate = 0;
    for (;;) {
      const bool bland = degenerate >= 50;
      std::size_t enter = nv;
      for (std::size_t j = 0; j < nv; ++j) {
        if (sgn(cost[j]) >= 0) continue;
        if (enter == nv || (!bland && cost[j] < cost[enter])) enter = j;
        if (bland) break;
      }
      if (enter == nv) return true;
      std::size_t leave = m;
      for (std::size_t i = 0; i < m; ++i) {
        if (sgn(tab.t[i][enter]) <= 0) continue;
        if (leave == m) {
          leave = i;
          continue;
        }
        // Compare rhs_i / a_i with rhs_leave / a_leave; denominators positive.
        const int c = cmp(tab.t[i][rhs] * tab.t[leave][enter], tab.t[leave][rhs] * tab.t[i][enter]);
        if (c < 0 || (c == 0 && tab.basis[i] < tab.basis[leave])) leave = i;
      }
      if (leave == m) return false;
      degenerate = sgn(tab.t[leave][rhs]) == 0 ? degenerate + 1 : 0;
      pivot(tab, leave, enter);
    }
  }

  std::vector<Rational> solution(const Tableau& tab) const {
    std::vector<Rational> x(nv);
    for (std::size_t i = 0; i < tab.basis.size(); ++i)
      if (tab.basis[i] < nv) {
        x[tab.basis[i]] = Rational(tab.t[i][width - 1], tab.d);
        x[tab.basis[i]].canonicalize();
      }
    return x;
  }

  RatMatrix matrix(const std::vector<Rational>& x) const {
    RatMatrix m(n, n);
    for (std::size_t k = 0; k < vars.size(); ++k) m.at(vars[k].first, vars[k].second) = x[k];
    return m;
  }
};

PolytopeSolver::PolytopeSolver(const FracIsoPolytope& p) : impl_(new Impl) {
  Impl& s = *impl_;
  s.n = p.n;
  s.vars = p.vars;
  s.nv = p.vars.size();
  if (!p.blocks_balanced) return;
  const std::size_t m = p.rows.size();
  for (std::size_t i = 0; i < m; ++i) {
    if (p.rows[i].empty() && p.rhs[i] != 0) return;  // 0 = rhs, infeasible
  }
  s.width = s.nv + 1;
  Tableau& tab = s.base;
  tab.t.assign(m + 1, std::vector<mpz_class>(s.width));
  tab.basis.resize(m);
  auto& cost = tab.t[m];
  for (std::size_t i = 0; i < m; ++i) {
    // Right-hand sides are non-negative by construction.
    for (auto [k, c] : p.rows[i]) tab.t[i][k] = c;
    tab.t[i][s.width - 1] = p.rhs[i];
    tab.basis[i] = s.nv + i;
    // Phase 1 reduced costs: minimize the sum of artificials.
    for (std::size_t j = 0; j < s.width; ++j) cost[j] -= tab.t[i][j];
  }
  s.optimize(tab);
  if (sgn(cost[s.width - 1]) != 0) return;

  // Drive artificials out of the basis; rows where that is impossible are
  // redundant and dropped.
  for (std::size_t i = 0; i < tab.basis.size();) {
    if (tab.basis[i] < s.nv) {
      ++i;
      continue;
    }
    std::size_t col = s.nv;
    for (std::size_t j = 0; j < s.nv; ++j)
      if (sgn(tab.t[i][j]) != 0) {
        col = j;
        break;
      }
    if (col < s.nv) {
      s.pivot(tab, i, col);
      ++i;
    } else {
      tab.t.erase(tab.t.begin() + static_cast<std::ptrdiff_t>(i));
      tab.basis.erase(tab.basis.begin() + static_cast<std::ptrdiff_t>(i));
    }
  }
  s.feasible = true;
}

PolytopeSolver::~PolytopeSolver() { delete impl_; }

bool PolytopeSolver::feasible() const { return impl_->feasible; }
std::size_t PolytopeSolver::pivots() const { return impl_->pivots; }

std::optional<RatMatrix> PolytopeSolver::any_vertex() const {
  if (!impl_->feasible) return std::nullopt;
  return impl_->matrix(impl_->solution(impl_->base));
}

std::optional<RatMatrix> PolytopeSolver::optimal_vertex(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> coef(-1000, 1000);
  std::vector<long> c(impl_->nv);
  for (long& x : c) x = coef(rng);
  return optimal_vertex(c);
}

std::optional<RatMatrix> PolytopeSolver::optimal_vertex(const std::vector<long>& objective) {
  Impl& s = *impl_;
  if (!s.feasible) return std::nullopt;
  if (objective.size() != s.nv) throw InvalidArgument("objective size mismatch");
  Tableau tab = s.base;
  const std::size_t m = tab.basis.size();
  auto& cost = tab.t[m];
  for (std::size_t j = 0; j < s.width; ++j) cost[j] = j < s.nv ? mpz_class(objective[j] * tab.d) : mpz_class(0);
  for (std::size_t i = 0; i < m; ++i) {
    const long cb = objective[tab.basis[i]];
    if (cb == 0) continue;
    for (std::size_t j = 0; j < s.width; ++j) cost[j] -= cb * tab.t[i][j];
  }
  s.optimize(tab);
  return s.matrix(s.solution(tab));
}

bool is_fractionally_isomorphic(const ColoredGraph& g, const ColoredGraph& h) {
  if (g.n() != h.n()) return false;
  PolytopeSolver solver(build_polytope(g, h, BlockMode::InitialColors));
  return solver.feasible();
}

std::optional<RatMatrix> extreme_point(const FracIsoPolytope& p, std::uint64_t objective_seed) {
  PolytopeSolver solver(p);
  return solver.optimal_vertex(objective_seed);
}

bool is_fractional_isomorphism(const ColoredGraph& g, const ColoredGraph& h, const RatMatrix& x) {
  const std::size_t n = g.n();
  if (h.n() != n || x.rows() != n || x.cols() != n || !x.is_doubly_stochastic()) return false;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = 0; v < n; ++v)
      if (x.at(u, v) != 0 && g.color(u) != h.color(v)) return false;
  return RatMatrix::adjacency(g) * x == x * RatMatrix::adjacency(h);
}

CompactProbeResult compact_probe(const ColoredGraph& g, std::size_t trials, std::uint64_t seed,
                                 bool keep_vertices) {
  CompactProbeResult result;
  PolytopeSolver solver(build_polytope(g));
  if (!solver.feasible()) throw std::logic_error("identity is not a fractional automorphism");
  for (std::size_t i = 0; i < trials; ++i) {
    auto x = solver.optimal_vertex(seed + i);
    ++result.trials_run;
    if (!is_fractional_isomorphism(g, g, *x)) {
      throw std::logic_error("simplex returned an infeasible point");
    }
    const bool integral = x->is_integral();
    if (keep_vertices) result.vertices.push_back(*x);
    if (!integral) {
      result.witness = std::move(*x);
      result.witness_seed = seed + i;
      break;
    }
  }
  return result;
}

namespace {

// Perfect matching inside the support of x (Kuhn's augmenting paths).
std::optional<std::vector<Vertex>> support_matching(const RatMatrix& x) {
  const std::size_t n = x.rows();
  std::vector<long> match_col(n, -1);
  std::vector<char> seen;
  auto augment = [&](auto&& self, std::size_t r) -> bool {
    for (std::size_t c = 0; c < n; ++c) {
      if (sgn(x.at(r, c)) <= 0 || seen[c]) continue;
      seen[c] = 1;
      if (match_col[c] < 0 || self(self, static_cast<std::size_t>(match_col[c]))) {
        match_col[c] = static_cast<long>(r);
        return true;
      }
    }
    return false;
  };
  for (std::size_t r = 0; r < n; ++r) {
    seen.assign(n, 0);
    if (!augment(augment, r)) return std::nullopt;
  }
  std::vector<Vertex> perm(n);
  for (std::size_t c = 0; c < n; ++c) perm[static_cast<std::size_t>(match_col[c])] = static_cast<Vertex>(c);
  return perm;
}

// Nonzero lambda with sum lambda_i (P_i, 1) = 0, if the terms are affinely
// dependent.
std::optional<std::vector<Rational>> affine_dependency(const std::vector<BirkhoffTerm>& terms,
                                                       std::size_t n) {
  const std::size_t k = terms.size();
  const std::size_t rows = n * n + 1;
  std::vector<std::vector<Rational>> a(rows, std::vector<Rational>(k));
  for (std::size_t j = 0; j < k; ++j) {
    for (std::size_t i = 0; i < n; ++i) a[i * n + terms[j].permutation[i]][j] = 1;
    a[n * n][j] = 1;
  }
  // Reduced row echelon form.
  std::vector<long> pivot_row_of(k, -1);
  std::size_t r = 0;
  for (std::size_t c = 0; c < k && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    const Rational piv = a[r][c];
    for (auto& q : a[r]) q /= piv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      const Rational f = a[i][c];
      for (std::size_t j = c; j < k; ++j) a[i][j] -= f * a[r][j];
    }
    pivot_row_of[c] = static_cast<long>(r);
    ++r;
  }
  for (std::size_t free = 0; free < k; ++free) {
    if (pivot_row_of[free] >= 0) continue;
    std::vector<Rational> lambda(k);
    lambda[free] = 1;
    for (std::size_t c = 0; c < k; ++c)
      if (pivot_row_of[c] >= 0) lambda[c] = -a[static_cast<std::size_t>(pivot_row_of[c])][free];
    return lambda;
  }
  return std::nullopt;
}

}  // namespace

std::vector<BirkhoffTerm> birkhoff_decompose(const RatMatrix& x) {
  if (!x.is_doubly_stochastic()) throw InvalidArgument("matrix is not doubly stochastic");
  const std::size_t n = x.rows();
  std::vector<BirkhoffTerm> terms;
  if (n == 0) return terms;
  RatMatrix rest = x;
  Rational remaining = 1;
  while (sgn(remaining) > 0) {
    auto perm = support_matching(rest);
    if (!perm) throw std::logic_error("support has no perfect matching");
    Rational c = rest.at(0, (*perm)[0]);
    for (std::size_t i = 1; i < n; ++i) c = std::min(c, Rational(rest.at(i, (*perm)[i])));
    for (std::size_t i = 0; i < n; ++i) rest.at(i, (*perm)[i]) -= c;
    remaining -= c;
    terms.push_back({c, std::move(*perm)});
  }
  const std::size_t bound = (n - 1) * (n - 1) + 1;
  while (terms.size() > bound) {
    auto lambda = affine_dependency(terms, n);
    if (!lambda) break;
    // Shift along lambda until a coefficient hits zero.
    std::optional<Rational> step;
    for (std::size_t i = 0; i < terms.size(); ++i) {
      if (sgn((*lambda)[i]) <= 0) continue;
      Rational r = terms[i].coefficient / (*lambda)[i];
      if (!step || r < *step) step = r;
    }
    for (std::size_t i = 0; i < terms.size(); ++i) terms[i].coefficient -= *step * (*lambda)[i];
    std::erase_if(terms, [](const BirkhoffTerm& t) { return sgn(t.coefficient) == 0; });
  }
  return terms;
}

}  // namespace crkit
