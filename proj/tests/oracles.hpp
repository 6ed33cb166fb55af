#pragma once
// Independent reference computations used only by the tests.

#include "smt/cox.hpp"
#include "smt/straightening.hpp"
#include "smt/typea.hpp"

#include <algorithm>
#include <optional>
#include <random>
#include <stdexcept>
#include <vector>

namespace oracle {

using smt::Rational;
using smt::Row;

inline std::vector<std::vector<int>> subsets(const std::vector<int>& v, std::size_t k) {
  std::vector<std::vector<int>> out;
  const std::size_t n = v.size();
  if (k > n) return out;
  std::vector<bool> pick(n, false);
  std::fill(pick.begin(), pick.begin() + k, true);
  do {
    std::vector<int> s;
    for (std::size_t i = 0; i < n; ++i)
      if (pick[i]) s.push_back(v[i]);
    out.push_back(s);
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return out;
}

// Brute force swap: min/max over every candidate subrow and superrow.
inline std::pair<Row, Row> swap(const Row& r, const Row& s) {
  const int ell = r.ell;
  const std::size_t k = r.size(), h = s.size();
  if (k == h) return {r, s};
  std::vector<int> all;
  for (int v = 1; v <= ell + 1; ++v) all.push_back(v);
  auto supersets = [&](const Row& base, std::size_t n) {
    std::vector<Row> out;
    for (auto& c : subsets(all, n))
      if (std::includes(c.begin(), c.end(), base.entries.begin(), base.entries.end())) out.push_back(Row{c, ell});
    return out;
  };
  auto subrows = [&](const Row& base, std::size_t n) {
    std::vector<Row> out;
    for (auto& c : subsets(base.entries, n)) out.push_back(Row{c, ell});
    return out;
  };
  auto unique_extreme = [](const std::vector<Row>& c, bool want_min) {
    std::vector<Row> ext;
    for (const auto& x : c) {
      bool ok = true;
      for (const auto& y : c) ok = ok && (want_min ? smt::row_leq(x, y) : smt::row_leq(y, x));
      if (ok) ext.push_back(x);
    }
    if (ext.size() != 1) throw std::logic_error("no unique extreme");
    return ext.front();
  };
  std::vector<Row> a, b;
  if (k < h) {
    for (auto& c : subrows(s, k))
      if (smt::row_leq(r, c)) b.push_back(c);
    for (auto& c : supersets(r, h))
      if (smt::row_leq(c, s)) a.push_back(c);
    return {unique_extreme(a, false), unique_extreme(b, true)};
  }
  for (auto& c : subrows(r, h))
    if (smt::row_leq(c, s)) a.push_back(c);
  for (auto& c : supersets(s, k))
    if (smt::row_leq(r, c)) b.push_back(c);
  return {unique_extreme(a, false), unique_extreme(b, true)};
}

// Hook-content formula for the number of SSYT of shape lambda with entries <= n.
inline smt::Integer hook_content(const std::vector<unsigned>& lambda, int n) {
  std::vector<unsigned> conj;
  for (std::size_t r = 0; r < lambda.size(); ++r)
    for (unsigned c = 0; c < lambda[r]; ++c) {
      if (conj.size() <= c) conj.resize(c + 1, 0);
      ++conj[c];
    }
  Rational d(1);
  for (std::size_t r = 0; r < lambda.size(); ++r)
    for (unsigned c = 0; c < lambda[r]; ++c) {
      const long content = static_cast<long>(c) - static_cast<long>(r);
      const long hook = (lambda[r] - c - 1) + (conj[c] - r - 1) + 1;
      d *= smt::ratio(n + content, hook);
    }
  return d.get_num();
}

// Sum over F in N^3 with E - F in the spherical monoid of (f1+f2+1)(f2+f3+1).
inline long brion(const smt::PicardDegree& E, bool allow1 = true, bool allow2 = true) {
  long total = 0;
  const long M = 12;
  for (long f1 = 0; f1 <= M; ++f1)
    for (long f2 = 0; f2 <= M; ++f2)
      for (long f3 = 0; f3 <= M; ++f3) {
        const long d1 = E.e[0] - f1, d2 = E.e[1] - f2, d3 = E.e[2] - f3;
        if (d1 != -d3 || (d2 + d1) % 2 != 0) continue;
        const long a = (d2 + d1) / 2, b = (d2 - d1) / 2;
        if (a < 0 || b < 0 || (a > 0 && !allow1) || (b > 0 && !allow2)) continue;
        total += (f1 + f2 + 1) * (f2 + f3 + 1);
      }
  return total;
}

// Evaluates lhs - rhs of a Cox rule at a random point of a concrete model:
// [i.] = x_i, [.j] = y_j, [ij] = A_ij with A = t x y^T + s1 p y^T + s2 x q^T,
// where (x2, -x1) . p = 1 and q . (-y2, y1) = 1.
inline bool cox_model_vanishes(const smt::StraighteningRule& rule, const smt::CoxDatum& d, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> dist(1, 9);
  const Rational x[2] = {dist(rng), dist(rng)}, y[2] = {dist(rng), dist(rng)};
  const Rational s[2] = {dist(rng), dist(rng)}, t = dist(rng);
  const Rational p[2] = {1 / x[1], 0}, q[2] = {0, 1 / y[0]};
  Rational a[2][2];
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) a[i][j] = t * x[i] * y[j] + s[0] * p[i] * y[j] + s[1] * x[i] * q[j];
  auto value = [&](const smt::Monomial& m) {
    Rational v = 1;
    for (const auto& g : m.factors()) {
      if (g.shape.index == 0) {
        v *= s[g.id];
        continue;
      }
      const auto b = d.box(g);
      const int l = static_cast<int>(b.left), r = static_cast<int>(b.right);
      if (l && r) v *= a[l - 1][r - 1];
      else if (l) v *= x[l - 1];
      else v *= y[r - 1];
    }
    return v;
  };
  Rational residual = value(rule.lhs);
  for (const auto& [m, c] : rule.rhs) residual -= c * value(m);
  return residual == 0;
}

// Coefficients of a tableau in the basis of standard tableaux of its
// multidegree, found by solving the evaluation system. Returns nothing if the
// system is inconsistent.
inline std::optional<smt::TableauPolynomial> solve_expansion(const std::vector<Row>& t,
                                                             const std::vector<std::vector<Row>>& basis,
                                                             std::uint64_t seed) {
  const std::size_t n = basis.size(), m = n + 8;
  const auto points = smt::random_matrices(t.front().ell + 1, m, seed);
  auto a = smt::evaluation_matrix_serial(basis, points);
  for (std::size_t i = 0; i < m; ++i) a[i].push_back(smt::evaluate({{t, Rational(1)}}, points[i]));
  // Gauss-Jordan on the augmented system
  std::size_t r = 0;
  std::vector<std::size_t> pivots;
  for (std::size_t c = 0; c < n && r < m; ++c) {
    std::size_t p = r;
    while (p < m && a[p][c] == 0) ++p;
    if (p == m) continue;
    std::swap(a[p], a[r]);
    for (std::size_t j = c + 1; j <= n; ++j) a[r][j] /= a[r][c];
    a[r][c] = 1;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == r || a[i][c] == 0) continue;
      Rational f = a[i][c];
      for (std::size_t j = c; j <= n; ++j) a[i][j] -= f * a[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < m; ++i)
    if (a[i][n] != 0) return std::nullopt;
  if (pivots.size() != n) return std::nullopt;
  smt::TableauPolynomial out;
  for (std::size_t i = 0; i < r; ++i) smt::add_term(out, basis[pivots[i]], a[i][n]);
  return out;
}

}  // namespace oracle
