#include "smt/straightening.hpp"

#include <omp.h>

#include <algorithm>

namespace smt {

namespace {

int inversion_sign(const std::vector<int>& v) {
  int s = 1;
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j)
      if (v[i] > v[j]) s = -s;
  return s;
}

// Index selections of size t from n, lexicographic.
std::vector<std::vector<int>> selections(int n, int t) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int next) {
    if (static_cast<int>(cur.size()) == t) {
      out.push_back(cur);
      return;
    }
    for (int i = next; i <= n - (t - static_cast<int>(cur.size())); ++i) {
      cur.push_back(i);
      rec(i + 1);
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}

std::vector<int> rest_of(const std::vector<int>& chosen, int n) {
  std::vector<int> out;
  for (int i = 0; i < n; ++i)
    if (!std::binary_search(chosen.begin(), chosen.end(), i)) out.push_back(i);
  return out;
}

}  // namespace

SignedRow normalize_bracket(const std::vector<int>& bracket, int ell) {
  for (int v : bracket)
    if (v < 1 || v > ell + 1) throw PreconditionViolation("bracket entry out of range");
  std::vector<int> sorted = bracket;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return {};
  return {inversion_sign(bracket), Row{sorted, ell}};
}

void add_term(TableauPolynomial& p, const std::vector<Row>& rows, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = p.try_emplace(rows, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) p.erase(it);
  }
}

std::optional<std::size_t> index_of_violation(const Row& r, const Row& s) {
  const std::size_t k = r.size(), h = s.size();
  if (k >= h) {
    for (std::size_t m = 0; m < h; ++m)
      if (r.entries[m] > s.entries[m]) return m + 1;
    return std::nullopt;
  }
  for (std::size_t t = 1; t <= k; ++t)
    if (r.entries[k - t] > s.entries[h - t]) return t;
  return std::nullopt;
}

TableauPolynomial shuffling_relation(const Row& r, const Row& s) {
  auto viol = index_of_violation(r, s);
  if (!viol) throw PreconditionViolation("shuffling relation needs a non-standard pair");
  const int t = static_cast<int>(*viol);
  const int k = static_cast<int>(r.size()), h = static_cast<int>(s.size());
  const int ell = r.ell;
  const auto& R = r.entries;
  const auto& S = s.entries;
  std::vector<int> pre, u, tail;
  if (k >= h) {
    pre.assign(R.begin(), R.begin() + (t - 1));
    u.assign(S.begin(), S.begin() + t);
    u.insert(u.end(), R.begin() + (t - 1), R.end());
    tail.assign(S.begin() + t, S.end());
  } else {
    pre.assign(R.begin(), R.begin() + (k - t));
    u.assign(R.begin() + (k - t), R.end());
    u.insert(u.end(), S.begin(), S.begin() + (h - t + 1));
    tail.assign(S.begin() + (h - t + 1), S.end());
  }
  const int n = static_cast<int>(u.size());
  TableauPolynomial out;
  // The second bracket takes |B| = t of the u's when k >= h; the first takes
  // |A| = t of them when k < h.
  for (const auto& pick : selections(n, t)) {
    const auto other = rest_of(pick, n);
    const auto& A = k >= h ? other : pick;
    const auto& B = k >= h ? pick : other;
    std::vector<int> perm = k >= h ? B : A;
    perm.insert(perm.end(), (k >= h ? A : B).begin(), (k >= h ? A : B).end());
    std::vector<int> first = pre, second;
    for (int i : A) first.push_back(u[i]);
    for (int i : B) second.push_back(u[i]);
    second.insert(second.end(), tail.begin(), tail.end());
    SignedRow a = normalize_bracket(first, ell), b = normalize_bracket(second, ell);
    if (!a.sign || !b.sign) continue;
    add_term(out, {*a.row, *b.row}, Rational(inversion_sign(perm) * a.sign * b.sign));
  }
  return out;
}

TableauPolynomial straighten_pair(const Row& r, const Row& s) {
  TableauPolynomial poly{{{r, s}, Rational(1)}};
  for (std::size_t steps = 0;; ++steps) {
    if (steps > 100000) throw CapExceeded("straighten_pair did not terminate");
    std::optional<std::pair<std::size_t, std::vector<Row>>> worst;
    for (const auto& [key, c] : poly) {
      auto v = index_of_violation(key[0], key[1]);
      if (v && (!worst || *v < worst->first)) worst = std::pair{*v, key};
    }
    if (!worst) return poly;
    const auto key = worst->second;
    const Rational c = poly.at(key);
    poly.erase(key);
    for (const auto& [kk, v] : shuffling_relation(key[0], key[1]))
      if (kk != key) add_term(poly, kk, -c * v);
  }
}

TableauPolynomial to_tableau_polynomial(const LinearCombination& lc, const RowDatum& d) {
  TableauPolynomial out;
  for (const auto& [m, c] : lc) add_term(out, d.rows_of(m), c);
  return out;
}

LinearCombination Straightener::lift(const std::vector<Row>& rest, const TableauPolynomial& p, const Rational& c) {
  LinearCombination out;
  for (const auto& [rows, v] : p) {
    std::vector<Row> all = rest;
    all.insert(all.end(), rows.begin(), rows.end());
    add_term(out, d_.monomial(all), c * v);
  }
  return out;
}

const LinearCombination* Straightener::rule_for(const Monomial& lhs) {
  auto it = rules_.find(lhs);
  if (it != rules_.end()) return &it->second;
  LinearCombination rhs;
  if (lhs.degree() == 2) {
    auto rows = d_.rows_of(lhs);
    rhs = lift({}, straighten_pair(rows[0], rows[1]), Rational(1));
  } else {
    rhs = derive(lhs);
  }
  validate_rule({lhs, rhs}, oracle_);
  return &rules_.emplace(lhs, std::move(rhs)).first->second;
}

LinearCombination Straightener::derive(const Monomial& lhs) {
  std::string reasons;
  for (const auto& [path, positions] : swap_witnesses(lhs.formal(), d_)) {
    try {
      return derive_along(lhs, path, positions);
    } catch (const Error& e) {
      reasons += std::string(reasons.empty() ? "" : "; ") + e.what();
    }
  }
  throw Error("no straightening rule derivable for " + to_string(lhs, d_) + ": " + reasons);
}

// Walk the witness path F_0 -> F_1 -> ... Each step replaces the pair (R,S)
// by its swap (R⁰,S⁰); straightening [S⁰][R⁰] in the original shape order
// expresses [R][S] through the next monomial plus side terms. The last
// monomial has a non-comparable adjacent pair which is straightened directly.
LinearCombination Straightener::derive_along(const Monomial& lhs, const std::vector<FormalMonomial>& path,
                                             const std::vector<std::size_t>& positions) {
  struct Pending {
    std::set<Monomial>& set;
    Monomial m;
    Pending(std::set<Monomial>& s, Monomial x) : set(s), m(std::move(x)) { set.insert(m); }
    ~Pending() { set.erase(m); }
  } guard(pending_, lhs);

  LinearCombination expr;
  Rational alpha(1);
  for (std::size_t step = 0; step < positions.size(); ++step) {
    const auto f = d_.rows_of(path[step]);
    const auto g = d_.rows_of(path[step + 1]);
    const std::size_t i = positions[step];
    const Row &r = f[i], &s = f[i + 1], &r0 = g[i], &s0 = g[i + 1];
    TableauPolynomial sp = row_leq(s0, r0) ? TableauPolynomial{{{s0, r0}, Rational(1)}} : straighten_pair(s0, r0);
    auto lead = sp.find({r, s});
    if (lead == sp.end()) throw Error("witness step has no leading coefficient");
    const Rational c = lead->second;
    sp.erase(lead);
    std::vector<Row> rest = f;
    rest.erase(rest.begin() + i, rest.begin() + i + 2);
    for (const auto& [m, v] : lift(rest, sp, -alpha / c)) add_term(expr, m, v);
    alpha /= c;
  }
  const auto last = d_.rows_of(path.back());
  std::size_t q = 0;
  while (row_leq(last[q], last[q + 1])) ++q;
  std::vector<Row> rest = last;
  rest.erase(rest.begin() + q, rest.begin() + q + 2);
  for (const auto& [m, v] : lift(rest, straighten_pair(last[q], last[q + 1]), alpha)) add_term(expr, m, v);

  NormalFormOptions opt;
  opt.substitution_cap = substitution_cap;
  opt.frozen = &pending_;
  LinearCombination res = normal_form(expr, *this, oracle_, opt);
  Rational lambda(0);
  if (auto it = res.find(lhs); it != res.end()) {
    lambda = it->second;
    res.erase(it);
  }
  if (lambda == 1) throw Error("witness path is degenerate");
  LinearCombination out = scaled(res, 1 / (1 - lambda));
  for (const auto& [m, v] : out)
    if (!oracle_.standard(m)) throw Error("unresolved term " + to_string(m, d_));
  return out;
}

LinearCombination Straightener::straighten(const Monomial& m) {
  NormalFormOptions opt;
  opt.substitution_cap = substitution_cap;
  return normal_form(LinearCombination{{m, Rational(1)}}, *this, oracle_, opt);
}

TableauPolynomial Straightener::straighten(const std::vector<Row>& rows) {
  return to_tableau_polynomial(straighten(d_.monomial(rows)), d_);
}

std::vector<StraighteningRule> Straightener::generated_rules() const {
  std::vector<StraighteningRule> out;
  for (const auto& [l, r] : rules_) out.push_back({l, r});
  return out;
}

TableauPolynomial straighten_tableau(const Tableau& t) {
  if (!t.is_adapted()) throw PreconditionViolation("tableau shape is not adapted to its reference");
  if (t.rows.empty()) return {{{}, Rational(1)}};
  RowDatum d(t.rows.front().ell, t.reference);
  Straightener st(d);
  return st.straighten(t.rows);
}

Rational determinant(RationalMatrix a) {
  const std::size_t n = a.size();
  Rational det(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) return Rational(0);
    if (p != c) {
      std::swap(a[p], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      if (a[r][c] == 0) continue;
      Rational f = a[r][c] / a[c][c];
      for (std::size_t j = c; j < n; ++j) a[r][j] -= f * a[c][j];
    }
  }
  return det;
}

std::size_t rank(RationalMatrix a) {
  std::size_t rk = 0;
  const std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  for (std::size_t c = 0; c < cols && rk < rows; ++c) {
    std::size_t p = rk;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[rk]);
    for (std::size_t r = rk + 1; r < rows; ++r) {
      if (a[r][c] == 0) continue;
      Rational f = a[r][c] / a[rk][c];
      for (std::size_t j = c; j < cols; ++j) a[r][j] -= f * a[rk][j];
    }
    ++rk;
  }
  return rk;
}

Rational plucker_evaluate(const Row& r, const RationalMatrix& m) {
  if (m.size() != static_cast<std::size_t>(r.ell + 1)) throw PreconditionViolation("matrix size must be ell+1");
  const std::size_t k = r.size();
  RationalMatrix sub(k, std::vector<Rational>(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) sub[i][j] = m[r.entries[i] - 1][j];
  return determinant(std::move(sub));
}

Rational evaluate(const TableauPolynomial& p, const RationalMatrix& m) {
  std::map<Row, Rational> minors;
  Rational total(0);
  for (const auto& [rows, c] : p) {
    Rational term = c;
    for (const auto& r : rows) {
      auto it = minors.find(r);
      if (it == minors.end()) it = minors.emplace(r, plucker_evaluate(r, m)).first;
      term *= it->second;
    }
    total += term;
  }
  return total;
}

RationalMatrix random_matrix(std::size_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> dist(-9, 9);
  RationalMatrix m(n, std::vector<Rational>(n));
  for (auto& row : m)
    for (auto& x : row) x = dist(rng);
  return m;
}

std::vector<RationalMatrix> random_matrices(std::size_t n, std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<RationalMatrix> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(random_matrix(n, rng));
  return out;
}

bool verify_polynomial_identity(const TableauPolynomial& p, std::size_t trials, std::uint64_t seed) {
  if (trials == 0) throw PreconditionViolation("trials must be positive");
  int ell = 0;
  for (const auto& [rows, c] : p)
    for (const auto& r : rows) ell = r.ell;
  if (ell == 0) {
    // only constant terms
    Rational total(0);
    for (const auto& [rows, c] : p) total += c;
    return total == 0;
  }
  for (const auto& m : random_matrices(ell + 1, trials, seed))
    if (evaluate(p, m) != 0) return false;
  return true;
}

RationalMatrix evaluation_matrix_serial(const std::vector<std::vector<Row>>& tableaux,
                                        const std::vector<RationalMatrix>& points) {
  RationalMatrix out(points.size(), std::vector<Rational>(tableaux.size()));
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = 0; j < tableaux.size(); ++j)
      out[i][j] = evaluate(TableauPolynomial{{tableaux[j], Rational(1)}}, points[i]);
  return out;
}

RationalMatrix evaluation_matrix(const std::vector<std::vector<Row>>& tableaux,
                                 const std::vector<RationalMatrix>& points) {
  RationalMatrix out(points.size(), std::vector<Rational>(tableaux.size()));
  const long n = static_cast<long>(points.size());
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < n; ++i) {
    std::map<Row, Rational> minors;
    for (std::size_t j = 0; j < tableaux.size(); ++j) {
      Rational v(1);
      for (const auto& r : tableaux[j]) {
        auto it = minors.find(r);
        if (it == minors.end()) it = minors.emplace(r, plucker_evaluate(r, points[i])).first;
        v *= it->second;
      }
      out[i][j] = v;
    }
  }
  return out;
}

}  // namespace smt
