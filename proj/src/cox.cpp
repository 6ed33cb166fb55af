#include "smt/cox.hpp"

#include <omp.h>

#include <algorithm>
#include <map>
#include <random>

namespace smt {

int BoxRow::shape() const {
  if (left != Box::Empty && right == Box::Empty) return 1;
  if (left != Box::Empty && right != Box::Empty) return 2;
  if (left == Box::Empty && right != Box::Empty) return 3;
  throw PreconditionViolation("the row with two empty boxes is not allowed");
}

BoxRow make_box_row(int left, int right) {
  if (left < 0 || left > 2 || right < 0 || right > 2) throw PreconditionViolation("box entries must be 0, 1 or 2");
  BoxRow r{static_cast<Box>(left), static_cast<Box>(right)};
  r.shape();
  return r;
}

std::string to_string(const BoxRow& r) {
  auto c = [](Box b) { return b == Box::Empty ? std::string(".") : std::to_string(static_cast<int>(b)); };
  return c(r.left) + c(r.right);
}

std::vector<BoxRow> box_rows(int shape) {
  switch (shape) {
    case 1:
      return {{Box::One, Box::Empty}, {Box::Two, Box::Empty}};
    case 2:
      return {{Box::One, Box::One}, {Box::One, Box::Two}, {Box::Two, Box::One}, {Box::Two, Box::Two}};
    case 3:
      return {{Box::Empty, Box::One}, {Box::Empty, Box::Two}};
    default:
      throw PreconditionViolation("box shapes are 1, 2 and 3");
  }
}

bool box_leq(Box a, Box b) {
  if (a == Box::Empty || b == Box::Empty) return true;
  return !(a == Box::Two && b == Box::One);
}

bool box_row_leq(const BoxRow& r, const BoxRow& s) { return box_leq(r.left, s.left) && box_leq(r.right, s.right); }

std::pair<BoxRow, BoxRow> box_swap(const BoxRow& r, const BoxRow& s) {
  if (!box_row_leq(r, s)) throw PreconditionViolation("box_swap requires r ⟵ s");
  BoxRow a = r, b = s;
  auto column = [](Box& top, Box& bottom) {
    if ((top == Box::Empty) != (bottom == Box::Empty)) std::swap(top, bottom);
  };
  column(a.left, b.left);
  column(a.right, b.right);
  return {a, b};
}

bool box_tableau_standard_closed_form(const std::vector<BoxRow>& rows) {
  Box left = Box::Empty, right = Box::Empty;
  for (const auto& r : rows) {
    if (r.left != Box::Empty) {
      if (left != Box::Empty && r.left < left) return false;
      left = r.left;
    }
    if (r.right != Box::Empty) {
      if (right != Box::Empty && r.right < right) return false;
      right = r.right;
    }
  }
  return true;
}

BoxDatum::BoxDatum(std::vector<int> shapes) : shapes_(std::move(shapes)) {
  if (shapes_.empty()) throw PreconditionViolation("box datum needs at least one shape");
  std::vector<int> sorted = shapes_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw PreconditionViolation("box shapes must be distinct");
  for (int s : shapes_) box_rows(s);
}

bool BoxDatum::related(Generator a, Generator b) const { return box_row_leq(box(a), box(b)); }

std::pair<Generator, Generator> BoxDatum::swap(Generator a, Generator b) const {
  auto [x, y] = box_swap(box(a), box(b));
  return {generator(x), generator(y)};
}

std::string BoxDatum::label(Generator g) const { return contains(g) ? to_string(box(g)) : Datum::label(g); }

Generator BoxDatum::generator(const BoxRow& r) const {
  const int sh = r.shape();
  auto it = std::find(shapes_.begin(), shapes_.end(), sh);
  if (it == shapes_.end()) throw DatumMismatch("box row " + to_string(r) + " has a shape outside the datum");
  const auto rows = box_rows(sh);
  const auto id = std::find(rows.begin(), rows.end(), r) - rows.begin();
  return Generator{ShapeLabel{static_cast<std::uint32_t>(it - shapes_.begin())}, static_cast<std::uint32_t>(id)};
}

BoxRow BoxDatum::box(Generator g) const { return box_rows(shapes_.at(g.shape.index)).at(g.id); }

Monomial BoxDatum::monomial(const std::vector<BoxRow>& rows) const {
  std::vector<Generator> f;
  for (const auto& r : rows) f.push_back(generator(r));
  return Monomial(std::move(f));
}

std::vector<BoxRow> BoxDatum::rows_of(const Monomial& m) const {
  std::vector<BoxRow> out;
  for (const auto& g : m.factors()) out.push_back(box(g));
  return out;
}

PicardDegree picard_of(const SphericalDegree& g) {
  const std::int64_t a = g.a[0], b = g.a[1];
  return PicardDegree{{a - b, a + b, b - a}};
}

std::size_t CoxDatum::generator_count(ShapeLabel s) const {
  if (s.index == 0) return 2;
  return box_rows(static_cast<int>(s.index)).size();
}

bool CoxDatum::related(Generator a, Generator b) const {
  if (a.shape.index == 0 && b.shape.index == 0) return a.id <= b.id;
  if (a.shape.index == 0 || b.shape.index == 0) return true;
  return box_row_leq(box(a), box(b));
}

std::pair<Generator, Generator> CoxDatum::swap(Generator a, Generator b) const {
  if (a.shape == b.shape) return {a, b};
  if (a.shape.index == 0 || b.shape.index == 0) return {b, a};
  auto [x, y] = box_swap(box(a), box(b));
  return {generator(x), generator(y)};
}

std::string CoxDatum::label(Generator g) const {
  if (!contains(g)) return Datum::label(g);
  if (g.shape.index == 0) return "s" + std::to_string(g.id + 1);
  return to_string(box(g));
}

std::vector<std::int64_t> CoxDatum::grading(const Monomial& m) const {
  const auto w = weight(m);
  return {w.e[0], w.e[1], w.e[2]};
}

bool CoxDatum::monomial_leq(const Monomial& m, const Monomial& n) const {
  if (grading(m) != grading(n)) return false;
  const auto gm = vanishing(m), gn = vanishing(n);
  if (gm != gn) return gm.a[0] <= gn.a[0] && gm.a[1] <= gn.a[1];
  return lex_refinement_leq(m, n);
}

std::optional<bool> CoxDatum::fast_standard(const FormalMonomial& m) const {
  std::vector<BoxRow> rows;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (i + 1 < m.size() && m[i + 1].shape < m[i].shape) return false;
    if (i + 1 < m.size() && m[i].shape.index == 0 && m[i + 1].shape.index == 0 && m[i].id > m[i + 1].id)
      return false;
    if (m[i].shape.index != 0) rows.push_back(box(m[i]));
  }
  return box_tableau_standard_closed_form(rows);
}

Generator CoxDatum::generator(const BoxRow& r) const {
  const auto rows = box_rows(r.shape());
  const auto id = std::find(rows.begin(), rows.end(), r) - rows.begin();
  return Generator{ShapeLabel{static_cast<std::uint32_t>(r.shape())}, static_cast<std::uint32_t>(id)};
}

BoxRow CoxDatum::box(Generator g) const {
  if (g.shape.index == 0) throw PreconditionViolation("s-variables are not box rows");
  return box_rows(static_cast<int>(g.shape.index)).at(g.id);
}

Monomial CoxDatum::monomial(const SphericalDegree& gamma, const std::vector<BoxRow>& rows) const {
  std::vector<Generator> f;
  f.insert(f.end(), gamma.a[0], s(1));
  f.insert(f.end(), gamma.a[1], s(2));
  for (const auto& r : rows) f.push_back(generator(r));
  return Monomial(std::move(f));
}

SphericalDegree CoxDatum::vanishing(const Monomial& m) const {
  SphericalDegree g;
  for (const auto& x : m.factors())
    if (x.shape.index == 0) ++g.a[x.id];
  return g;
}

std::vector<BoxRow> CoxDatum::box_part(const Monomial& m) const {
  std::vector<BoxRow> out;
  for (const auto& x : m.factors())
    if (x.shape.index != 0) out.push_back(box(x));
  return out;
}

PicardDegree CoxDatum::weight(const Monomial& m) const {
  PicardDegree w = picard_of(vanishing(m));
  for (const auto& x : m.factors())
    if (x.shape.index != 0) ++w.e[x.shape.index - 1];
  return w;
}

std::vector<Monomial> CoxDatum::monomials_of_weight(const PicardDegree& E) const {
  std::vector<Monomial> out;
  const std::int64_t cap = std::max<std::int64_t>(E.e[1], 0);
  for (std::int64_t a = 0; a <= cap; ++a)
    for (std::int64_t b = 0; a + b <= cap; ++b) {
      SphericalDegree gamma{{static_cast<unsigned>(a), static_cast<unsigned>(b)}};
      const auto img = picard_of(gamma);
      std::array<std::int64_t, 3> f{};
      bool ok = true;
      for (int i = 0; i < 3; ++i) {
        f[i] = E.e[i] - img.e[i];
        ok = ok && f[i] >= 0;
      }
      if (!ok) continue;
      std::vector<Monomial> partial{monomial(gamma, {})};
      for (int sh = 1; sh <= 3; ++sh) {
        std::vector<Generator> pool;
        for (const auto& r : box_rows(sh)) pool.push_back(generator(r));
        std::vector<Monomial> next;
        for_each_multiset(pool, static_cast<std::size_t>(f[sh - 1]), [&](const Monomial& m) {
          for (const auto& p : partial) next.push_back(p * m);
        });
        partial = std::move(next);
      }
      out.insert(out.end(), partial.begin(), partial.end());
    }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

BoxRow br(int l, int r) { return make_box_row(l, r); }

// Shared shape of the relation families; `with_s` adds the boundary terms.
template <class MakeBox, class MakeS>
std::vector<StraighteningRule> families(MakeBox mono, MakeS with_s) {
  std::vector<StraighteningRule> out;
  for (int i = 1; i <= 2; ++i) {
    StraighteningRule r{mono({br(2, 0), br(1, i)}, SphericalDegree{}), {}};
    r.rhs.emplace(mono({br(1, 0), br(2, i)}, SphericalDegree{}), Rational(1));
    with_s(r, {br(0, i)}, SphericalDegree{{1, 0}}, Rational(1));
    out.push_back(std::move(r));
  }
  {
    StraighteningRule r{mono({br(2, 1), br(1, 2)}, SphericalDegree{}), {}};
    r.rhs.emplace(mono({br(1, 1), br(2, 2)}, SphericalDegree{}), Rational(1));
    // the s1 s2 term enters with a minus sign; with a plus sign the families
    // above and below do not rewrite {[12],[21],[.j]} consistently
    with_s(r, {}, SphericalDegree{{1, 1}}, Rational(-1));
    out.push_back(std::move(r));
  }
  for (int i = 1; i <= 2; ++i) {
    StraighteningRule r{mono({br(i, 2), br(0, 1)}, SphericalDegree{}), {}};
    r.rhs.emplace(mono({br(i, 1), br(0, 2)}, SphericalDegree{}), Rational(1));
    with_s(r, {br(i, 0)}, SphericalDegree{{0, 1}}, Rational(1));
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace

std::vector<StraighteningRule> coxy_relations(const BoxDatum& d) {
  return families([&](const std::vector<BoxRow>& rows, const SphericalDegree&) { return d.monomial(rows); },
                  [](StraighteningRule&, const std::vector<BoxRow>&, const SphericalDegree&, const Rational&) {});
}

std::vector<StraighteningRule> cox_relations(const CoxDatum& d) {
  return families(
      [&](const std::vector<BoxRow>& rows, const SphericalDegree& g) { return d.monomial(g, rows); },
      [&](StraighteningRule& r, const std::vector<BoxRow>& rows, const SphericalDegree& g, const Rational& c) {
        r.rhs.emplace(d.monomial(g, rows), c);
      });
}

std::vector<StraighteningRule> lift_to_cox(const std::vector<StraighteningRule>& rules, const BoxDatum& from,
                                           const CoxDatum& to) {
  auto lift = [&](const Monomial& m) { return to.monomial(SphericalDegree{}, from.rows_of(m)); };
  std::vector<StraighteningRule> out;
  for (const auto& r : rules) {
    StraighteningRule x{lift(r.lhs), {}};
    for (const auto& [m, c] : r.rhs) x.rhs.emplace(lift(m), c);
    out.push_back(std::move(x));
  }
  return out;
}

Rational evaluate_box(const LinearCombination& p, const BoxDatum& d, const std::array<Rational, 2>& x,
                      const std::array<Rational, 2>& y) {
  Rational total(0);
  for (const auto& [m, c] : p) {
    Rational term = c;
    for (const auto& r : d.rows_of(m)) {
      if (r.left != Box::Empty) term *= x[static_cast<int>(r.left) - 1];
      if (r.right != Box::Empty) term *= y[static_cast<int>(r.right) - 1];
    }
    total += term;
  }
  return total;
}

bool coxy_evaluation_check(const std::vector<StraighteningRule>& rules, const BoxDatum& d, std::size_t trials,
                           std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> dist(-9, 9);
  for (std::size_t t = 0; t < trials; ++t) {
    std::array<Rational, 2> x{Rational(dist(rng)), Rational(dist(rng))};
    std::array<Rational, 2> y{Rational(dist(rng)), Rational(dist(rng))};
    for (const auto& r : rules) {
      LinearCombination diff = r.rhs;
      add_term(diff, r.lhs, Rational(-1));
      if (evaluate_box(diff, d, x, y) != 0) return false;
    }
  }
  return true;
}

namespace {

std::size_t count_standard(const PicardDegree& E, const std::function<bool(const SphericalDegree&)>& keep) {
  CoxDatum d;
  StandardOracle oracle(d);
  std::size_t n = 0;
  for (const auto& m : d.monomials_of_weight(E))
    if (keep(d.vanishing(m)) && oracle.standard(m)) ++n;
  return n;
}

Integer brion_sum(const PicardDegree& E, const std::function<bool(const SphericalDegree&)>& keep) {
  Integer total = 0;
  const std::int64_t cap = std::max<std::int64_t>(E.e[1], 0);
  for (std::int64_t a = 0; a <= cap; ++a)
    for (std::int64_t b = 0; a + b <= cap; ++b) {
      SphericalDegree g{{static_cast<unsigned>(a), static_cast<unsigned>(b)}};
      if (!keep(g)) continue;
      const auto img = picard_of(g);
      const std::int64_t f1 = E.e[0] - img.e[0], f2 = E.e[1] - img.e[1], f3 = E.e[2] - img.e[2];
      if (f1 < 0 || f2 < 0 || f3 < 0) continue;
      total += Integer(static_cast<long>(f1 + f2 + 1)) * Integer(static_cast<long>(f2 + f3 + 1));
    }
  return total;
}

std::function<bool(const SphericalDegree&)> in_span(const std::set<int>& I) {
  for (int i : I)
    if (i != 1 && i != 2) throw PreconditionViolation("spherical roots are numbered 1 and 2");
  return [I](const SphericalDegree& g) {
    return (g.a[0] == 0 || I.count(1)) && (g.a[1] == 0 || I.count(2));
  };
}

}  // namespace

std::size_t cox_hilbert(const PicardDegree& E, long bound) {
  return count_standard(E, [bound](const SphericalDegree& g) {
    return bound < 0 || static_cast<long>(g.a[0] + g.a[1]) <= bound;
  });
}

Integer brion_dimension(const PicardDegree& E) {
  return brion_sum(E, [](const SphericalDegree&) { return true; });
}

std::size_t cox_orbit_hilbert(const PicardDegree& E, const std::set<int>& I) { return count_standard(E, in_span(I)); }

Integer brion_orbit_dimension(const PicardDegree& E, const std::set<int>& I) { return brion_sum(E, in_span(I)); }

std::size_t CoxDegenerationReport::mismatches() const {
  std::size_t n = rules_match ? 0 : 1;
  for (const auto& e : entries) n += !e.ok();
  return n;
}

CoxDegenerationReport cox_degenerate_and_compare(unsigned max_coeff) {
  CoxDatum d;
  BoxDatum y;
  CoxDegenerationReport rep;
  rep.degenerate_rules = rees_degenerate(cox_relations(d), d);
  auto as_map = [](const std::vector<StraighteningRule>& rules) {
    std::map<Monomial, LinearCombination> m;
    for (const auto& r : rules) m.emplace(r.lhs, r.rhs);
    return m;
  };
  rep.rules_match = as_map(rep.degenerate_rules) == as_map(lift_to_cox(coxy_relations(y), y, d));

  std::vector<PicardDegree> degrees;
  for (unsigned a = 0; a <= max_coeff; ++a)
    for (unsigned b = 0; b <= max_coeff; ++b)
      for (unsigned c = 0; c <= max_coeff; ++c) degrees.push_back(PicardDegree{{a, b, c}});
  rep.entries.resize(degrees.size());
  const long n = static_cast<long>(degrees.size());
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < n; ++i) {
    auto& e = rep.entries[i];
    e.E = degrees[i];
    e.generic = cox_hilbert(e.E);
    e.brion = brion_dimension(e.E);
    for (const auto& m : d.monomials_of_weight(e.E)) {
      bool divisible = false;
      for (const auto& r : rep.degenerate_rules) divisible = divisible || r.lhs.divides(m);
      e.special += !divisible;
    }
  }
  return rep;
}

}  // namespace smt
