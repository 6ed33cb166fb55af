// Acceptance suite: one [PASS]/[FAIL] line per criterion.

#include "oracles.hpp"
#include "smt/io.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>

using namespace smt;

namespace {

struct Verdict {
  bool ok = true;
  std::string detail;
};

int failures = 0;

void criterion(const char* name, const std::function<Verdict()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Verdict v;
  try {
    v = body();
  } catch (const std::exception& e) {
    v = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("[%s] %s (%.2fs) %s\n", v.ok ? "PASS" : "FAIL", name, secs, v.detail.c_str());
  std::fflush(stdout);
  if (!v.ok) ++failures;
}

std::vector<Row> rows(const char* text, int ell) { return parse_rows_shorthand(text, ell); }

TableauPolynomial poly(std::initializer_list<std::pair<const char*, int>> terms, int ell) {
  TableauPolynomial p;
  for (const auto& [t, c] : terms) add_term(p, rows(t, ell), Rational(c));
  return p;
}

// Every ordering of every non-empty subset of {1, ..., ell}.
std::vector<ReferenceShape> all_references(int ell) {
  std::vector<int> base;
  for (int k = 1; k <= ell; ++k) base.push_back(k);
  std::vector<ReferenceShape> out;
  for (std::size_t n = 1; n <= base.size(); ++n)
    for (auto sub : oracle::subsets(base, n)) do
        out.push_back(ReferenceShape{sub});
      while (std::next_permutation(sub.begin(), sub.end()));
  return out;
}

bool monotone(const ReferenceShape& r) {
  return std::is_sorted(r.shapes.begin(), r.shapes.end()) || std::is_sorted(r.shapes.rbegin(), r.shapes.rend());
}

std::string count_detail(std::size_t n, const char* what) {
  std::ostringstream s;
  s << n << " " << what;
  return s.str();
}

// Each golden example must finish well inside a second.
bool quick(const std::function<bool()>& f, double& worst) {
  const auto start = std::chrono::steady_clock::now();
  const bool ok = f();
  worst = std::max(worst, std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
  return ok;
}

Verdict ac1() {
  double worst = 0;
  bool ok = true;
  ok &= quick([] { return swap_pair(rows("25", 5)[0], rows("1346", 5)[0]) == std::pair{rows("1245", 5)[0], rows("36", 5)[0]}; },
              worst);
  ok &= quick(
      [] {
        RowDatum d(3, ReferenceShape{{2, 3, 1}});
        if (!is_standard(d.formal(rows("24;134;3", 3)), d)) return false;
        const auto rep = check_standard(d.formal(rows("24;134;2", 3)), d);
        return !rep.standard && rep.witness_positions == std::vector<std::size_t>{0} &&
               d.rows_of(rep.witness_path.back()) == rows("124;34;2", 3) &&
               !is_weakly_standard(rep.witness_path.back(), d);
      },
      worst);
  ok &= quick(
      [] {
        const auto p = shuffling_relation(rows("234", 3)[0], rows("14", 3)[0]);
        return p == poly({{"234;14", 1}, {"134;24", -1}, {"124;34", 1}}, 3) && verify_polynomial_identity(p, 100, 1);
      },
      worst);
  ok &= quick(
      [] {
        const auto p = shuffling_relation(rows("34", 3)[0], rows("2", 3)[0]);
        return p == poly({{"34;2", 1}, {"24;3", -1}, {"23;4", 1}}, 3) && verify_polynomial_identity(p, 100, 1);
      },
      worst);
  ok &= quick(
      [] {
        return straighten_tableau(Tableau{rows("24;134;2", 3), ReferenceShape{{2, 3, 1}}}) ==
               poly({{"14;234;2", 1}, {"24;124;3", 1}, {"23;124;4", -1}}, 3);
      },
      worst);
  std::ostringstream s;
  s << "5 examples, slowest " << worst << "s";
  return {ok && worst < 1.0, s.str()};
}

Verdict ac2() {
  std::size_t count = 0, bad = 0;
  for (int ell = 1; ell <= 4; ++ell)
    for (int k = 1; k <= ell; ++k)
      for (int h = 1; h <= ell; ++h)
        for (const auto& r : all_rows(ell, k))
          for (const auto& s : all_rows(ell, h)) {
            if (row_leq(r, s)) continue;
            ++count;
            if (!verify_polynomial_identity(shuffling_relation(r, s), 10, 1000 + count)) ++bad;
          }
  return {bad == 0 && count > 0, count_detail(count, "non-standard pairs, 10 matrices each")};
}

Verdict ac3() {
  std::size_t count = 0, bad = 0;
  bool saw64 = false;
  for (int ell = 1; ell <= 3; ++ell)
    for (const auto& ref : all_references(ell))
      for (const auto& md : multidegrees_upto(ref.shapes.size(), 4)) {
        const auto n = enumerate_standard(md, ref, ell).size();
        const auto w = weight_of(md, ref, ell);
        if (!(weyl_dim(w, ell) == n && ssyt_count(w, ell) == n)) ++bad;
        if (ell == 3 && ref.shapes == std::vector<int>{2, 3, 1} && md.counts == std::vector<unsigned>{1, 1, 1})
          saw64 = n == 64;
        ++count;
      }
  return {bad == 0 && saw64, count_detail(count, "multidegrees")};
}

Verdict ac4() {
  std::size_t count = 0, bad = 0;
  std::uint64_t seed = 1;
  for (int ell = 1; ell <= 3; ++ell)
    for (const auto& ref : all_references(ell))
      for (const auto& md : multidegrees_upto(ref.shapes.size(), 3)) {
        std::vector<std::vector<Row>> ts;
        for (const auto& t : enumerate_standard(md, ref, ell)) ts.push_back(t.rows);
        if (ts.empty() || ts.front().empty()) continue;
        const auto pts = random_matrices(ell + 1, ts.size() + 5, seed++);
        if (rank(evaluation_matrix(ts, pts)) != ts.size()) ++bad;
        ++count;
      }
  return {bad == 0, count_detail(count, "multidegrees at full rank")};
}

Verdict ac5() {
  std::size_t count = 0, bad = 0;
  for (int ell = 1; ell <= 3; ++ell)
    for (const auto& ref : all_references(ell))
      for (const auto& md : multidegrees_upto(ref.shapes.size(), 4))
        for (const auto& t : enumerate_standard(md, ref, ell)) {
          const std::size_t n = t.rows.size();
          for (std::size_t i = 1; i < n; ++i) {
            if (tau(tau(t, i), i) != t) ++bad;
            for (std::size_t j = i + 2; j < n; ++j)
              if (tau(tau(t, i), j) != tau(tau(t, j), i)) ++bad;
            if (i + 1 < n && tau(tau(tau(t, i), i + 1), i) != tau(tau(tau(t, i + 1), i), i + 1)) ++bad;
          }
          ++count;
        }
  return {bad == 0 && count > 0, count_detail(count, "standard tableaux")};
}

Verdict ac6() {
  const auto mixed = discrete_ideal_generators(ReferenceShape{{2, 3, 1}}, 3, 3);
  const auto it = mixed.by_degree.find(3);
  bool ok = it != mixed.by_degree.end() &&
            std::find(it->second.begin(), it->second.end(), rows("24;134;2", 3)) != it->second.end();
  std::size_t tested = 0;
  for (int ell = 1; ell <= 3; ++ell)
    for (const auto& ref : all_references(ell)) {
      if (!monotone(ref)) continue;
      for (const auto& [deg, gens] : discrete_ideal_generators(ref, ell, 4).by_degree)
        if (deg >= 3 && !gens.empty()) ok = false;
      ++tested;
    }
  return {ok, count_detail(tested, "monotone reference shapes up to degree 4")};
}

Verdict ac7() {
  bool ok = cox_hilbert(PicardDegree{{0, 1, 0}}) == 4 && cox_hilbert(PicardDegree{{0, 2, 0}}) == 10 &&
            cox_hilbert(PicardDegree{{1, 0, 1}}) == 4;
  std::size_t count = 0;
  for (std::int64_t a = -3; a <= 3; ++a)
    for (std::int64_t b = -3; b <= 3; ++b)
      for (std::int64_t c = -3; c <= 3; ++c) {
        const PicardDegree E{{a, b, c}};
        const auto n = cox_hilbert(E);
        ok = ok && brion_dimension(E) == n && oracle::brion(E) == static_cast<long>(n);
        ++count;
      }
  return {ok, count_detail(count, "Picard degrees")};
}

Verdict ac8() {
  const auto cox = cox_degenerate_and_compare(2);
  bool ok = cox.rules_match && cox.mismatches() == 0;
  CoxDatum x;
  BoxDatum y;
  ok = ok && rees_degenerate(cox_relations(x), x) == lift_to_cox(coxy_relations(y), y, x);
  std::size_t entries = cox.entries.size();
  for (int ell = 1; ell <= 3; ++ell)
    for (const auto& ref : all_references(ell)) {
      const auto r = degeneration_flatness_check(ref, ell, 3);
      ok = ok && r.mismatches() == 0;
      entries += r.entries.size();
    }
  return {ok, count_detail(entries, "graded pieces compared")};
}

Verdict ac9() {
  CoxDatum x;
  RuleSet rules(x, cox_relations(x));
  StandardOracle oracle(x);
  ConfluenceChecker checker(rules, oracle);
  std::size_t count = 0;
  bool ok = true;
  for (std::int64_t a = -2; a <= 2; ++a)
    for (std::int64_t b = -2; b <= 2; ++b)
      for (std::int64_t c = -2; c <= 2; ++c)
        for (const auto& m : x.monomials_of_weight(PicardDegree{{a, b, c}})) {
          ok = ok && checker.unique_normal_form(m).has_value();
          ++count;
        }
  for (const auto& rule : cox_relations(x))
    for (std::uint64_t seed = 1; seed <= 50; ++seed) ok = ok && oracle::cox_model_vanishes(rule, x, seed);
  return {ok && checker.divergences() == 0, count_detail(count, "monomials")};
}

bool multiplicative(const Datum& d, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const auto gens = d.generators();
  auto random_mono = [&](int n) {
    std::vector<Generator> f;
    for (int i = 0; i < n; ++i) f.push_back(gens[rng() % gens.size()]);
    return Monomial(f);
  };
  for (int trial = 0; trial < 2000; ++trial) {
    Monomial m1 = random_mono(2), m2 = random_mono(2), m = random_mono(1 + trial % 2);
    if (d.grading(m1) != d.grading(m2)) continue;
    if (!d.monomial_leq(m1, m2)) std::swap(m1, m2);
    if (!d.monomial_leq(m1, m2)) continue;  // incomparable
    if (!d.monomial_leq(m * m1, m * m2)) return false;
  }
  return true;
}

Verdict ac10() {
  bool ok = true;
  std::size_t rules_checked = 0, data = 0;
  for (int ell = 1; ell <= 3; ++ell)
    for (const auto& ref : all_references(ell)) {
      RowDatum d(ell, ref);
      ok = ok && swap_axiom_violations(d).empty() && multiplicative(d, 7 + data);
      Straightener st(d);
      for (const auto& md : multidegrees_upto(ref.shapes.size(), 3)) {
        const auto shape = adapted_shape(md, ref);
        std::vector<Row> t;
        // straighten every adapted tableau of this multidegree
        std::function<void(std::size_t)> walk = [&](std::size_t i) {
          if (i == shape.size()) {
            if (!t.empty()) st.straighten(t);
            return;
          }
          for (const auto& r : all_rows(ell, shape[i])) {
            t.push_back(r);
            walk(i + 1);
            t.pop_back();
          }
        };
        if (md.total() <= (ell == 3 ? 2u : 3u)) walk(0);
      }
      StandardOracle fresh(d, false);
      for (const auto& rule : st.generated_rules()) {
        validate_rule(rule, fresh);
        ok = ok && is_minimally_nonstandard(rule.lhs.formal(), d);
        ++rules_checked;
      }
      ++data;
    }
  BoxDatum y;
  ok = ok && swap_axiom_violations(y).empty() && multiplicative(y, 5);
  StandardOracle oy(y, false);
  for (const auto& rule : coxy_relations(y)) {
    validate_rule(rule, oy);
    ++rules_checked;
  }
  CoxDatum x;
  ok = ok && swap_axiom_violations(x).empty() && multiplicative(x, 6);
  StandardOracle ox(x, false);
  for (const auto& rule : cox_relations(x)) {
    validate_rule(rule, ox);
    ++rules_checked;
  }
  std::ostringstream s;
  s << data + 2 << " data, " << rules_checked << " rules validated";
  return {ok, s.str()};
}

}  // namespace

int main() {
  criterion("AC1 golden examples", ac1);
  criterion("AC2 shuffling relations vanish (l <= 4)", ac2);
  criterion("AC3 basis counts match Weyl dimension and SSYT count", ac3);
  criterion("AC4 standard monomials are linearly independent", ac4);
  criterion("AC5 tau involution, commutation and braid relations", ac5);
  criterion("AC6 discrete ideal generator degrees", ac6);
  criterion("AC7 Cox Hilbert function matches the dimension formula", ac7);
  criterion("AC8 degeneration flatness", ac8);
  criterion("AC9 Cox rewriting is confluent", ac9);
  criterion("AC10 axiom suite", ac10);
  std::printf("%d failure(s)\n", failures);
  return failures == 0 ? 0 : 1;
}
