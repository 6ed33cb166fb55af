#include <doctest.h>

#include "oracles.hpp"
#include "smt/io.hpp"

using namespace smt;

namespace {

Row row(const char* text, int ell) { return parse_rows_shorthand(text, ell).front(); }

std::vector<Row> all_rows_upto(int ell) {
  std::vector<Row> out;
  for (int k = 1; k <= ell; ++k)
    for (auto& r : all_rows(ell, k)) out.push_back(r);
  return out;
}

}  // namespace

TEST_CASE("row order") {
  CHECK(row_leq(row("135", 4), row("14", 4)));
  CHECK_FALSE(row_leq(row("45", 4), row("135", 4)));
  for (const auto& r : all_rows_upto(3)) CHECK(row_leq(r, r));
  CHECK_THROWS_AS(row_leq(row("1", 2), row("1", 3)), PreconditionViolation);
  CHECK_THROWS_AS(make_row({2, 1}, 3), PreconditionViolation);
  CHECK_THROWS_AS(make_row({1, 5}, 3), PreconditionViolation);
}

TEST_CASE("row order is a partial order on each shape") {
  for (int ell = 1; ell <= 4; ++ell)
    for (int k = 1; k <= ell; ++k) {
      const auto rs = all_rows(ell, k);
      for (const auto& a : rs)
        for (const auto& b : rs) {
          if (a != b && row_leq(a, b)) CHECK_FALSE(row_leq(b, a));
          if (!row_leq(a, b)) continue;
          for (const auto& c : rs)
            if (row_leq(b, c)) CHECK(row_leq(a, c));
        }
    }
}

TEST_CASE("swap examples") {
  CHECK(swap_pair(row("25", 5), row("1346", 5)) == std::pair{row("1245", 5), row("36", 5)});
  CHECK(swap_pair(row("24", 3), row("134", 3)) == std::pair{row("124", 3), row("34", 3)});
  CHECK(swap_pair(row("13", 3), row("24", 3)) == std::pair{row("13", 3), row("24", 3)});
  CHECK_THROWS_AS(swap_pair(row("45", 4), row("135", 4)), PreconditionViolation);
}

TEST_CASE("greedy swap agrees with brute force, is an involution, keeps entries") {
  for (int ell = 1; ell <= 5; ++ell) {
    const auto rs = all_rows_upto(ell);
    for (const auto& r : rs)
      for (const auto& s : rs) {
        if (!row_leq(r, s)) continue;
        const auto got = swap_pair(r, s);
        CHECK(got == oracle::swap(r, s));
        CHECK(row_leq(got.first, got.second));
        CHECK(swap_pair(got.first, got.second) == std::pair{r, s});
        std::vector<int> before = r.entries, after = got.first.entries;
        before.insert(before.end(), s.entries.begin(), s.entries.end());
        after.insert(after.end(), got.second.entries.begin(), got.second.entries.end());
        std::sort(before.begin(), before.end());
        std::sort(after.begin(), after.end());
        CHECK(before == after);
      }
  }
}

TEST_CASE("tau") {
  const ReferenceShape ref{{2, 3, 1}};
  Tableau t{parse_rows_shorthand("24;134;2", 3), ref};
  CHECK(tau(t, 1).rows == parse_rows_shorthand("124;34;2", 3));
  Tableau two{parse_rows_shorthand("25;1346", 5), ReferenceShape{{2, 4}}};
  CHECK(tau(two, 1).rows == parse_rows_shorthand("1245;36", 5));
  CHECK_THROWS_AS(tau(Tableau{parse_rows_shorthand("34;2", 3), ref}, 1), PreconditionViolation);
  CHECK_THROWS_AS(tau(t, 0), PreconditionViolation);
}

TEST_CASE("standard tableaux") {
  const ReferenceShape ref{{2, 3, 1}};
  CHECK(is_standard_tableau(Tableau{parse_rows_shorthand("24;134;3", 3), ref}));
  CHECK_FALSE(is_standard_tableau(Tableau{parse_rows_shorthand("24;134;2", 3), ref}));
  CHECK(is_standard_tableau(Tableau{parse_rows_shorthand("134", 3), ref}));
  CHECK_THROWS_AS(is_standard_tableau(Tableau{parse_rows_shorthand("134;24", 3), ref}), PreconditionViolation);
}

TEST_CASE("fast path agrees with the swap search (l <= 4, N <= 4)") {
  std::size_t checked = 0, disagreements = 0;
  for (int ell = 1; ell <= 4; ++ell) {
    std::vector<int> ks;
    for (int k = 1; k <= ell; ++k) ks.push_back(k);
    for (std::size_t n = 1; n <= ks.size(); ++n)
      for (auto sub : oracle::subsets(ks, n))
        do {
          RowDatum d(ell, ReferenceShape{sub});
          const auto gens = d.generators();
          for (std::size_t deg = 2; deg <= 4; ++deg)
            for_each_multiset(gens, deg, [&](const Monomial& m) {
              const auto f = m.formal();
              if (!is_weakly_standard(f, d)) return;
              ++checked;
              if (rows_standard_fast(d.rows_of(f)) != is_standard(f, d)) ++disagreements;
            });
        } while (std::next_permutation(sub.begin(), sub.end()));
  }
  CHECK(checked > 1000);
  CHECK(disagreements == 0);
}

TEST_CASE("two-row tableaux: weakly standard iff standard") {
  for (int ell = 1; ell <= 4; ++ell)
    for (int k = 1; k <= ell; ++k)
      for (int h = 1; h <= ell; ++h) {
        if (k == h) continue;
        RowDatum d(ell, ReferenceShape{{k, h}});
        for (const auto& r : all_rows(ell, k))
          for (const auto& s : all_rows(ell, h))
            CHECK(is_standard(d.formal({r, s}), d) == row_leq(r, s));
      }
}

TEST_CASE("enumeration") {
  const ReferenceShape ref{{2, 3, 1}};
  CHECK(enumerate_standard(Multidegree{{1, 0, 0}}, ref, 3).size() == 6);
  CHECK(enumerate_standard(Multidegree{{1, 1, 1}}, ref, 3).size() == 64);
  CHECK(enumerate_standard(Multidegree{{2}}, ReferenceShape{{1}}, 1).size() == 3);
  CHECK(enumerate_standard(Multidegree{{0, 0, 0}}, ref, 3).size() == 1);
  const auto par = enumerate_standard(Multidegree{{2, 1, 1}}, ref, 3);
  CHECK(par == enumerate_standard_serial(Multidegree{{2, 1, 1}}, ref, 3));
  for (std::size_t i = 0; i + 1 < par.size(); ++i) CHECK(par[i].rows < par[i + 1].rows);
  for (const auto& t : par) {
    CHECK(t.is_adapted());
    RowDatum d(3, ref);
    CHECK(is_standard(d.formal(t.rows), d));
  }
}

TEST_CASE("standard tableaux are closed under tau") {
  const ReferenceShape ref{{2, 3, 1}};
  RowDatum d(3, ref);
  for (const auto& t : enumerate_standard(Multidegree{{1, 1, 1}}, ref, 3))
    for (std::size_t i = 1; i < t.rows.size(); ++i) {
      Tableau u = tau(t, i);
      CHECK(rows_weakly_standard(u.rows));
      CHECK(tau(u, i) == t);
    }
}

TEST_CASE("tableau order") {
  const ReferenceShape ref{{2, 3, 1}};
  Tableau a{parse_rows_shorthand("24;134;2", 3), ref}, b{parse_rows_shorthand("14;234;2", 3), ref};
  CHECK(tableau_leq(a, a));
  CHECK(tableau_leq(a, b));
  CHECK_FALSE(tableau_leq(b, a));
  CHECK_FALSE(tableau_leq(a, Tableau{parse_rows_shorthand("24;134", 3), ref}));
}
