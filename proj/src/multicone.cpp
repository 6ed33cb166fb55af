#include "smt/multicone.hpp"

#include "smt/straightening.hpp"

#include <omp.h>

#include <functional>

namespace smt {

HighestWeight weight_of(const Multidegree& md, const ReferenceShape& ref, int ell) {
  ref.validate(ell);
  if (md.counts.size() != ref.shapes.size())
    throw PreconditionViolation("multidegree length differs from reference shape length");
  HighestWeight w{std::vector<unsigned>(ell, 0)};
  for (std::size_t i = 0; i < md.counts.size(); ++i) w.coefficients[ref.shapes[i] - 1] += md.counts[i];
  return w;
}

std::vector<unsigned> partition_of(const HighestWeight& w) {
  std::vector<unsigned> lambda(w.coefficients.size(), 0);
  unsigned acc = 0;
  for (std::size_t j = w.coefficients.size(); j-- > 0;) {
    acc += w.coefficients[j];
    lambda[j] = acc;
  }
  return lambda;
}

Integer weyl_dim(const HighestWeight& w, int ell) {
  if (w.coefficients.size() > static_cast<std::size_t>(ell)) throw PreconditionViolation("weight longer than rank");
  HighestWeight padded = w;
  padded.coefficients.resize(ell, 0);
  auto lambda = partition_of(padded);
  lambda.push_back(0);
  Rational d(1);
  for (int i = 0; i <= ell; ++i)
    for (int j = i + 1; j <= ell; ++j)
      d *= ratio(static_cast<long>(lambda[i]) - static_cast<long>(lambda[j]) + (j - i), j - i);
  return d.get_num();
}

Integer ssyt_count(const HighestWeight& w, int ell) {
  auto lambda = partition_of(w);
  const int top = ell + 1;
  std::vector<std::vector<int>> cells(lambda.size());
  for (std::size_t r = 0; r < lambda.size(); ++r) cells[r].assign(lambda[r], 0);
  Integer count = 0;
  std::function<void(std::size_t, std::size_t)> fill = [&](std::size_t r, std::size_t c) {
    if (r == cells.size() || cells[r].empty()) {
      ++count;
      return;
    }
    if (c == cells[r].size()) {
      fill(r + 1, 0);
      return;
    }
    int lo = 1;
    if (c > 0) lo = std::max(lo, cells[r][c - 1]);
    if (r > 0) lo = std::max(lo, cells[r - 1][c] + 1);
    // room for the strictly increasing column below
    std::size_t below = 0;
    for (std::size_t rr = r + 1; rr < cells.size() && c < cells[rr].size(); ++rr) ++below;
    for (int v = lo; v + static_cast<int>(below) <= top; ++v) {
      cells[r][c] = v;
      fill(r, c + 1);
    }
  };
  fill(0, 0);
  return count;
}

std::size_t hilbert(const Multidegree& md, const ReferenceShape& ref, int ell) {
  return enumerate_standard(md, ref, ell).size();
}

std::vector<Multidegree> multidegrees_upto(std::size_t length, unsigned max_total) {
  std::vector<Multidegree> out;
  for (unsigned total = 0; total <= max_total; ++total) {
    std::vector<unsigned> cur;
    std::function<void(unsigned)> rec = [&](unsigned left) {
      if (cur.size() + 1 == length) {
        cur.push_back(left);
        out.push_back(Multidegree{cur});
        cur.pop_back();
        return;
      }
      for (unsigned v = left + 1; v-- > 0;) {
        cur.push_back(v);
        rec(left - v);
        cur.pop_back();
      }
    };
    if (length == 0) {
      if (total == 0) out.push_back(Multidegree{});
      continue;
    }
    rec(total);
  }
  return out;
}

namespace {

HilbertRow hilbert_row(const Multidegree& md, const ReferenceShape& ref, int ell) {
  HilbertRow row;
  row.md = md;
  row.count = enumerate_standard_serial(md, ref, ell).size();
  const auto w = weight_of(md, ref, ell);
  row.weyl = weyl_dim(w, ell);
  row.ssyt = ssyt_count(w, ell);
  return row;
}

}  // namespace

std::vector<HilbertRow> hilbert_table_serial(const ReferenceShape& ref, int ell, unsigned max_total) {
  std::vector<HilbertRow> out;
  for (const auto& md : multidegrees_upto(ref.shapes.size(), max_total)) out.push_back(hilbert_row(md, ref, ell));
  return out;
}

std::vector<HilbertRow> hilbert_table(const ReferenceShape& ref, int ell, unsigned max_total) {
  const auto mds = multidegrees_upto(ref.shapes.size(), max_total);
  std::vector<HilbertRow> out(mds.size());
  const long n = static_cast<long>(mds.size());
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < n; ++i) out[i] = hilbert_row(mds[i], ref, ell);
  return out;
}

std::size_t MonomialIdealBasis::size() const {
  std::size_t n = 0;
  for (const auto& [deg, gens] : by_degree) n += gens.size();
  return n;
}

MonomialIdealBasis discrete_ideal_generators(const ReferenceShape& ref, int ell, std::size_t max_degree) {
  if (max_degree < 2) throw PreconditionViolation("max_degree must be at least 2");
  RowDatum d(ell, ref);
  StandardOracle oracle(d);
  MonomialIdealBasis basis;
  const auto gens = d.generators();
  for (std::size_t n = 2; n <= max_degree; ++n) {
    std::vector<std::vector<Row>> found;
    for_each_multiset(gens, n, [&](const Monomial& m) {
      if (!oracle.standard(m) && oracle.minimally_nonstandard(m)) found.push_back(d.rows_of(m));
    });
    if (!found.empty()) basis.by_degree[n] = std::move(found);
  }
  return basis;
}

std::size_t FlatnessReport::mismatches() const {
  std::size_t n = 0;
  for (const auto& e : entries) n += !e.ok();
  return n;
}

FlatnessReport degeneration_flatness_check(const ReferenceShape& ref, int ell, unsigned max_total,
                                           std::uint64_t seed) {
  RowDatum d(ell, ref);
  std::vector<Monomial> ideal;
  if (max_total >= 2)
    for (const auto& [deg, gens] : discrete_ideal_generators(ref, ell, max_total).by_degree)
      for (const auto& g : gens) ideal.push_back(d.monomial(g));

  const auto mds = multidegrees_upto(ref.shapes.size(), max_total);
  FlatnessReport report;
  report.entries.resize(mds.size());
  const long n = static_cast<long>(mds.size());
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < n; ++i) {
    FlatnessEntry& e = report.entries[i];
    e.md = mds[i];
    const auto tabs = enumerate_standard_serial(e.md, ref, ell);
    e.generic = tabs.size();
    std::vector<std::vector<Row>> rows;
    for (const auto& t : tabs) rows.push_back(t.rows);
    e.evaluation_rank = rank(evaluation_matrix_serial(rows, random_matrices(ell + 1, rows.size() + 5, seed + i)));
    e.weyl = weyl_dim(weight_of(e.md, ref, ell), ell);

    // special fiber: monomials of this multidegree avoiding every ideal generator
    std::vector<Monomial> partial{Monomial{}};
    for (std::uint32_t s = 0; s < d.shape_count(); ++s) {
      std::vector<Generator> pool;
      for (std::uint32_t id = 0; id < d.generator_count(ShapeLabel{s}); ++id) pool.push_back({ShapeLabel{s}, id});
      std::vector<Monomial> next;
      for_each_multiset(pool, e.md.counts[s], [&](const Monomial& m) {
        for (const auto& p : partial) next.push_back(p * m);
      });
      partial = std::move(next);
    }
    for (const auto& m : partial) {
      bool divisible = false;
      for (const auto& g : ideal)
        if (g.divides(m)) {
          divisible = true;
          break;
        }
      e.special += !divisible;
    }
  }
  return report;
}

}  // namespace smt
