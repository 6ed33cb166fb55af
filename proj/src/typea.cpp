#include "smt/typea.hpp"

#include <omp.h>

#include <algorithm>
#include <functional>
#include <set>

namespace smt {

Row make_row(std::vector<int> entries, int ell) {
  if (ell < 1) throw PreconditionViolation("rank must be at least 1");
  if (entries.empty() || entries.size() > static_cast<std::size_t>(ell))
    throw PreconditionViolation("row length must lie in [1, ell]");
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (entries[i] < 1 || entries[i] > ell + 1) throw PreconditionViolation("row entry out of range");
    if (i && entries[i - 1] >= entries[i]) throw PreconditionViolation("row entries must be strictly increasing");
  }
  return Row{std::move(entries), ell};
}

std::vector<Row> all_rows(int ell, int k) {
  std::vector<Row> out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int next) {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(Row{cur, ell});
      return;
    }
    for (int v = next; v <= ell + 1; ++v) {
      cur.push_back(v);
      rec(v + 1);
      cur.pop_back();
    }
  };
  rec(1);
  return out;
}

std::string to_string(const Row& r) {
  std::string s;
  if (r.ell + 1 <= 9) {
    for (int v : r.entries) s += std::to_string(v);
    return s;
  }
  s = "(";
  for (std::size_t i = 0; i < r.entries.size(); ++i) s += (i ? "," : "") + std::to_string(r.entries[i]);
  return s + ")";
}

void ReferenceShape::validate(int ell) const {
  if (shapes.empty()) throw PreconditionViolation("reference shape must be non-empty");
  std::set<int> seen;
  for (int k : shapes) {
    if (k < 1 || k > ell) throw PreconditionViolation("reference shape entries must lie in [1, ell]");
    if (!seen.insert(k).second) throw PreconditionViolation("reference shape entries must be distinct");
  }
}

std::optional<std::size_t> ReferenceShape::slot_of(std::size_t k) const {
  for (std::size_t i = 0; i < shapes.size(); ++i)
    if (static_cast<std::size_t>(shapes[i]) == k) return i;
  return std::nullopt;
}

unsigned Multidegree::total() const {
  unsigned t = 0;
  for (unsigned c : counts) t += c;
  return t;
}

std::vector<int> adapted_shape(const Multidegree& md, const ReferenceShape& ref) {
  if (md.counts.size() != ref.shapes.size())
    throw PreconditionViolation("multidegree length differs from reference shape length");
  std::vector<int> out;
  for (std::size_t i = 0; i < md.counts.size(); ++i) out.insert(out.end(), md.counts[i], ref.shapes[i]);
  return out;
}

bool Tableau::is_adapted() const {
  std::size_t last = 0;
  for (const auto& r : rows) {
    auto slot = reference.slot_of(r.size());
    if (!slot || *slot < last) return false;
    last = *slot;
  }
  return true;
}

namespace {

bool componentwise_leq(const std::vector<int>& a, const std::vector<int>& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

std::vector<int> complement(const std::vector<int>& r, int ell) {
  std::vector<int> out;
  for (int v = 1, j = 0; v <= ell + 1; ++v) {
    if (j < static_cast<int>(r.size()) && r[j] == v)
      ++j;
    else
      out.push_back(v);
  }
  return out;
}

// Largest superset of base (size target) whose sorted form is componentwise <= bound.
std::vector<int> max_superset_below(const std::vector<int>& base, const std::vector<int>& bound, int ell) {
  const std::size_t need = bound.size() - base.size();
  std::vector<int> pool = complement(base, ell);
  std::vector<int> chosen;
  for (std::size_t idx = pool.size(); idx-- > 0 && chosen.size() < need;) {
    std::vector<int> trial = base;
    trial.insert(trial.end(), chosen.begin(), chosen.end());
    trial.push_back(pool[idx]);
    // complete with the smallest values not yet considered
    for (std::size_t f = 0; f < idx && trial.size() < bound.size(); ++f) trial.push_back(pool[f]);
    if (trial.size() < bound.size()) continue;
    std::sort(trial.begin(), trial.end());
    if (componentwise_leq(trial, bound)) chosen.push_back(pool[idx]);
  }
  std::vector<int> out = base;
  out.insert(out.end(), chosen.begin(), chosen.end());
  std::sort(out.begin(), out.end());
  return out;
}

// Smallest superset of base (size target) whose sorted form is componentwise >= bound.
std::vector<int> min_superset_above(const std::vector<int>& base, const std::vector<int>& bound, int ell) {
  const std::size_t need = bound.size() - base.size();
  std::vector<int> pool = complement(base, ell);
  std::vector<int> chosen;
  for (std::size_t idx = 0; idx < pool.size() && chosen.size() < need; ++idx) {
    std::vector<int> trial = base;
    trial.insert(trial.end(), chosen.begin(), chosen.end());
    trial.push_back(pool[idx]);
    for (std::size_t f = pool.size(); f-- > idx + 1 && trial.size() < bound.size();) trial.push_back(pool[f]);
    if (trial.size() < bound.size()) continue;
    std::sort(trial.begin(), trial.end());
    if (componentwise_leq(bound, trial)) chosen.push_back(pool[idx]);
  }
  std::vector<int> out = base;
  out.insert(out.end(), chosen.begin(), chosen.end());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

bool row_leq(const Row& r, const Row& s) {
  if (r.ell != s.ell) throw PreconditionViolation("rows of different rank");
  const std::size_t k = r.size(), h = s.size();
  if (k >= h) {
    for (std::size_t m = 0; m < h; ++m)
      if (r.entries[m] > s.entries[m]) return false;
    return true;
  }
  for (std::size_t m = 0; m < k; ++m)
    if (r.entries[m] > s.entries[h - k + m]) return false;
  return true;
}

std::pair<Row, Row> swap_pair(const Row& r, const Row& s) {
  if (!row_leq(r, s)) throw PreconditionViolation("swap_pair requires R ⟵ S");
  const std::size_t k = r.size(), h = s.size();
  const int ell = r.ell;
  if (k == h) return {r, s};
  if (k < h) {
    // S⁰: smallest subrow of S of length k lying above R.
    std::vector<int> s0;
    std::size_t next = 0;
    for (std::size_t m = 0; m < k; ++m) {
      while (s.entries[next] < r.entries[m]) ++next;
      s0.push_back(s.entries[next++]);
    }
    return {Row{max_superset_below(r.entries, s.entries, ell), ell}, Row{s0, ell}};
  }
  // R⁰: largest subrow of R of length h lying below S.
  std::vector<int> r0(h);
  std::size_t prev = k;
  for (std::size_t m = h; m-- > 0;) {
    std::size_t idx = prev;
    while (r.entries[idx - 1] > s.entries[m]) --idx;
    r0[m] = r.entries[idx - 1];
    prev = idx - 1;
  }
  return {Row{r0, ell}, Row{min_superset_above(s.entries, r.entries, ell), ell}};
}

bool rows_weakly_standard(const std::vector<Row>& rows) {
  for (std::size_t i = 0; i + 1 < rows.size(); ++i)
    if (!row_leq(rows[i], rows[i + 1])) return false;
  return true;
}

Tableau tau(const Tableau& t, std::size_t i) {
  if (i < 1 || i >= t.rows.size()) throw PreconditionViolation("tau index out of range");
  if (!row_leq(t.rows[i - 1], t.rows[i])) throw PreconditionViolation("tau on an incomparable pair");
  Tableau out = t;
  std::tie(out.rows[i - 1], out.rows[i]) = swap_pair(t.rows[i - 1], t.rows[i]);
  return out;
}

bool rows_standard_fast(const std::vector<Row>& rows) {
  if (!rows_weakly_standard(rows)) return false;
  std::vector<Row> f = rows;
  for (;;) {
    std::size_t i = 0;
    while (i + 1 < f.size() && f[i].size() >= f[i + 1].size()) ++i;
    if (i + 1 >= f.size()) break;
    if (!row_leq(f[i], f[i + 1])) return false;
    std::tie(f[i], f[i + 1]) = swap_pair(f[i], f[i + 1]);
  }
  return rows_weakly_standard(f);
}

bool is_standard_tableau(const Tableau& t) {
  if (!t.is_adapted()) throw PreconditionViolation("tableau shape is not adapted to its reference");
  return rows_standard_fast(t.rows);
}

namespace {

struct Enumerator {
  std::vector<int> shape;
  std::vector<std::vector<Row>> candidates;  // per position

  Enumerator(const Multidegree& md, const ReferenceShape& ref, int ell) {
    ref.validate(ell);
    shape = adapted_shape(md, ref);
    for (int k : shape) candidates.push_back(all_rows(ell, k));
  }

  void extend(std::vector<Row>& prefix, std::vector<Row>& flat_out, std::size_t& count) const {
    if (prefix.size() == shape.size()) {
      flat_out.insert(flat_out.end(), prefix.begin(), prefix.end());
      ++count;
      return;
    }
    for (const auto& r : candidates[prefix.size()]) {
      if (!prefix.empty() && !row_leq(prefix.back(), r)) continue;
      prefix.push_back(r);
      if (rows_standard_fast(prefix)) extend(prefix, flat_out, count);
      prefix.pop_back();
    }
  }

  std::vector<Tableau> unflatten(const std::vector<Row>& flat, const ReferenceShape& ref) const {
    std::vector<Tableau> out;
    const std::size_t n = shape.size();
    if (n == 0) return {Tableau{{}, ref}};
    for (std::size_t i = 0; i < flat.size(); i += n)
      out.push_back(Tableau{std::vector<Row>(flat.begin() + i, flat.begin() + i + n), ref});
    return out;
  }
};

}  // namespace

std::vector<Tableau> enumerate_standard_serial(const Multidegree& md, const ReferenceShape& ref, int ell) {
  Enumerator e(md, ref, ell);
  std::vector<Row> prefix, flat;
  std::size_t count = 0;
  if (e.shape.empty()) return {Tableau{{}, ref}};
  e.extend(prefix, flat, count);
  return e.unflatten(flat, ref);
}

std::vector<Tableau> enumerate_standard(const Multidegree& md, const ReferenceShape& ref, int ell) {
  Enumerator e(md, ref, ell);
  if (e.shape.empty()) return {Tableau{{}, ref}};
  const auto& firsts = e.candidates[0];
  const long n = static_cast<long>(firsts.size());
  std::vector<std::vector<Row>> parts(firsts.size());
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < n; ++i) {
    std::vector<Row> prefix{firsts[i]};
    std::size_t count = 0;
    e.extend(prefix, parts[i], count);
  }
  std::vector<Row> flat;
  for (auto& p : parts) flat.insert(flat.end(), p.begin(), p.end());
  return e.unflatten(flat, ref);
}

bool tableau_leq(const Tableau& t, const Tableau& t2) {
  if (t.rows.size() != t2.rows.size()) return false;
  for (std::size_t i = 0; i < t.rows.size(); ++i)
    if (t.rows[i].size() != t2.rows[i].size()) return false;
  for (std::size_t i = 0; i < t.rows.size(); ++i)
    if (t.rows[i] != t2.rows[i]) return row_leq(t2.rows[i], t.rows[i]);
  return true;
}

RowDatum::RowDatum(int ell, ReferenceShape ref) : ell_(ell), ref_(std::move(ref)) {
  ref_.validate(ell_);
  for (int k : ref_.shapes) {
    rows_.push_back(all_rows(ell_, k));
    std::map<std::vector<int>, std::uint32_t> idx;
    for (std::uint32_t i = 0; i < rows_.back().size(); ++i) idx.emplace(rows_.back()[i].entries, i);
    index_.push_back(std::move(idx));
  }
}

bool RowDatum::related(Generator a, Generator b) const { return row_leq(row(a), row(b)); }

std::pair<Generator, Generator> RowDatum::swap(Generator a, Generator b) const {
  auto [r0, s0] = swap_pair(row(a), row(b));
  return {generator(r0), generator(s0)};
}

std::string RowDatum::label(Generator g) const {
  if (!contains(g)) return Datum::label(g);
  return to_string(row(g));
}

std::optional<bool> RowDatum::fast_standard(const FormalMonomial& m) const {
  for (std::size_t i = 0; i + 1 < m.size(); ++i)
    if (m[i + 1].shape < m[i].shape) return false;
  return rows_standard_fast(rows_of(m));
}

Generator RowDatum::generator(const Row& r) const {
  if (r.ell != ell_) throw DatumMismatch("row " + to_string(r) + " has the wrong rank");
  auto slot = ref_.slot_of(r.size());
  if (!slot) throw DatumMismatch("row " + to_string(r) + " has a shape outside the reference shape");
  auto it = index_[*slot].find(r.entries);
  if (it == index_[*slot].end()) throw DatumMismatch("row " + to_string(r) + " is not a valid row");
  return Generator{ShapeLabel{static_cast<std::uint32_t>(*slot)}, it->second};
}

FormalMonomial RowDatum::formal(const std::vector<Row>& rows) const {
  FormalMonomial out;
  for (const auto& r : rows) out.push_back(generator(r));
  return out;
}

Monomial RowDatum::monomial(const std::vector<Row>& rows) const { return Monomial(formal(rows)); }

std::vector<Row> RowDatum::rows_of(const Monomial& m) const { return rows_of(m.formal()); }

std::vector<Row> RowDatum::rows_of(const FormalMonomial& m) const {
  std::vector<Row> out;
  for (const auto& g : m) out.push_back(row(g));
  return out;
}

}  // namespace smt
