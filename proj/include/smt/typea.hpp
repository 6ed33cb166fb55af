#pragma once

#include "smt/core.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace smt {

/// Strictly increasing sequence in [1, ell+1] of length in [1, ell].
struct Row {
  std::vector<int> entries;
  int ell = 0;

  std::size_t size() const { return entries.size(); }
  auto operator<=>(const Row&) const = default;
};

/// Validating constructor; throws PreconditionViolation.
Row make_row(std::vector<int> entries, int ell);
/// All rows of length k, lexicographic order.
std::vector<Row> all_rows(int ell, int k);
std::string to_string(const Row& r);

struct ReferenceShape {
  std::vector<int> shapes;

  void validate(int ell) const;
  std::optional<std::size_t> slot_of(std::size_t k) const;
  bool operator==(const ReferenceShape&) const = default;
};

struct Multidegree {
  std::vector<unsigned> counts;
  unsigned total() const;
  bool operator==(const Multidegree&) const = default;
};

/// Row lengths of the adapted shape: counts[0] copies of shapes[0], then ...
std::vector<int> adapted_shape(const Multidegree& md, const ReferenceShape& ref);

struct Tableau {
  std::vector<Row> rows;
  ReferenceShape reference;

  bool is_adapted() const;
  bool operator==(const Tableau&) const = default;
};

/// R ⟵ S: left alignment when len(R) >= len(S), right alignment otherwise.
bool row_leq(const Row& r, const Row& s);
/// φ(R, S) = (R⁰, S⁰); precondition row_leq(r, s).
std::pair<Row, Row> swap_pair(const Row& r, const Row& s);
bool rows_weakly_standard(const std::vector<Row>& rows);

/// τ_i with 1-based i: replaces rows i, i+1 by their swap.
Tableau tau(const Tableau& t, std::size_t i);

/// Sort the shape into non-increasing lengths by swaps, then test weak
/// standardness. Rows must be in adapted order.
bool rows_standard_fast(const std::vector<Row>& rows);
bool is_standard_tableau(const Tableau& t);

std::vector<Tableau> enumerate_standard(const Multidegree& md, const ReferenceShape& ref, int ell);
std::vector<Tableau> enumerate_standard_serial(const Multidegree& md, const ReferenceShape& ref, int ell);

/// Same shape and (equal, or at the first differing row R'_j ⟵ R_j).
bool tableau_leq(const Tableau& t, const Tableau& t2);

/// The type-A datum: one shape per reference entry, rows in lexicographic order.
class RowDatum : public Datum {
 public:
  RowDatum(int ell, ReferenceShape ref);

  int ell() const { return ell_; }
  const ReferenceShape& reference() const { return ref_; }

  std::size_t shape_count() const override { return ref_.shapes.size(); }
  std::size_t generator_count(ShapeLabel s) const override { return rows_.at(s.index).size(); }
  bool related(Generator a, Generator b) const override;
  std::pair<Generator, Generator> swap(Generator a, Generator b) const override;
  std::string label(Generator g) const override;
  std::optional<bool> fast_standard(const FormalMonomial& m) const override;

  Generator generator(const Row& r) const;
  const Row& row(Generator g) const { return rows_.at(g.shape.index).at(g.id); }
  FormalMonomial formal(const std::vector<Row>& rows) const;
  Monomial monomial(const std::vector<Row>& rows) const;
  /// Rows of a monomial in adapted order.
  std::vector<Row> rows_of(const Monomial& m) const;
  std::vector<Row> rows_of(const FormalMonomial& m) const;

 private:
  int ell_;
  ReferenceShape ref_;
  std::vector<std::vector<Row>> rows_;
  std::vector<std::map<std::vector<int>, std::uint32_t>> index_;
};

}  // namespace smt
