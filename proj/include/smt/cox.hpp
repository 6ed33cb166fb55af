#pragma once

#include "smt/core.hpp"

#include <array>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

namespace smt {

enum class Box : int { Empty = 0, One = 1, Two = 2 };

/// A row of two boxes; shape 1 = [i·], 2 = [ij], 3 = [·j].
struct BoxRow {
  Box left = Box::Empty;
  Box right = Box::Empty;

  int shape() const;
  auto operator<=>(const BoxRow&) const = default;
};

BoxRow make_box_row(int left, int right);
std::string to_string(const BoxRow& r);
/// Rows of a shape in generator-id order.
std::vector<BoxRow> box_rows(int shape);

bool box_leq(Box a, Box b);
bool box_row_leq(const BoxRow& r, const BoxRow& s);
/// Exchanges empty and filled boxes within each column.
std::pair<BoxRow, BoxRow> box_swap(const BoxRow& r, const BoxRow& s);
/// Column entries, read skipping empty boxes, are non-decreasing.
bool box_tableau_standard_closed_form(const std::vector<BoxRow>& rows);

/// The multicone datum of box rows over a subset of the three shapes.
class BoxDatum : public Datum {
 public:
  explicit BoxDatum(std::vector<int> shapes = {1, 2, 3});

  std::size_t shape_count() const override { return shapes_.size(); }
  std::size_t generator_count(ShapeLabel s) const override { return box_rows(shapes_.at(s.index)).size(); }
  bool related(Generator a, Generator b) const override;
  std::pair<Generator, Generator> swap(Generator a, Generator b) const override;
  std::string label(Generator g) const override;

  Generator generator(const BoxRow& r) const;
  BoxRow box(Generator g) const;
  Monomial monomial(const std::vector<BoxRow>& rows) const;
  std::vector<BoxRow> rows_of(const Monomial& m) const;

 private:
  std::vector<int> shapes_;
};

struct PicardDegree {
  std::array<std::int64_t, 3> e{};
  auto operator<=>(const PicardDegree&) const = default;
};

struct SphericalDegree {
  std::array<unsigned, 2> a{};
  auto operator<=>(const SphericalDegree&) const = default;
};

/// Image of a spherical degree in the Picard lattice: σ1 = (1,1,-1), σ2 = (-1,1,1).
PicardDegree picard_of(const SphericalDegree& g);

/// The Cox ring datum: shape 0 holds s1, s2; shapes 1..3 hold box rows.
class CoxDatum : public Datum {
 public:
  CoxDatum() = default;

  std::size_t shape_count() const override { return 4; }
  std::size_t generator_count(ShapeLabel s) const override;
  bool related(Generator a, Generator b) const override;
  std::pair<Generator, Generator> swap(Generator a, Generator b) const override;
  unsigned valuation(Generator g) const override { return g.shape.index == 0 ? 1 : 0; }
  using Datum::valuation;
  std::string label(Generator g) const override;
  /// Picard weight.
  std::vector<std::int64_t> grading(const Monomial& m) const override;
  /// Equal Picard weight, then smaller vanishing, or equal vanishing and the C(Y) order.
  bool monomial_leq(const Monomial& m, const Monomial& n) const override;
  std::optional<bool> fast_standard(const FormalMonomial& m) const override;

  static Generator s(int i) { return Generator{ShapeLabel{0}, static_cast<std::uint32_t>(i - 1)}; }
  Generator generator(const BoxRow& r) const;
  BoxRow box(Generator g) const;
  Monomial monomial(const SphericalDegree& gamma, const std::vector<BoxRow>& rows) const;
  SphericalDegree vanishing(const Monomial& m) const;
  std::vector<BoxRow> box_part(const Monomial& m) const;
  PicardDegree weight(const Monomial& m) const;

  /// Every monomial of Picard weight E.
  std::vector<Monomial> monomials_of_weight(const PicardDegree& E) const;
};

std::vector<StraighteningRule> coxy_relations(const BoxDatum& d);
std::vector<StraighteningRule> cox_relations(const CoxDatum& d);
/// C(Y) rules read in the Cox datum (s-variables free).
std::vector<StraighteningRule> lift_to_cox(const std::vector<StraighteningRule>& rules, const BoxDatum& from,
                                           const CoxDatum& to);

/// [ij] -> x_i y_j, [i·] -> x_i, [·j] -> y_j.
Rational evaluate_box(const LinearCombination& p, const BoxDatum& d, const std::array<Rational, 2>& x,
                      const std::array<Rational, 2>& y);
/// Every rule vanishes (lhs - rhs) at `trials` random points.
bool coxy_evaluation_check(const std::vector<StraighteningRule>& rules, const BoxDatum& d, std::size_t trials,
                           std::uint64_t seed);

/// Standard monomials of Picard weight E; `bound` caps |γ| when non-negative.
std::size_t cox_hilbert(const PicardDegree& E, long bound = -1);
Integer brion_dimension(const PicardDegree& E);
/// Standard monomials whose vanishing lies in ℕI; I ⊂ {1, 2}.
std::size_t cox_orbit_hilbert(const PicardDegree& E, const std::set<int>& I);
Integer brion_orbit_dimension(const PicardDegree& E, const std::set<int>& I);

struct CoxDegreeEntry {
  PicardDegree E;
  std::size_t generic = 0;  // standard monomials of C(X)
  std::size_t special = 0;  // monomials outside the special-fiber initial ideal
  Integer brion;
  bool ok() const { return generic == special && brion == generic; }
};

struct CoxDegenerationReport {
  bool rules_match = false;
  std::vector<StraighteningRule> degenerate_rules;
  std::vector<CoxDegreeEntry> entries;
  std::size_t mismatches() const;
};

CoxDegenerationReport cox_degenerate_and_compare(unsigned max_coeff);

}  // namespace smt
