#pragma once

#include "smt/core.hpp"
#include "smt/typea.hpp"

#include <map>
#include <optional>
#include <random>
#include <set>
#include <vector>

namespace smt {

struct SignedRow {
  int sign = 0;
  std::optional<Row> row;
};

/// Sign of the sorting permutation and the sorted row; sign 0 on repeats.
SignedRow normalize_bracket(const std::vector<int>& bracket, int ell);

/// Products of rows with exact coefficients, keyed by the row sequence.
using TableauPolynomial = std::map<std::vector<Row>, Rational>;

void add_term(TableauPolynomial& p, const std::vector<Row>& rows, const Rational& c);

/// 1-based index t of the first violated column condition, or nullopt if R ⟵ S.
/// Counted from the left when len(R) >= len(S) and from the right otherwise.
std::optional<std::size_t> index_of_violation(const Row& r, const Row& s);

/// Σ ±[..][..] over shuffle representatives; the identity term is +[R][S].
TableauPolynomial shuffling_relation(const Row& r, const Row& s);

/// Expresses [R][S] through weakly standard pairs of the same shapes.
TableauPolynomial straighten_pair(const Row& r, const Row& s);

/// Type-A rule source: pair rules come from straighten_pair, longer
/// minimally non-standard monomials get rules derived from a swap witness.
/// Not thread-safe; use one per thread.
class Straightener : public RuleSource {
 public:
  explicit Straightener(const RowDatum& d) : d_(d), oracle_(d) {}

  const LinearCombination* rule_for(const Monomial& lhs) override;
  LinearCombination straighten(const Monomial& m);
  TableauPolynomial straighten(const std::vector<Row>& rows);
  std::vector<StraighteningRule> generated_rules() const;
  StandardOracle& oracle() { return oracle_; }
  const RowDatum& datum() const { return d_; }

  std::size_t substitution_cap = 1'000'000;

 private:
  LinearCombination derive(const Monomial& lhs);
  LinearCombination derive_along(const Monomial& lhs, const std::vector<FormalMonomial>& path,
                                 const std::vector<std::size_t>& positions);
  LinearCombination lift(const std::vector<Row>& rest, const TableauPolynomial& p, const Rational& c);

  const RowDatum& d_;
  StandardOracle oracle_;
  std::map<Monomial, LinearCombination> rules_;
  std::set<Monomial> pending_;
};

/// Straightening of an adapted tableau into standard tableaux.
TableauPolynomial straighten_tableau(const Tableau& t);

TableauPolynomial to_tableau_polynomial(const LinearCombination& lc, const RowDatum& d);

using RationalMatrix = std::vector<std::vector<Rational>>;

Rational determinant(RationalMatrix a);
std::size_t rank(RationalMatrix a);
/// Minor with rows R and columns 1..len(R).
Rational plucker_evaluate(const Row& r, const RationalMatrix& m);
Rational evaluate(const TableauPolynomial& p, const RationalMatrix& m);
/// Square matrix with integer entries uniform in [-9, 9].
RationalMatrix random_matrix(std::size_t n, std::mt19937_64& rng);
std::vector<RationalMatrix> random_matrices(std::size_t n, std::size_t count, std::uint64_t seed);

bool verify_polynomial_identity(const TableauPolynomial& p, std::size_t trials, std::uint64_t seed);

/// Row i holds the values of every tableau at matrix i.
RationalMatrix evaluation_matrix(const std::vector<std::vector<Row>>& tableaux,
                                 const std::vector<RationalMatrix>& points);
RationalMatrix evaluation_matrix_serial(const std::vector<std::vector<Row>>& tableaux,
                                        const std::vector<RationalMatrix>& points);

}  // namespace smt
