#pragma once

#include "smt/rational.hpp"

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace smt {

struct ShapeLabel {
  std::uint32_t index = 0;
  auto operator<=>(const ShapeLabel&) const = default;
};

struct Generator {
  ShapeLabel shape;
  std::uint32_t id = 0;
  auto operator<=>(const Generator&) const = default;
};

/// Ordered product of generators (a word in the free associative algebra).
using FormalMonomial = std::vector<Generator>;

/// Commutative monomial: factors kept sorted by (shape, id).
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<Generator> factors);

  const std::vector<Generator>& factors() const { return factors_; }
  std::size_t degree() const { return factors_.size(); }
  bool empty() const { return factors_.empty(); }

  Monomial operator*(const Monomial& other) const;
  bool divides(const Monomial& other) const;
  /// other / *this; precondition divides(other).
  Monomial quotient_of(const Monomial& other) const;
  FormalMonomial formal() const { return factors_; }

  auto operator<=>(const Monomial&) const = default;

 private:
  std::vector<Generator> factors_;
};

using LinearCombination = std::map<Monomial, Rational>;

void add_term(LinearCombination& lc, const Monomial& m, const Rational& c);
LinearCombination scaled(const LinearCombination& lc, const Rational& c);

struct StraighteningRule {
  Monomial lhs;
  LinearCombination rhs;
  bool operator==(const StraighteningRule&) const = default;
};

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct DatumMismatch : Error {
  using Error::Error;
};
struct PreconditionViolation : Error {
  using Error::Error;
};
struct InvalidRule : Error {
  using Error::Error;
};
struct MissingRule : Error {
  MissingRule(const std::string& what, Monomial m) : Error(what), monomial(std::move(m)) {}
  Monomial monomial;
};
struct CapExceeded : Error {
  using Error::Error;
};

/// A multiset SMT datum. Within each shape the generator ids must form a
/// linear extension of the relation `related`; the default monomial order
/// depends on it.
class Datum {
 public:
  virtual ~Datum() = default;

  virtual std::size_t shape_count() const = 0;
  virtual std::size_t generator_count(ShapeLabel shape) const = 0;
  /// a ⟵ b
  virtual bool related(Generator a, Generator b) const = 0;
  /// Swap map; precondition related(a, b).
  virtual std::pair<Generator, Generator> swap(Generator a, Generator b) const = 0;
  virtual unsigned valuation(Generator) const { return 0; }
  virtual std::string label(Generator g) const;

  /// Grading vector; default is the number of factors per shape.
  virtual std::vector<std::int64_t> grading(const Monomial& m) const;
  /// The monomial order: m <= n. Default: equal grading and the ≤_t-minimum
  /// of the symmetric difference (generators ordered by (shape, id)) lies in n.
  virtual bool monomial_leq(const Monomial& m, const Monomial& n) const;

  /// Optional fast standardness predicate for formal monomials.
  virtual std::optional<bool> fast_standard(const FormalMonomial&) const { return std::nullopt; }

  bool contains(Generator g) const;
  void check(const FormalMonomial& m) const;
  std::vector<Generator> generators() const;
  unsigned valuation(const Monomial& m) const;
};

bool lex_refinement_leq(const Monomial& m, const Monomial& n);

bool is_weakly_standard(const FormalMonomial& m, const Datum& d);

struct StandardnessReport {
  bool standard = true;
  bool shape_order_ok = true;
  /// Swap positions leading from the input to the first non-weakly-standard
  /// monomial found (empty if standard or the input is already bad).
  std::vector<std::size_t> witness_positions;
  std::vector<FormalMonomial> witness_path;
};

/// Definitional check: breadth-first over all adjacent swaps with memoization.
StandardnessReport check_standard(const FormalMonomial& m, const Datum& d);
bool is_standard(const FormalMonomial& m, const Datum& d);
bool is_minimally_nonstandard(const FormalMonomial& m, const Datum& d);

/// All swap paths from m to a first non-weakly-standard monomial, in BFS
/// discovery order. Equal-shape swaps are skipped.
std::vector<std::pair<std::vector<FormalMonomial>, std::vector<std::size_t>>>
swap_witnesses(const FormalMonomial& m, const Datum& d);

/// Memoized standardness of commutative monomials (canonical order is the
/// only candidate chain). One instance per thread.
class StandardOracle {
 public:
  explicit StandardOracle(const Datum& d, bool use_fast_path = true) : d_(d), fast_(use_fast_path) {}
  const Datum& datum() const { return d_; }
  bool standard(const Monomial& m);
  bool minimally_nonstandard(const Monomial& m);
  /// Minimally non-standard divisors, sorted by canonical encoding.
  std::vector<Monomial> minimal_nonstandard_divisors(const Monomial& m);

 private:
  const Datum& d_;
  bool fast_;
  std::map<Monomial, bool> cache_;
};

class RuleSource {
 public:
  virtual ~RuleSource() = default;
  /// Rhs for a minimally non-standard lhs, or nullptr if none is known.
  virtual const LinearCombination* rule_for(const Monomial& lhs) = 0;
};

/// Explicit rule list; each rule is validated on insertion.
class RuleSet : public RuleSource {
 public:
  explicit RuleSet(const Datum& d) : d_(d) {}
  RuleSet(const Datum& d, const std::vector<StraighteningRule>& rules);
  void add(const StraighteningRule& rule);
  const LinearCombination* rule_for(const Monomial& lhs) override;
  std::vector<StraighteningRule> rules() const;
  std::size_t size() const { return rules_.size(); }

 private:
  const Datum& d_;
  std::map<Monomial, LinearCombination> rules_;
};

/// Throws InvalidRule unless the lhs is non-standard, every rhs term is
/// standard and every rhs term is strictly above the lhs.
void validate_rule(const StraighteningRule& rule, StandardOracle& oracle);

struct NormalFormOptions {
  std::size_t substitution_cap = 1'000'000;
  /// Monomials left untouched (used while deriving a rule for them).
  const std::set<Monomial>* frozen = nullptr;
};

LinearCombination normal_form(const LinearCombination& p, RuleSource& rules, StandardOracle& oracle,
                              const NormalFormOptions& opt = {});
LinearCombination normal_form(const Monomial& m, RuleSource& rules, const Datum& d,
                              const NormalFormOptions& opt = {});

std::vector<StraighteningRule> rees_degenerate(const std::vector<StraighteningRule>& rules, const Datum& d);

/// Every weakly standard formal monomial of length <= degree with
/// non-decreasing shape sequence is standard.
bool weakly_equals_standard_upto(const Datum& d, std::size_t degree);

/// Checks φ∘φ = id and φ_{i,i} = id on every related pair. Returns the
/// offending pairs.
std::vector<std::pair<Generator, Generator>> swap_axiom_violations(const Datum& d);

/// Checks that every rewriting order gives the same normal form.
class ConfluenceChecker {
 public:
  ConfluenceChecker(RuleSource& rules, StandardOracle& oracle) : rules_(rules), oracle_(oracle) {}
  /// Unique normal form of m, or nullopt if two rewriting choices diverge.
  std::optional<LinearCombination> unique_normal_form(const Monomial& m);
  std::size_t divergences() const { return divergences_; }

 private:
  RuleSource& rules_;
  StandardOracle& oracle_;
  std::map<Monomial, std::optional<LinearCombination>> memo_;
  std::size_t divergences_ = 0;
};

/// All multisets of `degree` generators drawn from `pool` (sorted).
void for_each_multiset(const std::vector<Generator>& pool, std::size_t degree,
                       const std::function<void(const Monomial&)>& fn);

std::string to_string(const Monomial& m, const Datum& d);

}  // namespace smt
