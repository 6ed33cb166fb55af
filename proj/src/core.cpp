#include "smt/core.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

namespace smt {

Monomial::Monomial(std::vector<Generator> factors) : factors_(std::move(factors)) {
  std::sort(factors_.begin(), factors_.end());
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial out;
  out.factors_.reserve(factors_.size() + other.factors_.size());
  std::merge(factors_.begin(), factors_.end(), other.factors_.begin(), other.factors_.end(),
             std::back_inserter(out.factors_));
  return out;
}

bool Monomial::divides(const Monomial& other) const {
  return std::includes(other.factors_.begin(), other.factors_.end(), factors_.begin(), factors_.end());
}

Monomial Monomial::quotient_of(const Monomial& other) const {
  Monomial out;
  std::set_difference(other.factors_.begin(), other.factors_.end(), factors_.begin(), factors_.end(),
                      std::back_inserter(out.factors_));
  return out;
}

void add_term(LinearCombination& lc, const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = lc.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) lc.erase(it);
  }
}

LinearCombination scaled(const LinearCombination& lc, const Rational& c) {
  LinearCombination out;
  if (c == 0) return out;
  for (const auto& [m, v] : lc) out.emplace(m, v * c);
  return out;
}

std::string Datum::label(Generator g) const {
  return "g" + std::to_string(g.shape.index) + "." + std::to_string(g.id);
}

std::vector<std::int64_t> Datum::grading(const Monomial& m) const {
  std::vector<std::int64_t> g(shape_count(), 0);
  for (const auto& x : m.factors()) ++g[x.shape.index];
  return g;
}

bool lex_refinement_leq(const Monomial& m, const Monomial& n) {
  const auto& a = m.factors();
  const auto& b = n.factors();
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] == b[j]) {
      ++i;
      ++j;
    } else {
      return b[j] < a[i];
    }
  }
  if (i == a.size()) return true;
  return false;
}

bool Datum::monomial_leq(const Monomial& m, const Monomial& n) const {
  return grading(m) == grading(n) && lex_refinement_leq(m, n);
}

bool Datum::contains(Generator g) const {
  return g.shape.index < shape_count() && g.id < generator_count(g.shape);
}

void Datum::check(const FormalMonomial& m) const {
  for (const auto& g : m)
    if (!contains(g)) throw DatumMismatch("generator " + label(g) + " does not belong to the datum");
}

std::vector<Generator> Datum::generators() const {
  std::vector<Generator> out;
  for (std::uint32_t s = 0; s < shape_count(); ++s)
    for (std::uint32_t id = 0; id < generator_count(ShapeLabel{s}); ++id) out.push_back({ShapeLabel{s}, id});
  return out;
}

unsigned Datum::valuation(const Monomial& m) const {
  unsigned v = 0;
  for (const auto& g : m.factors()) v += valuation(g);
  return v;
}

namespace {

bool weakly(const FormalMonomial& m, const Datum& d) {
  for (std::size_t i = 0; i + 1 < m.size(); ++i)
    if (!d.related(m[i], m[i + 1])) return false;
  return true;
}

bool shapes_nondecreasing(const FormalMonomial& m) {
  for (std::size_t i = 0; i + 1 < m.size(); ++i)
    if (m[i + 1].shape < m[i].shape) return false;
  return true;
}

FormalMonomial swapped(const FormalMonomial& f, std::size_t i, const Datum& d) {
  FormalMonomial g = f;
  auto [a, b] = d.swap(f[i], f[i + 1]);
  g[i] = a;
  g[i + 1] = b;
  return g;
}

}  // namespace

bool is_weakly_standard(const FormalMonomial& m, const Datum& d) {
  d.check(m);
  return weakly(m, d);
}

StandardnessReport check_standard(const FormalMonomial& m, const Datum& d) {
  d.check(m);
  StandardnessReport rep;
  if (!shapes_nondecreasing(m)) {
    rep.standard = false;
    rep.shape_order_ok = false;
    return rep;
  }
  if (!weakly(m, d)) {
    rep.standard = false;
    return rep;
  }
  std::map<FormalMonomial, std::pair<FormalMonomial, std::size_t>> parent;
  parent.emplace(m, std::pair{FormalMonomial{}, std::size_t{0}});
  std::deque<FormalMonomial> queue{m};
  while (!queue.empty()) {
    FormalMonomial f = std::move(queue.front());
    queue.pop_front();
    for (std::size_t i = 0; i + 1 < f.size(); ++i) {
      if (f[i].shape == f[i + 1].shape) continue;
      FormalMonomial g = swapped(f, i, d);
      if (parent.count(g)) continue;
      parent.emplace(g, std::pair{f, i});
      if (!weakly(g, d)) {
        rep.standard = false;
        std::vector<FormalMonomial> path{g};
        while (path.back() != m) {
          const auto& [p, pos] = parent.at(path.back());
          rep.witness_positions.push_back(pos);
          path.push_back(p);
        }
        std::reverse(path.begin(), path.end());
        std::reverse(rep.witness_positions.begin(), rep.witness_positions.end());
        rep.witness_path = std::move(path);
        return rep;
      }
      queue.push_back(std::move(g));
    }
  }
  return rep;
}

bool is_standard(const FormalMonomial& m, const Datum& d) { return check_standard(m, d).standard; }

bool is_minimally_nonstandard(const FormalMonomial& m, const Datum& d) {
  if (is_standard(m, d)) return false;
  const std::size_t n = m.size();
  if (n > 20) throw PreconditionViolation("monomial too long for subsequence search");
  for (std::uint32_t mask = 1; mask + 1 < (1u << n); ++mask) {
    FormalMonomial sub;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (1u << i)) sub.push_back(m[i]);
    if (!is_standard(sub, d)) return false;
  }
  return true;
}

std::vector<std::pair<std::vector<FormalMonomial>, std::vector<std::size_t>>>
swap_witnesses(const FormalMonomial& m, const Datum& d) {
  std::vector<std::pair<std::vector<FormalMonomial>, std::vector<std::size_t>>> out;
  std::map<FormalMonomial, std::pair<FormalMonomial, std::size_t>> parent;
  parent.emplace(m, std::pair{FormalMonomial{}, std::size_t{0}});
  std::deque<FormalMonomial> queue{m};
  while (!queue.empty()) {
    FormalMonomial f = std::move(queue.front());
    queue.pop_front();
    for (std::size_t i = 0; i + 1 < f.size(); ++i) {
      if (f[i].shape == f[i + 1].shape) continue;
      FormalMonomial g = swapped(f, i, d);
      if (parent.count(g)) continue;
      parent.emplace(g, std::pair{f, i});
      if (!weakly(g, d)) {
        std::vector<FormalMonomial> path{g};
        std::vector<std::size_t> pos;
        while (path.back() != m) {
          const auto& [p, at] = parent.at(path.back());
          pos.push_back(at);
          path.push_back(p);
        }
        std::reverse(path.begin(), path.end());
        std::reverse(pos.begin(), pos.end());
        out.emplace_back(std::move(path), std::move(pos));
        continue;
      }
      queue.push_back(std::move(g));
    }
  }
  return out;
}

bool StandardOracle::standard(const Monomial& m) {
  if (m.degree() <= 1) return true;
  auto it = cache_.find(m);
  if (it != cache_.end()) return it->second;
  FormalMonomial f = m.formal();
  bool s;
  std::optional<bool> fast = fast_ ? d_.fast_standard(f) : std::nullopt;
  s = fast ? *fast : is_standard(f, d_);
  cache_.emplace(m, s);
  return s;
}

std::vector<Monomial> StandardOracle::minimal_nonstandard_divisors(const Monomial& m) {
  std::vector<Monomial> out;
  if (standard(m)) return out;
  const auto& f = m.factors();
  const std::size_t n = f.size();
  if (n > 24) throw PreconditionViolation("monomial too long for divisor search");
  const std::uint32_t full = 1u << n;
  std::vector<char> nonstd(full, 0), below(full, 0);
  std::set<Monomial> seen;
  for (std::uint32_t mask = 1; mask < full; ++mask) {
    std::vector<Generator> sub;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (1u << i)) sub.push_back(f[i]);
    Monomial sm(std::move(sub));
    nonstd[mask] = !standard(sm);
    for (std::size_t i = 0; i < n && !below[mask]; ++i) {
      std::uint32_t bit = 1u << i;
      if ((mask & bit) && mask != bit) {
        std::uint32_t s = mask ^ bit;
        if (nonstd[s] || below[s]) below[mask] = 1;
      }
    }
    if (nonstd[mask] && !below[mask] && seen.insert(sm).second) out.push_back(std::move(sm));
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool StandardOracle::minimally_nonstandard(const Monomial& m) {
  auto divs = minimal_nonstandard_divisors(m);
  return divs.size() == 1 && divs.front() == m;
}

void validate_rule(const StraighteningRule& rule, StandardOracle& oracle) {
  const Datum& d = oracle.datum();
  d.check(rule.lhs.formal());
  if (oracle.standard(rule.lhs)) throw InvalidRule("rule lhs " + to_string(rule.lhs, d) + " is standard");
  for (const auto& [m, c] : rule.rhs) {
    d.check(m.formal());
    if (c == 0) throw InvalidRule("zero coefficient in rule for " + to_string(rule.lhs, d));
    if (!oracle.standard(m))
      throw InvalidRule("rhs term " + to_string(m, d) + " of rule for " + to_string(rule.lhs, d) + " is not standard");
    if (m == rule.lhs || !d.monomial_leq(rule.lhs, m))
      throw InvalidRule("rhs term " + to_string(m, d) + " is not above " + to_string(rule.lhs, d));
  }
}

RuleSet::RuleSet(const Datum& d, const std::vector<StraighteningRule>& rules) : d_(d) {
  for (const auto& r : rules) add(r);
}

void RuleSet::add(const StraighteningRule& rule) {
  StandardOracle oracle(d_);
  validate_rule(rule, oracle);
  rules_[rule.lhs] = rule.rhs;
}

const LinearCombination* RuleSet::rule_for(const Monomial& lhs) {
  auto it = rules_.find(lhs);
  return it == rules_.end() ? nullptr : &it->second;
}

std::vector<StraighteningRule> RuleSet::rules() const {
  std::vector<StraighteningRule> out;
  for (const auto& [l, r] : rules_) out.push_back({l, r});
  return out;
}

LinearCombination normal_form(const LinearCombination& p, RuleSource& rules, StandardOracle& oracle,
                              const NormalFormOptions& opt) {
  const Datum& d = oracle.datum();
  LinearCombination work = p, result;
  std::size_t steps = 0;
  auto frozen = [&](const Monomial& m) { return opt.frozen && opt.frozen->count(m); };
  while (!work.empty()) {
    // Largest encoding first: with the default order that is the order-minimal term.
    auto it = std::prev(work.end());
    Monomial m = it->first;
    Rational c = it->second;
    work.erase(it);
    if (frozen(m) || oracle.standard(m)) {
      add_term(result, m, c);
      continue;
    }
    const Monomial* divisor = nullptr;
    auto divs = oracle.minimal_nonstandard_divisors(m);
    for (const auto& x : divs)
      if (!frozen(x)) {
        divisor = &x;
        break;
      }
    if (!divisor) {
      add_term(result, m, c);
      continue;
    }
    const LinearCombination* rhs = rules.rule_for(*divisor);
    if (!rhs) throw MissingRule("no straightening rule for " + to_string(*divisor, d), *divisor);
    Monomial rest = divisor->quotient_of(m);
    for (const auto& [t, v] : *rhs) add_term(work, rest * t, c * v);
    if (++steps > opt.substitution_cap) throw CapExceeded("normal_form substitution cap exceeded");
  }
  return result;
}

LinearCombination normal_form(const Monomial& m, RuleSource& rules, const Datum& d, const NormalFormOptions& opt) {
  StandardOracle oracle(d);
  return normal_form(LinearCombination{{m, Rational(1)}}, rules, oracle, opt);
}

std::vector<StraighteningRule> rees_degenerate(const std::vector<StraighteningRule>& rules, const Datum& d) {
  std::vector<StraighteningRule> out;
  for (const auto& r : rules) {
    StraighteningRule k{r.lhs, {}};
    const unsigned v = d.valuation(r.lhs);
    for (const auto& [m, c] : r.rhs)
      if (d.valuation(m) == v) k.rhs.emplace(m, c);
    out.push_back(std::move(k));
  }
  return out;
}

bool weakly_equals_standard_upto(const Datum& d, std::size_t degree) {
  if (degree == 0) throw PreconditionViolation("degree must be at least 1");
  const auto gens = d.generators();
  FormalMonomial cur;
  std::function<bool()> rec = [&]() -> bool {
    if (cur.size() >= 2 && !is_standard(cur, d)) return false;
    if (cur.size() == degree) return true;
    for (const auto& g : gens) {
      if (!cur.empty() && (g.shape < cur.back().shape || !d.related(cur.back(), g))) continue;
      cur.push_back(g);
      bool ok = rec();
      cur.pop_back();
      if (!ok) return false;
    }
    return true;
  };
  return rec();
}

std::vector<std::pair<Generator, Generator>> swap_axiom_violations(const Datum& d) {
  std::vector<std::pair<Generator, Generator>> bad;
  const auto gens = d.generators();
  for (const auto& a : gens)
    for (const auto& b : gens) {
      if (!d.related(a, b)) continue;
      auto [x, y] = d.swap(a, b);
      bool ok = x.shape == b.shape && y.shape == a.shape && d.related(x, y) && d.swap(x, y) == std::pair{a, b};
      if (a.shape == b.shape) ok = ok && x == a && y == b;
      if (!ok) bad.emplace_back(a, b);
    }
  return bad;
}

std::optional<LinearCombination> ConfluenceChecker::unique_normal_form(const Monomial& m) {
  auto it = memo_.find(m);
  if (it != memo_.end()) return it->second;
  std::optional<LinearCombination> answer;
  if (oracle_.standard(m)) {
    answer = LinearCombination{{m, Rational(1)}};
  } else {
    bool first = true;
    for (const auto& div : oracle_.minimal_nonstandard_divisors(m)) {
      const LinearCombination* rhs = rules_.rule_for(div);
      if (!rhs) throw MissingRule("no straightening rule for " + to_string(div, oracle_.datum()), div);
      Monomial rest = div.quotient_of(m);
      std::optional<LinearCombination> branch = LinearCombination{};
      for (const auto& [t, c] : *rhs) {
        auto sub = unique_normal_form(rest * t);
        if (!sub) {
          branch.reset();
          break;
        }
        for (const auto& [u, v] : *sub) add_term(*branch, u, c * v);
      }
      if (!branch || (!first && branch != answer)) {
        if (branch) ++divergences_;
        answer.reset();
        break;
      }
      answer = std::move(branch);
      first = false;
    }
  }
  memo_.emplace(m, answer);
  return answer;
}

void for_each_multiset(const std::vector<Generator>& pool, std::size_t degree,
                       const std::function<void(const Monomial&)>& fn) {
  std::vector<Generator> cur;
  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    if (cur.size() == degree) {
      fn(Monomial(cur));
      return;
    }
    for (std::size_t i = start; i < pool.size(); ++i) {
      cur.push_back(pool[i]);
      rec(i);
      cur.pop_back();
    }
  };
  rec(0);
}

std::string to_string(const Monomial& m, const Datum& d) {
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < m.factors().size(); ++i) os << (i ? "," : "") << d.label(m.factors()[i]);
  os << "}";
  return os.str();
}

}  // namespace smt
