#pragma once

#include "smt/cox.hpp"
#include "smt/multicone.hpp"
#include "smt/straightening.hpp"
#include "smt/typea.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace smt {

using json = nlohmann::json;

/// Raised for malformed documents and command-line values.
struct InputError : Error {
  using Error::Error;
};

json to_json(const Row& r);
Row row_from_json(const json& j, int ell);
std::vector<Row> rows_from_json(const json& j, int ell);
json rows_to_json(const std::vector<Row>& rows);

/// "24;134;2" or "2,4;1,3,4".
std::vector<Row> parse_rows_shorthand(const std::string& text, int ell);
std::vector<int> parse_int_list(const std::string& text);

json to_json(const Tableau& t);
Tableau tableau_from_json(const json& j);

/// {"ell", "terms": [{"rows", "coefficient": "p/q"}]}
json to_json(const TableauPolynomial& p, int ell);
TableauPolynomial polynomial_from_json(const json& j);

json to_json(const BoxRow& r);
BoxRow box_row_from_json(const json& j);
/// Cox or C(Y) monomial: {"s": [a1, a2], "rows": [[l, r], ...]}
json cox_monomial_to_json(const Monomial& m, const CoxDatum& d);
json to_json(const StraighteningRule& rule, const CoxDatum& d);
json to_json(const StraighteningRule& rule, const RowDatum& d);

json to_json(const PicardDegree& e);
json to_json(const HilbertRow& r);
json to_json(const FlatnessReport& r);
json to_json(const MonomialIdealBasis& b);
json to_json(const CoxDegenerationReport& r);

}  // namespace smt
