#include "smt/io.hpp"

#include <sstream>

namespace smt {

namespace {

int as_int(const json& j, const char* what) {
  if (!j.is_number_integer()) throw InputError(std::string(what) + " must be an integer");
  return j.get<int>();
}

json integer_json(const Integer& z) {
  if (z.fits_slong_p()) return json(z.get_si());
  return json(z.get_str());
}

}  // namespace

json to_json(const Row& r) { return json(r.entries); }

Row row_from_json(const json& j, int ell) {
  if (!j.is_array()) throw InputError("a row must be an array of integers");
  std::vector<int> e;
  for (const auto& x : j) e.push_back(as_int(x, "row entry"));
  try {
    return make_row(std::move(e), ell);
  } catch (const PreconditionViolation& ex) {
    throw InputError(ex.what());
  }
}

std::vector<Row> rows_from_json(const json& j, int ell) {
  if (!j.is_array()) throw InputError("rows must be an array of arrays");
  std::vector<Row> out;
  for (const auto& r : j) out.push_back(row_from_json(r, ell));
  return out;
}

json rows_to_json(const std::vector<Row>& rows) {
  json a = json::array();
  for (const auto& r : rows) a.push_back(to_json(r));
  return a;
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      int v = std::stoi(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::exception&) {
      throw InputError("not an integer list: " + text);
    }
  }
  if (out.empty()) throw InputError("empty integer list");
  return out;
}

std::vector<Row> parse_rows_shorthand(const std::string& text, int ell) {
  std::vector<Row> rows;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ';')) {
    std::vector<int> e;
    if (item.find(',') != std::string::npos) {
      e = parse_int_list(item);
    } else {
      for (char c : item) {
        if (c < '0' || c > '9') throw InputError("bad row shorthand: " + text);
        e.push_back(c - '0');
      }
    }
    try {
      rows.push_back(make_row(std::move(e), ell));
    } catch (const PreconditionViolation& ex) {
      throw InputError(std::string(ex.what()) + " in " + text);
    }
  }
  if (rows.empty()) throw InputError("no rows given");
  return rows;
}

json to_json(const Tableau& t) {
  return json{{"ell", t.rows.empty() ? 0 : t.rows.front().ell},
              {"reference_shape", t.reference.shapes},
              {"rows", rows_to_json(t.rows)}};
}

Tableau tableau_from_json(const json& j) {
  if (!j.is_object() || !j.contains("ell") || !j.contains("reference_shape") || !j.contains("rows"))
    throw InputError("a tableau needs ell, reference_shape and rows");
  const int ell = as_int(j.at("ell"), "ell");
  Tableau t;
  for (const auto& k : j.at("reference_shape")) t.reference.shapes.push_back(as_int(k, "reference shape entry"));
  t.rows = rows_from_json(j.at("rows"), ell);
  return t;
}

json to_json(const TableauPolynomial& p, int ell) {
  json terms = json::array();
  for (const auto& [rows, c] : p) terms.push_back(json{{"rows", rows_to_json(rows)}, {"coefficient", to_string(c)}});
  return json{{"ell", ell}, {"terms", terms}};
}

TableauPolynomial polynomial_from_json(const json& j) {
  if (!j.is_object() || !j.contains("ell") || !j.contains("terms") || !j.at("terms").is_array())
    throw InputError("a polynomial needs ell and terms");
  const int ell = as_int(j.at("ell"), "ell");
  TableauPolynomial p;
  for (const auto& t : j.at("terms")) {
    if (!t.is_object() || !t.contains("rows") || !t.contains("coefficient") || !t.at("coefficient").is_string())
      throw InputError("a term needs rows and a coefficient string");
    Rational c;
    try {
      c = parse_rational(t.at("coefficient").get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw InputError(e.what());
    }
    add_term(p, rows_from_json(t.at("rows"), ell), c);
  }
  return p;
}

json to_json(const BoxRow& r) { return json::array({static_cast<int>(r.left), static_cast<int>(r.right)}); }

BoxRow box_row_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2) throw InputError("a box row is a pair [left, right]");
  try {
    return make_box_row(as_int(j[0], "box entry"), as_int(j[1], "box entry"));
  } catch (const PreconditionViolation& e) {
    throw InputError(e.what());
  }
}

json cox_monomial_to_json(const Monomial& m, const CoxDatum& d) {
  const auto g = d.vanishing(m);
  json rows = json::array();
  for (const auto& r : d.box_part(m)) rows.push_back(to_json(r));
  return json{{"s", {g.a[0], g.a[1]}}, {"rows", rows}};
}

json to_json(const StraighteningRule& rule, const CoxDatum& d) {
  json rhs = json::array();
  for (const auto& [m, c] : rule.rhs) {
    json t = cox_monomial_to_json(m, d);
    t["coefficient"] = to_string(c);
    rhs.push_back(t);
  }
  return json{{"lhs", cox_monomial_to_json(rule.lhs, d)}, {"rhs", rhs}};
}

json to_json(const StraighteningRule& rule, const RowDatum& d) {
  json rhs = json::array();
  for (const auto& [m, c] : rule.rhs)
    rhs.push_back(json{{"rows", rows_to_json(d.rows_of(m))}, {"coefficient", to_string(c)}});
  return json{{"lhs", rows_to_json(d.rows_of(rule.lhs))}, {"rhs", rhs}};
}

json to_json(const PicardDegree& e) { return json::array({e.e[0], e.e[1], e.e[2]}); }

json to_json(const HilbertRow& r) {
  return json{{"multidegree", r.md.counts},
              {"count", r.count},
              {"weyl_dim", integer_json(r.weyl)},
              {"ssyt_count", integer_json(r.ssyt)},
              {"agrees", r.agrees()}};
}

json to_json(const FlatnessReport& r) {
  json entries = json::array();
  for (const auto& e : r.entries)
    entries.push_back(json{{"multidegree", e.md.counts},
                           {"generic", e.generic},
                           {"evaluation_rank", e.evaluation_rank},
                           {"special", e.special},
                           {"weyl_dim", integer_json(e.weyl)},
                           {"ok", e.ok()}});
  return json{{"entries", entries}, {"mismatches", r.mismatches()}};
}

json to_json(const MonomialIdealBasis& b) {
  json by = json::object();
  for (const auto& [deg, gens] : b.by_degree) {
    json list = json::array();
    for (const auto& g : gens) list.push_back(rows_to_json(g));
    by[std::to_string(deg)] = list;
  }
  return json{{"generators", by}, {"count", b.size()}};
}

json to_json(const CoxDegenerationReport& r) {
  CoxDatum d;
  json rules = json::array();
  for (const auto& x : r.degenerate_rules) rules.push_back(to_json(x, d));
  json entries = json::array();
  for (const auto& e : r.entries)
    entries.push_back(json{{"E", to_json(e.E)},
                           {"generic", e.generic},
                           {"special", e.special},
                           {"brion_dimension", integer_json(e.brion)},
                           {"ok", e.ok()}});
  return json{{"rules_match", r.rules_match},
              {"special_fiber_rules", rules},
              {"entries", entries},
              {"mismatches", r.mismatches()}};
}

}  // namespace smt
