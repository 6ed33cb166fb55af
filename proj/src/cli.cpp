#include "smt/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <map>
#include <ostream>

namespace smt::cli {

namespace {

enum class Kind { Int, Bool, IntArray, RowArray, Array, Object };

struct Field {
  Kind kind;
  bool required;
};

using Schema = std::map<std::string, Field>;

const std::map<std::string, Schema>& schemas() {
  static const std::map<std::string, Schema> s = {
      {"straighten",
       {{"ell", {Kind::Int, true}},
        {"reference_shape", {Kind::IntArray, true}},
        {"rows", {Kind::RowArray, true}},
        {"trials", {Kind::Int, false}},
        {"cap", {Kind::Int, false}},
        {"seed", {Kind::Int, false}}}},
      {"standard",
       {{"ell", {Kind::Int, true}}, {"reference_shape", {Kind::IntArray, true}}, {"rows", {Kind::RowArray, true}}}},
      {"enumerate",
       {{"ell", {Kind::Int, true}},
        {"reference_shape", {Kind::IntArray, true}},
        {"multidegree", {Kind::IntArray, true}},
        {"list", {Kind::Bool, false}}}},
      {"hilbert",
       {{"ell", {Kind::Int, true}}, {"reference_shape", {Kind::IntArray, true}}, {"max_total", {Kind::Int, true}}}},
      {"verify",
       {{"ell", {Kind::Int, false}},
        {"relations", {Kind::Array, false}},
        {"shuffles", {Kind::Bool, false}},
        {"trials", {Kind::Int, false}},
        {"seed", {Kind::Int, false}}}},
      {"discrete",
       {{"ell", {Kind::Int, true}}, {"reference_shape", {Kind::IntArray, true}}, {"max_degree", {Kind::Int, true}}}},
      {"cox", {{"range", {Kind::Int, true}}, {"orbit", {Kind::IntArray, false}}}},
      {"degenerate",
       {{"ell", {Kind::Int, false}},
        {"reference_shape", {Kind::IntArray, false}},
        {"max_total", {Kind::Int, false}},
        {"cox_max", {Kind::Int, false}},
        {"seed", {Kind::Int, false}}}},
      {"selftest", {{"seed", {Kind::Int, false}}}},
  };
  return s;
}

bool int_array(const json& j) {
  if (!j.is_array()) return false;
  for (const auto& x : j)
    if (!x.is_number_integer()) return false;
  return true;
}

bool matches(const json& j, Kind k) {
  switch (k) {
    case Kind::Int:
      return j.is_number_integer();
    case Kind::Bool:
      return j.is_boolean();
    case Kind::IntArray:
      return int_array(j);
    case Kind::RowArray:
      if (!j.is_array()) return false;
      for (const auto& r : j)
        if (!int_array(r)) return false;
      return true;
    case Kind::Array:
      return j.is_array();
    case Kind::Object:
      return j.is_object();
  }
  return false;
}

int get_int(const json& p, const char* key, int fallback) { return p.contains(key) ? p.at(key).get<int>() : fallback; }

std::uint64_t get_seed(const json& p) {
  return p.contains("seed") ? p.at("seed").get<std::uint64_t>() : 1;
}

ReferenceShape reference_of(const json& p, int ell) {
  ReferenceShape ref{p.at("reference_shape").get<std::vector<int>>()};
  try {
    ref.validate(ell);
  } catch (const PreconditionViolation& e) {
    throw InputError(e.what());
  }
  return ref;
}

int ell_of(const json& p) {
  const int ell = p.at("ell").get<int>();
  if (ell < 1) throw InputError("ell must be at least 1");
  return ell;
}

Outcome do_straighten(const json& p) {
  const int ell = ell_of(p);
  Tableau t{rows_from_json(p.at("rows"), ell), reference_of(p, ell)};
  if (!t.is_adapted()) throw InputError("rows are not adapted to the reference shape");
  RowDatum d(ell, t.reference);
  Straightener st(d);
  if (p.contains("cap")) {
    if (get_int(p, "cap", 0) < 0) throw InputError("cap must be non-negative");
    st.substitution_cap = static_cast<std::size_t>(get_int(p, "cap", 0));
  }
  TableauPolynomial expansion = st.straighten(t.rows);
  TableauPolynomial residual = expansion;
  add_term(residual, t.rows, Rational(-1));
  const int trials = get_int(p, "trials", 25);
  if (trials < 1) throw InputError("trials must be positive");
  const bool zero = verify_polynomial_identity(residual, trials, get_seed(p));
  return {json{{"input", to_json(t)}, {"expansion", to_json(expansion, ell)}, {"oracle_zero", zero}}, zero};
}

Outcome do_standard(const json& p) {
  const int ell = ell_of(p);
  Tableau t{rows_from_json(p.at("rows"), ell), reference_of(p, ell)};
  json doc{{"input", to_json(t)}, {"weakly_standard", rows_weakly_standard(t.rows)}, {"adapted", t.is_adapted()}};
  if (!t.is_adapted()) {
    doc["standard"] = false;
    return {doc, true};
  }
  RowDatum d(ell, t.reference);
  const auto rep = check_standard(d.formal(t.rows), d);
  doc["standard"] = rep.standard;
  doc["fast_path"] = is_standard_tableau(t);
  json witness = json::array();
  for (std::size_t i = 0; i < rep.witness_positions.size(); ++i)
    witness.push_back(json{{"tau", rep.witness_positions[i] + 1}, {"rows", rows_to_json(d.rows_of(rep.witness_path[i + 1]))}});
  doc["witness"] = witness;
  return {doc, true};
}

Outcome do_enumerate(const json& p) {
  const int ell = ell_of(p);
  const auto ref = reference_of(p, ell);
  Multidegree md;
  for (int c : p.at("multidegree").get<std::vector<int>>()) {
    if (c < 0) throw InputError("multidegree entries must be non-negative");
    md.counts.push_back(static_cast<unsigned>(c));
  }
  if (md.counts.size() != ref.shapes.size()) throw InputError("multidegree length must match the reference shape");
  const auto tabs = enumerate_standard(md, ref, ell);
  json doc{{"ell", ell}, {"reference_shape", ref.shapes}, {"multidegree", md.counts}, {"count", tabs.size()}};
  if (!p.contains("list") || p.at("list").get<bool>()) {
    json list = json::array();
    for (const auto& t : tabs) list.push_back(rows_to_json(t.rows));
    doc["tableaux"] = list;
  }
  return {doc, true};
}

Outcome do_hilbert(const json& p) {
  const int ell = ell_of(p);
  const auto ref = reference_of(p, ell);
  const int max_total = get_int(p, "max_total", 0);
  if (max_total < 0) throw InputError("max_total must be non-negative");
  json rows = json::array();
  bool all = true;
  for (const auto& r : hilbert_table(ref, ell, static_cast<unsigned>(max_total))) {
    rows.push_back(to_json(r));
    all = all && r.agrees();
  }
  return {json{{"ell", ell}, {"reference_shape", ref.shapes}, {"table", rows}, {"all_agree", all}}, all};
}

Outcome do_verify(const json& p) {
  const int trials = get_int(p, "trials", 10);
  if (trials < 1) throw InputError("trials must be positive");
  const auto seed = get_seed(p);
  json results = json::array();
  bool all = true;
  if (p.contains("relations")) {
    for (std::size_t i = 0; i < p.at("relations").size(); ++i) {
      const bool zero = verify_polynomial_identity(polynomial_from_json(p.at("relations")[i]), trials, seed);
      results.push_back(json{{"index", i}, {"zero", zero}});
      all = all && zero;
    }
  }
  if (p.contains("shuffles") && p.at("shuffles").get<bool>()) {
    if (!p.contains("ell")) throw InputError("shuffles needs ell");
    const int ell = ell_of(p);
    std::size_t count = 0, failures = 0;
    for (int k = 1; k <= ell; ++k)
      for (int h = 1; h <= ell; ++h)
        for (const auto& r : all_rows(ell, k))
          for (const auto& s : all_rows(ell, h)) {
            if (row_leq(r, s)) continue;
            ++count;
            if (!verify_polynomial_identity(shuffling_relation(r, s), trials, seed)) ++failures;
          }
    results.push_back(json{{"shuffling_relations", count}, {"failures", failures}});
    all = all && failures == 0;
  }
  return {json{{"results", results}, {"all_zero", all}}, all};
}

Outcome do_discrete(const json& p) {
  const int ell = ell_of(p);
  const auto ref = reference_of(p, ell);
  const int max_degree = get_int(p, "max_degree", 2);
  if (max_degree < 2) throw InputError("max_degree must be at least 2");
  json doc = to_json(discrete_ideal_generators(ref, ell, static_cast<std::size_t>(max_degree)));
  doc["ell"] = ell;
  doc["reference_shape"] = ref.shapes;
  return {doc, true};
}

Outcome do_cox(const json& p) {
  const int range = get_int(p, "range", 0);
  if (range < 0) throw InputError("range must be non-negative");
  std::optional<std::set<int>> orbit;
  if (p.contains("orbit")) {
    orbit.emplace();
    for (int i : p.at("orbit").get<std::vector<int>>()) {
      if (i != 1 && i != 2) throw InputError("orbit entries are spherical root numbers 1 or 2");
      orbit->insert(i);
    }
  }
  std::vector<PicardDegree> degrees;
  for (int a = -range; a <= range; ++a)
    for (int b = -range; b <= range; ++b)
      for (int c = -range; c <= range; ++c) degrees.push_back(PicardDegree{{a, b, c}});
  std::vector<json> rows(degrees.size());
  std::vector<char> ok(degrees.size());
  const long n = static_cast<long>(degrees.size());
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < n; ++i) {
    const auto& E = degrees[i];
    const std::size_t count = orbit ? cox_orbit_hilbert(E, *orbit) : cox_hilbert(E);
    const Integer formula = orbit ? brion_orbit_dimension(E, *orbit) : brion_dimension(E);
    ok[i] = formula == count;
    rows[i] = json{{"E", to_json(E)}, {"count", count}, {"formula", formula.get_si()}, {"ok", ok[i] != 0}};
  }
  std::size_t mismatches = 0;
  for (char x : ok) mismatches += !x;
  json doc{{"range", range}, {"table", rows}, {"mismatches", mismatches}};
  if (orbit) doc["orbit"] = std::vector<int>(orbit->begin(), orbit->end());
  return {doc, mismatches == 0};
}

Outcome do_degenerate(const json& p) {
  json doc = json::object();
  bool ok = true;
  if (p.contains("ell") || p.contains("reference_shape")) {
    if (!p.contains("ell") || !p.contains("reference_shape")) throw InputError("multicone check needs ell and reference_shape");
    const int ell = ell_of(p);
    const auto ref = reference_of(p, ell);
    const int max_total = get_int(p, "max_total", 3);
    if (max_total < 0) throw InputError("max_total must be non-negative");
    const auto rep = degeneration_flatness_check(ref, ell, static_cast<unsigned>(max_total), get_seed(p));
    doc["multicone"] = to_json(rep);
    doc["multicone"]["ell"] = ell;
    doc["multicone"]["reference_shape"] = ref.shapes;
    ok = ok && rep.mismatches() == 0;
  }
  const int cox_max = get_int(p, "cox_max", 2);
  if (cox_max < 0) throw InputError("cox_max must be non-negative");
  const auto rep = cox_degenerate_and_compare(static_cast<unsigned>(cox_max));
  doc["cox"] = to_json(rep);
  ok = ok && rep.mismatches() == 0;
  return {doc, ok};
}

}  // namespace

void validate_parameters(const std::string& subcommand, const json& params) {
  auto it = schemas().find(subcommand);
  if (it == schemas().end()) throw InputError("unknown subcommand: " + subcommand);
  if (!params.is_object()) throw InputError("parameters must be an object");
  for (const auto& [key, value] : params.items()) {
    auto f = it->second.find(key);
    if (f == it->second.end()) throw InputError("unknown parameter for " + subcommand + ": " + key);
    if (!matches(value, f->second.kind)) throw InputError("parameter " + key + " has the wrong type");
  }
  for (const auto& [key, field] : it->second)
    if (field.required && !params.contains(key)) throw InputError("missing parameter for " + subcommand + ": " + key);
  if (params.contains("seed") && params.at("seed").get<long long>() < 0) throw InputError("seed must be non-negative");
}

Outcome execute(const std::string& subcommand, const json& params) {
  validate_parameters(subcommand, params);
  Outcome out;
  if (subcommand == "straighten") out = do_straighten(params);
  else if (subcommand == "standard") out = do_standard(params);
  else if (subcommand == "enumerate") out = do_enumerate(params);
  else if (subcommand == "hilbert") out = do_hilbert(params);
  else if (subcommand == "verify") out = do_verify(params);
  else if (subcommand == "discrete") out = do_discrete(params);
  else if (subcommand == "cox") out = do_cox(params);
  else if (subcommand == "degenerate") out = do_degenerate(params);
  else out = selftest(get_seed(params));
  out.document["subcommand"] = subcommand;
  return out;
}

Outcome execute_job(const json& job) {
  if (!job.is_object() || !job.contains("subcommand") || !job.at("subcommand").is_string())
    throw InputError("a job needs a subcommand string");
  for (const auto& [key, value] : job.items())
    if (key != "subcommand" && key != "parameters") throw InputError("unknown job field: " + key);
  return execute(job.at("subcommand").get<std::string>(), job.value("parameters", json::object()));
}

Outcome selftest(std::uint64_t seed) {
  json checks = json::array();
  bool all = true;
  auto record = [&](const std::string& name, bool ok) {
    checks.push_back(json{{"name", name}, {"pass", ok}});
    all = all && ok;
  };
  auto row = [](const std::string& s, int ell) { return parse_rows_shorthand(s, ell).front(); };

  {
    auto [a, b] = swap_pair(row("25", 5), row("1346", 5));
    record("swap 25,1346 -> 1245,36", a == row("1245", 5) && b == row("36", 5));
  }
  const ReferenceShape ref{{2, 3, 1}};
  RowDatum d(3, ref);
  record("24,134,3 standard", is_standard(d.formal(parse_rows_shorthand("24;134;3", 3)), d));
  {
    const auto rep = check_standard(d.formal(parse_rows_shorthand("24;134;2", 3)), d);
    record("24,134,2 not standard, witness 124,34,2",
           !rep.standard && rep.witness_path.size() == 2 && d.rows_of(rep.witness_path[1]) == parse_rows_shorthand("124;34;2", 3));
  }
  auto poly = [](std::initializer_list<std::pair<const char*, int>> terms) {
    TableauPolynomial p;
    for (const auto& [text, c] : terms) add_term(p, parse_rows_shorthand(text, 3), Rational(c));
    return p;
  };
  {
    const auto rel = shuffling_relation(row("234", 3), row("14", 3));
    record("shuffle 234,14", rel == poly({{"234;14", 1}, {"134;24", -1}, {"124;34", 1}}) &&
                                 verify_polynomial_identity(rel, 100, seed));
  }
  {
    const auto rel = shuffling_relation(row("34", 3), row("2", 3));
    record("shuffle 34,2", rel == poly({{"34;2", 1}, {"24;3", -1}, {"23;4", 1}}) &&
                               verify_polynomial_identity(rel, 100, seed));
  }
  {
    Straightener st(d);
    const auto out = st.straighten(parse_rows_shorthand("24;134;2", 3));
    record("straighten 24,134,2", out == poly({{"14;234;2", 1}, {"24;124;3", 1}, {"23;124;4", -1}}));
  }
  {
    BoxDatum y;
    RuleSet rules(y, coxy_relations(y));
    const auto nf = normal_form(y.monomial({make_box_row(2, 1), make_box_row(1, 2)}), rules, y);
    record("box 21,12 -> 11,22", nf == LinearCombination{{y.monomial({make_box_row(1, 1), make_box_row(2, 2)}), Rational(1)}});
  }
  record("cox_hilbert (0,1,0) = 4", cox_hilbert(PicardDegree{{0, 1, 0}}) == 4);
  record("cox_hilbert (0,2,0) = 10", cox_hilbert(PicardDegree{{0, 2, 0}}) == 10);
  record("cox_hilbert (1,0,1) = 4", cox_hilbert(PicardDegree{{1, 0, 1}}) == 4);
  return {json{{"checks", checks}, {"all_pass", all}}, all};
}

int run(const std::vector<std::string>& argv, std::ostream& out) {
  CLI::App app{"Standard monomial theory engine"};
  app.require_subcommand(1);
  std::uint64_t seed = 1;
  if (const char* env = std::getenv("SMT_SEED")) {
    try {
      seed = std::stoull(env);
    } catch (const std::exception&) {
      out << json{{"error", {{"kind", "input"}, {"message", "SMT_SEED is not an integer"}}}}.dump(2) << "\n";
      return kInputError;
    }
  }
  app.add_option("--seed", seed, "seed for randomized oracles (default: SMT_SEED or 1)");

  long cap = -1;
  int ell = 0, max_total = 3, max_degree = 3, range = 2, trials = 25, verify_trials = 10, cox_max = 2;
  std::string ref_text, rows_text, md_text, orbit_text, relations_file, job_file;
  bool no_list = false, shuffles = false;

  auto add_tableau = [&](CLI::App* c) {
    c->add_option("--ell", ell)->required();
    c->add_option("--ref", ref_text, "reference shape, e.g. 2,3,1")->required();
    c->add_option("--rows", rows_text, "rows, e.g. \"24;134;2\"")->required();
  };
  auto* straighten = app.add_subcommand("straighten", "straighten a tableau into standard tableaux");
  add_tableau(straighten);
  straighten->add_option("--trials", trials, "oracle evaluations");
  straighten->add_option("--cap", cap, "substitution cap");
  auto* standard = app.add_subcommand("standard", "standardness verdict with witness");
  add_tableau(standard);
  auto* enumerate = app.add_subcommand("enumerate", "standard tableaux of a multidegree");
  enumerate->add_option("--ell", ell)->required();
  enumerate->add_option("--ref", ref_text)->required();
  enumerate->add_option("--multidegree", md_text)->required();
  enumerate->add_flag("--count-only", no_list);
  auto* hilbert_cmd = app.add_subcommand("hilbert", "Hilbert table against dimension oracles");
  hilbert_cmd->add_option("--ell", ell)->required();
  hilbert_cmd->add_option("--ref", ref_text)->required();
  hilbert_cmd->add_option("--max-total", max_total);
  auto* verify = app.add_subcommand("verify", "oracle check of relations");
  verify->add_option("--relations", relations_file, "JSON file with a \"relations\" array");
  verify->add_flag("--shuffles", shuffles, "check every shuffling relation for --ell");
  verify->add_option("--ell", ell);
  verify->add_option("--trials", verify_trials);
  auto* discrete = app.add_subcommand("discrete", "minimal generators of the discrete ideal");
  discrete->add_option("--ell", ell)->required();
  discrete->add_option("--ref", ref_text)->required();
  discrete->add_option("--max-degree", max_degree);
  auto* cox = app.add_subcommand("cox", "Cox ring counts against the dimension formula");
  cox->add_option("--range", range)->required();
  cox->add_option("--orbit", orbit_text, "spherical roots in I, e.g. 1,2 (empty string for none)");
  auto* degenerate = app.add_subcommand("degenerate", "flatness reports");
  degenerate->add_option("--ell", ell);
  degenerate->add_option("--ref", ref_text);
  degenerate->add_option("--max-total", max_total);
  degenerate->add_option("--cox-max", cox_max);
  auto* selftest_cmd = app.add_subcommand("selftest", "worked examples");
  auto* job = app.add_subcommand("job", "run a JobSpec document");
  job->add_option("file", job_file)->required();

  auto fail = [&](const char* kind, const std::string& msg, int code) {
    out << json{{"error", {{"kind", kind}, {"message", msg}}}}.dump(2) << "\n";
    return code;
  };

  std::vector<std::string> args(argv.begin() + (argv.empty() ? 0 : 1), argv.end());
  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    return fail("input", e.what(), kInputError);
  }

  try {
    json params = json::object();
    auto list = [](const std::string& s) { return json(parse_int_list(s)); };
    auto rows = [&](const std::string& s) { return rows_to_json(parse_rows_shorthand(s, ell)); };
    std::string name;
    Outcome result;
    if (*job) {
      std::ifstream in(job_file);
      if (!in) throw InputError("cannot read " + job_file);
      json doc;
      try {
        doc = json::parse(in);
      } catch (const json::parse_error& e) {
        throw InputError(e.what());
      }
      result = execute_job(doc);
    } else {
      CLI::App* sub = app.get_subcommands().front();
      name = sub->get_name();
      if (sub == straighten || sub == standard) {
        params = {{"ell", ell}, {"reference_shape", list(ref_text)}, {"rows", rows(rows_text)}};
        if (sub == straighten) params["trials"] = trials;
        if (sub == straighten && cap >= 0) params["cap"] = cap;
      } else if (sub == enumerate) {
        params = {{"ell", ell}, {"reference_shape", list(ref_text)}, {"multidegree", list(md_text)}, {"list", !no_list}};
      } else if (sub == hilbert_cmd) {
        params = {{"ell", ell}, {"reference_shape", list(ref_text)}, {"max_total", max_total}};
      } else if (sub == verify) {
        if (!relations_file.empty()) {
          std::ifstream in(relations_file);
          if (!in) throw InputError("cannot read " + relations_file);
          try {
            json doc = json::parse(in);
            if (!doc.is_object() || !doc.contains("relations")) throw InputError("relation file needs a relations array");
            params["relations"] = doc.at("relations");
          } catch (const json::parse_error& e) {
            throw InputError(e.what());
          }
        }
        if (shuffles) params["shuffles"] = true;
        if (ell) params["ell"] = ell;
        params["trials"] = verify_trials;
      } else if (sub == discrete) {
        params = {{"ell", ell}, {"reference_shape", list(ref_text)}, {"max_degree", max_degree}};
      } else if (sub == cox) {
        params = {{"range", range}};
        if (cox->count("--orbit")) params["orbit"] = orbit_text.empty() ? json::array() : list(orbit_text);
      } else if (sub == degenerate) {
        if (!ref_text.empty()) params = {{"ell", ell}, {"reference_shape", list(ref_text)}, {"max_total", max_total}};
        params["cox_max"] = cox_max;
      }
      if (sub == straighten || sub == verify || sub == degenerate || sub == selftest_cmd)
        params["seed"] = static_cast<std::int64_t>(seed);
      result = execute(name, params);
    }
    out << result.document.dump(2) << "\n";
    return result.verified ? kOk : kVerificationFailed;
  } catch (const CapExceeded& e) {
    return fail("cap_exceeded", e.what(), kCapExceeded);
  } catch (const InputError& e) {
    return fail("input", e.what(), kInputError);
  } catch (const PreconditionViolation& e) {
    return fail("input", e.what(), kInputError);
  } catch (const DatumMismatch& e) {
    return fail("input", e.what(), kInputError);
  } catch (const json::exception& e) {
    return fail("input", e.what(), kInputError);
  }
}

}  // namespace smt::cli
