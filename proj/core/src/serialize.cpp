#include "bochnerlab/serialize.hpp"

#include <sstream>

#include "bochnerlab/errors.hpp"
#include "bochnerlab/parser.hpp"

namespace bochnerlab {

std::string rational_str(const Rational& r) { return r.get_str(); }

namespace {

std::vector<std::string> declared_vars(const Json& doc) {
  std::vector<std::string> vars;
  if (doc.contains("vars"))
    for (const auto& v : doc.at("vars")) vars.push_back(v.get<std::string>());
  return vars;
}

// Parses the "coeffs" object into MPoly values over {x} + vars, indexed by
// derivative order starting at 1.
std::vector<MPoly> parse_coeff_list(const Json& doc,
                                    const std::vector<std::string>& vars) {
  if (!doc.contains("coeffs") || !doc.at("coeffs").is_object())
    throw InvalidSpec("operator spec needs a \"coeffs\" object");
  Context all = vars;
  all.push_back("x");
  ContextPtr ctx = make_context(all);
  std::vector<std::string> allowed = vars;
  allowed.push_back("x");

  int top = 0;
  for (const auto& [key, val] : doc.at("coeffs").items()) {
    int order = std::stoi(key);
    if (order < 1) throw InvalidSpec("derivative orders start at 1");
    top = std::max(top, order);
  }
  if (top == 0) throw InvalidSpec("operator spec has no coefficients");
  std::vector<MPoly> out(std::size_t(top), MPoly::constant(Rational(0), ctx));
  for (const auto& [key, val] : doc.at("coeffs").items())
    out[std::size_t(std::stoi(key)) - 1] =
        parse_poly(val.get<std::string>(), allowed).in_context(ctx);
  return out;
}

}  // namespace

DiffOp load_operator(const Json& doc,
                     const std::map<std::string, Rational>& bindings) {
  std::vector<std::string> vars = declared_vars(doc);
  for (const std::string& v : vars)
    if (!bindings.count(v))
      throw InvalidSpec("missing binding for declared variable " + v);
  std::vector<XPoly> coeffs;
  for (MPoly p : parse_coeff_list(doc, vars)) {
    for (const std::string& v : vars) p = p.substituted(v, bindings.at(v));
    coeffs.push_back(XPoly::from_mpoly(p));
  }
  return DiffOp::build(std::move(coeffs));
}

SymbolicAnsatz load_symbolic_ansatz(const Json& doc) {
  std::vector<std::string> vars = declared_vars(doc);
  ContextPtr param_ctx = make_context(vars);
  std::vector<std::vector<MPoly>> grid;
  for (const MPoly& p : parse_coeff_list(doc, vars)) {
    std::vector<MPoly> row;
    for (const MPoly& c : p.coeffs_in("x")) row.push_back(c.in_context(param_ctx));
    grid.push_back(std::move(row));
  }
  return SymbolicAnsatz::build(std::move(grid));
}

Json operator_to_json(const DiffOp& op) {
  Json coeffs = Json::object();
  for (int i = 1; i <= op.order(); ++i)
    if (!op.coeff(i).is_zero()) coeffs[std::to_string(i)] = op.coeff(i).str();
  return Json{{"schema", 1},
              {"vars", Json::array()},
              {"coeffs", coeffs},
              {"exactly_solvable", op.exactly_solvable()},
              {"lambda", op.lambda_poly().str()}};
}

Json eigenseq_to_json(const EigenSeq& seq) {
  Json polys = Json::array(), lambda = Json::array();
  for (const XPoly& p : seq.polys) polys.push_back(p.str());
  for (const Rational& l : seq.lambda) lambda.push_back(rational_str(l));
  return Json{{"schema", 1}, {"polys", polys}, {"lambda", lambda}};
}

Json rectable_to_json(const RecTable& table) {
  Json rows = Json::array();
  for (const auto& row : table.rows) {
    Json r = Json::array();
    for (const Rational& v : row) r.push_back(rational_str(v));
    rows.push_back(std::move(r));
  }
  Json rec = Json::object();
  for (const auto& [j, fn] : table.reconstructed) rec[std::to_string(j)] = fn.str();
  Json out{{"schema", 1},
           {"max_index", table.max_index},
           {"rows", rows},
           {"reconstructed", rec}};
  if (table.bandwidth)
    out["bandwidth"] = *table.bandwidth;
  else
    out["bandwidth"] = nullptr;
  return out;
}

std::string rectable_to_csv(const RecTable& table) {
  int d = 0;
  if (table.bandwidth) {
    d = *table.bandwidth;
  } else {
    for (int s : table.support) d = std::max(d, s);
  }
  std::ostringstream os;
  os << "n";
  for (int j = 0; j <= d; ++j) os << ",b" << j;
  os << "\n";
  for (long n = 0; n < table.max_index; ++n) {
    os << n;
    for (int j = 0; j <= d; ++j) {
      os << ",";
      if (j <= int(n)) os << rational_str(table.rows[std::size_t(n)][std::size_t(j)]);
    }
    os << "\n";
  }
  return os.str();
}

Json certificate_to_json(const AdCertificate& cert) {
  Json coeffs = Json::array();
  for (const Rational& c : cert.poly_coeffs) coeffs.push_back(rational_str(c));
  Json out{{"schema", 1},
           {"order", cert.order},
           {"ad_k", cert.ad_k.band_strings()},
           {"ad_k_plus_1", cert.ad_k1.band_strings()},
           {"ad_k_plus_1_zero", cert.ad_k1_zero},
           {"matches", cert.matches},
           {"poly_coeffs", coeffs}};
  if (cert.mismatch_offset) {
    out["mismatch_offset"] = *cert.mismatch_offset;
    out["mismatch_diff"] = cert.mismatch_diff.str();
  }
  return out;
}

Json constraints_to_json(const std::vector<Constraint>& constraints) {
  Json arr = Json::array();
  for (const Constraint& c : constraints)
    arr.push_back(Json::array({c.power, c.coeff.str()}));
  return Json{{"schema", 1}, {"constraints", arr}};
}

FamilySpec parse_family(const std::string& name,
                        const std::vector<std::string>& args) {
  FamilySpec spec;
  spec.name = name;
  for (const std::string& chunk : args) {
    std::istringstream is(chunk);
    std::string piece;
    while (std::getline(is, piece, ',')) {
      if (piece.empty()) continue;
      auto eq = piece.find('=');
      if (eq == std::string::npos)
        throw InvalidSpec("family argument must look like key=value: " + piece);
      spec.args[piece.substr(0, eq)] = parse_rational(piece.substr(eq + 1));
    }
  }
  return spec;
}

Json family_to_operator_json(const FamilySpec& spec) {
  return operator_to_json(family_operator(spec));
}

}  // namespace bochnerlab
