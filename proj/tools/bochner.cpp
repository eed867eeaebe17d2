#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "bochnerlab/catalog.hpp"
#include "bochnerlab/darboux.hpp"
#include "bochnerlab/errors.hpp"
#include "bochnerlab/parser.hpp"
#include "bochnerlab/recurrence.hpp"
#include "bochnerlab/serialize.hpp"
#include "bochnerlab/shiftop.hpp"
#include "bochnerlab/symbolic.hpp"
#include "bochnerlab/verify.hpp"

namespace bl = bochnerlab;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerdict = 1;
constexpr int kExitUsage = 2;

struct OperatorInput {
  std::string op_file;
  std::string family;
  std::vector<std::string> family_args;
  std::vector<std::string> params;  // key=value bindings

  void attach(CLI::App* cmd) {
    cmd->add_option("--op", op_file, "operator spec JSON file");
    cmd->add_option("--family", family, "catalog family name");
    cmd->add_option("--args", family_args, "family arguments, key=value[,key=value]");
    cmd->add_option("--param", params, "parameter binding key=value (repeatable)");
  }

  std::map<std::string, bl::Rational> bindings() const {
    std::map<std::string, bl::Rational> out;
    for (const std::string& p : params) {
      auto eq = p.find('=');
      if (eq == std::string::npos)
        throw bl::InvalidSpec("parameter binding must look like key=value: " + p);
      out[p.substr(0, eq)] = bl::parse_rational(p.substr(eq + 1));
    }
    return out;
  }

  bl::Json load_json() const {
    std::ifstream in(op_file);
    if (!in) throw bl::InvalidSpec("cannot open operator spec: " + op_file);
    return bl::Json::parse(in);
  }

  bl::DiffOp concrete() const {
    if (!family.empty())
      return bl::family_operator(bl::parse_family(family, family_args));
    if (op_file.empty())
      throw bl::InvalidSpec("need --op FILE or --family NAME");
    return bl::load_operator(load_json(), bindings());
  }

  bl::SymbolicAnsatz symbolic() const {
    if (op_file.empty())
      throw bl::InvalidSpec("need --op FILE with declared vars");
    return bl::load_symbolic_ansatz(load_json());
  }
};

void emit(const bl::Json& j) { std::cout << j.dump(2) << "\n"; }

int cmd_eigenpolys(const OperatorInput& in, long n) {
  bl::DiffOp op = in.concrete();
  emit(bl::eigenseq_to_json(op.eigen_sequence(n)));
  return kExitOk;
}

int cmd_recur(const OperatorInput& in, long n, bool reconstruct,
              const std::string& format) {
  bl::DiffOp op = in.concrete();
  bl::RecTable t = bl::recurrence_table(op.eigen_sequence(n));
  if (reconstruct) bl::reconstruct_table(t);
  if (format == "csv")
    std::cout << bl::rectable_to_csv(t);
  else
    emit(bl::rectable_to_json(t));
  return kExitOk;
}

int cmd_adcheck(const OperatorInput& in, long n) {
  bl::DiffOp op = in.concrete();
  bl::RecTable t = bl::recurrence_table(op.eigen_sequence(n));
  bl::reconstruct_table(t);
  bl::AdCertificate cert =
      bl::ad_condition_check(op, bl::lambda_from_table(t));
  emit(bl::certificate_to_json(cert));
  return cert.matches && cert.ad_k1_zero ? kExitOk : kExitVerdict;
}

int cmd_symbolic_b(const OperatorInput& in, int jmax) {
  bl::BSeries s = bl::symbolic_b(in.symbolic(), jmax);
  bl::Json p = bl::Json::object(), b = bl::Json::object();
  for (std::size_t k = 0; k < s.p.size(); ++k) p[std::to_string(k)] = s.p[k].str();
  for (std::size_t j = 0; j < s.b.size(); ++j) b[std::to_string(j)] = s.b[j].str();
  emit(bl::Json{{"schema", 1}, {"p", p}, {"b", b}});
  return kExitOk;
}

int cmd_constraints(const OperatorInput& in, int j, bool linearize) {
  bl::BSeries s = bl::symbolic_b(in.symbolic(), j);
  emit(bl::constraints_to_json(
      bl::parameter_constraints(s.b[std::size_t(j)], linearize)));
  return kExitOk;
}

int cmd_darboux(const OperatorInput& in, const std::string& c_text,
                const std::string& h0_text, long n, int complete_order) {
  bl::DiffOp op = in.concrete();
  bl::EigenSeq seq = op.eigen_sequence(n);
  bl::RecTable t = bl::recurrence_table(seq);
  if (!t.bandwidth || *t.bandwidth != 1) {
    emit(bl::Json{{"schema", 1},
                  {"error", "recurrence is not tridiagonal with nonzero v"}});
    return kExitVerdict;
  }
  std::vector<bl::Rational> u, v;
  for (long m = 0; m < t.max_index; ++m) {
    u.push_back(t.rows[std::size_t(m)][0]);
    v.push_back(m >= 1 ? t.rows[std::size_t(m)][1] : bl::Rational(0));
  }
  bl::Rational c = bl::parse_rational(c_text);

  std::vector<bl::Rational> seeds;
  if (h0_text == "auto")
    seeds = {bl::Rational(1)};
  else
    seeds = {bl::parse_rational(h0_text)};
  std::vector<bl::FactorAttempt> attempts =
      bl::factor_lu_auto(u, v, c, seeds, t.max_index);

  bl::Json attempts_json = bl::Json::array();
  const bl::DarbouxFactors* ok = nullptr;
  for (const bl::FactorAttempt& a : attempts) {
    bl::Json aj{{"h0", bl::rational_str(a.h0)}};
    if (a.factors) {
      aj["breakdown"] = nullptr;
      ok = &*a.factors;
    } else {
      aj["breakdown"] = a.breakdown_index;
    }
    attempts_json.push_back(std::move(aj));
  }
  bl::Json out{{"schema", 1}, {"attempts", attempts_json}};
  if (!ok) {
    out["error"] = "factorization breaks down for every seed";
    emit(out);
    return kExitVerdict;
  }

  bl::Json fj = bl::Json::array(), hj = bl::Json::array();
  for (const bl::Rational& x : ok->f) fj.push_back(bl::rational_str(x));
  for (const bl::Rational& x : ok->h) hj.push_back(bl::rational_str(x));
  out["f"] = fj;
  out["h"] = hj;

  bl::DarbouxSwap swap = bl::swap_and_transform(*ok, seq.polys);
  bl::Json uj = bl::Json::array(), vj = bl::Json::array(), pj = bl::Json::array();
  for (const bl::Rational& x : swap.u_hat) uj.push_back(bl::rational_str(x));
  for (const bl::Rational& x : swap.v_hat) vj.push_back(bl::rational_str(x));
  for (const bl::XPoly& q : swap.transformed) pj.push_back(q.str());
  out["u_hat"] = uj;
  out["v_hat"] = vj;
  out["transformed"] = pj;
  out["conjugation_verified"] = swap.verified;

  if (complete_order > 0) {
    try {
      bl::Json basis = bl::Json::array();
      for (const bl::DiffOp& cand :
           bl::bispectral_completion(swap.transformed, complete_order))
        basis.push_back(bl::operator_to_json(cand));
      out["completion"] = basis;
    } catch (const bl::NoOperator&) {
      out["completion"] = bl::Json::array();
    }
  }
  emit(out);
  if (!swap.verified) return kExitVerdict;
  if (complete_order > 0 && out["completion"].empty()) return kExitVerdict;
  return kExitOk;
}

int cmd_catalog(const OperatorInput& in) {
  if (in.family.empty()) throw bl::InvalidSpec("catalog needs --family NAME");
  emit(bl::family_to_operator_json(bl::parse_family(in.family, in.family_args)));
  return kExitOk;
}

int cmd_verify(const std::string& case_name) {
  std::vector<bl::CaseResult> results;
  if (case_name.empty())
    results = bl::run_all_cases();
  else
    results.push_back(bl::run_case(case_name));
  bool all = true;
  for (const bl::CaseResult& cr : results) {
    for (const bl::CheckResult& c : cr.checks) {
      std::cout << "[" << cr.name << "] " << c.name << ": "
                << (c.passed ? "PASS" : "FAIL");
      if (!c.detail.empty()) std::cout << "  (" << c.detail << ")";
      std::cout << "\n";
    }
    all = all && cr.passed();
  }
  std::cout << (all ? "all checks passed" : "some checks FAILED") << "\n";
  return all ? kExitOk : kExitVerdict;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact-arithmetic toolkit for eigenpolynomial recurrences"};
  app.require_subcommand(1);

  OperatorInput in;
  long n = 12;
  bool reconstruct = false, linearize = false;
  std::string format = "csv";
  int jmax = 5, jsel = 0, complete_order = 0;
  std::string c_text = "0", h0_text = "auto", case_name;

  auto* eigen = app.add_subcommand("eigenpolys", "monic eigenpolynomials P_0..P_N");
  in.attach(eigen);
  eigen->add_option("-n,--max-index", n, "largest index N")->required();

  auto* recur = app.add_subcommand("recur", "recurrence table x P_n = P_{n+1} + sum b_j P_{n-j}");
  in.attach(recur);
  recur->add_option("-n,--max-index", n, "largest index N")
      ->required()
      ->check(CLI::Range(2l, 1000000l));
  recur->add_flag("--reconstruct", reconstruct, "fit closed forms b_j(n)");
  recur->add_option("--format", format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));

  auto* adcheck = app.add_subcommand("adcheck", "ad-condition certificate");
  in.attach(adcheck);
  adcheck->add_option("-n,--max-index", n, "table size for the reconstruction");

  auto* symb = app.add_subcommand("symbolic-b", "symbolic p_k(n) and b_j(n)");
  in.attach(symb);
  symb->add_option("--jmax", jmax, "largest recurrence offset");

  auto* cons = app.add_subcommand("constraints", "parameter constraints of b_j");
  in.attach(cons);
  cons->add_option("--j", jsel, "recurrence offset j")->required();
  cons->add_flag("--linearize", linearize, "keep the degree <= 1 part in the parameters");

  auto* darboux = app.add_subcommand("darboux", "factor, swap, transform, complete");
  in.attach(darboux);
  darboux->add_option("--c", c_text, "spectral shift");
  darboux->add_option("--h0", h0_text, "seed h(0), a rational or 'auto'");
  darboux->add_option("-n,--max-index", n, "largest index N")->required();
  darboux->add_option("--complete-order", complete_order,
                      "search for differential operators up to this order");

  auto* catalog = app.add_subcommand("catalog", "emit a family operator spec");
  in.attach(catalog);

  auto* verify = app.add_subcommand("verify", "run the reproduction suite");
  verify->add_option("--case", case_name, "quadratic-a3 | linear-a3 | pure-cubic | cubic-lambda | quadratic-lambda | families");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (eigen->parsed()) return cmd_eigenpolys(in, n);
    if (recur->parsed()) return cmd_recur(in, n, reconstruct, format);
    if (adcheck->parsed()) return cmd_adcheck(in, n);
    if (symb->parsed()) return cmd_symbolic_b(in, jmax);
    if (cons->parsed()) return cmd_constraints(in, jsel, linearize);
    if (darboux->parsed())
      return cmd_darboux(in, c_text, h0_text, n, complete_order);
    if (catalog->parsed()) return cmd_catalog(in);
    if (verify->parsed()) return cmd_verify(case_name);
  } catch (const bl::InvalidSpec& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const bl::SyntaxError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const bl::UnknownVariable& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const bl::Error& e) {
    emit(bl::Json{{"schema", 1}, {"error", e.what()}});
    return kExitVerdict;
  } catch (const bl::Json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
