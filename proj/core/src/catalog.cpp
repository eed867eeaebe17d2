#include "bochnerlab/catalog.hpp"

#include <algorithm>

#include "bochnerlab/errors.hpp"

namespace bochnerlab {

Rational FamilySpec::arg(const std::string& key) const {
  auto it = args.find(key);
  if (it == args.end())
    throw InvalidSpec("family " + name + " needs argument " + key);
  return it->second;
}

Rational FamilySpec::arg_or(const std::string& key, const Rational& fallback) const {
  auto it = args.find(key);
  return it == args.end() ? fallback : it->second;
}

namespace {

XPoly linear(const Rational& slope, const Rational& intercept) {
  return XPoly({intercept, slope});
}

long int_arg(const FamilySpec& spec, const std::string& key) {
  Rational v = spec.arg(key);
  if (v.get_den() != 1)
    throw InvalidSpec("argument " + key + " must be an integer");
  return v.get_num().get_si();
}

DiffOp type1_or_appell(const FamilySpec& spec, bool with_x_powers) {
  long k = int_arg(spec, "k");
  if (k < 2) throw InvalidSpec("need order k >= 2");
  std::vector<XPoly> coeffs;
  for (long j = 1; j <= k; ++j) {
    Rational aj = spec.arg_or("a" + std::to_string(j), Rational(0));
    XPoly c = with_x_powers ? XPoly::monomial(unsigned(j - 1), aj) : XPoly(aj);
    if (aj == 0) c = XPoly();
    if (j == 1) c += XPoly::monomial(1);  // the x d term
    coeffs.push_back(std::move(c));
  }
  if (spec.arg_or("a" + std::to_string(k), Rational(0)) == 0)
    throw InvalidSpec("top coefficient a" + std::to_string(k) + " must be nonzero");
  return DiffOp::build(std::move(coeffs));
}

DiffOp type2(const FamilySpec& spec) {
  long l = int_arg(spec, "l");
  if (l < 1) throw InvalidSpec("need l >= 1");
  if (spec.arg_or("a" + std::to_string(l - 1), Rational(0)) == 0)
    throw InvalidSpec("top coefficient a" + std::to_string(l - 1) +
                      " must be nonzero");
  GenDiffOp xd({XPoly(), XPoly::monomial(1)});
  GenDiffOp inner;
  for (long m = 0; m < l; ++m) {
    Rational am = spec.arg_or("a" + std::to_string(m), Rational(0));
    if (am != 0) inner += am * pow(xd, unsigned(m));
  }
  GenDiffOp g = inner * GenDiffOp::derivative();

  // q(t) = sum q_r t^r without constant term; L = q'(G) G + x d, and
  // q'(G) G = sum r q_r G^r.
  GenDiffOp L = xd;
  long qdeg = 0;
  for (const auto& [key, val] : spec.args)
    if (key.size() > 1 && key[0] == 'q' && val != 0)
      qdeg = std::max(qdeg, std::stol(key.substr(1)));
  if (qdeg == 0) throw InvalidSpec("q must have positive degree");
  for (long r = 1; r <= qdeg; ++r) {
    Rational qr = spec.arg_or("q" + std::to_string(r), Rational(0));
    if (qr != 0) L += (Rational(r) * qr) * pow(g, unsigned(r));
  }
  return L.to_diffop();
}

DiffOp cubicpoint(const FamilySpec& spec) {
  Rational p = spec.arg("p"), nu = spec.arg("nu"), mu = spec.arg("mu");
  XPoly xp = linear(Rational(1), -p);  // x - p
  return DiffOp::build({mu * xp, nu * (xp * xp), Rational(6) * (xp * xp * xp)});
}

}  // namespace

DiffOp classical_family(const FamilySpec& spec) {
  if (spec.name == "hermite")
    return DiffOp::build({XPoly::monomial(1), XPoly(Rational(-1))});
  if (spec.name == "laguerre") {
    Rational a = spec.arg("alpha");
    return DiffOp::build({linear(Rational(1), -a - 1), XPoly::monomial(1, Rational(-1))});
  }
  if (spec.name == "jacobi") {
    Rational a = spec.arg("alpha"), b = spec.arg("beta");
    return DiffOp::build({linear(a + b + 2, a - b),
                          XPoly({Rational(-1), Rational(0), Rational(1)})});
  }
  if (spec.name == "bessel")
    return DiffOp::build({linear(Rational(2), Rational(2)), XPoly::monomial(2)});
  throw InvalidSpec("unknown classical family: " + spec.name);
}

DiffOp conjecture_family(const FamilySpec& spec) {
  if (spec.name == "type1") return type1_or_appell(spec, true);
  if (spec.name == "appell") return type1_or_appell(spec, false);
  if (spec.name == "type2") return type2(spec);
  if (spec.name == "cubicpoint") return cubicpoint(spec);
  throw InvalidSpec("unknown family: " + spec.name);
}

DiffOp family_operator(const FamilySpec& spec) {
  if (spec.name == "hermite" || spec.name == "laguerre" ||
      spec.name == "jacobi" || spec.name == "bessel")
    return classical_family(spec);
  return conjecture_family(spec);
}

std::map<int, RatFn> expected_recurrence(const FamilySpec& spec) {
  if ((spec.name != "type1" && spec.name != "appell") ||
      int_arg(spec, "k") != 3)
    throw InvalidSpec("reference recurrence known for type1(3) and appell(3) only");
  ContextPtr ctx = make_context({"n"});
  MPoly n = MPoly::variable("n", ctx);
  auto C = [&](const Rational& c) { return MPoly::constant(c, ctx); };
  Rational a1 = spec.arg_or("a1", Rational(0));
  Rational a2 = spec.arg_or("a2", Rational(0));
  Rational a3 = spec.arg("a3");

  std::map<int, RatFn> b;
  if (spec.name == "appell") {
    b[0] = RatFn(C(-a1));
    b[1] = RatFn(C(-a2) * (n - C(Rational(1))));
    b[2] = RatFn(C(-a3) * (n - C(Rational(1))) * (n - C(Rational(2))));
    return b;
  }
  MPoly n1 = n - C(Rational(1)), n2 = n - C(Rational(2)), n3 = n - C(Rational(3));
  MPoly n4 = n - C(Rational(4));
  MPoly common = C(a1) + C(a2) * n2 + C(a3) * n2 * n3;
  b[0] = RatFn(-(C(a1) + C(2 * a2) * n1 + C(3 * a3) * n1 * n2));
  b[1] = RatFn(n1 * (C(a2) + C(3 * a3) * n2) * common);
  b[2] = RatFn(-(n1 * n2 * C(a3) * (C(a1) + C(a2) * n3 + C(a3) * n3 * n4) * common));
  return b;
}

RecurrenceComparison compare_recurrence(const FamilySpec& spec,
                                        const RecTable& table) {
  RecurrenceComparison cmp;
  cmp.reference = expected_recurrence(spec);
  cmp.extracted = table.reconstructed;
  if (cmp.extracted.empty())
    throw InvalidSpec("table has no reconstructed closed forms to compare");
  for (const auto& [j, fn] : cmp.extracted)
    if (!cmp.reference.count(j) && !fn.is_zero()) return cmp;
  for (int sigma : {0, 1, -1}) {
    bool ok = true;
    for (const auto& [j, ref] : cmp.reference) {
      auto it = cmp.extracted.find(j);
      RatFn shifted_ref = ref.shifted("n", sigma);
      if (it == cmp.extracted.end()) {
        ok = shifted_ref.is_zero();
      } else {
        ok = shifted_ref == it->second;
      }
      if (!ok) break;
    }
    if (ok) {
      cmp.shift = sigma;
      break;
    }
  }
  return cmp;
}

}  // namespace bochnerlab
