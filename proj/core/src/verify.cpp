#include "bochnerlab/verify.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cstdlib>
#include <random>
#include <thread>

#include "bochnerlab/catalog.hpp"
#include "bochnerlab/darboux.hpp"
#include "bochnerlab/errors.hpp"
#include "bochnerlab/recurrence.hpp"
#include "bochnerlab/shiftop.hpp"

namespace bochnerlab {

namespace {

void chk(CaseResult& r, std::string name, bool ok, std::string detail = "") {
  r.checks.push_back({std::move(name), ok, std::move(detail)});
}

RatFn delta(const RatFn& f) { return f.shifted("n", 1) - f; }

MPoly var(const std::string& name, const ContextPtr& ctx) {
  return MPoly::variable(name, ctx);
}

MPoly con(long c, const ContextPtr& ctx) {
  return MPoly::constant(Rational(c), ctx);
}

}  // namespace

SymbolicAnsatz linear_lambda_quadratic_a3() {
  ContextPtr p = make_context({"a31", "a30", "a21", "a20"});
  return SymbolicAnsatz::build({{con(0, p), con(1, p)},
                                {var("a20", p), var("a21", p)},
                                {var("a30", p), var("a31", p), con(1, p)}});
}

SymbolicAnsatz linear_lambda_linear_a3() {
  ContextPtr p = make_context({"a31", "a30", "a21", "a20"});
  return SymbolicAnsatz::build({{con(0, p), con(1, p)},
                                {var("a20", p), var("a21", p)},
                                {var("a30", p), var("a31", p)}});
}

SymbolicAnsatz quadratic_lambda_ansatz(
    const std::map<std::string, MPoly>& fixed) {
  Context names;
  for (const char* name : {"a32", "a31", "a30", "a20", "a11", "a10"})
    if (!fixed.count(name)) names.push_back(name);
  ContextPtr p = make_context(names);
  for (const auto& [k, v] : fixed) p = merge_contexts(p, v.context());
  auto entry = [&](const std::string& name) {
    auto it = fixed.find(name);
    return it == fixed.end() ? var(name, p) : it->second.in_context(p);
  };
  return SymbolicAnsatz::build(
      {{entry("a10"), entry("a11")},
       {entry("a20"), MPoly::constant(Rational(0), p), MPoly::constant(Rational(1), p)},
       {entry("a30"), entry("a31"), entry("a32")}});
}

SymbolicAnsatz order3_family_ansatz(bool with_x_powers) {
  ContextPtr p = make_context({"a1", "a2", "a3"});
  if (with_x_powers)
    return SymbolicAnsatz::build({{var("a1", p), con(1, p)},
                                  {con(0, p), var("a2", p)},
                                  {con(0, p), con(0, p), var("a3", p)}});
  return SymbolicAnsatz::build(
      {{var("a1", p), con(1, p)}, {var("a2", p)}, {var("a3", p)}});
}

namespace {

// Degree and leading coefficient in n of the linear-in-param part of b.
bool linear_profile(const std::vector<Constraint>& constraints,
                    const std::string& param, int want_degree,
                    const Rational& want_leading) {
  for (const Constraint& c : constraints) {
    std::vector<MPoly> by_param = c.coeff.coeffs_in(param);
    if (by_param.size() >= 2 && !by_param[1].is_zero())
      return c.power == want_degree && by_param[1].is_constant() &&
             by_param[1].constant_value() == want_leading;
  }
  return false;
}

CaseResult case_quadratic_a3() {
  CaseResult r{"quadratic-a3", {}};
  SymbolicAnsatz ansatz = linear_lambda_quadratic_a3();
  const ContextPtr& ctx = ansatz.context();
  MPoly n = var("n", ctx);
  MPoly a31 = var("a31", ctx), a30 = var("a30", ctx);
  MPoly a21 = var("a21", ctx), a20 = var("a20", ctx);

  BSeries s = symbolic_b(ansatz, 4);
  MPoly p1_expected = falling(n, 3) + falling(n, 2) * a21;
  chk(r, "p1 = (n)_3 + (n)_2 a21", s.p[1] == RatFn(p1_expected));
  chk(r, "b0 = -3 (n)_2 - 2n a21",
      s.b[0] == RatFn(con(-3, ctx) * falling(n, 2) - con(2, ctx) * n * a21));
  chk(r, "2 p2 = (n)_3 a31 + (n)_2 a20 + p1(n-1) p1(n)",
      RatFn(con(2, ctx)) * s.p[2] ==
          RatFn(falling(n, 3) * a31 + falling(n, 2) * a20) +
              s.p[1].shifted("n", -1) * s.p[1]);

  // Leading monomials of the parameter-linear parts, a21 not counted as a
  // parameter-free variable (terms mixing a21 with a parameter drop out of
  // the linearization).
  auto profiles = [&](const RatFn& f,
                      std::vector<std::tuple<const char*, int, Rational>> want) {
    std::vector<Constraint> lin = parameter_constraints(f, true);
    for (const auto& [param, deg, lead] : want)
      if (!linear_profile(lin, param, deg, lead)) return false;
    return true;
  };
  chk(r, "p2 leads with (1/2) n^3 a31 + (1/2) n^2 a20",
      profiles(s.p[2], {{"a31", 3, Rational(1) / 2}, {"a20", 2, Rational(1) / 2}}));
  chk(r, "p3 leads with (1/2) n^6 a31 + (1/3) n^3 a30 + (1/2) n^5 a20",
      profiles(s.p[3], {{"a31", 6, Rational(1) / 2},
                        {"a30", 3, Rational(1) / 3},
                        {"a20", 5, Rational(1) / 2}}));
  chk(r, "p4 leads with (1/4) n^9 a31 + (1/3) n^6 a30 + (1/4) n^8 a20",
      profiles(s.p[4], {{"a31", 9, Rational(1) / 4},
                        {"a30", 6, Rational(1) / 3},
                        {"a20", 8, Rational(1) / 4}}));
  chk(r, "b1 leads with -(3/2) n^2 a31 - n a20",
      profiles(s.b[1], {{"a31", 2, Rational(-3) / 2}, {"a20", 1, Rational(-1)}}));
  chk(r, "b2 leads with n^4 a31 - n^2 a30 + (2/3) n^3 a20",
      profiles(s.b[2], {{"a31", 4, Rational(1)},
                        {"a30", 2, Rational(-1)},
                        {"a20", 3, Rational(2) / 3}}));

  RatFn b3 = s.b[3];
  chk(r, "b3 is polynomial in n", b3.is_polynomial());

  // The exact b3 collapses to A (n)_4 + (B/2) (n)_3: the quoted leading
  // monomials (9/2) n^7 a31 + (9/2) n^4 a30 + 3 n^6 a20 cancel out of the
  // exact cascade and fail against concrete tables, so the structural form
  // below is what gets verified.
  MPoly A = MPoly::constant(Rational(1) / 4, ctx) * a21 * a21 * a31 -
            MPoly::constant(Rational(1) / 2, ctx) * a20 * a21 -
            MPoly::constant(Rational(3) / 4, ctx) * a21 * a31 +
            MPoly::constant(Rational(3) / 8, ctx) * a31 * a31 +
            MPoly::constant(Rational(3) / 2, ctx) * (a20 - a30);
  MPoly B = a20 * a31 - con(2, ctx) * a21 * a30;
  chk(r, "b3 = A (n)_4 + (B/2) (n)_3 with A, B polynomial in the parameters",
      b3 == RatFn(A * falling(n, 4) +
                  MPoly::constant(Rational(1) / 2, ctx) * B * falling(n, 3)));

  RatFn b3_zeroed = b3.substituted("a31", Rational(0))
                        .substituted("a30", Rational(0))
                        .substituted("a20", Rational(0));
  chk(r, "a31 = a30 = a20 = 0 makes b3 vanish identically", b3_zeroed.is_zero());

  // b3 = 0 alone does not force the parameters to vanish: on the branch
  // a21 = a31 = 0, a30 = a20 = t the whole b3 is identically zero, and it
  // takes b4 to pin t = 0.
  ContextPtr tctx = make_context({"t"});
  MPoly t = var("t", tctx);
  SymbolicAnsatz branch = SymbolicAnsatz::build(
      {{MPoly::constant(Rational(0), tctx), MPoly::constant(Rational(1), tctx)},
       {t},
       {t, MPoly::constant(Rational(0), tctx), MPoly::constant(Rational(1), tctx)}});
  BSeries bs = symbolic_b(branch, 4);
  bool monomial_coeff = false;
  if (bs.b[4].is_polynomial()) {
    for (const MPoly& c : bs.b[4].num().coeffs_in("n")) {
      if (c.is_zero()) continue;
      if (c.terms().size() == 1 && !c.is_constant()) monomial_coeff = true;
    }
  }
  chk(r, "branch a21 = a31 = 0, a30 = a20 = t: b3 = 0 but b4 = 0 forces t = 0",
      bs.b[3].is_zero() && !bs.b[4].is_zero() && monomial_coeff);
  return r;
}

CaseResult case_linear_a3() {
  CaseResult r{"linear-a3", {}};
  SymbolicAnsatz ansatz = linear_lambda_linear_a3();
  const ContextPtr& ctx = ansatz.context();
  MPoly n = var("n", ctx);
  MPoly a31 = var("a31", ctx), a30 = var("a30", ctx);
  MPoly a21 = var("a21", ctx), a20 = var("a20", ctx);

  BSeries s = symbolic_b(ansatz, 5);
  chk(r, "b0 = -2n a21", s.b[0] == RatFn(con(-2, ctx) * n * a21));
  MPoly b1_num = falling(n, 2) * (con(2, ctx) * a21 * a21 - con(3, ctx) * a31) -
                 con(2, ctx) * n * a20;
  chk(r, "b1 = ((n)_2 (2 a21^2 - 3 a31) - 2n a20) / 2",
      s.b[1] == RatFn(b1_num, con(2, ctx)));

  RatFn first = RatFn(con(4, ctx) * a21 * a21) - RatFn(Rational(2)) * delta(delta(s.b[1]));
  chk(r, "4 a21^2 - 2 D^2 b1 = 6 a31", first == RatFn(con(6, ctx) * a31));

  chk(r, "b2 is polynomial in n", s.b[2].is_polynomial());
  std::vector<MPoly> by_n = s.b[2].num().coeffs_in("n");
  Rational denom = s.b[2].den().constant_value();
  bool cubic = by_n.size() == 4;
  chk(r, "b2 is cubic in n", cubic);
  if (cubic) {
    MPoly A3 = by_n[3] * (1 / denom);
    MPoly A2 = (by_n[2] + Rational(3) * by_n[3]) * (1 / denom);
    chk(r, "3 A3 = 2 a21 a31", con(3, ctx) * A3 == con(2, ctx) * a21 * a31);
    chk(r, "A2 = -a30", A2 == -a30);
  }

  // The order-3 certificate identity ad^3 = 6 a3(Lambda) = 6(a31 Lambda +
  // a30 I), band by band on the offsets unaffected by truncating Lambda.
  ShiftOp lam = ShiftOp::shift(1);
  for (int j = 0; j <= 5; ++j) lam.set(-j, s.b[std::size_t(j)]);
  ShiftOp ad3 = ad_power(lam, n, 3);
  ShiftOp expected = RatFn(con(6, ctx) * a31) * lam;
  expected += RatFn(con(6, ctx) * a30) * ShiftOp::identity();
  bool band_ok = true;
  for (int off : {1, 0, -1, -2})
    band_ok = band_ok && ad3.coeff(off) == expected.coeff(off);
  chk(r, "ad^3 = 6(a31 Lambda + a30 I) on offsets 1..-2", band_ok);
  return r;
}

// Shared pure-case data: a3 = 1, a2 = x^2, a1 = a11 x.
struct PureCase {
  SymbolicAnsatz ansatz;
  BSeries series;
};

PureCase pure_case(int jmax) {
  ContextPtr seed = make_context({"a11"});
  std::map<std::string, MPoly> fixed;
  fixed["a32"] = MPoly::constant(Rational(0), seed);
  fixed["a31"] = MPoly::constant(Rational(0), seed);
  fixed["a30"] = MPoly::constant(Rational(1), seed);
  fixed["a20"] = MPoly::constant(Rational(0), seed);
  fixed["a10"] = MPoly::constant(Rational(0), seed);
  SymbolicAnsatz a = quadratic_lambda_ansatz(fixed);
  BSeries s = symbolic_b(a, jmax);
  return {std::move(a), std::move(s)};
}

RatFn pure_b5_reference(const ContextPtr& ctx) {
  MPoly n = var("n", ctx), a11 = var("a11", ctx);
  auto lin = [&](long c) { return a11 + con(2, ctx) * n + con(c, ctx); };
  MPoly num = falling(n, 5) * (con(3, ctx) * a11 + con(5, ctx) * n - con(16, ctx));
  // The denominator factor 2n + a11 - 8 is forced by the cascade (the b2 p3
  // term carries p3 at argument n - 2); a -2 variant fails the concrete
  // tables for every sampled a11.
  MPoly den = con(9, ctx) * lin(-8) * lin(-7) * lin(-5) * lin(-4);
  return RatFn(num, den);
}

CaseResult case_pure_cubic() {
  CaseResult r{"pure-cubic", {}};
  PureCase pc = pure_case(5);
  const ContextPtr& ctx = pc.ansatz.context();
  MPoly n = var("n", ctx), a11 = var("a11", ctx);

  std::vector<RatFn> p = symbolic_p(pc.ansatz, 9);
  chk(r, "p1 = p2 = 0", p[1].is_zero() && p[2].is_zero());
  chk(r, "p3 = (n)_3 / (6n + 3 a11 - 12)",
      p[3] == RatFn(falling(n, 3), con(6, ctx) * n + con(3, ctx) * a11 - con(12, ctx)));
  chk(r, "p4 = p5 = 0", p[4].is_zero() && p[5].is_zero());
  MPoly p6_den = con(18, ctx) * (con(2, ctx) * n + a11 - con(4, ctx)) *
                 (con(2, ctx) * n + a11 - con(7, ctx));
  // (n)_6 is forced by the k = 6 recursion step applied to p3.
  chk(r, "p6 = (n)_6 / (18(2n + a11 - 4)(2n + a11 - 7))",
      p[6] == RatFn(falling(n, 6), p6_den));

  bool rec_ok = true;
  for (int k = 1; k <= 9; ++k) {
    MPoly mult = con(long(k) * (k + 1), ctx) - con(2 * long(k), ctx) * n -
                 con(long(k), ctx) * a11;
    RatFn lhs = p[std::size_t(k)] * RatFn(mult);
    RatFn rhs = k >= 3 ? RatFn(-falling(n - con(long(k) - 3, ctx), 3)) *
                             p[std::size_t(k - 3)]
                       : RatFn();
    rec_ok = rec_ok && lhs == rhs;
  }
  chk(r, "p_k (k(k+1) - 2kn - k a11) = -(n-k+3)_3 p_(k-3) for k = 1..9", rec_ok);

  const BSeries& s = pc.series;
  chk(r, "b0 = b1 = 0", s.b[0].is_zero() && s.b[1].is_zero());
  chk(r, "b2 = -Delta p3, nonzero",
      !s.b[2].is_zero() && s.b[2] == -(p[3].shifted("n", 1) - p[3]));
  chk(r, "b3 = b4 = 0", s.b[3].is_zero() && s.b[4].is_zero());
  chk(r, "b5 matches its closed form", s.b[5] == pure_b5_reference(ctx));

  // The linear factor 8 - 4n - 3a11 comes out of b2 = -Delta p3 directly;
  // it is what the concrete tables reproduce.
  MPoly bp_num = falling(n, 3) * falling(n, 2) *
                 (con(8, ctx) - con(4, ctx) * n - con(3, ctx) * a11);
  MPoly two = con(2, ctx) * n + a11;
  MPoly bp_den = con(9, ctx) * (two - con(2, ctx)) * (two - con(4, ctx)) *
                 (two - con(4, ctx));
  chk(r, "b2 p3 = (n)_3 (n)_2 (8 - 4n - 3a11) / (9(2n+a11-2)(2n+a11-4)^2)",
      s.b[2] * p[3] == RatFn(bp_num, bp_den));
  // The b5 cascade term is b2(n) p3(n-2); checking it reproduces b5.
  chk(r, "b5 = -Delta p6 - b2(n) p3(n-2)",
      s.b[5] == -delta(p[6]) - s.b[2] * p[3].shifted("n", -2));
  return r;
}

MPoly stated_denominator(const ContextPtr& ctx, const MPoly& a11) {
  MPoly n = var("n", ctx);
  auto lin = [&](long c) { return a11 + con(2, ctx) * n + con(c, ctx); };
  MPoly d = con(24, ctx) * lin(-5) * lin(-4) * lin(-1);
  d *= lin(-3) * lin(-3);
  for (int i = 0; i < 4; ++i) d *= lin(-2);
  return d;
}

// Clears b3 against the stated denominator and reports the coefficients of
// powers of n.
// The stated reference tables evaluate the cascade tail at n, so the same
// variant is used here; the corrected-cascade facts are checked separately.
std::optional<std::vector<MPoly>> cleared_b3_coeffs(
    const std::map<std::string, MPoly>& fixed, CaseResult& r,
    const std::string& label) {
  SymbolicAnsatz ansatz = quadratic_lambda_ansatz(fixed);
  BSeries s = symbolic_b_tail_at_n(ansatz, 3);
  const ContextPtr& ctx = ansatz.context();
  auto it = fixed.find("a11");
  MPoly a11 = it == fixed.end() ? var("a11", ctx) : it->second.in_context(ctx);
  std::optional<MPoly> cleared =
      clear_denominator(s.b[3], stated_denominator(ctx, a11));
  chk(r, label + ": b3 times the stated denominator is a polynomial",
      cleared.has_value());
  if (!cleared) return std::nullopt;
  return cleared->coeffs_in("n");
}

// Product of the factors (2n + a11 + c) for each listed c; the recurrence
// cascade leaves exactly these in the reduced denominator of b3.
MPoly lin_product(const ContextPtr& ctx, std::initializer_list<long> cs) {
  MPoly n = var("n", ctx), a11 = var("a11", ctx);
  MPoly d = con(1, ctx);
  for (long c : cs) d *= a11 + con(2, ctx) * n + con(c, ctx);
  return d;
}

CaseResult case_quadratic_lambda() {
  CaseResult r{"quadratic-lambda", {}};
  ContextPtr seed = make_context({"a11"});
  auto fixed_const = [&](std::map<std::string, MPoly> m, const char* k, long v) {
    m.emplace(k, MPoly::constant(Rational(v), seed));
    return m;
  };
  std::map<std::string, MPoly> generic;
  generic = fixed_const(generic, "a31", 1);
  generic = fixed_const(generic, "a30", 2);
  generic = fixed_const(generic, "a20", 3);
  generic = fixed_const(generic, "a10", 7);

  auto leading_is = [&](const std::vector<MPoly>& cs, std::size_t deg,
                        long want) {
    return cs.size() == deg + 1 && cs[deg].is_constant() &&
           cs[deg].constant_value() == want;
  };

  if (auto cs = cleared_b3_coeffs(fixed_const(generic, "a32", 1), r, "a32=1"))
    chk(r, "a32=1: cleared b3 has degree 13 with leading 11184",
        leading_is(*cs, 13, 11184));
  if (auto cs = cleared_b3_coeffs(fixed_const(generic, "a32", 0), r, "a32=0,a31=1"))
    chk(r, "a32=0, a31=1: cleared b3 has degree 11 with leading 4224",
        leading_is(*cs, 11, 4224));

  std::map<std::string, MPoly> constant_a3;
  constant_a3 = fixed_const(constant_a3, "a32", 0);
  constant_a3 = fixed_const(constant_a3, "a31", 0);
  constant_a3 = fixed_const(constant_a3, "a30", 1);
  if (auto cs = cleared_b3_coeffs(constant_a3, r, "a32=a31=0, a30=1")) {
    ContextPtr p = make_context({"a20", "a10", "a11"});
    MPoly a20 = var("a20", p), a10 = var("a10", p);
    MPoly m9 = con(768, p) * a20 * a20 + con(2304, p) * a10;
    chk(r, "m9 = 8(96 a20^2 + 288 a10)",
        cs->size() > 9 && ((*cs)[9] - m9).is_zero());
  }

  // Substituted branch: a10 = -a20^2/3 and a11 = 2.
  ContextPtr q = make_context({"a20"});
  MPoly a20q = var("a20", q);
  std::map<std::string, MPoly> sub = constant_a3;
  sub.emplace("a10", MPoly::constant(Rational(-1) / 3, q) * a20q * a20q);
  sub.emplace("a11", MPoly::constant(Rational(2), q));
  if (auto cs = cleared_b3_coeffs(sub, r, "a10=-a20^2/3, a11=2")) {
    MPoly a2 = a20q * a20q;
    MPoly m6 = MPoly::constant(Rational(-64) / 3, q) * a2 *
               (con(27, q) + con(4, q) * a2 * a20q);
    MPoly m7 = MPoly::constant(Rational(64) / 3, q) * a2 *
               (con(9, q) + con(2, q) * a2 * a20q);
    chk(r, "m6 = -64/3 a20^2 (27 + 4 a20^3)",
        cs->size() > 6 && ((*cs)[6] - m6).is_zero());
    chk(r, "m7 = 64/3 a20^2 (9 + 2 a20^3)",
        cs->size() > 7 && ((*cs)[7] - m7).is_zero());
    // 27 + 4t and 9 + 2t share no root, so m6 = m7 = 0 forces a20 = 0.
    chk(r, "m6 and m7 have no common nonzero root",
        Rational(4) * 9 - Rational(2) * 27 != 0);
  }

  // The same branches through the recurrence cascade itself. The index
  // shifts in the tail change the reduced denominator and the degrees.
  auto corrected_cleared = [&](const std::map<std::string, MPoly>& fixed,
                               std::initializer_list<long> lins,
                               const std::string& label) {
    SymbolicAnsatz ansatz = quadratic_lambda_ansatz(fixed);
    BSeries s = symbolic_b(ansatz, 3);
    std::optional<MPoly> cleared =
        clear_denominator(s.b[3], lin_product(ansatz.context(), lins));
    chk(r, label + ": recurrence b3 clears against its reduced denominator",
        cleared.has_value());
    return cleared;
  };
  if (auto c = corrected_cleared(fixed_const(generic, "a32", 1),
                                 {-2, -3, -4, -5, -6}, "a32=1")) {
    std::vector<MPoly> cs = c->coeffs_in("n");
    chk(r, "a32=1: recurrence b3 numerator has degree 9 with leading 1",
        leading_is(cs, 9, 1));
  }
  if (auto c = corrected_cleared(fixed_const(generic, "a32", 0),
                                 {-2, -3, -5, -6}, "a32=0,a31=1")) {
    std::vector<MPoly> cs = c->coeffs_in("n");
    chk(r, "a32=0, a31=1: recurrence b3 numerator has degree 6 with leading 3/2",
        cs.size() == 7 && cs[6].is_constant() &&
            cs[6].constant_value() == Rational(3) / 2);
  }
  if (auto c = corrected_cleared(constant_a3, {-2, -3, -5, -6},
                                 "a32=a31=0, a30=1")) {
    ContextPtr cx = c->context();
    MPoly n = var("n", cx), a11v = var("a11", cx), a10v = var("a10", cx);
    MPoly want = a10v * n * (n - con(1, cx)) *
                 (con(3, cx) * n * n +
                  (con(2, cx) * a11v - con(13, cx)) * n + con(14, cx) -
                  con(4, cx) * a11v);
    chk(r, "constant a3: recurrence b3 is a10 n (n-1) (3n^2 + (2a11-13)n + 14 - 4a11) over the denominator",
        (*c - want).is_zero());
  }

  PureCase pc = pure_case(5);
  chk(r, "pure case: b5 matches its closed form",
      pc.series.b[5] == pure_b5_reference(pc.ansatz.context()));
  return r;
}

XPoly shifted_monomial_power(const Rational& p, unsigned n) {
  XPoly base({-p, Rational(1)});
  XPoly out(Rational(1));
  for (unsigned i = 0; i < n; ++i) out = out * base;
  return out;
}

CaseResult case_cubic_lambda() {
  CaseResult r{"cubic-lambda", {}};
  DeltaIdentityReport rep = delta_identities();
  chk(r, "third forward difference of cubic lambda is 6", rep.identity_i == MPoly(6));
  chk(r, "T^-6 obstruction constant is 48", rep.identity_ii == MPoly(48));
  chk(r, "T^-3 obstruction constant is -6", rep.identity_iii == MPoly(-6));
  chk(r, "all three identities pass", rep.all_pass);

  std::mt19937 rng(20240817u);
  auto rnd = [&](bool nonzero) {
    long v = long(rng() % 9) - 4;
    if (nonzero && v == 0) v = 3;
    return Rational(v);
  };
  ContextPtr ctx = make_context({"n"});
  MPoly n = var("n", ctx);
  auto random_poly = [&](bool nonzero) {
    MPoly p = con(0, ctx);
    for (int d = 0; d <= 2; ++d) p += MPoly::constant(rnd(false), ctx) * pow(n, unsigned(d));
    if (nonzero) p += con(11, ctx);  // constant term at least 7, so nonzero
    return p;
  };

  bool b2_offsets = true, b1_offsets = true;
  for (int trial = 0; trial < 5; ++trial) {
    MPoly lam = falling(n, 3) + MPoly::constant(rnd(false), ctx) * falling(n, 2) +
                MPoly::constant(rnd(false), ctx) * n;
    ShiftOp lam_b2 = ShiftOp::shift(1);
    lam_b2.set(0, RatFn(random_poly(false)));
    lam_b2.set(-1, RatFn(random_poly(false)));
    lam_b2.set(-2, RatFn(random_poly(true)));
    AdCertificate c2 = ad_condition_check(XPoly::monomial(3), 3, lam, lam_b2);
    b2_offsets = b2_offsets && !c2.matches && c2.mismatch_offset &&
                 *c2.mismatch_offset == -6;

    ShiftOp lam_b1 = ShiftOp::shift(1);
    lam_b1.set(0, RatFn(random_poly(false)));
    lam_b1.set(-1, RatFn(random_poly(true)));
    AdCertificate c1 = ad_condition_check(XPoly::monomial(3), 3, lam, lam_b1);
    b1_offsets = b1_offsets && !c1.matches && c1.mismatch_offset &&
                 *c1.mismatch_offset == -3;
  }
  chk(r, "random nonzero b2 with cubic lambda mismatches at offset -6", b2_offsets);
  chk(r, "random nonzero b1 with cubic lambda mismatches at offset -3", b1_offsets);

  bool cubic_ok = true;
  for (long pv : {0L, 1L, -2L}) {
    FamilySpec spec{"cubicpoint",
                    {{"p", Rational(pv)}, {"nu", Rational(1)}, {"mu", Rational(1)}}};
    DiffOp op = conjecture_family(spec);
    EigenSeq seq = op.eigen_sequence(8);
    for (unsigned k = 0; k <= 8; ++k)
      cubic_ok = cubic_ok &&
                 seq.polys[k] == shifted_monomial_power(Rational(pv), k);
    RecTable t = recurrence_table(seq);
    cubic_ok = cubic_ok && t.bandwidth && *t.bandwidth == 0;
    for (long m = 0; m < t.max_index; ++m)
      cubic_ok = cubic_ok && t.rows[std::size_t(m)][0] == Rational(pv);
  }
  chk(r, "cubicpoint families give P_n = (x-p)^n with d = 0, b0 = p", cubic_ok);
  return r;
}

CaseResult case_main() {
  CaseResult r{"families", {}};
  std::vector<std::array<Rational, 3>> triples = {
      {Rational(1), Rational(2), Rational(3)},
      {Rational(1) / 2, Rational(-2), Rational(3) / 5},
      {Rational(0), Rational(1), Rational(1)},
      {Rational(-1), Rational(5) / 7, Rational(2)}};

  for (const std::string& family : {std::string("type1"), std::string("appell")}) {
    bool d_ok = true, cmp_ok = true, ad_ok = true, shape_ok = true;
    std::string shifts;
    for (const auto& tr : triples) {
      FamilySpec spec{family,
                      {{"k", Rational(3)},
                       {"a1", tr[0]},
                       {"a2", tr[1]},
                       {"a3", tr[2]}}};
      DiffOp op = conjecture_family(spec);
      EigenSeq seq = op.eigen_sequence(40);
      RecTable t = recurrence_table(seq);
      d_ok = d_ok && t.bandwidth && *t.bandwidth == 2;
      reconstruct_table(t);
      RecurrenceComparison cmp = compare_recurrence(spec, t);
      cmp_ok = cmp_ok && cmp.matched();
      if (cmp.shift) shifts += (shifts.empty() ? "" : ",") + std::to_string(*cmp.shift);

      ShiftOp lam = lambda_from_table(t);
      AdCertificate cert = ad_condition_check(op, lam);
      ad_ok = ad_ok && cert.matches && cert.ad_k1_zero;
      if (family == "appell")
        shape_ok = shape_ok && cert.poly_coeffs.size() == 4 &&
                   cert.poly_coeffs[0] == 6 * tr[2] &&
                   cert.poly_coeffs[1] == 0 && cert.poly_coeffs[2] == 0 &&
                   cert.poly_coeffs[3] == 0;
    }
    chk(r, family + "(3): d = 2 at N = 40 for four parameter triples", d_ok);
    chk(r, family + "(3): reference forms match up to an index shift", cmp_ok,
        "shift verdicts sigma = [" + shifts + "]");
    chk(r, family + "(3): ad^3 = 6 a3(Lambda) and ad^4 = 0", ad_ok);
    if (family == "appell")
      chk(r, "appell(3): certificate coefficients are (0,0,0,6 a3)", shape_ok);

    BSeries s = symbolic_b(order3_family_ansatz(family == "type1"), 5);
    chk(r, family + "(3) symbolic: b3 = b4 = b5 = 0 identically",
        s.b[3].is_zero() && s.b[4].is_zero() && s.b[5].is_zero());
  }
  return r;
}

}  // namespace

std::vector<std::string> case_names() {
  return {"quadratic-a3", "linear-a3",      "pure-cubic",
          "cubic-lambda", "quadratic-lambda", "families"};
}

CaseResult run_case(const std::string& name) {
  if (name == "quadratic-a3") return case_quadratic_a3();
  if (name == "linear-a3") return case_linear_a3();
  if (name == "pure-cubic") return case_pure_cubic();
  if (name == "cubic-lambda") return case_cubic_lambda();
  if (name == "quadratic-lambda") return case_quadratic_lambda();
  if (name == "families") return case_main();
  throw InvalidSpec("unknown reproduction case: " + name);
}

std::vector<CaseResult> run_all_cases() {
  std::vector<std::string> names = case_names();
  std::size_t cap = names.size();
  if (const char* env = std::getenv("BOCHNER_LAB_THREADS")) {
    long v = std::atol(env);
    if (v >= 1) cap = std::min<std::size_t>(cap, std::size_t(v));
  }
  std::vector<CaseResult> results(names.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < names.size(); i = next++)
      results[i] = run_case(names[i]);
  };
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < cap; ++t) pool.emplace_back(worker);
  worker();
  for (std::thread& t : pool) t.join();
  return results;
}

}  // namespace bochnerlab
