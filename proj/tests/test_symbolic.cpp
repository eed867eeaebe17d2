#include "doctest.h"

#include <bochnerlab/errors.hpp>
#include <bochnerlab/parser.hpp>
#include <bochnerlab/symbolic.hpp>

using namespace bochnerlab;

namespace {

MPoly C(const std::string& text, const std::vector<std::string>& vars) {
  return parse_poly(text, vars);
}

// x^2 d^2 + c x d + d^3 with c either a free parameter name or a number.
SymbolicAnsatz cubic_tail_ansatz(const std::string& c) {
  std::vector<std::string> vars = c == "3" ? std::vector<std::string>{}
                                           : std::vector<std::string>{c};
  return SymbolicAnsatz::build({{C("0", vars), C(c, vars)},
                                {C("0", vars), C("0", vars), C("1", vars)},
                                {C("1", vars)}});
}

}  // namespace

TEST_CASE("ansatz grid, context, and lambda") {
  SymbolicAnsatz s = SymbolicAnsatz::build(
      {{C("a10", {"a10"}), C("a11", {"a11"})},
       {C("a20", {"a20"}), C("0", {}), C("1", {})}});
  CHECK(s.order() == 2);
  CHECK(s.a(1, 1) == parse_poly("a11", {"a10", "a11", "a20", "n"})
                         .in_context(s.context()));
  CHECK(s.a(2, 2) == MPoly::constant(Rational(1), s.context()));
  CHECK(s.a(2, 5).is_zero());
  CHECK(s.a(3, 0).is_zero());
  // lambda(n) = a11 n + n(n-1).
  CHECK(s.lambda() ==
        parse_poly("a11*n + n^2 - n", {"a11", "n"}).in_context(s.context()));
}

TEST_CASE("coefficient rows beyond the degree bound are rejected") {
  CHECK_THROWS_AS(
      SymbolicAnsatz::build({{C("1", {}), C("1", {}), C("1", {})}}),
      InvalidSpec);
}

TEST_CASE("identically resonant lambda is reported") {
  // a_1 constant: lambda(n) = 0, so lambda(n) - lambda(n-1) vanishes.
  SymbolicAnsatz s = SymbolicAnsatz::build({{C("a10", {"a10"})}});
  try {
    symbolic_p(s, 2);
    FAIL("expected IdenticallyResonant");
  } catch (const IdenticallyResonant& e) {
    CHECK(e.k == 1);
  }
}

TEST_CASE("p_6 of the constant-cubic-tail operator") {
  SymbolicAnsatz s = cubic_tail_ansatz("a11");
  RatFn p6 = symbolic_p_single(s, 6);
  MPoly num = parse_poly("n*(n-1)*(n-2)*(n-3)*(n-4)*(n-5)", {"a11", "n"});
  MPoly den =
      parse_poly("18*(2*n + a11 - 4)*(2*n + a11 - 7)", {"a11", "n"});
  CHECK(p6 == RatFn(num, den));
}

TEST_CASE("b_5 of the constant-cubic-tail operator at a11 = 3") {
  SymbolicAnsatz s = cubic_tail_ansatz("3");
  BSeries series = symbolic_b(s, 5);
  MPoly num = parse_poly("1/9*n*(n-1)*(n-2)*(n-3)*(n-4)*(5*n-7)", {"n"});
  MPoly den = parse_poly("(2*n-1)*(2*n-2)*(2*n-4)*(2*n-5)", {"n"});
  CHECK(series.b[5] == RatFn(num, den));
  auto at = [&](long n) { return series.b[5].eval({{"n", Rational(n)}}); };
  CHECK(at(5) == Rational(1) / 9);
  CHECK(at(8) == Rational(8) / 9);
  CHECK(at(11) == Rational(352) / 153);
  CHECK(at(13) == Rational(377) / 105);
}

TEST_CASE("tail-at-n variant differs only where the tail matters") {
  SymbolicAnsatz s = cubic_tail_ansatz("a11");
  BSeries shifted = symbolic_b(s, 5);
  BSeries plain = symbolic_b_tail_at_n(s, 5);
  // b_0..b_2 have no lower-order tail contributions here.
  for (int j = 0; j <= 2; ++j) CHECK(shifted.b[std::size_t(j)] == plain.b[std::size_t(j)]);
  CHECK(shifted.b[5] != plain.b[5]);
}

TEST_CASE("parameter constraints by descending power of n") {
  RatFn b(parse_poly("(a - b)*n^2 + a*b*n + 3*a", {"a", "b", "n"}));
  std::vector<Constraint> full = parameter_constraints(b, false);
  REQUIRE(full.size() == 3);
  CHECK(full[0].power == 2);
  CHECK(full[0].coeff == parse_poly("a - b", {"a", "b", "n"}));
  CHECK(full[1].power == 1);
  CHECK(full[1].coeff == parse_poly("a*b", {"a", "b", "n"}));
  CHECK(full[2].power == 0);

  std::vector<Constraint> lin = parameter_constraints(b, true);
  REQUIRE(lin.size() == 2);
  CHECK(lin[0].power == 2);
  CHECK(lin[1].power == 0);
  CHECK(lin[1].coeff == parse_poly("3*a", {"a", "b", "n"}));
}

TEST_CASE("clear_denominator certifies polynomial products") {
  MPoly num = parse_poly("n^2 - 1", {"n"});
  MPoly den = parse_poly("(2*n - 1)*(2*n - 2)", {"n"});
  RatFn b(num, den);
  std::optional<MPoly> cleared =
      clear_denominator(b, parse_poly("(2*n - 1)*(2*n - 2)*(2*n - 3)", {"n"}));
  REQUIRE(cleared.has_value());
  CHECK(*cleared == parse_poly("(n^2 - 1)*(2*n - 3)", {"n"}));
  // (n^2-1)/((2n-1)(2n-2)) reduces to (n+1)/(2(2n-1)); a multiplier missing
  // the surviving factor 2n-1 cannot clear it.
  CHECK(!clear_denominator(b, parse_poly("n - 1", {"n"})).has_value());
}
