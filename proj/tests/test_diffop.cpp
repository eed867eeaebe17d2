#include "doctest.h"

#include <bochnerlab/diffop.hpp>
#include <bochnerlab/errors.hpp>

using namespace bochnerlab;

namespace {

XPoly xp(std::vector<Rational> c) { return XPoly(std::move(c)); }

// x d - d^2, eigenvalue n.
DiffOp hermite_like() {
  return DiffOp::build({xp({0, 1}), xp({-1})});
}

}  // namespace

TEST_CASE("xpoly basics") {
  XPoly p({1, 0, 3});  // 3x^2 + 1
  CHECK(p.degree() == 2);
  CHECK(p[2] == 3);
  CHECK(p[5] == 0);
  CHECK(p.derivative() == xp({0, 6}));
  CHECK(p.derivative(3).is_zero());
  CHECK(p.shifted_up(2) == xp({0, 0, 1, 0, 3}));
  CHECK(p.eval(Rational(2)) == 13);
  CHECK(XPoly::monomial(3) * XPoly::monomial(2) == XPoly::monomial(5));
  CHECK(p.composed_affine(Rational(1), Rational(-1)) == xp({4, -6, 3}));
}

TEST_CASE("exactly solvable shape is validated") {
  CHECK(hermite_like().exactly_solvable());
  // a_1 = x^2 breaks deg a_i <= i.
  CHECK(!DiffOp::build({xp({0, 0, 1})}).exactly_solvable());
  // strict inequality everywhere: no diagonal entry at all.
  CHECK(!DiffOp::build({xp({1})}).exactly_solvable());
}

TEST_CASE("lambda from the diagonal") {
  DiffOp op = hermite_like();
  CHECK(op.lambda_at(0) == 0);
  CHECK(op.lambda_at(7) == 7);
  // x^2 d^2 + (2x+2) d: lambda(n) = n(n-1) + 2n = n(n+1).
  DiffOp bessel_like = DiffOp::build({xp({2, 2}), xp({0, 0, 1})});
  CHECK(bessel_like.lambda_at(5) == 30);
}

TEST_CASE("eigenpolynomials are monic eigenvectors") {
  DiffOp op = hermite_like();
  EigenSeq seq = op.eigen_sequence(6);
  REQUIRE(seq.polys.size() == 7);
  CHECK(seq.polys[2] == xp({-1, 0, 1}));        // x^2 - 1
  CHECK(seq.polys[3] == xp({0, -3, 0, 1}));     // x^3 - 3x
  for (long n = 0; n <= 6; ++n) {
    CHECK(op.apply(seq.polys[std::size_t(n)]) ==
          seq.lambda[std::size_t(n)] * seq.polys[std::size_t(n)]);
    CHECK(seq.polys[std::size_t(n)][std::size_t(n)] == 1);
  }
}

TEST_CASE("cubic with constant tail") {
  // d^3 + x d has lambda(n) = n and P_3 = x^3 + 2.
  DiffOp op = DiffOp::build({xp({0, 1}), XPoly(), xp({1})});
  XPoly p3 = op.eigenpolynomial(3);
  CHECK(op.apply(p3) == Rational(3) * p3);
  CHECK(p3 == xp({2, 0, 0, 1}));
}

TEST_CASE("resonance is reported with both indices") {
  // x^2 d^2 - 3 x d: lambda(n) = n^2 - 4n, lambda(1) = lambda(3) = -3.
  DiffOp op = DiffOp::build({xp({0, -3}), xp({0, 0, 1})});
  try {
    op.eigenpolynomial(3);
    FAIL("expected Resonance");
  } catch (const Resonance& e) {
    CHECK(e.m == 1);
    CHECK(e.n == 3);
  }
}

TEST_CASE("affine conjugation preserves eigenvalues") {
  DiffOp op = hermite_like();
  DiffOp moved = op.affine_conjugated(Rational(2), Rational(-3));
  for (long n = 0; n <= 5; ++n) CHECK(moved.lambda_at(n) == op.lambda_at(n));
  EigenSeq seq = moved.eigen_sequence(4);
  CHECK(moved.apply(seq.polys[4]) == seq.lambda[4] * seq.polys[4]);
}

TEST_CASE("general operator algebra") {
  GenDiffOp d = GenDiffOp::derivative();
  GenDiffOp x = GenDiffOp::multiplication(XPoly::monomial(1));
  // [d, x] = 1 as operators: d*x - x*d.
  GenDiffOp commutator = d * x - x * d;
  CHECK(commutator == GenDiffOp({XPoly(Rational(1))}));
  // ad_x of d is [x, d] = -1.
  CHECK(d.ad_x() == GenDiffOp({XPoly(Rational(-1))}));
  // (d^2) x^3 = 6x via apply.
  CHECK(pow(d, 2).apply(XPoly::monomial(3)) == Rational(6) * XPoly::monomial(1));
}
