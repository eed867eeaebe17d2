#include "doctest.h"

#include <bochnerlab/catalog.hpp>
#include <bochnerlab/parser.hpp>
#include <bochnerlab/recurrence.hpp>
#include <bochnerlab/shiftop.hpp>

using namespace bochnerlab;

namespace {

RatFn R(const std::string& text) { return RatFn(parse_poly(text, {"n"})); }

}  // namespace

TEST_CASE("band bookkeeping drops zeros") {
  ShiftOp a = ShiftOp::shift(1);
  a.set(0, R("n"));
  a.set(0, RatFn());
  CHECK(a.band().size() == 1);
  CHECK(a.coeff(0).is_zero());
  CHECK(a.top_offset() == 1);
  CHECK(a.bottom_offset() == 1);
  CHECK((a - a).is_zero());
}

TEST_CASE("composition shifts the right factor") {
  // (T + n T^-1)^2 = T^2 + (2n+1) I + n(n-1) T^-2.
  ShiftOp lam = ShiftOp::shift(1);
  lam.set(-1, R("n"));
  ShiftOp sq = compose(lam, lam);
  CHECK(sq.coeff(2) == R("1"));
  CHECK(sq.coeff(0) == R("2*n + 1"));
  CHECK(sq.coeff(-2) == R("n*(n-1)"));
  CHECK(sq.coeff(1).is_zero());
  CHECK(sq == pow(lam, 2));
}

TEST_CASE("apply_at sums band entries against the sequence") {
  EigenSeq seq = family_operator(FamilySpec{"hermite", {}}).eigen_sequence(8);
  ShiftOp lam = make_lambda(R("0"), R("n"));
  // x P_n = P_{n+1} + n P_{n-1} for these eigenpolynomials.
  for (long n = 1; n <= 7; ++n)
    CHECK(lam.apply_at(seq.polys, n) == seq.polys[std::size_t(n)].shifted_up(1));
}

TEST_CASE("lambda_from_table equals make_lambda on a three-term family") {
  EigenSeq seq = family_operator(FamilySpec{"hermite", {}}).eigen_sequence(12);
  RecTable t = recurrence_table(seq);
  reconstruct_table(t);
  CHECK(lambda_from_table(t) == make_lambda(R("0"), R("n")));
}

TEST_CASE("ad_power matches explicit commutators") {
  ShiftOp lam = make_lambda(R("n"), R("n^2"));
  MPoly lpoly = parse_poly("n", {"n"});
  ShiftOp mult = ShiftOp::multiplication(lpoly);
  ShiftOp ad1 = compose(lam, mult) - compose(mult, lam);
  ShiftOp ad2 = compose(lam, ad1) - compose(ad1, lam);
  CHECK(ad_power(lam, lpoly, 1) == ad1);
  CHECK(ad_power(lam, lpoly, 2) == ad2);
  // Band rule for the first commutator: offset m carries
  // c_m(n) (lambda(n+m) - lambda(n)); the diagonal band dies.
  CHECK(ad1.coeff(0).is_zero());
  CHECK(ad1.coeff(1) == R("1"));
  CHECK(ad1.coeff(-1) == R("-n^2"));
}

TEST_CASE("delta identity constants") {
  DeltaIdentityReport rep = delta_identities();
  REQUIRE(rep.identity_i.is_constant());
  CHECK(rep.identity_i.constant_value() == 6);
  REQUIRE(rep.identity_ii.is_constant());
  CHECK(rep.identity_ii.constant_value() == 48);
  REQUIRE(rep.identity_iii.is_constant());
  CHECK(rep.identity_iii.constant_value() == -6);
  CHECK(rep.all_pass);
}

TEST_CASE("ad certificate for a cubic catalog family") {
  FamilySpec spec{"type1",
                  {{"k", Rational(3)},
                   {"a1", Rational(1)},
                   {"a2", Rational(2)},
                   {"a3", Rational(3)}}};
  DiffOp op = family_operator(spec);
  RecTable t = recurrence_table(op.eigen_sequence(24));
  reconstruct_table(t);
  AdCertificate cert = ad_condition_check(op, lambda_from_table(t));
  CHECK(cert.order == 3);
  CHECK(cert.ad_k1_zero);
  CHECK(cert.matches);
  CHECK(cert.matches_6a3());
}
