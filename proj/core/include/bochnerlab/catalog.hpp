#pragma once

#include <map>
#include <optional>
#include <string>

#include "bochnerlab/diffop.hpp"
#include "bochnerlab/ratfn.hpp"
#include "bochnerlab/recurrence.hpp"

namespace bochnerlab {

// Named operator family with rational arguments. Accepted names and keys:
//   hermite                      (no arguments)
//   laguerre    alpha
//   jacobi      alpha, beta
//   bessel                       (no arguments)
//   type1       k, a1..ak        (a_k != 0)
//   appell      k, a1..ak        (a_k != 0)
//   type2       l, a0..a(l-1), q1..qD   (a_(l-1) != 0, q without constant term)
//   cubicpoint  p, nu, mu
struct FamilySpec {
  std::string name;
  std::map<std::string, Rational> args;

  Rational arg(const std::string& key) const;  // throws InvalidSpec if missing
  Rational arg_or(const std::string& key, const Rational& fallback) const;
};

// Order-2 classical operators, normalized so lambda(n) has positive leading
// coefficient:
//   hermite      x d - d^2                      lambda(n) = n
//   laguerre(a)  -x d^2 + (x - a - 1) d         lambda(n) = n
//   jacobi(a,b)  (x^2-1) d^2 + ((a+b+2)x + (a-b)) d,  lambda(n) = n(n+a+b+1)
//   bessel       x^2 d^2 + (2x+2) d             lambda(n) = n(n+1)
DiffOp classical_family(const FamilySpec& spec);

// The higher-order families:
//   type1:      sum_{j=1..k} a_j x^(j-1) d^j + x d
//   appell:     sum_{j=1..k} a_j d^j + x d
//   type2:      q'(G) G + x d  with  G = (sum_{m<l} a_m (x d)^m) d
//   cubicpoint: 6 (x-p)^3 d^3 + nu (x-p)^2 d^2 + mu (x-p) d
DiffOp conjecture_family(const FamilySpec& spec);

// Dispatch over both sets of names.
DiffOp family_operator(const FamilySpec& spec);

// Reference closed forms b_j(n) for type1(3) and appell(3):
//   type1:  b_0 = -(a1 + 2(n-1)a2 + 3(n-1)(n-2)a3)
//           b_1 = (n-1)(a2 + (3n-6)a3)(a1 + (n-2)a2 + (n-2)(n-3)a3)
//           b_2 = -(n-1)(n-2)a3 (a1 + (n-3)a2 + (n-3)(n-4)a3)
//                                (a1 + (n-2)a2 + (n-2)(n-3)a3)
//   appell: b_0 = -a1, b_1 = -a2(n-1), b_2 = -a3(n-1)(n-2)
std::map<int, RatFn> expected_recurrence(const FamilySpec& spec);

// Compares the reference forms against a reconstructed table, scanning a
// uniform index shift sigma in {-1, 0, +1}: match means
// reference(n + sigma) = reconstructed(n) for every j. The verdict records
// sigma; neither side is ever edited to force agreement.
struct RecurrenceComparison {
  std::map<int, RatFn> reference;
  std::map<int, RatFn> extracted;
  std::optional<int> shift;
  bool matched() const { return shift.has_value(); }
};
RecurrenceComparison compare_recurrence(const FamilySpec& spec,
                                        const RecTable& table);

}  // namespace bochnerlab
