#pragma once

#include <optional>
#include <vector>

#include "bochnerlab/ratfn.hpp"

namespace bochnerlab {

// Operator ansatz with coefficients polynomial in free parameters: the grid
// a_{ij} (coefficient of x^j in a_i(x)) lives over a parameter-only context;
// lambda(n) = sum a_{ii} (n)_i over the joint (n, parameters) context.
class SymbolicAnsatz {
 public:
  // coeffs[i-1] lists a_i(x) ascending in x (length at most i+1).
  static SymbolicAnsatz build(std::vector<std::vector<MPoly>> coeffs);

  int order() const { return int(grid_.size()); }
  // a_{ij}; zero when j is out of range.
  MPoly a(int i, int j) const;
  const MPoly& lambda() const { return lambda_; }
  const ContextPtr& context() const { return ctx_; }  // n + parameters

 private:
  std::vector<std::vector<MPoly>> grid_;
  MPoly lambda_;
  ContextPtr ctx_;
};

// Coefficients p_k(n) of P_n = x^n + p_1(n) x^{n-1} + ... and the recurrence
// coefficients b_j(n) derived from them, as rational functions of n and the
// parameters.
struct BSeries {
  std::vector<RatFn> p;  // index 0..kmax, p[0] = 1
  std::vector<RatFn> b;  // index 0..jmax
};

// p_k(n) with (lambda(n) - lambda(n-k)) p_k = triangular right-hand side.
// Throws IdenticallyResonant when lambda(n) - lambda(n-k) vanishes.
std::vector<RatFn> symbolic_p(const SymbolicAnsatz& ansatz, int kmax);

RatFn symbolic_p_single(const SymbolicAnsatz& ansatz, int k);

// b_0..b_jmax via the cascade b_j = -Delta p_{j+1} - sum_{i<j} b_i p_{j-i}.
BSeries symbolic_b(const SymbolicAnsatz& ansatz, int jmax);

// Variant of the cascade that evaluates the lower-order tail p_{j-i} at n
// instead of n - i. This does not give the recurrence coefficients, but some
// reference tables were produced with this simplification and the variant is
// kept so they can be reproduced exactly.
BSeries symbolic_b_tail_at_n(const SymbolicAnsatz& ansatz, int jmax);

struct Constraint {
  int power;    // power of n
  MPoly coeff;  // polynomial in the parameters
};

// Coefficients of the numerator of b by descending powers of n. With
// linearize, only the part of total degree <= 1 in the parameters is kept.
std::vector<Constraint> parameter_constraints(const RatFn& b, bool linearize);

// b times the stated denominator, when that product is a polynomial.
std::optional<MPoly> clear_denominator(const RatFn& b, const MPoly& denominator);

}  // namespace bochnerlab
