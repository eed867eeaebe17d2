#pragma once

#include <optional>
#include <vector>

#include "bochnerlab/diffop.hpp"
#include "bochnerlab/recurrence.hpp"
#include "bochnerlab/shiftop.hpp"

namespace bochnerlab {

// Lower-upper factorization of a tridiagonal monic Lambda shifted by c:
//   Lambda - c I = (T + f(n) I) (I + h(n) T^{-1}),
// stored through the concrete values f(0..N-1), h(0..N).
struct DarbouxFactors {
  Rational c;
  std::vector<Rational> f;  // f(n), n = 0..N-1
  std::vector<Rational> h;  // h(n), n = 0..N
};

// Runs the recursion f(n) = v(n)/h(n), h(n+1) = u(n) - c - f(n) from a seed
// h(0). Throws Breakdown(n) at the first vanishing h(n), n <= max_n.
// v(0) is taken as 0 (no P_{-1} term in the recurrence).
DarbouxFactors factor_lu(const std::vector<Rational>& u,
                         const std::vector<Rational>& v, const Rational& c,
                         const Rational& h0, long max_n);

// Same recursion driven by a monic tridiagonal band T + u(n) I + v(n) T^{-1};
// rejects any other band shape, including identically zero v.
DarbouxFactors factor_lu(const ShiftOp& lam, const Rational& c,
                         const Rational& h0, long max_n);

// Seed policy: try the given h0 values in order, return the first that
// survives to max_n; reports every breakdown index otherwise.
struct FactorAttempt {
  Rational h0;
  std::optional<DarbouxFactors> factors;
  long breakdown_index = -1;  // set when factors is empty
};
std::vector<FactorAttempt> factor_lu_auto(const std::vector<Rational>& u,
                                          const std::vector<Rational>& v,
                                          const Rational& c,
                                          const std::vector<Rational>& seeds,
                                          long max_n);

// Swapped product Lambda-hat = (I + h T^{-1})(T + f I) + c I and the
// transformed sequence P-hat_n = P_n + h(n) P_{n-1}. The new band values are
//   u-hat(n) = f(n) + h(n) + c,   v-hat(n) = h(n) f(n-1).
struct DarbouxSwap {
  std::vector<Rational> u_hat;     // n = 0..N-1
  std::vector<Rational> v_hat;     // n = 1..N-1 stored at index n
  std::vector<XPoly> transformed;  // P-hat_0..P-hat_N
  bool verified = false;           // x P-hat_n band identity checked exactly
};
DarbouxSwap swap_and_transform(const DarbouxFactors& factors,
                               const std::vector<XPoly>& polys);

// Searches for differential operators L = sum a_i(x) d^i, i = 1..max_order,
// deg a_i <= i + slack, with L Q_n = mu_n Q_n for every supplied polynomial;
// mu_n enters as the x^n coefficient of L Q_n, keeping the system linear in
// the a_{ij}. Solved by exact nullspace over all but three indices; every
// returned operator is validated on the full sequence, held-out indices
// included. Throws NoOperator when nothing survives.
std::vector<DiffOp> bispectral_completion(const std::vector<XPoly>& polys,
                                          int max_order, int slack = 0);

}  // namespace bochnerlab
