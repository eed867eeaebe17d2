#pragma once

#include <map>
#include <optional>
#include <vector>

#include "bochnerlab/diffop.hpp"
#include "bochnerlab/ratfn.hpp"
#include "bochnerlab/recurrence.hpp"

namespace bochnerlab {

// Finite-band operator sum_j c_j(n) T^j, T the shift n -> n+1, coefficients
// rational functions of n (and free parameters). No stored zero bands.
class ShiftOp {
 public:
  ShiftOp() = default;

  static ShiftOp identity();
  static ShiftOp shift(int offset = 1);  // T^offset
  // lambda(n) as the multiplication operator, band {0 -> lambda}.
  static ShiftOp multiplication(const RatFn& f);
  static ShiftOp multiplication(const MPoly& p) { return multiplication(RatFn(p)); }

  const std::map<int, RatFn>& band() const { return band_; }
  bool is_zero() const { return band_.empty(); }
  RatFn coeff(int offset) const;
  int top_offset() const;     // requires !is_zero()
  int bottom_offset() const;  // requires !is_zero()

  void set(int offset, RatFn c);

  ShiftOp operator-() const;
  ShiftOp& operator+=(const ShiftOp& rhs);
  ShiftOp& operator-=(const ShiftOp& rhs);
  friend ShiftOp operator+(ShiftOp a, const ShiftOp& b) { return a += b; }
  friend ShiftOp operator-(ShiftOp a, const ShiftOp& b) { return a -= b; }
  friend ShiftOp operator*(const RatFn& s, const ShiftOp& a);

  bool operator==(const ShiftOp& rhs) const;

  // (f T^i)(g T^j) = f(n) g(n+i) T^(i+j)
  friend ShiftOp compose(const ShiftOp& a, const ShiftOp& b);

  // Acts on a polynomial sequence at index n: sum_j c_j(n) P_{n+j}.
  XPoly apply_at(const std::vector<XPoly>& seq, long n) const;

  std::map<std::string, std::string> band_strings() const;

 private:
  std::map<int, RatFn> band_;
};

ShiftOp pow(const ShiftOp& a, unsigned e);

// ad_Lam lambda = [Lam, lambda(n) I]; k-fold iterate.
ShiftOp ad_power(const ShiftOp& lam_op, const MPoly& lambda, unsigned k);

// Tridiagonal monic Lambda = T + u(n) I + v(n) T^{-1} from closed forms.
ShiftOp make_lambda(const RatFn& u, const RatFn& v);
// Lambda = T + sum_j b_j(n) T^{-j} from a fully reconstructed table.
ShiftOp lambda_from_table(const RecTable& table);

// Certificate for ad^{k+1}_Lambda lambda = 0 and ad^k = k! a_k(Lambda).
struct AdCertificate {
  int order = 0;
  ShiftOp ad_k;       // ad^k
  ShiftOp ad_k1;      // ad^{k+1}
  bool ad_k1_zero = false;
  bool matches = false;         // ad^k == k! a_k(Lambda)
  // For order 3: (alpha, beta, gamma, delta) = 6 (a33, a32, a31, a30).
  std::vector<Rational> poly_coeffs;  // ascending, k!*a_k coefficients
  // First offending T-offset (scanning from the lowest) and difference.
  std::optional<int> mismatch_offset;
  RatFn mismatch_diff;
  bool matches_6a3() const { return order == 3 && ad_k1_zero && matches; }
};

// Checks the ad-condition for an order-k operator L against Lambda:
// ad^{k+1}_Lambda lambda == 0 and ad^k_Lambda lambda == k! a_k(Lambda).
AdCertificate ad_condition_check(const DiffOp& op, const ShiftOp& lam_op);

// Same check from raw data: top coefficient a_k(x) and lambda(n).
AdCertificate ad_condition_check(const XPoly& a_top, int order, const MPoly& lambda,
                                 const ShiftOp& lam_op);

// Exact verification of the cubic-lambda difference identities: with
// lambda(n) = n(n-1)(n-2) + nu n(n-1) + mu n and symbolic nu, mu,
//   (i)   third forward difference of lambda            = 6
//   (ii)  -lambda(n-6) + 3 lambda(n-4) - 3 lambda(n-2) + lambda(n) = 48
//   (iii)  lambda(n-3) - 3 lambda(n-2) + 3 lambda(n-1) - lambda(n) = -6
struct DeltaIdentityReport {
  MPoly identity_i, identity_ii, identity_iii;
  bool all_pass = false;
};
DeltaIdentityReport delta_identities();

}  // namespace bochnerlab
