#pragma once

#include <vector>

#include "bochnerlab/mpoly.hpp"
#include "bochnerlab/xpoly.hpp"

namespace bochnerlab {

class DiffOp;

// Monic eigenpolynomials P_0..P_N of an exactly solvable operator, each
// certified against L P_n = lambda(n) P_n at construction.
struct EigenSeq {
  std::vector<XPoly> polys;
  // Eigenvalue at index n.
  std::vector<Rational> lambda;
  long max_index() const { return long(polys.size()) - 1; }
};

// Differential operator sum a_i(x) d^i, i = 1..k, no order-0 term.
class DiffOp {
 public:
  // Validates the exactly solvable shape (deg a_i <= i with equality
  // somewhere) and computes lambda(n) = sum a_ii (n)_i. Construction
  // succeeds even when the shape fails; the flag records the verdict.
  static DiffOp build(std::vector<XPoly> coeffs);

  int order() const { return int(coeffs_.size()); }
  const XPoly& coeff(int i) const { return coeffs_[std::size_t(i - 1)]; }  // a_i
  const std::vector<XPoly>& coeffs() const { return coeffs_; }
  bool exactly_solvable() const { return exactly_solvable_; }

  const MPoly& lambda_poly() const { return lambda_; }
  Rational lambda_at(long n) const;

  XPoly apply(const XPoly& q) const;

  // Monic degree-n eigenpolynomial by triangular back-substitution.
  // Throws Resonance(m, n) when lambda(m) = lambda(n) for some m < n.
  XPoly eigenpolynomial(long n) const;

  EigenSeq eigen_sequence(long max_n) const;

  // Conjugation by x -> scale*y + shift (explicit normalization helper).
  DiffOp affine_conjugated(const Rational& scale, const Rational& shift) const;

  bool operator==(const DiffOp& rhs) const { return coeffs_ == rhs.coeffs_; }

 private:
  DiffOp() = default;
  std::vector<XPoly> coeffs_;
  bool exactly_solvable_ = false;
  MPoly lambda_;
};

inline DiffOp build_operator(std::vector<XPoly> coeffs) {
  return DiffOp::build(std::move(coeffs));
}

// General differential operator sum a_i(x) d^i from i = 0, used for operator
// algebra: products, powers, ad_x commutators, and the type-2 expansion.
class GenDiffOp {
 public:
  GenDiffOp() = default;
  explicit GenDiffOp(std::vector<XPoly> coeffs) : a_(std::move(coeffs)) { trim(); }
  static GenDiffOp from(const DiffOp& op);
  static GenDiffOp multiplication(const XPoly& p) { return GenDiffOp({p}); }
  static GenDiffOp derivative() { return GenDiffOp({XPoly(), XPoly(Rational(1))}); }

  int order() const { return int(a_.size()) - 1; }
  bool is_zero() const { return a_.empty(); }
  const XPoly& coeff(int i) const {
    static const XPoly zero;
    return i >= 0 && i < int(a_.size()) ? a_[std::size_t(i)] : zero;
  }

  GenDiffOp& operator+=(const GenDiffOp& rhs);
  GenDiffOp& operator-=(const GenDiffOp& rhs);
  friend GenDiffOp operator+(GenDiffOp a, const GenDiffOp& b) { return a += b; }
  friend GenDiffOp operator-(GenDiffOp a, const GenDiffOp& b) { return a -= b; }
  friend GenDiffOp operator*(const GenDiffOp& a, const GenDiffOp& b);  // composition
  friend GenDiffOp operator*(const Rational& s, GenDiffOp a);

  bool operator==(const GenDiffOp& rhs) const { return a_ == rhs.a_; }

  XPoly apply(const XPoly& q) const;

  // [x, D]
  GenDiffOp ad_x() const;

  // Requires a zero order-0 coefficient.
  DiffOp to_diffop() const;

 private:
  void trim() {
    while (!a_.empty() && a_.back().is_zero()) a_.pop_back();
  }
  std::vector<XPoly> a_;
};

GenDiffOp pow(const GenDiffOp& d, unsigned e);

}  // namespace bochnerlab
