#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "bochnerlab/mpoly.hpp"
#include "bochnerlab/rational.hpp"

namespace bochnerlab {

// Dense univariate polynomial in x, ascending coefficients, trailing zeros
// stripped. Coefficient type is Rational in concrete mode; the symbolic
// engine keeps its own MPoly-based representation.
class XPoly {
 public:
  XPoly() = default;
  explicit XPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
  explicit XPoly(const Rational& c) : c_{c} { trim(); }

  static XPoly monomial(unsigned degree, const Rational& coeff = Rational(1)) {
    std::vector<Rational> v(degree + 1, Rational(0));
    v[degree] = coeff;
    return XPoly(std::move(v));
  }

  // Degree; -1 encodes the zero polynomial.
  int degree() const { return int(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }

  const Rational& operator[](std::size_t i) const {
    static const Rational zero(0);
    return i < c_.size() ? c_[i] : zero;
  }
  const std::vector<Rational>& coeffs() const { return c_; }

  void set(std::size_t i, const Rational& v) {
    if (i >= c_.size()) c_.resize(i + 1, Rational(0));
    c_[i] = v;
    trim();
  }

  XPoly operator-() const;
  XPoly& operator+=(const XPoly& rhs);
  XPoly& operator-=(const XPoly& rhs);

  friend XPoly operator+(XPoly a, const XPoly& b) { return a += b; }
  friend XPoly operator-(XPoly a, const XPoly& b) { return a -= b; }
  friend XPoly operator*(const XPoly& a, const XPoly& b);
  friend XPoly operator*(const Rational& s, XPoly a);

  bool operator==(const XPoly& rhs) const { return c_ == rhs.c_; }
  bool operator!=(const XPoly& rhs) const { return !(*this == rhs); }

  XPoly derivative(unsigned times = 1) const;
  // Multiplies by x^k.
  XPoly shifted_up(unsigned k) const;
  Rational eval(const Rational& x) const;

  // Affine substitution x -> scale*x + shift.
  XPoly composed_affine(const Rational& scale, const Rational& shift) const;

  MPoly to_mpoly(const ContextPtr& ctx_with_x) const;
  static XPoly from_mpoly(const MPoly& p);  // p must involve only "x"

  std::string str() const;

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<Rational> c_;
};

}  // namespace bochnerlab
