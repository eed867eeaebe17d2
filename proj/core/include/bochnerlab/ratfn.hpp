#pragma once

#include <string>

#include "bochnerlab/mpoly.hpp"

namespace bochnerlab {

// Reduced ratio of two MPoly values. Normalization: common gcd cancelled,
// denominator integer-primitive with positive leading coefficient (grlex).
class RatFn {
 public:
  RatFn() : num_(Rational(0)), den_(Rational(1)) {}
  explicit RatFn(const Rational& c) : num_(c), den_(Rational(1)) {}
  explicit RatFn(MPoly p) : num_(std::move(p)), den_(Rational(1)) { normalize(); }
  RatFn(MPoly num, MPoly den);

  const MPoly& num() const { return num_; }
  const MPoly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_constant(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  Rational constant_value() const { return num_.constant_value() / den_.constant_value(); }

  // As a polynomial; requires is_polynomial().
  MPoly poly() const;

  RatFn operator-() const;
  RatFn& operator+=(const RatFn& r) { return *this = *this + r; }
  RatFn& operator-=(const RatFn& r) { return *this = *this - r; }
  RatFn& operator*=(const RatFn& r) { return *this = *this * r; }

  friend RatFn operator+(const RatFn& a, const RatFn& b);
  friend RatFn operator-(const RatFn& a, const RatFn& b);
  friend RatFn operator*(const RatFn& a, const RatFn& b);
  friend RatFn operator/(const RatFn& a, const RatFn& b);

  // Semantic equality by cross-multiplication (robust to missed reductions).
  bool operator==(const RatFn& rhs) const;
  bool operator!=(const RatFn& rhs) const { return !(*this == rhs); }

  RatFn shifted(const std::string& var, long k) const;
  RatFn substituted(const std::string& var, const Rational& value) const;

  // Evaluates at a point; throws ZeroDenominator when the denominator vanishes.
  Rational eval(const std::map<std::string, Rational>& point) const;

  std::string str() const;

 private:
  void normalize();
  MPoly num_, den_;
};

inline RatFn ratfn_reduce(MPoly num, MPoly den) {
  return RatFn(std::move(num), std::move(den));
}

RatFn pow(const RatFn& p, unsigned e);

}  // namespace bochnerlab
