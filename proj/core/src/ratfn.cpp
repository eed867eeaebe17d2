#include "bochnerlab/ratfn.hpp"

#include "bochnerlab/errors.hpp"

namespace bochnerlab {

RatFn::RatFn(MPoly num, MPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw ZeroDenominator();
  normalize();
}

void RatFn::normalize() {
  if (num_.is_zero()) {
    den_ = MPoly(Rational(1));
    return;
  }
  if (!den_.is_constant()) {
    MPoly g = mpoly_gcd(num_, den_);
    if (!g.is_constant()) {
      num_ = *try_divide(num_, g);
      den_ = *try_divide(den_, g);
    }
  }
  Rational c = den_.content();
  num_ *= Rational(1) / c;
  den_ *= Rational(1) / c;
}

MPoly RatFn::poly() const {
  MPoly p = num_;
  p *= Rational(1) / den_.constant_value();
  return p;
}

RatFn RatFn::operator-() const {
  RatFn r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFn operator+(const RatFn& a, const RatFn& b) {
  if (a.den_ == b.den_) return RatFn(a.num_ + b.num_, a.den_);
  return RatFn(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFn operator-(const RatFn& a, const RatFn& b) { return a + (-b); }

RatFn operator*(const RatFn& a, const RatFn& b) {
  if (a.is_zero() || b.is_zero()) return RatFn();
  // Cross-reduce first to keep intermediate products small.
  RatFn x(a.num_, b.den_);
  RatFn y(b.num_, a.den_);
  return RatFn(x.num_ * y.num_, x.den_ * y.den_);
}

RatFn operator/(const RatFn& a, const RatFn& b) {
  if (b.is_zero()) throw ZeroDenominator();
  return a * RatFn(b.den_, b.num_);
}

bool RatFn::operator==(const RatFn& rhs) const {
  return num_ * rhs.den_ == rhs.num_ * den_;
}

RatFn RatFn::shifted(const std::string& var, long k) const {
  return RatFn(num_.shifted(var, k), den_.shifted(var, k));
}

RatFn RatFn::substituted(const std::string& var, const Rational& value) const {
  return RatFn(num_.substituted(var, value), den_.substituted(var, value));
}

Rational RatFn::eval(const std::map<std::string, Rational>& point) const {
  Rational d = den_.eval(point);
  if (d == 0) throw ZeroDenominator();
  return num_.eval(point) / d;
}

std::string RatFn::str() const {
  if (is_polynomial()) return poly().str();
  std::string n = num_.str();
  if (num_.terms().size() > 1) n = "(" + n + ")";
  return n + "/(" + den_.str() + ")";
}

RatFn pow(const RatFn& p, unsigned e) {
  RatFn r(Rational(1));
  RatFn b = p;
  while (e) {
    if (e & 1) r *= b;
    if (e >>= 1) b *= b;
  }
  return r;
}

}  // namespace bochnerlab
