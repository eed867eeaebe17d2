#include "bochnerlab/xpoly.hpp"

#include "bochnerlab/errors.hpp"

namespace bochnerlab {

XPoly XPoly::operator-() const {
  XPoly r = *this;
  for (auto& v : r.c_) v = -v;
  return r;
}

XPoly& XPoly::operator+=(const XPoly& rhs) {
  if (rhs.c_.size() > c_.size()) c_.resize(rhs.c_.size(), Rational(0));
  for (std::size_t i = 0; i < rhs.c_.size(); ++i) c_[i] += rhs.c_[i];
  trim();
  return *this;
}

XPoly& XPoly::operator-=(const XPoly& rhs) {
  if (rhs.c_.size() > c_.size()) c_.resize(rhs.c_.size(), Rational(0));
  for (std::size_t i = 0; i < rhs.c_.size(); ++i) c_[i] -= rhs.c_[i];
  trim();
  return *this;
}

XPoly operator*(const XPoly& a, const XPoly& b) {
  if (a.is_zero() || b.is_zero()) return XPoly();
  std::vector<Rational> out(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
  return XPoly(std::move(out));
}

XPoly operator*(const Rational& s, XPoly a) {
  for (auto& v : a.c_) v *= s;
  a.trim();
  return a;
}

XPoly XPoly::derivative(unsigned times) const {
  XPoly r = *this;
  for (unsigned t = 0; t < times; ++t) {
    if (r.c_.empty()) return r;
    std::vector<Rational> d(r.c_.size() > 1 ? r.c_.size() - 1 : 0);
    for (std::size_t i = 1; i < r.c_.size(); ++i) d[i - 1] = Rational(long(i)) * r.c_[i];
    r = XPoly(std::move(d));
  }
  return r;
}

XPoly XPoly::shifted_up(unsigned k) const {
  if (is_zero() || k == 0) return *this;
  std::vector<Rational> out(c_.size() + k, Rational(0));
  for (std::size_t i = 0; i < c_.size(); ++i) out[i + k] = c_[i];
  return XPoly(std::move(out));
}

Rational XPoly::eval(const Rational& x) const {
  Rational r(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
  return r;
}

XPoly XPoly::composed_affine(const Rational& scale, const Rational& shift) const {
  XPoly arg(std::vector<Rational>{shift, scale});
  XPoly r;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * arg + XPoly(*it);
  return r;
}

MPoly XPoly::to_mpoly(const ContextPtr& ctx_with_x) const {
  MPoly x = MPoly::variable("x", ctx_with_x);
  MPoly r = MPoly::constant(Rational(0), ctx_with_x);
  MPoly xp = MPoly::constant(Rational(1), ctx_with_x);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] != 0) r += MPoly::constant(c_[i], ctx_with_x) * xp;
    xp *= x;
  }
  return r;
}

XPoly XPoly::from_mpoly(const MPoly& p) {
  for (const auto& v : *p.context())
    if (v != "x" && p.depends_on(v))
      throw Error("polynomial depends on variable other than x: " + v);
  std::vector<MPoly> cs = p.coeffs_in("x");
  std::vector<Rational> out(cs.size());
  for (std::size_t i = 0; i < cs.size(); ++i) out[i] = cs[i].constant_value();
  return XPoly(std::move(out));
}

std::string XPoly::str() const {
  return to_mpoly(make_context({"x"})).str();
}

}  // namespace bochnerlab
