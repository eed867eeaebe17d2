#include "bochnerlab/diffop.hpp"

#include <map>

#include "bochnerlab/errors.hpp"

namespace bochnerlab {

DiffOp DiffOp::build(std::vector<XPoly> coeffs) {
  while (!coeffs.empty() && coeffs.back().is_zero()) coeffs.pop_back();
  if (coeffs.empty()) throw InvalidSpec("empty coefficient list");
  DiffOp op;
  op.coeffs_ = std::move(coeffs);
  bool bounded = true, witness = false;
  for (int i = 1; i <= op.order(); ++i) {
    int d = op.coeff(i).degree();
    if (d > i) bounded = false;
    if (d == i) witness = true;
  }
  op.exactly_solvable_ = bounded && witness;
  ContextPtr ctx = make_context({"n"});
  MPoly n = MPoly::variable("n", ctx);
  MPoly lam = MPoly::constant(Rational(0), ctx);
  for (int i = 1; i <= op.order(); ++i)
    lam += MPoly::constant(op.coeff(i)[std::size_t(i)], ctx) * falling(n, unsigned(i));
  op.lambda_ = std::move(lam);
  return op;
}

Rational DiffOp::lambda_at(long n) const {
  return lambda_.eval({{"n", Rational(n)}});
}

XPoly DiffOp::apply(const XPoly& q) const {
  XPoly out;
  XPoly d = q;
  for (int i = 1; i <= order(); ++i) {
    d = d.derivative();
    if (!coeff(i).is_zero()) out += coeff(i) * d;
  }
  return out;
}

XPoly DiffOp::eigenpolynomial(long n) const {
  EigenSeq s = eigen_sequence(n);
  return s.polys.back();
}

EigenSeq DiffOp::eigen_sequence(long max_n) const {
  if (!exactly_solvable_) throw InvalidSpec("operator is not exactly solvable");
  if (max_n < 0) throw InvalidSpec("negative index");

  // Monomial action columns: col[j] = L(x^j), lower-triangular with
  // lambda(j) on the diagonal.
  std::vector<XPoly> col(std::size_t(max_n) + 1);
  std::vector<Rational> lam(std::size_t(max_n) + 1);
  for (long j = 0; j <= max_n; ++j) {
    col[std::size_t(j)] = apply(XPoly::monomial(unsigned(j)));
    if (col[std::size_t(j)].degree() > int(j))
      throw InvalidSpec("operator action is not triangular");
    lam[std::size_t(j)] = lambda_at(j);
  }
  for (long n = 0; n <= max_n; ++n)
    for (long m = 0; m < n; ++m)
      if (lam[std::size_t(m)] == lam[std::size_t(n)]) throw Resonance(m, n);

  EigenSeq seq;
  seq.lambda = lam;
  seq.polys.reserve(std::size_t(max_n) + 1);
  for (long n = 0; n <= max_n; ++n) {
    std::vector<Rational> c(std::size_t(n) + 1, Rational(0));
    c[std::size_t(n)] = 1;
    // rhs accumulates sum_{j>m} c_j * coeff_m(L(x^j)) as m descends.
    std::vector<Rational> rhs(std::size_t(n) + 1, Rational(0));
    auto accumulate = [&](long j) {
      const XPoly& lj = col[std::size_t(j)];
      for (long m = 0; m < j; ++m) rhs[std::size_t(m)] += c[std::size_t(j)] * lj[std::size_t(m)];
    };
    accumulate(n);
    for (long m = n - 1; m >= 0; --m) {
      Rational v = -rhs[std::size_t(m)] / (lam[std::size_t(m)] - lam[std::size_t(n)]);
      if (v != 0) {
        c[std::size_t(m)] = v;
        accumulate(m);
      }
    }
    XPoly p{std::vector<Rational>(c)};
    // Self-check: the eigen-equation must hold exactly.
    XPoly residual = apply(p) - lam[std::size_t(n)] * p;
    if (!residual.is_zero()) throw Error("eigenpolynomial self-check failed");
    seq.polys.push_back(std::move(p));
  }
  return seq;
}

DiffOp DiffOp::affine_conjugated(const Rational& scale, const Rational& shift) const {
  if (scale == 0) throw InvalidSpec("zero scale");
  std::vector<XPoly> out;
  Rational s_inv_pow(1);
  for (int i = 1; i <= order(); ++i) {
    s_inv_pow /= scale;
    out.push_back(s_inv_pow * coeff(i).composed_affine(scale, shift));
  }
  return DiffOp::build(std::move(out));
}

// ---- GenDiffOp -----------------------------------------------------------

GenDiffOp GenDiffOp::from(const DiffOp& op) {
  std::vector<XPoly> a(std::size_t(op.order()) + 1);
  for (int i = 1; i <= op.order(); ++i) a[std::size_t(i)] = op.coeff(i);
  return GenDiffOp(std::move(a));
}

GenDiffOp& GenDiffOp::operator+=(const GenDiffOp& rhs) {
  if (rhs.a_.size() > a_.size()) a_.resize(rhs.a_.size());
  for (std::size_t i = 0; i < rhs.a_.size(); ++i) a_[i] += rhs.a_[i];
  trim();
  return *this;
}

GenDiffOp& GenDiffOp::operator-=(const GenDiffOp& rhs) {
  if (rhs.a_.size() > a_.size()) a_.resize(rhs.a_.size());
  for (std::size_t i = 0; i < rhs.a_.size(); ++i) a_[i] -= rhs.a_[i];
  trim();
  return *this;
}

GenDiffOp operator*(const GenDiffOp& a, const GenDiffOp& b) {
  if (a.is_zero() || b.is_zero()) return GenDiffOp();
  std::vector<XPoly> out(a.a_.size() + b.a_.size() - 1);
  for (std::size_t i = 0; i < a.a_.size(); ++i) {
    if (a.a_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.a_.size(); ++j) {
      if (b.a_[j].is_zero()) continue;
      // (a d^i)(b d^j) = sum_m C(i,m) a b^(m) d^(i+j-m)
      for (std::size_t m = 0; m <= i; ++m) {
        XPoly bm = b.a_[j].derivative(unsigned(m));
        if (bm.is_zero()) continue;
        out[i + j - m] += binomial(unsigned(i), unsigned(m)) * (a.a_[i] * bm);
      }
    }
  }
  return GenDiffOp(std::move(out));
}

GenDiffOp operator*(const Rational& s, GenDiffOp a) {
  for (auto& p : a.a_) p = s * p;
  a.trim();
  return a;
}

XPoly GenDiffOp::apply(const XPoly& q) const {
  XPoly out;
  XPoly d = q;
  for (std::size_t i = 0; i < a_.size(); ++i) {
    if (i > 0) d = d.derivative();
    if (!a_[i].is_zero()) out += a_[i] * d;
  }
  return out;
}

GenDiffOp GenDiffOp::ad_x() const {
  // [x, sum a_i d^i] = -sum i a_i d^(i-1)
  if (a_.size() <= 1) return GenDiffOp();
  std::vector<XPoly> out(a_.size() - 1);
  for (std::size_t i = 1; i < a_.size(); ++i)
    out[i - 1] = Rational(-long(i)) * a_[i];
  return GenDiffOp(std::move(out));
}

DiffOp GenDiffOp::to_diffop() const {
  if (!a_.empty() && !a_[0].is_zero())
    throw InvalidSpec("operator has a nonzero order-0 term");
  std::vector<XPoly> coeffs(a_.size() > 1 ? a_.size() - 1 : 0);
  for (std::size_t i = 1; i < a_.size(); ++i) coeffs[i - 1] = a_[i];
  return DiffOp::build(std::move(coeffs));
}

GenDiffOp pow(const GenDiffOp& d, unsigned e) {
  GenDiffOp r = GenDiffOp::multiplication(XPoly(Rational(1)));
  GenDiffOp b = d;
  while (e) {
    if (e & 1) r = r * b;
    if (e >>= 1) b = b * b;
  }
  return r;
}

}  // namespace bochnerlab
