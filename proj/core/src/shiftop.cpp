#include "bochnerlab/shiftop.hpp"

#include "bochnerlab/errors.hpp"

namespace bochnerlab {

ShiftOp ShiftOp::identity() { return shift(0); }

ShiftOp ShiftOp::shift(int offset) {
  ShiftOp s;
  s.band_.emplace(offset, RatFn(Rational(1)));
  return s;
}

ShiftOp ShiftOp::multiplication(const RatFn& f) {
  ShiftOp s;
  if (!f.is_zero()) s.band_.emplace(0, f);
  return s;
}

RatFn ShiftOp::coeff(int offset) const {
  auto it = band_.find(offset);
  return it == band_.end() ? RatFn() : it->second;
}

int ShiftOp::top_offset() const { return band_.rbegin()->first; }
int ShiftOp::bottom_offset() const { return band_.begin()->first; }

void ShiftOp::set(int offset, RatFn c) {
  if (c.is_zero())
    band_.erase(offset);
  else
    band_[offset] = std::move(c);
}

ShiftOp ShiftOp::operator-() const {
  ShiftOp r = *this;
  for (auto& [o, c] : r.band_) c = -c;
  return r;
}

ShiftOp& ShiftOp::operator+=(const ShiftOp& rhs) {
  for (const auto& [o, c] : rhs.band_) {
    auto it = band_.find(o);
    if (it == band_.end()) {
      band_.emplace(o, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) band_.erase(it);
    }
  }
  return *this;
}

ShiftOp& ShiftOp::operator-=(const ShiftOp& rhs) { return *this += -rhs; }

ShiftOp operator*(const RatFn& s, const ShiftOp& a) {
  ShiftOp r;
  if (s.is_zero()) return r;
  for (const auto& [o, c] : a.band_) r.band_.emplace(o, s * c);
  return r;
}

bool ShiftOp::operator==(const ShiftOp& rhs) const {
  if (band_.size() != rhs.band_.size()) return false;
  for (const auto& [o, c] : band_) {
    auto it = rhs.band_.find(o);
    if (it == rhs.band_.end() || !(it->second == c)) return false;
  }
  return true;
}

ShiftOp compose(const ShiftOp& a, const ShiftOp& b) {
  ShiftOp r;
  for (const auto& [i, f] : a.band_) {
    for (const auto& [j, g] : b.band_) {
      RatFn c = f * g.shifted("n", i);
      if (c.is_zero()) continue;
      auto it = r.band_.find(i + j);
      if (it == r.band_.end()) {
        r.band_.emplace(i + j, std::move(c));
      } else {
        it->second += c;
        if (it->second.is_zero()) r.band_.erase(it);
      }
    }
  }
  return r;
}

XPoly ShiftOp::apply_at(const std::vector<XPoly>& seq, long n) const {
  XPoly out;
  for (const auto& [o, c] : band_) {
    long idx = n + o;
    if (idx < 0 || idx >= long(seq.size()))
      throw Error("sequence index out of range in shift-operator action");
    out += c.eval({{"n", Rational(n)}}) * seq[std::size_t(idx)];
  }
  return out;
}

std::map<std::string, std::string> ShiftOp::band_strings() const {
  std::map<std::string, std::string> out;
  for (const auto& [o, c] : band_) out[std::to_string(o)] = c.str();
  return out;
}

ShiftOp pow(const ShiftOp& a, unsigned e) {
  ShiftOp r = ShiftOp::identity();
  ShiftOp b = a;
  while (e) {
    if (e & 1) r = compose(r, b);
    if (e >>= 1) b = compose(b, b);
  }
  return r;
}

ShiftOp ad_power(const ShiftOp& lam_op, const MPoly& lambda, unsigned k) {
  ShiftOp acc = ShiftOp::multiplication(lambda);
  for (unsigned t = 0; t < k; ++t)
    acc = compose(lam_op, acc) - compose(acc, lam_op);
  return acc;
}

ShiftOp make_lambda(const RatFn& u, const RatFn& v) {
  ShiftOp lam = ShiftOp::shift(1);
  lam.set(0, u);
  lam.set(-1, v);
  return lam;
}

ShiftOp lambda_from_table(const RecTable& table) {
  if (!table.bandwidth) throw InvalidSpec("unbounded recurrence table");
  ShiftOp lam = ShiftOp::shift(1);
  for (int j = 0; j <= *table.bandwidth; ++j) {
    auto it = table.reconstructed.find(j);
    if (it == table.reconstructed.end())
      throw InvalidSpec("table lacks a reconstructed closed form for b_" +
                        std::to_string(j));
    lam.set(-j, it->second);
  }
  return lam;
}

AdCertificate ad_condition_check(const XPoly& a_top, int order, const MPoly& lambda,
                                 const ShiftOp& lam_op) {
  AdCertificate cert;
  cert.order = order;
  cert.ad_k = ad_power(lam_op, lambda, unsigned(order));
  cert.ad_k1 = compose(lam_op, cert.ad_k) - compose(cert.ad_k, lam_op);
  cert.ad_k1_zero = cert.ad_k1.is_zero();

  Rational kfact(1);
  for (int i = 2; i <= order; ++i) kfact *= Rational(i);
  ShiftOp expected;
  ShiftOp lam_pow = ShiftOp::identity();
  for (int j = 0; j <= a_top.degree(); ++j) {
    Rational c = kfact * a_top[std::size_t(j)];
    cert.poly_coeffs.push_back(c);
    if (c != 0) expected += RatFn(c) * lam_pow;
    lam_pow = compose(lam_pow, lam_op);
  }
  while (int(cert.poly_coeffs.size()) <= order) cert.poly_coeffs.push_back(Rational(0));

  ShiftOp diff = cert.ad_k - expected;
  cert.matches = diff.is_zero();
  if (!cert.matches) {
    cert.mismatch_offset = diff.bottom_offset();
    cert.mismatch_diff = diff.coeff(*cert.mismatch_offset);
  } else if (!cert.ad_k1_zero) {
    cert.mismatch_offset = cert.ad_k1.bottom_offset();
    cert.mismatch_diff = cert.ad_k1.coeff(*cert.mismatch_offset);
  }
  return cert;
}

AdCertificate ad_condition_check(const DiffOp& op, const ShiftOp& lam_op) {
  return ad_condition_check(op.coeff(op.order()), op.order(), op.lambda_poly(),
                            lam_op);
}

DeltaIdentityReport delta_identities() {
  ContextPtr ctx = make_context({"n", "nu", "mu"});
  MPoly n = MPoly::variable("n", ctx);
  MPoly nu = MPoly::variable("nu", ctx);
  MPoly mu = MPoly::variable("mu", ctx);
  MPoly lam = falling(n, 3) + nu * falling(n, 2) + mu * n;
  auto at = [&](long k) { return lam.shifted("n", k); };

  DeltaIdentityReport r;
  r.identity_i = at(3) - MPoly(3) * at(2) + MPoly(3) * at(1) - lam;
  r.identity_ii = -at(-6) + MPoly(3) * at(-4) - MPoly(3) * at(-2) + lam;
  r.identity_iii = at(-3) - MPoly(3) * at(-2) + MPoly(3) * at(-1) - lam;
  r.all_pass = r.identity_i == MPoly(6) && r.identity_ii == MPoly(48) &&
               r.identity_iii == MPoly(-6);
  return r;
}

}  // namespace bochnerlab
