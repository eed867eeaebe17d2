#include "bochnerlab/darboux.hpp"

#include <algorithm>

#include "bochnerlab/errors.hpp"
#include "bochnerlab/linalg.hpp"

namespace bochnerlab {

DarbouxFactors factor_lu(const std::vector<Rational>& u,
                         const std::vector<Rational>& v, const Rational& c,
                         const Rational& h0, long max_n) {
  if (long(u.size()) < max_n || long(v.size()) < max_n)
    throw InvalidSpec("band data shorter than the requested range");
  if (h0 == 0) throw Breakdown(0);
  DarbouxFactors d;
  d.c = c;
  d.h.push_back(h0);
  for (long n = 0; n < max_n; ++n) {
    Rational vn = n == 0 ? Rational(0) : v[std::size_t(n)];
    d.f.push_back(vn / d.h[std::size_t(n)]);
    Rational next = u[std::size_t(n)] - c - d.f.back();
    if (next == 0 && n + 1 < max_n) throw Breakdown(n + 1);
    d.h.push_back(next);
  }
  return d;
}

DarbouxFactors factor_lu(const ShiftOp& lam, const Rational& c,
                         const Rational& h0, long max_n) {
  if (lam.is_zero() || lam.top_offset() != 1 || lam.bottom_offset() < -1 ||
      !(lam.coeff(1) == RatFn(Rational(1))))
    throw InvalidSpec("expected a monic tridiagonal band T + u(n) I + v(n) T^-1");
  RatFn u = lam.coeff(0), v = lam.coeff(-1);
  std::vector<Rational> uv, vv;
  for (long n = 0; n < max_n; ++n) {
    uv.push_back(u.eval({{"n", Rational(n)}}));
    vv.push_back(n == 0 ? Rational(0) : v.eval({{"n", Rational(n)}}));
  }
  return factor_lu(uv, vv, c, h0, max_n);
}

std::vector<FactorAttempt> factor_lu_auto(const std::vector<Rational>& u,
                                          const std::vector<Rational>& v,
                                          const Rational& c,
                                          const std::vector<Rational>& seeds,
                                          long max_n) {
  std::vector<FactorAttempt> out;
  for (const Rational& h0 : seeds) {
    FactorAttempt att;
    att.h0 = h0;
    try {
      att.factors = factor_lu(u, v, c, h0, max_n);
    } catch (const Breakdown& b) {
      att.breakdown_index = b.n;
    }
    out.push_back(std::move(att));
    if (out.back().factors) break;
  }
  return out;
}

DarbouxSwap swap_and_transform(const DarbouxFactors& factors,
                               const std::vector<XPoly>& polys) {
  DarbouxSwap s;
  std::size_t nf = factors.f.size();
  std::size_t count = std::min(polys.size(), factors.h.size());
  // Row 0 of (I + h T^-1)(T + f I) has no subdiagonal neighbor, so the h(0)
  // contribution to the diagonal only exists from row 1 on.
  for (std::size_t n = 0; n < nf; ++n) {
    Rational un = factors.f[n] + factors.c;
    if (n > 0) un += factors.h[n];
    s.u_hat.push_back(un);
  }
  s.v_hat.push_back(Rational(0));
  for (std::size_t n = 1; n < nf; ++n)
    s.v_hat.push_back(factors.h[n] * factors.f[n - 1]);

  for (std::size_t n = 0; n < count; ++n) {
    XPoly q = polys[n];
    if (n > 0) q += factors.h[n] * polys[n - 1];
    s.transformed.push_back(std::move(q));
  }

  s.verified = true;
  for (std::size_t n = 0; n + 1 < s.transformed.size() && n < nf; ++n) {
    XPoly lhs = s.transformed[n].shifted_up(1);
    XPoly rhs = s.transformed[n + 1] + s.u_hat[n] * s.transformed[n];
    if (n > 0) rhs += s.v_hat[n] * s.transformed[n - 1];
    if (lhs != rhs) {
      s.verified = false;
      break;
    }
  }
  return s;
}

namespace {

DiffOp candidate_from(const RatVec& v, int order, int slack) {
  std::vector<XPoly> coeffs;
  std::size_t idx = 0;
  for (int i = 1; i <= order; ++i) {
    std::vector<Rational> c(std::size_t(i + slack) + 1);
    for (int j = 0; j <= i + slack; ++j) c[std::size_t(j)] = v[idx++];
    coeffs.emplace_back(std::move(c));
  }
  return DiffOp::build(std::move(coeffs));
}

bool eigen_acts_on_all(const DiffOp& op, const std::vector<XPoly>& polys) {
  bool nontrivial = false;
  for (std::size_t n = 0; n < polys.size(); ++n) {
    XPoly q = op.apply(polys[n]);
    if (q.degree() > int(n)) return false;
    XPoly diff = q - q[n] * polys[n];
    if (!diff.is_zero()) return false;
    if (q[n] != 0) nontrivial = true;
  }
  return nontrivial;
}

std::vector<RatVec> completion_nullspace(const std::vector<XPoly>& polys,
                                         int order, int slack,
                                         std::size_t upto) {
  std::size_t unknowns = 0;
  for (int i = 1; i <= order; ++i) unknowns += std::size_t(i + slack) + 1;
  RatMat m;
  for (std::size_t n = 1; n < upto; ++n) {
    // images[col] = x^j (d/dx)^i applied to Q_n, column order (i, j).
    std::vector<XPoly> images;
    for (int i = 1; i <= order; ++i) {
      XPoly deriv = polys[n].derivative(unsigned(i));
      for (int j = 0; j <= i + slack; ++j)
        images.push_back(deriv.shifted_up(unsigned(j)));
    }
    for (std::size_t mm = 0; mm < n; ++mm) {
      RatVec row(unknowns);
      for (std::size_t col = 0; col < unknowns; ++col)
        row[col] = images[col][mm] - polys[n][mm] * images[col][n];
      m.push_back(std::move(row));
    }
  }
  return nullspace(std::move(m), unknowns);
}

}  // namespace

std::vector<DiffOp> bispectral_completion(const std::vector<XPoly>& polys,
                                          int max_order, int slack) {
  if (polys.size() < 5)
    throw InvalidSpec("need at least five sequence members for completion");
  std::size_t held_out = 3;
  std::vector<DiffOp> out;
  for (std::size_t upto : {polys.size() - held_out, polys.size()}) {
    for (const RatVec& v : completion_nullspace(polys, max_order, slack, upto)) {
      DiffOp cand = candidate_from(v, max_order, slack);
      if (eigen_acts_on_all(cand, polys)) out.push_back(std::move(cand));
    }
    if (!out.empty()) return out;
  }
  throw NoOperator();
}

}  // namespace bochnerlab
