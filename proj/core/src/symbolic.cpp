#include "bochnerlab/symbolic.hpp"

#include <algorithm>

#include "bochnerlab/errors.hpp"

namespace bochnerlab {

SymbolicAnsatz SymbolicAnsatz::build(std::vector<std::vector<MPoly>> coeffs) {
  SymbolicAnsatz s;
  s.grid_ = std::move(coeffs);
  ContextPtr ctx = make_context({"n"});
  for (std::size_t i = 0; i < s.grid_.size(); ++i) {
    if (s.grid_[i].size() > i + 2)
      throw InvalidSpec("coefficient a_" + std::to_string(i + 1) +
                        " exceeds its degree bound");
    for (const MPoly& p : s.grid_[i]) ctx = merge_contexts(ctx, p.context());
  }
  s.ctx_ = ctx;
  for (auto& row : s.grid_)
    for (MPoly& p : row) p = p.in_context(ctx);

  MPoly n = MPoly::variable("n", ctx);
  MPoly lam = MPoly::constant(Rational(0), ctx);
  for (std::size_t i = 0; i < s.grid_.size(); ++i)
    if (s.grid_[i].size() == i + 2)
      lam += s.grid_[i][i + 1] * falling(n, unsigned(i + 1));
  s.lambda_ = lam;
  return s;
}

MPoly SymbolicAnsatz::a(int i, int j) const {
  if (i < 1 || i > order() || j < 0 || j >= int(grid_[std::size_t(i - 1)].size()))
    return MPoly::constant(Rational(0), ctx_);
  return grid_[std::size_t(i - 1)][std::size_t(j)];
}

std::vector<RatFn> symbolic_p(const SymbolicAnsatz& ansatz, int kmax) {
  const ContextPtr& ctx = ansatz.context();
  MPoly n = MPoly::variable("n", ctx);
  std::vector<RatFn> p;
  p.push_back(RatFn(MPoly::constant(Rational(1), ctx)));
  for (int m = 1; m <= kmax; ++m) {
    MPoly den = ansatz.lambda() - ansatz.lambda().shifted("n", -m);
    if (den.is_zero()) throw IdenticallyResonant(m);
    RatFn rhs;
    for (int i = 1; i <= ansatz.order(); ++i) {
      for (int j = 0; j < i; ++j) {
        int drop = i - j;  // degree drop of a_{ij} x^j d^i on x^{n-k'}
        if (m - drop < 0) continue;
        MPoly aij = ansatz.a(i, j);
        if (aij.is_zero()) continue;
        MPoly base = n + MPoly::constant(Rational(drop - m), ctx);
        rhs += RatFn(aij * falling(base, unsigned(i))) * p[std::size_t(m - drop)];
      }
    }
    p.push_back(rhs / RatFn(den));
  }
  return p;
}

RatFn symbolic_p_single(const SymbolicAnsatz& ansatz, int k) {
  return symbolic_p(ansatz, k).back();
}

namespace {

BSeries cascade(const SymbolicAnsatz& ansatz, int jmax, bool shift_tail) {
  BSeries out;
  out.p = symbolic_p(ansatz, jmax + 1);
  for (int j = 0; j <= jmax; ++j) {
    RatFn bj = out.p[std::size_t(j + 1)] - out.p[std::size_t(j + 1)].shifted("n", 1);
    // Comparing x^(n-j) coefficients of x P_n = P_{n+1} + sum b_i(n) P_{n-i}:
    // the P_{n-i} factor contributes p_{j-i} evaluated at n - i.
    for (int i = 0; i < j; ++i) {
      RatFn tail = out.p[std::size_t(j - i)];
      if (shift_tail) tail = tail.shifted("n", -i);
      bj -= out.b[std::size_t(i)] * tail;
    }
    out.b.push_back(bj);
  }
  return out;
}

}  // namespace

BSeries symbolic_b(const SymbolicAnsatz& ansatz, int jmax) {
  return cascade(ansatz, jmax, true);
}

BSeries symbolic_b_tail_at_n(const SymbolicAnsatz& ansatz, int jmax) {
  return cascade(ansatz, jmax, false);
}

namespace {

// Total degree of a term in the parameters, i.e. ignoring "n".
int param_degree(const Context& vars, const Exponents& e) {
  int d = 0;
  for (std::size_t v = 0; v < vars.size(); ++v)
    if (vars[v] != "n") d += e[v];
  return d;
}

}  // namespace

std::vector<Constraint> parameter_constraints(const RatFn& b, bool linearize) {
  MPoly num = b.num();
  if (linearize) {
    const Context& vars = *num.context();
    MPolyBuilder keep(num.context());
    for (const auto& [e, c] : num.terms())
      if (param_degree(vars, e) <= 1) keep.add(e, c);
    num = keep.take();
  }
  std::vector<MPoly> by_power = num.coeffs_in("n");
  std::vector<Constraint> out;
  for (int k = int(by_power.size()) - 1; k >= 0; --k)
    if (!by_power[std::size_t(k)].is_zero())
      out.push_back({k, by_power[std::size_t(k)]});
  return out;
}

std::optional<MPoly> clear_denominator(const RatFn& b, const MPoly& denominator) {
  ContextPtr ctx = merge_contexts(b.num().context(), denominator.context());
  MPoly prod = b.num().in_context(ctx) * denominator.in_context(ctx);
  return try_divide(prod, b.den().in_context(ctx));
}

}  // namespace bochnerlab
