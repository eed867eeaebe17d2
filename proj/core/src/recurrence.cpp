#include "bochnerlab/recurrence.hpp"

#include <algorithm>

#include "bochnerlab/errors.hpp"
#include "bochnerlab/linalg.hpp"

namespace bochnerlab {

std::vector<Rational> expand_in_eigenbasis(const EigenSeq& seq, const XPoly& q) {
  long max_n = seq.max_index();
  if (q.degree() > max_n) throw DegreeTooHigh();
  std::vector<Rational> c(std::size_t(max_n) + 1, Rational(0));
  XPoly r = q;
  while (!r.is_zero()) {
    long m = r.degree();
    c[std::size_t(m)] = r[std::size_t(m)];  // P_m is monic
    r -= c[std::size_t(m)] * seq.polys[std::size_t(m)];
    if (r.degree() >= m) throw Error("eigenbasis expansion did not descend");
  }
  return c;
}

RecTable recurrence_table(const EigenSeq& seq) {
  long max_n = seq.max_index();
  if (max_n < 2) throw InvalidSpec("need at least P_0..P_2");
  RecTable t;
  t.max_index = max_n;
  for (long n = 0; n < max_n; ++n) {
    XPoly xq = seq.polys[std::size_t(n)].shifted_up(1);
    std::vector<Rational> c = expand_in_eigenbasis(seq, xq);
    if (c[std::size_t(n + 1)] != 1)
      throw Error("monic leading coefficient violated in recurrence row");
    std::vector<Rational> row(std::size_t(n) + 1);
    int sup = -1;
    for (long j = 0; j <= n; ++j) {
      row[std::size_t(j)] = c[std::size_t(n - j)];
      if (row[std::size_t(j)] != 0) sup = int(j);
    }
    t.rows.push_back(std::move(row));
    t.support.push_back(sup);
  }
  int d = 0;
  for (int s : t.support) d = std::max(d, s);
  // Bounded bandwidth needs slack: rows with n well beyond d must exist and
  // stay inside the band, otherwise the support is still growing with n.
  if (d <= max_n - 4)
    t.bandwidth = d;
  else
    t.bandwidth = std::nullopt;
  return t;
}

RatFn reconstruct_rational(const std::vector<std::pair<long, Rational>>& samples,
                           int deg_num_cap, int deg_den_cap) {
  if (samples.size() < 3 + 2) throw NoFit();
  std::size_t held_out = 3;
  std::size_t train = samples.size() - held_out;
  ContextPtr ctx = make_context({"n"});
  MPoly nv = MPoly::variable("n", ctx);

  for (int total = 0; total <= deg_num_cap + deg_den_cap; ++total) {
    for (int dn = 0; dn <= std::min(total, deg_num_cap); ++dn) {
      int dd = total - dn;
      if (dd > deg_den_cap) continue;
      std::size_t unknowns = std::size_t(dn) + std::size_t(dd) + 2;
      if (train < unknowns) continue;
      RatMat m;
      for (std::size_t s = 0; s < train; ++s) {
        const auto& [n, v] = samples[s];
        RatVec row(unknowns, Rational(0));
        Rational np(1);
        for (int i = 0; i <= dn; ++i) {
          row[std::size_t(i)] = np;
          np *= Rational(n);
        }
        np = 1;
        for (int j = 0; j <= dd; ++j) {
          row[std::size_t(dn) + 1 + std::size_t(j)] = -v * np;
          np *= Rational(n);
        }
        m.push_back(std::move(row));
      }
      for (const RatVec& v : nullspace(std::move(m), unknowns)) {
        MPoly num = MPoly::constant(Rational(0), ctx);
        MPoly den = MPoly::constant(Rational(0), ctx);
        for (int i = 0; i <= dn; ++i)
          num += MPoly::constant(v[std::size_t(i)], ctx) * pow(nv, unsigned(i));
        for (int j = 0; j <= dd; ++j)
          den += MPoly::constant(v[std::size_t(dn) + 1 + std::size_t(j)], ctx) *
                 pow(nv, unsigned(j));
        if (den.is_zero()) continue;
        RatFn f(num, den);
        bool ok = true;
        for (const auto& [n, val] : samples) {
          try {
            if (f.eval({{"n", Rational(n)}}) != val) {
              ok = false;
              break;
            }
          } catch (const ZeroDenominator&) {
            ok = false;
            break;
          }
        }
        if (ok) return f;
      }
    }
  }
  throw NoFit();
}

void reconstruct_table(RecTable& table, int deg_num_cap, int deg_den_cap) {
  if (!table.bandwidth) throw NoFit();
  for (int j = 0; j <= *table.bandwidth; ++j) {
    std::vector<std::pair<long, Rational>> samples;
    // Rows with n < bandwidth truncate the band: their entries absorb the
    // missing P_{n-j} terms and deviate from the generic closed form, so the
    // fit starts at the first row where the full band is present.
    for (long n = *table.bandwidth; n < table.max_index; ++n)
      samples.emplace_back(n, table.rows[std::size_t(n)][std::size_t(j)]);
    table.reconstructed[j] = reconstruct_rational(samples, deg_num_cap, deg_den_cap);
  }
}

}  // namespace bochnerlab
