#include "bochnerlab/rational.hpp"

#include "bochnerlab/errors.hpp"

namespace bochnerlab {

Rational parse_rational(const std::string& text) {
  mpq_class q;
  if (q.set_str(text, 10) != 0) throw Error("bad rational literal: " + text);
  if (q.get_den() == 0) throw ZeroDenominator();
  q.canonicalize();
  return q;
}

Rational rat_pow(const Rational& base, unsigned long e) {
  Rational r(1);
  Rational b = base;
  while (e) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

Rational falling(const Rational& a, unsigned i) {
  Rational r(1);
  for (unsigned t = 0; t < i; ++t) r *= a - Rational(t);
  return r;
}

Rational binomial(unsigned n, unsigned k) {
  if (k > n) return Rational(0);
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return Rational(b);
}

}  // namespace bochnerlab
