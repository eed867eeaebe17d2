#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "bochnerlab/rational.hpp"

namespace bochnerlab {

// Ordered list of variable names. "n" sorts first when present; contexts are
// immutable and shared, alignment builds a fresh merged context.
using Context = std::vector<std::string>;
using ContextPtr = std::shared_ptr<const Context>;

ContextPtr make_context(Context vars);
ContextPtr merge_contexts(const ContextPtr& a, const ContextPtr& b);

using Exponents = std::vector<int>;

// Graded lexicographic order, first context variable most significant.
struct GrlexLess {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

// Sparse multivariate polynomial over Rational. No stored zero coefficients.
class MPoly {
 public:
  using TermMap = std::map<Exponents, Rational, GrlexLess>;

  MPoly();                           // zero in the empty context
  explicit MPoly(const Rational& c); // constant
  explicit MPoly(long c);

  static MPoly constant(const Rational& c, ContextPtr ctx);
  static MPoly variable(const std::string& name, ContextPtr ctx);

  const ContextPtr& context() const { return ctx_; }
  const TermMap& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational constant_value() const;  // requires is_constant()

  int total_degree() const;         // -1 for zero
  int degree_in(const std::string& var) const;
  bool depends_on(const std::string& var) const;

  // Leading term under grlex.
  const Rational& leading_coeff() const;  // requires !is_zero()

  MPoly operator-() const;
  MPoly& operator+=(const MPoly& rhs);
  MPoly& operator-=(const MPoly& rhs);
  MPoly& operator*=(const MPoly& rhs);
  MPoly& operator*=(const Rational& c);

  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(MPoly a, const MPoly& b) { return a *= b; }
  friend MPoly operator*(MPoly a, const Rational& c) { return a *= c; }
  friend MPoly operator*(const Rational& c, MPoly a) { return a *= c; }

  bool operator==(const MPoly& rhs) const;
  bool operator!=(const MPoly& rhs) const { return !(*this == rhs); }

  // Substitute var -> var + k.
  MPoly shifted(const std::string& var, long k) const;
  // Substitute var -> value; the variable stays in the context.
  MPoly substituted(const std::string& var, const Rational& value) const;

  Rational eval(const std::map<std::string, Rational>& point) const;

  // Coefficients as a univariate polynomial in var, ascending powers; the
  // coefficients keep the full context but do not depend on var.
  std::vector<MPoly> coeffs_in(const std::string& var) const;

  // Rational content: c with p/c integer-coprime coefficients and positive
  // leading coefficient. Zero polynomial has content 1.
  Rational content() const;

  // ctx must contain every variable the polynomial actually depends on.
  MPoly in_context(const ContextPtr& ctx) const;

  std::string str() const;

 private:
  friend class MPolyBuilder;
  ContextPtr ctx_;
  TermMap terms_;
};

// Incremental construction without re-normalizing per insert.
class MPolyBuilder {
 public:
  explicit MPolyBuilder(ContextPtr ctx) { p_.ctx_ = std::move(ctx); }
  void add(const Exponents& e, const Rational& c);
  MPoly take();

 private:
  MPoly p_;
};

MPoly pow(const MPoly& p, unsigned e);

// Falling factorial (base)_i = base(base-1)...(base-i+1).
MPoly falling(const MPoly& base, unsigned i);

// GCD over Q[vars], primitive with positive leading coefficient; constants
// have gcd 1. Primitive-PRS with an evaluation probe fast path.
MPoly mpoly_gcd(const MPoly& a, const MPoly& b);

// Exact division; nullopt when b does not divide a.
std::optional<MPoly> try_divide(const MPoly& a, const MPoly& b);

}  // namespace bochnerlab
