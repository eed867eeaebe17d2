#include "bochnerlab/mpoly.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <sstream>

#include "bochnerlab/errors.hpp"

namespace bochnerlab {

namespace {

Context canonical_vars(Context vars) {
  std::sort(vars.begin(), vars.end());
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
  auto it = std::find(vars.begin(), vars.end(), "n");
  if (it != vars.end()) {
    vars.erase(it);
    vars.insert(vars.begin(), "n");
  }
  return vars;
}

int var_index(const Context& ctx, const std::string& var) {
  auto it = std::find(ctx.begin(), ctx.end(), var);
  return it == ctx.end() ? -1 : int(it - ctx.begin());
}

}  // namespace

ContextPtr make_context(Context vars) {
  static const ContextPtr empty = std::make_shared<const Context>();
  if (vars.empty()) return empty;
  return std::make_shared<const Context>(canonical_vars(std::move(vars)));
}

ContextPtr merge_contexts(const ContextPtr& a, const ContextPtr& b) {
  if (a == b || *a == *b) return a;
  if (a->empty()) return b;
  if (b->empty()) return a;
  Context u = *a;
  u.insert(u.end(), b->begin(), b->end());
  return make_context(std::move(u));
}

bool GrlexLess::operator()(const Exponents& a, const Exponents& b) const {
  long da = std::accumulate(a.begin(), a.end(), 0L);
  long db = std::accumulate(b.begin(), b.end(), 0L);
  if (da != db) return da < db;
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

MPoly::MPoly() : ctx_(make_context({})) {}

MPoly::MPoly(const Rational& c) : ctx_(make_context({})) {
  if (c != 0) terms_.emplace(Exponents{}, c);
}

MPoly::MPoly(long c) : MPoly(Rational(c)) {}

MPoly MPoly::constant(const Rational& c, ContextPtr ctx) {
  MPoly p;
  p.ctx_ = std::move(ctx);
  if (c != 0) p.terms_.emplace(Exponents(p.ctx_->size(), 0), c);
  return p;
}

MPoly MPoly::variable(const std::string& name, ContextPtr ctx) {
  int i = var_index(*ctx, name);
  if (i < 0) throw UnknownVariable(name);
  MPoly p;
  p.ctx_ = std::move(ctx);
  Exponents e(p.ctx_->size(), 0);
  e[size_t(i)] = 1;
  p.terms_.emplace(std::move(e), Rational(1));
  return p;
}

bool MPoly::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  const Exponents& e = terms_.begin()->first;
  return std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
}

Rational MPoly::constant_value() const {
  if (terms_.empty()) return Rational(0);
  assert(is_constant());
  return terms_.begin()->second;
}

int MPoly::total_degree() const {
  if (terms_.empty()) return -1;
  const Exponents& e = terms_.rbegin()->first;
  return int(std::accumulate(e.begin(), e.end(), 0L));
}

int MPoly::degree_in(const std::string& var) const {
  int i = var_index(*ctx_, var);
  if (i < 0) return terms_.empty() ? -1 : 0;
  int d = terms_.empty() ? -1 : 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[size_t(i)]);
  return d;
}

bool MPoly::depends_on(const std::string& var) const {
  return degree_in(var) > 0;
}

const Rational& MPoly::leading_coeff() const {
  assert(!terms_.empty());
  return terms_.rbegin()->second;
}

MPoly MPoly::operator-() const {
  MPoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

MPoly MPoly::in_context(const ContextPtr& ctx) const {
  if (ctx == ctx_ || *ctx == *ctx_) {
    MPoly r = *this;
    r.ctx_ = ctx;
    return r;
  }
  std::vector<int> remap(ctx_->size());
  for (size_t i = 0; i < ctx_->size(); ++i) {
    int j = var_index(*ctx, (*ctx_)[i]);
    if (j < 0 && depends_on((*ctx_)[i])) throw UnknownVariable((*ctx_)[i]);
    remap[i] = j;
  }
  MPoly r;
  r.ctx_ = ctx;
  for (const auto& [e, c] : terms_) {
    Exponents ne(ctx->size(), 0);
    for (size_t i = 0; i < e.size(); ++i)
      if (e[i] != 0) ne[size_t(remap[i])] = e[i];
    r.terms_.emplace(std::move(ne), c);
  }
  return r;
}

namespace {

void add_into(MPoly::TermMap& dst, const Exponents& e, const Rational& c) {
  if (c == 0) return;
  auto [it, fresh] = dst.emplace(e, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) dst.erase(it);
  }
}

}  // namespace

MPoly& MPoly::operator+=(const MPoly& rhs) {
  if (ctx_ != rhs.ctx_ && *ctx_ != *rhs.ctx_) {
    ContextPtr m = merge_contexts(ctx_, rhs.ctx_);
    *this = in_context(m);
    MPoly r = rhs.in_context(m);
    for (const auto& [e, c] : r.terms_) add_into(terms_, e, c);
    return *this;
  }
  for (const auto& [e, c] : rhs.terms_) add_into(terms_, e, c);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& rhs) { return *this += -rhs; }

MPoly& MPoly::operator*=(const MPoly& rhs) {
  if (ctx_ != rhs.ctx_ && *ctx_ != *rhs.ctx_) {
    ContextPtr m = merge_contexts(ctx_, rhs.ctx_);
    MPoly a = in_context(m);
    MPoly b = rhs.in_context(m);
    a *= b;
    return *this = std::move(a);
  }
  TermMap out;
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : rhs.terms_) {
      Exponents e(ea.size());
      for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      add_into(out, e, ca * cb);
    }
  }
  terms_ = std::move(out);
  return *this;
}

MPoly& MPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

bool MPoly::operator==(const MPoly& rhs) const {
  if (ctx_ == rhs.ctx_ || *ctx_ == *rhs.ctx_) return terms_ == rhs.terms_;
  ContextPtr m = merge_contexts(ctx_, rhs.ctx_);
  return in_context(m).terms_ == rhs.in_context(m).terms_;
}

MPoly MPoly::shifted(const std::string& var, long k) const {
  int i = var_index(*ctx_, var);
  if (i < 0 || k == 0) return *this;
  MPoly r;
  r.ctx_ = ctx_;
  Rational kk(k);
  for (const auto& [e, c] : terms_) {
    unsigned d = unsigned(e[size_t(i)]);
    // (v+k)^d expanded binomially.
    Rational kp(1);
    for (unsigned t = 0; t <= d; ++t) {
      Exponents ne = e;
      ne[size_t(i)] = int(d - t);
      add_into(r.terms_, ne, c * binomial(d, t) * kp);
      kp *= kk;
    }
  }
  return r;
}

MPoly MPoly::substituted(const std::string& var, const Rational& value) const {
  int i = var_index(*ctx_, var);
  if (i < 0) return *this;
  MPoly r;
  r.ctx_ = ctx_;
  for (const auto& [e, c] : terms_) {
    Exponents ne = e;
    unsigned d = unsigned(ne[size_t(i)]);
    ne[size_t(i)] = 0;
    add_into(r.terms_, ne, c * rat_pow(value, d));
  }
  return r;
}

Rational MPoly::eval(const std::map<std::string, Rational>& point) const {
  Rational sum(0);
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      auto it = point.find((*ctx_)[i]);
      if (it == point.end()) throw UnknownVariable((*ctx_)[i]);
      t *= rat_pow(it->second, unsigned(e[i]));
    }
    sum += t;
  }
  return sum;
}

std::vector<MPoly> MPoly::coeffs_in(const std::string& var) const {
  int i = var_index(*ctx_, var);
  int d = degree_in(var);
  std::vector<MPoly> out(size_t(std::max(d, 0)) + 1);
  for (auto& p : out) p.ctx_ = ctx_;
  if (terms_.empty()) return out;
  for (const auto& [e, c] : terms_) {
    Exponents ne = e;
    int p = 0;
    if (i >= 0) {
      p = ne[size_t(i)];
      ne[size_t(i)] = 0;
    }
    add_into(out[size_t(p)].terms_, ne, c);
  }
  return out;
}

Rational MPoly::content() const {
  if (terms_.empty()) return Rational(1);
  mpz_class g(0), l(1);
  for (const auto& [e, c] : terms_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_num().get_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den().get_mpz_t());
  }
  Rational r(g, l);
  r.canonicalize();
  if (leading_coeff() < 0) r = -r;
  return r;
}

std::string MPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Rational a = c;
    if (first) {
      if (a < 0) {
        os << "-";
        a = -a;
      }
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    first = false;
    bool have_vars = std::any_of(e.begin(), e.end(), [](int x) { return x > 0; });
    bool printed = false;
    if (a != 1 || !have_vars) {
      os << a.get_str();
      printed = true;
    }
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (printed) os << "*";
      os << (*ctx_)[i];
      if (e[i] > 1) os << "^" << e[i];
      printed = true;
    }
  }
  return os.str();
}

void MPolyBuilder::add(const Exponents& e, const Rational& c) {
  if (c == 0) return;
  add_into(p_.terms_, e, c);
}

MPoly MPolyBuilder::take() { return std::move(p_); }

MPoly pow(const MPoly& p, unsigned e) {
  MPoly r = MPoly::constant(Rational(1), p.context());
  MPoly b = p;
  while (e) {
    if (e & 1) r *= b;
    if (e >>= 1) b *= b;
  }
  return r;
}

MPoly falling(const MPoly& base, unsigned i) {
  MPoly r = MPoly::constant(Rational(1), base.context());
  for (unsigned t = 0; t < i; ++t)
    r *= base - MPoly::constant(Rational(t), base.context());
  return r;
}

std::optional<MPoly> try_divide(const MPoly& a, const MPoly& b) {
  if (b.is_zero()) return std::nullopt;
  ContextPtr m = merge_contexts(a.context(), b.context());
  MPoly r = a.in_context(m);
  MPoly d = b.in_context(m);
  MPoly q = MPoly::constant(Rational(0), m);
  const Exponents& eb = d.terms().rbegin()->first;
  const Rational& cb = d.terms().rbegin()->second;
  while (!r.is_zero()) {
    const Exponents& er = r.terms().rbegin()->first;
    Exponents eq(er.size());
    for (size_t i = 0; i < er.size(); ++i) {
      eq[i] = er[i] - eb[i];
      if (eq[i] < 0) return std::nullopt;
    }
    MPolyBuilder tb(m);
    tb.add(eq, r.terms().rbegin()->second / cb);
    MPoly t = tb.take();
    q += t;
    r -= t * d;
  }
  return q;
}

// ---- gcd ----------------------------------------------------------------

namespace {

MPoly primitive_positive(const MPoly& p) {
  if (p.is_zero()) return p;
  Rational c = p.content();
  MPoly r = p;
  r *= Rational(1) / c;
  return r;
}

// Euclid over Q[x] on ascending coefficient vectors; returns gcd degree.
int univariate_gcd_degree(std::vector<Rational> a, std::vector<Rational> b) {
  auto trim = [](std::vector<Rational>& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
  };
  trim(a);
  trim(b);
  while (!b.empty()) {
    // a mod b
    while (a.size() >= b.size() && !a.empty()) {
      Rational f = a.back() / b.back();
      size_t off = a.size() - b.size();
      for (size_t i = 0; i < b.size(); ++i) a[off + i] -= f * b[i];
      trim(a);
    }
    std::swap(a, b);
  }
  return int(a.size()) - 1;
}

std::vector<std::string> common_vars(const MPoly& a, const MPoly& b) {
  std::vector<std::string> out;
  for (const auto& v : *merge_contexts(a.context(), b.context()))
    if (a.degree_in(v) > 0 && b.degree_in(v) > 0) out.push_back(v);
  return out;
}

// Deterministic small evaluation points for the probe.
std::vector<Rational> probe_image(const MPoly& p, const std::string& keep,
                                  unsigned seed) {
  MPoly q = p;
  unsigned state = seed;
  for (const auto& v : *p.context()) {
    if (v == keep) continue;
    state = state * 1103515245u + 12345u;
    long val = long(state % 37u) + 2;
    q = q.substituted(v, Rational(val));
  }
  std::vector<MPoly> cs = q.coeffs_in(keep);
  std::vector<Rational> out(cs.size());
  for (size_t i = 0; i < cs.size(); ++i) out[i] = cs[i].constant_value();
  return out;
}

MPoly content_in(const MPoly& p, const std::string& var) {
  std::vector<MPoly> cs = p.coeffs_in(var);
  MPoly g;
  for (const auto& c : cs) {
    if (c.is_zero()) continue;
    g = g.is_zero() ? c : mpoly_gcd(g, c);
    if (g.is_constant()) break;
  }
  return g.is_zero() ? MPoly(Rational(0)) : primitive_positive(g);
}

MPoly leading_coeff_in(const MPoly& p, const std::string& var) {
  std::vector<MPoly> cs = p.coeffs_in(var);
  return cs.back();
}

MPoly pseudo_rem(MPoly a, const MPoly& b, const std::string& var) {
  int db = b.degree_in(var);
  MPoly lb = leading_coeff_in(b, var);
  ContextPtr ctx = merge_contexts(a.context(), b.context());
  while (!a.is_zero() && a.degree_in(var) >= db) {
    int da = a.degree_in(var);
    MPoly la = leading_coeff_in(a, var);
    MPoly xk = pow(MPoly::variable(var, ctx), unsigned(da - db));
    a = a * lb - la * xk * b;
  }
  return a;
}

// Heuristic gcd by evaluation at a large integer and xi-adic digit
// reconstruction, certified by trial division. Falls back to the PRS when
// the candidate fails repeatedly.
mpz_class poly_height(const MPoly& p) {
  mpz_class h = 0;
  for (const auto& [e, c] : p.terms()) {
    mpz_class m = abs(c.get_num());
    if (m > h) h = m;
  }
  return h;
}

// Balanced remainder in (-xi/2, xi/2].
mpz_class balanced_mod(const mpz_class& c, const mpz_class& xi) {
  mpz_class r = c % xi;
  if (r < 0) r += xi;
  if (2 * r > xi) r -= xi;
  return r;
}

std::optional<MPoly> gcd_heuristic(const MPoly& ain, const MPoly& bin,
                                   int depth) {
  ContextPtr ctx = merge_contexts(ain.context(), bin.context());
  MPoly a = ain.in_context(ctx);
  MPoly b = bin.in_context(ctx);
  std::string var;
  for (const auto& v : *ctx)
    if (a.degree_in(v) > 0 || b.degree_in(v) > 0) var = v;
  if (var.empty()) {
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), mpz_class(a.constant_value().get_num()).get_mpz_t(),
            mpz_class(b.constant_value().get_num()).get_mpz_t());
    return MPoly::constant(Rational(g), ctx);
  }
  if (depth > 8) return std::nullopt;

  mpz_class h = std::max(poly_height(a), poly_height(b));
  mpz_class xi = 2 * h + 29;
  for (int attempt = 0; attempt < 6; ++attempt) {
    MPoly ea = a.substituted(var, Rational(xi));
    MPoly eb = b.substituted(var, Rational(xi));
    if (!ea.is_zero() && !eb.is_zero()) {
      std::optional<MPoly> eg = gcd_heuristic(ea, eb, depth + 1);
      if (eg) {
        // xi-adic reconstruction of the candidate in var.
        MPoly g = *eg;
        MPoly cand = MPoly::constant(Rational(0), ctx);
        MPoly x = MPoly::variable(var, ctx);
        MPoly xpow = MPoly::constant(Rational(1), ctx);
        bool ok = true;
        for (int digit = 0; !g.is_zero(); ++digit) {
          if (digit > 64) {
            ok = false;
            break;
          }
          MPolyBuilder db(g.context());
          for (const auto& [e, c] : g.terms())
            db.add(e, Rational(balanced_mod(mpz_class(c.get_num()), xi)));
          MPoly d = db.take();
          cand += d.in_context(ctx) * xpow;
          g -= d;
          g *= Rational(mpz_class(1), xi);
          xpow *= x;
        }
        // Keep the integer content: at inner recursion levels it carries the
        // xi-adic image of monomial factors in the outer variables.
        if (ok && !cand.is_zero() && try_divide(a, cand) &&
            try_divide(b, cand))
          return cand;
      }
    }
    // Grow the evaluation point; the ratio keeps it away from small roots.
    xi = xi * 73794 / 27011 + 17;
  }
  return std::nullopt;
}

}  // namespace

MPoly mpoly_gcd(const MPoly& a, const MPoly& b) {
  if (a.is_zero()) return primitive_positive(b);
  if (b.is_zero()) return primitive_positive(a);
  if (a.is_constant() || b.is_constant()) return MPoly(Rational(1));
  std::vector<std::string> vars = common_vars(a, b);
  if (vars.empty()) return MPoly(Rational(1));

  // Main variable: the common variable of smallest degree.
  std::string v = vars.front();
  int best = std::min(a.degree_in(v), b.degree_in(v));
  for (const auto& w : vars) {
    int d = std::min(a.degree_in(w), b.degree_in(w));
    if (d < best) {
      best = d;
      v = w;
    }
  }

  // Evaluation probe: deg_v(gcd) <= deg(gcd of the univariate images) when
  // the image of the gcd is nonzero; two independent points are used.
  bool maybe_nontrivial = true;
  if (a.context()->size() > 1 || b.context()->size() > 1) {
    int bound = best;
    bool informative = false;
    for (unsigned seed : {0x9e3779b9u, 0x85ebca6bu}) {
      std::vector<Rational> ia = probe_image(a, v, seed);
      std::vector<Rational> ib = probe_image(b, v, seed);
      // A seed only yields a valid degree bound when the images keep the
      // full degree: lc_v(a) nonzero at the point forces lc_v(gcd) nonzero.
      if (int(ia.size()) != a.degree_in(v) + 1 ||
          int(ib.size()) != b.degree_in(v) + 1)
        continue;
      informative = true;
      bound = std::min(bound, univariate_gcd_degree(ia, ib));
    }
    if (informative && bound <= 0) maybe_nontrivial = false;
  }

  if (maybe_nontrivial) {
    std::optional<MPoly> hg =
        gcd_heuristic(primitive_positive(a), primitive_positive(b), 0);
    if (hg && !hg->is_constant()) {
      // The candidate is a certified common divisor but may miss factors;
      // divide it out and pick up whatever remains from the cofactors.
      MPoly cand = primitive_positive(*hg);
      MPoly rest = mpoly_gcd(*try_divide(a, cand), *try_divide(b, cand));
      return primitive_positive(cand * rest);
    }
  }

  MPoly ca = content_in(a, v);
  MPoly cb = content_in(b, v);
  MPoly cg = mpoly_gcd(ca, cb);
  if (!maybe_nontrivial) return primitive_positive(cg);

  MPoly pa = *try_divide(a, ca);
  MPoly pb = *try_divide(b, cb);
  MPoly r0 = pa.degree_in(v) >= pb.degree_in(v) ? pa : pb;
  MPoly r1 = pa.degree_in(v) >= pb.degree_in(v) ? pb : pa;
  while (!r1.is_zero()) {
    MPoly r = pseudo_rem(r0, r1, v);
    if (!r.is_zero()) {
      MPoly c = content_in(r, v);
      r = *try_divide(r, c);
      r = primitive_positive(r);
    }
    r0 = std::move(r1);
    r1 = std::move(r);
  }
  if (r0.degree_in(v) == 0) return primitive_positive(cg);
  return primitive_positive(cg * primitive_positive(r0));
}

}  // namespace bochnerlab
