#pragma once

#include <stdexcept>
#include <string>

namespace bochnerlab {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ZeroDenominator : Error {
  ZeroDenominator() : Error("zero denominator") {}
};

// lambda(m) == lambda(n) for m < n: no unique eigenpolynomial of degree n.
struct Resonance : Error {
  long m, n;
  Resonance(long m_, long n_)
      : Error("resonance: lambda(" + std::to_string(m_) + ") = lambda(" +
              std::to_string(n_) + ")"),
        m(m_), n(n_) {}
};

struct IdenticallyResonant : Error {
  long k;
  explicit IdenticallyResonant(long k_)
      : Error("lambda(n) - lambda(n-" + std::to_string(k_) +
              ") vanishes identically"),
        k(k_) {}
};

struct DegreeTooHigh : Error {
  DegreeTooHigh() : Error("polynomial degree exceeds sequence length") {}
};

struct NoFit : Error {
  NoFit() : Error("no rational function fits the samples within the degree caps") {}
};

struct Breakdown : Error {
  long n;
  explicit Breakdown(long n_)
      : Error("factorization breakdown: h(" + std::to_string(n_) + ") = 0"),
        n(n_) {}
};

struct NoOperator : Error {
  NoOperator() : Error("no differential operator up to the requested order") {}
};

struct SyntaxError : Error {
  std::size_t position;
  SyntaxError(std::size_t pos, const std::string& what_)
      : Error("syntax error at position " + std::to_string(pos) + ": " + what_),
        position(pos) {}
};

struct UnknownVariable : Error {
  std::string name;
  explicit UnknownVariable(std::string name_)
      : Error("unknown variable: " + name_), name(std::move(name_)) {}
};

struct InvalidSpec : Error {
  using Error::Error;
};

}  // namespace bochnerlab
