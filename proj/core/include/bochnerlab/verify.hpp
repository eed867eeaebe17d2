#pragma once

#include <string>
#include <vector>

#include "bochnerlab/symbolic.hpp"

namespace bochnerlab {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct CaseResult {
  std::string name;
  std::vector<CheckResult> checks;
  bool passed() const {
    for (const CheckResult& c : checks)
      if (!c.passed) return false;
    return !checks.empty();
  }
};

// Case names, in report order: "quadratic-a3", "linear-a3", "pure-cubic",
// "cubic-lambda", "quadratic-lambda", "families".
std::vector<std::string> case_names();

// Runs one reproduction case; throws InvalidSpec for an unknown name.
CaseResult run_case(const std::string& name);

// Runs every case; cases run concurrently, capped by the environment
// variable BOCHNER_LAB_THREADS when set. Results are ordered by case name.
std::vector<CaseResult> run_all_cases();

// The cubic-operator ansatz families used by the reproduction cases, exposed
// for the test suite. Entries of each inner vector are coefficients of a_i(x)
// in ascending powers of x, as polynomials in the free parameters.
SymbolicAnsatz linear_lambda_quadratic_a3();  // a3 = x^2 + a31 x + a30
SymbolicAnsatz linear_lambda_linear_a3();     // a3 = a31 x + a30
// Quadratic lambda: a3 = a32 x^2 + a31 x + a30, a2 = x^2 + a20,
// a1 = a11 x + a10; fixed entries are supplied as polynomials over the
// parameter context, free ones default to their symbols.
SymbolicAnsatz quadratic_lambda_ansatz(
    const std::map<std::string, MPoly>& fixed);
// Symbolic type1(3)/appell(3) ansatz over parameters a1, a2, a3.
SymbolicAnsatz order3_family_ansatz(bool with_x_powers);

}  // namespace bochnerlab
