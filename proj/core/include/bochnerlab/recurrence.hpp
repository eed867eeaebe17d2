#pragma once

#include <map>
#include <optional>
#include <vector>

#include "bochnerlab/diffop.hpp"
#include "bochnerlab/ratfn.hpp"

namespace bochnerlab {

// Recurrence data extracted from x*P_n = P_{n+1} + sum_j b_j(n) P_{n-j}.
struct RecTable {
  long max_index = 0;  // rows cover n = 0..max_index-1
  // rows[n][j] = b_j(n), j = 0..n.
  std::vector<std::vector<Rational>> rows;
  // Largest offset with a nonzero entry per row (-1 when the row is zero).
  std::vector<int> support;
  // Detected bandwidth; nullopt marks Unbounded (support growing with n).
  std::optional<int> bandwidth;
  // Closed forms b_j as rational functions of n, when reconstruction ran.
  std::map<int, RatFn> reconstructed;
};

// Coefficients c_m with q = sum c_m P_m, by descending back-substitution.
std::vector<Rational> expand_in_eigenbasis(const EigenSeq& seq, const XPoly& q);

RecTable recurrence_table(const EigenSeq& seq);

// Exact rational-function fit through integer samples, degrees scanned
// upward to (deg_num_cap, deg_den_cap); every sample, including at least
// three held-out ones, must match exactly.
RatFn reconstruct_rational(const std::vector<std::pair<long, Rational>>& samples,
                           int deg_num_cap, int deg_den_cap);

// Reconstructs closed forms for every b_j, j = 0..bandwidth, storing them in
// the table. Fits use the rows with n >= bandwidth: earlier rows truncate
// the band and absorb the missing terms, so they can deviate from the
// generic closed form. Throws NoFit if some column resists the caps.
void reconstruct_table(RecTable& table, int deg_num_cap = 8, int deg_den_cap = 8);

}  // namespace bochnerlab
