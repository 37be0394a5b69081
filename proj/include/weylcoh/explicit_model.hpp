#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "weylcoh/linalg.hpp"

namespace weylcoh {

/// Finite window [lo, hi] of a graded D_n-module given by explicit matrices.
///
/// x[i][l - lo] is the matrix of x_i : M_l -> M_{l+1} and d[i][l - lo] the
/// matrix of d_i : M_l -> M_{l-1}. Maps leaving the window are absent
/// (x at hi, d at lo) and stored as 0 x dim matrices.
struct ExplicitGradedModule {
  std::string name;
  std::size_t n = 1;
  int lo = 0;
  int hi = -1;
  std::vector<std::vector<std::string>> labels;  // labels[l - lo]
  std::vector<std::vector<RationalMatrix>> x;
  std::vector<std::vector<RationalMatrix>> d;

  std::size_t dim(int l) const;
  bool covers(int l) const { return l >= lo && l <= hi; }

  /// M(s): the piece in degree l is M_{s+l}.
  ExplicitGradedModule shifted(int s) const;

  /// Checks [d_i, x_j] = delta_ij, [x_i, x_j] = 0 and [d_i, d_j] = 0 wherever
  /// both sides stay inside the window. Throws ModelInvalid naming the first
  /// failing relation and degree.
  void validate() const;
};

/// dim of the degree-d part of H^i of the de Rham complex of the model.
///
/// Degrees follow the Tor strands: Omega^i(M)_d is the sum over |J| = i of
/// M_{d+n-i} dx_J, and d(m dx_J) = sum_s d_s(m) dx_s ^ dx_J with the usual
/// alternating signs. Throws InputError if the model does not contain the
/// pieces the computation needs.
std::size_t explicit_strand_oracle(const ExplicitGradedModule& model, std::size_t i, int d);

/// Degrees d for which explicit_strand_oracle(model, i, d) is defined.
bool oracle_covers(const ExplicitGradedModule& model, std::size_t i, int d);

/// R = Q[x_1..x_n] on degrees [lo, hi].
ExplicitGradedModule polynomial_model(std::size_t n, int lo, int hi);
/// Q[x, x^-1]/Q[x] (n = 1), basis x^l for l <= -1.
ExplicitGradedModule laurent_quotient_model(int lo, int hi);
/// D_1/D_1(x d - lambda), basis x^l (l >= 0) and d^{-l} (l < 0).
ExplicitGradedModule euler_model(long lambda, int lo, int hi);
/// D_1/D_1 d^2, basis x^l (l >= 0) and x^{l+1} d (l >= -1).
ExplicitGradedModule second_derivative_model(int lo, int hi);

/// Looks up a bundled model by name ("polynomial", "laurent-quotient",
/// "euler-0", "euler-1", "second-derivative") and builds it on [lo, hi],
/// then applies the shift. Throws InputError for unknown names.
ExplicitGradedModule named_model(const std::string& name, std::size_t n, int shift, int lo, int hi);

}  // namespace weylcoh
