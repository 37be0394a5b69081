#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "weylcoh/free_module.hpp"
#include "weylcoh/resolution.hpp"

namespace weylcoh {

/// Symbol data of M = F_0/N for the order filtration.
///
/// gb is a Groebner basis of N for the order-filtration order (|b| first)
/// with term-over-position ranking. symbols[k][l] is the principal symbol of
/// component l of gb[k] (zero when that component has lower order).
/// leading[l] lists the leading monomials of gb elements in component l, read
/// as monomials x^a xi^b of Q[x, xi].
struct CharIdeal {
  std::size_t n = 1;
  std::size_t rank = 1;
  std::vector<FreeElement> gb;
  std::vector<std::vector<SymbolPolynomial>> symbols;
  std::vector<std::vector<WeylMonomial>> leading;

  /// Generators of the componentwise symbol ideal (nonzero symbols only).
  std::vector<SymbolPolynomial> ideal(std::size_t component) const;
};

CharIdeal characteristic_data(const PresentedModule& m);

struct DimensionVerdict {
  /// Krull dimension of gr M; empty for the zero module.
  std::optional<int> dimension;
  bool holonomic = false;
  bool zero_module = false;
  /// Largest variable set independent modulo the leading ideal of the
  /// component realizing the maximum.
  std::vector<std::string> independent_set;
  std::size_t component = 0;
  /// The same dimension holds for the completion M^ over D^.
  bool valid_for_completion = true;

  std::string certificate() const;
};

/// Dimension of Q[x, xi]^r / (leading module), maximized over components.
/// Re-checks the Bernstein inequality d >= n and throws InvariantViolation
/// if a nonzero module violates it.
DimensionVerdict dimension(const CharIdeal& c);

struct HilbertSamples {
  /// dims[p] = dim_Q G_p M for the Bernstein filtration, p = 0..size()-1.
  std::vector<std::size_t> dims;
  int p_max = 0;
  /// Stopped early because the slice exceeded the column cap.
  bool partial = false;
};

/// Filtration slices G_p M = image of the span of x^a d^b e_l with
/// |a| + |b| <= p. Each slice is computed by sparse exact elimination of the
/// truncated relation span {t g : |t| + |lm g| <= p} and cross-checked
/// against the count of standard monomials; a mismatch throws
/// InvariantViolation.
HilbertSamples dimension_oracle(const PresentedModule& m, int p_max, std::size_t column_cap = 250000);

/// Discrete growth exponent p (f(p) - f(p-1)) / f(p-1) at the last sampled p;
/// exact for f(p) = C(p+k, k). Empty when fewer than two nonzero samples.
std::optional<double> growth_slope(const HilbertSamples& s);

}  // namespace weylcoh
