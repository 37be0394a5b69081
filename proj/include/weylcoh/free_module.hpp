#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "weylcoh/weyl.hpp"

namespace weylcoh {

/// Element of a free left module D(g_1) + ... + D(g_beta).
///
/// Shift convention: D(g)_d = D_{g+d}, so generator e_l sits in degree -g_l
/// and sum f_l e_l is homogeneous of degree d iff every nonzero f_l has
/// grading degree d + g_l.
class FreeElement {
 public:
  FreeElement() = default;
  FreeElement(std::size_t n, std::size_t rank);
  explicit FreeElement(std::vector<WeylElement> components);
  static FreeElement unit(std::size_t n, std::size_t rank, std::size_t l);

  std::size_t n() const { return n_; }
  std::size_t rank() const { return comps_.size(); }
  const WeylElement& operator[](std::size_t l) const { return comps_[l]; }
  WeylElement& operator[](std::size_t l) { return comps_[l]; }
  const std::vector<WeylElement>& components() const { return comps_; }
  bool is_zero() const;

  FreeElement& operator+=(const FreeElement& other);
  FreeElement& operator-=(const FreeElement& other);
  friend FreeElement operator+(FreeElement f, const FreeElement& g) { return f += g; }
  friend FreeElement operator-(FreeElement f, const FreeElement& g) { return f -= g; }
  /// Left scalar multiplication by an operator.
  friend FreeElement operator*(const WeylElement& c, const FreeElement& f);
  bool operator==(const FreeElement& other) const;

 private:
  std::size_t n_ = 0;
  std::vector<WeylElement> comps_;
};

/// Rows are the images of the generators of the source module.
using WeylMatrix = std::vector<FreeElement>;

/// Grading degree of f with respect to the component shifts.
HomogeneousDegree free_degree(const FreeElement& f, std::span<const int> shifts);

/// sum_r coeffs[r] * rows[r]: the image of an element of the source module.
FreeElement combine(std::span<const WeylElement> coeffs, const WeylMatrix& rows,
                    std::size_t target_rank);

/// Row-convention composition: (upper * lower) where upper maps F_{j+1} -> F_j
/// and lower maps F_j -> F_{j-1}. Returns true when every product row is zero.
bool composes_to_zero(const WeylMatrix& upper, const WeylMatrix& lower, std::size_t target_rank);

}  // namespace weylcoh
