#include "weylcoh/free_module.hpp"

#include <algorithm>

#include "weylcoh/errors.hpp"

namespace weylcoh {

FreeElement::FreeElement(std::size_t n, std::size_t rank) : n_(n), comps_(rank, WeylElement(n)) {}

FreeElement::FreeElement(std::vector<WeylElement> components) : comps_(std::move(components)) {
  for (const auto& c : comps_) n_ = std::max(n_, c.n());
  for (auto& c : comps_)
    if (c.is_zero()) c = WeylElement(n_);
    else if (c.n() != n_) throw InputError("free element components over different Weyl algebras");
}

FreeElement FreeElement::unit(std::size_t n, std::size_t rank, std::size_t l) {
  FreeElement e(n, rank);
  e.comps_[l] = WeylElement::constant(n, 1);
  return e;
}

bool FreeElement::is_zero() const {
  return std::all_of(comps_.begin(), comps_.end(), [](const WeylElement& c) { return c.is_zero(); });
}

FreeElement& FreeElement::operator+=(const FreeElement& other) {
  if (other.rank() != rank()) throw InputError("free element rank mismatch");
  for (std::size_t l = 0; l < comps_.size(); ++l) comps_[l] += other.comps_[l];
  return *this;
}

FreeElement& FreeElement::operator-=(const FreeElement& other) {
  if (other.rank() != rank()) throw InputError("free element rank mismatch");
  for (std::size_t l = 0; l < comps_.size(); ++l) comps_[l] -= other.comps_[l];
  return *this;
}

FreeElement operator*(const WeylElement& c, const FreeElement& f) {
  FreeElement r = f;
  for (auto& comp : r.comps_) comp = c * comp;
  return r;
}

bool FreeElement::operator==(const FreeElement& other) const {
  return rank() == other.rank() && comps_ == other.comps_;
}

HomogeneousDegree free_degree(const FreeElement& f, std::span<const int> shifts) {
  if (shifts.size() != f.rank()) throw InputError("shift count does not match module rank");
  HomogeneousDegree result = HomogeneousDegree::any();
  for (std::size_t l = 0; l < f.rank(); ++l) {
    HomogeneousDegree h = homogeneous_degree(f[l]);
    if (h.kind == HomogeneousDegree::Kind::NotHomogeneous) return HomogeneousDegree::mixed();
    if (h.kind == HomogeneousDegree::Kind::AnyDegree) continue;
    int d = h.value - shifts[l];
    if (result.kind == HomogeneousDegree::Kind::AnyDegree) result = HomogeneousDegree::of(d);
    else if (result.value != d) return HomogeneousDegree::mixed();
  }
  return result;
}

FreeElement combine(std::span<const WeylElement> coeffs, const WeylMatrix& rows,
                    std::size_t target_rank) {
  if (coeffs.size() != rows.size()) throw InputError("coefficient count does not match row count");
  std::size_t n = 0;
  for (const auto& r : rows) n = std::max(n, r.n());
  for (const auto& c : coeffs) n = std::max(n, c.n());
  FreeElement acc(n, target_rank);
  for (std::size_t r = 0; r < rows.size(); ++r)
    if (!coeffs[r].is_zero()) acc += coeffs[r] * rows[r];
  return acc;
}

bool composes_to_zero(const WeylMatrix& upper, const WeylMatrix& lower, std::size_t target_rank) {
  for (const auto& row : upper)
    if (!combine(row.components(), lower, target_rank).is_zero()) return false;
  return true;
}

}  // namespace weylcoh
