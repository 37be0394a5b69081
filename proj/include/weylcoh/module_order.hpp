#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "weylcoh/weyl.hpp"

namespace weylcoh {

/// Monomial order on x^a d^b. Both kinds refine total degree |a| + |b|
/// (OrderFiltration after comparing |b|), so leading monomials are
/// multiplicative in D.
enum class MonomialOrderKind {
  Degrevlex,       ///< degrevlex on the concatenated (a, b)
  OrderFiltration  ///< |b| first, ties by degrevlex
};

enum class ModuleRanking { PositionOverTerm, TermOverPosition };

/// Module monomial order on a free module of finite rank.
///
/// A base order compares (monomial, component) by kind and ranking; smaller
/// component indices rank higher. A Schreyer order compares m e_i against
/// m' e_k through the leading terms of m g_i and m' g_k in the parent order,
/// breaking ties by index. Schreyer orders are stored flattened: each
/// component keeps its cumulative monomial offset, its base component and the
/// chain of ancestor indices.
class ModuleOrder {
 public:
  ModuleOrder() = default;
  static ModuleOrder base(std::size_t n, std::size_t rank,
                          MonomialOrderKind kind = MonomialOrderKind::Degrevlex,
                          ModuleRanking ranking = ModuleRanking::PositionOverTerm);

  struct Lead {
    std::size_t component;
    WeylMonomial monomial;
  };
  /// Order on the free module whose generators map to elements with the
  /// given leading terms (in this order).
  ModuleOrder schreyer(const std::vector<Lead>& leads) const;

  std::size_t n() const { return n_; }
  std::size_t rank() const { return comps_.size(); }
  MonomialOrderKind kind() const { return kind_; }
  ModuleRanking ranking() const { return ranking_; }
  std::size_t level() const { return level_; }

  /// Three-way comparison of m1 e_c1 and m2 e_c2; positive when the first is
  /// larger.
  int compare(std::size_t c1, const WeylMonomial& m1, std::size_t c2, const WeylMonomial& m2) const;
  /// Comparison of plain monomials under the base kind.
  int compare_monomials(const WeylMonomial& m1, const WeylMonomial& m2) const;
  /// Total degree of m shifted by the component offset; drives pair selection.
  int sugar(std::size_t c, const WeylMonomial& m) const;

  std::string describe() const;

 private:
  struct Component {
    std::vector<int> offset;
    std::size_t base = 0;
    std::vector<std::size_t> chain;
  };
  std::size_t n_ = 0;
  std::size_t level_ = 0;
  MonomialOrderKind kind_ = MonomialOrderKind::Degrevlex;
  ModuleRanking ranking_ = ModuleRanking::PositionOverTerm;
  std::vector<Component> comps_;

  int compare_shifted(const WeylMonomial& m1, const std::vector<int>& o1, const WeylMonomial& m2,
                      const std::vector<int>& o2) const;
};

}  // namespace weylcoh
