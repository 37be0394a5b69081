#pragma once

#include <string>
#include <vector>

#include "weylcoh/expression.hpp"
#include "weylcoh/free_module.hpp"
#include "weylcoh/resolution.hpp"

namespace test {

inline weylcoh::WeylElement W(const std::string& s, std::size_t n = 1) { return weylcoh::parse_weyl(s, n); }

inline weylcoh::FreeElement row(const std::string& s, std::size_t n = 1) {
  return weylcoh::FreeElement(weylcoh::parse_row(s, n));
}

inline weylcoh::PresentedModule module(std::size_t n, std::vector<int> shifts, const std::vector<std::string>& rels) {
  weylcoh::PresentedModule m;
  m.n = n;
  m.shifts = std::move(shifts);
  for (const auto& r : rels) m.relations.push_back(row(r, n));
  return m;
}

inline weylcoh::PresentedModule polynomial_ring(std::size_t n) {
  std::vector<std::string> rels;
  for (std::size_t k = 1; k <= n; ++k) rels.push_back("d" + std::to_string(k));
  return module(n, {0}, rels);
}

}  // namespace test
