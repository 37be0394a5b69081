#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "weylcoh/free_module.hpp"
#include "weylcoh/module_order.hpp"

namespace weylcoh {

struct LeadingTerm {
  std::size_t component;
  WeylMonomial monomial;
  Rational coefficient;
};

/// Leading term of a nonzero element. Throws InputError for zero.
LeadingTerm leading_term(const FreeElement& f, const ModuleOrder& order);

/// Reduced left Groebner basis of the submodule generated by gens.
///
/// Buchberger with the normal selection strategy (lowest sugar first) and the
/// chain criterion. The result is monic, interreduced and sorted by leading
/// term, largest first, so it is unique for the submodule and the order.
std::vector<FreeElement> left_groebner(std::span<const FreeElement> gens, const ModuleOrder& order);

/// Full left division of f by gb: f = sum_l quotients[l] * gb[l] + remainder,
/// with no term of the remainder divisible by a leading term of gb.
struct Division {
  FreeElement remainder;
  std::vector<WeylElement> quotients;
};
Division divide(const FreeElement& f, std::span<const FreeElement> gb, const ModuleOrder& order);

FreeElement normal_form(const FreeElement& f, std::span<const FreeElement> gb,
                        const ModuleOrder& order);

/// Schreyer generators of the left syzygy module of a Groebner basis. Every
/// returned s satisfies sum_l s_l * gb[l] = 0, which is re-checked before
/// returning. Throws InvariantViolation if gb is not a Groebner basis.
std::vector<FreeElement> syzygies(std::span<const FreeElement> gb, const ModuleOrder& order);

/// True when every S-polynomial of gb reduces to zero.
bool is_groebner_basis(std::span<const FreeElement> gb, const ModuleOrder& order);

}  // namespace weylcoh
