#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "weylcoh/free_module.hpp"
#include "weylcoh/module_order.hpp"

namespace weylcoh {

/// Graded left D-module M = coker(F_1 -> F_0) given by the shifts of F_0 and
/// the relation rows.
struct PresentedModule {
  std::size_t n = 1;
  std::vector<int> shifts;
  std::vector<FreeElement> relations;

  std::size_t rank() const { return shifts.size(); }
};

/// Throws InputError if the presentation is malformed or some relation is not
/// homogeneous (the message names the offending row).
void validate_presentation(const PresentedModule& m);

/// Graded free resolution ... -> F_2 -> F_1 -> F_0 -> M.
///
/// maps[j-1] holds B_j as rows: row r is the image in F_{j-1} of the r-th
/// generator of F_j. shifts[j] are the shifts of F_j. Composition in this row
/// convention is B_{j+1} * B_j = 0.
struct GradedResolution {
  std::size_t n = 1;
  std::vector<std::vector<int>> shifts;
  std::vector<WeylMatrix> maps;
  /// The last map is injective (no further syzygies), so F_j = 0 beyond it.
  bool terminated = false;
  /// Monomial order description used for the computation.
  std::string order;

  std::size_t length() const { return maps.size(); }
  std::size_t rank(std::size_t j) const { return j < shifts.size() ? shifts[j].size() : 0; }
  /// True when F_j is known to be the zero module.
  bool position_is_zero(std::size_t j) const;
  /// True when positions 0..top of the complex are all determined.
  bool covers(std::size_t top) const { return terminated || length() >= top; }
};

struct ResolutionOptions {
  MonomialOrderKind kind = MonomialOrderKind::Degrevlex;
  ModuleRanking ranking = ModuleRanking::PositionOverTerm;
};

/// Resolution by Schreyer syzygies: B_1 is the reduced Groebner basis of the
/// relations, B_{j+1} the reduced Groebner basis of the syzygies of B_j under
/// the order induced by B_j. Computes at most `length` maps.
GradedResolution graded_free_resolution(const PresentedModule& m, std::size_t length,
                                        const ResolutionOptions& options = {});

/// Checks B_{j+1} B_j = 0 and the entry degrees shifts[j-1][l] - shifts[j][r]
/// for every map. Throws InvariantViolation with the first failure.
void verify_resolution(const GradedResolution& res);

}  // namespace weylcoh
