#include "weylcoh/resolution.hpp"

#include "weylcoh/errors.hpp"
#include "weylcoh/expression.hpp"
#include "weylcoh/groebner.hpp"

namespace weylcoh {
namespace {

std::vector<int> shifts_of(const WeylMatrix& rows, std::span<const int> source_shifts) {
  std::vector<int> out;
  out.reserve(rows.size());
  for (const auto& r : rows) {
    HomogeneousDegree h = free_degree(r, source_shifts);
    if (h.kind != HomogeneousDegree::Kind::Degree)
      throw InvariantViolation("resolution produced a non-homogeneous row " + render_row(r.components()));
    // The generator mapping to r has degree h.value, so its shift is -h.value.
    out.push_back(-h.value);
  }
  return out;
}

}  // namespace

bool GradedResolution::position_is_zero(std::size_t j) const {
  if (j < shifts.size()) return shifts[j].empty();
  return terminated;
}

void validate_presentation(const PresentedModule& m) {
  if (m.n < 1) throw InputError("number of variables must be at least 1");
  for (std::size_t r = 0; r < m.relations.size(); ++r) {
    const FreeElement& rel = m.relations[r];
    if (rel.rank() != m.rank())
      throw InputError("relation " + std::to_string(r + 1) + " has " + std::to_string(rel.rank()) +
                       " components but F_0 has rank " + std::to_string(m.rank()));
    if (!rel.is_zero() && rel.n() != m.n)
      throw InputError("relation " + std::to_string(r + 1) + " is over the wrong Weyl algebra");
    if (!free_degree(rel, m.shifts).homogeneous())
      throw InputError("relation " + std::to_string(r + 1) + " is not homogeneous: " +
                       render_row(rel.components()));
  }
}

GradedResolution graded_free_resolution(const PresentedModule& m, std::size_t length,
                                        const ResolutionOptions& options) {
  validate_presentation(m);
  if (length < 1) throw InputError("resolution length must be at least 1");

  GradedResolution res;
  res.n = m.n;
  res.shifts.push_back(m.shifts);
  ModuleOrder order = ModuleOrder::base(m.n, m.rank(), options.kind, options.ranking);
  res.order = order.describe();

  std::vector<FreeElement> rels;
  for (const auto& r : m.relations)
    if (!r.is_zero()) rels.push_back(r);
  WeylMatrix current = left_groebner(rels, order);
  if (current.empty()) {
    res.terminated = true;
    return res;
  }
  res.shifts.push_back(shifts_of(current, res.shifts.back()));
  res.maps.push_back(current);

  while (res.maps.size() < length) {
    std::vector<ModuleOrder::Lead> leads;
    for (const auto& row : current) {
      LeadingTerm lt = leading_term(row, order);
      leads.push_back({lt.component, lt.monomial});
    }
    ModuleOrder next_order = order.schreyer(leads);
    std::vector<FreeElement> syz = syzygies(current, order);
    if (syz.empty()) {
      res.terminated = true;
      break;
    }
    WeylMatrix next = left_groebner(syz, next_order);
    res.shifts.push_back(shifts_of(next, res.shifts.back()));
    res.maps.push_back(next);
    current = std::move(next);
    order = std::move(next_order);
  }
  return res;
}

void verify_resolution(const GradedResolution& res) {
  if (res.shifts.size() != res.maps.size() + 1)
    throw InvariantViolation("resolution: shift and map counts disagree");
  for (std::size_t j = 1; j <= res.maps.size(); ++j) {
    const WeylMatrix& B = res.maps[j - 1];
    const auto& src = res.shifts[j];
    const auto& dst = res.shifts[j - 1];
    if (B.size() != src.size())
      throw InvariantViolation("resolution: B_" + std::to_string(j) + " row count mismatch");
    for (std::size_t r = 0; r < B.size(); ++r) {
      if (B[r].rank() != dst.size())
        throw InvariantViolation("resolution: B_" + std::to_string(j) + " column count mismatch");
      for (std::size_t l = 0; l < dst.size(); ++l) {
        HomogeneousDegree h = homogeneous_degree(B[r][l]);
        if (h.kind == HomogeneousDegree::Kind::AnyDegree) continue;
        if (h.kind == HomogeneousDegree::Kind::NotHomogeneous || h.value != dst[l] - src[r])
          throw InvariantViolation("resolution: entry (" + std::to_string(r + 1) + ", " +
                                   std::to_string(l + 1) + ") of B_" + std::to_string(j) +
                                   " has the wrong degree");
      }
    }
    if (j < res.maps.size() && !composes_to_zero(res.maps[j], B, dst.size()))
      throw InvariantViolation("resolution: B_" + std::to_string(j + 1) + " B_" +
                               std::to_string(j) + " != 0");
  }
}

}  // namespace weylcoh
