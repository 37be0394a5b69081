#include "weylcoh/charvariety.hpp"

#include <algorithm>
#include <bit>
#include <map>

#include "weylcoh/errors.hpp"
#include "weylcoh/groebner.hpp"

namespace weylcoh {
namespace {

std::string variable_name(std::size_t n, std::size_t v) {
  return v < n ? "x" + std::to_string(v + 1) : "xi" + std::to_string(v - n + 1);
}

std::size_t support_mask(const WeylMonomial& m) {
  std::size_t mask = 0;
  auto e = m.exponents();
  for (std::size_t v = 0; v < e.size(); ++v)
    if (e[v] != 0) mask |= std::size_t{1} << v;
  return mask;
}

/// Largest variable set S such that no generator is supported inside S.
/// Returns -1 (and an empty set) when 1 is among the generators.
int independent_dimension(std::size_t vars, const std::vector<WeylMonomial>& gens, std::size_t& best_mask) {
  std::vector<std::size_t> masks;
  for (const auto& g : gens) masks.push_back(support_mask(g));
  int best = -1;
  best_mask = 0;
  for (std::size_t S = 0; S < (std::size_t{1} << vars); ++S) {
    bool independent = std::none_of(masks.begin(), masks.end(), [&](std::size_t m) { return (m & ~S) == 0; });
    if (!independent) continue;
    int size = std::popcount(S);
    if (size > best) {
      best = size;
      best_mask = S;
    }
  }
  return best;
}

/// Exponent vectors of total degree exactly q in `vars` variables, lex descending.
void exponents_of_degree(std::size_t vars, int q, std::vector<std::vector<int>>& out) {
  std::vector<int> e(vars, 0);
  auto rec = [&](auto&& self, std::size_t i, int left) -> void {
    if (i + 1 == vars) {
      e[i] = left;
      out.push_back(e);
      return;
    }
    for (int k = left; k >= 0; --k) {
      e[i] = k;
      self(self, i + 1, left - k);
    }
  };
  rec(rec, 0, q);
}

WeylMonomial monomial_from(std::size_t n, const std::vector<int>& e) {
  WeylMonomial m(n);
  for (std::size_t v = 0; v < e.size(); ++v) m.exponents()[v] = e[v];
  return m;
}

/// Sparse row elimination keyed by the module order, largest term first.
class Eliminator {
 public:
  explicit Eliminator(const ModuleOrder& order) : order_(order), pivots_(Greater{&order_}) {}

  /// Reduces the row against the pivots; adds it as a new pivot when nonzero.
  bool insert(std::map<std::pair<std::size_t, WeylMonomial>, Rational>&& plain) {
    SortedRow row(Greater{&order_});
    for (auto& [k, c] : plain)
      if (c != 0) row.emplace(k, c);
    while (!row.empty()) {
      auto lead = row.begin();
      auto pivot = pivots_.find(lead->first);
      if (pivot == pivots_.end()) {
        Rational inv = 1 / lead->second;
        for (auto& [k, c] : row) c *= inv;
        auto key = lead->first;
        pivots_.emplace(key, std::move(row));
        return true;
      }
      const Rational factor = lead->second;
      for (const auto& [k, c] : pivot->second) {
        auto [it, inserted] = row.emplace(k, 0);
        it->second -= factor * c;
        if (it->second == 0) row.erase(it);
      }
    }
    return false;
  }

  std::size_t rank() const { return pivots_.size(); }

 private:
  using Key = std::pair<std::size_t, WeylMonomial>;
  struct Greater {
    const ModuleOrder* order;
    bool operator()(const Key& a, const Key& b) const {
      return order->compare(a.first, a.second, b.first, b.second) > 0;
    }
  };
  using SortedRow = std::map<Key, Rational, Greater>;
  ModuleOrder order_;
  std::map<Key, SortedRow, Greater> pivots_;
};

}  // namespace

std::vector<SymbolPolynomial> CharIdeal::ideal(std::size_t component) const {
  std::vector<SymbolPolynomial> out;
  for (const auto& row : symbols)
    if (component < row.size() && !row[component].is_zero()) out.push_back(row[component]);
  return out;
}

CharIdeal characteristic_data(const PresentedModule& m) {
  validate_presentation(m);
  CharIdeal c;
  c.n = m.n;
  c.rank = m.rank();
  ModuleOrder order =
      ModuleOrder::base(m.n, m.rank(), MonomialOrderKind::OrderFiltration, ModuleRanking::TermOverPosition);
  std::vector<FreeElement> rels;
  for (const auto& r : m.relations)
    if (!r.is_zero()) rels.push_back(r);
  c.gb = left_groebner(rels, order);
  c.leading.assign(c.rank, {});
  for (const auto& g : c.gb) {
    int top = -1;
    for (const auto& comp : g.components())
      for (const auto& [mono, coef] : comp.terms()) top = std::max(top, mono.d_order());
    std::vector<SymbolPolynomial> row;
    for (const auto& comp : g.components()) {
      bool reaches = std::any_of(comp.terms().begin(), comp.terms().end(),
                                 [&](const auto& t) { return t.first.d_order() == top; });
      row.push_back(reaches ? order_symbol(comp) : SymbolPolynomial(m.n));
    }
    c.symbols.push_back(std::move(row));
    LeadingTerm lt = leading_term(g, order);
    c.leading[lt.component].push_back(lt.monomial);
  }
  return c;
}

std::string DimensionVerdict::certificate() const {
  if (zero_module) return "zero module: every component's leading ideal contains 1";
  std::string s = "independent set {";
  for (std::size_t k = 0; k < independent_set.size(); ++k) s += (k ? ", " : "") + independent_set[k];
  s += "} in component " + std::to_string(component + 1);
  return s;
}

DimensionVerdict dimension(const CharIdeal& c) {
  DimensionVerdict v;
  const std::size_t vars = 2 * c.n;
  int best = -1;
  std::size_t best_mask = 0;
  for (std::size_t l = 0; l < c.rank; ++l) {
    std::size_t mask = 0;
    int d = independent_dimension(vars, c.leading[l], mask);
    if (d > best) {
      best = d;
      best_mask = mask;
      v.component = l;
    }
  }
  if (best < 0) {
    v.zero_module = true;
    v.holonomic = true;
    return v;
  }
  v.dimension = best;
  for (std::size_t var = 0; var < vars; ++var)
    if (best_mask & (std::size_t{1} << var)) v.independent_set.push_back(variable_name(c.n, var));
  if (best < static_cast<int>(c.n))
    throw InvariantViolation("Bernstein inequality violated: d = " + std::to_string(best) + " < n = " +
                             std::to_string(c.n) + " for a nonzero module");
  v.holonomic = best == static_cast<int>(c.n);
  return v;
}

HilbertSamples dimension_oracle(const PresentedModule& m, int p_max, std::size_t column_cap) {
  validate_presentation(m);
  if (p_max < 0) throw InputError("p_max must be nonnegative");
  const std::size_t n = m.n;
  const std::size_t rank = m.rank();
  ModuleOrder order = ModuleOrder::base(n, rank, MonomialOrderKind::Degrevlex, ModuleRanking::TermOverPosition);
  std::vector<FreeElement> rels;
  for (const auto& r : m.relations)
    if (!r.is_zero()) rels.push_back(r);
  const std::vector<FreeElement> gb = left_groebner(rels, order);
  std::vector<LeadingTerm> leads;
  for (const auto& g : gb) leads.push_back(leading_term(g, order));

  HilbertSamples out;
  out.p_max = p_max;
  Eliminator elim(order);
  std::size_t columns = 0;
  std::size_t standard = 0;
  std::vector<std::vector<int>> slice;
  for (int p = 0; p <= p_max; ++p) {
    slice.clear();
    exponents_of_degree(2 * n, p, slice);
    if (columns + slice.size() * rank > column_cap) {
      out.partial = true;
      break;
    }
    columns += slice.size() * rank;
    for (const auto& e : slice) {
      WeylMonomial mono = monomial_from(n, e);
      for (std::size_t l = 0; l < rank; ++l) {
        bool divisible = std::any_of(leads.begin(), leads.end(), [&](const LeadingTerm& lt) {
          return lt.component == l && lt.monomial.divides(mono);
        });
        if (!divisible) ++standard;
      }
    }
    // Rows t * g entering at level p.
    for (std::size_t k = 0; k < gb.size(); ++k) {
      const int q = p - leads[k].monomial.total_degree();
      if (q < 0) continue;
      std::vector<std::vector<int>> ts;
      exponents_of_degree(2 * n, q, ts);
      for (const auto& e : ts) {
        WeylElement t = WeylElement::monomial(monomial_from(n, e));
        std::map<std::pair<std::size_t, WeylMonomial>, Rational> row;
        for (std::size_t l = 0; l < rank; ++l) {
          if (gb[k][l].is_zero()) continue;
          const WeylElement product = t * gb[k][l];
          for (const auto& [mono, c] : product.terms()) row[{l, mono}] += c;
        }
        elim.insert(std::move(row));
      }
    }
    const std::size_t dim = columns - elim.rank();
    if (dim != standard)
      throw InvariantViolation("filtration slice " + std::to_string(p) + ": elimination gives " + std::to_string(dim) +
                               " but the standard monomial count is " + std::to_string(standard));
    out.dims.push_back(dim);
  }
  return out;
}

std::optional<double> growth_slope(const HilbertSamples& s) {
  if (s.dims.size() < 2) return std::nullopt;
  const std::size_t p = s.dims.size() - 1;
  const double prev = static_cast<double>(s.dims[p - 1]);
  const double cur = static_cast<double>(s.dims[p]);
  if (prev == 0) return std::nullopt;
  return static_cast<double>(p) * (cur - prev) / prev;
}

}  // namespace weylcoh
