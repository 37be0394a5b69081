#include "weylcoh/module_order.hpp"

#include "weylcoh/errors.hpp"

namespace weylcoh {

ModuleOrder ModuleOrder::base(std::size_t n, std::size_t rank, MonomialOrderKind kind,
                              ModuleRanking ranking) {
  ModuleOrder o;
  o.n_ = n;
  o.kind_ = kind;
  o.ranking_ = ranking;
  o.comps_.resize(rank);
  for (std::size_t c = 0; c < rank; ++c) {
    o.comps_[c].offset.assign(2 * n, 0);
    o.comps_[c].base = c;
  }
  return o;
}

ModuleOrder ModuleOrder::schreyer(const std::vector<Lead>& leads) const {
  ModuleOrder o;
  o.n_ = n_;
  o.kind_ = kind_;
  o.ranking_ = ranking_;
  o.level_ = level_ + 1;
  o.comps_.reserve(leads.size());
  for (const auto& lead : leads) {
    if (lead.component >= comps_.size()) throw InvariantViolation("schreyer: lead component out of range");
    const Component& parent = comps_[lead.component];
    Component c;
    c.offset = parent.offset;
    auto e = lead.monomial.exponents();
    for (std::size_t k = 0; k < c.offset.size(); ++k) c.offset[k] += e[k];
    c.base = parent.base;
    c.chain = parent.chain;
    c.chain.push_back(lead.component);
    o.comps_.push_back(std::move(c));
  }
  return o;
}

int ModuleOrder::compare_shifted(const WeylMonomial& m1, const std::vector<int>& o1,
                                 const WeylMonomial& m2, const std::vector<int>& o2) const {
  auto e1 = m1.exponents();
  auto e2 = m2.exponents();
  const std::size_t len = e1.size();
  if (kind_ == MonomialOrderKind::OrderFiltration) {
    int b1 = 0, b2 = 0;
    for (std::size_t k = n_; k < len; ++k) {
      b1 += e1[k] + o1[k];
      b2 += e2[k] + o2[k];
    }
    if (b1 != b2) return b1 > b2 ? 1 : -1;
  }
  int t1 = 0, t2 = 0;
  for (std::size_t k = 0; k < len; ++k) {
    t1 += e1[k] + o1[k];
    t2 += e2[k] + o2[k];
  }
  if (t1 != t2) return t1 > t2 ? 1 : -1;
  for (std::size_t k = len; k-- > 0;) {
    int v1 = e1[k] + o1[k], v2 = e2[k] + o2[k];
    if (v1 != v2) return v1 < v2 ? 1 : -1;
  }
  return 0;
}

int ModuleOrder::compare_monomials(const WeylMonomial& m1, const WeylMonomial& m2) const {
  static thread_local std::vector<int> zero;
  zero.assign(2 * n_, 0);
  return compare_shifted(m1, zero, m2, zero);
}

int ModuleOrder::compare(std::size_t c1, const WeylMonomial& m1, std::size_t c2,
                         const WeylMonomial& m2) const {
  const Component& k1 = comps_[c1];
  const Component& k2 = comps_[c2];
  auto by_index = [](std::size_t i, std::size_t j) { return i == j ? 0 : (i < j ? 1 : -1); };
  int r;
  if (ranking_ == ModuleRanking::PositionOverTerm) {
    r = by_index(k1.base, k2.base);
    if (r == 0) r = compare_shifted(m1, k1.offset, m2, k2.offset);
  } else {
    r = compare_shifted(m1, k1.offset, m2, k2.offset);
    if (r == 0) r = by_index(k1.base, k2.base);
  }
  if (r != 0) return r;
  for (std::size_t k = 0; k < k1.chain.size() && k < k2.chain.size(); ++k) {
    r = by_index(k1.chain[k], k2.chain[k]);
    if (r != 0) return r;
  }
  return by_index(c1, c2);
}

int ModuleOrder::sugar(std::size_t c, const WeylMonomial& m) const {
  int s = m.total_degree();
  for (int v : comps_[c].offset) s += v;
  return s;
}

std::string ModuleOrder::describe() const {
  std::string s = kind_ == MonomialOrderKind::Degrevlex ? "degrevlex" : "order-filtration";
  s += ranking_ == ModuleRanking::PositionOverTerm ? ", position-over-term" : ", term-over-position";
  if (level_ > 0) s += ", schreyer level " + std::to_string(level_);
  return s;
}

}  // namespace weylcoh
