#include "weylcoh/weyl.hpp"

#include <algorithm>
#include <numeric>

#include "weylcoh/errors.hpp"

namespace weylcoh {

Integer factorial(unsigned long k) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), k);
  return r;
}

Integer binomial(unsigned long n, unsigned long k) {
  if (k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

// ---------------------------------------------------------------- monomials

WeylMonomial::WeylMonomial(const std::vector<int>& a, const std::vector<int>& b) {
  if (a.size() != b.size()) throw InputError("monomial: a and b must have the same length");
  exps_ = a;
  exps_.insert(exps_.end(), b.begin(), b.end());
}

WeylMonomial WeylMonomial::x_power(std::size_t n, std::size_t i, int e) {
  WeylMonomial m(n);
  m.a(i) = e;
  return m;
}

WeylMonomial WeylMonomial::d_power(std::size_t n, std::size_t i, int e) {
  WeylMonomial m(n);
  m.b(i) = e;
  return m;
}

int WeylMonomial::x_order() const {
  return std::accumulate(exps_.begin(), exps_.begin() + static_cast<long>(n()), 0);
}

int WeylMonomial::d_order() const {
  return std::accumulate(exps_.begin() + static_cast<long>(n()), exps_.end(), 0);
}

bool WeylMonomial::is_one() const {
  return std::all_of(exps_.begin(), exps_.end(), [](int e) { return e == 0; });
}

bool WeylMonomial::divides(const WeylMonomial& other) const {
  for (std::size_t k = 0; k < exps_.size(); ++k)
    if (exps_[k] > other.exps_[k]) return false;
  return true;
}

WeylMonomial WeylMonomial::operator*(const WeylMonomial& other) const {
  WeylMonomial r = *this;
  for (std::size_t k = 0; k < exps_.size(); ++k) r.exps_[k] += other.exps_[k];
  return r;
}

WeylMonomial WeylMonomial::operator/(const WeylMonomial& other) const {
  WeylMonomial r = *this;
  for (std::size_t k = 0; k < exps_.size(); ++k) r.exps_[k] -= other.exps_[k];
  return r;
}

WeylMonomial lcm(const WeylMonomial& u, const WeylMonomial& v) {
  WeylMonomial r = u;
  for (std::size_t k = 0; k < r.exps_.size(); ++k) r.exps_[k] = std::max(u.exps_[k], v.exps_[k]);
  return r;
}

bool DisplayOrder::operator()(const WeylMonomial& u, const WeylMonomial& v) const {
  int du = u.total_degree(), dv = v.total_degree();
  if (du != dv) return du > dv;
  auto eu = u.exponents(), ev = v.exponents();
  return std::lexicographical_compare(ev.begin(), ev.end(), eu.begin(), eu.end());
}

// ----------------------------------------------------------------- elements

WeylElement WeylElement::constant(std::size_t n, const Rational& c) {
  return monomial(WeylMonomial(n), c);
}

WeylElement WeylElement::monomial(const WeylMonomial& m, const Rational& c) {
  WeylElement e(m.n());
  if (c != 0) e.terms_.emplace_back(m, c);
  return e;
}

WeylElement WeylElement::x(std::size_t n, std::size_t i) {
  return monomial(WeylMonomial::x_power(n, i));
}

WeylElement WeylElement::d(std::size_t n, std::size_t i) {
  return monomial(WeylMonomial::d_power(n, i));
}

WeylElement WeylElement::from_terms(std::size_t n, TermMap terms) {
  WeylElement e(n);
  e.terms_.reserve(terms.size());
  for (auto& [m, c] : terms)
    if (c != 0) e.terms_.emplace_back(m, std::move(c));
  return e;
}

Rational WeylElement::coefficient(const WeylMonomial& m) const {
  for (const auto& [mono, c] : terms_)
    if (mono == m) return c;
  return 0;
}

bool WeylElement::is_polynomial() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const Term& t) { return t.first.d_order() == 0; });
}

WeylElement WeylElement::operator-() const {
  WeylElement r = *this;
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

namespace {

void check_same_n(std::size_t n1, std::size_t n2) {
  if (n1 != n2)
    throw InputError("Weyl algebra mismatch: D_" + std::to_string(n1) + " vs D_" +
                     std::to_string(n2));
}

// Merge two canonical term lists; sign is +1 or -1 for the second operand.
std::vector<WeylElement::Term> merge_terms(const std::vector<WeylElement::Term>& f,
                                           const std::vector<WeylElement::Term>& g, int sign) {
  std::vector<WeylElement::Term> out;
  out.reserve(f.size() + g.size());
  DisplayOrder before;
  auto i = f.begin();
  auto j = g.begin();
  while (i != f.end() || j != g.end()) {
    if (j == g.end() || (i != f.end() && before(i->first, j->first))) {
      out.push_back(*i++);
    } else if (i == f.end() || before(j->first, i->first)) {
      out.emplace_back(j->first, sign > 0 ? j->second : Rational(-j->second));
      ++j;
    } else {
      Rational c = sign > 0 ? Rational(i->second + j->second) : Rational(i->second - j->second);
      if (c != 0) out.emplace_back(i->first, std::move(c));
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

WeylElement& WeylElement::operator+=(const WeylElement& other) {
  if (other.is_zero()) return *this;
  if (is_zero()) {
    n_ = other.n_;
    terms_ = other.terms_;
    return *this;
  }
  check_same_n(n_, other.n_);
  terms_ = merge_terms(terms_, other.terms_, +1);
  return *this;
}

WeylElement& WeylElement::operator-=(const WeylElement& other) {
  if (other.is_zero()) return *this;
  if (is_zero()) {
    n_ = other.n_;
    *this = -other;
    return *this;
  }
  check_same_n(n_, other.n_);
  terms_ = merge_terms(terms_, other.terms_, -1);
  return *this;
}

WeylElement& WeylElement::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.second *= c;
  return *this;
}

bool WeylElement::operator==(const WeylElement& other) const {
  if (is_zero() && other.is_zero()) return true;
  return n_ == other.n_ && terms_ == other.terms_;
}

// d^b x^c = sum_k prod_i k_i! C(b_i,k_i) C(c_i,k_i) x^{c-k} d^{b-k}, one
// variable at a time.
void accumulate_product(const WeylMonomial& left, const WeylMonomial& right, const Rational& c,
                        TermMap& out) {
  const std::size_t n = left.n();
  WeylMonomial base = left * right;
  // Per-variable expansion options: (k, coefficient).
  std::vector<std::vector<std::pair<int, Integer>>> options(n);
  for (std::size_t i = 0; i < n; ++i) {
    int kmax = std::min(left.b(i), right.a(i));
    for (int k = 0; k <= kmax; ++k)
      options[i].emplace_back(
          k, factorial(static_cast<unsigned long>(k)) *
                 binomial(static_cast<unsigned long>(left.b(i)), static_cast<unsigned long>(k)) *
                 binomial(static_cast<unsigned long>(right.a(i)), static_cast<unsigned long>(k)));
  }
  std::vector<std::size_t> pick(n, 0);
  while (true) {
    WeylMonomial m = base;
    Rational coef = c;
    for (std::size_t i = 0; i < n; ++i) {
      const auto& [k, w] = options[i][pick[i]];
      m.a(i) -= k;
      m.b(i) -= k;
      coef *= w;
    }
    auto [it, inserted] = out.try_emplace(std::move(m), coef);
    if (!inserted) {
      it->second += coef;
      if (it->second == 0) out.erase(it);
    }
    std::size_t i = 0;
    for (; i < n; ++i) {
      if (++pick[i] < options[i].size()) break;
      pick[i] = 0;
    }
    if (i == n) break;
  }
}

WeylElement operator*(const WeylElement& f, const WeylElement& g) {
  if (f.is_zero() || g.is_zero()) return WeylElement(f.is_zero() ? g.n() : f.n());
  check_same_n(f.n(), g.n());
  TermMap acc;
  for (const auto& [mf, cf] : f.terms())
    for (const auto& [mg, cg] : g.terms()) accumulate_product(mf, mg, cf * cg, acc);
  return WeylElement::from_terms(f.n(), std::move(acc));
}

WeylElement multiply(const WeylElement& f, const WeylElement& g) { return f * g; }

WeylElement transpose(const WeylElement& f) {
  const std::size_t n = f.n();
  TermMap acc;
  for (const auto& [m, c] : f.terms()) {
    WeylMonomial dpart(n), xpart(n);
    for (std::size_t i = 0; i < n; ++i) {
      dpart.b(i) = m.b(i);
      xpart.a(i) = m.a(i);
    }
    Rational sign = (m.d_order() % 2 == 0) ? c : Rational(-c);
    accumulate_product(dpart, xpart, sign, acc);
  }
  return WeylElement::from_terms(n, std::move(acc));
}

// --------------------------------------------------------------- polynomials

Polynomial::Polynomial(WeylElement f) : element_(std::move(f)) {
  if (!element_.is_polynomial()) throw InputError("polynomial contains a differential operator");
}

Polynomial Polynomial::monomial(std::span<const int> a, const Rational& c) {
  std::vector<int> av(a.begin(), a.end());
  return Polynomial(WeylElement::monomial(WeylMonomial(av, std::vector<int>(av.size(), 0)), c));
}

void accumulate_action(const WeylElement& f, std::span<const int> c, const Rational& scale,
                       std::map<std::vector<int>, Rational>& out) {
  const std::size_t n = f.n();
  for (const auto& [m, coef] : f.terms()) {
    Integer falling = 1;
    bool vanishes = false;
    std::vector<int> e(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (m.b(i) > c[i]) {
        vanishes = true;
        break;
      }
      for (int t = 0; t < m.b(i); ++t) falling *= c[i] - t;
      e[i] = c[i] - m.b(i) + m.a(i);
    }
    if (vanishes) continue;
    Rational term = coef * scale * falling;
    auto [it, inserted] = out.try_emplace(std::move(e), term);
    if (!inserted) {
      it->second += term;
      if (it->second == 0) out.erase(it);
    }
  }
}

Polynomial apply(const WeylElement& f, const Polynomial& p) {
  if (f.is_zero() || p.is_zero()) return Polynomial(p.is_zero() ? p.n() : f.n());
  check_same_n(f.n(), p.n());
  const std::size_t n = f.n();
  std::map<std::vector<int>, Rational> acc;
  for (const auto& [m, c] : p.element().terms()) {
    std::vector<int> a(m.exponents().begin(), m.exponents().begin() + static_cast<long>(n));
    accumulate_action(f, a, c, acc);
  }
  TermMap terms;
  for (auto& [a, c] : acc) terms.emplace(WeylMonomial(a, std::vector<int>(n, 0)), std::move(c));
  return Polynomial(WeylElement::from_terms(n, std::move(terms)));
}

HomogeneousDegree homogeneous_degree(const WeylElement& f) {
  if (f.is_zero()) return HomogeneousDegree::any();
  int d = f.terms().front().first.degree();
  for (const auto& [m, c] : f.terms())
    if (m.degree() != d) return HomogeneousDegree::mixed();
  return HomogeneousDegree::of(d);
}

// -------------------------------------------------------------------- symbols

SymbolPolynomial SymbolPolynomial::from_terms(std::size_t n, TermMap terms) {
  SymbolPolynomial s(n);
  for (auto& [m, c] : terms)
    if (c != 0) s.terms_.emplace(m, std::move(c));
  return s;
}

SymbolPolynomial& SymbolPolynomial::operator+=(const SymbolPolynomial& other) {
  if (other.is_zero()) return *this;
  if (is_zero()) n_ = other.n_;
  check_same_n(n_, other.n_);
  for (const auto& [m, c] : other.terms_) {
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

SymbolPolynomial operator*(const SymbolPolynomial& f, const SymbolPolynomial& g) {
  if (f.is_zero() || g.is_zero()) return SymbolPolynomial(f.n());
  check_same_n(f.n(), g.n());
  TermMap acc;
  for (const auto& [mf, cf] : f.terms_)
    for (const auto& [mg, cg] : g.terms_) {
      auto [it, inserted] = acc.try_emplace(mf * mg, cf * cg);
      if (!inserted) {
        it->second += cf * cg;
        if (it->second == 0) acc.erase(it);
      }
    }
  return SymbolPolynomial::from_terms(f.n(), std::move(acc));
}

SymbolPolynomial SymbolPolynomial::operator-() const {
  SymbolPolynomial r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

SymbolPolynomial order_symbol(const WeylElement& f) {
  if (f.is_zero()) throw InputError("order symbol of the zero operator is undefined");
  int top = 0;
  for (const auto& [m, c] : f.terms()) top = std::max(top, m.d_order());
  TermMap terms;
  for (const auto& [m, c] : f.terms())
    if (m.d_order() == top) terms.emplace(m, c);
  return SymbolPolynomial::from_terms(f.n(), std::move(terms));
}

}  // namespace weylcoh
