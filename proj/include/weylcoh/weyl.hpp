#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "weylcoh/rational.hpp"

namespace weylcoh {

/// Normally ordered monomial x^a d^b of the Weyl algebra D_n.
///
/// Exponents are stored as one vector of length 2n, x-exponents first. The
/// same layout doubles as the exponent vector of x^a xi^b in gr D, and of a
/// plain polynomial x^a when b = 0.
class WeylMonomial {
 public:
  WeylMonomial() = default;
  explicit WeylMonomial(std::size_t n) : exps_(2 * n, 0) {}
  WeylMonomial(const std::vector<int>& a, const std::vector<int>& b);

  static WeylMonomial x_power(std::size_t n, std::size_t i, int e = 1);
  static WeylMonomial d_power(std::size_t n, std::size_t i, int e = 1);

  std::size_t n() const { return exps_.size() / 2; }
  int a(std::size_t i) const { return exps_[i]; }
  int b(std::size_t i) const { return exps_[n() + i]; }
  int& a(std::size_t i) { return exps_[i]; }
  int& b(std::size_t i) { return exps_[n() + i]; }
  std::span<const int> exponents() const { return exps_; }
  std::span<int> exponents() { return exps_; }

  int x_order() const;
  /// Operator order |b|.
  int d_order() const;
  int total_degree() const { return x_order() + d_order(); }
  /// Grading degree |a| - |b|.
  int degree() const { return x_order() - d_order(); }
  bool is_one() const;

  /// Commutative divisibility of exponent vectors.
  bool divides(const WeylMonomial& other) const;
  WeylMonomial operator*(const WeylMonomial& other) const;  // exponent sum
  WeylMonomial operator/(const WeylMonomial& other) const;  // exponent difference, requires divides
  friend WeylMonomial lcm(const WeylMonomial& u, const WeylMonomial& v);

  auto operator<=>(const WeylMonomial&) const = default;

 private:
  std::vector<int> exps_;
};

/// Display order: total degree descending, then lexicographic descending on
/// the concatenated (a, b). Cosmetic only.
struct DisplayOrder {
  bool operator()(const WeylMonomial& u, const WeylMonomial& v) const;
};

using TermMap = std::map<WeylMonomial, Rational, DisplayOrder>;

/// Exact element of D_n over Q in canonical normally ordered form.
class WeylElement {
 public:
  using Term = std::pair<WeylMonomial, Rational>;

  explicit WeylElement(std::size_t n = 0) : n_(n) {}
  static WeylElement constant(std::size_t n, const Rational& c);
  static WeylElement monomial(const WeylMonomial& m, const Rational& c = 1);
  static WeylElement x(std::size_t n, std::size_t i);
  static WeylElement d(std::size_t n, std::size_t i);
  static WeylElement from_terms(std::size_t n, TermMap terms);

  std::size_t n() const { return n_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  /// Coefficient of m, zero when absent.
  Rational coefficient(const WeylMonomial& m) const;
  bool is_polynomial() const;

  WeylElement operator-() const;
  WeylElement& operator+=(const WeylElement& other);
  WeylElement& operator-=(const WeylElement& other);
  WeylElement& operator*=(const Rational& c);
  friend WeylElement operator+(WeylElement f, const WeylElement& g) { return f += g; }
  friend WeylElement operator-(WeylElement f, const WeylElement& g) { return f -= g; }
  friend WeylElement operator*(WeylElement f, const Rational& c) { return f *= c; }
  friend WeylElement operator*(const Rational& c, WeylElement f) { return f *= c; }
  friend WeylElement operator*(const WeylElement& f, const WeylElement& g);

  bool operator==(const WeylElement& other) const;

 private:
  std::size_t n_;
  std::vector<Term> terms_;
};

/// Adds c * (x^a d^b)(x^c d^d) to out, normally ordered.
void accumulate_product(const WeylMonomial& left, const WeylMonomial& right, const Rational& c,
                        TermMap& out);

/// Ring product in D_n. Throws InputError on mismatched n.
WeylElement multiply(const WeylElement& f, const WeylElement& g);

/// Standard transposition: f d^I -> (-1)^{|I|} d^I f, extended linearly and
/// renormalized.
WeylElement transpose(const WeylElement& f);

/// Element of R = Q[x_1..x_n], stored as a WeylElement without d's.
class Polynomial {
 public:
  explicit Polynomial(std::size_t n = 0) : element_(n) {}
  /// Throws InputError if f contains a d.
  explicit Polynomial(WeylElement f);
  static Polynomial monomial(std::span<const int> a, const Rational& c = 1);

  std::size_t n() const { return element_.n(); }
  const WeylElement& element() const { return element_; }
  bool is_zero() const { return element_.is_zero(); }
  bool operator==(const Polynomial& other) const = default;

 private:
  WeylElement element_;
};

/// Differential-operator action of f on p: x_i multiplies, d_i differentiates.
Polynomial apply(const WeylElement& f, const Polynomial& p);

/// Adds scale * f(x^c) to out, keyed by the x-exponent vector.
void accumulate_action(const WeylElement& f, std::span<const int> c, const Rational& scale,
                       std::map<std::vector<int>, Rational>& out);

/// Result of a grading query. The zero element is homogeneous of every degree.
struct HomogeneousDegree {
  enum class Kind { AnyDegree, Degree, NotHomogeneous };
  Kind kind = Kind::AnyDegree;
  int value = 0;

  bool homogeneous() const { return kind != Kind::NotHomogeneous; }
  bool operator==(const HomogeneousDegree&) const = default;
  static HomogeneousDegree any() { return {Kind::AnyDegree, 0}; }
  static HomogeneousDegree of(int d) { return {Kind::Degree, d}; }
  static HomogeneousDegree mixed() { return {Kind::NotHomogeneous, 0}; }
};

HomogeneousDegree homogeneous_degree(const WeylElement& f);

/// Commutative polynomial in x_1..x_n, xi_1..xi_n (the ring gr D).
class SymbolPolynomial {
 public:
  explicit SymbolPolynomial(std::size_t n = 0) : n_(n) {}
  static SymbolPolynomial from_terms(std::size_t n, TermMap terms);

  std::size_t n() const { return n_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  SymbolPolynomial& operator+=(const SymbolPolynomial& other);
  friend SymbolPolynomial operator+(SymbolPolynomial f, const SymbolPolynomial& g) { return f += g; }
  friend SymbolPolynomial operator*(const SymbolPolynomial& f, const SymbolPolynomial& g);
  SymbolPolynomial operator-() const;
  bool operator==(const SymbolPolynomial& other) const = default;

 private:
  std::size_t n_;
  TermMap terms_;
};

/// Principal symbol for the order filtration: the terms of maximal |b| with
/// d^b replaced by xi^b. Throws InputError for f = 0.
SymbolPolynomial order_symbol(const WeylElement& f);

}  // namespace weylcoh
