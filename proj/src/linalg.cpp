#include "weylcoh/linalg.hpp"

#include <algorithm>

#include "weylcoh/errors.hpp"

namespace weylcoh {

bool RationalMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Rational& q) { return q == 0; });
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols() != b.rows()) throw InputError("matrix product: dimension mismatch");
  RationalMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        if (b(k, j) != 0) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

std::size_t exact_rank(const RationalMatrix& m) {
  // Integer rows with denominators cleared; zero rows are dropped up front.
  std::vector<std::vector<Integer>> rows;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Integer den = 1;
    bool nonzero = false;
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (m(r, c) == 0) continue;
      nonzero = true;
      mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), m(r, c).get_den_mpz_t());
    }
    if (!nonzero) continue;
    std::vector<Integer> row(m.cols());
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (m(r, c) != 0) row[c] = m(r, c).get_num() * (den / m(r, c).get_den());
    rows.push_back(std::move(row));
  }
  const std::size_t nr = rows.size();
  const std::size_t nc = m.cols();
  std::size_t rank = 0;
  Integer prev = 1;
  for (std::size_t c = 0; c < nc && rank < nr; ++c) {
    std::size_t piv = rank;
    while (piv < nr && rows[piv][c] == 0) ++piv;
    if (piv == nr) continue;
    std::swap(rows[piv], rows[rank]);
    const Integer& p = rows[rank][c];
    for (std::size_t r = rank + 1; r < nr; ++r) {
      const Integer f = rows[r][c];
      for (std::size_t k = c + 1; k < nc; ++k) {
        Integer v = p * rows[r][k] - f * rows[rank][k];
        if (v != 0) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        rows[r][k] = std::move(v);
      }
      rows[r][c] = 0;
    }
    prev = p;
    ++rank;
  }
  return rank;
}

}  // namespace weylcoh
