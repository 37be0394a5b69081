#include "weylcoh/explicit_model.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "weylcoh/errors.hpp"

namespace weylcoh {
namespace {

using Vector = std::map<std::size_t, Rational>;
using Action = std::function<Vector(int degree, std::size_t basis_index)>;

RationalMatrix empty_map(std::size_t cols) { return RationalMatrix(0, cols); }

/// Fills x and d from per-basis action callbacks.
void fill_maps(ExplicitGradedModule& m, const std::vector<Action>& xs, const std::vector<Action>& ds) {
  const std::size_t pieces = m.labels.size();
  m.x.assign(m.n, {});
  m.d.assign(m.n, {});
  for (std::size_t i = 0; i < m.n; ++i) {
    for (std::size_t k = 0; k < pieces; ++k) {
      const int l = m.lo + static_cast<int>(k);
      const std::size_t cols = m.dim(l);
      if (l + 1 <= m.hi) {
        RationalMatrix A(m.dim(l + 1), cols);
        for (std::size_t c = 0; c < cols; ++c)
          for (const auto& [r, v] : xs[i](l, c)) A(r, c) += v;
        m.x[i].push_back(std::move(A));
      } else {
        m.x[i].push_back(empty_map(cols));
      }
      if (l - 1 >= m.lo) {
        RationalMatrix A(m.dim(l - 1), cols);
        for (std::size_t c = 0; c < cols; ++c)
          for (const auto& [r, v] : ds[i](l, c)) A(r, c) += v;
        m.d[i].push_back(std::move(A));
      } else {
        m.d[i].push_back(empty_map(cols));
      }
    }
  }
}

void monomials_of_degree(std::size_t n, int degree, std::vector<std::vector<int>>& out) {
  if (degree < 0) return;
  std::vector<int> e(n, 0);
  auto rec = [&](auto&& self, std::size_t i, int left) -> void {
    if (i + 1 == n) {
      e[i] = left;
      out.push_back(e);
      return;
    }
    for (int k = left; k >= 0; --k) {
      e[i] = k;
      self(self, i + 1, left - k);
    }
  };
  rec(rec, 0, degree);
}

std::string monomial_label(const std::vector<int>& e) {
  std::string s;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += "x" + std::to_string(i + 1);
    if (e[i] > 1) s += "^" + std::to_string(e[i]);
  }
  return s.empty() ? "1" : s;
}

RationalMatrix compose(const RationalMatrix& second, const RationalMatrix& first) { return second * first; }

RationalMatrix identity(std::size_t k) {
  RationalMatrix I(k, k);
  for (std::size_t r = 0; r < k; ++r) I(r, r) = 1;
  return I;
}

RationalMatrix difference(const RationalMatrix& a, const RationalMatrix& b) {
  RationalMatrix out(a.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = a(r, c) - b(r, c);
  return out;
}

}  // namespace

std::size_t ExplicitGradedModule::dim(int l) const {
  if (!covers(l)) return 0;
  return labels[static_cast<std::size_t>(l - lo)].size();
}

ExplicitGradedModule ExplicitGradedModule::shifted(int s) const {
  ExplicitGradedModule out = *this;
  out.lo = lo - s;
  out.hi = hi - s;
  if (s != 0) out.name = name + "(" + std::to_string(s) + ")";
  return out;
}

void ExplicitGradedModule::validate() const {
  auto fail = [&](const std::string& what, int l) {
    throw ModelInvalid("model " + name + ": " + what + " fails on M_" + std::to_string(l));
  };
  auto X = [&](std::size_t i, int l) -> const RationalMatrix& { return x[i][static_cast<std::size_t>(l - lo)]; };
  auto Dm = [&](std::size_t i, int l) -> const RationalMatrix& { return d[i][static_cast<std::size_t>(l - lo)]; };
  for (std::size_t i = 0; i < n; ++i)
    if (x[i].size() != labels.size() || d[i].size() != labels.size())
      throw ModelInvalid("model " + name + ": missing action matrices");

  for (int l = lo; l <= hi; ++l) {
    const std::size_t k = dim(l);
    for (std::size_t i = 0; i < n; ++i) {
      if (l + 1 <= hi && (X(i, l).rows() != dim(l + 1) || X(i, l).cols() != k))
        fail("shape of x" + std::to_string(i + 1), l);
      if (l - 1 >= lo && (Dm(i, l).rows() != dim(l - 1) || Dm(i, l).cols() != k))
        fail("shape of d" + std::to_string(i + 1), l);
    }
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const std::string ij = std::to_string(i + 1) + std::to_string(j + 1);
        if (l - 1 >= lo && l + 1 <= hi) {
          // d_i x_j - x_j d_i = delta_ij
          RationalMatrix c = difference(compose(Dm(i, l + 1), X(j, l)), compose(X(j, l - 1), Dm(i, l)));
          RationalMatrix expected = i == j ? identity(k) : RationalMatrix(k, k);
          if (!(c == expected)) fail("[d" + std::to_string(i + 1) + ", x" + std::to_string(j + 1) + "] = delta", l);
        }
        if (i < j && l + 2 <= hi) {
          if (!(compose(X(i, l + 1), X(j, l)) == compose(X(j, l + 1), X(i, l))))
            fail("[x" + std::to_string(i + 1) + ", x" + std::to_string(j + 1) + "] = 0", l);
        }
        if (i < j && l - 2 >= lo) {
          if (!(compose(Dm(i, l - 1), Dm(j, l)) == compose(Dm(j, l - 1), Dm(i, l))))
            fail("[d" + std::to_string(i + 1) + ", d" + std::to_string(j + 1) + "] = 0 (" + ij + ")", l);
        }
      }
  }
}

bool oracle_covers(const ExplicitGradedModule& model, std::size_t i, int d) {
  if (i > model.n) return false;
  const int e = d + static_cast<int>(model.n) - static_cast<int>(i);
  if (!model.covers(e)) return false;
  if (i < model.n && !model.covers(e - 1)) return false;
  if (i > 0 && !model.covers(e + 1)) return false;
  return true;
}

namespace {

std::vector<std::vector<std::size_t>> subsets_of_size(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  auto rec = [&](auto&& self, std::size_t start) -> void {
    if (cur.size() == k) {
      out.push_back(cur);
      return;
    }
    for (std::size_t s = start; s < n; ++s) {
      cur.push_back(s);
      self(self, s + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

/// Matrix of the de Rham differential Omega^i_d -> Omega^{i+1}_d.
RationalMatrix de_rham_differential(const ExplicitGradedModule& m, std::size_t i, int d) {
  const int e = d + static_cast<int>(m.n) - static_cast<int>(i);  // source piece M_e
  const auto src = subsets_of_size(m.n, i);
  const auto dst = subsets_of_size(m.n, i + 1);
  const std::size_t ks = m.dim(e);
  const std::size_t kt = m.dim(e - 1);
  std::map<std::vector<std::size_t>, std::size_t> dst_index;
  for (std::size_t k = 0; k < dst.size(); ++k) dst_index[dst[k]] = k;

  RationalMatrix A(dst.size() * kt, src.size() * ks);
  if (ks == 0 || kt == 0) return A;
  for (std::size_t J = 0; J < src.size(); ++J) {
    for (std::size_t s = 0; s < m.n; ++s) {
      bool present = false;
      int before = 0;
      for (std::size_t j : src[J]) {
        if (j == s) present = true;
        if (j < s) ++before;
      }
      if (present) continue;
      std::vector<std::size_t> K = src[J];
      K.push_back(s);
      std::sort(K.begin(), K.end());
      const std::size_t target = dst_index.at(K);
      const Rational sign = (before % 2 == 0) ? 1 : -1;
      const RationalMatrix& Ds = m.d[s][static_cast<std::size_t>(e - m.lo)];
      for (std::size_t r = 0; r < kt; ++r)
        for (std::size_t c = 0; c < ks; ++c)
          if (Ds(r, c) != 0) A(target * kt + r, J * ks + c) += sign * Ds(r, c);
    }
  }
  return A;
}

}  // namespace

std::size_t explicit_strand_oracle(const ExplicitGradedModule& model, std::size_t i, int d) {
  if (!oracle_covers(model, i, d))
    throw InputError("model " + model.name + " does not cover the pieces needed for H^" + std::to_string(i) +
                     " in degree " + std::to_string(d));
  const int e = d + static_cast<int>(model.n) - static_cast<int>(i);
  const std::size_t forms = subsets_of_size(model.n, i).size();
  const std::size_t dim = forms * model.dim(e);
  std::size_t out_rank = i < model.n ? exact_rank(de_rham_differential(model, i, d)) : 0;
  std::size_t in_rank = i > 0 ? exact_rank(de_rham_differential(model, i - 1, d)) : 0;
  if (out_rank + in_rank > dim)
    throw InvariantViolation("model " + model.name + ": de Rham differentials do not compose to zero");
  return dim - out_rank - in_rank;
}

ExplicitGradedModule polynomial_model(std::size_t n, int lo, int hi) {
  ExplicitGradedModule m;
  m.name = "polynomial";
  m.n = n;
  m.lo = lo;
  m.hi = hi;
  std::vector<std::vector<std::vector<int>>> bases;
  std::vector<std::map<std::vector<int>, std::size_t>> index;
  for (int l = lo; l <= hi; ++l) {
    std::vector<std::vector<int>> monos;
    monomials_of_degree(n, l, monos);
    std::vector<std::string> labels;
    std::map<std::vector<int>, std::size_t> idx;
    for (std::size_t k = 0; k < monos.size(); ++k) {
      labels.push_back(monomial_label(monos[k]));
      idx[monos[k]] = k;
    }
    m.labels.push_back(std::move(labels));
    bases.push_back(std::move(monos));
    index.push_back(std::move(idx));
  }
  auto piece = [&](int l) { return static_cast<std::size_t>(l - lo); };
  std::vector<Action> xs, ds;
  for (std::size_t i = 0; i < n; ++i) {
    xs.push_back([&, i](int l, std::size_t c) {
      std::vector<int> e = bases[piece(l)][c];
      ++e[i];
      return Vector{{index[piece(l + 1)].at(e), Rational(1)}};
    });
    ds.push_back([&, i](int l, std::size_t c) {
      std::vector<int> e = bases[piece(l)][c];
      if (e[i] == 0) return Vector{};
      Rational coeff = e[i];
      --e[i];
      return Vector{{index[piece(l - 1)].at(e), coeff}};
    });
  }
  fill_maps(m, xs, ds);
  return m;
}

ExplicitGradedModule laurent_quotient_model(int lo, int hi) {
  ExplicitGradedModule m;
  m.name = "laurent-quotient";
  m.n = 1;
  m.lo = lo;
  m.hi = hi;
  for (int l = lo; l <= hi; ++l)
    m.labels.push_back(l <= -1 ? std::vector<std::string>{"x^" + std::to_string(l)} : std::vector<std::string>{});
  Action x = [](int l, std::size_t) { return l + 1 <= -1 ? Vector{{0, Rational(1)}} : Vector{}; };
  Action d = [](int l, std::size_t) { return Vector{{0, Rational(l)}}; };
  fill_maps(m, {x}, {d});
  return m;
}

ExplicitGradedModule euler_model(long lambda, int lo, int hi) {
  ExplicitGradedModule m;
  m.name = "euler-" + std::to_string(lambda);
  m.n = 1;
  m.lo = lo;
  m.hi = hi;
  for (int l = lo; l <= hi; ++l)
    m.labels.push_back({l >= 0 ? "x^" + std::to_string(l) : "d^" + std::to_string(-l)});
  // x * x^a = x^{a+1}; x * d^b = (lambda - b + 1) d^{b-1}
  Action x = [lambda](int l, std::size_t) {
    if (l >= 0) return Vector{{0, Rational(1)}};
    long b = -l;
    return Vector{{0, Rational(lambda - b + 1)}};
  };
  // d * x^a = (lambda + a) x^{a-1}; d * 1 = d; d * d^b = d^{b+1}
  Action d = [lambda](int l, std::size_t) {
    if (l >= 1) return Vector{{0, Rational(lambda + l)}};
    return Vector{{0, Rational(1)}};
  };
  fill_maps(m, {x}, {d});
  return m;
}

ExplicitGradedModule second_derivative_model(int lo, int hi) {
  ExplicitGradedModule m;
  m.name = "second-derivative";
  m.n = 1;
  m.lo = lo;
  m.hi = hi;
  // Piece l: [x^l if l >= 0] then [x^{l+1} d if l >= -1].
  auto has_plain = [](int l) { return l >= 0; };
  auto has_d = [](int l) { return l >= -1; };
  auto plain_index = [](int) { return std::size_t{0}; };
  auto d_index = [&](int l) { return has_plain(l) ? std::size_t{1} : std::size_t{0}; };
  for (int l = lo; l <= hi; ++l) {
    std::vector<std::string> labels;
    if (has_plain(l)) labels.push_back("x^" + std::to_string(l));
    if (has_d(l)) labels.push_back("x^" + std::to_string(l + 1) + "*d");
    m.labels.push_back(std::move(labels));
  }
  auto is_plain = [&](int l, std::size_t c) { return has_plain(l) && c == 0; };
  Action x = [&](int l, std::size_t c) {
    return is_plain(l, c) ? Vector{{plain_index(l + 1), Rational(1)}} : Vector{{d_index(l + 1), Rational(1)}};
  };
  // d * x^l = l x^{l-1} + x^l d; d * (x^{l+1} d) = (l+1) x^l d
  Action d = [&](int l, std::size_t c) {
    Vector v;
    if (is_plain(l, c)) {
      if (l != 0) v[plain_index(l - 1)] += Rational(l);
      v[d_index(l - 1)] += Rational(1);
    } else if (l + 1 != 0) {
      v[d_index(l - 1)] += Rational(l + 1);
    }
    return v;
  };
  fill_maps(m, {x}, {d});
  return m;
}

ExplicitGradedModule named_model(const std::string& name, std::size_t n, int shift, int lo, int hi) {
  // Build the unshifted module on the degrees that land in [lo, hi] after shifting.
  const int ulo = lo + shift;
  const int uhi = hi + shift;
  ExplicitGradedModule m;
  if (name == "polynomial") {
    m = polynomial_model(n, ulo, uhi);
  } else if (n != 1) {
    throw InputError("model " + name + " exists only for n = 1");
  } else if (name == "laurent-quotient") {
    m = laurent_quotient_model(ulo, uhi);
  } else if (name == "euler-0") {
    m = euler_model(0, ulo, uhi);
  } else if (name == "euler-1") {
    m = euler_model(1, ulo, uhi);
  } else if (name == "second-derivative") {
    m = second_derivative_model(ulo, uhi);
  } else {
    throw InputError("unknown model '" + name + "'");
  }
  return m.shifted(shift);
}

}  // namespace weylcoh
