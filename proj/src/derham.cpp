#include "weylcoh/derham.hpp"

#include <algorithm>
#include <map>

#include "weylcoh/errors.hpp"
#include "weylcoh/parallel.hpp"

namespace weylcoh {
namespace {

void monomials_of_degree(std::size_t n, int degree, std::vector<std::vector<int>>& out) {
  if (degree < 0) return;
  std::vector<int> e(n, 0);
  // Lex-descending enumeration.
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

using PolyVector = std::vector<std::map<std::vector<int>, Rational>>;

PolyVector apply_differential(const TorComplex::Differential& T, const PolyVector& in,
                              std::size_t target_rank) {
  PolyVector out(target_rank);
  for (std::size_t r = 0; r < in.size(); ++r)
    for (const auto& [e, c] : in[r])
      for (std::size_t l = 0; l < target_rank; ++l)
        if (!T[r][l].is_zero()) accumulate_action(T[r][l], e, c, out[l]);
  return out;
}

}  // namespace

TorComplex build_tor_complex(const GradedResolution& res) {
  TorComplex tor;
  tor.n = res.n;
  tor.shifts = res.shifts;
  tor.terminated = res.terminated;
  auto diffs = std::make_shared<std::vector<TorComplex::Differential>>();
  for (const auto& B : res.maps) {
    TorComplex::Differential T;
    for (const auto& row : B) {
      std::vector<WeylElement> trow;
      for (const auto& entry : row.components()) trow.push_back(transpose(entry));
      T.push_back(std::move(trow));
    }
    diffs->push_back(std::move(T));
  }
  tor.differentials = diffs;

  // T_j T_{j+1} = 0 on monomial vectors e_r * x^c with |c| <= 2.
  for (std::size_t j = 1; j < tor.length(); ++j) {
    const auto& upper = tor.T(j + 1);
    const auto& lower = tor.T(j);
    std::vector<std::vector<int>> sample;
    for (int deg = 0; deg <= 2; ++deg) monomials_of_degree(tor.n, deg, sample);
    for (std::size_t r = 0; r < upper.size(); ++r)
      for (const auto& c : sample) {
        PolyVector v(upper.size());
        v[r][c] = 1;
        PolyVector mid = apply_differential(upper, v, tor.shifts[j].size());
        PolyVector out = apply_differential(lower, mid, tor.shifts[j - 1].size());
        for (const auto& comp : out)
          if (!comp.empty())
            throw InvariantViolation("tor complex: T_" + std::to_string(j) + " T_" +
                                     std::to_string(j + 1) + " != 0");
      }
  }
  return tor;
}

TorComplex completed_view(const TorComplex& tor) {
  TorComplex hat = tor;
  hat.completed = true;
  return hat;
}

StrandComplex strand(const TorComplex& tor, int d) {
  StrandComplex s;
  s.degree = d;
  const std::size_t positions = tor.shifts.size();
  s.bases.resize(positions);
  std::vector<std::map<std::pair<std::size_t, std::vector<int>>, std::size_t>> index(positions);
  for (std::size_t j = 0; j < positions; ++j) {
    for (std::size_t r = 0; r < tor.shifts[j].size(); ++r) {
      std::vector<std::vector<int>> monos;
      monomials_of_degree(tor.n, d + tor.shifts[j][r], monos);
      for (auto& e : monos) {
        index[j].emplace(std::make_pair(r, e), s.bases[j].size());
        s.bases[j].push_back({r, std::move(e)});
      }
    }
  }
  for (std::size_t j = 1; j < positions; ++j) {
    const auto& T = tor.T(j);
    RationalMatrix M(s.bases[j - 1].size(), s.bases[j].size());
    std::map<std::vector<int>, Rational> image;
    for (std::size_t col = 0; col < s.bases[j].size(); ++col) {
      const auto& src = s.bases[j][col];
      for (std::size_t l = 0; l < T[src.component].size(); ++l) {
        const WeylElement& entry = T[src.component][l];
        if (entry.is_zero()) continue;
        image.clear();
        accumulate_action(entry, src.exponents, 1, image);
        for (const auto& [e, c] : image) {
          auto it = index[j - 1].find({l, e});
          if (it == index[j - 1].end())
            throw InvariantViolation("strand " + std::to_string(d) + ": T_" + std::to_string(j) +
                                     " leaves the strand (non-homogeneous entry)");
          M(it->second, col) += c;
        }
      }
    }
    s.maps.push_back(std::move(M));
  }
  return s;
}

std::vector<std::size_t> strand_homology(const StrandComplex& s) {
  const std::size_t L = s.positions();
  std::vector<std::size_t> ranks(L + 1, 0);  // ranks[j] = rank T_j, T_0 = T_{L} beyond = 0
  for (std::size_t j = 1; j < L; ++j) ranks[j] = exact_rank(s.maps[j - 1]);
  std::vector<std::size_t> h(L);
  for (std::size_t j = 0; j < L; ++j) {
    long long kernel = static_cast<long long>(s.dimension(j)) - static_cast<long long>(ranks[j]);
    long long value = kernel - static_cast<long long>(ranks[j + 1]);
    if (value < 0)
      throw InvariantViolation("strand " + std::to_string(s.degree) + ": negative homology at position " +
                               std::to_string(j) + " (dim " + std::to_string(s.dimension(j)) +
                               ", rank T_j " + std::to_string(ranks[j]) + ", rank T_{j+1} " +
                               std::to_string(ranks[j + 1]) + "); the resolution is broken");
    h[j] = static_cast<std::size_t>(value);
  }
  return h;
}

StrandAudit audit_strand(const StrandComplex& s, const std::vector<std::size_t>& homology) {
  StrandAudit a;
  for (std::size_t j = 1; j + 1 < s.positions(); ++j) {
    // maps[j-1]: C_j -> C_{j-1}; maps[j]: C_{j+1} -> C_j.
    if (s.maps[j - 1].cols() == 0 || s.maps[j].cols() == 0 || s.maps[j - 1].rows() == 0) continue;
    if (!(s.maps[j - 1] * s.maps[j]).is_zero()) a.composites_zero = false;
  }
  long long chi_dims = 0, chi_h = 0;
  for (std::size_t j = 0; j < s.positions(); ++j) {
    long long sign = (j % 2 == 0) ? 1 : -1;
    chi_dims += sign * static_cast<long long>(s.dimension(j));
    chi_h += sign * static_cast<long long>(homology.at(j));
  }
  a.euler_identity = chi_dims == chi_h;
  return a;
}

bool completion_strand_is_identity(const TorComplex& tor, int d) {
  TorComplex hat = completed_view(tor);
  if (hat.differentials != tor.differentials || hat.shifts != tor.shifts) return false;
  StrandComplex plain = strand(tor, d);
  StrandComplex completed = strand(hat, d);
  // The inclusion is the identity on every basis vector of every position;
  // identical matrices then give the identity on homology.
  return plain.bases == completed.bases && plain.maps == completed.maps;
}

std::string to_string(VerdictStatus s) {
  switch (s) {
    case VerdictStatus::IsomorphismCertified: return "isomorphism-certified";
    case VerdictStatus::InjectiveOnly: return "injective-only";
    case VerdictStatus::UndeterminedWindow: return "undetermined-window";
  }
  return "?";
}

std::string to_string(CertificateKind k) {
  switch (k) {
    case CertificateKind::None: return "none";
    case CertificateKind::UserBound: return "(i) user bound";
    case CertificateKind::Holonomic: return "(ii) holonomic + margin";
    case CertificateKind::ZeroPosition: return "zero module in Tor position";
  }
  return "?";
}

DeRhamReport derham_dims(const GradedResolution& res, const Window& window, std::size_t threads) {
  const std::size_t n = res.n;
  if (window.size() == 0) throw InputError("window is empty");
  if (!res.covers(n + 1))
    throw InputError("resolution has length " + std::to_string(res.length()) + " but de Rham needs " +
                     std::to_string(n + 1) + " maps; re-resolve with --length " + std::to_string(n + 1));
  verify_resolution(res);
  TorComplex tor = build_tor_complex(res);

  const std::size_t count = window.size();
  std::vector<std::vector<std::size_t>> strand_h(count);
  parallel_for(count, threads, [&](std::size_t k) {
    int d = window.lo + static_cast<int>(k);
    StrandComplex s = strand(tor, d);
    std::vector<std::size_t> h = strand_homology(s);
    StrandAudit audit = audit_strand(s, h);
    if (!audit.composites_zero)
      throw InvariantViolation("strand " + std::to_string(d) + ": consecutive differentials do not compose to zero");
    if (!audit.euler_identity)
      throw InvariantViolation("strand " + std::to_string(d) + ": Euler characteristic mismatch");
    strand_h[k] = std::move(h);
  });

  DeRhamReport report;
  report.n = n;
  report.window = window;
  report.dims.assign(n + 1, std::vector<std::size_t>(count, 0));
  report.totals.assign(n + 1, 0);
  report.zero_position.assign(n + 1, false);
  report.strands_audited = count;
  for (std::size_t i = 0; i <= n; ++i) {
    std::size_t j = n - i;
    report.zero_position[i] = res.position_is_zero(j);
    for (std::size_t k = 0; k < count; ++k) {
      std::size_t v = j < strand_h[k].size() ? strand_h[k][j] : 0;
      report.dims[i][k] = v;
      report.totals[i] += v;
    }
  }
  return report;
}

std::vector<CompletionVerdict> completion_verdict(const DeRhamReport& report, std::size_t margin,
                                                  const VanishingCertificates& certs) {
  const Window& w = report.window;
  if (margin < 1) throw InputError("stability margin must be at least 1");
  if (margin > w.size())
    throw InputError("stability margin " + std::to_string(margin) + " exceeds the window size " +
                     std::to_string(w.size()));
  const int inner_lo = w.lo + static_cast<int>(margin);
  const int inner_hi = w.hi - static_cast<int>(margin);

  std::vector<CompletionVerdict> out;
  for (std::size_t i = 0; i <= report.n; ++i) {
    CompletionVerdict v;
    v.index = i;
    for (int d = w.lo; d <= w.hi; ++d)
      if (report.at(i, d) != 0) v.support.push_back(d);
    bool edge_clear = std::all_of(v.support.begin(), v.support.end(),
                                  [&](int d) { return d >= inner_lo && d <= inner_hi; });

    const UserBound* bound = nullptr;
    for (const auto& b : certs.user_bounds)
      if (b.index == i) bound = &b;

    if (!edge_clear) {
      v.status = VerdictStatus::InjectiveOnly;
      v.detail = "support reaches the " + std::to_string(margin) + "-strand edge margin of [" +
                 std::to_string(w.lo) + ", " + std::to_string(w.hi) + "]; isomorphism not certifiable";
    } else if (bound != nullptr) {
      bool inside = bound->lo >= w.lo && bound->hi <= w.hi;
      bool consistent = std::all_of(v.support.begin(), v.support.end(),
                                    [&](int d) { return d >= bound->lo && d <= bound->hi; });
      if (inside && consistent) {
        v.status = VerdictStatus::IsomorphismCertified;
        v.certificate = CertificateKind::UserBound;
        v.detail = "declared vanishing outside [" + std::to_string(bound->lo) + ", " +
                   std::to_string(bound->hi) + "] (" + bound->provenance + ")";
      } else {
        v.status = VerdictStatus::UndeterminedWindow;
        v.detail = inside ? "user bound contradicted by the observed support"
                          : "user bound is not contained in the window";
      }
    } else if (certs.holonomic.value_or(false)) {
      v.status = VerdictStatus::IsomorphismCertified;
      v.certificate = CertificateKind::Holonomic;
      v.heuristic = true;
      v.detail = certs.holonomic_detail + "; finite-dimensional de Rham cohomology; " +
                 std::to_string(margin) + " zero strands at each window edge (window placement is heuristic)";
    } else if (report.zero_position[i]) {
      v.status = VerdictStatus::IsomorphismCertified;
      v.certificate = CertificateKind::ZeroPosition;
      v.detail = "F_" + std::to_string(report.n - i) + " = 0, so H^" + std::to_string(i) +
                 " vanishes in every degree";
    } else {
      v.status = VerdictStatus::UndeterminedWindow;
      v.detail = "no vanishing certificate outside the window";
    }
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace weylcoh
