// One PASS/FAIL line per acceptance criterion; nonzero exit on any failure.

#include <cmath>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "weylcoh/cases.hpp"
#include "weylcoh/charvariety.hpp"
#include "weylcoh/cli.hpp"
#include "weylcoh/derham.hpp"
#include "weylcoh/explicit_model.hpp"
#include "weylcoh/expression.hpp"
#include "weylcoh/rational.hpp"
#include "weylcoh/resolution.hpp"

using namespace weylcoh;

namespace {

struct Check {
  std::vector<std::string> problems;
  std::string summary;
  void require(bool ok, const std::string& what) {
    if (!ok) problems.push_back(what);
  }
};

PresentedModule module(std::size_t n, std::vector<int> shifts, const std::vector<std::string>& rels) {
  PresentedModule m;
  m.n = n;
  m.shifts = std::move(shifts);
  for (const auto& r : rels) m.relations.push_back(FreeElement(parse_row(r, n)));
  return m;
}

PresentedModule polynomial_ring(std::size_t n) {
  std::vector<std::string> rels;
  for (std::size_t k = 1; k <= n; ++k) rels.push_back("d" + std::to_string(k));
  return module(n, {0}, rels);
}

const Window kWindow{-10, 10};

// ---- 1. algebra laws

class Sampler {
 public:
  explicit Sampler(unsigned seed) : rng_(seed) {}

  int small(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  WeylMonomial monomial(std::size_t n, int max_exp) {
    WeylMonomial m(n);
    for (auto& e : m.exponents()) e = small(0, max_exp);
    return m;
  }

  Rational coefficient() {
    int num = 0;
    while (num == 0) num = small(-9, 9);
    Rational q(num, small(1, 5));
    q.canonicalize();
    return q;
  }

  WeylElement element(std::size_t n, int terms, int max_exp) {
    WeylElement f(n);
    for (int k = 0; k < terms; ++k) f += WeylElement::monomial(monomial(n, max_exp), coefficient());
    return f;
  }

  Polynomial polynomial(std::size_t n) {
    WeylElement f(n);
    for (int k = small(1, 3); k > 0; --k) {
      WeylMonomial m(n);
      for (std::size_t i = 0; i < n; ++i) m.a(i) = small(0, 4);
      f += WeylElement::monomial(m, coefficient());
    }
    return Polynomial(f);
  }

 private:
  std::mt19937 rng_;
};

HomogeneousDegree sum(HomogeneousDegree a, HomogeneousDegree b) {
  if (a.kind == HomogeneousDegree::Kind::Degree && b.kind == HomogeneousDegree::Kind::Degree)
    return HomogeneousDegree::of(a.value + b.value);
  return HomogeneousDegree::any();
}

Check algebra_laws() {
  Check c;
  Sampler s(20240611u);
  const int kTrials = 10000;
  std::size_t checks = 0;
  auto law = [&](bool ok, const std::string& name, int trial) {
    ++checks;
    if (!ok && c.problems.size() < 10) c.problems.push_back(name + " fails in trial " + std::to_string(trial));
  };
  for (int t = 0; t < kTrials; ++t) {
    const std::size_t n = static_cast<std::size_t>(s.small(1, 3));
    WeylElement f = s.element(n, s.small(1, 3), 2);
    WeylElement g = s.element(n, s.small(1, 3), 2);
    WeylElement h = s.element(n, s.small(1, 2), 2);
    switch (t % 5) {
      case 0:
        law((f * g) * h == f * (g * h), "associativity", t);
        law(f * (g + h) == f * g + f * h, "left distributivity", t);
        law((f + g) * h == f * h + g * h, "right distributivity", t);
        break;
      case 1: {
        const std::size_t i = static_cast<std::size_t>(s.small(0, static_cast<int>(n) - 1));
        const std::size_t j = static_cast<std::size_t>(s.small(0, static_cast<int>(n) - 1));
        WeylElement comm = WeylElement::d(n, i) * WeylElement::x(n, j) - WeylElement::x(n, j) * WeylElement::d(n, i);
        law(comm == WeylElement::constant(n, i == j ? 1 : 0), "[d_i, x_j] = delta_ij", t);
        law(WeylElement::constant(n, 1) * f == f && f * WeylElement::constant(n, 1) == f, "unit", t);
        break;
      }
      case 2:
        law(transpose(f * g) == transpose(g) * transpose(f), "tau anti-automorphism", t);
        law(transpose(transpose(f)) == f, "tau involution", t);
        law(transpose(f + g) == transpose(f) + transpose(g), "tau additivity", t);
        break;
      case 3: {
        WeylElement u = WeylElement::monomial(s.monomial(n, 3), s.coefficient());
        WeylElement v = WeylElement::monomial(s.monomial(n, 3), s.coefficient());
        WeylElement uv = u * v;
        law(homogeneous_degree(uv) == sum(homogeneous_degree(u), homogeneous_degree(v)) ||
                (uv.is_zero() && homogeneous_degree(uv) == HomogeneousDegree::any()),
            "degree additivity", t);
        break;
      }
      case 4: {
        Polynomial p = s.polynomial(n);
        law(apply(f * g, p) == apply(f, apply(g, p)), "action compatibility", t);
        law(apply(f + g, p).element() == apply(f, p).element() + apply(g, p).element(), "action additivity", t);
        break;
      }
    }
  }
  c.summary = std::to_string(kTrials) + " trials, " + std::to_string(checks) + " law checks";
  return c;
}

// ---- helpers shared by 2-7

DeRhamReport table_for(const PresentedModule& m, std::size_t threads = 0) {
  return derham_dims(graded_free_resolution(m, m.n + 1), kWindow, threads);
}

std::vector<CompletionVerdict> verdicts_for(const PresentedModule& m, const DeRhamReport& t, std::size_t margin = 3) {
  DimensionVerdict dim = dimension(characteristic_data(m));
  VanishingCertificates certs;
  certs.holonomic = dim.holonomic;
  return completion_verdict(t, margin, certs);
}

// ---- 2. D/Dx

Check laurent_case() {
  Check c;
  PresentedModule m = module(1, {0}, {"x1"});
  DeRhamReport t = table_for(m);
  c.require(t.totals[0] == 0, "H^0 total is " + std::to_string(t.totals[0]));
  c.require(t.totals[1] == 1, "H^1 total is " + std::to_string(t.totals[1]));
  DimensionVerdict dim = dimension(characteristic_data(m));
  c.require(dim.dimension == 1, "d != 1");
  c.require(dim.holonomic, "not holonomic");
  for (const auto& v : verdicts_for(m, t)) {
    c.require(v.status == VerdictStatus::IsomorphismCertified,
              "kappa^" + std::to_string(v.index) + " is " + to_string(v.status));
    c.require(v.certificate == CertificateKind::Holonomic,
              "kappa^" + std::to_string(v.index) + " certified by " + to_string(v.certificate));
  }
  ExplicitGradedModule model = named_model("laurent-quotient", 1, -1, kWindow.lo - 3, kWindow.hi + 3);
  std::size_t cells = 0;
  for (std::size_t i = 0; i <= 1; ++i)
    for (int d = kWindow.lo; d <= kWindow.hi; ++d) {
      const std::size_t oracle = explicit_strand_oracle(model, i, d);
      c.require(oracle == t.at(i, d), "oracle disagrees at i=" + std::to_string(i) + " d=" + std::to_string(d));
      ++cells;
    }
  c.summary = "H^0 = 0, H^1 = 1, d = 1, holonomic, " + std::to_string(cells) + " oracle cells equal";
  return c;
}

// ---- 3. D itself

Check free_case() {
  Check c;
  for (std::size_t n = 1; n <= 2; ++n) {
    PresentedModule m = module(n, {0}, {});
    DeRhamReport t = table_for(m);
    for (std::size_t i = 0; i < n; ++i)
      for (int d = kWindow.lo; d <= kWindow.hi; ++d)
        c.require(t.at(i, d) == 0, "n=" + std::to_string(n) + " H^" + std::to_string(i) + " nonzero at " +
                                       std::to_string(d));
    for (int d = 0; d <= 10; ++d) {
      const Integer expected = binomial(static_cast<unsigned long>(d + n - 1), n - 1);
      c.require(Integer(static_cast<unsigned long>(t.at(n, d))) == expected,
                "n=" + std::to_string(n) + " H^n strand " + std::to_string(d) + " = " + std::to_string(t.at(n, d)));
    }
    for (const auto& v : verdicts_for(m, t)) {
      const bool certified = v.status == VerdictStatus::IsomorphismCertified;
      c.require(v.index < n ? certified : !certified,
                "n=" + std::to_string(n) + " kappa^" + std::to_string(v.index) + " is " + to_string(v.status));
    }
  }
  c.summary = "n = 1, 2: H^{<n} = 0, H^n strands binomial, top verdict not certified";
  return c;
}

// ---- 4. R and the Koszul resolution

Check polynomial_case() {
  Check c;
  for (std::size_t n = 1; n <= 3; ++n) {
    const std::string tag = "n=" + std::to_string(n) + " ";
    DeRhamReport t = table_for(polynomial_ring(n));
    c.require(t.totals[0] == 1, tag + "H^0 total " + std::to_string(t.totals[0]));
    // de Rham degree 0 is Tor strand -n
    c.require(t.at(0, -static_cast<int>(n)) == 1, tag + "H^0 not in degree 0");
    for (std::size_t i = 1; i <= n; ++i) c.require(t.totals[i] == 0, tag + "H^" + std::to_string(i) + " nonzero");
    DeRhamReport k = derham_dims(koszul_resolution(n), kWindow, 0);
    c.require(k.dims == t.dims, tag + "Koszul and syzygy tables differ");
  }
  c.summary = "n = 1, 2, 3: H^0 = 1 in degree 0, H^{>0} = 0, Koszul table identical";
  return c;
}

// ---- 5, 7: the bundled suite

struct SuiteData {
  std::vector<ExampleCase> cases;
  std::vector<GradedResolution> resolutions;
};

Check completion_identity(const SuiteData& s) {
  Check c;
  std::size_t strands = 0;
  for (std::size_t k = 0; k < s.cases.size(); ++k) {
    TorComplex tor = build_tor_complex(s.resolutions[k]);
    TorComplex hat = completed_view(tor);
    c.require(hat.differentials == tor.differentials, s.cases[k].name + ": completed side has its own matrices");
    for (int d = s.cases[k].window.lo; d <= s.cases[k].window.hi; ++d) {
      c.require(completion_strand_is_identity(tor, d), s.cases[k].name + ": strand " + std::to_string(d));
      ++strands;
    }
  }
  c.summary = std::to_string(s.cases.size()) + " cases, " + std::to_string(strands) + " strands";
  return c;
}

Check exactness(const SuiteData& s) {
  Check c;
  std::size_t strands = 0;
  std::size_t composites = 0;
  for (std::size_t k = 0; k < s.cases.size(); ++k) {
    const auto& res = s.resolutions[k];
    try {
      verify_resolution(res);
      composites += res.maps.empty() ? 0 : res.maps.size() - 1;
    } catch (const std::exception& e) {
      c.require(false, s.cases[k].name + ": " + e.what());
    }
    TorComplex tor = build_tor_complex(res);
    for (int d = s.cases[k].window.lo; d <= s.cases[k].window.hi; ++d) {
      StrandComplex sc = strand(tor, d);
      StrandAudit a = audit_strand(sc, strand_homology(sc));
      c.require(a.composites_zero, s.cases[k].name + ": composite nonzero at " + std::to_string(d));
      c.require(a.euler_identity, s.cases[k].name + ": Euler identity fails at " + std::to_string(d));
      ++strands;
    }
  }
  c.summary = std::to_string(composites) + " resolution composites, " + std::to_string(strands) + " strands";
  return c;
}

// ---- 6. dimension engine

Check dimension_engine(const SuiteData& s) {
  Check c;
  auto expect = [&](const PresentedModule& m, int d, const std::string& name) {
    DimensionVerdict v = dimension(characteristic_data(m));
    c.require(v.dimension == d, name + ": d = " + (v.dimension ? std::to_string(*v.dimension) : "none"));
  };
  for (std::size_t n = 1; n <= 3; ++n) {
    expect(polynomial_ring(n), static_cast<int>(n), "R n=" + std::to_string(n));
    expect(module(n, {0}, {}), static_cast<int>(2 * n), "D n=" + std::to_string(n));
  }
  expect(module(1, {0}, {"x1"}), 1, "D/Dx");
  for (const char* lambda : {"0", "1", "-2", "1/2", "7/3"})
    expect(module(1, {0}, {std::string("x1*d1 - ") + lambda}), 1, std::string("Euler lambda=") + lambda);

  std::size_t slopes = 0;
  for (const auto& ec : s.cases) {
    DimensionVerdict v;
    try {
      v = dimension(characteristic_data(ec.module));
    } catch (const std::exception& e) {
      c.require(false, ec.name + ": " + e.what());
      continue;
    }
    if (v.zero_module) continue;
    c.require(v.dimension && *v.dimension >= static_cast<int>(ec.module.n), ec.name + ": Bernstein");
    HilbertSamples h = dimension_oracle(ec.module, 12);
    auto slope = growth_slope(h);
    c.require(!h.partial && h.dims.size() == 13, ec.name + ": growth samples stop early");
    c.require(slope && v.dimension && std::fabs(*slope - *v.dimension) <= 0.5,
              ec.name + ": slope " + (slope ? std::to_string(*slope) : "none"));
    ++slopes;
  }
  c.summary = "named dimensions exact, Bernstein and slope checked on " + std::to_string(slopes) + " cases";
  return c;
}

// ---- 8. determinism

Check determinism() {
  Check c;
  auto once = [](const char* threads) {
    std::ostringstream out, err;
    const char* argv[] = {"weylcoh", "run-examples", "--threads", threads};
    int code = run_cli(4, argv, out, err);
    return std::make_pair(code, out.str());
  };
  auto a = once("1");
  auto b = once("1");
  auto p = once("4");
  c.require(a.first == 0, "run-examples exit code " + std::to_string(a.first));
  c.require(a.second == b.second, "two sequential runs differ");
  c.require(a.second == p.second, "parallel run differs from sequential");
  c.require(!a.second.empty(), "empty report");
  c.summary = std::to_string(a.second.size()) + " bytes, identical across 3 runs";
  return c;
}

}  // namespace

int main() {
  int failed = 0;
  auto report = [&](int id, const std::string& title, const std::function<Check()>& fn) {
    Check c;
    try {
      c = fn();
    } catch (const std::exception& e) {
      c.problems.push_back(std::string("exception: ") + e.what());
    }
    const bool ok = c.problems.empty();
    if (!ok) ++failed;
    std::cout << (ok ? "PASS" : "FAIL") << " " << id << " " << title;
    if (!c.summary.empty()) std::cout << " (" << c.summary << ")";
    std::cout << "\n";
    for (const auto& p : c.problems) std::cout << "     " << p << "\n";
    std::cout.flush();
  };

  report(1, "algebra laws", algebra_laws);
  report(2, "D/Dx cohomology, dimension, verdicts and model oracle", laurent_case);
  report(3, "D in one and two variables", free_case);
  report(4, "polynomial ring and Koszul resolution", polynomial_case);

  SuiteData suite;
  try {
    suite.cases = builtin_cases();
    for (const auto& ec : suite.cases) suite.resolutions.push_back(graded_free_resolution(ec.module, ec.module.n + 1));
  } catch (const std::exception& e) {
    std::cout << "suite setup failed: " << e.what() << "\n";
    return 1;
  }
  report(5, "completion strands are the identity", [&] { return completion_identity(suite); });
  report(6, "dimension engine", [&] { return dimension_engine(suite); });
  report(7, "exactness certificates", [&] { return exactness(suite); });
  report(8, "run-examples determinism", determinism);

  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << "\n";
  return failed == 0 ? 0 : 1;
}
