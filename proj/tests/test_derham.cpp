#include <doctest.h>

#include "support.hpp"
#include "weylcoh/derham.hpp"
#include "weylcoh/errors.hpp"
#include "weylcoh/rational.hpp"

using namespace weylcoh;

namespace {

GradedResolution resolve(const PresentedModule& m) { return graded_free_resolution(m, m.n + 1); }

}  // namespace

TEST_CASE("tor complex entries are transposes") {
  auto tor = build_tor_complex(resolve(test::module(1, {0}, {"x1"})));
  REQUIRE(tor.length() == 1);
  CHECK(tor.T(1)[0][0] == test::W("x1"));

  auto r = build_tor_complex(resolve(test::polynomial_ring(1)));
  CHECK(r.T(1)[0][0] == test::W("-d1"));

  auto free = build_tor_complex(resolve(test::module(1, {0}, {})));
  CHECK(free.length() == 0);
  CHECK(free.shifts.size() == 1);
}

TEST_CASE("strand bases follow the shift convention") {
  auto tor = build_tor_complex(resolve(test::module(1, {0}, {"x1"})));
  StrandComplex s = strand(tor, 0);
  CHECK(s.dimension(0) == 1);
  CHECK(s.dimension(1) == 0);  // R(-1)_0 = R_{-1}
  StrandComplex low = strand(tor, -7);
  CHECK(low.dimension(0) == 0);
  CHECK(low.dimension(1) == 0);
}

TEST_CASE("strand homology") {
  auto dx = build_tor_complex(resolve(test::module(1, {0}, {"x1"})));
  for (int d = -3; d <= 3; ++d) {
    auto h = strand_homology(strand(dx, d));
    CHECK(h[0] == (d == 0 ? 1u : 0u));
    CHECK(h[1] == 0);
  }
  auto r = build_tor_complex(resolve(test::polynomial_ring(1)));
  for (int d = -3; d <= 3; ++d) {
    auto h = strand_homology(strand(r, d));
    CHECK(h[0] == 0);
    CHECK(h[1] == (d == -1 ? 1u : 0u));
  }
  for (std::size_t n = 1; n <= 2; ++n) {
    auto free = build_tor_complex(resolve(test::module(n, {0}, {})));
    for (int d = 0; d <= 5; ++d)
      CHECK(Integer(static_cast<unsigned long>(strand_homology(strand(free, d))[0])) == binomial(d + n - 1, n - 1));
  }
}

TEST_CASE("strand audits") {
  auto tor = build_tor_complex(resolve(test::polynomial_ring(3)));
  for (int d = -4; d <= 4; ++d) {
    auto s = strand(tor, d);
    auto h = strand_homology(s);
    auto a = audit_strand(s, h);
    CHECK(a.composites_zero);
    CHECK(a.euler_identity);
    CHECK(completion_strand_is_identity(tor, d));
  }
}

TEST_CASE("de Rham dimensions") {
  auto r = derham_dims(resolve(test::polynomial_ring(1)), Window{-5, 5});
  CHECK(r.totals == std::vector<std::size_t>{1, 0});
  CHECK(r.at(0, -1) == 1);

  auto dx = derham_dims(resolve(test::module(1, {0}, {"x1"})), Window{-5, 5});
  CHECK(dx.totals == std::vector<std::size_t>{0, 1});
  CHECK(dx.at(1, 0) == 1);

  auto d = derham_dims(resolve(test::module(1, {0}, {})), Window{-5, 5});
  for (int k = 0; k <= 5; ++k) CHECK(d.at(1, k) == 1);
  for (int k = -5; k < 0; ++k) CHECK(d.at(1, k) == 0);
}

TEST_CASE("short resolutions are refused") {
  auto res = graded_free_resolution(test::polynomial_ring(2), 1);
  CHECK_FALSE(res.covers(3));
  CHECK_THROWS_AS(derham_dims(res, Window{-3, 3}), InputError);
  CHECK_THROWS_AS(derham_dims(resolve(test::polynomial_ring(1)), Window{3, 2}), InputError);
}

TEST_CASE("threads do not change the table") {
  auto res = resolve(test::polynomial_ring(2));
  auto a = derham_dims(res, Window{-6, 6}, 1);
  auto b = derham_dims(res, Window{-6, 6}, 4);
  CHECK(a.dims == b.dims);
}

TEST_CASE("completion verdicts") {
  VanishingCertificates holonomic;
  holonomic.holonomic = true;
  holonomic.holonomic_detail = "holonomic";

  auto dx = derham_dims(resolve(test::module(1, {0}, {"x1"})), Window{-5, 5});
  auto v = completion_verdict(dx, 2, holonomic);
  REQUIRE(v.size() == 2);
  for (const auto& k : v) {
    CHECK(k.injective);
    CHECK(k.status == VerdictStatus::IsomorphismCertified);
    CHECK(k.certificate == CertificateKind::Holonomic);
    CHECK(k.heuristic);
  }

  auto d = derham_dims(resolve(test::module(1, {0}, {})), Window{-5, 5});
  VanishingCertificates none;
  none.holonomic = false;
  auto w = completion_verdict(d, 2, none);
  CHECK(w[1].status == VerdictStatus::InjectiveOnly);
  CHECK(w[1].injective);
  CHECK(w[0].status == VerdictStatus::IsomorphismCertified);
  CHECK(w[0].certificate == CertificateKind::ZeroPosition);

  auto zero = derham_dims(resolve(test::module(1, {0}, {"1"})), Window{-5, 5});
  for (const auto& k : completion_verdict(zero, 3, holonomic)) CHECK(k.status == VerdictStatus::IsomorphismCertified);

  CHECK_THROWS_AS(completion_verdict(dx, 0, holonomic), InputError);
  CHECK_THROWS_AS(completion_verdict(dx, 12, holonomic), InputError);
}

TEST_CASE("user bounds") {
  auto dx = derham_dims(resolve(test::module(1, {0}, {"x1"})), Window{-5, 5});
  VanishingCertificates certs;
  certs.user_bounds.push_back({1, 0, 0, "local cohomology is concentrated in one degree"});
  auto v = completion_verdict(dx, 2, certs);
  CHECK(v[1].status == VerdictStatus::IsomorphismCertified);
  CHECK(v[1].certificate == CertificateKind::UserBound);
  CHECK(v[0].status == VerdictStatus::UndeterminedWindow);

  certs.user_bounds = {{1, 2, 3, "wrong"}};
  CHECK(completion_verdict(dx, 2, certs)[1].status == VerdictStatus::UndeterminedWindow);
}
