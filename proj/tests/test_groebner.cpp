#include <doctest.h>

#include "support.hpp"
#include "weylcoh/errors.hpp"
#include "weylcoh/groebner.hpp"

using namespace weylcoh;
using test::row;
using test::W;

namespace {

bool contains_one(const std::vector<FreeElement>& gb) {
  for (const auto& g : gb)
    if (g[0] == W("1")) return true;
  return false;
}

}  // namespace

TEST_CASE("basis of the unit ideal") {
  ModuleOrder o = ModuleOrder::base(1, 1);
  std::vector<FreeElement> gens{row("d1"), row("x1*d1 + 1")};
  auto gb = left_groebner(gens, o);
  CHECK(contains_one(gb));
  CHECK(gb.size() == 1);
}

TEST_CASE("small bases") {
  ModuleOrder o1 = ModuleOrder::base(1, 1);
  std::vector<FreeElement> x{row("x1")};
  CHECK(left_groebner(x, o1) == x);

  ModuleOrder o2 = ModuleOrder::base(2, 1);
  std::vector<FreeElement> dd{row("d1", 2), row("d2", 2)};
  auto gb = left_groebner(dd, o2);
  REQUIRE(gb.size() == 2);
  CHECK(is_groebner_basis(gb, o2));
  CHECK(left_groebner(std::vector<FreeElement>{}, o2).empty());
}

TEST_CASE("reduced basis does not depend on redundant generators") {
  ModuleOrder o = ModuleOrder::base(2, 1);
  std::vector<FreeElement> a{row("d1", 2), row("d2", 2)};
  std::vector<FreeElement> b{row("d1", 2), row("d2", 2), row("x1*d2 + d1", 2), row("d1*d2", 2)};
  CHECK(left_groebner(a, o) == left_groebner(b, o));
}

TEST_CASE("normal forms") {
  ModuleOrder o = ModuleOrder::base(1, 1);
  std::vector<FreeElement> gb{row("d1")};
  CHECK(normal_form(row("x1*d1 + 1"), gb, o) == row("1"));
  CHECK(normal_form(row("d1"), gb, o).is_zero());
  Division div = divide(row("x1^2*d1^2 + x1"), gb, o);
  CHECK(div.remainder == row("x1"));
  CHECK(div.quotients[0] * gb[0][0] + div.remainder[0] == W("x1^2*d1^2 + x1"));
}

TEST_CASE("syzygies") {
  ModuleOrder o2 = ModuleOrder::base(2, 1);
  std::vector<FreeElement> dd{row("d1", 2), row("d2", 2)};
  auto gb = left_groebner(dd, o2);
  auto syz = syzygies(gb, o2);
  REQUIRE(syz.size() == 1);
  FreeElement image = syz[0][0] * gb[0] + syz[0][1] * gb[1];
  CHECK(image.is_zero());
  // (d2, -d1) up to the basis order.
  CHECK((syz[0] == row("[d2, -d1]", 2) || syz[0] == row("[-d2, d1]", 2) || syz[0] == row("[d1, -d2]", 2) ||
         syz[0] == row("[-d1, d2]", 2)));

  ModuleOrder o1 = ModuleOrder::base(1, 1);
  std::vector<FreeElement> x{row("x1")};
  CHECK(syzygies(x, o1).empty());
}

TEST_CASE("module orders") {
  ModuleOrder pot = ModuleOrder::base(1, 2);
  ModuleOrder top = ModuleOrder::base(1, 2, MonomialOrderKind::Degrevlex, ModuleRanking::TermOverPosition);
  WeylMonomial one(1), d = WeylMonomial::d_power(1, 0);
  CHECK(pot.compare(0, one, 1, d) > 0);
  CHECK(top.compare(0, one, 1, d) < 0);
  ModuleOrder filt = ModuleOrder::base(1, 1, MonomialOrderKind::OrderFiltration);
  WeylMonomial x3 = WeylMonomial::x_power(1, 0, 3);
  CHECK(filt.compare(0, d, 0, x3) > 0);
  CHECK(pot.compare(0, d, 0, x3) < 0);
}

TEST_CASE("rank mismatch is rejected") {
  ModuleOrder o = ModuleOrder::base(1, 2);
  std::vector<FreeElement> gens{row("x1")};
  CHECK_THROWS_AS(left_groebner(gens, o), InputError);
}
