#include <doctest.h>

#include <random>

#include "fracchern/errors.hpp"
#include "fracchern/parse.hpp"
#include "fracchern/towers.hpp"
#include "fracchern/transgression.hpp"

using namespace fracchern;

namespace {

GradedPolynomial P(const Ring& r, const char* text) { return parse_polynomial(r, text); }

// random polynomial in the even generators of r that have a nu value
GradedPolynomial random_even(const DerivationTable& t, std::mt19937& rng) {
  const auto& r = t.source();
  std::vector<std::size_t> gens;
  for (std::size_t i = 0; i < r->size(); ++i)
    if (!r->generator(i).odd() && t.value(r->generator(i).name)) gens.push_back(i);
  std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1);
  std::uniform_int_distribution<int> coef(-3, 3), len(0, 3), count(1, 3);
  GradedPolynomial p(r);
  for (int t2 = count(rng); t2 > 0; --t2) {
    auto m = GradedPolynomial::constant(r, coef(rng));
    for (int j = len(rng); j > 0; --j) m = mul(m, GradedPolynomial::generator(r, gens[pick(rng)]));
    p += m;
  }
  return p;
}

}  // namespace

TEST_CASE("BUn table and Leibniz examples") {
  auto t = builtin_table(Space::BUn, 3, 1, 12);
  const auto& L = t.target();
  CHECK(free_suspend(t, P(t.source(), "c1^2")) == P(L, "2*z1*c1"));
  CHECK(free_suspend(t, P(t.source(), "1")).is_zero());
  CHECK(free_suspend(t, P(t.source(), "c1*c2")) == P(L, "z1*c2 + z2*c1 + z1*c1^2"));
  CHECK(render(*t.value("c2")) == "z2 + z1*c1");
  CHECK(t.value("c3") == nullptr);
}

TEST_CASE("other builtin tables") {
  auto bu1 = builtin_table(Space::BU1, 2, 2, 12);
  CHECK(render(*bu1.value("g")) == "h");
  auto spin = builtin_table(Space::BSpinc, 2, 1, 12);
  CHECK(*spin.value("q1") == P(spin.target(), "mu - sp1*t"));
  auto bul = builtin_table(Space::BUn_l, 4, 2, 12);
  CHECK(*bul.value("c2") == P(bul.target(), "z2 + 4*zb1*cb1"));
  // n = 1 has no c2
  auto one = builtin_table(Space::BUn, 1, 1, 12);
  CHECK(one.values().size() == 1);
  CHECK_THROWS_AS(builtin_table(Space::BLUn, 2, 1, 12), PreconditionError);
}

TEST_CASE("free_suspend rejects odd and unknown generators") {
  auto spin = builtin_table(Space::BU1xBUn, 4, 1, 12);
  CHECK_THROWS_AS(free_suspend(spin, P(spin.source(), "c3")), PreconditionError);
  auto r = make_ring({{"x", 2}, {"y", 3}}, 8);
  auto lr = make_ring({{"x", 2}, {"y", 3}, {"u", 1}}, 8);
  DerivationTable t(r, lr, {{"x", P(lr, "u")}});
  CHECK_THROWS_AS(free_suspend(t, P(r, "x*y")), PreconditionError);
  CHECK(free_suspend(t, P(r, "x^3")) == P(lr, "3*u*x^2"));
  CHECK_THROWS_AS(DerivationTable(r, lr, {{"y", P(lr, "x")}}), PreconditionError);
  CHECK_THROWS_AS(DerivationTable(r, lr, {{"x", P(lr, "y")}}), PreconditionError);
  CHECK_THROWS_AS(DerivationTable(lr, r, {}), PreconditionError);
}

TEST_CASE("Leibniz rule and operand order on random pairs") {
  std::mt19937 rng(7);
  for (auto sp : {Space::BUn, Space::BU1xBUn, Space::BUn_l, Space::BSpinc}) {
    auto t = builtin_table(sp, 4, 2, 12);
    for (int trial = 0; trial < 40; ++trial) {
      auto p = random_even(t, rng), q = random_even(t, rng);
      auto lhs = free_suspend(t, mul(p, q));
      auto rhs = mul(free_suspend(t, p), t.embed()(q)) + mul(t.embed()(p), free_suspend(t, q));
      CHECK(lhs == rhs);
      CHECK(lhs == free_suspend(t, mul(q, p)));
      CHECK(free_suspend(t, p + q) == free_suspend(t, p) + free_suspend(t, q));
      // every term carries exactly one odd class, so the output has odd degree
      for (const auto& [m, c] : lhs.terms()) CHECK(m.degree % 2 == 1);
    }
  }
}

TEST_CASE("Spin^c naturality square") {
  for (int n = 2; n <= 5; ++n) {
    TowerRegistry reg(n, 1);
    const auto& f = reg.morphism(MorphismName::Br).pullback;
    const auto& Lf = reg.morphism(MorphismName::BLr).pullback;
    auto rep = naturality_check(f, Lf, reg.nu(Space::BSpinc), reg.nu(Space::BUn));
    CHECK(rep.natural());
    CHECK(rep.generators.size() == 2);
    CHECK(rep.skipped.empty());
    auto lhs = free_suspend(reg.nu(Space::BUn), f.image("q1"));
    CHECK(lhs == reg.parse(Space::BLUn, "-z2 - z1*c1"));
    CHECK(lhs == Lf(reg.parse(Space::BLSpinc, "mu - sp1*t")));
  }
}

TEST_CASE("identity morphisms are natural") {
  auto t = builtin_table(Space::BUn, 3, 1, 12);
  auto rep = naturality_check(RingMorphism::identity(t.source()), RingMorphism::identity(t.target()), t, t);
  CHECK(rep.natural());
  CHECK(rep.skipped == std::vector<std::string>{"c3"});
}

TEST_CASE("a wrong table fails the square") {
  TowerRegistry reg(3, 1);
  auto A = reg.ring(Space::BUn);
  auto LA = reg.ring(Space::BLUn);
  DerivationTable bad(A, LA, {{"c1", P(LA, "z1")}, {"c2", P(LA, "z2")}});
  auto rep = naturality_check(reg.morphism(MorphismName::Br).pullback, reg.morphism(MorphismName::BLr).pullback,
                              reg.nu(Space::BSpinc), bad);
  CHECK_FALSE(rep.natural());
}

TEST_CASE("BUn_l table recovered from the B rho_s square") {
  for (int n = 1; n <= 6; ++n)
    for (int l = 1; l <= n; ++l) {
      if (n % l) continue;
      TowerRegistry reg(n, l);
      auto solved = solve_by_naturality(reg.morphism(MorphismName::Brho_s).pullback,
                                        reg.morphism(MorphismName::BLrho_s).pullback, reg.nu(Space::BUn));
      const auto& want = reg.nu(Space::BUn_l);
      REQUIRE(solved.values().size() == want.values().size());
      for (const auto& [name, v] : want.values()) {
        REQUIRE(solved.value(name));
        CHECK(*solved.value(name) == v);
      }
      if (n >= 2) {
        Rational s2(n / l * (n / l));
        CHECK(*solved.value("c2") == reg.parse(Space::BLUn_l, "z2") +
                                         scale(reg.parse(Space::BLUn_l, "zb1*cb1"), s2));
      }
    }
}

TEST_CASE("naturality squares of the builtin morphisms") {
  for (int n = 1; n <= 6; ++n)
    for (int l = 1; l <= n; ++l) {
      if (n % l) continue;
      TowerRegistry reg(n, l);
      CHECK(naturality_check(reg.morphism(MorphismName::Brho_s).pullback, reg.morphism(MorphismName::BLrho_s).pullback,
                             reg.nu(Space::BUn), reg.nu(Space::BUn_l))
                .natural());
      CHECK(naturality_check(reg.morphism(MorphismName::Bi2l).pullback, reg.morphism(MorphismName::BLi2l).pullback,
                             reg.nu(Space::BU1xBUn), reg.nu(Space::BUn_l))
                .natural());
    }
}

TEST_CASE("shape mismatch") {
  TowerRegistry reg(2, 1);
  CHECK_THROWS_AS(naturality_check(reg.morphism(MorphismName::Br).pullback, reg.morphism(MorphismName::BLr).pullback,
                                   reg.nu(Space::BUn), reg.nu(Space::BUn)),
                  PreconditionError);
  CHECK_THROWS_AS(solve_by_naturality(reg.morphism(MorphismName::BLr).pullback,
                                      reg.morphism(MorphismName::BLr).pullback, reg.nu(Space::BSpinc)),
                  PreconditionError);
}
