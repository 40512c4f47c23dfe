#include <doctest.h>

#include <nlohmann/json.hpp>

#include "fracchern/errors.hpp"
#include "fracchern/parse.hpp"
#include "fracchern/towers.hpp"

using namespace fracchern;

namespace {

std::string fixture(const char* name) { return std::string(FRACCHERN_FIXTURES) + "/" + name; }

std::vector<std::pair<int, int>> pairs(int max_n, int min_l = 1) {
  std::vector<std::pair<int, int>> out;
  for (int n = 1; n <= max_n; ++n)
    for (int l = min_l; l <= n; ++l)
      if (n % l == 0) out.emplace_back(n, l);
  return out;
}

// sigma_k(values) by expanding prod (1 + t v) one factor at a time
std::vector<GradedPolynomial> sigmas(const Ring& r, const std::vector<GradedPolynomial>& v) {
  std::vector<GradedPolynomial> e{GradedPolynomial::constant(r, 1)};
  for (const auto& x : v) {
    e.push_back(GradedPolynomial(r));
    for (std::size_t k = e.size() - 1; k >= 1; --k) e[k] += mul(e[k - 1], x);
  }
  return e;
}

}  // namespace

TEST_CASE("phi pullback examples") {
  TowerRegistry reg(2, 2);
  CHECK(render(phi_pullback(reg, 1)) == "c1 - g");
  CHECK(render(phi_pullback(reg, 0)) == "1");
  CHECK(phi_pullback(reg, 2) == reg.parse(Space::BU1xBUn, "c2 - 1/2*g*c1 + 1/4*g^2"));
  CHECK(phi_pullback(4, 2, 1) == TowerRegistry(4, 2).parse(Space::BU1xBUn, "c1 - 2*g"));
  CHECK_THROWS_AS(phi_pullback(reg, 3), PreconditionError);
  CHECK_THROWS_AS(TowerRegistry(3, 2), PreconditionError);
}

TEST_CASE("phi pullback against shifted roots") {
  // c_j -> sigma_j(x), then phi*(c_k^Q) must be sigma_k(x_i - g/l)
  for (auto [n, l] : pairs(5)) {
    TowerRegistry reg(n, l);
    std::vector<Generator> gens{{"g", 2}};
    for (int i = 1; i <= n; ++i) gens.push_back({"x" + std::to_string(i), 2});
    auto R = make_ring(gens, reg.degree_cap());
    auto g = GradedPolynomial::generator(R, "g");
    std::vector<GradedPolynomial> xs, shifted;
    for (int i = 1; i <= n; ++i) {
      xs.push_back(GradedPolynomial::generator(R, i));
      shifted.push_back(xs.back() - scale(g, Rational(1, l)));
    }
    auto e = sigmas(R, xs), f = sigmas(R, shifted);
    std::map<std::string, GradedPolynomial> im{{"g", g}};
    for (int k = 1; k <= n; ++k) im.emplace("c" + std::to_string(k), e[k]);
    auto to_roots = RingMorphism::from_images(reg.ring(Space::BU1xBUn), R, im);
    for (int k = 0; k <= n; ++k) CHECK(to_roots(phi_pullback(reg, k)) == f[k]);
  }
}

TEST_CASE("phi2 pullback") {
  TowerRegistry reg(2, 2);
  CHECK(phi2_pullback(reg, 2) == reg.parse(Space::BUn_l, "c2 - 1/4*cb1^2"));
  CHECK_THROWS_AS(phi2_pullback(reg, 1), PreconditionError);
  TowerRegistry r42(4, 2);
  CHECK(phi2_pullback(r42, 2) == r42.parse(Space::BUn_l, "c2 - 3/2*cb1^2"));
  for (auto [n, l] : pairs(6)) {
    if (n < 2) continue;
    TowerRegistry r(n, l);
    Rational sq(n / l * (n - 1), 2 * l);
    sq.canonicalize();
    CHECK(phi2_pullback(r, 2) == r.parse(Space::BUn_l, "c2") - scale(r.parse(Space::BUn_l, "cb1^2"), sq));
  }
}

TEST_CASE("Bi2l substitution of phi* is the phi2 route") {
  for (auto [n, l] : pairs(6)) {
    TowerRegistry reg(n, l);
    const auto& bi2 = reg.morphism(MorphismName::Bi2l).pullback;
    CHECK(bi2(phi_pullback(reg, 1)).is_zero());
    for (int k = 2; k <= n; ++k) CHECK(bi2(phi_pullback(reg, k)) == phi2_pullback(reg, k));
  }
}

TEST_CASE("generator tables") {
  auto bi2 = builtin_morphism(MorphismName::Bi2l, 4, 2);
  CHECK(bi2.from == Space::BUn_l);
  CHECK(bi2.to == Space::BU1xBUn);
  CHECK(render(bi2.pullback.image("c1")) == "2*cb1");
  CHECK(render(bi2.pullback.image("g")) == "cb1");
  CHECK(render(bi2.pullback.image("c3")) == "c3");
  for (auto [n, l] : pairs(6)) {
    TowerRegistry reg(n, l);
    auto s = std::to_string(n / l);
    const auto& io = reg.morphism(MorphismName::Biota2l).pullback;
    CHECK(io.image("z1") == reg.parse(Space::BLUbar_n_l, (s + "*zb1").c_str()));
    CHECK(render(io.image("h")) == "zb1");
    CHECK(render(io.image("g")) == "g");
    CHECK(render(io.image("c1")) == "c1");
  }
  auto br = builtin_morphism(MorphismName::Br, 3, 1);
  CHECK(render(br.pullback.image("q1")) == "-c2");
  CHECK(render(br.pullback.image("t")) == "c1");
  auto hat = builtin_morphism(MorphismName::BhatLi2l, 6, 3);
  CHECK(render(hat.pullback.image("c1")) == "2*cb1");
  CHECK(render(hat.pullback.image("g")) == "cb1");
  CHECK(render(hat.pullback.image("zb1")) == "zb1");
  auto bi3 = builtin_morphism(MorphismName::Bi3l, 4, 2);
  CHECK(render(bi3.pullback.image("c2")) == "3/2*cb1^2");
  auto io3 = builtin_morphism(MorphismName::Biota3l, 4, 2);
  CHECK(render(io3.pullback.image("z2")) == "-zb1*cb1");
  CHECK(parse_morphism("xi2") == MorphismName::xi2);
  CHECK_THROWS_AS(parse_morphism("psi"), ParseError);
  for (auto m : all_morphisms()) CHECK(parse_morphism(to_string(m)) == m);
}

TEST_CASE("Biota2l then BhatLi2l is the looped L(d_l, rho_s) table") {
  for (auto [n, l] : pairs(6)) {
    TowerRegistry reg(n, l);
    auto composite = reg.morphism(MorphismName::Biota2l).pullback.then(reg.morphism(MorphismName::BhatLi2l).pullback);
    const auto& direct = reg.morphism(MorphismName::BLi2l).pullback;
    for (std::size_t i = 0; i < direct.source()->size(); ++i) CHECK(composite.image(i) == direct.image(i));
  }
}

TEST_CASE("xi2 pullback") {
  TowerRegistry reg(2, 2);
  CHECK(render(xi2_pullback(reg, Xi2Class::c1Q)) == "c1 - g");
  CHECK(xi2_pullback(reg, Xi2Class::z2Q) == reg.parse(Space::BLUbar_n_l, "z2 + 1/2*zb1*c1"));
  for (auto [n, l] : pairs(6)) {
    TowerRegistry r(n, l);
    CHECK(xi2_pullback(r, Xi2Class::c1Q) == xi2_pipeline(r, Xi2Class::c1Q));
    if (n < 2) continue;
    auto want = r.parse(Space::BLUbar_n_l, "z2") + scale(r.parse(Space::BLUbar_n_l, "zb1*c1"), Rational(1, l));
    CHECK(xi2_pipeline(r, Xi2Class::z2Q) == want);
    CHECK(xi2_pullback(r, Xi2Class::z2Q) == want);
  }
}

TEST_CASE("Lphi2 on z2Q, both routes") {
  CHECK(lphi2_z2(TowerRegistry(2, 2)) == TowerRegistry(2, 2).parse(Space::BLUn_l, "z2 + 1/2*zb1*cb1"));
  CHECK(lphi2_z2(TowerRegistry(4, 2)) == TowerRegistry(4, 2).parse(Space::BLUn_l, "z2 + zb1*cb1"));
  for (auto [n, l] : pairs(6)) {
    if (n < 2) continue;
    TowerRegistry r(n, l);
    auto routes = lphi2_z2_routes(r);
    Rational sl(n / l, l);
    sl.canonicalize();
    auto want = r.parse(Space::BLUn_l, "z2") + scale(r.parse(Space::BLUn_l, "zb1*cb1"), sl);
    CHECK(routes.table == want);
    CHECK(routes.via_naturality == want);
    CHECK(routes.via_factorization == want);
    CHECK(routes.agree());
  }
  CHECK_THROWS_AS(lphi2_z2(TowerRegistry(1, 1)), PreconditionError);
}

TEST_CASE("obstruction classes on symbolic descriptors") {
  auto su = symbolic_descriptor(4, 2, SymbolicKind::fracSU);
  auto o = obstruction(Level::fracSU, su);
  CHECK(o.vanishes);
  CHECK(o.compatible == true);

  auto u6 = obstruction(Level::fracU6, su);
  CHECK(u6.upstairs == parse_polynomial(su.ringY, "c2E - 3/2*a^2"));
  CHECK(render(u6.downstairs) == "f2");
  CHECK(!u6.vanishes);
  CHECK(u6.compatible == true);

  auto lsu = obstruction(Level::loopSU, su);
  CHECK(lsu.upstairs == parse_polynomial(su.loop->ringLY, "z2E + af*a"));
  CHECK(lsu.compatible == true);

  for (auto [n, l] : pairs(6, 2)) {
    for (auto kind : {SymbolicKind::generic, SymbolicKind::fracSU, SymbolicKind::fracU6}) {
      auto d = symbolic_descriptor(n, l, kind);
      auto f = obstruction(Level::fracSU, d);
      CHECK(f.vanishes == (kind != SymbolicKind::generic));
      CHECK(f.compatible == true);
      CHECK(obstruction(Level::loopU, d).compatible == true);
      if (kind == SymbolicKind::generic) {
        CHECK_THROWS_AS(obstruction(Level::fracU6, d), PreconditionError);
        CHECK_THROWS_AS(obstruction(Level::loopSU, d), PreconditionError);
        continue;
      }
      CHECK(obstruction(Level::fracU6, d).compatible == true);
      if (n < 2) continue;
      auto ls = obstruction(Level::loopSU, d);
      CHECK(ls.compatible == true);
      CHECK(ls.vanishes == (kind == SymbolicKind::fracU6));
    }
  }
}

TEST_CASE("obstruction preconditions") {
  auto d = symbolic_descriptor(2, 1, SymbolicKind::fracSU);
  CHECK_THROWS_AS(obstruction(Level::fracSU, d), PreconditionError);
  auto e = symbolic_descriptor(2, 2, SymbolicKind::fracSU);
  e.a.reset();
  CHECK_THROWS_WITH_AS(obstruction(Level::fracSU, e), doctest::Contains("missing the class a"), PreconditionError);
  auto f = symbolic_descriptor(2, 2, SymbolicKind::fracSU);
  f.loop.reset();
  CHECK_THROWS_WITH_AS(obstruction(Level::loopU, f), doctest::Contains("loop data"), PreconditionError);
}

TEST_CASE("lift consequences") {
  for (auto [n, l] : pairs(6, 2)) {
    auto su = symbolic_descriptor(n, l, SymbolicKind::fracSU);
    auto checks = lift_consequences(Level::fracSU, su);
    REQUIRE(!checks.empty());
    CHECK(checks[0].identity == "a = (1/s) c1(E)");
    for (const auto& c : checks) CHECK_MESSAGE(c.passed, c.identity);
    CHECK(checks.size() == std::size_t(n));
    for (const auto& c : lift_consequences(Level::loopU, su)) CHECK_MESSAGE(c.passed, c.identity);

    auto u6 = symbolic_descriptor(n, l, SymbolicKind::fracU6);
    for (auto level : {Level::fracSU, Level::fracU6, Level::loopU, Level::loopSU}) {
      if (level == Level::loopSU && n < 2) continue;
      for (const auto& c : lift_consequences(level, u6)) CHECK_MESSAGE(c.passed, c.identity);
    }
    CHECK_THROWS_AS(lift_consequences(Level::fracSU, symbolic_descriptor(n, l, SymbolicKind::generic)),
                    PreconditionError);
    if (n >= 2) CHECK_THROWS_AS(lift_consequences(Level::fracU6, su), PreconditionError);
  }
}

TEST_CASE("a broken descriptor fails its consequence check") {
  auto d = symbolic_descriptor(4, 2, SymbolicKind::fracSU);
  // change pi*(f3) without touching the obstruction
  std::map<std::string, GradedPolynomial> im;
  for (std::size_t i = 0; i < d.ringM->size(); ++i) im.emplace(d.ringM->generator(i).name, d.pi().image(i));
  im.at("f3") += parse_polynomial(d.ringY, "a^3");
  d.pi_star = RingMorphism::from_images(d.ringM, d.ringY, im);
  auto checks = lift_consequences(Level::fracSU, d);
  int failed = 0;
  for (const auto& c : checks) failed += !c.passed;
  CHECK(failed == 1);
}

TEST_CASE("transgression of obstructions") {
  for (auto [n, l] : pairs(6, 2)) {
    auto gen = symbolic_descriptor(n, l, SymbolicKind::generic);
    auto r = transgress_obstruction(TransgressionStep::fracSU_to_loopU, gen);
    CHECK(r.equal());
    CHECK(!r.base.vanishes);
    CHECK(r.nu_upstairs == parse_polynomial(gen.loop->ringLY, ("z1E - " + std::to_string(n / l) + "*af").c_str()));

    auto su = symbolic_descriptor(n, l, SymbolicKind::fracSU);
    CHECK(transgress_obstruction(TransgressionStep::fracSU_to_loopU, su).equal());
    if (n >= 2) {
      auto u = transgress_obstruction(TransgressionStep::fracU6_to_loopSU, su);
      CHECK(u.equal());
      CHECK(!u.loop.upstairs.is_zero());
    }
    auto u6 = symbolic_descriptor(n, l, SymbolicKind::fracU6);
    if (n >= 2) {
      auto z = transgress_obstruction(TransgressionStep::fracU6_to_loopSU, u6);
      CHECK(z.equal());
      CHECK(z.nu_upstairs.is_zero());
      CHECK(z.nu_downstairs.is_zero());
    }
  }
}

TEST_CASE("fixture descriptors") {
  auto su = load_descriptor(fixture("su_simply_connected.json"));
  auto o = obstruction(Level::fracSU, su);
  CHECK(o.vanishes);
  auto u = obstruction(Level::fracU6, su);
  CHECK(render(u.upstairs) == "y4");
  CHECK(render(u.downstairs) == "m4");
  CHECK(u.compatible == true);

  auto torus = load_descriptor(fixture("u6_torus.json"));
  CHECK(obstruction(Level::fracU6, torus).vanishes);
  for (const auto& c : lift_consequences(Level::fracU6, torus)) CHECK_MESSAGE(c.passed, c.identity);

  auto lens = load_descriptor(fixture("loop_lens.json"));
  CHECK(obstruction(Level::loopU, lens).vanishes);
  CHECK(obstruction(Level::loopSU, lens).vanishes);
  for (const auto& c : lift_consequences(Level::loopSU, lens)) CHECK_MESSAGE(c.passed, c.identity);
  CHECK(transgress_obstruction(TransgressionStep::fracU6_to_loopSU, lens).equal());
}

TEST_CASE("counting groups on fixtures") {
  struct Want {
    const char* file;
    const char* h1;
    const char* h3;
    const char* h0L;
    const char* h2L;
  };
  for (auto w : {Want{"su_simply_connected.json", "0", "Z", "Z", "0"},
                 Want{"u6_torus.json", "Z^2", "Z^2", "Z", "Z^3 + Z/2"},
                 Want{"loop_lens.json", "0", "Z", "Z^3", "Z/3"}}) {
    auto d = load_descriptor(fixture(w.file));
    CHECK(count_structures(Level::fracSU, d.hM, &d.hLM).str() == w.h1);
    CHECK(count_structures(Level::fracU6, d.hM, &d.hLM).str() == w.h3);
    CHECK(count_structures(Level::loopU, d.hM, &d.hLM).str() == w.h0L);
    CHECK(count_structures(Level::loopSU, d.hM, &d.hLM).str() == w.h2L);
  }
  std::map<int, AbelianGroupDesc> hM{{1, AbelianGroupDesc(2, {})}};
  CHECK(count_structures(Level::fracSU, hM).str() == "Z^2");
  CHECK(count_structures(Level::fracSU, hM).trivial() == false);
  CHECK_THROWS_AS(count_structures(Level::fracU6, hM), PreconditionError);
  CHECK_THROWS_AS(count_structures(Level::loopU, hM), PreconditionError);
  CHECK_THROWS_AS(AbelianGroupDesc(1, {1}), PreconditionError);
}

TEST_CASE("descriptor JSON errors") {
  using nlohmann::json;
  CHECK_THROWS_AS(descriptor_from_json(json::parse(R"({"n": 2})")), ParseError);
  auto j = json::parse(R"({"n": 2, "l": 2,
    "ringY": {"generators": [{"name": "a", "degree": 2}], "degree_cap": 4},
    "ringM": {"generators": [], "degree_cap": 4},
    "classes": {"a": "a", "c": ["a", "b"]}})");
  CHECK_THROWS_AS(descriptor_from_json(j), ParseError);
  j["classes"]["c"] = json::array({"a^2"});
  CHECK_THROWS_AS(descriptor_from_json(j), PreconditionError);
  j["classes"]["c"] = json::array({"a"});
  j["n"] = 3;
  CHECK_THROWS_AS(descriptor_from_json(j), PreconditionError);
  CHECK_THROWS_AS(load_descriptor(fixture("no_such_file.json")), ParseError);
}

TEST_CASE("level and step names") {
  for (auto lv : {Level::fracSU, Level::fracU6, Level::loopU, Level::loopSU}) CHECK(parse_level(to_string(lv)) == lv);
  CHECK_THROWS_AS(parse_level("fracU"), ParseError);
  CHECK(parse_transgression_step("fracU6->loopSU") == TransgressionStep::fracU6_to_loopSU);
}

TEST_CASE("determinant classes") {
  TowerRegistry reg(4, 2);
  CHECK(render(reg.morphism(MorphismName::Bmu_s).pullback.image("g")) == "c1 - 2*g");
  CHECK(render(reg.morphism(MorphismName::Bepsilon).pullback.image("h")) == "z1");
  // Lphi*(z1Q) is the class of B(theta_{-s} x epsilon)
  CHECK(render(reg.morphism(MorphismName::Lphi).pullback.image("z1Q")) == "z1 - 2*h");
}
