#include "fracchern/towers.hpp"

#include <array>
#include <utility>

#include "fracchern/errors.hpp"
#include "fracchern/parse.hpp"
#include "fracchern/symroots.hpp"

namespace fracchern {

namespace {

constexpr std::array<std::pair<MorphismName, std::string_view>, 19> kMorphismNames{{
    {MorphismName::phi, "phi"},
    {MorphismName::phi2, "phi2"},
    {MorphismName::phi3, "phi3"},
    {MorphismName::xi2, "xi2"},
    {MorphismName::xi3, "xi3"},
    {MorphismName::Lphi, "Lphi"},
    {MorphismName::Lphi2, "Lphi2"},
    {MorphismName::Bi2l, "Bi2l"},
    {MorphismName::Bi3l, "Bi3l"},
    {MorphismName::Biota2l, "Biota2l"},
    {MorphismName::BhatLi2l, "BhatLi2l"},
    {MorphismName::Biota3l, "Biota3l"},
    {MorphismName::BLi2l, "BLi2l"},
    {MorphismName::Br, "Br"},
    {MorphismName::BLr, "BLr"},
    {MorphismName::Brho_s, "Brho_s"},
    {MorphismName::BLrho_s, "BLrho_s"},
    {MorphismName::Bmu_s, "Bmu_s"},
    {MorphismName::Bepsilon, "Bepsilon"},
}};

constexpr std::array<std::pair<Level, std::string_view>, 4> kLevelNames{{
    {Level::fracSU, "fracSU"},
    {Level::fracU6, "fracU6"},
    {Level::loopU, "loopU"},
    {Level::loopSU, "loopSU"},
}};

std::string c(int k, const char* suffix = "") { return "c" + std::to_string(k) + suffix; }

void require_higher(const BundleDescriptor& d) {
  d.validate();
  if (d.l <= 1) throw PreconditionError("higher fractional structures need l > 1 (got l = " + std::to_string(d.l) + ")");
}

}  // namespace

const std::vector<MorphismName>& all_morphisms() {
  static const std::vector<MorphismName> names = [] {
    std::vector<MorphismName> v;
    for (const auto& [m, s] : kMorphismNames) v.push_back(m);
    return v;
  }();
  return names;
}

std::string_view to_string(MorphismName name) {
  for (const auto& [m, s] : kMorphismNames)
    if (m == name) return s;
  throw InternalError("unnamed morphism");
}

MorphismName parse_morphism(std::string_view name) {
  for (const auto& [m, s] : kMorphismNames)
    if (s == name) return m;
  throw ParseError("unknown morphism '" + std::string(name) + "'");
}

std::string_view to_string(Level level) {
  for (const auto& [v, s] : kLevelNames)
    if (v == level) return s;
  throw InternalError("unnamed level");
}

Level parse_level(std::string_view name) {
  for (const auto& [v, s] : kLevelNames)
    if (s == name) return v;
  throw ParseError("unknown level '" + std::string(name) + "' (expected fracSU, fracU6, loopU or loopSU)");
}

std::string_view to_string(TransgressionStep step) {
  return step == TransgressionStep::fracSU_to_loopU ? "fracSU->loopU" : "fracU6->loopSU";
}

TransgressionStep parse_transgression_step(std::string_view name) {
  if (name == "fracSU->loopU" || name == "fracSU") return TransgressionStep::fracSU_to_loopU;
  if (name == "fracU6->loopSU" || name == "fracU6") return TransgressionStep::fracU6_to_loopSU;
  throw ParseError("unknown transgression step '" + std::string(name) + "'");
}

TowerRegistry::TowerRegistry(int n, int l, int degree_cap)
    : n_(n), l_(l), cap_(effective_cap(n, l, degree_cap)) {
  for (Space sp : all_spaces()) rings_.emplace(sp, space_ring(sp, n_, cap_));
  for (Space sp : {Space::BU1, Space::BUn, Space::BU1xBUn, Space::BUnQ, Space::BSUnQ, Space::BSpinc, Space::BUn_l})
    nu_.emplace(sp, builtin_table(sp, n_, l_, cap_));

  const Rational s(n_ / l_);
  const Rational sq = ratio(n_ / l_ * (n_ - 1), 2 * l_);  // s(n-1)/(2l)
  auto G = [&](Space sp, const std::string& name) { return GradedPolynomial::generator(ring(sp), name); };
  auto one = [&](Space sp) { return GradedPolynomial::constant(ring(sp), 1); };
  auto images = [&](std::initializer_list<std::pair<const std::string, GradedPolynomial>> init) {
    return std::map<std::string, GradedPolynomial>(init);
  };

  // phi: BU1 x BUn -> BUnQ
  {
    std::map<std::string, GradedPolynomial> m;
    auto g = G(Space::BU1xBUn, "g");
    for (int k = 1; k <= n_; ++k) {
      GradedPolynomial v(ring(Space::BU1xBUn));
      for (int i = 0; i <= k; ++i) {
        auto ck = k - i == 0 ? one(Space::BU1xBUn) : G(Space::BU1xBUn, c(k - i));
        v += scale(mul(power(g, i), ck), shift_coefficient(n_, l_, k, i));
      }
      m.emplace(c(k, "Q"), v);
    }
    add(MorphismName::phi, Space::BU1xBUn, Space::BUnQ, m);
  }
  // phi2: BUn_l -> BSUnQ
  {
    std::map<std::string, GradedPolynomial> m;
    auto cb = G(Space::BUn_l, "cb1");
    for (int k = 2; k <= n_; ++k) {
      GradedPolynomial v(ring(Space::BUn_l));
      for (int i = 0; i <= k - 2; ++i)
        v += scale(mul(power(cb, i), G(Space::BUn_l, c(k - i))), shift_coefficient(n_, l_, k, i));
      Rational top(binomial(n_, k) * (1 - k));
      for (int i = 0; i < k; ++i) top *= ratio(-1, l_);
      v += scale(power(cb, k), top);
      m.emplace(c(k, "Q"), v);
    }
    add(MorphismName::phi2, Space::BUn_l, Space::BSUnQ, m);
  }
  // B(d_l, rho_s): BUn_l -> BU1 x BUn
  {
    auto cb = G(Space::BUn_l, "cb1");
    add(MorphismName::Bi2l, Space::BUn_l, Space::BU1xBUn, images({{"g", cb}, {"c1", scale(cb, s)}}));
    add(MorphismName::Brho_s, Space::BUn_l, Space::BUn, images({{"c1", scale(cb, s)}}));
  }
  // Bi3l: BU6n_l -> BUn_l, with c2 = s(n-1)/(2l) cb1^2
  {
    std::map<std::string, GradedPolynomial> m;
    if (n_ >= 2) m.emplace("c2", scale(power(G(Space::BU6n_l, "cb1"), 2), sq));
    add(MorphismName::Bi3l, Space::BU6n_l, Space::BUn_l, m);
  }
  // phi3 = Bi3l* o phi2* on c_k^Q, k >= 3
  {
    std::map<std::string, GradedPolynomial> m;
    const auto& bi3 = morphism(MorphismName::Bi3l).pullback;
    const auto& p2 = morphism(MorphismName::phi2).pullback;
    for (int k = 3; k <= n_; ++k) m.emplace(c(k, "Q"), bi3(p2.image(c(k, "Q"))));
    add(MorphismName::phi3, Space::BU6n_l, Space::BU6nQ, m);
  }
  // Spin^c comparison
  {
    auto q1 = n_ >= 2 ? -G(Space::BUn, "c2") : GradedPolynomial(ring(Space::BUn));
    add(MorphismName::Br, Space::BUn, Space::BSpinc, images({{"t", G(Space::BUn, "c1")}, {"q1", q1}}));
    auto lq1 = n_ >= 2 ? -G(Space::BLUn, "c2") : GradedPolynomial(ring(Space::BLUn));
    auto lmu = n_ >= 2 ? -G(Space::BLUn, "z2") : GradedPolynomial(ring(Space::BLUn));
    add(MorphismName::BLr, Space::BLUn, Space::BLSpinc,
        images({{"sp1", G(Space::BLUn, "z1")}, {"t", G(Space::BLUn, "c1")}, {"mu", lmu}, {"q1", lq1}}));
  }
  // B mu_s is the relative class c1 - s g; B epsilon = B(L det) picks out z1
  add(MorphismName::Bmu_s, Space::BU1xBUn, Space::BU1,
      images({{"g", G(Space::BU1xBUn, "c1") - scale(G(Space::BU1xBUn, "g"), s)}}));
  add(MorphismName::Bepsilon, Space::BLUn, Space::S1, images({{"h", G(Space::BLUn, "z1")}}));

  // loop level
  {
    auto zb = G(Space::BLUn_l, "zb1"), cb = G(Space::BLUn_l, "cb1");
    add(MorphismName::BLrho_s, Space::BLUn_l, Space::BLUn, images({{"z1", scale(zb, s)}, {"c1", scale(cb, s)}}));
    add(MorphismName::BLi2l, Space::BLUn_l, Space::BLU1xBLUn,
        images({{"g", cb}, {"h", zb}, {"z1", scale(zb, s)}, {"c1", scale(cb, s)}}));
    auto bz = G(Space::BLUbar_n_l, "zb1");
    add(MorphismName::Biota2l, Space::BLUbar_n_l, Space::BLU1xBLUn, images({{"h", bz}, {"z1", scale(bz, s)}}));
    add(MorphismName::BhatLi2l, Space::BLUn_l, Space::BLUbar_n_l, images({{"g", cb}, {"c1", scale(cb, s)}}));
    std::map<std::string, GradedPolynomial> m3;
    auto hz = G(Space::BhatLSUn_l, "zb1"), hc = G(Space::BhatLSUn_l, "cb1");
    if (n_ >= 2) m3.emplace("z2", scale(mul(hz, hc), -s / l_));
    add(MorphismName::Biota3l, Space::BhatLSUn_l, Space::BLUn_l, m3);
  }
  // Lphi: BLU1 x BLUn -> BLUnQ. Even classes from phi*, odd ones by naturality.
  Rational s_over_l = s / l_;
  {
    const auto& ph = morphism(MorphismName::phi).pullback;
    auto emb = RingMorphism::by_names(ring(Space::BU1xBUn), ring(Space::BLU1xBLUn));
    std::map<std::string, GradedPolynomial> m;
    for (int k = 1; k <= n_; ++k) m.emplace(c(k, "Q"), emb(ph.image(c(k, "Q"))));
    auto z1q = G(Space::BLU1xBLUn, "z1") - scale(G(Space::BLU1xBLUn, "h"), s);
    m.emplace("z1Q", z1q);
    if (n_ >= 2)
      m.emplace("z2Q", free_suspend(nu(Space::BU1xBUn), ph.image("c2Q")) - mul(z1q, m.at("c1Q")));
    add(MorphismName::Lphi, Space::BLU1xBLUn, Space::BLUnQ, m);
  }
  // xi2: BU1 x BLUbar_n_l -> BL0UnQ
  {
    const auto& io = morphism(MorphismName::Biota2l).pullback;
    const auto& lp = morphism(MorphismName::Lphi).pullback;
    std::map<std::string, GradedPolynomial> m;
    m.emplace("c1Q", G(Space::BLUbar_n_l, "c1") - scale(G(Space::BLUbar_n_l, "g"), s));
    if (n_ >= 2)
      m.emplace("z2Q", G(Space::BLUbar_n_l, "z2") +
                           scale(mul(G(Space::BLUbar_n_l, "zb1"), G(Space::BLUbar_n_l, "c1")), ratio(1, l_)));
    for (int k = 2; k <= n_; ++k) m.emplace(c(k, "Q"), io(lp.image(c(k, "Q"))));
    add(MorphismName::xi2, Space::BLUbar_n_l, Space::BL0UnQ, m);
  }
  // Lphi2: BLUn_l -> BLSUnQ
  {
    const auto& p2 = morphism(MorphismName::phi2).pullback;
    auto emb = RingMorphism::by_names(ring(Space::BUn_l), ring(Space::BLUn_l));
    std::map<std::string, GradedPolynomial> m;
    for (int k = 2; k <= n_; ++k) m.emplace(c(k, "Q"), emb(p2.image(c(k, "Q"))));
    if (n_ >= 2)
      m.emplace("z2Q", G(Space::BLUn_l, "z2") + scale(mul(G(Space::BLUn_l, "zb1"), G(Space::BLUn_l, "cb1")), s_over_l));
    add(MorphismName::Lphi2, Space::BLUn_l, Space::BLSUnQ, m);
  }
  // xi3: BhatLSUn_l -> BhatLSUnQ
  {
    const auto& io = morphism(MorphismName::Biota3l).pullback;
    const auto& lp = morphism(MorphismName::Lphi2).pullback;
    std::map<std::string, GradedPolynomial> m;
    for (int k = 2; k <= n_; ++k) m.emplace(c(k, "Q"), io(lp.image(c(k, "Q"))));
    add(MorphismName::xi3, Space::BhatLSUn_l, Space::BhatLSUnQ, m);
  }
}

void TowerRegistry::add(MorphismName name, Space from, Space to,
                        const std::map<std::string, GradedPolynomial>& images) {
  // unlisted generators go to their namesakes
  auto pb = RingMorphism::by_names(ring(to), ring(from), images);
  morphisms_.emplace(name, MorphismTable{name, from, to, std::move(pb)});
}

const Ring& TowerRegistry::ring(Space space) const { return rings_.at(space); }

const MorphismTable& TowerRegistry::morphism(MorphismName name) const { return morphisms_.at(name); }

const DerivationTable& TowerRegistry::nu(Space space) const {
  auto it = nu_.find(space);
  if (it == nu_.end())
    throw PreconditionError("no free-suspension table for space '" + std::string(to_string(space)) + "'");
  return it->second;
}

GradedPolynomial TowerRegistry::parse(Space space, std::string_view text) const {
  return parse_polynomial(ring(space), text);
}

MorphismTable builtin_morphism(MorphismName name, int n, int l, int degree_cap) {
  return TowerRegistry(n, l, degree_cap).morphism(name);
}

GradedPolynomial phi_pullback(const TowerRegistry& reg, int k) {
  if (k < 0 || k > reg.n()) throw PreconditionError("k out of range [0, n]");
  if (k == 0) return GradedPolynomial::constant(reg.ring(Space::BU1xBUn), 1);
  return reg.morphism(MorphismName::phi).pullback.image(c(k, "Q"));
}

GradedPolynomial phi_pullback(int n, int l, int k) { return phi_pullback(TowerRegistry(n, l), k); }

GradedPolynomial phi2_pullback(const TowerRegistry& reg, int k) {
  if (k < 2 || k > reg.n()) throw PreconditionError("phi2 pullback needs 2 <= k <= n");
  return reg.morphism(MorphismName::phi2).pullback.image(c(k, "Q"));
}

GradedPolynomial phi2_pullback(int n, int l, int k) { return phi2_pullback(TowerRegistry(n, l), k); }

GradedPolynomial xi2_pipeline(const TowerRegistry& reg, Xi2Class which) {
  const auto& io = reg.morphism(MorphismName::Biota2l).pullback;
  const auto& ph = reg.morphism(MorphismName::phi).pullback;
  auto emb = RingMorphism::by_names(reg.ring(Space::BU1xBUn), reg.ring(Space::BLU1xBLUn));
  const Rational s(reg.s());
  auto h = GradedPolynomial::generator(reg.ring(Space::BLU1xBLUn), "h");
  auto z1 = GradedPolynomial::generator(reg.ring(Space::BLU1xBLUn), "z1");
  auto c1q = emb(ph.image("c1Q"));
  if (which == Xi2Class::c1Q) return io(c1q);
  if (reg.n() < 2) throw PreconditionError("z2Q needs n >= 2");
  auto nu_c2 = free_suspend(reg.nu(Space::BU1xBUn), ph.image("c2Q"));
  return io(nu_c2 - mul(z1 - scale(h, s), c1q));
}

GradedPolynomial xi2_pullback(const TowerRegistry& reg, Xi2Class which) {
  const auto& xi = reg.morphism(MorphismName::xi2).pullback;
  if (which == Xi2Class::z2Q && reg.n() < 2) throw PreconditionError("z2Q needs n >= 2");
  auto value = xi.image(which == Xi2Class::c1Q ? "c1Q" : "z2Q");
  if (!(value == xi2_pipeline(reg, which))) throw InternalError("xi2 table disagrees with the suspension pipeline");
  return value;
}

LoopClassRoutes lphi2_z2_routes(const TowerRegistry& reg) {
  if (reg.n() < 2) throw PreconditionError("z2Q needs n >= 2");
  auto table = reg.morphism(MorphismName::Lphi2).pullback.image("z2Q");
  // in BSUnQ nu(c2Q) = z2Q, so Lphi2*(z2Q) = nu(phi2*(c2Q))
  auto via_nu = free_suspend(reg.nu(Space::BUn_l), phi2_pullback(reg, 2));
  auto via_fact = reg.morphism(MorphismName::BhatLi2l).pullback(reg.morphism(MorphismName::xi2).pullback.image("z2Q"));
  return {table, via_nu, via_fact};
}

GradedPolynomial lphi2_z2(const TowerRegistry& reg) {
  auto routes = lphi2_z2_routes(reg);
  if (!routes.agree()) throw InternalError("Lphi2*(z2Q) routes disagree");
  return routes.table;
}

namespace {

// p*: ringY -> ringLY by names
RingMorphism loop_embed_Y(const BundleDescriptor& d) {
  const auto& L = d.loop_data();
  if (L.nuY) return L.nuY->embed();
  return RingMorphism::by_names(d.ringY, L.ringLY);
}

ObstructionPair make_pair(Level level, GradedPolynomial up, GradedPolynomial down, std::optional<bool> compat) {
  bool v = up.is_zero() && down.is_zero();
  return {level, std::move(up), std::move(down), v, compat};
}

void require_vanishing(Level level, const BundleDescriptor& d, Level needed);

ObstructionPair obstruction_unchecked(Level level, const BundleDescriptor& d) {
  const Rational s(d.s());
  switch (level) {
    case Level::fracSU: {
      auto up = d.chern(1) - scale(d.class_a(), s);
      const auto& down = d.fractional(1);
      std::optional<bool> compat;
      if (d.pi_star) compat = d.pi()(down) == up;
      return make_pair(level, up, down, compat);
    }
    case Level::fracU6: {
      require_vanishing(level, d, Level::fracSU);
      auto up = d.chern(2) - scale(power(d.class_a(), 2), ratio(d.s() * (d.n - 1), 2 * d.l));
      const auto& down = d.fractional(2);
      std::optional<bool> compat;
      if (d.pi_star) compat = d.pi()(down) == up;
      return make_pair(level, up, down, compat);
    }
    case Level::loopU: {
      auto up = d.loop_chern(1) - scale(d.afrak(), s);
      const auto& down = d.loop_fractional(1);
      std::optional<bool> compat;
      if (d.loop_data().Lpi_star) compat = (*d.loop_data().Lpi_star)(down) == up;
      return make_pair(level, up, down, compat);
    }
    case Level::loopSU: {
      require_vanishing(level, d, Level::fracSU);
      require_vanishing(level, d, Level::loopU);
      auto p = loop_embed_Y(d);
      auto up = d.loop_chern(2) + scale(mul(d.loop_chern(1), p(d.chern(1))), ratio(1, d.n));
      const auto& down = d.loop_fractional(2);
      std::optional<bool> compat;
      if (d.loop_data().Lpi_star) compat = (*d.loop_data().Lpi_star)(down) == up;
      return make_pair(level, up, down, compat);
    }
  }
  throw InternalError("unknown level");
}

void require_vanishing(Level level, const BundleDescriptor& d, Level needed) {
  auto prev = obstruction_unchecked(needed, d);
  if (!prev.vanishes)
    throw PreconditionError(std::string(to_string(level)) + " needs the " + std::string(to_string(needed)) +
                            " obstruction to vanish; it is (" + render(prev.upstairs) + ", " +
                            render(prev.downstairs) + ")");
}

ConsequenceCheck identity(std::string text, GradedPolynomial residual) {
  bool ok = residual.is_zero();
  return {std::move(text), std::move(residual), ok};
}

// f2^a* (or f3^a*) on BUn_l-type classes: cb1 -> a, c_k -> c_k(E)
RingMorphism classify_Y(const BundleDescriptor& d, const Ring& source) {
  std::map<std::string, GradedPolynomial> m;
  for (const auto& g : source->generators()) {
    if (g.name == "cb1") m.emplace(g.name, d.class_a());
    else m.emplace(g.name, d.chern(g.degree / 2));
  }
  return RingMorphism::from_images(source, d.ringY, m);
}

}  // namespace

ObstructionPair obstruction(Level level, const BundleDescriptor& d) {
  require_higher(d);
  return obstruction_unchecked(level, d);
}

std::vector<ConsequenceCheck> lift_consequences(Level level, const BundleDescriptor& d) {
  auto ob = obstruction(level, d);
  if (!ob.vanishes)
    throw PreconditionError(std::string(to_string(level)) + " obstruction does not vanish: (" + render(ob.upstairs) +
                            ", " + render(ob.downstairs) + ")");
  const Rational s(d.s());
  const Rational inv_s = Rational(1) / s;
  std::vector<ConsequenceCheck> out;
  switch (level) {
    case Level::fracSU: {
      out.push_back(identity("a = (1/s) c1(E)", d.class_a() - scale(d.chern(1), inv_s)));
      if (d.pi_star && d.n >= 2) {
        TowerRegistry reg(d.n, d.l, std::max(d.ringY->degree_cap(), 4));
        auto f2 = classify_Y(d, reg.ring(Space::BUn_l));
        for (int k = 2; k <= d.n && 2 * k <= d.ringY->degree_cap() && k <= int(d.frac.size()); ++k)
          out.push_back(identity("pi*(c" + std::to_string(k) + "^{l,a}) = f2^a*(phi2*(c" + std::to_string(k) + "Q))",
                                 d.pi()(d.fractional(k)) - f2(phi2_pullback(reg, k))));
      }
      break;
    }
    case Level::fracU6: {
      out.push_back(identity("a = (1/s) c1(E)", d.class_a() - scale(d.chern(1), inv_s)));
      out.push_back(identity("c2(E) = s(n-1)/(2l) a^2",
                             d.chern(2) - scale(power(d.class_a(), 2), ratio(d.s() * (d.n - 1), 2 * d.l))));
      if (d.pi_star && d.n >= 3) {
        TowerRegistry reg(d.n, d.l, std::max(d.ringY->degree_cap(), 4));
        auto f3 = classify_Y(d, reg.ring(Space::BU6n_l));
        const auto& p3 = reg.morphism(MorphismName::phi3).pullback;
        for (int k = 3; k <= d.n && 2 * k <= d.ringY->degree_cap() && k <= int(d.frac.size()); ++k)
          out.push_back(identity("pi*(c" + std::to_string(k) + "^{l,a}) = f3^a*(phi3*(c" + std::to_string(k) + "Q))",
                                 d.pi()(d.fractional(k)) - f3(p3.image(c(k, "Q")))));
      }
      break;
    }
    case Level::loopU: {
      out.push_back(identity("afrak = (1/s) z1(LE)", d.afrak() - scale(d.loop_chern(1), inv_s)));
      const auto& L = d.loop_data();
      if (L.Lpi_star && d.n >= 2 && d.loop_data().zfrac.size() >= 2 && d.loop_data().z.size() >= 2) {
        auto p = loop_embed_Y(d);
        auto rhs = d.loop_chern(2) + scale(mul(d.afrak(), p(d.chern(1))), ratio(1, d.l));
        out.push_back(identity("Lpi*(z2^{l,a}) = z2(LE) + (1/l) afrak c1(LE)", (*L.Lpi_star)(d.loop_fractional(2)) - rhs));
      }
      break;
    }
    case Level::loopSU: {
      auto p = loop_embed_Y(d);
      out.push_back(identity("afrak = (1/s) z1(LE)", d.afrak() - scale(d.loop_chern(1), inv_s)));
      out.push_back(identity("c1(LE) = s a", p(d.chern(1) - scale(d.class_a(), s))));
      out.push_back(identity("z2(LE) = -(s/l) afrak a",
                             d.loop_chern(2) + scale(mul(d.afrak(), p(d.class_a())), s / d.l)));
      break;
    }
  }
  return out;
}

AbelianGroupDesc count_structures(Level level, const std::map<int, AbelianGroupDesc>& hM,
                                  const std::map<int, AbelianGroupDesc>* hLM) {
  auto pick = [](const std::map<int, AbelianGroupDesc>* groups, int degree, const char* space) {
    if (!groups) throw PreconditionError(std::string("no cohomology data for ") + space);
    auto it = groups->find(degree);
    if (it == groups->end())
      throw PreconditionError("missing H^" + std::to_string(degree) + "(" + space + "; Z) in the input");
    return it->second;
  };
  switch (level) {
    case Level::fracSU:
      return pick(&hM, 1, "M");
    case Level::fracU6:
      return pick(&hM, 3, "M");
    case Level::loopU:
      return pick(hLM, 0, "LM");
    case Level::loopSU:
      return pick(hLM, 2, "LM");
  }
  throw InternalError("unknown level");
}

TransgressionReport transgress_obstruction(TransgressionStep step, const BundleDescriptor& d) {
  require_higher(d);
  const auto& L = d.loop_data();
  if (!L.nuY || !L.nuM) throw PreconditionError("transgression needs the nuY and nuM tables");
  Level from = step == TransgressionStep::fracSU_to_loopU ? Level::fracSU : Level::fracU6;
  Level to = step == TransgressionStep::fracSU_to_loopU ? Level::loopU : Level::loopSU;
  auto base = obstruction_unchecked(from, d);
  auto loop = obstruction_unchecked(to, d);
  auto nu_up = free_suspend(*L.nuY, base.upstairs);
  auto nu_down = free_suspend(*L.nuM, base.downstairs);
  bool ue = nu_up == loop.upstairs;
  bool de = nu_down == loop.downstairs;
  return {std::move(base), std::move(loop), std::move(nu_up), std::move(nu_down), ue, de};
}

}  // namespace fracchern
