#include "fracchern/transgression.hpp"

#include <random>

#include "fracchern/errors.hpp"
#include "fracchern/parse.hpp"

namespace fracchern {

DerivationTable::DerivationTable(Ring source, Ring target, std::map<std::string, GradedPolynomial> values)
    : source_(std::move(source)),
      target_(std::move(target)),
      embed_(RingMorphism::by_names(source_, target_)),
      values_(std::move(values)) {
  for (const auto& g : source_->generators()) {
    auto j = target_->index_of(g.name);
    if (!j || target_->generator(*j).degree != g.degree)
      throw PreconditionError("loop ring lacks the class '" + g.name + "' of degree " +
                              std::to_string(g.degree));
  }
  for (const auto& [name, v] : values_) {
    const auto& g = source_->generator(source_->require(name));
    if (g.odd()) throw PreconditionError("odd generator '" + name + "' cannot carry a suspension value");
    if (!same_ring(v.ring(), target_)) throw PreconditionError("value of '" + name + "' is not over the loop ring");
    if (v.is_zero()) continue;
    auto d = v.homogeneous_degree();
    if (!d || *d != g.degree - 1)
      throw PreconditionError("value of '" + name + "' must be homogeneous of degree " +
                              std::to_string(g.degree - 1) + ", got " + render(v));
  }
}

const GradedPolynomial* DerivationTable::value(const std::string& name) const {
  auto it = values_.find(name);
  return it == values_.end() ? nullptr : &it->second;
}

GradedPolynomial free_suspend(const DerivationTable& table, const GradedPolynomial& p) {
  if (!same_ring(p.ring(), table.source()))
    throw PreconditionError("polynomial is not over the table's source ring");
  const auto& ring = *table.source();
  const auto& target = table.target();
  GradedPolynomial result(target);
  for (const auto& [m, c] : p.terms()) {
    for (std::size_t i = 0; i < m.exps.size(); ++i) {
      if (!m.exps[i]) continue;
      const auto& g = ring.generator(i);
      if (g.odd())
        throw PreconditionError("free suspension is only defined on even classes; '" + g.name + "' is odd");
      if (!table.value(g.name))
        throw PreconditionError("no free-suspension value for '" + g.name + "'");
    }
    for (std::size_t i = 0; i < m.exps.size(); ++i) {
      if (!m.exps[i]) continue;
      Monomial rest = m;
      rest.exps[i] -= 1;
      rest.degree -= ring.generator(i).degree;
      auto cofactor = table.embed().apply(GradedPolynomial::monomial(table.source(), rest, c * m.exps[i]));
      result += mul(*table.value(ring.generator(i).name), cofactor);
    }
  }
  return result;
}

bool NaturalityReport::natural() const {
  for (const auto* group : {&generators, &samples})
    for (const auto& e : *group)
      if (!e.equal) return false;
  return true;
}

namespace {

void check_shapes(const RingMorphism& f, const RingMorphism& Lf, const DerivationTable& nu_src,
                  const DerivationTable* nu_tgt) {
  if (!same_ring(f.source(), nu_src.source()))
    throw PreconditionError("shape mismatch: f* must start at the source table's ring");
  if (!same_ring(Lf.source(), nu_src.target()))
    throw PreconditionError("shape mismatch: Lf* must start at the source table's loop ring");
  if (nu_tgt) {
    if (!same_ring(f.target(), nu_tgt->source()))
      throw PreconditionError("shape mismatch: f* must land in the target table's ring");
    if (!same_ring(Lf.target(), nu_tgt->target()))
      throw PreconditionError("shape mismatch: Lf* must land in the target table's loop ring");
  }
}

bool suspendable(const DerivationTable& table, const GradedPolynomial& p) {
  const auto& ring = *table.source();
  for (std::size_t i = 0; i < ring.size(); ++i)
    if (p.uses_generator(i) && (ring.generator(i).odd() || !table.value(ring.generator(i).name))) return false;
  return true;
}

}  // namespace

NaturalityReport naturality_check(const RingMorphism& f, const RingMorphism& Lf,
                                  const DerivationTable& nu_src, const DerivationTable& nu_tgt,
                                  unsigned sample_count, std::uint32_t seed) {
  check_shapes(f, Lf, nu_src, &nu_tgt);
  NaturalityReport report;
  const auto& A = f.source();
  std::vector<std::size_t> usable;
  for (std::size_t i = 0; i < A->size(); ++i) {
    const auto& g = A->generator(i);
    if (g.odd()) continue;
    auto x = GradedPolynomial::generator(A, i);
    if (!nu_src.value(g.name) || !suspendable(nu_tgt, f(x))) {
      report.skipped.push_back(g.name);
      continue;
    }
    usable.push_back(i);
    auto lhs = free_suspend(nu_tgt, f(x));
    auto rhs = Lf(*nu_src.value(g.name));
    bool eq = lhs == rhs;
    report.generators.push_back({g.name, std::move(lhs), std::move(rhs), eq});
  }
  if (usable.empty()) return report;

  std::mt19937 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, usable.size() - 1);
  std::uniform_int_distribution<int> length(2, 3);
  for (unsigned t = 0; t < sample_count; ++t) {
    auto x = GradedPolynomial::constant(A, 1);
    std::string label;
    int len = length(rng);
    for (int j = 0; j < len; ++j) {
      auto i = usable[pick(rng)];
      auto next = mul(x, GradedPolynomial::generator(A, i));
      if (next.is_zero()) break;  // over the cap
      x = std::move(next);
      label += (label.empty() ? "" : "*") + A->generator(i).name;
    }
    if (x.is_constant()) continue;
    auto lhs = free_suspend(nu_tgt, f(x));
    auto rhs = Lf(free_suspend(nu_src, x));
    bool eq = lhs == rhs;
    report.samples.push_back({label, std::move(lhs), std::move(rhs), eq});
  }
  return report;
}

DerivationTable solve_by_naturality(const RingMorphism& f, const RingMorphism& Lf,
                                    const DerivationTable& nu_src) {
  check_shapes(f, Lf, nu_src, nullptr);
  const auto& A = f.source();
  const auto& B = f.target();
  const auto& LB = Lf.target();
  std::map<std::string, GradedPolynomial> solved;

  for (bool progress = true; progress;) {
    progress = false;
    DerivationTable partial(B, LB, solved);
    for (std::size_t yi = 0; yi < B->size(); ++yi) {
      const auto& y = B->generator(yi);
      if (y.odd() || solved.count(y.name)) continue;
      for (std::size_t xi = 0; xi < A->size(); ++xi) {
        const auto& x = A->generator(xi);
        if (x.odd() || x.degree != y.degree || !nu_src.value(x.name)) continue;
        auto image = f.image(xi);
        // split image = lambda*y + R
        Monomial ym{y.degree, std::vector<std::uint16_t>(B->size())};
        ym.exps[yi] = 1;
        auto it = image.terms().find(ym);
        if (it == image.terms().end()) continue;
        Rational lambda = it->second;
        auto rest = image - GradedPolynomial::monomial(B, ym, lambda);
        if (rest.uses_generator(yi) || !suspendable(partial, rest)) continue;
        auto value = Lf(*nu_src.value(x.name)) - free_suspend(partial, rest);
        solved.emplace(y.name, scale(value, Rational(1) / lambda));
        progress = true;
        break;
      }
      if (progress) break;
    }
  }
  return DerivationTable(B, LB, std::move(solved));
}

DerivationTable builtin_table(Space space, int n, int l, int degree_cap) {
  int cap = effective_cap(n, l, degree_cap);
  Rational s(n / l);
  auto table = [&](Space src, Space tgt, const std::map<std::string, std::string>& values) {
    auto A = space_ring(src, n, cap);
    auto LA = space_ring(tgt, n, cap);
    std::map<std::string, GradedPolynomial> vals;
    for (const auto& [name, text] : values)
      if (A->has(name)) vals.emplace(name, parse_polynomial(LA, text));  // c2 is absent for n = 1
    return DerivationTable(A, LA, std::move(vals));
  };

  switch (space) {
    case Space::BU1:
      return table(Space::BU1, Space::BLU1, {{"g", "h"}});
    case Space::BUn:
      return table(Space::BUn, Space::BLUn, {{"c1", "z1"}, {"c2", "z2 + z1*c1"}});
    case Space::BU1xBUn:
      return table(Space::BU1xBUn, Space::BLU1xBLUn, {{"g", "h"}, {"c1", "z1"}, {"c2", "z2 + z1*c1"}});
    case Space::BUnQ:
      return table(Space::BUnQ, Space::BLUnQ, {{"c1Q", "z1Q"}, {"c2Q", "z2Q + z1Q*c1Q"}});
    case Space::BSUnQ:
      return table(Space::BSUnQ, Space::BLSUnQ, {{"c2Q", "z2Q"}});
    case Space::BSpinc:
      return table(Space::BSpinc, Space::BLSpinc, {{"t", "sp1"}, {"q1", "mu - sp1*t"}});
    case Space::BUn_l:
      return table(Space::BUn_l, Space::BLUn_l,
                   {{"cb1", "zb1"}, {"c2", "z2 + " + to_string(s * s) + "*zb1*cb1"}});
    default:
      throw PreconditionError("no free-suspension table for space '" + std::string(to_string(space)) + "'");
  }
}

}  // namespace fracchern
