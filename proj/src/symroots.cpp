#include "fracchern/symroots.hpp"

#include <algorithm>
#include <map>

#include "fracchern/errors.hpp"

namespace fracchern {

namespace {

void check_params(int n, int l) {
  if (n < 1) throw PreconditionError("rank n must be positive");
  if (l < 1) throw PreconditionError("order l must be positive");
  if (n % l != 0)
    throw PreconditionError("l = " + std::to_string(l) + " does not divide n = " + std::to_string(n));
}

void check_k(const RootModel& model, int k, int lowest = 0) {
  if (k < lowest || k > model.n())
    throw PreconditionError("k = " + std::to_string(k) + " out of range [" + std::to_string(lowest) +
                            ", " + std::to_string(model.n()) + "]");
}

std::vector<Generator> with_extras(std::vector<Generator> gens, const std::vector<Generator>& extras) {
  gens.insert(gens.end(), extras.begin(), extras.end());
  return gens;
}

// prod (1 + f) with everything above max_degree dropped as we go.
GradedPolynomial truncated_product(const Ring& ring, const std::vector<GradedPolynomial>& factors,
                                   int max_degree) {
  GradedPolynomial acc = GradedPolynomial::constant(ring, 1);
  auto one = GradedPolynomial::constant(ring, 1);
  for (const auto& f : factors) {
    auto next = mul(acc, one + f);
    GradedPolynomial kept(ring);
    for (const auto& [m, c] : next.terms())
      if (m.degree <= max_degree) kept.add_term(m, c);
    acc = std::move(kept);
  }
  return acc;
}

}  // namespace

RootModel::RootModel(int n, int l, int degree_cap, std::vector<Generator> extras)
    : n_(n), l_(l), cap_(degree_cap), to_roots_(make_ring({}, 1), make_ring({}, 1), {}) {
  check_params(n, l);
  if (degree_cap < 2) throw PreconditionError("degree cap must be at least 2 for degree-2 roots");
  for (const auto& g : extras)
    if (g.odd()) throw PreconditionError("extra generator '" + g.name + "' must be even");

  std::vector<Generator> root_gens{{"a", 2}};
  for (int i = 1; i <= n; ++i) root_gens.push_back({"x" + std::to_string(i), 2});
  roots_ = make_ring(with_extras(root_gens, extras), degree_cap);

  std::vector<Generator> elem_gens{{"a", 2}};
  std::vector<Generator> triv_gens{{"x", 2}};
  std::vector<Generator> frac_gens;
  e_index_.assign(static_cast<std::size_t>(n) + 1, std::nullopt);
  for (int k = 1; k <= n && 2 * k <= degree_cap; ++k) {
    e_index_[k] = elem_gens.size();
    elem_gens.push_back({"e" + std::to_string(k), 2 * k});
    triv_gens.push_back({"f" + std::to_string(k), 2 * k});
    frac_gens.push_back({"f" + std::to_string(k), 2 * k});
  }
  elementary_ = make_ring(with_extras(elem_gens, extras), degree_cap);
  trivialization_ = make_ring(triv_gens, degree_cap);
  fractional_ = make_ring(frac_gens, degree_cap);

  std::map<std::string, GradedPolynomial> images;
  for (int k = 1; k <= n; ++k)
    if (e_index_[k]) images.emplace("e" + std::to_string(k), elementary_symmetric(k, *this));
  to_roots_ = RingMorphism::by_names(elementary_, roots_, images);
}

std::optional<std::size_t> RootModel::e_index(int k) const {
  if (k < 0 || k > n_) return std::nullopt;
  return e_index_[k];
}

GradedPolynomial RootModel::a() const { return GradedPolynomial::generator(roots_, std::size_t{0}); }

GradedPolynomial RootModel::root(int i) const {
  if (i < 1 || i > n_) throw PreconditionError("root index out of range");
  return GradedPolynomial::generator(roots_, static_cast<std::size_t>(i));
}

GradedPolynomial RootModel::shifted_root(int i) const { return root(i) - scale(a(), ratio(1, l_)); }

GradedPolynomial RootModel::e(int k) const {
  if (k < 0 || k > n_) throw PreconditionError("e_k index out of range");
  if (k == 0) return GradedPolynomial::constant(elementary_, 1);
  if (!e_index_[k]) return GradedPolynomial(elementary_);
  return GradedPolynomial::generator(elementary_, *e_index_[k]);
}

GradedPolynomial RootModel::ea() const { return GradedPolynomial::generator(elementary_, std::size_t{0}); }

GradedPolynomial swap_roots(const GradedPolynomial& p, const RootModel& model, int i) {
  if (i < 1 || i >= model.n()) throw PreconditionError("transposition index out of range");
  if (!same_ring(p.ring(), model.root_ring())) throw PreconditionError("polynomial is not over the root ring");
  GradedPolynomial r(p.ring());
  for (const auto& [mono, c] : p.terms()) {
    Monomial m = mono;
    std::swap(m.exps[i], m.exps[i + 1]);
    r.add_term(m, c);
  }
  return r;
}

SymmetricExpression SymmetricExpression::check(const GradedPolynomial& p, const RootModel& model) {
  for (int i = 1; i < model.n(); ++i)
    if (!(swap_roots(p, model, i) == p)) return {p, false, i};
  return {p, true, std::nullopt};
}

std::vector<GradedPolynomial> elementary_symmetric_all(const std::vector<GradedPolynomial>& values) {
  if (values.empty()) throw PreconditionError("need at least one value");
  const auto& ring = values.front().ring();
  std::vector<GradedPolynomial> sig{GradedPolynomial::constant(ring, 1)};
  for (const auto& v : values) {
    sig.emplace_back(ring);
    for (std::size_t k = sig.size() - 1; k >= 1; --k) sig[k] += mul(v, sig[k - 1]);
  }
  return sig;
}

GradedPolynomial elementary_symmetric(int k, const RootModel& model) {
  check_k(model, k);
  std::vector<GradedPolynomial> roots;
  for (int i = 1; i <= model.n(); ++i) roots.push_back(model.root(i));
  return elementary_symmetric_all(roots)[k];
}

GradedPolynomial shifted_total_chern(const RootModel& model) {
  if (model.degree_cap() < 2 * model.n())
    throw PreconditionError("shifted_total_chern needs degree cap >= 2n");
  std::vector<GradedPolynomial> factors;
  for (int i = 1; i <= model.n(); ++i) factors.push_back(model.shifted_root(i));
  return truncated_product(model.root_ring(), factors, model.degree_cap());
}

GradedPolynomial express_in_elementary(const SymmetricExpression& p, const RootModel& model) {
  if (!same_ring(p.value.ring(), model.root_ring()))
    throw PreconditionError("polynomial is not over the root ring of this model");
  auto sym = SymmetricExpression::check(p.value, model);
  if (!sym.symmetric)
    throw PreconditionError("input is not symmetric: moved by the transposition (x" +
                            std::to_string(*sym.violating_transposition) + " x" +
                            std::to_string(*sym.violating_transposition + 1) + ")");

  const int n = model.n();
  const auto& rring = model.root_ring();
  const auto& ering = model.elementary_ring();
  const std::size_t width = rring->size();

  std::vector<GradedPolynomial> sigma;
  for (int k = 0; k <= n; ++k) sigma.push_back(elementary_symmetric(k, model));
  std::map<std::pair<int, int>, GradedPolynomial> sigma_pow;
  auto sigma_power = [&](int k, int e) -> const GradedPolynomial& {
    auto key = std::make_pair(k, e);
    auto it = sigma_pow.find(key);
    if (it == sigma_pow.end()) it = sigma_pow.emplace(key, power(sigma[k], e)).first;
    return it->second;
  };

  // lex on the root exponents first; a and extras only break ties
  auto root_key_less = [n](const Monomial& x, const Monomial& y) {
    for (int i = 1; i <= n; ++i)
      if (x.exps[i] != y.exps[i]) return x.exps[i] < y.exps[i];
    return x.exps < y.exps;
  };

  GradedPolynomial rest = p.value;
  GradedPolynomial result(ering);
  while (!rest.is_zero()) {
    auto lead = std::max_element(rest.terms().begin(), rest.terms().end(),
                                 [&](const auto& u, const auto& v) { return root_key_less(u.first, v.first); });
    const Monomial m = lead->first;
    const Rational c = lead->second;

    Monomial param_r{0, std::vector<std::uint16_t>(width)};
    Monomial elem{0, std::vector<std::uint16_t>(ering->size())};
    param_r.exps[0] = m.exps[0];
    elem.exps[0] = m.exps[0];
    for (std::size_t j = static_cast<std::size_t>(n) + 1; j < width; ++j) {
      param_r.exps[j] = m.exps[j];
      elem.exps[ering->size() - (width - j)] = m.exps[j];
    }

    GradedPolynomial expansion = GradedPolynomial::monomial(rring, param_r, c);
    for (int k = 1; k <= n; ++k) {
      int next = k < n ? m.exps[k + 1] : 0;
      int d = static_cast<int>(m.exps[k]) - next;
      if (d < 0) throw InternalError("leading monomial is not a partition");
      if (d == 0) continue;
      auto idx = model.e_index(k);
      if (!idx) throw InternalError("leading monomial needs an e_k above the cap");
      elem.exps[*idx] = static_cast<std::uint16_t>(d);
      expansion = mul(expansion, sigma_power(k, d));
    }
    result += GradedPolynomial::monomial(ering, elem, c);
    rest -= expansion;
    if (rest.terms().count(m)) throw InternalError("elimination did not remove the leading monomial");
  }
  return result;
}

GradedPolynomial express_in_elementary(const GradedPolynomial& p, const RootModel& model) {
  return express_in_elementary(SymmetricExpression::check(p, model), model);
}

Rational shift_coefficient(int n, int l, int k, int i) {
  Rational c(binomial(n - k + i, i));
  Rational unit(-1, l);
  for (int j = 0; j < i; ++j) c *= unit;
  return c;
}

GradedPolynomial fractional_chern_closed(const RootModel& model, int k) {
  check_k(model, k);
  GradedPolynomial r(model.elementary_ring());
  for (int i = 0; i <= k; ++i)
    r += scale(mul(power(model.ea(), i), model.e(k - i)), shift_coefficient(model.n(), model.l(), k, i));
  return r;
}

GradedPolynomial fractional_chern_brute(const RootModel& model, int k) {
  check_k(model, k);
  if (model.degree_cap() < 2 * k) throw PreconditionError("fractional_chern_brute needs degree cap >= 2k");
  std::vector<GradedPolynomial> factors;
  for (int i = 1; i <= model.n(); ++i) factors.push_back(model.shifted_root(i));
  auto total = truncated_product(model.root_ring(), factors, 2 * k);
  return express_in_elementary(homogeneous_part(total, 2 * k), model);
}

GradedPolynomial change_trivialization(const RootModel& model, int k) {
  check_k(model, k);
  const auto& ring = model.trivialization_ring();
  auto f = [&](int j) {
    if (j == 0) return GradedPolynomial::constant(ring, 1);
    auto name = "f" + std::to_string(j);
    if (!ring->has(name)) return GradedPolynomial(ring);
    return GradedPolynomial::generator(ring, name);
  };
  auto x = GradedPolynomial::generator(ring, "x");
  GradedPolynomial r(ring);
  for (int i = 0; i <= k; ++i)
    r += scale(mul(power(x, i), f(k - i)), shift_coefficient(model.n(), model.l(), k, i));
  return r;
}

SplittingReport splitting_check(const RootModel& model) {
  auto total = shifted_total_chern(model);
  const int n = model.n();
  SplittingReport report;
  report.passed = true;
  for (int j = 1; j <= n; ++j) {
    auto r = model.shifted_root(j);
    GradedPolynomial residual(model.root_ring());
    for (int k = 0; k <= n; ++k) {
      auto term = mul(homogeneous_part(total, 2 * k), power(r, n - k));
      if (k % 2) residual -= term;
      else residual += term;
    }
    report.passed = report.passed && residual.is_zero();
    report.residuals.push_back(std::move(residual));
  }
  return report;
}

}  // namespace fracchern
