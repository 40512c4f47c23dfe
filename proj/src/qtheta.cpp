#include "fracchern/qtheta.hpp"

#include <nlohmann/json.hpp>

#include "fracchern/errors.hpp"

namespace fracchern {

QExponent QExponent::parse(const std::string& text) {
  Rational v;
  auto dot = text.find('.');
  if (dot != std::string::npos) {
    auto frac = text.substr(dot + 1);
    if (frac != "5" && frac != "0") throw ParseError("q-order '" + text + "' is not a multiple of 1/2");
    v = parse_rational(text.substr(0, dot)) + (frac == "5" ? ratio(1, 2) : Rational(0));
  } else {
    v = parse_rational(text);
  }
  Rational twice = v * 2;
  if (twice.get_den() != 1) throw ParseError("q-order '" + text + "' is not a multiple of 1/2");
  if (twice < 0) throw ParseError("q-order '" + text + "' is negative");
  return {static_cast<int>(twice.get_num().get_si())};
}

Rational QExponent::value() const { return ratio(halves, 2); }

std::string QExponent::str() const { return to_string(value()); }

HalfQSeries::HalfQSeries(Ring ring, QExponent order) : ring_(std::move(ring)), order_(order) {
  if (order.halves < 0) throw PreconditionError("q-order must be nonnegative");
}

HalfQSeries HalfQSeries::constant(Ring ring, QExponent order, const GradedPolynomial& c) {
  HalfQSeries s(std::move(ring), order);
  s.add_term({0}, c);
  return s;
}

HalfQSeries HalfQSeries::one(Ring ring, QExponent order) {
  auto c = GradedPolynomial::constant(ring, 1);
  return constant(std::move(ring), order, c);
}

GradedPolynomial HalfQSeries::coefficient(QExponent e) const {
  auto it = coeffs_.find(e);
  return it == coeffs_.end() ? GradedPolynomial(ring_) : it->second;
}

void HalfQSeries::add_term(QExponent e, const GradedPolynomial& c) {
  if (e.halves < 0) throw PreconditionError("negative q-exponent");
  if (e > order_ || c.is_zero()) return;
  if (!same_ring(c.ring(), ring_)) throw PreconditionError("series coefficient over the wrong ring");
  auto it = coeffs_.find(e);
  if (it == coeffs_.end()) {
    coeffs_.emplace(e, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) coeffs_.erase(it);
}

bool HalfQSeries::operator==(const HalfQSeries& other) const {
  if (!same_ring(ring_, other.ring_) || order_ != other.order_ || coeffs_.size() != other.coeffs_.size())
    return false;
  for (const auto& [e, c] : coeffs_) {
    auto it = other.coeffs_.find(e);
    if (it == other.coeffs_.end() || !(it->second == c)) return false;
  }
  return true;
}

std::string HalfQSeries::str() const {
  if (coeffs_.empty()) return "0\n";
  std::string out;
  for (const auto& [e, c] : coeffs_) out += "q^" + e.str() + ": " + render(c) + "\n";
  return out;
}

nlohmann::json HalfQSeries::to_json() const {
  nlohmann::json coeffs = nlohmann::json::object();
  for (const auto& [e, c] : coeffs_) coeffs[e.str()] = render(c);
  return {{"q_order", order_.str()}, {"coefficients", coeffs}};
}

namespace {

void check_compatible(const HalfQSeries& f, const HalfQSeries& g) {
  if (!same_ring(f.ring(), g.ring())) throw PreconditionError("series are over different rings");
  if (f.order() != g.order()) throw PreconditionError("series have different q-orders");
}

}  // namespace

HalfQSeries qseries_add(const HalfQSeries& f, const HalfQSeries& g) {
  check_compatible(f, g);
  HalfQSeries r = f;
  for (const auto& [e, c] : g.coefficients()) r.add_term(e, c);
  return r;
}

HalfQSeries qseries_sub(const HalfQSeries& f, const HalfQSeries& g) {
  check_compatible(f, g);
  HalfQSeries r = f;
  for (const auto& [e, c] : g.coefficients()) r.add_term(e, -c);
  return r;
}

HalfQSeries qseries_mul(const HalfQSeries& f, const HalfQSeries& g) {
  check_compatible(f, g);
  HalfQSeries r(f.ring(), f.order());
  for (const auto& [e1, c1] : f.coefficients())
    for (const auto& [e2, c2] : g.coefficients()) {
      QExponent e{e1.halves + e2.halves};
      if (e > f.order()) break;
      r.add_term(e, mul(c1, c2));
    }
  return r;
}

HalfQSeries qseries_pow(const HalfQSeries& f, unsigned k) {
  HalfQSeries r = HalfQSeries::one(f.ring(), f.order());
  for (unsigned i = 0; i < k; ++i) r = qseries_mul(r, f);
  return r;
}

GradedPolynomial invert_unit(const GradedPolynomial& p) {
  Rational c = p.constant_term();
  if (c == 0) throw PreconditionError("not a unit: constant term is 0 in " + render(p));
  // p = c (1 + u) with u nilpotent under the cap
  auto u = scale(p, Rational(1) / c) - GradedPolynomial::constant(p.ring(), 1);
  auto term = GradedPolynomial::constant(p.ring(), 1);
  auto sum = term;
  while (true) {
    term = -mul(term, u);
    if (term.is_zero()) break;
    sum += term;
  }
  return scale(sum, Rational(1) / c);
}

HalfQSeries qseries_div_unit(const HalfQSeries& f, const HalfQSeries& g) {
  check_compatible(f, g);
  auto g0 = g.coefficient({0});
  if (g0.is_zero() || g0.constant_term() == 0)
    throw PreconditionError("division by a series whose q^0 coefficient is not a unit");
  auto inv = invert_unit(g0);
  // h_e = inv * (f_e - sum_{0 < d <= e} g_d h_{e-d})
  HalfQSeries h(f.ring(), f.order());
  for (int e = 0; e <= f.order().halves; ++e) {
    auto acc = f.coefficient({e});
    for (const auto& [d, gd] : g.coefficients()) {
      if (d.halves == 0) continue;
      if (d.halves > e) break;
      acc -= mul(gd, h.coefficient({e - d.halves}));
    }
    h.add_term({e}, mul(inv, acc));
  }
  return h;
}

GradedPolynomial formal_exp(const GradedPolynomial& x) {
  if (x.constant_term() != 0) throw PreconditionError("formal_exp needs a class with no constant term");
  auto term = GradedPolynomial::constant(x.ring(), 1);
  auto sum = term;
  for (long k = 1;; ++k) {
    term = scale(mul(term, x), Rational(1, k));
    if (term.is_zero()) break;
    sum += term;
  }
  return sum;
}

std::string_view to_string(WittenKind kind) { return kind == WittenKind::theta2 ? "theta2" : "theta3"; }

WittenKind parse_witten_kind(std::string_view name) {
  if (name == "theta2") return WittenKind::theta2;
  if (name == "theta3") return WittenKind::theta3;
  throw ParseError("unknown theta kind '" + std::string(name) + "' (expected theta2 or theta3)");
}

namespace {

Rational kind_sign(WittenKind kind) { return kind == WittenKind::theta2 ? -1 : 1; }

// 1 + c q^e
HalfQSeries binomial_factor(const Ring& ring, QExponent order, QExponent e, const GradedPolynomial& c) {
  auto s = HalfQSeries::one(ring, order);
  s.add_term(e, c);
  return s;
}

// prod_{j >= 1, j <= order} (1 - q^j)
HalfQSeries euler_factor(const Ring& ring, QExponent order) {
  auto r = HalfQSeries::one(ring, order);
  auto minus_one = GradedPolynomial::constant(ring, -1);
  for (int j = 1; QExponent::whole(j) <= order; ++j)
    r = qseries_mul(r, binomial_factor(ring, order, QExponent::whole(j), minus_one));
  return r;
}

void check_order(QExponent order) {
  if (order.halves < 1) throw PreconditionError("q-order must be at least 1/2");
}

}  // namespace

HalfQSeries theta_series(WittenKind kind, const GradedPolynomial& shift, QExponent order) {
  const auto& ring = shift.ring();
  auto ep = formal_exp(shift), em = formal_exp(-shift);
  Rational sign = kind_sign(kind);
  auto r = euler_factor(ring, order);
  for (int j = 1; QExponent{2 * j - 1} <= order; ++j) {
    QExponent e{2 * j - 1};
    r = qseries_mul(r, binomial_factor(ring, order, e, scale(ep, sign)));
    r = qseries_mul(r, binomial_factor(ring, order, e, scale(em, sign)));
  }
  return r;
}

HalfQSeries gch_witten(const RootModel& model, WittenKind kind, QExponent order, GchMethod method) {
  check_order(order);
  const auto& ring = model.root_ring();
  const int n = model.n();
  if (method == GchMethod::theta_product) {
    auto r = HalfQSeries::one(ring, order);
    for (int i = 1; i <= n; ++i) r = qseries_mul(r, theta_series(kind, model.shifted_root(i), order));
    return r;
  }
  // Ch(Lambda_t E) = sum_k t^k sigma_k(e^{r_i}), and the same with e^{-r_i} for Ebar
  std::vector<GradedPolynomial> ep, em;
  for (int i = 1; i <= n; ++i) {
    ep.push_back(formal_exp(model.shifted_root(i)));
    em.push_back(formal_exp(-model.shifted_root(i)));
  }
  auto sp = elementary_symmetric_all(ep), sm = elementary_symmetric_all(em);
  Rational sign = kind_sign(kind);
  auto r = qseries_pow(euler_factor(ring, order), static_cast<unsigned>(n));
  for (int v = 1; QExponent{2 * v - 1} <= order; ++v) {
    HalfQSeries le(ring, order), lb(ring, order);
    Rational t = 1;
    for (int k = 0; k <= n; ++k) {
      QExponent e{k * (2 * v - 1)};
      le.add_term(e, scale(sp[k], t));
      lb.add_term(e, scale(sm[k], t));
      t *= sign;
    }
    r = qseries_mul(r, qseries_mul(le, lb));
  }
  return r;
}

HalfQSeries gch_witten(const BundleDescriptor& d, WittenKind kind, QExponent order, GchMethod method,
                       int degree_cap) {
  return gch_witten(RootModel(d.n, d.l, degree_cap), kind, order, method);
}

HalfQSeries normalize_gch(const HalfQSeries& series, WittenKind kind, int n) {
  if (n < 1) throw PreconditionError("rank must be positive");
  check_order(series.order());
  auto theta0 = theta_series(kind, GradedPolynomial(series.ring()), series.order());
  return qseries_div_unit(series, qseries_pow(theta0, static_cast<unsigned>(n)));
}

HalfQSeries descend_gch(const HalfQSeries& series, const RootModel& model) {
  if (!same_ring(series.ring(), model.root_ring())) throw PreconditionError("series is not over the root ring");
  const auto& ring = model.root_ring();
  // x_i -> x_i + a/l turns x_i - a/l into the bare root
  std::map<std::string, GradedPolynomial> unshift;
  for (int i = 1; i <= model.n(); ++i)
    unshift.emplace("x" + std::to_string(i), model.root(i) + scale(model.a(), ratio(1, model.l())));
  auto back = RingMorphism::by_names(ring, ring, unshift);

  std::map<std::string, GradedPolynomial> to_f{{"a", GradedPolynomial(model.fractional_ring())}};
  for (int k = 1; k <= model.n(); ++k)
    if (model.e_index(k))
      to_f.emplace("e" + std::to_string(k), GradedPolynomial::generator(model.fractional_ring(), "f" + std::to_string(k)));
  auto e_to_f = RingMorphism::by_names(model.elementary_ring(), model.fractional_ring(), to_f);

  HalfQSeries out(model.fractional_ring(), series.order());
  for (const auto& [e, c] : series.coefficients()) {
    auto bare = back(c);
    if (bare.uses_generator(0))
      throw PreconditionError("coefficient of q^" + e.str() + " is not a function of the shifted roots");
    auto sym = SymmetricExpression::check(bare, model);
    if (!sym.symmetric)
      throw PreconditionError("coefficient of q^" + e.str() + " is not symmetric in the shifted roots");
    out.add_term(e, e_to_f(express_in_elementary(sym, model)));
  }
  return out;
}

ModularityObstruction modularity_obstruction(const BundleDescriptor& d) {
  d.validate();
  const auto& f1 = d.fractional(1);
  GradedPolynomial f2 = d.n >= 2 ? d.fractional(2) : GradedPolynomial(d.ringM);
  auto value = scale(mul(f1, f1), ratio(1, 2)) - f2;
  bool v = value.is_zero();
  return {std::move(value), v};
}

}  // namespace fracchern
