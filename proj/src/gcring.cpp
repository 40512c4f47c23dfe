#include "fracchern/gcring.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "fracchern/errors.hpp"

namespace fracchern {

namespace {

bool valid_identifier(const std::string& s) {
  if (s.empty()) return false;
  auto head = static_cast<unsigned char>(s[0]);
  if (!(std::isalpha(head) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(), [](char ch) {
    auto c = static_cast<unsigned char>(ch);
    return std::isalnum(c) || ch == '_';
  });
}

void require_same(const GradedPolynomial& p, const GradedPolynomial& q) {
  if (!same_ring(p.ring(), q.ring()))
    throw PreconditionError("presentation mismatch: " + p.ring()->describe() + " vs " +
                            q.ring()->describe());
}

}  // namespace

RingPresentation::RingPresentation(std::vector<Generator> generators, int degree_cap)
    : gens_(std::move(generators)), cap_(degree_cap) {
  if (cap_ < 1) throw PreconditionError("degree cap must be positive");
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    const auto& g = gens_[i];
    if (!valid_identifier(g.name)) throw PreconditionError("bad generator name '" + g.name + "'");
    if (g.degree < 1) throw PreconditionError("generator '" + g.name + "' must have degree >= 1");
    if (g.degree > cap_)
      throw PreconditionError("generator '" + g.name + "' has degree " + std::to_string(g.degree) +
                              " above the cap " + std::to_string(cap_));
    if (!index_.emplace(g.name, i).second)
      throw PreconditionError("duplicate generator '" + g.name + "'");
  }
}

std::optional<std::size_t> RingPresentation::index_of(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t RingPresentation::require(std::string_view name) const {
  auto i = index_of(name);
  if (!i) throw PreconditionError("ring " + describe() + " has no generator '" + std::string(name) + "'");
  return *i;
}

std::string RingPresentation::describe() const {
  std::ostringstream out;
  out << "[";
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (i) out << ", ";
    out << gens_[i].name << ":" << gens_[i].degree;
  }
  out << "; cap " << cap_ << "]";
  return out.str();
}

Ring make_ring(std::vector<Generator> generators, int degree_cap) {
  return std::make_shared<const RingPresentation>(std::move(generators), degree_cap);
}

bool same_ring(const Ring& a, const Ring& b) {
  if (a == b) return true;
  return a && b && *a == *b;
}

std::optional<std::pair<Monomial, int>> multiply_monomials(const RingPresentation& ring,
                                                           const Monomial& x, const Monomial& y) {
  int degree = x.degree + y.degree;
  if (degree > ring.degree_cap()) return std::nullopt;
  Monomial out{degree, std::vector<std::uint16_t>(x.exps.size())};
  // Koszul sign: moving each odd factor of y left past the odd factors of x
  // with larger index.
  int odd_x_above = 0;
  int swaps = 0;
  for (std::size_t i = 0; i < x.exps.size(); ++i)
    if (x.exps[i] && ring.generator(i).odd()) ++odd_x_above;
  for (std::size_t i = 0; i < x.exps.size(); ++i) {
    bool odd = ring.generator(i).odd();
    if (odd) {
      if (x.exps[i] && y.exps[i]) return std::nullopt;
      if (x.exps[i]) --odd_x_above;
      if (y.exps[i]) swaps += odd_x_above;
    }
    out.exps[i] = static_cast<std::uint16_t>(x.exps[i] + y.exps[i]);
  }
  return std::make_pair(std::move(out), swaps % 2 ? -1 : 1);
}

GradedPolynomial::GradedPolynomial(Ring ring) : ring_(std::move(ring)) {
  if (!ring_) throw PreconditionError("polynomial needs a ring");
}

GradedPolynomial GradedPolynomial::constant(Ring ring, const Rational& c) {
  GradedPolynomial p(ring);
  p.add_term(Monomial{0, std::vector<std::uint16_t>(ring->size())}, c);
  return p;
}

GradedPolynomial GradedPolynomial::generator(Ring ring, std::size_t index) {
  if (index >= ring->size()) throw PreconditionError("generator index out of range");
  Monomial m{ring->generator(index).degree, std::vector<std::uint16_t>(ring->size())};
  m.exps[index] = 1;
  GradedPolynomial p(ring);
  p.add_term(m, 1);
  return p;
}

GradedPolynomial GradedPolynomial::generator(Ring ring, std::string_view name) {
  auto i = ring->require(name);
  return generator(std::move(ring), i);
}

GradedPolynomial GradedPolynomial::monomial(Ring ring, Monomial m, const Rational& c) {
  if (m.exps.size() != ring->size()) throw PreconditionError("monomial length does not match ring");
  int degree = 0;
  for (std::size_t i = 0; i < m.exps.size(); ++i) {
    if (ring->generator(i).odd() && m.exps[i] > 1) return GradedPolynomial(ring);
    degree += m.exps[i] * ring->generator(i).degree;
  }
  m.degree = degree;
  GradedPolynomial p(ring);
  p.add_term(m, c);
  return p;
}

bool GradedPolynomial::is_integral() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const auto& t) { return t.second.get_den() == 1; });
}

bool GradedPolynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.degree == 0);
}

Rational GradedPolynomial::constant_term() const {
  if (terms_.empty() || terms_.begin()->first.degree != 0) return 0;
  return terms_.begin()->second;
}

std::optional<int> GradedPolynomial::homogeneous_degree() const {
  if (terms_.empty()) return std::nullopt;
  int d = terms_.begin()->first.degree;
  if (terms_.rbegin()->first.degree != d) return std::nullopt;
  return d;
}

bool GradedPolynomial::uses_generator(std::size_t index) const {
  return std::any_of(terms_.begin(), terms_.end(),
                     [index](const auto& t) { return t.first.exps[index] != 0; });
}

void GradedPolynomial::add_term(const Monomial& m, const Rational& c) {
  if (c == 0 || m.degree > ring_->degree_cap()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

GradedPolynomial& GradedPolynomial::operator+=(const GradedPolynomial& other) {
  require_same(*this, other);
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

GradedPolynomial& GradedPolynomial::operator-=(const GradedPolynomial& other) {
  require_same(*this, other);
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

GradedPolynomial& GradedPolynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.second *= c;
  return *this;
}

bool GradedPolynomial::operator==(const GradedPolynomial& other) const {
  return same_ring(ring_, other.ring_) && terms_ == other.terms_;
}

std::string GradedPolynomial::str() const { return render(*this); }

GradedPolynomial add(const GradedPolynomial& p, const GradedPolynomial& q) {
  GradedPolynomial r = p;
  r += q;
  return r;
}

GradedPolynomial sub(const GradedPolynomial& p, const GradedPolynomial& q) {
  GradedPolynomial r = p;
  r -= q;
  return r;
}

GradedPolynomial mul(const GradedPolynomial& p, const GradedPolynomial& q) {
  require_same(p, q);
  GradedPolynomial r(p.ring());
  const auto& ring = *p.ring();
  int cap = ring.degree_cap();
  for (const auto& [mx, cx] : p.terms()) {
    for (const auto& [my, cy] : q.terms()) {
      // terms are sorted by degree, so nothing later in q fits either
      if (mx.degree + my.degree > cap) break;
      auto prod = multiply_monomials(ring, mx, my);
      if (!prod) continue;
      Rational c = cx * cy;
      if (prod->second < 0) c = -c;
      r.add_term(prod->first, c);
    }
  }
  return r;
}

GradedPolynomial scale(const GradedPolynomial& p, const Rational& c) {
  GradedPolynomial r = p;
  r *= c;
  return r;
}

GradedPolynomial power(const GradedPolynomial& p, unsigned k) {
  GradedPolynomial result = GradedPolynomial::constant(p.ring(), 1);
  GradedPolynomial base = p;
  while (k) {
    if (k & 1u) result = mul(result, base);
    k >>= 1u;
    if (k) base = mul(base, base);
  }
  return result;
}

GradedPolynomial homogeneous_part(const GradedPolynomial& p, int d) {
  GradedPolynomial r(p.ring());
  for (const auto& [m, c] : p.terms())
    if (m.degree == d) r.add_term(m, c);
  return r;
}

GradedPolynomial operator+(const GradedPolynomial& p, const GradedPolynomial& q) { return add(p, q); }
GradedPolynomial operator-(const GradedPolynomial& p, const GradedPolynomial& q) { return sub(p, q); }
GradedPolynomial operator-(const GradedPolynomial& p) { return scale(p, -1); }
GradedPolynomial operator*(const GradedPolynomial& p, const GradedPolynomial& q) { return mul(p, q); }
GradedPolynomial operator*(const Rational& c, const GradedPolynomial& p) { return scale(p, c); }
GradedPolynomial operator*(const GradedPolynomial& p, const Rational& c) { return scale(p, c); }

std::string render(const GradedPolynomial& p) {
  if (p.is_zero()) return "0";
  const auto& ring = *p.ring();
  std::string out;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    bool negative = c < 0;
    Rational mag = negative ? Rational(-c) : c;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;

    std::string mono;
    for (std::size_t i = 0; i < m.exps.size(); ++i) {
      if (!m.exps[i]) continue;
      if (!mono.empty()) mono += "*";
      mono += ring.generator(i).name;
      if (m.exps[i] > 1) mono += "^" + std::to_string(m.exps[i]);
    }
    if (mono.empty()) {
      out += to_string(mag);
    } else if (mag == 1) {
      out += mono;
    } else {
      out += to_string(mag) + "*" + mono;
    }
  }
  return out;
}

RingMorphism::RingMorphism(Ring source, Ring target, std::vector<GradedPolynomial> images)
    : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {
  if (images_.size() != source_->size())
    throw PreconditionError("morphism needs one image per source generator");
  for (std::size_t i = 0; i < images_.size(); ++i) {
    const auto& g = source_->generator(i);
    const auto& img = images_[i];
    if (!same_ring(img.ring(), target_))
      throw PreconditionError("image of '" + g.name + "' is not over the target ring");
    if (img.is_zero()) continue;
    auto d = img.homogeneous_degree();
    if (!d || *d != g.degree)
      throw PreconditionError("image of '" + g.name + "' is not homogeneous of degree " +
                              std::to_string(g.degree) + ": " + render(img));
  }
}

RingMorphism RingMorphism::from_images(Ring source, Ring target,
                                       const std::map<std::string, GradedPolynomial>& images) {
  for (const auto& kv : images) source->require(kv.first);
  std::vector<GradedPolynomial> imgs;
  for (const auto& g : source->generators()) {
    auto it = images.find(g.name);
    if (it == images.end()) throw PreconditionError("no image given for generator '" + g.name + "'");
    imgs.push_back(it->second);
  }
  return RingMorphism(std::move(source), std::move(target), std::move(imgs));
}

RingMorphism RingMorphism::by_names(Ring source, Ring target,
                                    const std::map<std::string, GradedPolynomial>& overrides) {
  for (const auto& kv : overrides) source->require(kv.first);
  std::vector<GradedPolynomial> imgs;
  for (const auto& g : source->generators()) {
    auto it = overrides.find(g.name);
    if (it != overrides.end()) {
      imgs.push_back(it->second);
    } else if (auto j = target->index_of(g.name)) {
      imgs.push_back(GradedPolynomial::generator(target, *j));
    } else if (g.degree > target->degree_cap()) {
      imgs.emplace_back(target);
    } else {
      throw PreconditionError("no image for generator '" + g.name + "' in " + target->describe());
    }
  }
  return RingMorphism(std::move(source), std::move(target), std::move(imgs));
}

RingMorphism RingMorphism::identity(Ring ring) { return by_names(ring, ring); }

const GradedPolynomial& RingMorphism::image(std::string_view name) const {
  return images_.at(source_->require(name));
}

GradedPolynomial RingMorphism::apply(const GradedPolynomial& p) const {
  if (!same_ring(p.ring(), source_))
    throw PreconditionError("polynomial is over " + p.ring()->describe() + ", morphism source is " +
                            source_->describe());
  // powers[i][e] = image(i)^e, filled lazily
  std::vector<std::vector<GradedPolynomial>> powers(images_.size());
  auto power_of = [&](std::size_t i, unsigned e) -> const GradedPolynomial& {
    auto& cache = powers[i];
    if (cache.empty()) {
      cache.push_back(GradedPolynomial::constant(target_, 1));
      cache.push_back(images_[i]);
    }
    while (cache.size() <= e) cache.push_back(mul(cache.back(), images_[i]));
    return cache[e];
  };

  GradedPolynomial result(target_);
  for (const auto& [m, c] : p.terms()) {
    GradedPolynomial term = GradedPolynomial::constant(target_, c);
    for (std::size_t i = 0; i < m.exps.size() && !term.is_zero(); ++i)
      if (m.exps[i]) term = mul(term, power_of(i, m.exps[i]));
    result += term;
  }
  return result;
}

RingMorphism RingMorphism::then(const RingMorphism& next) const {
  if (!same_ring(target_, next.source_)) throw PreconditionError("morphisms do not compose");
  std::vector<GradedPolynomial> imgs;
  imgs.reserve(images_.size());
  for (const auto& img : images_) imgs.push_back(next.apply(img));
  return RingMorphism(source_, next.target_, std::move(imgs));
}

GradedPolynomial apply_morphism(const RingMorphism& m, const GradedPolynomial& p) { return m.apply(p); }

GradedPolynomial substitute(const GradedPolynomial& p,
                            const std::map<std::string, GradedPolynomial>& values) {
  return RingMorphism::by_names(p.ring(), p.ring(), values).apply(p);
}

}  // namespace fracchern
