#pragma once

// Truncated graded-commutative polynomial rings over Q.

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "fracchern/rational.hpp"

namespace fracchern {

struct Generator {
  std::string name;
  int degree = 0;

  bool odd() const { return degree % 2 != 0; }
  bool operator==(const Generator&) const = default;
};

class RingPresentation {
 public:
  RingPresentation(std::vector<Generator> generators, int degree_cap);

  const std::vector<Generator>& generators() const { return gens_; }
  const Generator& generator(std::size_t i) const { return gens_.at(i); }
  std::size_t size() const { return gens_.size(); }
  int degree_cap() const { return cap_; }

  std::optional<std::size_t> index_of(std::string_view name) const;
  // Throws PreconditionError when the name is unknown.
  std::size_t require(std::string_view name) const;
  bool has(std::string_view name) const { return index_of(name).has_value(); }

  bool operator==(const RingPresentation& other) const {
    return cap_ == other.cap_ && gens_ == other.gens_;
  }

  std::string describe() const;

 private:
  std::vector<Generator> gens_;
  int cap_;
  std::unordered_map<std::string, std::size_t> index_;
};

using Ring = std::shared_ptr<const RingPresentation>;

Ring make_ring(std::vector<Generator> generators, int degree_cap);
bool same_ring(const Ring& a, const Ring& b);

// Exponent vector plus its total (weighted) degree. Ordering: degree first,
// then exponents lexicographically in declared generator order.
struct Monomial {
  int degree = 0;
  std::vector<std::uint16_t> exps;

  auto operator<=>(const Monomial&) const = default;
  bool operator==(const Monomial&) const = default;
};

class GradedPolynomial {
 public:
  using Terms = std::map<Monomial, Rational>;

  explicit GradedPolynomial(Ring ring);

  static GradedPolynomial constant(Ring ring, const Rational& c);
  static GradedPolynomial generator(Ring ring, std::size_t index);
  static GradedPolynomial generator(Ring ring, std::string_view name);
  static GradedPolynomial monomial(Ring ring, Monomial m, const Rational& c);

  const Ring& ring() const { return ring_; }
  const Terms& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_integral() const;
  bool is_constant() const;
  Rational constant_term() const;
  // Degree if all terms share one degree; nullopt for 0 and mixed polynomials.
  std::optional<int> homogeneous_degree() const;
  bool is_homogeneous() const { return is_zero() || homogeneous_degree().has_value(); }
  bool uses_generator(std::size_t index) const;

  // Adds c*m, dropping m if it lies above the cap. Not sign-aware: m must
  // already be a normal-form monomial.
  void add_term(const Monomial& m, const Rational& c);

  GradedPolynomial& operator+=(const GradedPolynomial& other);
  GradedPolynomial& operator-=(const GradedPolynomial& other);
  GradedPolynomial& operator*=(const Rational& c);

  bool operator==(const GradedPolynomial& other) const;

  std::string str() const;

 private:
  Ring ring_;
  Terms terms_;
};

GradedPolynomial add(const GradedPolynomial& p, const GradedPolynomial& q);
GradedPolynomial sub(const GradedPolynomial& p, const GradedPolynomial& q);
GradedPolynomial mul(const GradedPolynomial& p, const GradedPolynomial& q);
GradedPolynomial scale(const GradedPolynomial& p, const Rational& c);
GradedPolynomial power(const GradedPolynomial& p, unsigned k);
GradedPolynomial homogeneous_part(const GradedPolynomial& p, int d);

GradedPolynomial operator+(const GradedPolynomial& p, const GradedPolynomial& q);
GradedPolynomial operator-(const GradedPolynomial& p, const GradedPolynomial& q);
GradedPolynomial operator-(const GradedPolynomial& p);
GradedPolynomial operator*(const GradedPolynomial& p, const GradedPolynomial& q);
GradedPolynomial operator*(const Rational& c, const GradedPolynomial& p);
GradedPolynomial operator*(const GradedPolynomial& p, const Rational& c);

// Product of two normal-form monomials: the resulting monomial and Koszul
// sign, or nullopt when it is zero (odd square) or above the cap.
std::optional<std::pair<Monomial, int>> multiply_monomials(const RingPresentation& ring,
                                                           const Monomial& x, const Monomial& y);

std::string render(const GradedPolynomial& p);

class RingMorphism {
 public:
  // images[i] is the image of source generator i, over target.
  RingMorphism(Ring source, Ring target, std::vector<GradedPolynomial> images);

  // Every source generator must be named; unknown names are an error.
  static RingMorphism from_images(Ring source, Ring target,
                                  const std::map<std::string, GradedPolynomial>& images);
  // Generators not mentioned map to the same-named target generator, or to 0
  // when the target lacks it and its degree exceeds the target cap.
  static RingMorphism by_names(Ring source, Ring target,
                               const std::map<std::string, GradedPolynomial>& overrides = {});
  static RingMorphism identity(Ring ring);

  const Ring& source() const { return source_; }
  const Ring& target() const { return target_; }
  const GradedPolynomial& image(std::size_t i) const { return images_.at(i); }
  const GradedPolynomial& image(std::string_view name) const;

  GradedPolynomial apply(const GradedPolynomial& p) const;
  GradedPolynomial operator()(const GradedPolynomial& p) const { return apply(p); }

  // (next . this): first this, then next.
  RingMorphism then(const RingMorphism& next) const;

 private:
  Ring source_;
  Ring target_;
  std::vector<GradedPolynomial> images_;
};

GradedPolynomial apply_morphism(const RingMorphism& m, const GradedPolynomial& p);

// Substitute some generators of p's ring by polynomials over the same ring.
GradedPolynomial substitute(const GradedPolynomial& p,
                            const std::map<std::string, GradedPolynomial>& values);

}  // namespace fracchern
