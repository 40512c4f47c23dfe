#pragma once

// Truncated q^{1/2}-series with graded-polynomial coefficients, Jacobi theta
// products and the graded Chern characters of the Witten gerbe modules.

#include <compare>
#include <map>
#include <optional>
#include <string>

#include <nlohmann/json_fwd.hpp>

#include "fracchern/descriptor.hpp"
#include "fracchern/gcring.hpp"
#include "fracchern/symroots.hpp"

namespace fracchern {

// Exponent of q counted in halves: QExponent{3} is q^{3/2}.
struct QExponent {
  int halves = 0;

  static QExponent whole(int k) { return {2 * k}; }
  // Accepts "2", "3/2", "1.5".
  static QExponent parse(const std::string& text);
  Rational value() const;
  std::string str() const;  // "0", "1/2", "3"
  auto operator<=>(const QExponent&) const = default;
};

class HalfQSeries {
 public:
  using Coefficients = std::map<QExponent, GradedPolynomial>;

  HalfQSeries(Ring ring, QExponent order);
  static HalfQSeries constant(Ring ring, QExponent order, const GradedPolynomial& c);
  static HalfQSeries one(Ring ring, QExponent order);

  const Ring& ring() const { return ring_; }
  QExponent order() const { return order_; }
  const Coefficients& coefficients() const { return coeffs_; }
  GradedPolynomial coefficient(QExponent e) const;

  // Adds c q^e; ignored above the order.
  void add_term(QExponent e, const GradedPolynomial& c);
  bool is_zero() const { return coeffs_.empty(); }
  bool operator==(const HalfQSeries& other) const;

  // One line "q^e: <polynomial>" per nonzero coefficient.
  std::string str() const;
  nlohmann::json to_json() const;

 private:
  Ring ring_;
  QExponent order_;
  Coefficients coeffs_;
};

HalfQSeries qseries_add(const HalfQSeries& f, const HalfQSeries& g);
HalfQSeries qseries_sub(const HalfQSeries& f, const HalfQSeries& g);
HalfQSeries qseries_mul(const HalfQSeries& f, const HalfQSeries& g);
// g needs a unit q^0 coefficient: nonzero constant plus a nilpotent part.
HalfQSeries qseries_div_unit(const HalfQSeries& f, const HalfQSeries& g);
HalfQSeries qseries_pow(const HalfQSeries& f, unsigned k);

// Inverse of a polynomial with nonzero constant term, through the nilpotent tail.
GradedPolynomial invert_unit(const GradedPolynomial& p);

// sum x^k / k!, which terminates under the cap. x must have no constant term.
GradedPolynomial formal_exp(const GradedPolynomial& x);

// theta2 carries the minus signs of Lambda_{-q^{v-1/2}}, theta3 the plus signs.
enum class WittenKind { theta2, theta3 };
std::string_view to_string(WittenKind kind);
WittenKind parse_witten_kind(std::string_view name);

// prod_{j>=1} (1 - q^j)(1 -+ q^{j-1/2} e^x)(1 -+ q^{j-1/2} e^{-x}) up to q^order.
HalfQSeries theta_series(WittenKind kind, const GradedPolynomial& shift, QExponent order);

enum class GchMethod { theta_product, lambda_tensor };

// GCh of Theta_kind(E) over the root ring (a, x1..xn), roots shifted by -a/l.
// lambda_tensor expands the tensor of Lambda_t(E) Lambda_t(Ebar) through
// sigma_k(e^{r_i}) and multiplies by prod (1 - q^j)^n.
HalfQSeries gch_witten(const RootModel& model, WittenKind kind, QExponent order, GchMethod method);
HalfQSeries gch_witten(const BundleDescriptor& d, WittenKind kind, QExponent order, GchMethod method,
                       int degree_cap = 8);

// Divide by theta_kind(0)^n.
HalfQSeries normalize_gch(const HalfQSeries& series, WittenKind kind, int n);

// Rewrite each coefficient in the fractional classes f_k = sigma_k(x_i - a/l).
// Throws PreconditionError when a coefficient does not descend.
HalfQSeries descend_gch(const HalfQSeries& series, const RootModel& model);

struct ModularityObstruction {
  GradedPolynomial value;  // 1/2 (f1^2 - 2 f2) over ringM
  bool vanishes;
};

ModularityObstruction modularity_obstruction(const BundleDescriptor& d);

}  // namespace fracchern
