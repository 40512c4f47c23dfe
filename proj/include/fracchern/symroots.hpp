#pragma once

// Chern roots, elementary symmetric bases and fractional Chern classes.

#include <optional>
#include <string>
#include <vector>

#include "fracchern/gcring.hpp"

namespace fracchern {

class RootModel {
 public:
  // Ring layout: root ring (a, x1..xn, extras...), elementary ring
  // (a, e1..en, extras...). e_k with 2k above the cap are left out; they
  // vanish in the truncation anyway.
  RootModel(int n, int l, int degree_cap, std::vector<Generator> extras = {});

  int n() const { return n_; }
  int l() const { return l_; }
  int s() const { return n_ / l_; }
  int degree_cap() const { return cap_; }

  const Ring& root_ring() const { return roots_; }
  const Ring& elementary_ring() const { return elementary_; }
  // (x, f1..fn): base ring for change_trivialization.
  const Ring& trivialization_ring() const { return trivialization_; }
  // (f1..fn): target of descend_gch.
  const Ring& fractional_ring() const { return fractional_; }

  GradedPolynomial a() const;
  GradedPolynomial root(int i) const;
  GradedPolynomial shifted_root(int i) const;  // x_i - a/l
  // e_k in the elementary ring; e_0 = 1, 0 when 2k is above the cap.
  GradedPolynomial e(int k) const;
  // a in the elementary ring.
  GradedPolynomial ea() const;
  const RingMorphism& elementary_to_roots() const { return to_roots_; }
  // Index of e_k in the elementary ring, nullopt when it was left out.
  std::optional<std::size_t> e_index(int k) const;

 private:
  int n_, l_, cap_;
  Ring roots_, elementary_, trivialization_, fractional_;
  std::vector<std::optional<std::size_t>> e_index_;
  RingMorphism to_roots_;
};

struct SymmetricExpression {
  GradedPolynomial value;
  bool symmetric;
  // First adjacent transposition (i, i+1) that moves value, 1-based.
  std::optional<int> violating_transposition;

  static SymmetricExpression check(const GradedPolynomial& p, const RootModel& model);
};

// Swap x_i and x_{i+1} (1-based).
GradedPolynomial swap_roots(const GradedPolynomial& p, const RootModel& model, int i);

GradedPolynomial elementary_symmetric(int k, const RootModel& model);
// sigma_0..sigma_m of arbitrary values over one ring.
std::vector<GradedPolynomial> elementary_symmetric_all(const std::vector<GradedPolynomial>& values);
GradedPolynomial shifted_total_chern(const RootModel& model);

// Fundamental theorem of symmetric functions reduction: a and the extras are
// parameters. Throws PreconditionError for non-symmetric input.
GradedPolynomial express_in_elementary(const SymmetricExpression& p, const RootModel& model);
GradedPolynomial express_in_elementary(const GradedPolynomial& p, const RootModel& model);

GradedPolynomial fractional_chern_closed(const RootModel& model, int k);
GradedPolynomial fractional_chern_brute(const RootModel& model, int k);
// sum_i (-1/l)^i C(n-k+i, i) x^i f_{k-i} over the trivialization ring.
GradedPolynomial change_trivialization(const RootModel& model, int k);

struct SplittingReport {
  std::vector<GradedPolynomial> residuals;  // one per root x_j
  bool passed = false;
};

SplittingReport splitting_check(const RootModel& model);

// Coefficient (-1/l)^i C(n-k+i, i) shared by the pullback formulas.
Rational shift_coefficient(int n, int l, int k, int i);

}  // namespace fracchern
