#pragma once

// Free suspension: a degree -1 derivation H*(X) -> H*(LX) given on generators.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fracchern/gcring.hpp"
#include "fracchern/spaces.hpp"

namespace fracchern {

class DerivationTable {
 public:
  // values: even source generator -> polynomial over target of degree deg-1.
  // Generators left out have no value; free_suspend refuses them.
  DerivationTable(Ring source, Ring target, std::map<std::string, GradedPolynomial> values);

  const Ring& source() const { return source_; }
  const Ring& target() const { return target_; }
  // p*: the identity on generator names.
  const RingMorphism& embed() const { return embed_; }
  const std::map<std::string, GradedPolynomial>& values() const { return values_; }
  const GradedPolynomial* value(const std::string& name) const;

 private:
  Ring source_;
  Ring target_;
  RingMorphism embed_;
  std::map<std::string, GradedPolynomial> values_;
};

// Leibniz extension: nu(xy) = nu(x) y + x nu(y) for even x, y.
GradedPolynomial free_suspend(const DerivationTable& table, const GradedPolynomial& p);

struct NaturalityEntry {
  std::string label;     // generator name or sampled monomial
  GradedPolynomial lhs;  // nu_tgt(f*(x))
  GradedPolynomial rhs;  // Lf*(nu_src(x))
  bool equal;
};

struct NaturalityReport {
  std::vector<NaturalityEntry> generators;
  std::vector<NaturalityEntry> samples;
  // generators with no nu value, or whose image needs one the target table lacks
  std::vector<std::string> skipped;

  bool natural() const;
};

// f: pullback from nu_src.source() to nu_tgt.source(); Lf: pullback from
// nu_src.target() to nu_tgt.target(). Checks nu o f* = Lf* o nu.
NaturalityReport naturality_check(const RingMorphism& f, const RingMorphism& Lf,
                                  const DerivationTable& nu_src, const DerivationTable& nu_tgt,
                                  unsigned sample_count = 16, std::uint32_t seed = 1);

// Recover the table on f's target from naturality: whenever f*(x) = lambda*y + R
// with R free of y and nu(R) already known, nu(y) = (Lf*(nu(x)) - nu(R)) / lambda.
// Generators that cannot be reached this way are left without a value.
DerivationTable solve_by_naturality(const RingMorphism& f, const RingMorphism& Lf,
                                    const DerivationTable& nu_src);

// Tables for BU1, BUn, BU1xBUn, BUn_l, BUnQ, BSUnQ and BSpinc. Values are
// given for the low-degree classes only (c1, c2 and their relatives).
DerivationTable builtin_table(Space space, int n, int l, int degree_cap);

}  // namespace fracchern
