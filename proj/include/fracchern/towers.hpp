#pragma once

// Generator-level cohomology morphisms of the relative Whitehead towers,
// obstruction classes and the groups that count lifts.

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fracchern/descriptor.hpp"
#include "fracchern/gcring.hpp"
#include "fracchern/spaces.hpp"
#include "fracchern/transgression.hpp"

namespace fracchern {

enum class MorphismName {
  phi,
  phi2,
  phi3,
  xi2,
  xi3,
  Lphi,
  Lphi2,
  Bi2l,
  Bi3l,
  Biota2l,
  BhatLi2l,
  Biota3l,
  BLi2l,
  Br,
  BLr,
  Brho_s,
  BLrho_s,
  Bmu_s,
  Bepsilon,
};

const std::vector<MorphismName>& all_morphisms();
std::string_view to_string(MorphismName name);
MorphismName parse_morphism(std::string_view name);

// A map of spaces `from -> to` and its pullback H*(to) -> H*(from).
struct MorphismTable {
  MorphismName name;
  Space from;
  Space to;
  RingMorphism pullback;
};

class TowerRegistry {
 public:
  // The cap is raised to max(cap, 2n, 4) so that all generators fit.
  TowerRegistry(int n, int l, int degree_cap = 12);

  int n() const { return n_; }
  int l() const { return l_; }
  int s() const { return n_ / l_; }
  int degree_cap() const { return cap_; }

  const Ring& ring(Space space) const;
  const MorphismTable& morphism(MorphismName name) const;
  const DerivationTable& nu(Space space) const;
  bool has_nu(Space space) const { return nu_.count(space) != 0; }

  GradedPolynomial parse(Space space, std::string_view text) const;

 private:
  int n_, l_, cap_;
  std::map<Space, Ring> rings_;
  std::map<MorphismName, MorphismTable> morphisms_;
  std::map<Space, DerivationTable> nu_;

  void add(MorphismName name, Space from, Space to, const std::map<std::string, GradedPolynomial>& images);
};

MorphismTable builtin_morphism(MorphismName name, int n, int l, int degree_cap = 12);

// phi*(c_k^Q) = sum_i (-1/l)^i C(n-k+i, i) g^i c_{k-i}, over BU1xBUn.
GradedPolynomial phi_pullback(const TowerRegistry& reg, int k);
GradedPolynomial phi_pullback(int n, int l, int k);
// phi_2*(c_k^Q) for k >= 2, over BUn_l.
GradedPolynomial phi2_pullback(const TowerRegistry& reg, int k);
GradedPolynomial phi2_pullback(int n, int l, int k);

enum class Xi2Class { c1Q, z2Q };

// Table value, checked against xi2_pipeline (InternalError on disagreement).
GradedPolynomial xi2_pullback(const TowerRegistry& reg, Xi2Class which);
// Recomputation through nu: Biota2l*(nu(phi*(c2Q)) - (z1 - s h)(c1 - s g)).
GradedPolynomial xi2_pipeline(const TowerRegistry& reg, Xi2Class which);

struct LoopClassRoutes {
  GradedPolynomial table;
  GradedPolynomial via_naturality;    // nu_{BUn_l}(phi2*(c2Q))
  GradedPolynomial via_factorization; // BhatLi2l*(xi2*(z2Q))
  bool agree() const { return table == via_naturality && table == via_factorization; }
};

LoopClassRoutes lphi2_z2_routes(const TowerRegistry& reg);
GradedPolynomial lphi2_z2(const TowerRegistry& reg);

enum class Level { fracSU, fracU6, loopU, loopSU };
std::string_view to_string(Level level);
Level parse_level(std::string_view name);

struct ObstructionPair {
  Level level;
  GradedPolynomial upstairs;    // over ringY or ringLY
  GradedPolynomial downstairs;  // over ringM or ringLM
  bool vanishes;
  // pi*(downstairs) == upstairs, when pi* (or Lpi*) is known
  std::optional<bool> compatible;
};

ObstructionPair obstruction(Level level, const BundleDescriptor& d);

struct ConsequenceCheck {
  std::string identity;
  GradedPolynomial residual;  // lhs - rhs
  bool passed;
};

std::vector<ConsequenceCheck> lift_consequences(Level level, const BundleDescriptor& d);

AbelianGroupDesc count_structures(Level level, const std::map<int, AbelianGroupDesc>& hM,
                                  const std::map<int, AbelianGroupDesc>* hLM = nullptr);

enum class TransgressionStep { fracSU_to_loopU, fracU6_to_loopSU };
std::string_view to_string(TransgressionStep step);
TransgressionStep parse_transgression_step(std::string_view name);

struct TransgressionReport {
  ObstructionPair base;
  ObstructionPair loop;
  GradedPolynomial nu_upstairs;
  GradedPolynomial nu_downstairs;
  bool upstairs_equal;
  bool downstairs_equal;
  bool equal() const { return upstairs_equal && downstairs_equal; }
};

TransgressionReport transgress_obstruction(TransgressionStep step, const BundleDescriptor& d);

}  // namespace fracchern
