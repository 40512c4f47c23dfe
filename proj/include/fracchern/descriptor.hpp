#pragma once

// Class-level model of a fractional U(n)-bundle: rings for Y and M, the
// pullback pi*, and the classes a, c_k(E), c_k^{l,a}(E), plus optional loop data.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "fracchern/gcring.hpp"
#include "fracchern/transgression.hpp"

namespace fracchern {

struct AbelianGroupDesc {
  int rank = 0;
  std::vector<int> torsion;  // entries >= 2

  AbelianGroupDesc() = default;
  AbelianGroupDesc(int rank, std::vector<int> torsion);
  bool trivial() const { return rank == 0 && torsion.empty(); }
  bool operator==(const AbelianGroupDesc&) const = default;
  // "Z^2 + Z/2", "Z", or "0"
  std::string str() const;
};

struct LoopData {
  Ring ringLY;
  Ring ringLM;
  std::optional<DerivationTable> nuY;  // ringY -> ringLY
  std::optional<DerivationTable> nuM;  // ringM -> ringLM
  std::optional<RingMorphism> Lpi_star;  // ringLM -> ringLY
  std::optional<GradedPolynomial> afrak;
  std::vector<GradedPolynomial> z;      // z1(LE), z2(LE) over ringLY
  std::vector<GradedPolynomial> zfrac;  // z1^{l,a}(LE), z2^{l,a}(LE) over ringLM
};

struct BundleDescriptor {
  int n = 0;
  int l = 0;
  Ring ringY;
  Ring ringM;
  std::optional<RingMorphism> pi_star;  // ringM -> ringY
  std::optional<GradedPolynomial> a;
  std::vector<GradedPolynomial> c;     // c_1(E).. over ringY; c[0] is c_1
  std::vector<GradedPolynomial> frac;  // c_1^{l,a}(E).. over ringM
  std::optional<LoopData> loop;
  std::map<int, AbelianGroupDesc> hM;
  std::map<int, AbelianGroupDesc> hLM;

  int s() const { return n / l; }
  void validate() const;

  // Accessors that throw PreconditionError naming the missing datum.
  const GradedPolynomial& class_a() const;
  const GradedPolynomial& chern(int k) const;
  const GradedPolynomial& fractional(int k) const;
  const RingMorphism& pi() const;
  const LoopData& loop_data() const;
  const GradedPolynomial& afrak() const;
  const GradedPolynomial& loop_chern(int k) const;      // z_k(LE)
  const GradedPolynomial& loop_fractional(int k) const;  // z_k^{l,a}(LE)
};

Ring ring_from_json(const nlohmann::json& j);
nlohmann::json ring_to_json(const RingPresentation& ring);
BundleDescriptor descriptor_from_json(const nlohmann::json& j);
BundleDescriptor load_descriptor(const std::string& path);  // "-" reads stdin

enum class SymbolicKind { generic, fracSU, fracU6 };

// Descriptor whose rings are free on the classes themselves, with pi*, the
// nu tables and the loop classes filled in consistently: the universal test
// case for each structure level.
BundleDescriptor symbolic_descriptor(int n, int l, SymbolicKind kind, int degree_cap = 12);

}  // namespace fracchern
