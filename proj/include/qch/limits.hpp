#pragma once

#include "qch/cohomology.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qch {

struct TowerStage {
  QuandleTable x;
  CoefficientModule a;
};

/// Chain of finite quandle stages with reduction projections between
/// consecutive stages and coefficient embeddings going the other way.
struct TowerSystem {
  std::vector<TowerStage> stages;
  /// projections[n] : stage n+1 -> stage n, a surjective quandle hom.
  std::vector<std::vector<int>> projections;
  /// coeff_maps[n] : A_n -> A_{n+1}, commuting with the twists.
  std::vector<IMat> coeff_maps;

  std::size_t depth() const { return stages.size(); }
  /// First violated invariant, or nullopt.
  std::optional<std::string> validate() const;
};

/// Dihedral stages Z/p, Z/p^2, ..., constant coefficients with identity
/// coefficient maps. Throws std::domain_error unless p is an odd prime.
TowerSystem make_dihedral_tower(int p, int depth, const CoefficientModule& coeff);

/// Alexander stages (Z/p^n, u) with coefficients Z/p^n twisted by u and
/// multiplication-by-p coefficient maps. Throws if u is not a unit mod p.
TowerSystem make_alexander_tower(int p, int u, int depth);

/// Presentation of the subgroup of ⊕ Z/moduli_i generated by the columns of m
/// (modulus 0 meaning a free coordinate).
Presentation subgroup_presentation(const IMat& m, const IVec& moduli);

struct ColimitResult {
  std::vector<CohomologyResult> stages;
  std::vector<IMat> connecting;  // tau_n : H_n -> H_{n+1} in generator coordinates
  Presentation colimit;
  bool stabilized = false;
};

/// Per-stage cohomology with connecting maps, plus the truncated colimit: the
/// image K of the last connecting map if the tower has stopped moving (K equals
/// the image of the two-step composite), otherwise the full last stage with
/// stabilized = false. A depth-1 tower reports its only stage, unstabilized.
ColimitResult tower_cohomology(const TowerSystem& sys, int degree);

}  // namespace qch
