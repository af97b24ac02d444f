#pragma once

#include "qch/mat.hpp"

#include <optional>
#include <string>

namespace qch {

/// Canonical presentation of a finitely generated abelian group:
/// free rank plus invariant factors d1 | d2 | ... (each > 1).
struct Presentation {
  long free_rank = 0;
  IVec torsion;

  bool operator==(const Presentation& o) const {
    return free_rank == o.free_rank && torsion == o.torsion;
  }
  bool trivial() const { return free_rank == 0 && torsion.empty(); }
  std::string str() const;
};

/// Finite abelian group A = ⊕_i Z/d_i together with an automorphism T,
/// giving A the Alexander quandle structure a*b = Ta + (1-T)b.
class CoefficientModule {
public:
  CoefficientModule() = default;
  /// Cyclic Z/d with T = multiplication by t.
  CoefficientModule(const Int& d, const Int& t);
  CoefficientModule(IVec factors, IMat t);

  const IVec& factors() const { return factors_; }
  const IMat& T() const { return t_; }
  std::size_t rank() const { return factors_.size(); }

  /// Number of elements; throws if it does not fit in size_t.
  std::size_t order() const;

  IVec reduce(IVec v) const;
  IVec add(const IVec& a, const IVec& b) const;
  IVec neg(const IVec& a) const;
  IVec apply_T(const IVec& a) const;
  /// a*b = Ta + (1-T)b.
  IVec quandle_op(const IVec& a, const IVec& b) const;

  std::size_t index_of(const IVec& a) const;
  IVec element(std::size_t idx) const;

  bool is_zero(const IVec& a) const;

private:
  void validate() const;

  IVec factors_;
  IMat t_;
};

/// True iff the integer matrix t is a well-defined automorphism of ⊕ Z/d_i.
bool is_automorphism_mod(const IMat& t, const IVec& factors);

/// True iff t maps ⊕ Z/src_factors to ⊕ Z/dst_factors well-definedly,
/// i.e. t * (d_j e_j) vanishes in the target for every j.
bool is_well_defined_hom(const IMat& t, const IVec& src_factors, const IVec& dst_factors);

}  // namespace qch
