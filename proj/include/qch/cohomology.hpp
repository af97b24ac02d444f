#pragma once

#include "qch/abelian.hpp"
#include "qch/homology.hpp"
#include "qch/quandle.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qch {

/// Ordered basis of Gamma^n(X, A): non-degenerate n-tuples (no adjacent equal
/// entries) in lexicographic order.
class CochainBasis {
public:
  CochainBasis() = default;
  CochainBasis(const QuandleTable& x, int degree);

  int degree() const { return degree_; }
  std::size_t q() const { return q_; }
  std::size_t size() const { return tuples_.size(); }
  const std::vector<std::vector<int>>& tuples() const { return tuples_; }
  const std::vector<int>& tuple(std::size_t i) const { return tuples_[i]; }

  /// Index of a tuple, or -1 if degenerate.
  long index_of(const std::vector<int>& t) const;

private:
  int degree_ = 0;
  std::size_t q_ = 0;
  std::vector<std::vector<int>> tuples_;
  std::vector<long> lookup_;  // dense lookup keyed by base-q encoding
};

/// A cochain in Gamma^n(X, A) as a flat integer vector: coefficient
/// coordinates of tuple i occupy entries [i*m, (i+1)*m).
using CochainVec = IVec;

/// Quandle-module coefficients: families eta_{x,y} (automorphisms of A) and
/// tau_{x,y} (endomorphisms of A) subject to the four module axioms.
class QuandleModuleSpec {
public:
  QuandleModuleSpec() = default;
  QuandleModuleSpec(IVec factors, std::vector<IMat> eta, std::vector<IMat> tau,
                    std::size_t q);

  const IVec& factors() const { return factors_; }
  std::size_t rank() const { return factors_.size(); }
  std::size_t q() const { return q_; }
  const IMat& eta(int x, int y) const { return eta_[x * q_ + y]; }
  const IMat& tau(int x, int y) const { return tau_[x * q_ + y]; }

  /// Checks the four X-module axioms over A; returns a description of the
  /// first violated identity, or nullopt if valid.
  std::optional<std::string> validate(const QuandleTable& x) const;

  /// The constant module eta = T, tau = 1 - T of an Alexander coefficient.
  static QuandleModuleSpec constant(const CoefficientModule& a, std::size_t q);

private:
  IVec factors_;
  std::vector<IMat> eta_, tau_;
  std::size_t q_ = 0;
};

/// Matrix of the twisted differential delta^n : Gamma^n -> Gamma^{n+1} in the
/// CochainBasis ordering, as an integer lift (reduce mod A where needed).
IMat differential_matrix(const QuandleTable& x, const CoefficientModule& a, int n);

/// Matrix of the quandle-module differential (throws if the module is invalid).
IMat generalized_differential_matrix(const QuandleTable& x, const QuandleModuleSpec& m,
                                     int n);

/// Cohomology group with representative cocycles.
struct CohomologyResult {
  QuotientPresentation h;
  CochainBasis basis;        // degree-n basis
  CochainBasis basis_below;  // degree n-1 (empty when n = 1)
  IVec factors;              // coefficient factors
  const Presentation& presentation() const { return h.presentation(); }
  const std::vector<IVec>& generators() const { return h.generators(); }
};

CohomologyResult cohomology_group(const QuandleTable& x, const CoefficientModule& a, int n);
CohomologyResult cohomology_group(const QuandleTable& x, const QuandleModuleSpec& m, int n);

/// True iff the flat cochain vector is a cocycle (delta^n phi = 0 over A).
bool is_cocycle(const QuandleTable& x, const CoefficientModule& a, int n,
                const CochainVec& phi);

/// Witness g with delta^{n-1} g = phi, or nullopt (verified non-member).
/// Throws std::domain_error if phi is not a cocycle.
std::optional<CochainVec> is_coboundary(const QuandleTable& x, const CoefficientModule& a,
                                        int n, const CochainVec& phi);

/// Matrix on cohomology induced by a quandle hom f : Y -> X (pullback) composed
/// with a coefficient hom given by `coeff_map` : A -> B. `src` must be the
/// cohomology of (X, A) and `dst` the cohomology of (Y, B); the map goes
/// src -> dst. Entries are reduced modulo the target generator orders.
IMat induced_map(const std::vector<int>& f, const QuandleTable& x, const QuandleTable& y,
                 const CohomologyResult& src, const CohomologyResult& dst,
                 const IMat& coeff_map);

/// Pull a degree-n cochain on X back along f : Y -> X and change coefficients.
CochainVec pullback_cochain(const std::vector<int>& f, const CochainBasis& src_basis,
                            const CochainBasis& dst_basis, const IMat& coeff_map,
                            const IVec& dst_factors, const CochainVec& c);

/// Evaluate the explicit three-variable 2-cocycle condition
///   T phi(x1,x2) + phi(x1*x2,x3) = T phi(x1,x3) + (1-T) phi(x2,x3) + phi(x1*x3,x2*x3)
/// on every non-degenerate triple; returns a violating triple if any.
std::optional<std::array<int, 3>> check_2cocycle_condition(const QuandleTable& x,
                                                           const CoefficientModule& a,
                                                           const CochainBasis& basis2,
                                                           const CochainVec& phi);

}  // namespace qch
