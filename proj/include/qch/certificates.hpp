#pragma once

#include "qch/mat.hpp"

#include <string>
#include <vector>

namespace qch {

/// Alexander quandle on Q^dim: x*y = Sx + (I-S)y.
struct LinearQuandle {
  QMat s;
  std::size_t dim() const { return s.rows(); }
  QVec op(const QVec& x, const QVec& y) const;
};

/// Formal A-linear combination of point tuples: each term is an m x m
/// coefficient matrix times a tuple of points in Q^dim.
struct ChainTerm {
  QMat coef;
  std::vector<QVec> points;
};
struct FormalChain {
  int degree = 0;
  std::vector<ChainTerm> terms;

  /// Sums coefficients of identical point tuples and drops zero terms.
  FormalChain combined() const;
  bool is_zero() const { return combined().terms.empty(); }
  FormalChain operator+(const FormalChain& o) const;
};

/// Twisted boundary of a degree-2 chain: per generator,
/// d<u,v> = T<u> + (I-T)<v> - <u*v>, coefficients multiplying on the left.
FormalChain boundary2_twisted(const FormalChain& w, const LinearQuandle& x, const QMat& t);

/// Quandle-module boundary with constant families eta, tau:
/// d<u,v> = eta<u> + tau<v> - <u*v>.
FormalChain boundary2_module(const FormalChain& w, const LinearQuandle& x, const QMat& eta,
                             const QMat& tau);

/// Kronecker evaluation of phi(x1,x2) = C(x1-x2) on a degree-2 chain.
QVec pairing(const QMat& c, const FormalChain& w);

enum class Verdict { NonTrivial, Inconclusive, Rejected };
std::string to_string(Verdict v);

struct IdentityCheck {
  std::string name;
  bool holds = false;
};

struct Certificate {
  std::vector<IdentityCheck> identities;
  FormalChain chain;     // the candidate 2-cycle w
  FormalChain boundary;  // its boundary, combined (empty iff zero)
  QVec pairing_value;
  Verdict verdict = Verdict::Inconclusive;
  std::string detail;
};

enum class LinearMode { SpectralIdentity, NegativeIdentityT };

/// Non-triviality certificates for H^2 of (Q^n, S) with coefficients
/// (Q^m, T) and the cocycle C(x1-x2).
///
/// SpectralIdentity requires S^2-S+1 = T^2-T+1 = 0 and pairs to
/// (C - TCS)(u0 - v0); NegativeIdentityT requires T = -I and S u0 = -u0
/// (v0 is ignored, u0 found as an exact eigenvector if zero) and pairs to
/// C(2 u0).
Certificate certify_linear(const QMat& s, const QMat& t, const QMat& c, LinearMode mode,
                           const QVec& u0, const QVec& v0);

/// Higher-degree alternating certificate: w = sum_{i=0}^{k} T^i <u_i, v_i>
/// built from the parity closed forms, requiring
/// sum_{i=0}^{k+1} (-S)^i = 0 = sum_{i=0}^{k+1} (-T)^i. The pairing is
/// evaluated both term-by-term and in closed form; both must agree exactly.
Certificate certify_appendix(const QMat& s, const QMat& t, const QMat& c, int k,
                             const QVec& u0, const QVec& v0);

/// Conjugation-type module certificate: constant module eta = -I, tau = 2I on
/// the fixed block matrix [[-I,0],[C1,-I]], chain
/// w = <(E,x),(E,0)> - <(E,-x),(E,0)>, cocycle value C1(2x). Non-trivial iff
/// C1 x != 0.
Certificate certify_module_example(const QMat& c1, const QVec& x);

/// Dimension and basis of {F : FS = TF} (m x n matrices), the linear part of
/// H^1 for indecomposable linear Alexander quandles.
struct SylvesterResult {
  std::size_t dimension = 0;
  std::vector<QMat> basis;
};
SylvesterResult sylvester_h1(const QMat& s, const QMat& t);

}  // namespace qch
