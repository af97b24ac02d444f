#pragma once

#include "qch/mat.hpp"

namespace qch {

struct SmithOptions {
  /// Enforce the divisibility chain d1 | d2 | ... and positive diagonal.
  /// When false the result is merely diagonal (enough for kernel extraction).
  bool canonical = true;
  bool want_U = false;
  bool want_Uinv = false;
  bool want_V = false;
  bool want_Vinv = false;
  /// When non-zero, keep work-matrix entries reduced into (-R/2, R/2].
  /// Only valid when the column lattice of M contains R * Z^rows: each
  /// reduction then amounts to adjoining a lattice element as an extra
  /// column, so D and the row transforms U, Uinv stay exact while V is
  /// meaningless (requesting V/Vinv with reduce_mod throws). A diagonal
  /// entry of 0 within the first `rank` positions cannot occur; entries
  /// reported as 0 beyond the reduced rank stand for the factor R.
  Int reduce_mod = 0;
};

/// U * M * V = D with U, V unimodular and D diagonal.
struct SmithForm {
  IMat D;
  IMat U, Uinv, V, Vinv;
  std::size_t rank = 0;

  IVec diag() const {
    std::size_t n = std::min(D.rows(), D.cols());
    IVec d(n);
    for (std::size_t i = 0; i < n; ++i) d[i] = D(i, i);
    return d;
  }
};

/// Smith normal form by exact integer elimination.
///
/// Pivot rule (pinned for deterministic output): smallest-magnitude non-zero
/// entry of the remaining submatrix, ties broken by lowest (row, col) index
/// in row-major scan order.
SmithForm smith_normal_form(IMat m, const SmithOptions& opts = {});

}  // namespace qch
