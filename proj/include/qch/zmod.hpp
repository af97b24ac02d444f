#pragma once

#include "qch/mat.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace qch {

/// Echelonized generating set (Howell form) of a sublattice of Z^n that
/// contains L Z^n, with all arithmetic carried out modulo L in machine words.
/// At most one stored row per pivot column; pivot values divide L after
/// finalize(). Columns without a stored row implicitly hold the row L e_p.
///
/// Optionally tracks, for every stored row, its expression as a mod-L
/// combination of the inserted generators (used to produce solve witnesses).
class HowellBasis {
public:
  HowellBasis(std::size_t n, long modulus, bool track_expressions = false);

  void add_generator(const std::vector<long>& v);
  /// Runs the closure passes and normalizes pivots to divisors of L.
  void finalize();

  std::size_t dim() const { return n_; }
  long modulus() const { return l_; }
  /// Pivot value at column p (a divisor of L; L itself for virtual rows).
  long pivot(std::size_t p) const { return rows_[p].empty() ? l_ : rows_[p][p]; }
  bool has_row(std::size_t p) const { return !rows_[p].empty(); }
  const std::vector<long>& row(std::size_t p) const { return rows_[p]; }

  /// Coefficients over the inserted generators (mod L) expressing v modulo
  /// L Z^n, or nullopt if v is not in the lattice. Requires tracking.
  std::optional<std::vector<long>> express(const std::vector<long>& v) const;

  /// True iff v lies in the lattice (membership only, no tracking needed).
  bool contains(const std::vector<long>& v) const;

private:
  bool insert(std::vector<long> v, std::vector<long> expr);

  std::size_t n_;
  long l_;
  bool track_;
  std::size_t gen_count_ = 0;
  std::vector<std::vector<long>> rows_;   // indexed by pivot column; empty = none
  std::vector<std::vector<long>> exprs_;  // parallel to rows_ when tracking
  bool finalized_ = false;
};

/// Basis K (columns, upper triangular, exact integers) of the lattice
/// {x in Z^n : <x, g> in L Z for every stored generator g}, i.e. the kernel
/// of the original row system taken modulo L, given the Howell form of the
/// row lattice. Also emits Kinv = K^{-1} = B/L. Throws std::domain_error if
/// a division is inexact (caller may fall back to a generic method).
void kernel_from_howell(const HowellBasis& h, QMat& k, QMat& kinv);

}  // namespace qch
