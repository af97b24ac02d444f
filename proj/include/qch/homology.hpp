#pragma once

#include "qch/abelian.hpp"
#include "qch/mat.hpp"

#include <optional>

namespace qch {

/// ker(d_out)/im(d_in) for maps of finite abelian coefficient modules,
/// presented canonically with representative kernel vectors per generator.
///
/// Ambient coordinates are integer vectors of length d_out.cols() taken
/// modulo `moduli_mid`; d_out lands in coordinates modulo `moduli_out`.
class QuotientPresentation {
public:
  const Presentation& presentation() const { return pres_; }
  const std::vector<IVec>& generators() const { return gens_; }
  const IVec& ambient_moduli() const { return moduli_; }

  /// Coordinates of a kernel vector's class over the generators, each taken
  /// modulo the generator's order (free generators unreduced). Returns
  /// nullopt if the vector is not in the kernel lattice.
  std::optional<IVec> express(const IVec& kernel_vec) const;

  /// Orders of the reported generators (0 for free), aligned with generators().
  const IVec& generator_orders() const { return gen_orders_; }

private:
  friend QuotientPresentation homology_of_pair(const IMat&, const IMat&, const IVec&,
                                               const IVec&, const IVec&);
  Presentation pres_;
  std::vector<IVec> gens_;
  IVec gen_orders_;
  IVec moduli_;
  QMat kbasis_;    // columns span Z = {x : d_out x = 0 over the target}
  QMat kinv_;
  IMat uy_;        // row transform of the relation-matrix SNF
  IVec factors_;   // all invariant factors of the relation matrix
  std::vector<std::size_t> gen_pos_;
};

/// Homology of C^{in} --d_in--> C^{mid} --d_out--> C^{out} where each C is a
/// direct sum of Z/mu_i in the listed coordinate moduli. Verifies
/// d_out . d_in = 0 over the output module (throws std::domain_error if not).
/// d_in may have zero columns (degree-one case).
QuotientPresentation homology_of_pair(const IMat& d_out, const IMat& d_in,
                                      const IVec& moduli_out, const IVec& moduli_mid,
                                      const IVec& moduli_in);

/// Some x with M x = v modulo `moduli_out` (per output coordinate), reduced
/// modulo `moduli_in`, or nullopt when verified non-member.
std::optional<IVec> solve_mod(const IMat& m, const IVec& v, const IVec& moduli_out,
                              const IVec& moduli_in);

/// Integer solve M x = v via Smith normal form; nullopt if unsolvable.
std::optional<IVec> solve_integer(const IMat& m, const IVec& v);

}  // namespace qch
