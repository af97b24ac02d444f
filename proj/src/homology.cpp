#include "qch/homology.hpp"

#include "qch/snf.hpp"
#include "qch/zmod.hpp"

#include <numeric>
#include <stdexcept>

namespace qch {

namespace {

// lcm of the moduli if it fits comfortably in a machine word, else 0.
long small_lcm(const IVec& moduli) {
  Int l = 1;
  for (const auto& mu : moduli) {
    l = lcm(l, mu);
    if (l > (1L << 20)) return 0;
  }
  return l.get_si();
}

QVec apply_q(const QMat& m, const QVec& v) {
  QVec out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Rat acc = 0;
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (m(i, j) != 0 && v[j] != 0) acc += m(i, j) * v[j];
    out[i] = acc;
  }
  return out;
}

QVec to_rational(const IVec& v) {
  QVec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = Rat(v[i]);
  return out;
}

IMat diag_matrix(const IVec& d) {
  IMat m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

Int diag_at(const SmithForm& s, std::size_t j) {
  if (j < s.D.rows() && j < s.D.cols()) return s.D(j, j);
  return 0;
}

// Basis of Z = {x : d_out x = 0 mod moduli_out} as columns of (K, Kinv).
void kernel_basis(const IMat& d_out, const IVec& moduli_out, std::size_t nm, QMat& k,
                  QMat& kinv) {
  if (d_out.rows() == 0) {
    k = QMat::identity(nm);
    kinv = QMat::identity(nm);
    return;
  }

  // Machine-word path: echelonize the rows modulo L = lcm(moduli) and read
  // the kernel lattice off the triangular row basis. This avoids integer
  // entry growth entirely, which matters on the large cochain matrices.
  if (long l = small_lcm(moduli_out)) {
    try {
      HowellBasis hb(nm, l);
      std::vector<long> row(nm);
      for (std::size_t i = 0; i < d_out.rows(); ++i) {
        long mu = moduli_out[i].get_si();
        long scale = l / mu;
        const Int* src = d_out.row_ptr(i);
        bool nonzero = false;
        for (std::size_t j = 0; j < nm; ++j) {
          long e = static_cast<long>(mpz_fdiv_ui(src[j].get_mpz_t(), mu)) * scale % l;
          row[j] = e;
          if (e) nonzero = true;
        }
        if (nonzero) hb.add_generator(row);
      }
      hb.finalize();
      kernel_from_howell(hb, k, kinv);
      return;
    } catch (const std::domain_error&) {
      // fall through to the exact integer paths
    }
  }

  bool constant = true;
  for (const auto& mu : moduli_out)
    if (mu != moduli_out[0]) constant = false;

  if (constant) {
    // d_out x = 0 mod d  <=>  (in SNF coordinates z = V^{-1} x)  diag_j z_j = 0 mod d,
    // so Z has basis V . diag(d / gcd(diag_j, d)).
    const Int& d = moduli_out[0];
    SmithOptions opt;
    opt.canonical = false;
    opt.want_V = opt.want_Vinv = true;
    auto snf = smith_normal_form(d_out, opt);
    k = QMat(nm, nm);
    kinv = QMat(nm, nm);
    for (std::size_t j = 0; j < nm; ++j) {
      Int g = gcd(diag_at(snf, j), d);
      Int mult = d / g;
      for (std::size_t i = 0; i < nm; ++i) {
        k(i, j) = Rat(snf.V(i, j) * mult);
        Rat r(snf.Vinv(j, i), mult);
        r.canonicalize();
        kinv(j, i) = r;
      }
    }
    return;
  }

  // Mixed moduli: Z is the projection of ker [d_out | -diag(moduli_out)].
  IMat lam = diag_matrix(moduli_out);
  for (std::size_t i = 0; i < lam.rows(); ++i) lam(i, i) = -lam(i, i);
  IMat combined = d_out.hcat(lam);
  SmithOptions opt;
  opt.canonical = false;
  opt.want_V = true;
  auto snf = smith_normal_form(combined, opt);
  std::vector<std::size_t> kernel_cols;
  for (std::size_t j = 0; j < combined.cols(); ++j)
    if (diag_at(snf, j) == 0) kernel_cols.push_back(j);
  IMat gen(nm, kernel_cols.size());
  for (std::size_t c = 0; c < kernel_cols.size(); ++c)
    for (std::size_t i = 0; i < nm; ++i) gen(i, c) = snf.V(i, kernel_cols[c]);

  // Lattice basis from the generating set: im(gen) = Uinv . im(D).
  SmithOptions opt2;
  opt2.canonical = false;
  opt2.want_Uinv = true;
  auto snf2 = smith_normal_form(gen, opt2);
  if (snf2.rank != nm)
    throw std::logic_error("kernel_basis: kernel lattice is not full rank");
  IMat basis(nm, nm);
  for (std::size_t j = 0; j < nm; ++j)
    for (std::size_t i = 0; i < nm; ++i) basis(i, j) = snf2.Uinv(i, j) * snf2.D(j, j);
  k = to_rational(basis);
  kinv = inverse(k);
}

}  // namespace

QuotientPresentation homology_of_pair(const IMat& d_out, const IMat& d_in,
                                      const IVec& moduli_out, const IVec& moduli_mid,
                                      const IVec& moduli_in) {
  const std::size_t nm = d_out.cols();
  if (moduli_mid.size() != nm || moduli_out.size() != d_out.rows())
    throw std::invalid_argument("homology_of_pair: moduli shape mismatch");
  if (d_in.cols() > 0) {
    if (d_in.rows() != nm || moduli_in.size() != d_in.cols())
      throw std::invalid_argument("homology_of_pair: d_in shape mismatch");
    IMat comp = d_out * d_in;
    for (std::size_t i = 0; i < comp.rows(); ++i)
      for (std::size_t j = 0; j < comp.cols(); ++j)
        if (comp(i, j) % moduli_out[i] != 0)
          throw std::domain_error("homology_of_pair: d_out . d_in != 0");
  }

  QuotientPresentation out;
  out.moduli_ = moduli_mid;
  if (nm == 0) return out;

  kernel_basis(d_out, moduli_out, nm, out.kbasis_, out.kinv_);

  // Relations: image of d_in plus the coefficient torsion lattice.
  IMat relations = d_in.cols() > 0 ? d_in.hcat(diag_matrix(moduli_mid))
                                   : diag_matrix(moduli_mid);
  QMat yq(nm, relations.cols());
  for (std::size_t c = 0; c < relations.cols(); ++c) {
    auto coords = apply_q(out.kinv_, to_rational(relations.col(c)));
    for (std::size_t i = 0; i < nm; ++i) yq(i, c) = coords[i];
  }
  IMat y = to_integral(yq);

  SmithOptions opt;
  opt.canonical = true;
  opt.want_U = opt.want_Uinv = true;
  // The relation lattice contains lcm(moduli) Z^nm (torsion columns composed
  // with the integral kernel basis), so entries may be kept reduced.
  Int lmid = 1;
  for (const auto& mu : moduli_mid) lmid = lcm(lmid, mu);
  opt.reduce_mod = lmid;
  auto snf = smith_normal_form(y, opt);
  out.uy_ = snf.U;
  out.factors_.resize(nm);
  for (std::size_t i = 0; i < nm; ++i) {
    out.factors_[i] = diag_at(snf, i);
    if (out.factors_[i] == 0) out.factors_[i] = lmid;
  }

  for (std::size_t i = 0; i < nm; ++i) {
    const Int& f = out.factors_[i];
    if (f == 1) continue;
    out.gen_pos_.push_back(i);
    out.gen_orders_.push_back(f);
    if (f == 0)
      out.pres_.free_rank++;
    else
      out.pres_.torsion.push_back(f);
    // Generator in ambient coordinates: K . (column i of UY^{-1}).
    QVec col(nm);
    for (std::size_t r = 0; r < nm; ++r) col[r] = Rat(snf.Uinv(r, i));
    QVec g = apply_q(out.kbasis_, col);
    IVec gi(nm);
    for (std::size_t r = 0; r < nm; ++r) {
      if (g[r].get_den() != 1) throw std::logic_error("homology_of_pair: non-integral generator");
      gi[r] = g[r].get_num() % moduli_mid[r];
      if (gi[r] < 0) gi[r] += moduli_mid[r];
    }
    out.gens_.push_back(std::move(gi));
  }
  return out;
}

std::optional<IVec> QuotientPresentation::express(const IVec& kernel_vec) const {
  if (kernel_vec.size() != moduli_.size())
    throw std::invalid_argument("express: size mismatch");
  if (moduli_.empty()) return IVec{};
  QVec alpha = apply_q(kinv_, to_rational(kernel_vec));
  for (const auto& a : alpha)
    if (a.get_den() != 1) return std::nullopt;  // not in the kernel lattice
  IVec ai(alpha.size());
  for (std::size_t i = 0; i < alpha.size(); ++i) ai[i] = alpha[i].get_num();
  IVec w = uy_.apply(ai);
  IVec coords(gen_pos_.size());
  for (std::size_t t = 0; t < gen_pos_.size(); ++t) {
    const Int& f = factors_[gen_pos_[t]];
    coords[t] = w[gen_pos_[t]];
    if (f > 0) {
      coords[t] %= f;
      if (coords[t] < 0) coords[t] += f;
    }
  }
  return coords;
}

std::optional<IVec> solve_integer(const IMat& m, const IVec& v) {
  if (v.size() != m.rows()) throw std::invalid_argument("solve_integer: size mismatch");
  SmithOptions opt;
  opt.canonical = false;
  opt.want_U = opt.want_V = true;
  auto snf = smith_normal_form(m, opt);
  IVec uv = snf.U.apply(v);
  IVec w(m.cols(), Int(0));
  const std::size_t steps = std::min(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Int d = i < steps ? snf.D(i, i) : Int(0);
    if (d == 0) {
      if (uv[i] != 0) return std::nullopt;
    } else {
      if (uv[i] % d != 0) return std::nullopt;
      w[i] = uv[i] / d;
    }
  }
  return snf.V.apply(w);
}

std::optional<IVec> solve_mod(const IMat& m, const IVec& v, const IVec& moduli_out,
                              const IVec& moduli_in) {
  // Machine-word path: express v over the column lattice of M modulo
  // L = lcm(moduli) with generator tracking; the tracked coefficients are a
  // witness, exact modulo L.
  if (long l = small_lcm(moduli_out)) {
    HowellBasis hb(m.rows(), l, true);
    std::vector<long> col(m.rows());
    std::vector<long> scale(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) scale[i] = l / moduli_out[i].get_si();
    for (std::size_t j = 0; j < m.cols(); ++j) {
      for (std::size_t i = 0; i < m.rows(); ++i)
        col[i] = static_cast<long>(
                     mpz_fdiv_ui(m(i, j).get_mpz_t(), moduli_out[i].get_si())) *
                 scale[i] % l;
      hb.add_generator(col);
    }
    hb.finalize();
    std::vector<long> target(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
      target[i] = static_cast<long>(
                      mpz_fdiv_ui(v[i].get_mpz_t(), moduli_out[i].get_si())) *
                  scale[i] % l;
    auto expr = hb.express(target);
    if (!expr) return std::nullopt;
    IVec x(m.cols());
    for (std::size_t j = 0; j < m.cols(); ++j) {
      x[j] = (*expr)[j] % moduli_in[j];
      if (x[j] < 0) x[j] += moduli_in[j];
    }
    return x;
  }

  IMat lam(m.rows(), moduli_out.size());
  for (std::size_t i = 0; i < moduli_out.size(); ++i) lam(i, i) = moduli_out[i];
  auto sol = solve_integer(m.hcat(lam), v);
  if (!sol) return std::nullopt;
  IVec x(m.cols());
  for (std::size_t j = 0; j < m.cols(); ++j) {
    x[j] = (*sol)[j] % moduli_in[j];
    if (x[j] < 0) x[j] += moduli_in[j];
  }
  return x;
}

}  // namespace qch
