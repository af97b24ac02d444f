#include "qch/snf.hpp"

namespace qch {

namespace {

struct Tracker {
  IMat m;
  bool track_u, track_uinv, track_v, track_vinv;
  Int rmod;
  IMat u, uinv, v, vinv;

  explicit Tracker(IMat mat, const SmithOptions& opts)
      : m(std::move(mat)),
        track_u(opts.want_U),
        track_uinv(opts.want_Uinv),
        track_v(opts.want_V),
        track_vinv(opts.want_Vinv),
        rmod(opts.reduce_mod) {
    if (rmod != 0 && (track_v || track_vinv))
      throw std::invalid_argument("smith_normal_form: reduce_mod cannot track V");
    if (track_u) u = IMat::identity(m.rows());
    if (track_uinv) uinv = IMat::identity(m.rows());
    if (track_v) v = IMat::identity(m.cols());
    if (track_vinv) vinv = IMat::identity(m.cols());
    if (rmod != 0)
      for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) reduce_entry(m(i, j));
  }

  void reduce_entry(Int& x) {
    if (rmod == 0) return;
    x %= rmod;
    if (2 * x > rmod)
      x -= rmod;
    else if (2 * x <= -rmod)
      x += rmod;
  }

  // row_i -= q * row_k
  void row_op(std::size_t i, std::size_t k, const Int& q, std::size_t from_col) {
    sub_mul_row(m, i, k, q, from_col);
    if (rmod != 0)
      for (std::size_t j = from_col; j < m.cols(); ++j) reduce_entry(m(i, j));
    if (track_u) sub_mul_row(u, i, k, q, 0);
    if (track_uinv) add_mul_col(uinv, k, i, q, 0);  // inverse op: col_k += q * col_i
  }

  // col_j -= q * col_k
  void col_op(std::size_t j, std::size_t k, const Int& q, std::size_t from_row) {
    sub_mul_col(m, j, k, q, from_row);
    if (rmod != 0)
      for (std::size_t i = from_row; i < m.rows(); ++i) reduce_entry(m(i, j));
    if (track_v) sub_mul_col(v, j, k, q, 0);
    if (track_vinv) add_mul_row(vinv, k, j, q, 0);  // inverse op: row_k += q * row_j
  }

  void swap_rows(std::size_t i, std::size_t k) {
    if (i == k) return;
    swap_rows_of(m, i, k);
    if (track_u) swap_rows_of(u, i, k);
    if (track_uinv) swap_cols_of(uinv, i, k);
  }

  void swap_cols(std::size_t j, std::size_t k) {
    if (j == k) return;
    swap_cols_of(m, j, k);
    if (track_v) swap_cols_of(v, j, k);
    if (track_vinv) swap_rows_of(vinv, j, k);
  }

  void negate_row(std::size_t i) {
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = -m(i, j);
    if (track_u)
      for (std::size_t j = 0; j < u.cols(); ++j) u(i, j) = -u(i, j);
    if (track_uinv)
      for (std::size_t r = 0; r < uinv.rows(); ++r) uinv(r, i) = -uinv(r, i);
  }

  void add_row(std::size_t dst, std::size_t src) {
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (m(src, j) != 0) {
        m(dst, j) += m(src, j);
        reduce_entry(m(dst, j));
      }
    if (track_u)
      for (std::size_t j = 0; j < u.cols(); ++j) u(dst, j) += u(src, j);
    if (track_uinv)
      for (std::size_t r = 0; r < uinv.rows(); ++r) uinv(r, src) -= uinv(r, dst);
  }

private:
  static void sub_mul_row(IMat& a, std::size_t i, std::size_t k, const Int& q,
                          std::size_t from_col) {
    Int* ri = a.row_ptr(i);
    const Int* rk = a.row_ptr(k);
    for (std::size_t j = from_col; j < a.cols(); ++j)
      if (mpz_sgn(rk[j].get_mpz_t()) != 0)
        mpz_submul(ri[j].get_mpz_t(), q.get_mpz_t(), rk[j].get_mpz_t());
  }
  static void add_mul_row(IMat& a, std::size_t i, std::size_t k, const Int& q,
                          std::size_t from_col) {
    Int* ri = a.row_ptr(i);
    const Int* rk = a.row_ptr(k);
    for (std::size_t j = from_col; j < a.cols(); ++j)
      if (mpz_sgn(rk[j].get_mpz_t()) != 0)
        mpz_addmul(ri[j].get_mpz_t(), q.get_mpz_t(), rk[j].get_mpz_t());
  }
  static void sub_mul_col(IMat& a, std::size_t j, std::size_t k, const Int& q,
                          std::size_t from_row) {
    for (std::size_t i = from_row; i < a.rows(); ++i)
      if (mpz_sgn(a(i, k).get_mpz_t()) != 0)
        mpz_submul(a(i, j).get_mpz_t(), q.get_mpz_t(), a(i, k).get_mpz_t());
  }
  static void add_mul_col(IMat& a, std::size_t j, std::size_t k, const Int& q,
                          std::size_t from_row) {
    for (std::size_t i = from_row; i < a.rows(); ++i)
      if (mpz_sgn(a(i, k).get_mpz_t()) != 0)
        mpz_addmul(a(i, j).get_mpz_t(), q.get_mpz_t(), a(i, k).get_mpz_t());
  }
  static void swap_rows_of(IMat& a, std::size_t i, std::size_t k) {
    for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(i, j), a(k, j));
  }
  static void swap_cols_of(IMat& a, std::size_t j, std::size_t k) {
    for (std::size_t i = 0; i < a.rows(); ++i) std::swap(a(i, j), a(i, k));
  }
};

// Smallest-magnitude non-zero entry of the trailing submatrix, lowest
// (row, col) on ties; early exit on magnitude 1 (the global minimum).
bool find_pivot(const IMat& m, std::size_t k, std::size_t& pr, std::size_t& pc) {
  bool found = false;
  Int best;
  for (std::size_t i = k; i < m.rows(); ++i) {
    const Int* row = m.row_ptr(i);
    for (std::size_t j = k; j < m.cols(); ++j) {
      int s = mpz_sgn(row[j].get_mpz_t());
      if (s == 0) continue;
      Int a = abs(row[j]);
      if (!found || a < best) {
        found = true;
        best = a;
        pr = i;
        pc = j;
        if (best == 1) return true;
      }
    }
  }
  return found;
}

}  // namespace

SmithForm smith_normal_form(IMat mat, const SmithOptions& opts) {
  Tracker t(std::move(mat), opts);
  IMat& m = t.m;
  const std::size_t steps = std::min(m.rows(), m.cols());
  std::size_t rank = 0;

  for (std::size_t k = 0; k < steps; ++k) {
    std::size_t pr, pc;
    if (!find_pivot(m, k, pr, pc)) break;
    t.swap_rows(pr, k);
    t.swap_cols(pc, k);

    for (;;) {
      bool dirty = false;
      // Clear column k below the pivot (gcd reduction via truncated division).
      for (std::size_t i = k + 1; i < m.rows(); ++i) {
        if (m(i, k) == 0) continue;
        Int q;
        mpz_tdiv_q(q.get_mpz_t(), m(i, k).get_mpz_t(), m(k, k).get_mpz_t());
        if (q != 0) t.row_op(i, k, q, k);
        if (m(i, k) != 0) {
          t.swap_rows(i, k);
          dirty = true;
        }
      }
      // Clear row k to the right of the pivot.
      for (std::size_t j = k + 1; j < m.cols(); ++j) {
        if (m(k, j) == 0) continue;
        Int q;
        mpz_tdiv_q(q.get_mpz_t(), m(k, j).get_mpz_t(), m(k, k).get_mpz_t());
        if (q != 0) t.col_op(j, k, q, k);
        if (m(k, j) != 0) {
          t.swap_cols(j, k);
          dirty = true;
        }
      }
      if (dirty) continue;
      // Row ops above may have disturbed the column; verify both are clean.
      bool clean = true;
      for (std::size_t i = k + 1; i < m.rows() && clean; ++i)
        if (m(i, k) != 0) clean = false;
      for (std::size_t j = k + 1; j < m.cols() && clean; ++j)
        if (m(k, j) != 0) clean = false;
      if (!clean) continue;

      if (opts.canonical) {
        // Pivot must divide every entry of the trailing submatrix.
        bool fixed = true;
        for (std::size_t i = k + 1; i < m.rows() && fixed; ++i)
          for (std::size_t j = k + 1; j < m.cols(); ++j)
            if (m(i, j) % m(k, k) != 0) {
              t.add_row(k, i);
              fixed = false;
              break;
            }
        if (!fixed) continue;
      }
      break;
    }
    if (m(k, k) < 0) t.negate_row(k);
    ++rank;
  }

  SmithForm out;
  out.rank = rank;
  out.D = std::move(t.m);
  if (opts.want_U) out.U = std::move(t.u);
  if (opts.want_Uinv) out.Uinv = std::move(t.uinv);
  if (opts.want_V) out.V = std::move(t.v);
  if (opts.want_Vinv) out.Vinv = std::move(t.vinv);
  return out;
}

}  // namespace qch
