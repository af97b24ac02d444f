#include "qch/zmod.hpp"

#include <numeric>
#include <stdexcept>

namespace qch {

namespace {

long mod(long a, long l) {
  a %= l;
  return a < 0 ? a + l : a;
}

// a x + b y = g with g = gcd(x, y) >= 0.
long extgcd(long x, long y, long& a, long& b) {
  if (y == 0) {
    a = x >= 0 ? 1 : -1;
    b = 0;
    return x >= 0 ? x : -x;
  }
  long a1, b1;
  long g = extgcd(y, x % y, a1, b1);
  a = b1;
  b = a1 - (x / y) * b1;
  return g;
}

// Unit u mod l with u * x == gcd(x, l) (mod l).
long unit_for(long x, long l) {
  long a, b;
  long g = extgcd(mod(x, l), l, a, b);
  long u = mod(a, l);
  long step = l / g;
  while (std::gcd(u, l) != 1) u = mod(u + step, l);
  return u;
}

std::size_t first_nonzero(const std::vector<long>& v, std::size_t from = 0) {
  for (std::size_t i = from; i < v.size(); ++i)
    if (v[i] != 0) return i;
  return v.size();
}

}  // namespace

HowellBasis::HowellBasis(std::size_t n, long modulus, bool track_expressions)
    : n_(n), l_(modulus), track_(track_expressions), rows_(n), exprs_(n) {
  if (modulus < 2) throw std::invalid_argument("HowellBasis: modulus must be >= 2");
}

void HowellBasis::add_generator(const std::vector<long>& v) {
  if (v.size() != n_) throw std::invalid_argument("HowellBasis: size mismatch");
  std::vector<long> w(n_);
  for (std::size_t i = 0; i < n_; ++i) w[i] = mod(v[i], l_);
  std::vector<long> e;
  if (track_) {
    e.assign(gen_count_ + 1, 0);
    e[gen_count_] = 1;
  }
  ++gen_count_;
  insert(std::move(w), std::move(e));
}

bool HowellBasis::insert(std::vector<long> v, std::vector<long> e) {
  bool changed = false;
  std::size_t p = first_nonzero(v);
  while (p < n_) {
    if (rows_[p].empty()) {
      long u = unit_for(v[p], l_);
      if (u != 1)
        for (auto& x : v) x = mod(u * x, l_);
      if (track_) {
        e.resize(gen_count_, 0);
        if (u != 1)
          for (auto& x : e) x = mod(u * x, l_);
      }
      rows_[p] = std::move(v);
      if (track_) exprs_[p] = std::move(e);
      return true;
    }
    auto& r = rows_[p];
    long rp = r[p], vp = v[p];
    if (vp % rp == 0) {
      // plain elimination, the common fast case
      long q = vp / rp;
      for (std::size_t i = p; i < n_; ++i) v[i] = mod(v[i] - q * r[i], l_);
      if (track_) {
        auto& re = exprs_[p];
        e.resize(gen_count_, 0);
        for (std::size_t i = 0; i < re.size(); ++i) e[i] = mod(e[i] - q * re[i], l_);
      }
    } else {
      long a, b;
      long g = extgcd(rp, vp, a, b);
      std::vector<long> newr(n_), newv(n_);
      long c = vp / g, d = rp / g;
      for (std::size_t i = 0; i < n_; ++i) {
        newr[i] = mod(a * r[i] + b * v[i], l_);
        newv[i] = mod(d * v[i] - c * r[i], l_);
      }
      if (track_) {
        auto& re = exprs_[p];
        e.resize(gen_count_, 0);
        std::vector<long> newre(gen_count_, 0), newve(gen_count_, 0);
        for (std::size_t i = 0; i < gen_count_; ++i) {
          long rei = i < re.size() ? re[i] : 0;
          newre[i] = mod(a * rei + b * e[i], l_);
          newve[i] = mod(d * e[i] - c * rei, l_);
        }
        exprs_[p] = std::move(newre);
        e = std::move(newve);
      }
      rows_[p] = std::move(newr);
      v = std::move(newv);
      changed = true;
    }
    std::size_t p2 = first_nonzero(v, p);
    if (p2 == p) throw std::logic_error("HowellBasis: pivot not eliminated");
    p = p2;
  }
  return changed;
}

void HowellBasis::finalize() {
  if (finalized_) return;
  // Closure: for each stored row with pivot value g, (L/gcd(g,L)) times the
  // row is also in the lattice and has a later pivot; insert until stable.
  bool dirty = true;
  while (dirty) {
    dirty = false;
    for (std::size_t p = 0; p < n_; ++p) {
      if (rows_[p].empty()) continue;
      long g = std::gcd(rows_[p][p], l_);
      long f = l_ / g;
      if (f == 1) continue;
      std::vector<long> w(n_);
      bool nonzero = false;
      for (std::size_t i = 0; i < n_; ++i) {
        w[i] = mod(f * rows_[p][i], l_);
        if (w[i] != 0) nonzero = true;
      }
      if (!nonzero) continue;
      std::vector<long> we;
      if (track_) {
        we.assign(gen_count_, 0);
        for (std::size_t i = 0; i < exprs_[p].size(); ++i) we[i] = mod(f * exprs_[p][i], l_);
      }
      if (insert(std::move(w), std::move(we))) dirty = true;
    }
  }
  // Normalize pivots to divisors of L.
  for (std::size_t p = 0; p < n_; ++p) {
    if (rows_[p].empty()) continue;
    long u = unit_for(rows_[p][p], l_);
    if (u != 1) {
      for (auto& x : rows_[p]) x = mod(u * x, l_);
      if (track_)
        for (auto& x : exprs_[p]) x = mod(u * x, l_);
    }
    if (track_) exprs_[p].resize(gen_count_, 0);
  }
  finalized_ = true;
}

std::optional<std::vector<long>> HowellBasis::express(const std::vector<long>& v) const {
  if (!finalized_) throw std::logic_error("HowellBasis: finalize first");
  if (!track_) throw std::logic_error("HowellBasis: expression tracking disabled");
  std::vector<long> r(n_);
  for (std::size_t i = 0; i < n_; ++i) r[i] = mod(v[i], l_);
  std::vector<long> out(gen_count_, 0);
  for (std::size_t p = 0; p < n_; ++p) {
    if (r[p] == 0) continue;
    if (rows_[p].empty()) return std::nullopt;  // implicit pivot L
    long g = rows_[p][p];
    if (r[p] % g != 0) return std::nullopt;
    long a = r[p] / g;
    const auto& row = rows_[p];
    for (std::size_t i = p; i < n_; ++i) r[i] = mod(r[i] - a * row[i], l_);
    const auto& e = exprs_[p];
    for (std::size_t i = 0; i < gen_count_; ++i) out[i] = mod(out[i] + a * e[i], l_);
  }
  return out;
}

bool HowellBasis::contains(const std::vector<long>& v) const {
  if (!finalized_) throw std::logic_error("HowellBasis: finalize first");
  std::vector<long> r(n_);
  for (std::size_t i = 0; i < n_; ++i) r[i] = mod(v[i], l_);
  for (std::size_t p = 0; p < n_; ++p) {
    if (r[p] == 0) continue;
    if (rows_[p].empty()) return false;
    long g = rows_[p][p];
    if (r[p] % g != 0) return false;
    long a = r[p] / g;
    const auto& row = rows_[p];
    for (std::size_t i = p; i < n_; ++i) r[i] = mod(r[i] - a * row[i], l_);
  }
  return true;
}

void kernel_from_howell(const HowellBasis& h, QMat& k, QMat& kinv) {
  const std::size_t n = h.dim();
  const long l = h.modulus();
  // B: upper triangular row basis of the row lattice; K solves B K = L I.
  IMat kz(n, n);
  for (std::size_t jj = n; jj-- > 0;) {
    const std::size_t j = jj;
    kz(j, j) = l / h.pivot(j);
    for (std::size_t ii = j; ii-- > 0;) {
      const std::size_t i = ii;
      if (!h.has_row(i)) continue;  // virtual row L e_i: entries beyond pivot are 0
      const auto& row = h.row(i);
      Int s = 0;
      for (std::size_t t = i + 1; t <= j; ++t)
        if (row[t] != 0 && kz(t, j) != 0) s -= row[t] * kz(t, j);
      if (s % row[i] != 0) throw std::domain_error("kernel_from_howell: inexact division");
      kz(i, j) = s / row[i];
    }
  }
  k = QMat(n, n);
  kinv = QMat(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      k(i, j) = Rat(kz(i, j));
      long bij = i == j ? h.pivot(i) : (h.has_row(i) && j > i ? h.row(i)[j] : 0);
      if (bij != 0) {
        Rat r(bij, l);
        r.canonicalize();
        kinv(i, j) = r;
      }
    }
}

}  // namespace qch
