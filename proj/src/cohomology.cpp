#include "qch/cohomology.hpp"

#include <array>
#include <stdexcept>

namespace qch {

namespace {

std::size_t pow_size(std::size_t q, int n) {
  std::size_t p = 1;
  for (int i = 0; i < n; ++i) p *= q;
  return p;
}

/// Left-normed bracket ((x1*x2)*x3)*...*xk; [x] = x for a single element.
int bracket(const QuandleTable& x, const std::vector<int>& xs) {
  int acc = xs.at(0);
  for (std::size_t i = 1; i < xs.size(); ++i) acc = x.op(acc, xs[i]);
  return acc;
}

std::vector<int> face_drop(const std::vector<int>& t, int i) {
  std::vector<int> r;
  r.reserve(t.size() - 1);
  for (std::size_t j = 0; j < t.size(); ++j)
    if (j != static_cast<std::size_t>(i - 1)) r.push_back(t[j]);
  return r;
}

std::vector<int> face_star(const QuandleTable& x, const std::vector<int>& t, int i) {
  std::vector<int> r;
  r.reserve(t.size() - 1);
  for (int j = 0; j < i - 1; ++j) r.push_back(x.op(t[j], t[i - 1]));
  for (std::size_t j = i; j < t.size(); ++j) r.push_back(t[j]);
  return r;
}

void add_block(IMat& d, std::size_t row_tuple, std::size_t col_tuple, const IMat& block,
               int sign) {
  const std::size_t m = block.rows();
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b)
      if (block(a, b) != 0) d(row_tuple * m + a, col_tuple * m + b) += sign * block(a, b);
}

void add_identity_block(IMat& d, std::size_t row_tuple, std::size_t col_tuple,
                        std::size_t m, int sign) {
  for (std::size_t a = 0; a < m; ++a) d(row_tuple * m + a, col_tuple * m + a) += sign;
}

IVec repeat_factors(const IVec& factors, std::size_t count) {
  IVec m(count * factors.size());
  for (std::size_t i = 0; i < count; ++i)
    for (std::size_t j = 0; j < factors.size(); ++j) m[i * factors.size() + j] = factors[j];
  return m;
}

bool mat_eq_mod(const IMat& a, const IMat& b, const IVec& factors) {
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if ((a(i, j) - b(i, j)) % factors[i] != 0) return false;
  return true;
}

CohomologyResult cohomology_common(const QuandleTable& x, const IVec& factors,
                                   const IMat& d_out, const IMat& d_in, int n) {
  CohomologyResult r;
  r.basis = CochainBasis(x, n);
  if (n >= 2) r.basis_below = CochainBasis(x, n - 1);
  r.factors = factors;
  CochainBasis above(x, n + 1);
  IVec moduli_out = repeat_factors(factors, above.size());
  IVec moduli_mid = repeat_factors(factors, r.basis.size());
  IVec moduli_in = repeat_factors(factors, n >= 2 ? r.basis_below.size() : 0);
  r.h = homology_of_pair(d_out, d_in, moduli_out, moduli_mid, moduli_in);
  return r;
}

}  // namespace

CochainBasis::CochainBasis(const QuandleTable& x, int degree)
    : degree_(degree), q_(x.size()) {
  if (degree < 1) throw std::invalid_argument("CochainBasis: degree must be >= 1");
  std::vector<int> t(degree);
  // Lexicographic enumeration of tuples with no adjacent equal entries.
  auto rec = [&](auto&& self, int pos) -> void {
    if (pos == degree) {
      tuples_.push_back(t);
      return;
    }
    for (int v = 0; v < static_cast<int>(q_); ++v) {
      if (pos > 0 && v == t[pos - 1]) continue;
      t[pos] = v;
      self(self, pos + 1);
    }
  };
  rec(rec, 0);
  lookup_.assign(pow_size(q_, degree), -1);
  for (std::size_t i = 0; i < tuples_.size(); ++i) {
    std::size_t key = 0;
    for (int v : tuples_[i]) key = key * q_ + v;
    lookup_[key] = static_cast<long>(i);
  }
}

long CochainBasis::index_of(const std::vector<int>& t) const {
  std::size_t key = 0;
  for (int v : t) key = key * q_ + v;
  return lookup_[key];
}

QuandleModuleSpec::QuandleModuleSpec(IVec factors, std::vector<IMat> eta,
                                     std::vector<IMat> tau, std::size_t q)
    : factors_(std::move(factors)), eta_(std::move(eta)), tau_(std::move(tau)), q_(q) {
  if (eta_.size() != q_ * q_ || tau_.size() != q_ * q_)
    throw std::invalid_argument("QuandleModuleSpec: family size mismatch");
}

QuandleModuleSpec QuandleModuleSpec::constant(const CoefficientModule& a, std::size_t q) {
  IMat one_minus_t = IMat::identity(a.rank()) - a.T();
  std::vector<IMat> eta(q * q, a.T()), tau(q * q, one_minus_t);
  return {a.factors(), std::move(eta), std::move(tau), q};
}

std::optional<std::string> QuandleModuleSpec::validate(const QuandleTable& xt) const {
  const int q = static_cast<int>(q_);
  if (xt.size() != q_) return "quandle size mismatch";
  for (int x = 0; x < q; ++x)
    for (int y = 0; y < q; ++y) {
      if (!is_automorphism_mod(eta(x, y), factors_))
        return "eta(" + std::to_string(x) + "," + std::to_string(y) +
               ") is not an automorphism of A";
      if (!is_well_defined_hom(tau(x, y), factors_, factors_))
        return "tau(" + std::to_string(x) + "," + std::to_string(y) +
               ") is not well defined on A";
    }
  IMat id = IMat::identity(factors_.size());
  for (int x = 0; x < q; ++x)
    if (!mat_eq_mod(tau(x, x) + eta(x, x), id, factors_))
      return "axiom 4 fails at x=" + std::to_string(x);
  for (int x = 0; x < q; ++x)
    for (int y = 0; y < q; ++y)
      for (int z = 0; z < q; ++z) {
        int xy = xt.op(x, y), xz = xt.op(x, z), yz = xt.op(y, z);
        std::string at = "(" + std::to_string(x) + "," + std::to_string(y) + "," +
                         std::to_string(z) + ")";
        if (!mat_eq_mod(eta(xy, z) * eta(x, y), eta(xz, yz) * eta(x, z), factors_))
          return "axiom 1 fails at " + at;
        if (!mat_eq_mod(eta(xy, z) * tau(x, y), tau(xz, yz) * eta(y, z), factors_))
          return "axiom 2 fails at " + at;
        if (!mat_eq_mod(tau(xy, z), eta(xz, yz) * tau(x, z) + tau(xz, yz) * tau(y, z),
                        factors_))
          return "axiom 3 fails at " + at;
      }
  return std::nullopt;
}

IMat differential_matrix(const QuandleTable& x, const CoefficientModule& a, int n) {
  if (n < 1) throw std::invalid_argument("differential_matrix: n must be >= 1");
  CochainBasis src(x, n), dst(x, n + 1);
  const std::size_t m = a.rank();
  IMat d(dst.size() * m, src.size() * m);
  for (std::size_t r = 0; r < dst.size(); ++r) {
    const auto& t = dst.tuple(r);
    for (int i = 1; i <= n + 1; ++i) {
      int sign = (i % 2 == 0) ? 1 : -1;  // (-1)^i
      long c0 = src.index_of(face_drop(t, i));
      if (c0 >= 0) add_block(d, r, c0, a.T(), sign);
      long c1 = src.index_of(face_star(x, t, i));
      if (c1 >= 0) add_identity_block(d, r, c1, m, -sign);
    }
  }
  return d;
}

IMat generalized_differential_matrix(const QuandleTable& x, const QuandleModuleSpec& mod,
                                     int n) {
  if (n < 1) throw std::invalid_argument("generalized_differential_matrix: n must be >= 1");
  if (auto err = mod.validate(x))
    throw std::domain_error("generalized_differential_matrix: " + *err);
  CochainBasis src(x, n), dst(x, n + 1);
  const std::size_t m = mod.rank();
  IMat d(dst.size() * m, src.size() * m);
  for (std::size_t r = 0; r < dst.size(); ++r) {
    const auto& t = dst.tuple(r);
    for (int i = 2; i <= n + 1; ++i) {
      int sign = (i % 2 == 0) ? 1 : -1;
      auto dropped = face_drop(t, i);
      long c0 = src.index_of(dropped);
      if (c0 >= 0) {
        int b1 = bracket(x, dropped);
        int b2 = bracket(x, std::vector<int>(t.begin() + (i - 1), t.end()));
        add_block(d, r, c0, mod.eta(b1, b2), sign);
      }
      long c1 = src.index_of(face_star(x, t, i));
      if (c1 >= 0) add_identity_block(d, r, c1, m, -sign);
    }
    // tau term (i = 1 face). Subscript order follows the extension formula
    // (x,a)*(y,b) = (x*y, eta a + tau b + kappa): first index carries x1.
    long c0 = src.index_of(face_drop(t, 1));
    if (c0 >= 0) {
      std::vector<int> with_x1 = {t[0]};
      with_x1.insert(with_x1.end(), t.begin() + 2, t.end());
      int b1 = bracket(x, with_x1);
      int b2 = bracket(x, face_drop(t, 1));
      add_block(d, r, c0, mod.tau(b1, b2), 1);
    }
  }
  return d;
}

CohomologyResult cohomology_group(const QuandleTable& x, const CoefficientModule& a,
                                  int n) {
  IMat d_out = differential_matrix(x, a, n);
  IMat d_in = n >= 2 ? differential_matrix(x, a, n - 1) : IMat(d_out.cols(), 0);
  return cohomology_common(x, a.factors(), d_out, d_in, n);
}

CohomologyResult cohomology_group(const QuandleTable& x, const QuandleModuleSpec& m,
                                  int n) {
  IMat d_out = generalized_differential_matrix(x, m, n);
  IMat d_in = n >= 2 ? generalized_differential_matrix(x, m, n - 1) : IMat(d_out.cols(), 0);
  return cohomology_common(x, m.factors(), d_out, d_in, n);
}

bool is_cocycle(const QuandleTable& x, const CoefficientModule& a, int n,
                const CochainVec& phi) {
  IMat d = differential_matrix(x, a, n);
  if (phi.size() != d.cols()) throw std::invalid_argument("is_cocycle: size mismatch");
  IVec img = d.apply(phi);
  const std::size_t m = a.rank();
  for (std::size_t i = 0; i < img.size(); ++i)
    if (img[i] % a.factors()[i % m] != 0) return false;
  return true;
}

std::optional<CochainVec> is_coboundary(const QuandleTable& x, const CoefficientModule& a,
                                        int n, const CochainVec& phi) {
  if (!is_cocycle(x, a, n, phi)) throw std::domain_error("is_coboundary: phi is not a cocycle");
  if (n == 1) {
    // delta^0 is the inclusion of the trivial group: only 0 is a coboundary.
    const std::size_t m = a.rank();
    for (std::size_t i = 0; i < phi.size(); ++i)
      if (phi[i] % a.factors()[i % m] != 0) return std::nullopt;
    return CochainVec{};
  }
  CochainBasis mid(x, n), below(x, n - 1);
  IMat d_in = differential_matrix(x, a, n - 1);
  IVec moduli_mid = repeat_factors(a.factors(), mid.size());
  IVec moduli_below = repeat_factors(a.factors(), below.size());
  return solve_mod(d_in, phi, moduli_mid, moduli_below);
}

CochainVec pullback_cochain(const std::vector<int>& f, const CochainBasis& src_basis,
                            const CochainBasis& dst_basis, const IMat& coeff_map,
                            const IVec& dst_factors, const CochainVec& c) {
  const std::size_t m_src = coeff_map.cols();
  const std::size_t m_dst = coeff_map.rows();
  CochainVec out(dst_basis.size() * m_dst, Int(0));
  std::vector<int> img(dst_basis.degree());
  for (std::size_t i = 0; i < dst_basis.size(); ++i) {
    const auto& t = dst_basis.tuple(i);
    bool degen = false;
    for (std::size_t j = 0; j < t.size(); ++j) {
      img[j] = f[t[j]];
      if (j > 0 && img[j] == img[j - 1]) degen = true;
    }
    if (degen) continue;
    long si = src_basis.index_of(img);
    if (si < 0) continue;
    for (std::size_t a = 0; a < m_dst; ++a) {
      Int acc = 0;
      for (std::size_t b = 0; b < m_src; ++b) acc += coeff_map(a, b) * c[si * m_src + b];
      acc %= dst_factors[a];
      if (acc < 0) acc += dst_factors[a];
      out[i * m_dst + a] = acc;
    }
  }
  return out;
}

IMat induced_map(const std::vector<int>& f, const QuandleTable& x, const QuandleTable& y,
                 const CohomologyResult& src, const CohomologyResult& dst,
                 const IMat& coeff_map) {
  if (!is_quandle_hom(f, y, x)) throw std::domain_error("induced_map: f is not a quandle hom");
  const auto& gens = src.generators();
  IMat result(dst.generators().size(), gens.size());
  for (std::size_t j = 0; j < gens.size(); ++j) {
    CochainVec pulled =
        pullback_cochain(f, src.basis, dst.basis, coeff_map, dst.factors, gens[j]);
    auto coords = dst.h.express(pulled);
    if (!coords)
      throw std::logic_error("induced_map: pullback of a cocycle is not a cocycle");
    for (std::size_t i = 0; i < coords->size(); ++i) result(i, j) = (*coords)[i];
  }
  return result;
}

std::optional<std::array<int, 3>> check_2cocycle_condition(const QuandleTable& x,
                                                           const CoefficientModule& a,
                                                           const CochainBasis& basis2,
                                                           const CochainVec& phi) {
  const std::size_t m = a.rank();
  auto val = [&](int p, int r) -> IVec {
    if (p == r) return IVec(m, Int(0));
    long i = basis2.index_of({p, r});
    IVec v(m);
    for (std::size_t c = 0; c < m; ++c) v[c] = phi[i * m + c];
    return v;
  };
  const int q = static_cast<int>(x.size());
  for (int x1 = 0; x1 < q; ++x1)
    for (int x2 = 0; x2 < q; ++x2)
      for (int x3 = 0; x3 < q; ++x3) {
        if (x1 == x2 || x2 == x3) continue;
        IVec lhs = a.add(a.apply_T(val(x1, x2)), val(x.op(x1, x2), x3));
        IVec mid = val(x2, x3);
        IVec one_minus_t = a.add(mid, a.neg(a.apply_T(mid)));
        IVec rhs = a.add(a.add(a.apply_T(val(x1, x3)), one_minus_t),
                         val(x.op(x1, x3), x.op(x2, x3)));
        if (!a.is_zero(a.add(lhs, a.neg(rhs)))) return std::array<int, 3>{x1, x2, x3};
      }
  return std::nullopt;
}

}  // namespace qch
