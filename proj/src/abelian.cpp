#include "qch/abelian.hpp"

#include "qch/snf.hpp"

#include <stdexcept>

namespace qch {

std::string Presentation::str() const {
  if (trivial()) return "0";
  std::string s;
  for (long i = 0; i < free_rank; ++i) {
    if (!s.empty()) s += " + ";
    s += "Z";
  }
  for (const auto& d : torsion) {
    if (!s.empty()) s += " + ";
    s += "Z/" + d.get_str();
  }
  return s;
}

CoefficientModule::CoefficientModule(const Int& d, const Int& t)
    : factors_{d}, t_(1, 1) {
  t_(0, 0) = t;
  validate();
}

CoefficientModule::CoefficientModule(IVec factors, IMat t)
    : factors_(std::move(factors)), t_(std::move(t)) {
  validate();
}

void CoefficientModule::validate() const {
  for (const auto& d : factors_)
    if (d < 2) throw std::domain_error("CoefficientModule: factors must be >= 2");
  if (t_.rows() != factors_.size() || t_.cols() != factors_.size())
    throw std::domain_error("CoefficientModule: T shape mismatch");
  if (!is_automorphism_mod(t_, factors_))
    throw std::domain_error("CoefficientModule: T is not an automorphism of A");
}

std::size_t CoefficientModule::order() const {
  Int n = 1;
  for (const auto& d : factors_) n *= d;
  if (!n.fits_ulong_p()) throw std::overflow_error("CoefficientModule: group too large");
  return static_cast<std::size_t>(n.get_ui());
}

IVec CoefficientModule::reduce(IVec v) const {
  if (v.size() != factors_.size()) throw std::invalid_argument("reduce: size mismatch");
  for (std::size_t i = 0; i < v.size(); ++i) {
    v[i] %= factors_[i];
    if (v[i] < 0) v[i] += factors_[i];
  }
  return v;
}

IVec CoefficientModule::add(const IVec& a, const IVec& b) const {
  IVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return reduce(std::move(r));
}

IVec CoefficientModule::neg(const IVec& a) const {
  IVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return reduce(std::move(r));
}

IVec CoefficientModule::apply_T(const IVec& a) const { return reduce(t_.apply(a)); }

IVec CoefficientModule::quandle_op(const IVec& a, const IVec& b) const {
  IVec ta = t_.apply(a);
  IVec tb = t_.apply(b);
  IVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = ta[i] + b[i] - tb[i];
  return reduce(std::move(r));
}

std::size_t CoefficientModule::index_of(const IVec& a) const {
  IVec v = reduce(a);
  Int idx = 0;
  for (std::size_t i = 0; i < v.size(); ++i) idx = idx * factors_[i] + v[i];
  return static_cast<std::size_t>(idx.get_ui());
}

IVec CoefficientModule::element(std::size_t index) const {
  Int idx = static_cast<unsigned long>(index);
  IVec v(factors_.size());
  for (std::size_t i = factors_.size(); i-- > 0;) {
    v[i] = idx % factors_[i];
    idx /= factors_[i];
  }
  return v;
}

bool CoefficientModule::is_zero(const IVec& a) const {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] % factors_[i] != 0) return false;
  return true;
}

bool is_well_defined_hom(const IMat& t, const IVec& src_factors, const IVec& dst_factors) {
  if (t.cols() != src_factors.size() || t.rows() != dst_factors.size()) return false;
  for (std::size_t j = 0; j < t.cols(); ++j)
    for (std::size_t i = 0; i < t.rows(); ++i)
      if ((t(i, j) * src_factors[j]) % dst_factors[i] != 0) return false;
  return true;
}

bool is_automorphism_mod(const IMat& t, const IVec& factors) {
  const std::size_t m = factors.size();
  if (t.rows() != m || t.cols() != m) return false;
  if (!is_well_defined_hom(t, factors, factors)) return false;
  // Invertible over A iff [T | diag(d)] has all invariant factors 1.
  IMat lam(m, m);
  for (std::size_t i = 0; i < m; ++i) lam(i, i) = factors[i];
  auto snf = smith_normal_form(t.hcat(lam));
  if (snf.rank != m) return false;
  for (std::size_t i = 0; i < m; ++i)
    if (snf.D(i, i) != 1) return false;
  return true;
}

}  // namespace qch
