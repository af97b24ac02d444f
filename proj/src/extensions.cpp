#include "qch/extensions.hpp"

namespace qch {

namespace {

IVec cochain_value(const CochainBasis& b, const CochainVec& c, std::size_t m, int x,
                   int y) {
  if (x == y) return IVec(m, Int(0));
  long i = b.index_of({x, y});
  IVec v(m);
  for (std::size_t t = 0; t < m; ++t) v[t] = c[i * m + t];
  return v;
}

}  // namespace

ExtensionTable extend(const QuandleTable& x, const CoefficientModule& a,
                      const CochainVec& psi) {
  CochainBasis b2(x, 2);
  const std::size_t m = a.rank();
  if (psi.size() != b2.size() * m) throw std::invalid_argument("extend: cochain size");
  if (auto bad = check_2cocycle_condition(x, a, b2, psi)) throw NotACocycle(*bad);

  const std::size_t q = x.size();
  const std::size_t f = a.order();
  ExtensionTable e;
  e.base_size = q;
  e.fiber_size = f;
  std::vector<std::vector<int>> table(q * f, std::vector<int>(q * f));
  for (std::size_t xi = 0; xi < q; ++xi)
    for (std::size_t ai = 0; ai < f; ++ai) {
      IVec av = a.element(ai);
      for (std::size_t yi = 0; yi < q; ++yi) {
        int xy = x.op(static_cast<int>(xi), static_cast<int>(yi));
        IVec base = cochain_value(b2, psi, m, static_cast<int>(xi), static_cast<int>(yi));
        for (std::size_t bi = 0; bi < f; ++bi) {
          IVec res = a.add(a.quandle_op(av, a.element(bi)), base);
          table[xi * f + ai][yi * f + bi] = e.index(static_cast<int>(xy), a.index_of(res));
        }
      }
    }
  e.total = QuandleTable(q * f, std::move(table));
  return e;
}

std::optional<CochainVec> equivalent(const QuandleTable& x, const CoefficientModule& a,
                                     const CochainVec& psi, const CochainVec& phi) {
  CochainBasis b2(x, 2);
  if (check_2cocycle_condition(x, a, b2, psi) || check_2cocycle_condition(x, a, b2, phi))
    throw std::domain_error("equivalent: inputs must be 2-cocycles");
  CochainVec diff(psi.size());
  for (std::size_t i = 0; i < psi.size(); ++i) diff[i] = psi[i] - phi[i];
  const std::size_t m = a.rank();
  for (std::size_t i = 0; i < diff.size(); ++i) {
    diff[i] %= a.factors()[i % m];
    if (diff[i] < 0) diff[i] += a.factors()[i % m];
  }
  return is_coboundary(x, a, 2, diff);
}

std::optional<std::string> validate_principal(const PrincipalData& d,
                                              const CoefficientModule& a) {
  const std::size_t n = d.total.size();
  const std::size_t q = d.base.size();
  const std::size_t f = a.order();
  if (d.projection.size() != n) return "projection size mismatch";
  if (d.section.size() != q) return "section size mismatch";
  if (d.action.size() != f) return "action must have one permutation per fiber element";
  if (!verify_quandle(d.total).ok()) return "total is not a quandle";
  if (!verify_quandle(d.base).ok()) return "base is not a quandle";
  if (!is_quandle_hom(d.projection, d.total, d.base)) return "projection is not a quandle hom";
  if (!is_surjective(d.projection, q)) return "projection is not surjective";

  for (std::size_t k = 0; k < f; ++k) {
    std::vector<bool> seen(n, false);
    if (d.action[k].size() != n) return "action permutation size mismatch";
    for (std::size_t e = 0; e < n; ++e) {
      int img = d.action[k][e];
      if (img < 0 || static_cast<std::size_t>(img) >= n || seen[img])
        return "action element " + std::to_string(k) + " is not a permutation";
      seen[img] = true;
      if (d.projection[img] != d.projection[e])
        return "action does not preserve fibers at element " + std::to_string(e);
    }
  }
  // Group action: composition matches addition in A, identity acts trivially.
  for (std::size_t e = 0; e < n; ++e)
    if (d.action[a.index_of(IVec(a.rank(), Int(0)))][e] != static_cast<int>(e))
      return "zero does not act as the identity";
  for (std::size_t k1 = 0; k1 < f; ++k1)
    for (std::size_t k2 = 0; k2 < f; ++k2) {
      std::size_t ks = a.index_of(a.add(a.element(k1), a.element(k2)));
      for (std::size_t e = 0; e < n; ++e)
        if (d.action[k1][d.action[k2][e]] != d.action[ks][e])
          return "action is not a group action";
    }
  // Free and transitive on fibers: orbit of e under A covers its fiber with
  // distinct images.
  for (std::size_t e = 0; e < n; ++e) {
    std::vector<bool> hit(n, false);
    std::size_t fiber = 0, count = 0;
    for (std::size_t e2 = 0; e2 < n; ++e2)
      if (d.projection[e2] == d.projection[e]) ++fiber;
    for (std::size_t k = 0; k < f; ++k) {
      int img = d.action[k][e];
      if (hit[img]) return "action is not free on the fiber of " + std::to_string(e);
      hit[img] = true;
      ++count;
    }
    if (count != fiber) return "action is not transitive on the fiber of " + std::to_string(e);
  }
  // Equivariance: (x*y).a = (x.a)*(y.a) and (x.a)*y = (x*y).a.
  for (std::size_t k = 0; k < f; ++k)
    for (std::size_t e1 = 0; e1 < n; ++e1)
      for (std::size_t e2 = 0; e2 < n; ++e2) {
        int lhs = d.action[k][d.total.op(static_cast<int>(e1), static_cast<int>(e2))];
        if (d.total.op(d.action[k][e1], d.action[k][e2]) != lhs)
          return "diagonal equivariance fails";
        if (d.total.op(d.action[k][e1], static_cast<int>(e2)) != lhs)
          return "left equivariance fails";
      }
  for (std::size_t xi = 0; xi < q; ++xi) {
    int s = d.section[xi];
    if (s < 0 || static_cast<std::size_t>(s) >= n || d.projection[s] != static_cast<int>(xi))
      return "section is not a section of the projection";
  }
  return std::nullopt;
}

CochainVec extract_principal_cocycle(const PrincipalData& d, const CoefficientModule& a) {
  if (auto err = validate_principal(d, a))
    throw std::domain_error("extract_principal_cocycle: " + *err);
  CochainBasis b2(d.base, 2);
  const std::size_t m = a.rank();
  const std::size_t f = a.order();
  CochainVec phi(b2.size() * m);
  for (std::size_t i = 0; i < b2.size(); ++i) {
    int x = b2.tuple(i)[0], y = b2.tuple(i)[1];
    int lhs = d.total.op(d.section[x], d.section[y]);
    int base = d.section[d.base.op(x, y)];
    bool found = false;
    for (std::size_t k = 0; k < f; ++k)
      if (d.action[k][base] == lhs) {
        IVec v = a.element(k);
        for (std::size_t t = 0; t < m; ++t) phi[i * m + t] = v[t];
        found = true;
        break;
      }
    if (!found)
      throw std::logic_error("extract_principal_cocycle: no fiber translation found");
  }
  return phi;
}

bool discrete_fiber_vanishing_check(const PrincipalData& d, const CoefficientModule& a,
                                    const CochainVec& phi) {
  (void)d;
  const std::size_t m = a.rank();
  for (std::size_t i = 0; i < phi.size(); ++i)
    if (phi[i] % a.factors()[i % m] != 0) return false;
  return true;
}

PrincipalData principal_from_extension(const QuandleTable& x, const CoefficientModule& a,
                                       const ExtensionTable& e) {
  PrincipalData d;
  d.total = e.total;
  d.base = x;
  const std::size_t f = e.fiber_size;
  d.projection.resize(e.total.size());
  for (std::size_t i = 0; i < e.total.size(); ++i)
    d.projection[i] = static_cast<int>(i / f);
  d.action.assign(a.order(), std::vector<int>(e.total.size()));
  for (std::size_t k = 0; k < a.order(); ++k)
    for (std::size_t i = 0; i < e.total.size(); ++i) {
      std::size_t ai = i % f;
      std::size_t shifted = a.index_of(a.add(a.element(ai), a.element(k)));
      d.action[k][i] = static_cast<int>(i - ai + shifted);
    }
  d.section.resize(x.size());
  for (std::size_t i = 0; i < x.size(); ++i)
    d.section[i] = e.index(static_cast<int>(i), a.index_of(IVec(a.rank(), Int(0))));
  return d;
}

}  // namespace qch
