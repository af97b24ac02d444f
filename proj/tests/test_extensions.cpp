#include <doctest.h>

#include "qch/extensions.hpp"

#include <random>

using namespace qch;

namespace {

GroupTable cyclic(int n) {
  GroupTable g;
  g.size = n;
  g.table.assign(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) g.table[a][b] = (a + b) % n;
  return g;
}

CochainVec delta1(const QuandleTable& x, const CoefficientModule& a, const CochainVec& g) {
  IMat d1 = differential_matrix(x, a, 1);
  CochainVec out = d1.apply(g);
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] %= a.factors()[i % a.rank()];
    if (out[i] < 0) out[i] += a.factors()[i % a.rank()];
  }
  return out;
}

/// The extension table built blindly from the formula, without the cocycle
/// precondition; used to test both directions of the correspondence.
QuandleTable raw_extension(const QuandleTable& x, const CoefficientModule& a,
                           const CochainVec& psi) {
  CochainBasis b2(x, 2);
  const std::size_t q = x.size();
  const std::size_t f = a.order();
  const std::size_t m = a.rank();
  std::vector<std::vector<int>> table(q * f, std::vector<int>(q * f));
  for (std::size_t xi = 0; xi < q; ++xi)
    for (std::size_t ai = 0; ai < f; ++ai)
      for (std::size_t yi = 0; yi < q; ++yi)
        for (std::size_t bi = 0; bi < f; ++bi) {
          IVec val = a.quandle_op(a.element(ai), a.element(bi));
          long t = b2.index_of({static_cast<int>(xi), static_cast<int>(yi)});
          if (t >= 0) {
            IVec ps(m);
            for (std::size_t j = 0; j < m; ++j) ps[j] = psi[t * m + j];
            val = a.add(val, ps);
          }
          table[xi * f + ai][yi * f + bi] =
              static_cast<int>(x.op(static_cast<int>(xi), static_cast<int>(yi)) * f +
                               a.index_of(val));
        }
  return QuandleTable(q * f, std::move(table));
}

/// phi((a1,a2),(b1,b2)) = b2 - a2 on the two-step quandle over Z/3.
CochainVec second_coordinate_cocycle(const QuandleTable& gm, const CoefficientModule& a) {
  CochainBasis b2(gm, 2);
  CochainVec phi(b2.size());
  for (std::size_t i = 0; i < b2.size(); ++i) {
    int s = b2.tuple(i)[0], t = b2.tuple(i)[1];
    phi[i] = ((t % 3) - (s % 3) + 3) % 3;
  }
  (void)a;
  return phi;
}

}  // namespace

TEST_CASE("zero-cocycle extension is the twisted direct product") {
  QuandleTable r3 = make_dihedral(3);
  CoefficientModule a(3, 2);
  CochainBasis b2(r3, 2);
  ExtensionTable e = extend(r3, a, CochainVec(b2.size(), Int(0)));
  CHECK(e.total.size() == 9);
  CHECK(verify_quandle(e.total).ok());
  // (0,0)*(1,1) = (0*1, 2*0 + (1-2)*1) = (2, 2)
  CHECK(e.total.op(e.index(0, 0), e.index(1, 1)) == e.index(2, 2));
  std::vector<int> proj(9);
  for (int i = 0; i < 9; ++i) proj[i] = i / 3;
  CHECK(is_quandle_hom(proj, e.total, r3));
}

TEST_CASE("two-step quandle cocycle gives a valid 27-element extension") {
  QuandleTable gm = make_gm(cyclic(3), 2);
  CoefficientModule a(3, 1);
  CochainVec phi = second_coordinate_cocycle(gm, a);
  CHECK(is_cocycle(gm, a, 2, phi));
  ExtensionTable e = extend(gm, a, phi);
  CHECK(e.total.size() == 27);
  CHECK(verify_quandle(e.total).ok());
}

TEST_CASE("second-coordinate cocycle is not a coboundary, against full enumeration") {
  QuandleTable gm = make_gm(cyclic(3), 2);
  CoefficientModule a(3, 1);
  CochainVec phi = second_coordinate_cocycle(gm, a);
  CHECK_FALSE(is_coboundary(gm, a, 2, phi).has_value());
  // Independent oracle: no g among all 3^9 functions X -> Z/3 has delta g = phi.
  const std::size_t q = gm.size();
  IMat d1 = differential_matrix(gm, a, 1);
  bool found = false;
  for (long code = 0; code < 19683 && !found; ++code) {
    long c = code;
    CochainVec g(q);
    for (std::size_t i = 0; i < q; ++i, c /= 3) g[i] = c % 3;
    CochainVec dg = d1.apply(g);
    bool eq = true;
    for (std::size_t i = 0; i < dg.size() && eq; ++i)
      eq = ((dg[i] - phi[i]) % 3 == 0);
    found = eq;
  }
  CHECK_FALSE(found);
}

TEST_CASE("non-cocycles are rejected with a violating triple") {
  QuandleTable r3 = make_dihedral(3);
  CoefficientModule a(3, 1);
  CochainBasis b2(r3, 2);
  CochainVec bad(b2.size(), Int(0));
  bad[0] = 1;  // a single non-zero value cannot satisfy the cocycle identity
  REQUIRE_FALSE(is_cocycle(r3, a, 2, bad));
  CHECK_THROWS_AS(extend(r3, a, bad), NotACocycle);
  try {
    extend(r3, a, bad);
  } catch (const NotACocycle& e) {
    auto viol = check_2cocycle_condition(r3, a, b2, bad);
    REQUIRE(viol.has_value());
    CHECK(e.triple == *viol);
  }
}

TEST_CASE("the raw formula yields a quandle exactly for cocycles") {
  QuandleTable r3 = make_dihedral(3);
  CoefficientModule a(2, 1);
  CochainBasis b2(r3, 2);
  int cocycles = 0;
  for (long code = 0; code < (1L << b2.size()); ++code) {
    CochainVec psi(b2.size());
    for (std::size_t i = 0; i < b2.size(); ++i) psi[i] = (code >> i) & 1;
    bool coc = is_cocycle(r3, a, 2, psi);
    CHECK(verify_quandle(raw_extension(r3, a, psi)).ok() == coc);
    if (coc) ++cocycles;
  }
  CHECK(cocycles > 1);  // the zero cochain is never alone
}

TEST_CASE("equivalence witnesses match brute force over Z/2") {
  QuandleTable r3 = make_dihedral(3);
  CoefficientModule a(2, 1);
  CochainBasis b2(r3, 2);
  std::vector<CochainVec> cocycles;
  for (long code = 0; code < (1L << b2.size()); ++code) {
    CochainVec psi(b2.size());
    for (std::size_t i = 0; i < b2.size(); ++i) psi[i] = (code >> i) & 1;
    if (is_cocycle(r3, a, 2, psi)) cocycles.push_back(psi);
  }
  for (const auto& psi : cocycles)
    for (const auto& phi : cocycles) {
      auto witness = equivalent(r3, a, psi, phi);
      // Brute force over the 2^3 candidate 1-cochains.
      bool exists = false;
      for (int code = 0; code < 8 && !exists; ++code) {
        CochainVec g{(code >> 0) & 1, (code >> 1) & 1, (code >> 2) & 1};
        CochainVec dg = delta1(r3, a, g);
        bool eq = true;
        for (std::size_t i = 0; i < dg.size() && eq; ++i)
          eq = ((dg[i] - (psi[i] - phi[i])) % 2 == 0);
        exists = eq;
      }
      CHECK(witness.has_value() == exists);
      if (witness) {
        CochainVec dg = delta1(r3, a, *witness);
        for (std::size_t i = 0; i < dg.size(); ++i)
          CHECK((dg[i] - (psi[i] - phi[i])) % 2 == 0);
      }
    }
}

TEST_CASE("second-coordinate cocycle is inequivalent to the product extension") {
  QuandleTable gm = make_gm(cyclic(3), 2);
  CoefficientModule a(3, 1);
  CochainVec phi = second_coordinate_cocycle(gm, a);
  CochainVec zero(phi.size(), Int(0));
  CHECK_FALSE(equivalent(gm, a, phi, zero).has_value());
  CHECK(equivalent(gm, a, phi, phi).has_value());
}

TEST_CASE("equivalence witness induces a fiber-preserving isomorphism of totals") {
  QuandleTable r3 = make_dihedral(3);
  CoefficientModule a(3, 1);
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> d(0, 2);
  CochainVec g0{d(rng), d(rng), d(rng)};
  CochainVec psi = delta1(r3, a, g0);
  CochainVec zero(psi.size(), Int(0));
  auto witness = equivalent(r3, a, psi, zero);
  REQUIRE(witness.has_value());
  ExtensionTable e1 = extend(r3, a, psi);
  ExtensionTable e0 = extend(r3, a, zero);
  // f(x, a) = (x, a + g(x)) carries the psi-extension onto the product.
  std::vector<int> f(9);
  for (int x = 0; x < 3; ++x)
    for (int ai = 0; ai < 3; ++ai)
      f[e1.index(x, ai)] = e0.index(x, static_cast<int>((ai + (*witness)[x].get_si()) % 3));
  CHECK(is_quandle_hom(f, e1.total, e0.total));
  CHECK(is_surjective(f, 9));
}

TEST_CASE("untwisted extensions give valid principal data and round-trip the cocycle") {
  QuandleTable r3 = make_dihedral(3);
  CoefficientModule a(3, 1);
  std::mt19937 rng(6);
  std::uniform_int_distribution<int> d(0, 2);
  for (int trial = 0; trial < 5; ++trial) {
    CochainVec g{d(rng), d(rng), d(rng)};
    CochainVec psi = delta1(r3, a, g);
    ExtensionTable e = extend(r3, a, psi);
    PrincipalData pd = principal_from_extension(r3, a, e);
    CHECK_FALSE(validate_principal(pd, a).has_value());
    CHECK(extract_principal_cocycle(pd, a) == psi);
  }
}

TEST_CASE("trivial double cover extracts the zero cocycle") {
  QuandleTable r3 = make_dihedral(3);
  CoefficientModule z2(2, 1);
  CochainBasis b2(r3, 2);
  ExtensionTable e = extend(r3, z2, CochainVec(b2.size(), Int(0)));
  PrincipalData pd = principal_from_extension(r3, z2, e);
  CochainVec phi = extract_principal_cocycle(pd, z2);
  CHECK(discrete_fiber_vanishing_check(pd, z2, phi));
}

TEST_CASE("a section built from a coboundary witness trivializes the cocycle") {
  QuandleTable r3 = make_dihedral(3);
  CoefficientModule a(3, 1);
  CochainVec g{1, 2, 0};
  CochainVec psi = delta1(r3, a, g);
  ExtensionTable e = extend(r3, a, psi);
  PrincipalData pd = principal_from_extension(r3, a, e);
  for (int x = 0; x < 3; ++x)
    pd.section[x] = e.index(x, static_cast<int>(((3 - g[x].get_si()) % 3)));
  CHECK_FALSE(validate_principal(pd, a).has_value());
  CochainVec phi = extract_principal_cocycle(pd, a);
  CHECK(discrete_fiber_vanishing_check(pd, a, phi));
}

TEST_CASE("corrupted principal data is reported") {
  QuandleTable r3 = make_dihedral(3);
  CoefficientModule a(3, 1);
  CochainBasis b2(r3, 2);
  ExtensionTable e = extend(r3, a, CochainVec(b2.size(), Int(0)));
  PrincipalData pd = principal_from_extension(r3, a, e);
  pd.projection[0] = 1;
  CHECK(validate_principal(pd, a).has_value());
  CHECK_THROWS_AS(extract_principal_cocycle(pd, a), std::domain_error);
}
