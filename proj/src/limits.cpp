#include "qch/limits.hpp"

#include "qch/snf.hpp"

#include <numeric>
#include <stdexcept>

namespace qch {

namespace {

bool is_odd_prime(int p) {
  if (p < 3 || p % 2 == 0) return false;
  for (int d = 3; d * d <= p; d += 2)
    if (p % d == 0) return false;
  return true;
}

long ipow(int b, int e) {
  long r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

}  // namespace

std::optional<std::string> TowerSystem::validate() const {
  if (stages.empty()) return "empty tower";
  if (projections.size() + 1 != stages.size() || coeff_maps.size() + 1 != stages.size())
    return "need exactly one projection and one coefficient map per consecutive pair";
  for (std::size_t n = 0; n + 1 < stages.size(); ++n) {
    const auto& f = projections[n];
    if (f.size() != stages[n + 1].x.size())
      return "projection " + std::to_string(n) + " has the wrong domain size";
    if (!is_quandle_hom(f, stages[n + 1].x, stages[n].x))
      return "projection " + std::to_string(n) + " is not a quandle hom";
    if (!is_surjective(f, stages[n].x.size()))
      return "projection " + std::to_string(n) + " is not surjective";

    const auto& src = stages[n].a;
    const auto& dst = stages[n + 1].a;
    const IMat& phi = coeff_maps[n];
    if (phi.rows() != dst.rank() || phi.cols() != src.rank())
      return "coefficient map " + std::to_string(n) + " has the wrong shape";
    if (!is_well_defined_hom(phi, src.factors(), dst.factors()))
      return "coefficient map " + std::to_string(n) + " is not well defined";
    IMat lhs = phi * src.T();
    IMat rhs = dst.T() * phi;
    for (std::size_t i = 0; i < lhs.rows(); ++i)
      for (std::size_t j = 0; j < lhs.cols(); ++j)
        if ((lhs(i, j) - rhs(i, j)) % dst.factors()[i] != 0)
          return "coefficient map " + std::to_string(n) + " does not commute with the twists";
  }
  return std::nullopt;
}

TowerSystem make_dihedral_tower(int p, int depth, const CoefficientModule& coeff) {
  if (!is_odd_prime(p)) throw std::domain_error("make_dihedral_tower: p must be an odd prime");
  if (depth < 1) throw std::domain_error("make_dihedral_tower: depth must be at least 1");
  TowerSystem sys;
  for (int n = 1; n <= depth; ++n)
    sys.stages.push_back({make_dihedral(static_cast<int>(ipow(p, n))), coeff});
  for (int n = 1; n < depth; ++n) {
    long lo = ipow(p, n), hi = ipow(p, n + 1);
    std::vector<int> f(hi);
    for (long i = 0; i < hi; ++i) f[i] = static_cast<int>(i % lo);
    sys.projections.push_back(std::move(f));
    sys.coeff_maps.push_back(IMat::identity(coeff.rank()));
  }
  return sys;
}

TowerSystem make_alexander_tower(int p, int u, int depth) {
  if (!is_odd_prime(p) && p != 2) throw std::domain_error("make_alexander_tower: p must be prime");
  if (depth < 1) throw std::domain_error("make_alexander_tower: depth must be at least 1");
  if (std::gcd(((u % p) + p) % p, p) != 1)
    throw std::domain_error("make_alexander_tower: u must be a unit mod p");
  TowerSystem sys;
  for (int n = 1; n <= depth; ++n) {
    long m = ipow(p, n);
    int un = static_cast<int>(((u % m) + m) % m);
    sys.stages.push_back({make_alexander(static_cast<int>(m), un),
                          CoefficientModule(Int(m), Int(un))});
  }
  for (int n = 1; n < depth; ++n) {
    long lo = ipow(p, n), hi = ipow(p, n + 1);
    std::vector<int> f(hi);
    for (long i = 0; i < hi; ++i) f[i] = static_cast<int>(i % lo);
    sys.projections.push_back(std::move(f));
    IMat mul(1, 1);
    mul(0, 0) = p;
    sys.coeff_maps.push_back(std::move(mul));
  }
  return sys;
}

Presentation subgroup_presentation(const IMat& m, const IVec& moduli) {
  const std::size_t n = moduli.size();
  const std::size_t k = m.cols();
  Presentation out;
  if (k == 0) return out;
  if (m.rows() != n) throw std::invalid_argument("subgroup_presentation: shape mismatch");
  // Relations among the k given generators: v with M v = 0 in ⊕ Z/moduli,
  // i.e. the first k coordinates of the integer kernel of [M | diag(moduli)].
  IMat a(n, k + n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < k; ++j) a(i, j) = m(i, j);
    a(i, k + i) = moduli[i];
  }
  SmithOptions opts;
  opts.want_V = true;
  SmithForm sf = smith_normal_form(a, opts);
  IVec diag = sf.diag();
  std::vector<std::size_t> kernel_cols;
  for (std::size_t j = 0; j < k + n; ++j)
    if (j >= diag.size() || diag[j] == 0) kernel_cols.push_back(j);
  IMat rel(k, kernel_cols.size());
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < kernel_cols.size(); ++j)
      rel(i, j) = sf.V(i, kernel_cols[j]);
  SmithForm rf = smith_normal_form(rel);
  IVec rd = rf.diag();
  std::size_t rank = 0;
  for (const auto& d : rd)
    if (d != 0) ++rank;
  out.free_rank = static_cast<long>(k - rank);
  for (const auto& d : rd)
    if (d > 1) out.torsion.push_back(d);
  return out;
}

ColimitResult tower_cohomology(const TowerSystem& sys, int degree) {
  if (auto err = sys.validate()) throw std::domain_error("tower_cohomology: " + *err);
  ColimitResult res;
  for (const auto& st : sys.stages)
    res.stages.push_back(cohomology_group(st.x, st.a, degree));
  for (std::size_t n = 0; n + 1 < sys.stages.size(); ++n)
    res.connecting.push_back(induced_map(sys.projections[n], sys.stages[n].x,
                                         sys.stages[n + 1].x, res.stages[n],
                                         res.stages[n + 1], sys.coeff_maps[n]));
  const std::size_t dep = sys.depth();
  if (dep == 1) {
    res.colimit = res.stages[0].presentation();
    res.stabilized = false;
    return res;
  }
  const IVec& orders = res.stages[dep - 1].h.generator_orders();
  Presentation image = subgroup_presentation(res.connecting[dep - 2], orders);
  Presentation two_step;
  if (dep >= 3)
    two_step = subgroup_presentation(res.connecting[dep - 2] * res.connecting[dep - 3], orders);
  res.stabilized = (image == two_step);
  res.colimit = res.stabilized ? image : res.stages[dep - 1].presentation();
  return res;
}

}  // namespace qch
