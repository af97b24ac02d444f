#include "qch/quandle.hpp"

#include <numeric>
#include <stdexcept>

namespace qch {

std::string AxiomViolation::describe() const {
  switch (kind) {
    case Kind::BadEntry:
      return "entry out of range at (" + std::to_string(x) + "," + std::to_string(y) + ")";
    case Kind::Idempotency:
      return "idempotency fails at x=" + std::to_string(x);
    case Kind::RightInvertibility:
      return "column " + std::to_string(y) + " is not a permutation (values " +
             std::to_string(x) + " and " + std::to_string(z) + " collide)";
    case Kind::SelfDistributivity:
      return "(x*y)*z != (x*z)*(y*z) at (" + std::to_string(x) + "," + std::to_string(y) +
             "," + std::to_string(z) + ")";
  }
  return "unknown";
}

ValidationReport verify_quandle(const QuandleTable& t) {
  ValidationReport rep;
  const int q = static_cast<int>(t.size());
  if (static_cast<int>(t.table().size()) != q) {
    rep.violations.push_back({AxiomViolation::Kind::BadEntry, -1, -1, -1});
    return rep;
  }
  for (int x = 0; x < q; ++x) {
    if (static_cast<int>(t.table()[x].size()) != q) {
      rep.violations.push_back({AxiomViolation::Kind::BadEntry, x, -1, -1});
      return rep;
    }
    for (int y = 0; y < q; ++y)
      if (t.op(x, y) < 0 || t.op(x, y) >= q) {
        rep.violations.push_back({AxiomViolation::Kind::BadEntry, x, y, -1});
        return rep;
      }
  }
  for (int x = 0; x < q; ++x)
    if (t.op(x, x) != x)
      rep.violations.push_back({AxiomViolation::Kind::Idempotency, x, -1, -1});
  // Axiom (i): each column must be a permutation.
  for (int y = 0; y < q; ++y) {
    std::vector<int> seen(q, -1);
    for (int x = 0; x < q; ++x) {
      int v = t.op(x, y);
      if (seen[v] >= 0) {
        rep.violations.push_back({AxiomViolation::Kind::RightInvertibility, seen[v], y, x});
      } else {
        seen[v] = x;
      }
    }
  }
  for (int x = 0; x < q; ++x)
    for (int y = 0; y < q; ++y)
      for (int z = 0; z < q; ++z)
        if (t.op(t.op(x, y), z) != t.op(t.op(x, z), t.op(y, z)))
          rep.violations.push_back({AxiomViolation::Kind::SelfDistributivity, x, y, z});
  return rep;
}

QuandleTable make_dihedral(int n) {
  if (n < 1) throw std::domain_error("make_dihedral: n must be >= 1");
  std::vector<std::vector<int>> tab(n, std::vector<int>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) tab[x][y] = ((2 * y - x) % n + n) % n;
  return {static_cast<std::size_t>(n), std::move(tab)};
}

QuandleTable make_alexander(int m, int u) {
  if (m < 1) throw std::domain_error("make_alexander: modulus must be >= 1");
  int uu = ((u % m) + m) % m;
  if (std::gcd(uu, m) != 1) throw std::domain_error("make_alexander: u is not a unit mod m");
  std::vector<std::vector<int>> tab(m, std::vector<int>(m));
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y) tab[x][y] = (((uu * x + (1 - uu) * y) % m) + m) % m;
  return {static_cast<std::size_t>(m), std::move(tab)};
}

int GroupTable::inv(int a) const {
  for (int b = 0; b < static_cast<int>(size); ++b)
    if (mul(a, b) == 0) return b;
  return -1;
}

bool GroupTable::is_abelian() const {
  for (int a = 0; a < static_cast<int>(size); ++a)
    for (int b = 0; b < a; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

std::optional<std::string> validate_group(const GroupTable& g) {
  const int n = static_cast<int>(g.size);
  if (n < 1 || static_cast<int>(g.table.size()) != n) return "bad table shape";
  for (const auto& row : g.table) {
    if (static_cast<int>(row.size()) != n) return "bad table shape";
    for (int v : row)
      if (v < 0 || v >= n) return "entry out of range";
  }
  for (int a = 0; a < n; ++a)
    if (g.mul(0, a) != a || g.mul(a, 0) != a) return "index 0 is not an identity";
  for (int a = 0; a < n; ++a)
    if (g.inv(a) < 0) return "element " + std::to_string(a) + " has no inverse";
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c)))
          return "associativity fails at (" + std::to_string(a) + "," + std::to_string(b) +
                 "," + std::to_string(c) + ")";
  return std::nullopt;
}

QuandleTable make_conjugation(const GroupTable& g) {
  if (auto err = validate_group(g)) throw std::domain_error("make_conjugation: " + *err);
  const int n = static_cast<int>(g.size);
  std::vector<std::vector<int>> tab(n, std::vector<int>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) tab[x][y] = g.mul(g.mul(g.inv(y), x), y);
  return {static_cast<std::size_t>(n), std::move(tab)};
}

QuandleTable make_gm(const GroupTable& g, int m) {
  if (auto err = validate_group(g)) throw std::domain_error("make_gm: " + *err);
  if (!g.is_abelian()) throw std::domain_error("make_gm: group must be abelian");
  if (m < 1) throw std::domain_error("make_gm: m must be >= 1");
  const int n = static_cast<int>(g.size);
  std::size_t total = 1;
  for (int i = 0; i < m; ++i) total *= n;

  // Lexicographic flattening: index = a_1 * n^{m-1} + ... + a_m.
  auto unflatten = [&](std::size_t idx) {
    std::vector<int> a(m);
    for (int i = m - 1; i >= 0; --i) {
      a[i] = static_cast<int>(idx % n);
      idx /= n;
    }
    return a;
  };
  auto flatten = [&](const std::vector<int>& a) {
    std::size_t idx = 0;
    for (int i = 0; i < m; ++i) idx = idx * n + a[i];
    return idx;
  };

  std::vector<std::vector<int>> tab(total, std::vector<int>(total));
  for (std::size_t xi = 0; xi < total; ++xi) {
    auto a = unflatten(xi);
    for (std::size_t yi = 0; yi < total; ++yi) {
      auto b = unflatten(yi);
      std::vector<int> c(m);
      c[0] = a[0];
      for (int i = 1; i < m; ++i) c[i] = g.mul(a[i], g.mul(b[i - 1], g.inv(a[i - 1])));
      tab[xi][yi] = static_cast<int>(flatten(c));
    }
  }
  return {total, std::move(tab)};
}

QuandleTable make_trivial(int q) {
  if (q < 1) throw std::domain_error("make_trivial: q must be >= 1");
  std::vector<std::vector<int>> tab(q, std::vector<int>(q));
  for (int x = 0; x < q; ++x)
    for (int y = 0; y < q; ++y) tab[x][y] = x;
  return {static_cast<std::size_t>(q), std::move(tab)};
}

OrbitPartition inner_orbits(const QuandleTable& t) {
  const int q = static_cast<int>(t.size());
  std::vector<int> parent(q);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  // Orbits of <R_y> are the components of the edge set {x ~ x*y}.
  for (int x = 0; x < q; ++x)
    for (int y = 0; y < q; ++y) {
      int a = find(x), b = find(t.op(x, y));
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  std::vector<std::vector<int>> byroot(q);
  for (int x = 0; x < q; ++x) byroot[find(x)].push_back(x);
  OrbitPartition p;
  for (auto& blk : byroot)
    if (!blk.empty()) p.blocks.push_back(std::move(blk));
  return p;
}

bool is_quandle_hom(const std::vector<int>& f, const QuandleTable& x, const QuandleTable& y) {
  if (f.size() != x.size()) throw std::invalid_argument("is_quandle_hom: size mismatch");
  for (int v : f)
    if (v < 0 || v >= static_cast<int>(y.size()))
      throw std::invalid_argument("is_quandle_hom: value out of range");
  for (std::size_t a = 0; a < x.size(); ++a)
    for (std::size_t b = 0; b < x.size(); ++b)
      if (f[x.op(static_cast<int>(a), static_cast<int>(b))] != y.op(f[a], f[b])) return false;
  return true;
}

bool is_surjective(const std::vector<int>& f, std::size_t target_size) {
  std::vector<bool> hit(target_size, false);
  for (int v : f)
    if (v >= 0 && v < static_cast<int>(target_size)) hit[v] = true;
  for (bool h : hit)
    if (!h) return false;
  return true;
}

}  // namespace qch
