#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace qch {

/// Finite quandle as an operation table: table[x][y] = x*y, elements 0..size-1.
class QuandleTable {
public:
  QuandleTable() = default;
  QuandleTable(std::size_t size, std::vector<std::vector<int>> table)
      : size_(size), table_(std::move(table)) {}

  std::size_t size() const { return size_; }
  int op(int x, int y) const { return table_[x][y]; }
  const std::vector<std::vector<int>>& table() const { return table_; }

  /// z with z*y = x (axiom (i) guarantees existence and uniqueness).
  int inv_op(int x, int y) const {
    for (int z = 0; z < static_cast<int>(size_); ++z)
      if (table_[z][y] == x) return z;
    return -1;
  }

  bool operator==(const QuandleTable& o) const {
    return size_ == o.size_ && table_ == o.table_;
  }

private:
  std::size_t size_ = 0;
  std::vector<std::vector<int>> table_;
};

/// One axiom violation with a witness.
struct AxiomViolation {
  enum class Kind { Idempotency, RightInvertibility, SelfDistributivity, BadEntry };
  Kind kind;
  int x = -1, y = -1, z = -1;
  std::string describe() const;
};

/// Result of verify_quandle: empty iff the table is a quandle.
struct ValidationReport {
  std::vector<AxiomViolation> violations;
  bool ok() const { return violations.empty(); }
};

/// Partition of the elements into orbits of the inner automorphism group.
struct OrbitPartition {
  std::vector<std::vector<int>> blocks;
  bool indecomposable() const { return blocks.size() == 1; }
};

/// Checks all three quandle axioms exhaustively; reports every violation.
ValidationReport verify_quandle(const QuandleTable& t);

/// Dihedral (Takasaki) quandle on Z/n: x*y = 2y - x.
QuandleTable make_dihedral(int n);

/// Alexander quandle on Z/m with unit u: x*y = u x + (1-u) y.
/// Throws std::domain_error if gcd(u, m) != 1.
QuandleTable make_alexander(int m, int u);

/// Finite group as a multiplication table, identity at index 0.
struct GroupTable {
  std::size_t size = 0;
  std::vector<std::vector<int>> table;  // table[a][b] = a.b
  int mul(int a, int b) const { return table[a][b]; }
  int inv(int a) const;
  bool is_abelian() const;
};

/// Validates group axioms; returns an error description on failure.
std::optional<std::string> validate_group(const GroupTable& g);

/// Conjugation quandle of a finite group: x*y = y^{-1} x y.
QuandleTable make_conjugation(const GroupTable& g);

/// Quandle on G^m: (a_1,..,a_m)*(b_1,..,b_m) = (a_1, a_2+b_1-a_1, .., a_m+b_{m-1}-a_{m-1}),
/// elements flattened lexicographically. Requires G abelian.
QuandleTable make_gm(const GroupTable& g, int m);

/// Trivial quandle x*y = x on q elements.
QuandleTable make_trivial(int q);

/// Orbits of the subgroup of Sym(X) generated by all right translations.
OrbitPartition inner_orbits(const QuandleTable& t);

/// True iff f(x *_X y) = f(x) *_Y f(y) for all pairs.
bool is_quandle_hom(const std::vector<int>& f, const QuandleTable& x, const QuandleTable& y);

bool is_surjective(const std::vector<int>& f, std::size_t target_size);

}  // namespace qch
