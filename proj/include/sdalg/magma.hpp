#pragma once

// Finite magmas (shelves, racks, quandles) given by Cayley tables.

#include <array>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace sdalg {

using Index = std::size_t;

/// Operation on {0..n-1}; op(x, y) = x * y.
class FiniteMagma {
 public:
  FiniteMagma() = default;
  /// Throws std::invalid_argument for an empty, ragged or out-of-range table.
  explicit FiniteMagma(std::vector<std::vector<Index>> table);

  Index size() const { return table_.size(); }
  Index operator()(Index x, Index y) const { return table_[x][y]; }
  const std::vector<std::vector<Index>>& table() const { return table_; }

  friend bool operator==(const FiniteMagma&, const FiniteMagma&) = default;

 private:
  std::vector<std::vector<Index>> table_;
};

enum class MagmaClass { none, shelf, rack, quandle };

std::string to_string(MagmaClass c);

/// Flags for (Q1) idempotency, (Q2) right-translation bijectivity and (Q3)
/// right self-distributivity. Each witness is present iff its flag is false.
struct MagmaReport {
  bool q1 = true;
  bool q2 = true;
  bool q3 = true;
  std::optional<std::array<Index, 3>> q1_witness;  // (x, x, x) with x*x != x
  std::optional<std::array<Index, 3>> q2_witness;  // (z1, z2, y) with z1*y == z2*y
  std::optional<std::array<Index, 3>> q3_witness;  // (x, y, z) breaking (Q3)
  MagmaClass label = MagmaClass::none;

  bool is_rack() const { return q2 && q3; }
};

MagmaReport check_axioms(const FiniteMagma& m);

class NoDivision : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Table of the right division: left_divide(m)(b, a) * a == b. Throws NoDivision
/// if some right translation is not a bijection.
FiniteMagma left_divide(const FiniteMagma& m);

/// Two-sided unit e with e*x == x*e == x, if any.
std::optional<Index> unit_check(const FiniteMagma& m);

/// Finite group as a Cayley table, validated on construction.
class GroupTable {
 public:
  /// Throws std::invalid_argument unless the table is a group.
  GroupTable(std::string name, std::vector<std::vector<Index>> table);

  const std::string& name() const { return name_; }
  Index order() const { return table_.size(); }
  Index mul(Index a, Index b) const { return table_[a][b]; }
  Index identity() const { return identity_; }
  Index inverse(Index a) const { return inverse_[a]; }
  const std::vector<std::vector<Index>>& table() const { return table_; }

 private:
  std::string name_;
  std::vector<std::vector<Index>> table_;
  Index identity_ = 0;
  std::vector<Index> inverse_;
};

namespace groups {
GroupTable cyclic(Index n);
GroupTable symmetric3();
GroupTable dihedral4();  // order 8
GroupTable quaternion8();
/// Z2..Z6, S3, D4, Q8.
std::vector<GroupTable> catalog();
/// Looks up a catalog entry by name ("Z3", "S3", "D4", "Q8"). Throws on unknown names.
GroupTable by_name(const std::string& name);
}  // namespace groups

namespace magmas {
/// T_n: x * y = x.
FiniteMagma trivial(Index n);
/// R_n: x * y = 2y - x mod n.
FiniteMagma dihedral(Index n);
/// Conj(G): x * y = y x y^-1, so that the right translations are the adjoint action.
FiniteMagma conjugation(const GroupTable& g);
}  // namespace magmas

/// All racks on {0..n-1}. With up_to_isomorphism, one canonical table per
/// isomorphism class (lexicographically least relabelling).
std::vector<FiniteMagma> enumerate_racks(Index n, bool up_to_isomorphism);

/// Lexicographically least table among all relabellings of m.
FiniteMagma canonical_form(const FiniteMagma& m);

}  // namespace sdalg
