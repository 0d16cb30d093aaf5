#include "sdalg/magma.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace sdalg {

FiniteMagma::FiniteMagma(std::vector<std::vector<Index>> table) : table_(std::move(table)) {
  const Index n = table_.size();
  if (n == 0) throw std::invalid_argument("magma must be non-empty");
  for (const auto& row : table_) {
    if (row.size() != n) throw std::invalid_argument("magma table must be square");
    for (Index v : row)
      if (v >= n) throw std::invalid_argument("magma entry out of range: " + std::to_string(v));
  }
}

std::string to_string(MagmaClass c) {
  switch (c) {
    case MagmaClass::none:
      return "none";
    case MagmaClass::shelf:
      return "shelf";
    case MagmaClass::rack:
      return "rack";
    case MagmaClass::quandle:
      return "quandle";
  }
  return "?";
}

MagmaReport check_axioms(const FiniteMagma& m) {
  const Index n = m.size();
  MagmaReport r;
  for (Index x = 0; x < n && r.q1; ++x)
    if (m(x, x) != x) {
      r.q1 = false;
      r.q1_witness = std::array<Index, 3>{x, x, x};
    }
  for (Index y = 0; y < n && r.q2; ++y) {
    std::vector<Index> preimage(n, n);
    for (Index z = 0; z < n; ++z) {
      Index v = m(z, y);
      if (preimage[v] != n) {
        r.q2 = false;
        r.q2_witness = std::array<Index, 3>{preimage[v], z, y};
        break;
      }
      preimage[v] = z;
    }
  }
  for (Index x = 0; x < n && r.q3; ++x)
    for (Index y = 0; y < n && r.q3; ++y)
      for (Index z = 0; z < n; ++z)
        if (m(m(x, y), z) != m(m(x, z), m(y, z))) {
          r.q3 = false;
          r.q3_witness = std::array<Index, 3>{x, y, z};
          break;
        }
  if (r.q3) r.label = !r.q2 ? MagmaClass::shelf : (r.q1 ? MagmaClass::quandle : MagmaClass::rack);
  return r;
}

FiniteMagma left_divide(const FiniteMagma& m) {
  const Index n = m.size();
  std::vector<std::vector<Index>> bar(n, std::vector<Index>(n, n));
  for (Index a = 0; a < n; ++a)
    for (Index c = 0; c < n; ++c) {
      Index b = m(c, a);
      if (bar[b][a] != n)
        throw NoDivision("right translation by " + std::to_string(a) + " is not a bijection");
      bar[b][a] = c;
    }
  return FiniteMagma(std::move(bar));
}

std::optional<Index> unit_check(const FiniteMagma& m) {
  for (Index e = 0; e < m.size(); ++e) {
    bool unit = true;
    for (Index x = 0; x < m.size() && unit; ++x) unit = m(e, x) == x && m(x, e) == x;
    if (unit) return e;
  }
  return std::nullopt;
}

GroupTable::GroupTable(std::string name, std::vector<std::vector<Index>> table)
    : name_(std::move(name)), table_(std::move(table)) {
  const Index n = table_.size();
  if (n == 0) throw std::invalid_argument("group must be non-empty");
  for (const auto& row : table_) {
    if (row.size() != n) throw std::invalid_argument("group table must be square");
    for (Index v : row)
      if (v >= n) throw std::invalid_argument("group entry out of range");
  }
  bool found = false;
  for (Index e = 0; e < n && !found; ++e) {
    bool ok = true;
    for (Index x = 0; x < n && ok; ++x) ok = table_[e][x] == x && table_[x][e] == x;
    if (ok) {
      identity_ = e;
      found = true;
    }
  }
  if (!found) throw std::invalid_argument(name_ + ": no identity element");
  inverse_.assign(n, n);
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b)
      if (table_[a][b] == identity_ && table_[b][a] == identity_) inverse_[a] = b;
  for (Index a = 0; a < n; ++a)
    if (inverse_[a] == n) throw std::invalid_argument(name_ + ": element without inverse");
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b)
      for (Index c = 0; c < n; ++c)
        if (table_[table_[a][b]][c] != table_[a][table_[b][c]])
          throw std::invalid_argument(name_ + ": not associative");
}

namespace groups {

GroupTable cyclic(Index n) {
  std::vector<std::vector<Index>> t(n, std::vector<Index>(n));
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  return GroupTable("Z" + std::to_string(n), std::move(t));
}

namespace {

// Closes a permutation group given by explicit elements (listed in a fixed order).
GroupTable from_permutations(std::string name, const std::vector<std::vector<Index>>& perms) {
  const Index n = perms.size();
  auto find = [&](const std::vector<Index>& p) {
    auto it = std::find(perms.begin(), perms.end(), p);
    if (it == perms.end()) throw std::logic_error(name + ": permutation list not closed");
    return static_cast<Index>(it - perms.begin());
  };
  std::vector<std::vector<Index>> t(n, std::vector<Index>(n));
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b) {
      // (a b)(i) = a(b(i))
      std::vector<Index> c(perms[a].size());
      for (Index i = 0; i < c.size(); ++i) c[i] = perms[a][perms[b][i]];
      t[a][b] = find(c);
    }
  return GroupTable(std::move(name), std::move(t));
}

}  // namespace

GroupTable symmetric3() {
  return from_permutations("S3", {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {1, 0, 2}, {0, 2, 1}, {2, 1, 0}});
}

GroupTable dihedral4() {
  // Symmetries of a square acting on its vertices 0..3.
  return from_permutations("D4", {{0, 1, 2, 3},
                                  {1, 2, 3, 0},
                                  {2, 3, 0, 1},
                                  {3, 0, 1, 2},
                                  {3, 2, 1, 0},
                                  {1, 0, 3, 2},
                                  {0, 3, 2, 1},
                                  {2, 1, 0, 3}});
}

GroupTable quaternion8() {
  // Elements 1, i, j, k, -1, -i, -j, -k encoded as sign*4 + unit.
  const int unit_mul[4][4][2] = {
      // {unit, sign flip}
      {{0, 0}, {1, 0}, {2, 0}, {3, 0}},
      {{1, 0}, {0, 1}, {3, 0}, {2, 1}},
      {{2, 0}, {3, 1}, {0, 1}, {1, 0}},
      {{3, 0}, {2, 0}, {1, 1}, {0, 1}},
  };
  std::vector<std::vector<Index>> t(8, std::vector<Index>(8));
  for (Index a = 0; a < 8; ++a)
    for (Index b = 0; b < 8; ++b) {
      const auto& e = unit_mul[a % 4][b % 4];
      Index sign = (a / 4 + b / 4 + static_cast<Index>(e[1])) % 2;
      t[a][b] = sign * 4 + static_cast<Index>(e[0]);
    }
  return GroupTable("Q8", std::move(t));
}

std::vector<GroupTable> catalog() {
  std::vector<GroupTable> out;
  for (Index n = 2; n <= 6; ++n) out.push_back(cyclic(n));
  out.push_back(symmetric3());
  out.push_back(dihedral4());
  out.push_back(quaternion8());
  return out;
}

GroupTable by_name(const std::string& name) {
  for (auto& g : catalog())
    if (g.name() == name) return g;
  if (name == "Z1") return cyclic(1);
  throw std::invalid_argument("unknown group '" + name + "' (catalog: Z2..Z6, S3, D4, Q8)");
}

}  // namespace groups

namespace magmas {

FiniteMagma trivial(Index n) {
  if (n == 0) throw std::invalid_argument("trivial quandle needs n >= 1");
  std::vector<std::vector<Index>> t(n, std::vector<Index>(n));
  for (Index x = 0; x < n; ++x)
    for (Index y = 0; y < n; ++y) t[x][y] = x;
  return FiniteMagma(std::move(t));
}

FiniteMagma dihedral(Index n) {
  if (n == 0) throw std::invalid_argument("dihedral quandle needs n >= 1");
  std::vector<std::vector<Index>> t(n, std::vector<Index>(n));
  for (Index x = 0; x < n; ++x)
    for (Index y = 0; y < n; ++y) t[x][y] = (2 * y + n - x) % n;
  return FiniteMagma(std::move(t));
}

FiniteMagma conjugation(const GroupTable& g) {
  const Index n = g.order();
  std::vector<std::vector<Index>> t(n, std::vector<Index>(n));
  for (Index x = 0; x < n; ++x)
    for (Index y = 0; y < n; ++y) t[x][y] = g.mul(g.mul(y, x), g.inverse(y));
  return FiniteMagma(std::move(t));
}

}  // namespace magmas

FiniteMagma canonical_form(const FiniteMagma& m) {
  const Index n = m.size();
  std::vector<Index> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<Index>> best;
  std::vector<std::vector<Index>> cur(n, std::vector<Index>(n));
  do {
    for (Index x = 0; x < n; ++x)
      for (Index y = 0; y < n; ++y) cur[perm[x]][perm[y]] = perm[m(x, y)];
    if (best.empty() || cur < best) best = cur;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return FiniteMagma(std::move(best));
}

namespace {

constexpr Index kUnset = static_cast<Index>(-1);

class RackSearch {
 public:
  explicit RackSearch(Index n) : n_(n), t_(n, std::vector<Index>(n, kUnset)), used_(n, std::vector<bool>(n)) {}

  std::vector<FiniteMagma> run() {
    fill(0);
    return std::move(found_);
  }

 private:
  // Every (Q3) instance whose entries are all assigned must hold.
  bool consistent() const {
    for (Index x = 0; x < n_; ++x)
      for (Index y = 0; y < n_; ++y) {
        Index xy = t_[x][y];
        if (xy == kUnset) continue;
        for (Index z = 0; z < n_; ++z) {
          Index l = t_[xy][z], xz = t_[x][z], yz = t_[y][z];
          if (l == kUnset || xz == kUnset || yz == kUnset) continue;
          Index r = t_[xz][yz];
          if (r != kUnset && l != r) return false;
        }
      }
    return true;
  }

  // Cells are filled column by column; used_[y][v] tracks column injectivity.
  void fill(Index cell) {
    if (cell == n_ * n_) {
      found_.emplace_back(t_);
      return;
    }
    Index y = cell / n_, x = cell % n_;
    for (Index v = 0; v < n_; ++v) {
      if (used_[y][v]) continue;
      t_[x][y] = v;
      used_[y][v] = true;
      if (consistent()) fill(cell + 1);
      used_[y][v] = false;
    }
    t_[x][y] = kUnset;
  }

  Index n_;
  std::vector<std::vector<Index>> t_;
  std::vector<std::vector<bool>> used_;
  std::vector<FiniteMagma> found_;
};

}  // namespace

std::vector<FiniteMagma> enumerate_racks(Index n, bool up_to_isomorphism) {
  if (n == 0) throw std::invalid_argument("rack size must be positive");
  auto all = RackSearch(n).run();
  if (!up_to_isomorphism) return all;
  std::set<std::vector<std::vector<Index>>> seen;
  std::vector<FiniteMagma> reps;
  for (const auto& m : all) {
    auto c = canonical_form(m);
    if (seen.insert(c.table()).second) reps.push_back(std::move(c));
  }
  return reps;
}

}  // namespace sdalg
