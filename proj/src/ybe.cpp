#include "sdalg/ybe.hpp"

namespace sdalg {

TensorOperator build_R(const StructureBialgebra& a, bool force) {
  if (!a.has_mult() || !a.has_comult()) throw PreconditionFailed("R needs multiplication and comultiplication");
  if (!a.counit()) throw PreconditionFailed("R needs a counit");
  if (!force) {
    auto cc = check_cocommutative(a);
    if (!cc.pass)
      throw PreconditionFailed("comultiplication is not cocommutative at e_" + std::to_string(cc.witness.at(0)));
  }
  const std::size_t d = a.dim();
  const Tensor3& mu = a.comult();
  Matrix m(a.ring(), d * d, d * d);
  for (Index x = 0; x < d; ++x)
    for (Index y = 0; y < d; ++y) {
      const Index col = x * d + y;
      for (Index j = 0; j < d; ++j)
        for (Index k = 0; k < d; ++k) {
          const Scalar& c = mu(y, j, k);
          if (c.is_zero()) continue;
          Vec prod = a.product(x, k);
          for (Index t = 0; t < d; ++t)
            if (!prod[t].is_zero()) m(j * d + t, col) += c * prod[t];
        }
    }
  return {d, std::move(m)};
}

TensorOperator build_Rinv(const StructureBialgebra& a, const Tensor3& barstar) {
  const std::size_t d = a.dim();
  if (barstar.dim() != d || !(barstar.ring() == a.ring()))
    throw InvalidStructure("second operation does not match the structure");
  const Tensor3& mu = a.comult();
  Matrix m(a.ring(), d * d, d * d);
  for (Index x = 0; x < d; ++x)
    for (Index y = 0; y < d; ++y) {
      const Index col = x * d + y;
      for (Index j = 0; j < d; ++j)
        for (Index k = 0; k < d; ++k) {
          const Scalar& c = mu(x, j, k);
          if (c.is_zero()) continue;
          Vec bar = barstar.fiber(y, j);
          for (Index t = 0; t < d; ++t)
            if (!bar[t].is_zero()) m(t * d + k, col) += c * bar[t];
        }
    }
  return {d, std::move(m)};
}

AxiomReport check_braid(const TensorOperator& r) {
  const std::size_t d = r.d;
  Matrix id = Matrix::identity(r.m.ring(), d);
  Matrix r12 = kron(r.m, id), r23 = kron(id, r.m);
  Matrix lhs = r12 * r23 * r12;
  Matrix rhs = r23 * r12 * r23;
  AxiomReport rep{"braid", true, {}, {}, {}, {}};
  if (lhs == rhs) return rep;
  for (Index c = 0; c < d * d * d; ++c) {
    Vec l = lhs.column(c), rr = rhs.column(c);
    if (l != rr) {
      rep.pass = false;
      rep.witness = {c / (d * d), (c / d) % d, c % d};
      rep.lhs = std::move(l);
      rep.rhs = std::move(rr);
      break;
    }
  }
  return rep;
}

AxiomReport check_inverse(const TensorOperator& r, const TensorOperator& rinv) {
  const std::size_t d = r.d;
  Matrix id = Matrix::identity(r.m.ring(), d * d);
  Matrix a = r.m * rinv.m, b = rinv.m * r.m;
  AxiomReport rep{"inverse", true, {}, {}, {}, {}};
  if (a == id && b == id) return rep;
  for (Index c = 0; c < d * d; ++c) {
    Vec ac = a.column(c), bc = b.column(c), e = id.column(c);
    if (ac != e || bc != e) {
      rep.pass = false;
      rep.witness = {c / d, c % d};
      rep.lhs = std::move(ac);
      rep.rhs = std::move(bc);
      rep.detail = "R Rinv and Rinv R columns at the witness; both should be the unit tensor";
      break;
    }
  }
  return rep;
}

std::optional<std::vector<std::pair<Index, Index>>> induced_set_map(const TensorOperator& r) {
  const std::size_t d = r.d;
  std::vector<std::pair<Index, Index>> out;
  for (Index c = 0; c < d * d; ++c) {
    std::optional<Index> hit;
    for (Index row = 0; row < d * d; ++row) {
      const Scalar& s = r.m(row, c);
      if (s.is_zero()) continue;
      if (hit || !s.is_one()) return std::nullopt;
      hit = row;
    }
    if (!hit) return std::nullopt;
    out.emplace_back(*hit / d, *hit % d);
  }
  return out;
}

bool check_set_braid(const FiniteMagma& x) {
  const std::size_t n = x.size();
  using Triple = std::array<Index, 3>;
  auto r12 = [&](Triple t) { return Triple{t[1], x(t[0], t[1]), t[2]}; };
  auto r23 = [&](Triple t) { return Triple{t[0], t[2], x(t[1], t[2])}; };
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b)
      for (Index c = 0; c < n; ++c) {
        Triple t{a, b, c};
        if (r12(r23(r12(t))) != r23(r12(r23(t)))) return false;
      }
  return true;
}

}  // namespace sdalg
