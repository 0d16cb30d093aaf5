#include "sdalg/constructions.hpp"

namespace sdalg {

namespace {

void require_rack(const FiniteMagma& x) {
  auto r = check_axioms(x);
  if (!r.is_rack()) throw NotARack("input magma is not a rack (label: " + to_string(r.label) + ")");
}

}  // namespace

Tensor3 magma_tensor(const FiniteMagma& m, const RingDescriptor& ring) {
  Tensor3 t(ring, m.size());
  for (Index i = 0; i < m.size(); ++i)
    for (Index j = 0; j < m.size(); ++j) t(i, j, m(i, j)) = ring.one();
  return t;
}

StructureBialgebra rack_algebra(const FiniteMagma& x, const RingDescriptor& ring) {
  require_rack(x);
  const std::size_t d = x.size();
  return StructureBialgebra(ring, d, magma_tensor(x, ring), grouplike_comult(ring, d), Vec(d, ring.one()));
}

Tensor3 rack_barstar(const FiniteMagma& x, const RingDescriptor& ring) {
  require_rack(x);
  return magma_tensor(left_divide(x), ring);
}

std::vector<Vec> augmentation_ideal_basis(Index n, const RingDescriptor& ring, Index x0) {
  if (n == 0 || x0 >= n) throw std::invalid_argument("augmentation basis: bad size or base point");
  std::vector<Vec> out;
  for (Index x = 0; x < n; ++x) {
    if (x == x0) continue;
    out.push_back(sub(unit_vec(ring, n, x), unit_vec(ring, n, x0)));
  }
  return out;
}

StructureBialgebra augmented_rack_bialgebra(const FiniteMagma& x, const RingDescriptor& ring) {
  require_rack(x);
  const std::size_t n = x.size(), d = n + 1;
  Tensor3 m(ring, d);
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) m(i + 1, j + 1, x(i, j) + 1) = ring.one();
    m(0, i + 1, 0) = ring.one();  // 1 x_i = 1; x_i 1 = 0 and 1 1 = 0 stay zero
  }
  return StructureBialgebra(ring, d, std::move(m), grouplike_comult(ring, d), Vec(d, ring.one()), Index{0});
}

Tensor3 phi_map(const FiniteMagma& x, const RingDescriptor& ring) {
  require_rack(x);
  FiniteMagma bar = left_divide(x);
  Tensor3 phi(ring, x.size());
  for (Index a = 0; a < x.size(); ++a)
    for (Index b = 0; b < x.size(); ++b) phi(a, b, bar(b, a)) = ring.one();
  return phi;
}

Vec phi_identity_lhs(const StructureBialgebra& kx, const Tensor3& phi, const Vec& x, const Vec& y) {
  const std::size_t d = kx.dim();
  Vec delta = comul(kx, x);
  Vec out = zero_vec(kx.ring(), d);
  for (Index j = 0; j < d; ++j)
    for (Index k = 0; k < d; ++k) {
      const Scalar& coef = delta[j * d + k];
      if (coef.is_zero()) continue;
      Vec ej = unit_vec(kx.ring(), d, j), ek = unit_vec(kx.ring(), d, k);
      out = add(out, scale(coef, mul(kx, mul(phi, ej, y), ek)));
    }
  return out;
}

AxiomReport check_phi_identity(const StructureBialgebra& kx, const Tensor3& phi) {
  const std::size_t d = kx.dim();
  AxiomReport r{"phi_identity", true, {}, {}, {}, {}};
  for (Index a = 0; a < d; ++a)
    for (Index b = 0; b < d; ++b) {
      Vec ea = unit_vec(kx.ring(), d, a), eb = unit_vec(kx.ring(), d, b);
      Vec lhs = phi_identity_lhs(kx, phi, ea, eb);
      Vec rhs = scale(counit_value(kx, ea), eb);
      if (lhs != rhs) {
        r.pass = false;
        r.witness = {a, b};
        r.lhs = lhs;
        r.rhs = rhs;
        return r;
      }
    }
  return r;
}

std::optional<Vec> solve_right_mult(Index n, const Vec& a, const Vec& b) {
  if (a.size() != n || b.size() != n || n == 0) throw std::invalid_argument("solve: vector length mismatch");
  const RingDescriptor ring = a.front().ring();
  // In k[T_n], x a = eps(a) x.
  Scalar eps = coordinate_sum(a);
  std::optional<Vec> x;
  if (!eps.is_zero()) x = scale(inverse(eps), b);
  else if (is_zero(b)) x = zero_vec(ring, n);
  if (x) {
    StructureBialgebra kt = rack_algebra(magmas::trivial(n), ring);
    if (mul(kt, *x, a) != b) throw std::logic_error("solve: candidate does not satisfy x a = b");
  }
  return x;
}

namespace {

Vec bracket(const LeibnizData& l, const Vec& u, const Vec& v) { return mul(l.bracket, u, v); }

AxiomReport scan_triples(const LeibnizData& l, const char* name,
                         Sides (*sides)(const LeibnizData&, const Vec&, const Vec&, const Vec&)) {
  AxiomReport r{name, true, {}, {}, {}, {}};
  for (Index i = 0; i < l.dim; ++i)
    for (Index j = 0; j < l.dim; ++j)
      for (Index k = 0; k < l.dim; ++k) {
        Sides s = sides(l, unit_vec(l.ring, l.dim, i), unit_vec(l.ring, l.dim, j), unit_vec(l.ring, l.dim, k));
        if (s.lhs != s.rhs) {
          r.pass = false;
          r.witness = {i, j, k};
          r.lhs = s.lhs;
          r.rhs = s.rhs;
          return r;
        }
      }
  return r;
}

Sides right_leibniz_sides(const LeibnizData& l, const Vec& a, const Vec& b, const Vec& c) {
  return {bracket(l, bracket(l, a, b), c), add(bracket(l, bracket(l, a, c), b), bracket(l, a, bracket(l, b, c)))};
}

Sides cyclic_sides(const LeibnizData& l, const Vec& x, const Vec& y, const Vec& z) {
  Vec sum = add(add(bracket(l, bracket(l, x, y), z), bracket(l, bracket(l, y, z), x)), bracket(l, bracket(l, z, x), y));
  return {sum, zero_vec(l.ring, l.dim)};
}

}  // namespace

AxiomReport check_right_leibniz(const LeibnizData& l) { return scan_triples(l, "right_leibniz", right_leibniz_sides); }
AxiomReport check_cyclic_jacobi(const LeibnizData& l) { return scan_triples(l, "cyclic_jacobi", cyclic_sides); }

namespace lie {

LeibnizData solvable2(const RingDescriptor& ring) {
  Tensor3 br(ring, 2);
  br(0, 1, 1) = ring.one();
  br(1, 0, 1) = -ring.one();
  return {ring, 2, std::move(br)};
}

LeibnizData abelian(std::size_t dim, const RingDescriptor& ring) { return {ring, dim, Tensor3(ring, dim)}; }

}  // namespace lie

LeibnizRack leibniz_rack(const LeibnizData& l) {
  if (l.bracket.dim() != l.dim || !(l.bracket.ring() == l.ring))
    throw std::invalid_argument("bracket tensor does not match the declared dimension or ring");
  auto leib = check_right_leibniz(l);
  if (!leib.pass)
    throw std::invalid_argument("bracket fails the Leibniz identity at (" + std::to_string(leib.witness[0]) + "," +
                                std::to_string(leib.witness[1]) + "," + std::to_string(leib.witness[2]) + ")");
  const RingDescriptor& ring = l.ring;
  const std::size_t d = l.dim + 1;
  Tensor3 star(ring, d), bar(ring, d), delta(ring, d);
  star(0, 0, 0) = ring.one();
  bar(0, 0, 0) = ring.one();
  delta(0, 0, 0) = ring.one();
  for (Index x = 1; x < d; ++x) {
    star(x, 0, x) = ring.one();
    bar(x, 0, x) = ring.one();
    delta(x, x, 0) = ring.one();
    delta(x, 0, x) = ring.one();
    for (Index y = 1; y < d; ++y)
      for (Index k = 1; k < d; ++k) {
        star(x, y, k) = l.bracket(x - 1, y - 1, k - 1);
        bar(x, y, k) = -l.bracket(x - 1, y - 1, k - 1);
      }
  }
  Vec eps = unit_vec(ring, d, 0);
  return {StructureBialgebra(ring, d, std::move(star), std::move(delta), std::move(eps), Index{0}), std::move(bar)};
}

Tensor3 adjoint_action(const Tensor3& mult, const Tensor3& comult, const Matrix& antipode) {
  const std::size_t d = mult.dim();
  const RingDescriptor& ring = mult.ring();
  Tensor3 out(ring, d);
  for (Index hp = 0; hp < d; ++hp)
    for (Index h = 0; h < d; ++h) {
      Vec acc = zero_vec(ring, d);
      for (Index p = 0; p < d; ++p)
        for (Index q = 0; q < d; ++q) {
          const Scalar& coef = comult(h, p, q);
          if (coef.is_zero()) continue;
          Vec left = mul(mult, unit_vec(ring, d, p), unit_vec(ring, d, hp));
          acc = add(acc, scale(coef, mul(mult, left, antipode.column(q))));
        }
      for (Index k = 0; k < d; ++k) out(hp, h, k) = acc[k];
    }
  return out;
}

StructureBialgebra group_hopf_adjoint(const GroupTable& g, const RingDescriptor& ring) {
  const std::size_t n = g.order();
  Tensor3 group_mult = magma_tensor(FiniteMagma(g.table()), ring);
  Tensor3 delta = grouplike_comult(ring, n);
  Matrix antipode(ring, n, n);
  for (Index x = 0; x < n; ++x) antipode(g.inverse(x), x) = ring.one();
  return StructureBialgebra(ring, n, adjoint_action(group_mult, delta, antipode), delta, Vec(n, ring.one()));
}

StructureBialgebra novikov_example(NovikovExample which, const RingDescriptor& ring) {
  Tensor3 m(ring, 2);
  if (which == NovikovExample::A1) {
    m(0, 1, 1) = ring.one();
  } else {
    m(0, 0, 0) = ring.one();
    m(1, 0, 1) = ring.one();
  }
  return StructureBialgebra(ring, 2, std::move(m), std::nullopt);
}

}  // namespace sdalg
