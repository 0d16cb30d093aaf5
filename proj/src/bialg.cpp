#include "sdalg/bialg.hpp"

#include <algorithm>

namespace sdalg {

Vec Tensor3::fiber(Index i, Index j) const {
  auto first = data_.begin() + static_cast<std::ptrdiff_t>((i * d_ + j) * d_);
  return Vec(first, first + static_cast<std::ptrdiff_t>(d_));
}

Vec Tensor3::slice(Index i) const {
  auto first = data_.begin() + static_cast<std::ptrdiff_t>(i * d_ * d_);
  return Vec(first, first + static_cast<std::ptrdiff_t>(d_ * d_));
}

namespace {

Vec concat(Vec a, const Vec& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

void require_tensor(const std::optional<Tensor3>& t, const RingDescriptor& ring, std::size_t d,
                    const char* what) {
  if (!t) return;
  if (t->dim() != d) throw InvalidStructure(std::string(what) + " tensor has wrong dimension");
  if (!(t->ring() == ring)) throw InvalidStructure(std::string(what) + " tensor is over a different ring");
}

}  // namespace

StructureBialgebra::StructureBialgebra(RingDescriptor ring, std::size_t dim, std::optional<Tensor3> mult,
                                       std::optional<Tensor3> comult, std::optional<Vec> counit,
                                       std::optional<Index> unit_index)
    : ring_(ring),
      dim_(dim),
      mult_(std::move(mult)),
      comult_(std::move(comult)),
      counit_(std::move(counit)),
      unit_index_(unit_index) {
  if (dim_ == 0) throw InvalidStructure("dimension must be positive");
  if (!mult_ && !comult_) throw InvalidStructure("need a multiplication or a comultiplication");
  require_tensor(mult_, ring_, dim_, "mult");
  require_tensor(comult_, ring_, dim_, "comult");
  if (counit_) {
    if (!comult_) throw InvalidStructure("counit given without comultiplication");
    if (counit_->size() != dim_) throw InvalidStructure("counit has wrong length");
    for (const auto& s : *counit_)
      if (!(s.ring() == ring_)) throw InvalidStructure("counit entry over a different ring");
    auto r = check_counit(*this);
    if (!r.pass)
      throw InvalidStructure("counit axiom fails at e_" + std::to_string(r.witness.at(0)) + ": " +
                             to_string(r.lhs) + " != " + to_string(r.rhs));
  }
  if (unit_index_) {
    const Index u = *unit_index_;
    if (u >= dim_) throw InvalidStructure("unit index out of range");
    if (!comult_) throw InvalidStructure("unit index given without comultiplication");
    Vec expected = zero_vec(ring_, dim_ * dim_);
    expected[u * dim_ + u] = ring_.one();
    if (comult_->slice(u) != expected) throw InvalidStructure("Delta(1) != 1 (x) 1 at the unit index");
    if (counit_ && !(*counit_)[u].is_one()) throw InvalidStructure("eps(1) != 1 at the unit index");
  }
}

const Tensor3& StructureBialgebra::mult() const {
  if (!mult_) throw MissingStructure("structure has no multiplication");
  return *mult_;
}

const Tensor3& StructureBialgebra::comult() const {
  if (!comult_) throw MissingStructure("structure has no comultiplication");
  return *comult_;
}

Tensor3 grouplike_comult(const RingDescriptor& ring, std::size_t d) {
  Tensor3 t(ring, d);
  for (Index i = 0; i < d; ++i) t(i, i, i) = ring.one();
  return t;
}

Vec mul(const Tensor3& m, const Vec& u, const Vec& v) {
  const std::size_t d = m.dim();
  if (u.size() != d || v.size() != d) throw std::invalid_argument("mul: dimension mismatch");
  Vec out = zero_vec(m.ring(), d);
  for (Index i = 0; i < d; ++i) {
    if (u[i].is_zero()) continue;
    for (Index j = 0; j < d; ++j) {
      if (v[j].is_zero()) continue;
      Scalar c = u[i] * v[j];
      for (Index k = 0; k < d; ++k)
        if (!m(i, j, k).is_zero()) out[k] += c * m(i, j, k);
    }
  }
  return out;
}

Vec mul(const StructureBialgebra& a, const Vec& u, const Vec& v) { return mul(a.mult(), u, v); }

Vec comul(const StructureBialgebra& a, const Vec& u) {
  const std::size_t d = a.dim();
  if (u.size() != d) throw std::invalid_argument("comul: dimension mismatch");
  const Tensor3& mu = a.comult();
  Vec out = zero_vec(a.ring(), d * d);
  for (Index i = 0; i < d; ++i) {
    if (u[i].is_zero()) continue;
    for (Index jk = 0; jk < d * d; ++jk) {
      const Scalar& c = mu(i, jk / d, jk % d);
      if (!c.is_zero()) out[jk] += u[i] * c;
    }
  }
  return out;
}

Vec sweedler3(const StructureBialgebra& a, const Vec& u) {
  const std::size_t d = a.dim();
  const Tensor3& mu = a.comult();
  Vec first = comul(a, u);
  Vec out = zero_vec(a.ring(), d * d * d);
  for (Index j = 0; j < d; ++j)
    for (Index k = 0; k < d; ++k) {
      const Scalar& c = first[j * d + k];
      if (c.is_zero()) continue;
      for (Index p = 0; p < d; ++p)
        for (Index q = 0; q < d; ++q)
          if (!mu(j, p, q).is_zero()) out[(p * d + q) * d + k] += c * mu(j, p, q);
    }
  return out;
}

Vec tensor_mul(const Tensor3& m, const Vec& s, const Vec& t) {
  const std::size_t d = m.dim();
  Vec out = zero_vec(m.ring(), d * d);
  for (Index pq = 0; pq < d * d; ++pq) {
    if (s[pq].is_zero()) continue;
    for (Index rs = 0; rs < d * d; ++rs) {
      if (t[rs].is_zero()) continue;
      Scalar c = s[pq] * t[rs];
      Vec left = m.fiber(pq / d, rs / d);
      Vec right = m.fiber(pq % d, rs % d);
      for (Index x = 0; x < d; ++x) {
        if (left[x].is_zero()) continue;
        Scalar cx = c * left[x];
        for (Index y = 0; y < d; ++y)
          if (!right[y].is_zero()) out[x * d + y] += cx * right[y];
      }
    }
  }
  return out;
}

Scalar counit_value(const StructureBialgebra& a, const Vec& u) {
  if (!a.counit()) throw MissingStructure("structure has no counit");
  Scalar s = a.ring().zero();
  for (Index i = 0; i < a.dim(); ++i) s += (*a.counit())[i] * u[i];
  return s;
}

namespace {

using Witness = std::span<const Index>;

struct AxiomContext {
  const StructureBialgebra& a;
  const Tensor3* barstar;

  std::size_t d() const { return a.dim(); }
  Vec e(Index i) const { return unit_vec(a.ring(), a.dim(), i); }
  Vec prod(const Vec& u, const Vec& v) const { return mul(a, u, v); }
};

// sum_{j,k} t[j*d+k] * f(e_j, e_k)
template <class F>
Vec contract2(const AxiomContext& c, const Vec& t, F&& f) {
  const std::size_t d = c.d();
  Vec out;
  for (Index j = 0; j < d; ++j)
    for (Index k = 0; k < d; ++k) {
      const Scalar& coef = t[j * d + k];
      if (coef.is_zero()) continue;
      Vec term = scale(coef, f(j, k));
      out = out.empty() ? term : add(out, term);
    }
  return out;
}

Sides coassoc_sides(const AxiomContext& c, Witness w) {
  const std::size_t d = c.d();
  Vec lhs = sweedler3(c.a, c.e(w[0]));
  Vec first = comul(c.a, c.e(w[0]));
  Vec rhs = zero_vec(c.a.ring(), d * d * d);
  for (Index j = 0; j < d; ++j)
    for (Index k = 0; k < d; ++k) {
      const Scalar& coef = first[j * d + k];
      if (coef.is_zero()) continue;
      Vec dk = comul(c.a, c.e(k));
      for (Index pq = 0; pq < d * d; ++pq)
        if (!dk[pq].is_zero()) rhs[j * d * d + pq] += coef * dk[pq];
    }
  return {lhs, rhs};
}

Sides cocommutative_sides(const AxiomContext& c, Witness w) {
  const std::size_t d = c.d();
  Vec delta = comul(c.a, c.e(w[0]));
  Vec flipped = delta;
  for (Index j = 0; j < d; ++j)
    for (Index k = 0; k < d; ++k) flipped[k * d + j] = delta[j * d + k];
  return {flipped, delta};
}

Sides counit_sides(const AxiomContext& c, Witness w) {
  const std::size_t d = c.d();
  const Vec& eps = *c.a.counit();
  Vec delta = comul(c.a, c.e(w[0]));
  Vec left = zero_vec(c.a.ring(), d), right = zero_vec(c.a.ring(), d);
  for (Index j = 0; j < d; ++j)
    for (Index k = 0; k < d; ++k) {
      const Scalar& coef = delta[j * d + k];
      if (coef.is_zero()) continue;
      left[k] += eps[j] * coef;
      right[j] += eps[k] * coef;
    }
  return {concat(left, right), concat(c.e(w[0]), c.e(w[0]))};
}

Sides compat_sides_with(const AxiomContext& c, const Tensor3& m, Witness w) {
  Vec lhs = comul(c.a, m.fiber(w[0], w[1]));
  Vec rhs = tensor_mul(m, comul(c.a, c.e(w[0])), comul(c.a, c.e(w[1])));
  return {lhs, rhs};
}

Sides compat_sides(const AxiomContext& c, Witness w) { return compat_sides_with(c, c.a.mult(), w); }

// (a b) c = (a c1)(b c2)
Sides sd_bialgebra_sides(const AxiomContext& c, Witness w) {
  Vec ea = c.e(w[0]), eb = c.e(w[1]);
  Vec lhs = c.prod(c.prod(ea, eb), c.e(w[2]));
  Vec rhs = contract2(c, comul(c.a, c.e(w[2])),
                      [&](Index j, Index k) { return c.prod(c.prod(ea, c.e(j)), c.prod(eb, c.e(k))); });
  if (rhs.empty()) rhs = zero_vec(c.a.ring(), c.d());
  return {lhs, rhs};
}

// Arity 3: (ab)c = (ac)(bc). Arity 4: (af)(bd) + (ad)(bf) = 0.
Sides sd_plain_sides(const AxiomContext& c, Witness w) {
  if (w.size() == 3) {
    Vec ea = c.e(w[0]), eb = c.e(w[1]), ec = c.e(w[2]);
    return {c.prod(c.prod(ea, eb), ec), c.prod(c.prod(ea, ec), c.prod(eb, ec))};
  }
  Vec ea = c.e(w[0]), eb = c.e(w[1]), ed = c.e(w[2]), ef = c.e(w[3]);
  Vec lhs = add(c.prod(c.prod(ea, ef), c.prod(eb, ed)), c.prod(c.prod(ea, ed), c.prod(eb, ef)));
  return {lhs, zero_vec(c.a.ring(), c.d())};
}

Sides cube_zero_sides(const AxiomContext& c, Witness w) {
  return {c.prod(c.prod(c.e(w[0]), c.e(w[1])), c.e(w[2])), zero_vec(c.a.ring(), c.d())};
}

Sides novikov_sides(const AxiomContext& c, Witness w) {
  Vec x = c.e(w[0]), y = c.e(w[1]), z = c.e(w[2]);
  auto assoc = [&](const Vec& p, const Vec& q, const Vec& r) {
    return sub(c.prod(c.prod(p, q), r), c.prod(p, c.prod(q, r)));
  };
  Vec lhs = concat(assoc(x, y, z), c.prod(c.prod(x, y), z));
  Vec rhs = concat(assoc(y, x, z), c.prod(c.prod(x, z), y));
  return {lhs, rhs};
}

Sides gen_idempotent_sides(const AxiomContext& c, Witness w) {
  Vec lhs = contract2(c, comul(c.a, c.e(w[0])), [&](Index j, Index k) { return c.a.product(j, k); });
  if (lhs.empty()) lhs = zero_vec(c.a.ring(), c.d());
  return {lhs, c.e(w[0])};
}

// ((a1 a2) b) a3 = (a1 a2)(b a3)
Sides gen_jordan_sides(const AxiomContext& c, Witness w) {
  const std::size_t d = c.d();
  Vec s = sweedler3(c.a, c.e(w[0]));
  Vec eb = c.e(w[1]);
  Vec lhs = zero_vec(c.a.ring(), d), rhs = zero_vec(c.a.ring(), d);
  for (Index p = 0; p < d; ++p)
    for (Index q = 0; q < d; ++q)
      for (Index r = 0; r < d; ++r) {
        const Scalar& coef = s[(p * d + q) * d + r];
        if (coef.is_zero()) continue;
        Vec pq = c.a.product(p, q);
        lhs = add(lhs, scale(coef, c.prod(c.prod(pq, eb), c.e(r))));
        rhs = add(rhs, scale(coef, c.prod(pq, c.prod(eb, c.e(r)))));
      }
  return {lhs, rhs};
}

// (b * a2) bar a1 = eps(a) b = (b bar a2) * a1
Sides lr_inverse_sides(const AxiomContext& c, Witness w) {
  if (!c.barstar) throw MissingStructure("linear-rack inverse axiom needs the second operation");
  const Tensor3& bar = *c.barstar;
  const std::size_t d = c.d();
  Vec ea = c.e(w[0]), eb = c.e(w[1]);
  Vec delta = comul(c.a, ea);
  Vec first = zero_vec(c.a.ring(), d), second = zero_vec(c.a.ring(), d);
  for (Index j = 0; j < d; ++j)
    for (Index k = 0; k < d; ++k) {
      const Scalar& coef = delta[j * d + k];
      if (coef.is_zero()) continue;
      first = add(first, scale(coef, mul(bar, c.prod(eb, c.e(k)), c.e(j))));
      second = add(second, scale(coef, c.prod(mul(bar, eb, c.e(k)), c.e(j))));
    }
  Vec expected = scale(counit_value(c.a, ea), eb);
  return {concat(first, second), concat(expected, expected)};
}

Sides barstar_morphism_sides(const AxiomContext& c, Witness w) {
  if (!c.barstar) throw MissingStructure("no second operation supplied");
  return compat_sides_with(c, *c.barstar, w);
}

struct AxiomDef {
  const char* name;
  std::size_t arity;
  Sides (*sides)(const AxiomContext&, Witness);
  std::size_t alt_arity;  // second witness shape, 0 if none
};

const std::vector<AxiomDef>& axiom_table() {
  static const std::vector<AxiomDef> table = {
      {"coassoc", 1, coassoc_sides, 0},
      {"cocommutative", 1, cocommutative_sides, 0},
      {"counit", 1, counit_sides, 0},
      {"compat", 2, compat_sides, 0},
      {"sd_bialgebra", 3, sd_bialgebra_sides, 0},
      {"sd_plain", 3, sd_plain_sides, 4},
      {"cube_zero", 3, cube_zero_sides, 0},
      {"novikov", 3, novikov_sides, 0},
      {"gen_idempotent", 1, gen_idempotent_sides, 0},
      {"gen_jordan", 2, gen_jordan_sides, 0},
      {"lr_inverse", 2, lr_inverse_sides, 0},
      {"barstar_morphism", 2, barstar_morphism_sides, 0},
  };
  return table;
}

const AxiomDef& find_axiom(const std::string& name) {
  for (const auto& def : axiom_table())
    if (name == def.name) return def;
  throw std::invalid_argument("unknown axiom '" + name + "'");
}

// Scans basis tuples in lexicographic order; the first failing tuple is the witness.
AxiomReport scan(const StructureBialgebra& a, const std::string& name, const Tensor3* barstar = nullptr) {
  const AxiomDef& def = find_axiom(name);
  AxiomContext ctx{a, barstar};
  AxiomReport report{name, true, {}, {}, {}, {}};
  for (std::size_t arity : {def.arity, def.alt_arity}) {
    if (arity == 0) continue;
    std::vector<Index> w(arity, 0);
    while (true) {
      Sides s = def.sides(ctx, w);
      if (s.lhs != s.rhs) {
        report.pass = false;
        report.witness = w;
        report.lhs = std::move(s.lhs);
        report.rhs = std::move(s.rhs);
        return report;
      }
      std::size_t pos = arity;
      while (pos > 0 && ++w[pos - 1] == a.dim()) w[--pos] = 0;
      if (pos == 0) break;
    }
  }
  return report;
}

AxiomReport unavailable(const std::string& name, const std::string& why) {
  AxiomReport r{name, false, {}, {}, {}, why};
  return r;
}

}  // namespace

Sides evaluate_axiom(const StructureBialgebra& a, const std::string& axiom, std::span<const Index> witness,
                     const Tensor3* barstar) {
  const AxiomDef& def = find_axiom(axiom);
  if (witness.size() != def.arity && witness.size() != def.alt_arity)
    throw std::invalid_argument("wrong witness arity for " + axiom);
  for (Index i : witness)
    if (i >= a.dim()) throw std::invalid_argument("witness index out of range");
  return def.sides(AxiomContext{a, barstar}, witness);
}

AxiomReport check_coassoc(const StructureBialgebra& a) { return scan(a, "coassoc"); }
AxiomReport check_cocommutative(const StructureBialgebra& a) { return scan(a, "cocommutative"); }
AxiomReport check_compat(const StructureBialgebra& a) { return scan(a, "compat"); }
AxiomReport check_sd_bialgebra(const StructureBialgebra& a) { return scan(a, "sd_bialgebra"); }
AxiomReport check_sd_plain(const StructureBialgebra& a) { return scan(a, "sd_plain"); }
AxiomReport check_cube_zero(const StructureBialgebra& a) { return scan(a, "cube_zero"); }
AxiomReport check_novikov(const StructureBialgebra& a) { return scan(a, "novikov"); }
AxiomReport check_gen_idempotent(const StructureBialgebra& a) { return scan(a, "gen_idempotent"); }
AxiomReport check_gen_jordan(const StructureBialgebra& a) { return scan(a, "gen_jordan"); }

AxiomReport check_counit(const StructureBialgebra& a) {
  if (a.counit()) return scan(a, "counit");
  auto sol = find_counit(a);
  if (!sol) return unavailable("counit", "no counit exists");
  AxiomReport r{"counit", true, {}, {}, {}, "solved eps = " + to_string(sol->counit)};
  if (!sol->unique) r.detail += " (not unique)";
  return r;
}

std::optional<CounitSolution> find_counit(const StructureBialgebra& a) {
  if (a.counit()) {
    if (!scan(a, "counit").pass) return std::nullopt;
    return CounitSolution{*a.counit(), true};
  }
  const std::size_t d = a.dim();
  const Tensor3& mu = a.comult();
  Matrix eq(a.ring(), 2 * d * d, d);
  Vec rhs = zero_vec(a.ring(), 2 * d * d);
  // (eps (x) id) Delta e_i = e_i : sum_j mu_i^jk eps_j = delta_ik
  // (id (x) eps) Delta e_i = e_i : sum_k mu_i^jk eps_k = delta_ij
  for (Index i = 0; i < d; ++i)
    for (Index t = 0; t < d; ++t) {
      Index left = i * d + t, right = d * d + i * d + t;
      for (Index s = 0; s < d; ++s) {
        eq(left, s) = mu(i, s, t);
        eq(right, s) = mu(i, t, s);
      }
      if (i == t) rhs[left] = rhs[right] = a.ring().one();
    }
  auto sol = solve_linear(eq, rhs);
  if (!sol) return std::nullopt;
  return CounitSolution{sol->x, sol->unique};
}

LinearRackReport check_linear_rack(const StructureBialgebra& a, const std::optional<Tensor3>& barstar) {
  if (!a.counit()) throw MissingStructure("linear rack check needs a counit");
  LinearRackReport r;
  r.coassoc = check_coassoc(a);
  r.counit = check_counit(a);
  r.morphism = check_compat(a);
  r.self_distributive = check_sd_bialgebra(a);
  r.idempotent = check_gen_idempotent(a);
  if (barstar) {
    if (barstar->dim() != a.dim() || !(barstar->ring() == a.ring()))
      throw InvalidStructure("second operation does not match the structure");
    r.inverse = scan(a, "lr_inverse", &*barstar);
    r.barstar_morphism = scan(a, "barstar_morphism", &*barstar);
  } else {
    r.inverse = unavailable("lr_inverse", "no second operation supplied");
    r.barstar_morphism = unavailable("barstar_morphism", "no second operation supplied");
  }
  bool shelf = r.coassoc.pass && r.counit.pass && r.morphism.pass && r.self_distributive.pass;
  bool rack = shelf && r.inverse.pass && r.barstar_morphism.pass;
  if (rack && r.idempotent.pass) r.label = MagmaClass::quandle;
  else if (rack) r.label = MagmaClass::rack;
  else if (shelf) r.label = MagmaClass::shelf;
  return r;
}

std::vector<std::string> known_axioms() {
  return {"coassoc", "cocommutative", "counit",         "compat",         "sd_bialgebra",
          "sd_plain", "cube_zero",    "novikov",        "gen_idempotent", "gen_jordan"};
}

AxiomReport run_axiom(const StructureBialgebra& a, const std::string& name) {
  if (name == "counit") return check_counit(a);
  const auto names = known_axioms();
  if (std::find(names.begin(), names.end(), name) == names.end())
    throw std::invalid_argument("unknown axiom '" + name + "'");
  return scan(a, name);
}

StructureBialgebra dualize(const StructureBialgebra& a) {
  const std::size_t d = a.dim();
  std::optional<Tensor3> mult, comult;
  if (a.has_comult()) {
    Tensor3 m(a.ring(), d);
    for (Index i = 0; i < d; ++i)
      for (Index j = 0; j < d; ++j)
        for (Index k = 0; k < d; ++k) m(i, j, k) = a.comult()(k, i, j);
    mult = std::move(m);
  }
  if (a.has_mult()) {
    Tensor3 mu(a.ring(), d);
    for (Index i = 0; i < d; ++i)
      for (Index j = 0; j < d; ++j)
        for (Index k = 0; k < d; ++k) mu(k, i, j) = a.mult()(i, j, k);
    comult = std::move(mu);
  }
  return StructureBialgebra(a.ring(), d, std::move(mult), std::move(comult));
}

StructureBialgebra change_basis(const StructureBialgebra& a, const Matrix& p) {
  const std::size_t d = a.dim();
  if (p.rows() != d || p.cols() != d) throw std::invalid_argument("basis change matrix has wrong size");
  if (!(p.ring() == a.ring())) throw RingMismatch("basis change matrix over a different ring");
  const Matrix q = inverse(p);  // e_c = sum_s q(c, s) g_s
  // old coordinates -> new coordinates: new_s = sum_c old_c q(c, s)
  auto express = [&](const Vec& old) {
    Vec out = zero_vec(a.ring(), d);
    for (Index c = 0; c < d; ++c) {
      if (old[c].is_zero()) continue;
      for (Index s = 0; s < d; ++s)
        if (!q(c, s).is_zero()) out[s] += old[c] * q(c, s);
    }
    return out;
  };

  std::optional<Tensor3> mult;
  if (a.has_mult()) {
    Tensor3 m(a.ring(), d);
    for (Index i = 0; i < d; ++i)
      for (Index j = 0; j < d; ++j) {
        Vec prod_old = mul(a, p.row(i), p.row(j));
        Vec prod_new = express(prod_old);
        for (Index s = 0; s < d; ++s) m(i, j, s) = prod_new[s];
      }
    mult = std::move(m);
  }
  std::optional<Tensor3> comult;
  if (a.has_comult()) {
    Tensor3 mu(a.ring(), d);
    for (Index i = 0; i < d; ++i) {
      Vec delta_old = comul(a, p.row(i));
      // first re-express the left factor, then the right one
      for (Index x = 0; x < d; ++x)
        for (Index y = 0; y < d; ++y) {
          const Scalar& coef = delta_old[x * d + y];
          if (coef.is_zero()) continue;
          for (Index r = 0; r < d; ++r) {
            if (q(x, r).is_zero()) continue;
            for (Index s = 0; s < d; ++s)
              if (!q(y, s).is_zero()) mu(i, r, s) += coef * q(x, r) * q(y, s);
          }
        }
    }
    comult = std::move(mu);
  }
  std::optional<Vec> counit;
  if (a.counit()) {
    Vec eps = zero_vec(a.ring(), d);
    for (Index i = 0; i < d; ++i) eps[i] = counit_value(a, p.row(i));
    counit = std::move(eps);
  }
  std::optional<Index> unit;
  if (a.unit_index() && express(unit_vec(a.ring(), d, *a.unit_index())) == unit_vec(a.ring(), d, *a.unit_index()))
    unit = a.unit_index();
  return StructureBialgebra(a.ring(), d, std::move(mult), std::move(comult), std::move(counit), unit);
}

}  // namespace sdalg
