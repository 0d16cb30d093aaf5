#include "sdalg/classify.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace sdalg {

// ---------------------------------------------------------------- tables

MultTable2 MultTable2::from_ints(const RingDescriptor& ring, const std::array<long, 8>& v) {
  MultTable2 t{};
  for (std::size_t i = 0; i < 8; ++i) t.c[i] = ring.from_int(v[i]);
  return t;
}

MultTable2 MultTable2::from_tensor(const Tensor3& m) {
  if (m.dim() != 2) throw std::invalid_argument("MultTable2 needs a 2-dimensional tensor");
  MultTable2 t{};
  for (Index i = 0; i < 2; ++i)
    for (Index j = 0; j < 2; ++j)
      for (Index k = 0; k < 2; ++k) t.c[(i * 2 + j) * 2 + k] = m(i, j, k);
  return t;
}

Tensor3 MultTable2::tensor() const {
  Tensor3 m(ring(), 2);
  for (Index i = 0; i < 2; ++i)
    for (Index j = 0; j < 2; ++j)
      for (Index k = 0; k < 2; ++k) m(i, j, k) = c[(i * 2 + j) * 2 + k];
  return m;
}

namespace {

// coefficient times a basis name, with the sign pulled out unless the
// coefficient is a genuine u + v sqrt(d)
std::pair<bool, std::string> term(const Scalar& coef, const std::string& basis) {
  const bool mixed = sgn(coef.u()) != 0 && sgn(coef.v()) != 0;
  if (mixed) return {false, "(" + coef.to_string() + ")*" + basis};
  const bool neg = sgn(coef.u()) < 0 || sgn(coef.v()) < 0;
  Scalar mag = neg ? -coef : coef;
  if (mag.is_one()) return {neg, basis};
  return {neg, mag.to_string() + "*" + basis};
}

std::string lincomb(const Scalar& cx, const Scalar& cy) {
  std::string out;
  for (auto [coef, name] : {std::pair{cx, std::string("x")}, std::pair{cy, std::string("y")}}) {
    if (coef.is_zero()) continue;
    auto [neg, body] = term(coef, name);
    if (out.empty()) out = (neg ? "-" : "") + body;
    else out += (neg ? " - " : " + ") + body;
  }
  return out.empty() ? "0" : out;
}

}  // namespace

std::string MultTable2::to_string() const {
  return "x^2 = " + lincomb(c[0], c[1]) + ", xy = " + lincomb(c[2], c[3]) + ", yx = " + lincomb(c[4], c[5]) +
         ", y^2 = " + lincomb(c[6], c[7]);
}

bool table_less(const MultTable2& a, const MultTable2& b) {
  for (std::size_t i = 0; i < 8; ++i) {
    if (canonical_less(a.c[i], b.c[i])) return true;
    if (canonical_less(b.c[i], a.c[i])) return false;
  }
  return false;
}

namespace {

void sort_unique(std::vector<MultTable2>& v) {
  std::sort(v.begin(), v.end(), table_less);
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace

// ---------------------------------------------------------------- comultiplications

ComultType ComultType::type3(const Scalar& a) {
  if (a.is_zero()) throw std::invalid_argument("type 3 needs a != 0");
  return {ComultKind::type3, a};
}

Tensor3 ComultType::comult(const RingDescriptor& ring) const {
  Tensor3 t(ring, 2);
  t(0, 0, 0) = ring.one();
  if (kind == ComultKind::type1) {
    t(1, 1, 1) = ring.one();
    return t;
  }
  t(1, 0, 1) = ring.one();
  t(1, 1, 0) = ring.one();
  if (kind == ComultKind::type3) {
    if (!(a->ring() == ring)) throw RingMismatch("type 3 parameter lives in a different ring");
    t(0, 1, 1) = *a;
  }
  return t;
}

Vec ComultType::counit(const RingDescriptor& ring) const {
  if (kind == ComultKind::type1) return {ring.one(), ring.one()};
  return {ring.one(), ring.zero()};
}

std::string ComultType::name() const {
  switch (kind) {
    case ComultKind::type1:
      return "type 1";
    case ComultKind::type2:
      return "type 2";
    case ComultKind::type3:
      return "type 3 (a = " + a->to_string() + ")";
  }
  return "?";
}

StructureBialgebra make_bialgebra(const MultTable2& t, const ComultType& type) {
  const RingDescriptor& ring = t.ring();
  return StructureBialgebra(ring, 2, t.tensor(), type.comult(ring), type.counit(ring));
}

bool Verification::pass() const {
  return std::all_of(reports.begin(), reports.end(), [](const AxiomReport& r) { return r.pass; });
}

Verification verify_table(const MultTable2& t, const ComultType& type) {
  const RingDescriptor& ring = t.ring();
  // the counit is checked by the constructor when given, so build without it first
  StructureBialgebra bare(ring, 2, t.tensor(), type.comult(ring));
  Verification v;
  v.reports.push_back(check_coassoc(bare));
  auto eps = find_counit(bare);
  AxiomReport counit{"counit", eps && eps->counit == type.counit(ring), {}, {}, {}, {}};
  if (!counit.pass) counit.detail = eps ? "solved eps = " + to_string(eps->counit) : "no counit exists";
  v.reports.push_back(counit);
  v.reports.push_back(check_compat(bare));
  v.reports.push_back(check_sd_bialgebra(bare));
  return v;
}

// ---------------------------------------------------------------- symmetries

std::string to_string(Symmetry s) { return s == Symmetry::swap ? "swap x<->y" : "scale y->lambda*y"; }

MultTable2 swap_xy(const MultTable2& t) {
  const auto& c = t.c;
  return MultTable2{{c[7], c[6], c[5], c[4], c[3], c[2], c[1], c[0]}};
}

MultTable2 scale_y(const MultTable2& t, const Scalar& lambda) {
  MultTable2 s = t;
  s.c[1] = t.c[1] / lambda;
  s.c[2] = t.c[2] * lambda;
  s.c[4] = t.c[4] * lambda;
  s.c[6] = t.c[6] * lambda * lambda;
  s.c[7] = t.c[7] * lambda;
  return s;
}

MultTable2 canonicalize(const MultTable2& t, Symmetry sym) {
  if (sym == Symmetry::swap) {
    MultTable2 s = swap_xy(t);
    return table_less(s, t) ? s : t;
  }
  for (std::size_t i : {7, 2, 4}) {
    if (!t.c[i].is_zero()) return scale_y(t, inverse(t.c[i]));
  }
  if (!t.c[1].is_zero()) return scale_y(t, t.c[1]);
  return t;
}

// ---------------------------------------------------------------- symbolic layer

namespace unknowns {

const std::vector<std::string>& names() {
  static const std::vector<std::string> n = {"a1", "a2", "b1", "b2", "c1", "c2", "d1", "d2", "a"};
  return n;
}

Poly var(std::size_t v) { return Poly::variable(count, v); }
Poly constant(const mpq_class& c) { return Poly::constant(count, c); }

}  // namespace unknowns

bool Equation::holds_at(const std::vector<Scalar>& point, const RingDescriptor& ring) const {
  return residual().evaluate(point, ring).is_zero();
}

namespace {

using PTensor = std::array<Poly, 8>;  // index (i*2 + j)*2 + k

PTensor symbolic_mult() {
  PTensor m;
  for (std::size_t i = 0; i < 8; ++i) m[i] = unknowns::var(i);
  return m;
}

PTensor symbolic_comult(ComultKind kind) {
  PTensor mu;
  mu.fill(Poly(unknowns::count));
  auto one = unknowns::constant(1);
  mu[0] = one;  // Delta x contains x (x) x
  if (kind == ComultKind::type1) {
    mu[7] = one;
    return mu;
  }
  mu[5] = one;  // y -> x (x) y
  mu[6] = one;  // y -> y (x) x
  if (kind == ComultKind::type3) mu[3] = unknowns::var(unknowns::a);
  return mu;
}

std::size_t at(std::size_t i, std::size_t j, std::size_t k) { return (i * 2 + j) * 2 + k; }

const char* basis_name(std::size_t i) { return i == 0 ? "x" : "y"; }

}  // namespace

std::vector<Equation> compat_equations(ComultKind kind) {
  PTensor m = symbolic_mult(), mu = symbolic_comult(kind);
  std::vector<Equation> out;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t p = 0; p < 2; ++p)
        for (std::size_t q = 0; q < 2; ++q) {
          Poly lhs(unknowns::count), rhs(unknowns::count);
          for (std::size_t k = 0; k < 2; ++k) lhs += m[at(i, j, k)] * mu[at(k, p, q)];
          for (std::size_t p1 = 0; p1 < 2; ++p1)
            for (std::size_t q1 = 0; q1 < 2; ++q1)
              for (std::size_t p2 = 0; p2 < 2; ++p2)
                for (std::size_t q2 = 0; q2 < 2; ++q2)
                  rhs += mu[at(i, p1, q1)] * mu[at(j, p2, q2)] * m[at(p1, p2, p)] * m[at(q1, q2, q)];
          std::string label = std::string("Delta(") + basis_name(i) + basis_name(j) + ") at " + basis_name(p) +
                              "(x)" + basis_name(q);
          out.push_back({label, lhs, rhs});
        }
  return out;
}

std::vector<Equation> sd_equations(ComultKind kind) {
  PTensor m = symbolic_mult(), mu = symbolic_comult(kind);
  std::vector<Equation> out;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t l = 0; l < 2; ++l)
        for (std::size_t t = 0; t < 2; ++t) {
          Poly lhs(unknowns::count), rhs(unknowns::count);
          for (std::size_t k = 0; k < 2; ++k) lhs += m[at(i, j, k)] * m[at(k, l, t)];
          for (std::size_t p = 0; p < 2; ++p)
            for (std::size_t q = 0; q < 2; ++q) {
              if (mu[at(l, p, q)].is_zero()) continue;
              for (std::size_t s = 0; s < 2; ++s)
                for (std::size_t u = 0; u < 2; ++u)
                  rhs += mu[at(l, p, q)] * m[at(i, p, s)] * m[at(j, q, u)] * m[at(s, u, t)];
            }
          std::string label = std::string("(") + basis_name(i) + basis_name(j) + ")" + basis_name(l) + " at " +
                              basis_name(t);
          out.push_back({label, lhs, rhs});
        }
  return out;
}

std::vector<Equation> type3_printed_systems() {
  using namespace unknowns;
  auto v = [](std::size_t i) { return var(i); };
  auto k = [](long c) { return constant(c); };
  Poly A = v(a);
  Poly A1 = v(a1), A2 = v(a2), B1 = v(b1), B2 = v(b2), C1 = v(c1), C2 = v(c2), D1 = v(d1), D2 = v(d2);
  return {
      {"xx: x(x)x", A1, A1 * A1 + A * C1 * C1 + A * B1 * B1 + A * A * D1 * D1},
      {"xx: x(x)y", A2, A1 * A2 + A * C1 * C2 + A * B1 * B2 + A * A * D1 * D2},
      {"xx: y(x)y", A * A1, A2 * A2 + A * C2 * C2 + A * B2 * B2 + A * A * D2 * D2},
      {"yy: x(x)x", D1, k(2) * A1 * D1 + k(2) * B1 * C1},
      {"yy: x(x)y", D2, A2 * D1 + B2 * C1 + B1 * C2 + A1 * D2},
      {"yy: y(x)y", A * D1, k(2) * A2 * D2 + k(2) * B2 * C2},
      {"xy: x(x)x", B1, k(2) * A1 * B1 + k(2) * A * C1 * D1},
      {"xy: x(x)y", B2, A1 * B2 + A2 * B1 + A * C1 * D2 + A * C2 * D1},
      {"xy: y(x)y", A * B1, k(2) * A2 * B2 + C2 * D2 + A * C2 * D2},
      {"yx: x(x)x", C1, k(2) * A1 * C1 + k(2) * A * B1 * D1},
      {"yx: x(x)y", C2, A1 * C2 + A2 * C1 + A * B1 * D2 + A * B2 * D1},
      {"yx: y(x)y", A * C1, k(2) * A2 * C2 + B2 * D2 + A * B2 * D2},
  };
}

// ---------------------------------------------------------------- reducer

namespace {

constexpr std::size_t kTableVars = 8;

struct ReduceState {
  std::vector<Poly> eqs;
  std::array<Poly, 8> values;
  std::array<bool, 8> solved{};
  std::vector<Poly> nonzero;
};

bool known_nonzero_var(const ReduceState& s, std::size_t v) {
  Poly pv = unknowns::var(v);
  return std::find(s.nonzero.begin(), s.nonzero.end(), pv) != s.nonzero.end();
}

void assign(ReduceState& s, std::size_t v, const Poly& value) {
  for (auto& e : s.eqs) e = e.substitute(v, value);
  for (auto& x : s.values) x = x.substitute(v, value);
  for (auto& n : s.nonzero) n = n.substitute(v, value);
  s.solved[v] = true;
}

// false when the branch is infeasible
bool simplify(ReduceState& s) {
  std::vector<Poly> nz;
  for (const auto& n : s.nonzero) {
    if (n.is_zero()) return false;
    if (n.is_constant()) continue;
    if (std::find(nz.begin(), nz.end(), n) == nz.end()) nz.push_back(n);
  }
  s.nonzero = std::move(nz);
  std::vector<Poly> eqs;
  for (auto e : s.eqs) {
    for (std::size_t v = 0; v < kTableVars; ++v) {
      unsigned k = e.min_degree(v);
      if (k && known_nonzero_var(s, v)) e = e.divide_by_var(v, k);
    }
    if (e.is_zero()) continue;
    if (e.is_constant()) return false;
    // normalise so that equal equations compare equal
    e = mpq_class(1 / e.terms().rbegin()->second) * e;
    if (std::find(eqs.begin(), eqs.end(), e) == eqs.end()) eqs.push_back(e);
  }
  s.eqs = std::move(eqs);
  return true;
}

std::string show(const Poly& p) { return p.to_string(unknowns::names()); }

void reduce(ReduceState s, std::vector<Component>& out) {
  if (!simplify(s)) return;
  if (s.eqs.empty()) {
    Component c;
    c.values = s.values;
    for (std::size_t v = 0; v < kTableVars; ++v)
      if (!s.solved[v]) c.free.push_back(v);
    c.nonzero = s.nonzero;
    out.push_back(std::move(c));
    return;
  }

  // univariate equations: split on rational roots
  const Poly* best = nullptr;
  std::size_t best_var = 0;
  for (const auto& e : s.eqs) {
    auto vs = e.variables();
    if (vs.size() != 1) continue;
    if (!best || e.degree(vs[0]) < best->degree(best_var) ||
        (e.degree(vs[0]) == best->degree(best_var) && vs[0] < best_var)) {
      best = &e;
      best_var = vs[0];
    }
  }
  if (best) {
    RationalRoots rr;
    try {
      rr = rational_roots(best->univariate_coefficients(best_var));
    } catch (const std::overflow_error& ex) {
      throw EnumerationIncomplete(std::string("cannot factor ") + show(*best) + ": " + ex.what());
    }
    if (rr.residual_degree > 0)
      throw EnumerationIncomplete("univariate equation " + show(*best) + " = 0 has non-rational roots");
    const std::size_t v = best_var;
    for (const auto& r : rr.roots) {
      if (r == 0 && known_nonzero_var(s, v)) continue;
      ReduceState branch = s;
      assign(branch, v, unknowns::constant(r));
      reduce(std::move(branch), out);
    }
    return;
  }

  // a variable occurring linearly with a constant coefficient
  for (const auto& e : s.eqs)
    for (std::size_t v : e.variables()) {
      if (v >= kTableVars || e.degree(v) != 1) continue;
      auto [q, r] = e.split_linear(v);
      if (!q.is_constant()) continue;
      ReduceState next = s;
      assign(next, v, mpq_class(-1 / q.constant_term()) * r);
      reduce(std::move(next), out);
      return;
    }

  // a variable dividing every term: v = 0 or v != 0
  for (const auto& e : s.eqs)
    for (std::size_t v : e.variables()) {
      if (v >= kTableVars || e.min_degree(v) == 0 || known_nonzero_var(s, v)) continue;
      ReduceState zero = s, nonzero = s;
      assign(zero, v, unknowns::constant(0));
      reduce(std::move(zero), out);
      nonzero.nonzero.push_back(unknowns::var(v));
      reduce(std::move(nonzero), out);
      return;
    }

  std::string eqs;
  for (const auto& e : s.eqs) eqs += "\n  " + show(e) + " = 0";
  throw EnumerationIncomplete("reducer is stuck on the system:" + eqs);
}

Component specialize(const Component& c, std::size_t v, const mpq_class& value) {
  Component out;
  Poly pv = unknowns::constant(value);
  for (std::size_t i = 0; i < 8; ++i) out.values[i] = c.values[i].substitute(v, pv);
  for (std::size_t f : c.free)
    if (f != v) out.free.push_back(f);
  for (const auto& n : c.nonzero) {
    Poly s = n.substitute(v, pv);
    if (!s.is_constant()) out.nonzero.push_back(s);
  }
  return out;
}

// d specialises to c: every value of c is obtained by substituting c's values
// for d's free unknowns, and d's nonzero conditions follow from c's.
bool contains(const Component& d, const Component& c) {
  std::array<Poly, 8> vals = d.values;
  std::vector<Poly> nz = d.nonzero;
  for (std::size_t f : d.free) {
    for (auto& x : vals) x = x.substitute(f, c.values[f]);
    for (auto& n : nz) n = n.substitute(f, c.values[f]);
  }
  if (vals != c.values) return false;
  for (const auto& n : nz) {
    if (n.is_constant() && !n.is_zero()) continue;
    if (std::find(c.nonzero.begin(), c.nonzero.end(), n) == c.nonzero.end()) return false;
  }
  return true;
}

void merge_components(std::vector<Component>& comps) {
  // drop exact duplicates
  std::vector<Component> uniq;
  for (auto& c : comps)
    if (std::find(uniq.begin(), uniq.end(), c) == uniq.end()) uniq.push_back(std::move(c));
  comps = std::move(uniq);

  bool changed = true;
  while (changed) {
    changed = false;
    // lift a "t != 0" condition when the t = 0 slice is covered elsewhere
    for (std::size_t i = 0; i < comps.size() && !changed; ++i) {
      for (std::size_t n = 0; n < comps[i].nonzero.size() && !changed; ++n) {
        auto vs = comps[i].nonzero[n].variables();
        if (vs.size() != 1 || comps[i].nonzero[n] != unknowns::var(vs[0])) continue;
        const std::size_t t = vs[0];
        if (std::find(comps[i].free.begin(), comps[i].free.end(), t) == comps[i].free.end()) continue;
        Component slice = specialize(comps[i], t, 0);
        for (std::size_t j = 0; j < comps.size(); ++j) {
          if (j == i || !contains(comps[j], slice)) continue;
          comps[i].nonzero.erase(comps[i].nonzero.begin() + static_cast<std::ptrdiff_t>(n));
          changed = true;
          break;
        }
      }
    }
    // remove components contained in another one
    for (std::size_t j = 0; j < comps.size() && !changed; ++j)
      for (std::size_t i = 0; i < comps.size(); ++i) {
        if (i == j || !contains(comps[i], comps[j])) continue;
        comps.erase(comps.begin() + static_cast<std::ptrdiff_t>(j));
        changed = true;
        break;
      }
  }
}

}  // namespace

MultTable2 Component::at(const RingDescriptor& ring, const std::vector<mpq_class>& params) const {
  if (params.size() != free.size()) throw std::invalid_argument("wrong number of parameters");
  MultTable2 t{};
  for (std::size_t i = 0; i < 8; ++i) {
    Poly p = values[i];
    for (std::size_t k = 0; k < free.size(); ++k) p = p.substitute(free[k], unknowns::constant(params[k]));
    if (!p.is_constant()) throw std::logic_error("component value still depends on an unknown");
    t.c[i] = ring.from_rational(p.constant_term());
  }
  return t;
}

std::string Component::to_string() const {
  static const char* products[] = {"x^2", "xy", "yx", "y^2"};
  std::string out;
  for (std::size_t k = 0; k < 4; ++k) {
    std::string comb;
    for (std::size_t b = 0; b < 2; ++b) {
      const Poly& p = values[k * 2 + b];
      if (p.is_zero()) continue;
      std::string coef = show(p);
      std::string basis = b == 0 ? "x" : "y";
      std::string piece = p == unknowns::constant(1) ? basis
                          : p.terms().size() == 1 && p.terms().begin()->second > 0
                              ? coef + "*" + basis
                              : "(" + coef + ")*" + basis;
      comb += comb.empty() ? piece : " + " + piece;
    }
    if (!out.empty()) out += ", ";
    out += std::string(products[k]) + " = " + (comb.empty() ? "0" : comb);
  }
  if (!free.empty()) {
    out += "; free:";
    for (std::size_t f : free) out += " " + unknowns::names()[f];
  }
  if (!nonzero.empty()) {
    out += "; nonzero:";
    for (const auto& n : nonzero) out += " " + show(n);
  }
  return out;
}

std::vector<Component> reduce_system(const std::vector<Poly>& equations) {
  ReduceState s;
  for (const auto& e : equations) {
    for (std::size_t v : e.variables())
      if (v >= kTableVars) throw std::invalid_argument("reduce_system: equation involves the type-3 parameter");
    s.eqs.push_back(e);
  }
  for (std::size_t i = 0; i < 8; ++i) s.values[i] = unknowns::var(i);
  std::vector<Component> out;
  reduce(std::move(s), out);
  merge_components(out);
  std::sort(out.begin(), out.end(), [](const Component& x, const Component& y) {
    if (x.free.size() != y.free.size()) return x.free.size() < y.free.size();
    return x.to_string() < y.to_string();
  });
  return out;
}

namespace {

std::vector<Poly> residuals(const std::vector<Equation>& eqs) {
  std::vector<Poly> out;
  for (const auto& e : eqs) out.push_back(e.residual());
  return out;
}

}  // namespace

CompatDomain compat_domain(const ComultType& type) {
  CompatDomain d{type, {}, {}, {}};
  if (type.kind == ComultKind::type3) {
    d.systems = type3_printed_systems();
    return d;
  }
  d.components = reduce_system(residuals(compat_equations(type.kind)));
  const RingDescriptor Q = RingDescriptor::rationals();
  if (std::all_of(d.components.begin(), d.components.end(), [](const Component& c) { return c.is_point(); })) {
    for (const auto& c : d.components) d.candidates.push_back(c.at(Q, {}));
    sort_unique(d.candidates);
  }
  return d;
}

// ---------------------------------------------------------------- enumeration

ClassificationResult enumerate_type1() {
  ComultType type = ComultType::type1();
  CompatDomain dom = compat_domain(type);
  if (dom.candidates.empty()) throw EnumerationIncomplete("type 1 compatibility domain is not finite");
  ClassificationResult r{type, Symmetry::swap, {}, {}, {}, {}, {}, dom.candidates.size()};
  for (const auto& t : dom.candidates) {
    StructureBialgebra b = make_bialgebra(t, type);
    if (check_compat(b).pass && check_sd_bialgebra(b).pass) r.solutions.push_back(t);
  }
  sort_unique(r.solutions);
  for (const auto& t : r.solutions) {
    r.verification.push_back(verify_table(t, type));
    r.representatives.push_back(canonicalize(t, Symmetry::swap));
  }
  sort_unique(r.representatives);
  return r;
}

ClassificationResult enumerate_type2() {
  ComultType type = ComultType::type2();
  std::vector<Poly> eqs = residuals(compat_equations(ComultKind::type2));
  for (auto& p : residuals(sd_equations(ComultKind::type2))) eqs.push_back(std::move(p));
  auto comps = reduce_system(eqs);
  const RingDescriptor Q = RingDescriptor::rationals();
  ClassificationResult r{type, Symmetry::scale, {}, {}, {}, {}, {}, 0};
  const std::vector<mpq_class> grid = {-2, -1, 0, 1, 2, mpq_class(1, 2)};
  for (const auto& c : comps) {
    if (c.is_point()) {
      r.solutions.push_back(c.at(Q, {}));
      continue;
    }
    r.families.push_back(c);
    // sample the family on a small grid, skipping excluded parameter values
    std::vector<std::size_t> idx(c.free.size(), 0);
    while (true) {
      std::vector<mpq_class> params;
      for (std::size_t k : idx) params.push_back(grid[k]);
      bool allowed = true;
      for (const auto& n : c.nonzero) {
        Poly p = n;
        for (std::size_t k = 0; k < c.free.size(); ++k) p = p.substitute(c.free[k], unknowns::constant(params[k]));
        if (p.is_zero()) allowed = false;
      }
      if (allowed) {
        MultTable2 t = c.at(Q, params);
        r.family_samples.emplace_back(t, verify_table(t, type));
      }
      std::size_t pos = idx.size();
      while (pos > 0 && ++idx[pos - 1] == grid.size()) idx[--pos] = 0;
      if (pos == 0) break;
    }
  }
  sort_unique(r.solutions);
  for (const auto& t : r.solutions) {
    r.verification.push_back(verify_table(t, type));
    r.representatives.push_back(canonicalize(t, Symmetry::scale));
  }
  sort_unique(r.representatives);
  return r;
}

std::vector<MultTable2> expected_type1_tables() {
  const RingDescriptor Q = RingDescriptor::rationals();
  const std::array<long, 8> rows[] = {
      {1, 0, 0, 1, 1, 0, 0, 1}, {1, 0, 1, 0, 0, 1, 0, 1}, {1, 0, 1, 0, 1, 0, 0, 1}, {1, 0, 0, 0, 0, 0, 0, 1},
      {1, 0, 1, 0, 0, 1, 1, 0}, {1, 0, 1, 0, 1, 0, 1, 0}, {1, 0, 0, 0, 0, 1, 0, 0}, {1, 0, 0, 0, 0, 0, 0, 0},
      {0, 1, 0, 1, 1, 0, 1, 0}, {0, 1, 0, 1, 0, 0, 0, 0}, {0, 1, 0, 0, 0, 0, 0, 0}, {0, 0, 0, 1, 0, 0, 0, 0},
      {0, 0, 0, 0, 0, 0, 0, 0},
  };
  std::vector<MultTable2> out;
  for (const auto& r : rows) out.push_back(MultTable2::from_ints(Q, r));
  return out;
}

std::vector<MultTable2> expected_type2_tables() {
  const RingDescriptor Q = RingDescriptor::rationals();
  return {MultTable2::from_ints(Q, {0, 0, 0, 0, 0, 0, 0, 0}), MultTable2::from_ints(Q, {0, 0, 0, 1, 0, 0, 0, 0}),
          MultTable2::from_ints(Q, {1, 0, 0, 0, 0, 0, 0, 0}), MultTable2::from_ints(Q, {1, 0, 0, 1, 0, 0, 0, 0})};
}

// ---------------------------------------------------------------- type 3

bool Type3Entry::all_printed() const {
  return std::all_of(printed_systems.begin(), printed_systems.end(), [](bool b) { return b; });
}

bool Type3Entry::all_derived() const {
  return std::all_of(derived_systems.begin(), derived_systems.end(), [](bool b) { return b; });
}

Type3Result verify_type3(const mpq_class& a) {
  if (a == 0) throw std::invalid_argument("type 3 needs a != 0");
  auto [root, sf] = square_free_decomposition(a);
  RingDescriptor ring = sf == 1 ? RingDescriptor::rationals() : RingDescriptor::quad(sf);
  Scalar sqrt_a = sf == 1 ? ring.from_rational(root) : ring.from_rational(root) * ring.sqrt_d();
  Scalar a_s = ring.from_rational(a);
  Type3Result res{a, ring, sqrt_a, {}};
  ComultType type = ComultType::type3(a_s);

  const Scalar zero = ring.zero(), one = ring.one(), half = ring.from_rational(mpq_class(1, 2));
  const Scalar inv_2sqrt = inverse(ring.from_int(2) * sqrt_a);
  auto table = [](std::array<Scalar, 8> c) { return MultTable2{c}; };

  struct Listed {
    int entry;
    std::string convention;
    MultTable2 t;
  };
  std::vector<Listed> listed;
  for (int sign : {-1, 1}) {
    int entry = sign < 0 ? 1 : 2;
    Scalar s = ring.from_int(sign);
    for (bool flipped : {false, true}) {
      Scalar yy = flipped ? -(s * inv_2sqrt) : s * inv_2sqrt;
      listed.push_back({entry, flipped ? "flipped" : "printed",
                        table({one, s * sqrt_a * half, zero, -half, zero, half, zero, yy})});
    }
  }
  listed.push_back({3, "printed", table({one, zero, zero, zero, zero, -one, zero, zero})});
  listed.push_back({4, "printed", table({zero, zero, zero, zero, zero, zero, zero, zero})});
  // y^2 = 0 here, so negating the y^2 term gives the same table
  for (const char* conv : {"printed", "flipped"}) {
    listed.push_back({5, conv, table({one, -sqrt_a, zero, zero, zero, zero, zero, zero})});
    listed.push_back({6, conv, table({one, sqrt_a, zero, zero, zero, zero, zero, zero})});
  }

  const auto printed = type3_printed_systems();
  const auto derived = compat_equations(ComultKind::type3);
  for (auto& l : listed) {
    Type3Entry e{l.entry, l.convention, l.t, verify_table(l.t, type), {}, {}};
    std::vector<Scalar> point(l.t.c.begin(), l.t.c.end());
    point.push_back(a_s);
    for (const auto& eq : printed) e.printed_systems.push_back(eq.holds_at(point, ring));
    for (const auto& eq : derived) e.derived_systems.push_back(eq.holds_at(point, ring));
    res.entries.push_back(std::move(e));
  }
  std::stable_sort(res.entries.begin(), res.entries.end(),
                   [](const Type3Entry& x, const Type3Entry& y) { return x.entry < y.entry; });
  return res;
}

}  // namespace sdalg
