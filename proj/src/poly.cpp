#include "sdalg/poly.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace sdalg {

Poly Poly::constant(std::size_t nvars, const mpq_class& c) {
  Poly p(nvars);
  p.add_term(Monomial(nvars, 0), c);
  return p;
}

Poly Poly::variable(std::size_t nvars, std::size_t v) {
  if (v >= nvars) throw std::out_of_range("variable index out of range");
  Poly p(nvars);
  Monomial m(nvars, 0);
  m[v] = 1;
  p.add_term(m, 1);
  return p;
}

void Poly::add_term(const Monomial& m, const mpq_class& c) {
  if (c == 0) return;
  auto [it, fresh] = terms_.try_emplace(m, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

bool Poly::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  const auto& m = terms_.begin()->first;
  return std::all_of(m.begin(), m.end(), [](unsigned e) { return e == 0; });
}

mpq_class Poly::constant_term() const {
  auto it = terms_.find(Monomial(nvars_, 0));
  return it == terms_.end() ? mpq_class(0) : it->second;
}

unsigned Poly::degree(std::size_t v) const {
  unsigned d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m[v]);
  return d;
}

unsigned Poly::min_degree(std::size_t v) const {
  if (terms_.empty()) return 0;
  unsigned d = ~0u;
  for (const auto& [m, c] : terms_) d = std::min(d, m[v]);
  return d;
}

std::vector<std::size_t> Poly::variables() const {
  std::set<std::size_t> vs;
  for (const auto& [m, c] : terms_)
    for (std::size_t i = 0; i < nvars_; ++i)
      if (m[i]) vs.insert(i);
  return {vs.begin(), vs.end()};
}

Poly Poly::substitute(std::size_t v, const Poly& value) const {
  Poly out(nvars_);
  std::vector<Poly> powers{Poly::constant(nvars_, 1)};
  for (const auto& [m, c] : terms_) {
    while (powers.size() <= m[v]) powers.push_back(powers.back() * value);
    Monomial rest = m;
    rest[v] = 0;
    Poly term(nvars_);
    term.add_term(rest, c);
    out += term * powers[m[v]];
  }
  return out;
}

Poly Poly::divide_by_var(std::size_t v, unsigned k) const {
  Poly out(nvars_);
  for (const auto& [m, c] : terms_) {
    if (m[v] < k) throw std::invalid_argument("polynomial not divisible by the variable power");
    Monomial r = m;
    r[v] -= k;
    out.add_term(r, c);
  }
  return out;
}

std::pair<Poly, Poly> Poly::split_linear(std::size_t v) const {
  Poly q(nvars_), r(nvars_);
  for (const auto& [m, c] : terms_) {
    if (m[v] > 1) throw std::invalid_argument("split_linear: variable has degree above 1");
    Monomial rest = m;
    rest[v] = 0;
    (m[v] ? q : r).add_term(rest, c);
  }
  return {q, r};
}

std::vector<mpq_class> Poly::univariate_coefficients(std::size_t v) const {
  std::vector<mpq_class> out(degree(v) + 1, mpq_class(0));
  for (const auto& [m, c] : terms_) {
    for (std::size_t i = 0; i < nvars_; ++i)
      if (i != v && m[i]) throw std::invalid_argument("polynomial is not univariate");
    out[m[v]] = c;
  }
  return out;
}

Scalar Poly::evaluate(const std::vector<Scalar>& point, const RingDescriptor& ring) const {
  if (point.size() != nvars_) throw std::invalid_argument("evaluation point has wrong length");
  Scalar sum = ring.zero();
  for (const auto& [m, c] : terms_) {
    Scalar t = ring.from_rational(c);
    for (std::size_t i = 0; i < nvars_; ++i)
      for (unsigned e = 0; e < m[i]; ++e) t *= point[i];
    sum += t;
  }
  return sum;
}

std::string Poly::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::string out;
  // highest total degree first reads more naturally
  std::vector<std::pair<Monomial, mpq_class>> ts(terms_.rbegin(), terms_.rend());
  for (const auto& [m, c] : ts) {
    std::string mono;
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (!m[i]) continue;
      if (!mono.empty()) mono += "*";
      mono += names.at(i);
      if (m[i] > 1) mono += "^" + std::to_string(m[i]);
    }
    mpq_class mag = abs(c);
    std::string coef = mag.get_str();
    std::string body = mono.empty() ? coef : (mag == 1 ? mono : coef + "*" + mono);
    if (out.empty()) out = (c < 0 ? "-" : "") + body;
    else out += (c < 0 ? " - " : " + ") + body;
  }
  return out;
}

Poly Poly::operator-() const {
  Poly out(nvars_);
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
  return out;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.nvars_ != nvars_) throw std::invalid_argument("polynomials over different variable sets");
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.nvars_ != nvars_) throw std::invalid_argument("polynomials over different variable sets");
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.nvars_ != b.nvars_) throw std::invalid_argument("polynomials over different variable sets");
  Poly out(a.nvars_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) {
      Poly::Monomial m(a.nvars_);
      for (std::size_t i = 0; i < a.nvars_; ++i) m[i] = ma[i] + mb[i];
      out.add_term(m, ca * cb);
    }
  return out;
}

Poly operator*(const mpq_class& c, const Poly& p) {
  Poly out(p.nvars_);
  for (const auto& [m, x] : p.terms_) out.add_term(m, c * x);
  return out;
}

namespace {

std::vector<mpz_class> divisors(mpz_class n) {
  n = abs(n);
  if (n > 1000000) throw std::overflow_error("coefficient too large for the rational root test");
  std::vector<mpz_class> out;
  for (mpz_class d = 1; d <= n; ++d)
    if (n % d == 0) out.push_back(d);
  return out;
}

mpq_class horner(const std::vector<mpq_class>& c, const mpq_class& x) {
  mpq_class acc = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

// Divides by (x - r); r must be a root.
std::vector<mpq_class> deflate(const std::vector<mpq_class>& c, const mpq_class& r) {
  std::vector<mpq_class> q(c.size() - 1);
  mpq_class carry = 0;
  for (std::size_t i = c.size() - 1; i > 0; --i) {
    carry = c[i] + carry * r;
    q[i - 1] = carry;
  }
  return q;
}

}  // namespace

RationalRoots rational_roots(const std::vector<mpq_class>& coeffs) {
  std::vector<mpq_class> c = coeffs;
  while (!c.empty() && c.back() == 0) c.pop_back();
  if (c.empty()) throw std::invalid_argument("rational_roots of the zero polynomial");
  std::set<mpq_class> roots;
  while (c.size() > 1 && c.front() == 0) {
    roots.insert(0);
    c.erase(c.begin());
  }
  bool found = true;
  while (found && c.size() > 1) {
    found = false;
    mpz_class lcm_den = 1;
    for (const auto& x : c) lcm_den = lcm(lcm_den, x.get_den());
    mpz_class lead = mpz_class(c.back() * lcm_den), tail = mpz_class(c.front() * lcm_den);
    for (const auto& p : divisors(tail)) {
      for (const auto& q : divisors(lead)) {
        for (int sign : {1, -1}) {
          mpq_class r(sign * p, q);
          r.canonicalize();
          if (horner(c, r) == 0) {
            roots.insert(r);
            c = deflate(c, r);
            found = true;
            break;
          }
        }
        if (found) break;
      }
      if (found) break;
    }
  }
  return {{roots.begin(), roots.end()}, c.size() - 1};
}

}  // namespace sdalg
