#include "sdalg/exactnum.hpp"

#include <ostream>
#include <sstream>

namespace sdalg {

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t k = 2; k * k <= n; ++k)
    if (n % k == 0) return false;
  return true;
}

bool is_square_free(std::int64_t n) {
  if (n == 0) return false;
  if (n < 0) n = -n;
  for (std::int64_t k = 2; k * k <= n; ++k)
    if (n % (k * k) == 0) return false;
  return true;
}

RingDescriptor RingDescriptor::gfp(std::int64_t p) {
  if (!is_prime(p)) throw std::invalid_argument("GF(p) needs a prime p, got " + std::to_string(p));
  return {RingKind::gfp, p, 0};
}

RingDescriptor RingDescriptor::quad(std::int64_t d) {
  if (d == 1 || !is_square_free(d))
    throw std::invalid_argument("Q(sqrt d) needs square-free d != 0, 1; got " + std::to_string(d));
  return {RingKind::quad, 0, d};
}

Scalar RingDescriptor::zero() const { return from_int(0); }
Scalar RingDescriptor::one() const { return from_int(1); }
Scalar RingDescriptor::from_int(long n) const { return from_rational(mpq_class(n)); }

Scalar RingDescriptor::from_rational(const mpq_class& q) const {
  switch (kind) {
    case RingKind::rational:
      return Scalar::rational(q);
    case RingKind::quad:
      return Scalar::quad(*this, q, 0);
    case RingKind::gfp: {
      mpz_class den = q.get_den() % mpz_class(static_cast<long>(p));
      if (den == 0) throw DivisionByZero("denominator vanishes in GF(" + std::to_string(p) + ")");
      mpz_class inv;
      mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), mpz_class(static_cast<long>(p)).get_mpz_t());
      return Scalar::residue(*this, q.get_num() * inv);
    }
  }
  throw std::logic_error("unreachable ring kind");
}

Scalar RingDescriptor::sqrt_d() const {
  if (kind != RingKind::quad) throw std::invalid_argument("sqrt_d requires a quad ring");
  return Scalar::quad(*this, 0, 1);
}

std::string RingDescriptor::to_string() const {
  switch (kind) {
    case RingKind::rational:
      return "Q";
    case RingKind::gfp:
      return "GF(" + std::to_string(p) + ")";
    case RingKind::quad:
      return "Q(sqrt(" + std::to_string(d) + "))";
  }
  return "?";
}

std::int64_t characteristic(const RingDescriptor& ring) {
  return ring.kind == RingKind::gfp ? ring.p : 0;
}

Scalar Scalar::rational(const mpq_class& q) {
  mpq_class u = q;
  u.canonicalize();
  return Scalar(RingDescriptor::rationals(), u, 0);
}

Scalar Scalar::residue(const RingDescriptor& ring, const mpz_class& r) {
  if (ring.kind != RingKind::gfp) throw std::invalid_argument("residue requires a GF(p) ring");
  Scalar s(ring, mpq_class(r), 0);
  s.reduce();
  return s;
}

Scalar Scalar::quad(const RingDescriptor& ring, const mpq_class& u, const mpq_class& v) {
  if (ring.kind != RingKind::quad) throw std::invalid_argument("quad element requires a quad ring");
  mpq_class cu = u, cv = v;
  cu.canonicalize();
  cv.canonicalize();
  return Scalar(ring, cu, cv);
}

void Scalar::reduce() {
  if (ring_.kind != RingKind::gfp) return;
  mpz_class p(static_cast<long>(ring_.p));
  mpz_class r = u_.get_num() % p;
  if (r < 0) r += p;
  u_ = r;
}

void Scalar::require_same_ring(const Scalar& o) const {
  if (!(ring_ == o.ring_))
    throw RingMismatch("ring mismatch: " + ring_.to_string() + " vs " + o.ring_.to_string());
}

Scalar Scalar::operator-() const {
  Scalar r(ring_, -u_, -v_);
  r.reduce();
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  require_same_ring(o);
  u_ += o.u_;
  v_ += o.v_;
  reduce();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  require_same_ring(o);
  u_ -= o.u_;
  v_ -= o.v_;
  reduce();
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  require_same_ring(o);
  if (ring_.kind == RingKind::quad) {
    mpq_class d(static_cast<long>(ring_.d));
    mpq_class u = u_ * o.u_ + d * v_ * o.v_;
    mpq_class v = u_ * o.v_ + v_ * o.u_;
    u_ = u;
    v_ = v;
  } else {
    u_ *= o.u_;
    reduce();
  }
  return *this;
}

Scalar inverse(const Scalar& a) {
  if (a.is_zero()) throw DivisionByZero("inverse of zero");
  const RingDescriptor& ring = a.ring();
  switch (ring.kind) {
    case RingKind::rational:
      return Scalar::rational(1 / a.u());
    case RingKind::gfp: {
      mpz_class inv;
      mpz_class p(static_cast<long>(ring.p));
      mpz_invert(inv.get_mpz_t(), a.u().get_num_mpz_t(), p.get_mpz_t());
      return Scalar::residue(ring, inv);
    }
    case RingKind::quad: {
      // (u + v s)^-1 = (u - v s) / (u^2 - d v^2); the norm is nonzero since d is not a square.
      mpq_class norm = a.u() * a.u() - mpq_class(static_cast<long>(ring.d)) * a.v() * a.v();
      return Scalar::quad(ring, a.u() / norm, -a.v() / norm);
    }
  }
  throw std::logic_error("unreachable ring kind");
}

Scalar operator/(const Scalar& a, const Scalar& b) { return a * inverse(b); }

bool canonical_less(const Scalar& a, const Scalar& b) {
  if (a.u() != b.u()) return a.u() < b.u();
  return a.v() < b.v();
}

std::string Scalar::to_string() const {
  if (ring_.kind != RingKind::quad || sgn(v_) == 0) return u_.get_str();
  std::ostringstream os;
  if (sgn(u_) != 0) os << u_.get_str() << (sgn(v_) > 0 ? "+" : "-");
  else if (sgn(v_) < 0) os << "-";
  mpq_class av = abs(v_);
  if (av != 1) os << av.get_str() << "*";
  os << "sqrt(" << ring_.d << ")";
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

Vec zero_vec(const RingDescriptor& ring, std::size_t n) { return Vec(n, ring.zero()); }

Vec unit_vec(const RingDescriptor& ring, std::size_t n, std::size_t i) {
  Vec v = zero_vec(ring, n);
  v.at(i) = ring.one();
  return v;
}

bool is_zero(const Vec& v) {
  for (const auto& s : v)
    if (!s.is_zero()) return false;
  return true;
}

Vec add(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector length mismatch");
  Vec r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

Vec sub(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector length mismatch");
  Vec r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

Vec scale(const Scalar& s, const Vec& a) {
  Vec r = a;
  for (auto& x : r) x *= s;
  return r;
}

Scalar coordinate_sum(const Vec& v) {
  if (v.empty()) return Scalar{};
  Scalar s = v.front().ring().zero();
  for (const auto& x : v) s += x;
  return s;
}

std::string to_string(const Vec& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += v[i].to_string();
  }
  return out + ")";
}

mpq_class parse_rational(const std::string& text) {
  auto parse_int = [&](const std::string& s) {
    if (s.empty()) throw std::invalid_argument("bad rational: '" + text + "'");
    std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (start == s.size()) throw std::invalid_argument("bad rational: '" + text + "'");
    for (std::size_t i = start; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("bad rational: '" + text + "'");
    return mpz_class(s[0] == '+' ? s.substr(1) : s);
  };
  auto slash = text.find('/');
  if (slash == std::string::npos) return mpq_class(parse_int(text));
  mpz_class num = parse_int(text.substr(0, slash));
  mpz_class den = parse_int(text.substr(slash + 1));
  if (den == 0) throw DivisionByZero("zero denominator in '" + text + "'");
  mpq_class q(num, den);
  q.canonicalize();
  return q;
}

std::pair<mpq_class, std::int64_t> square_free_decomposition(const mpq_class& a) {
  if (sgn(a) == 0) throw std::invalid_argument("square-free part of zero");
  // a = num/den = num*den / den^2
  mpz_class n = abs(a.get_num() * a.get_den());
  if (!n.fits_slong_p()) throw std::invalid_argument("value too large to factor");
  std::int64_t rest = n.get_si();
  std::int64_t root = 1;
  std::int64_t free = 1;
  for (std::int64_t k = 2; k * k <= rest; ++k) {
    while (rest % (k * k) == 0) {
      rest /= k * k;
      root *= k;
    }
    if (rest % k == 0) {
      rest /= k;
      free *= k;
    }
  }
  free *= rest;
  if (sgn(a) < 0) free = -free;
  mpq_class r(mpz_class(static_cast<long>(root)), a.get_den());
  r.canonicalize();
  return {r, free};
}

}  // namespace sdalg
