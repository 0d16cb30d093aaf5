#pragma once

// Exact scalars over Q, GF(p) and Q(sqrt d).

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace sdalg {

class RingMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class DivisionByZero : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

enum class RingKind { rational, gfp, quad };

class Scalar;

/// Identifies the coefficient ring. Two scalars can only be combined when
/// their descriptors compare equal.
struct RingDescriptor {
  RingKind kind = RingKind::rational;
  std::int64_t p = 0;  // gfp only
  std::int64_t d = 0;  // quad only

  static RingDescriptor rationals() { return {}; }
  /// Throws std::invalid_argument unless p is prime.
  static RingDescriptor gfp(std::int64_t p);
  /// Throws std::invalid_argument unless d is square-free and not 0 or 1.
  static RingDescriptor quad(std::int64_t d);

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(long n) const;
  /// Image of a rational number; in GF(p) the denominator must be invertible.
  Scalar from_rational(const mpq_class& q) const;
  /// The quad generator sqrt(d).
  Scalar sqrt_d() const;

  std::string to_string() const;

  friend bool operator==(const RingDescriptor&, const RingDescriptor&) = default;
};

/// 0 for Q and Q(sqrt d), p for GF(p).
std::int64_t characteristic(const RingDescriptor& ring);

bool is_prime(std::int64_t n);
bool is_square_free(std::int64_t n);

/// Immutable exact scalar. Rationals are kept in lowest terms by GMP, GF(p)
/// residues live in [0, p), quad elements are u + v*sqrt(d).
class Scalar {
 public:
  Scalar() = default;  // rational zero

  static Scalar rational(const mpq_class& q);
  static Scalar residue(const RingDescriptor& ring, const mpz_class& r);
  static Scalar quad(const RingDescriptor& ring, const mpq_class& u, const mpq_class& v);

  const RingDescriptor& ring() const { return ring_; }
  /// Rational part (Q), residue (GF(p)) or u (quad).
  const mpq_class& u() const { return u_; }
  /// sqrt(d) coefficient; zero outside quad.
  const mpq_class& v() const { return v_; }

  bool is_zero() const { return sgn(u_) == 0 && sgn(v_) == 0; }
  bool is_one() const { return u_ == 1 && sgn(v_) == 0; }

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(const Scalar& a, const Scalar& b);

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.ring_ == b.ring_ && a.u_ == b.u_ && a.v_ == b.v_;
  }

  std::string to_string() const;

 private:
  Scalar(RingDescriptor ring, mpq_class u, mpq_class v)
      : ring_(ring), u_(std::move(u)), v_(std::move(v)) {}

  void require_same_ring(const Scalar& o) const;
  void reduce();

  RingDescriptor ring_;
  mpq_class u_;
  mpq_class v_;
};

/// Throws DivisionByZero on zero input.
Scalar inverse(const Scalar& a);

/// Total order used for canonical representatives: lexicographic on (u, v).
bool canonical_less(const Scalar& a, const Scalar& b);

std::ostream& operator<<(std::ostream& os, const Scalar& s);

using Vec = std::vector<Scalar>;

Vec zero_vec(const RingDescriptor& ring, std::size_t n);
Vec unit_vec(const RingDescriptor& ring, std::size_t n, std::size_t i);
bool is_zero(const Vec& v);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scale(const Scalar& s, const Vec& a);
/// Sum of all coordinates.
Scalar coordinate_sum(const Vec& v);
std::string to_string(const Vec& v);

/// Parses "n", "n/d" or "-n/d" into a rational. Throws std::invalid_argument.
mpq_class parse_rational(const std::string& text);

/// Writes a = r^2 * s with s square-free; returns {r, s} (s keeps the sign).
std::pair<mpq_class, std::int64_t> square_free_decomposition(const mpq_class& a);

}  // namespace sdalg
