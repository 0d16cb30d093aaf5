#pragma once

// Sparse multivariate polynomials with rational coefficients over a fixed
// number of variables.

#include "sdalg/exactnum.hpp"

#include <map>
#include <string>
#include <vector>

namespace sdalg {

class Poly {
 public:
  using Monomial = std::vector<unsigned>;

  explicit Poly(std::size_t nvars = 0) : nvars_(nvars) {}
  static Poly constant(std::size_t nvars, const mpq_class& c);
  static Poly variable(std::size_t nvars, std::size_t v);

  std::size_t nvars() const { return nvars_; }
  const std::map<Monomial, mpq_class>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  mpq_class constant_term() const;
  unsigned degree(std::size_t v) const;
  /// Smallest exponent of v over all terms (0 for the zero polynomial).
  unsigned min_degree(std::size_t v) const;
  std::vector<std::size_t> variables() const;

  Poly substitute(std::size_t v, const Poly& value) const;
  /// Divides every term by v^k; requires min_degree(v) >= k.
  Poly divide_by_var(std::size_t v, unsigned k) const;
  /// p = q v + r with v absent from q and r; requires degree(v) <= 1.
  std::pair<Poly, Poly> split_linear(std::size_t v) const;
  /// Coefficients c_0..c_n of a polynomial in v alone.
  std::vector<mpq_class> univariate_coefficients(std::size_t v) const;

  Scalar evaluate(const std::vector<Scalar>& point, const RingDescriptor& ring) const;
  std::string to_string(const std::vector<std::string>& names) const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(const mpq_class& c, const Poly& p);
  friend bool operator==(const Poly&, const Poly&) = default;

 private:
  void add_term(const Monomial& m, const mpq_class& c);

  std::size_t nvars_;
  std::map<Monomial, mpq_class> terms_;
};

struct RationalRoots {
  std::vector<mpq_class> roots;  // distinct, ascending
  std::size_t residual_degree;   // degree left after removing all rational roots
};

/// Rational roots of c_0 + c_1 x + ... + c_n x^n by the rational root test.
/// Throws std::overflow_error when a coefficient is too large to factor.
RationalRoots rational_roots(const std::vector<mpq_class>& coeffs);

}  // namespace sdalg
