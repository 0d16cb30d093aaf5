#pragma once

// Dense exact matrices and linear solves.

#include "sdalg/exactnum.hpp"

#include <optional>

namespace sdalg {

class SingularMatrix : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Row-major dense matrix over a single ring.
class Matrix {
 public:
  Matrix(RingDescriptor ring, std::size_t rows, std::size_t cols);

  static Matrix identity(const RingDescriptor& ring, std::size_t n);
  /// Builds from nested rows; all rows must have equal length and ring.
  static Matrix from_rows(const std::vector<Vec>& rows);

  const RingDescriptor& ring() const { return ring_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vec row(std::size_t r) const;
  Vec column(std::size_t c) const;
  Vec apply(const Vec& x) const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b);

 private:
  RingDescriptor ring_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Scalar> data_;
};

/// Kronecker product a (x) b.
Matrix kron(const Matrix& a, const Matrix& b);

/// Throws SingularMatrix when a is not invertible.
Matrix inverse(const Matrix& a);

struct LinearSolution {
  Vec x;         // free variables set to zero
  bool unique;   // no free variables
};

/// Solves a x = b by Gauss-Jordan elimination. Returns nullopt when inconsistent.
std::optional<LinearSolution> solve_linear(const Matrix& a, const Vec& b);

}  // namespace sdalg
