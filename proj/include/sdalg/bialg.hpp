#pragma once

// Finite-dimensional algebras, coalgebras and bialgebras by structure
// constants, with exact axiom checkers.
//
// Every identity checked here is multilinear in its arguments, so it is
// verified on basis tuples only. Plain self-distributivity is quadratic in c
// and is checked through its polarized system instead.

#include "sdalg/exactnum.hpp"
#include "sdalg/linalg.hpp"
#include "sdalg/magma.hpp"

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace sdalg {

class InvalidStructure : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class MissingStructure : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// d x d x d array of scalars, entry (i, j, k) at (i*d + j)*d + k.
class Tensor3 {
 public:
  Tensor3(RingDescriptor ring, std::size_t d) : ring_(ring), d_(d), data_(d * d * d, ring.zero()) {}

  const RingDescriptor& ring() const { return ring_; }
  std::size_t dim() const { return d_; }

  Scalar& operator()(Index i, Index j, Index k) { return data_[(i * d_ + j) * d_ + k]; }
  const Scalar& operator()(Index i, Index j, Index k) const { return data_[(i * d_ + j) * d_ + k]; }

  /// The d-vector (i, j, .).
  Vec fiber(Index i, Index j) const;
  /// The d^2-vector (i, ., .).
  Vec slice(Index i) const;

  friend bool operator==(const Tensor3&, const Tensor3&) = default;

 private:
  RingDescriptor ring_;
  std::size_t d_;
  std::vector<Scalar> data_;
};

/// mult(i, j, k) = m_ij^k with e_i e_j = sum_k m_ij^k e_k;
/// comult(i, j, k) = mu_i^jk with Delta(e_i) = sum mu_i^jk e_j (x) e_k.
/// Either tensor may be absent (pure algebras and pure coalgebras).
class StructureBialgebra {
 public:
  /// Throws InvalidStructure when shapes or rings disagree, when a given
  /// counit fails the counit axiom, or when the unit index is not
  /// coaugmented (Delta(1) = 1 (x) 1, eps(1) = 1).
  StructureBialgebra(RingDescriptor ring, std::size_t dim, std::optional<Tensor3> mult,
                     std::optional<Tensor3> comult, std::optional<Vec> counit = std::nullopt,
                     std::optional<Index> unit_index = std::nullopt);

  const RingDescriptor& ring() const { return ring_; }
  std::size_t dim() const { return dim_; }

  bool has_mult() const { return mult_.has_value(); }
  bool has_comult() const { return comult_.has_value(); }
  /// Throw MissingStructure when absent.
  const Tensor3& mult() const;
  const Tensor3& comult() const;
  const std::optional<Vec>& counit() const { return counit_; }
  const std::optional<Index>& unit_index() const { return unit_index_; }

  /// e_i e_j as a coordinate vector.
  Vec product(Index i, Index j) const { return mult().fiber(i, j); }

  friend bool operator==(const StructureBialgebra&, const StructureBialgebra&) = default;

 private:
  RingDescriptor ring_;
  std::size_t dim_;
  std::optional<Tensor3> mult_;
  std::optional<Tensor3> comult_;
  std::optional<Vec> counit_;
  std::optional<Index> unit_index_;
};

/// Tensor with Delta(e_i) = e_i (x) e_i.
Tensor3 grouplike_comult(const RingDescriptor& ring, std::size_t d);

// Linear-algebra primitives on coordinate vectors.

/// Bilinear extension of a multiplication tensor.
Vec mul(const Tensor3& m, const Vec& u, const Vec& v);
Vec mul(const StructureBialgebra& a, const Vec& u, const Vec& v);
/// Delta(u) as a d^2-vector indexed j*d + k.
Vec comul(const StructureBialgebra& a, const Vec& u);
/// (Delta (x) id) Delta u as a d^3-vector indexed (p*d + q)*d + r.
Vec sweedler3(const StructureBialgebra& a, const Vec& u);
/// Componentwise product (a (x) b)(c (x) d) = ac (x) bd on A (x) A.
Vec tensor_mul(const Tensor3& m, const Vec& s, const Vec& t);
/// eps(u); requires a counit.
Scalar counit_value(const StructureBialgebra& a, const Vec& u);

/// Failure witnesses carry the basis indices and both sides of the identity
/// evaluated there, so any failure can be re-checked independently.
struct AxiomReport {
  std::string axiom;
  bool pass = true;
  std::vector<Index> witness;
  Vec lhs;
  Vec rhs;
  std::string detail;
};

/// Both sides of an identity at a tuple of basis indices.
struct Sides {
  Vec lhs;
  Vec rhs;
};

/// Evaluates the named identity at a basis tuple. `barstar` is only needed by
/// the linear-rack inverse identities. Throws std::invalid_argument for an
/// unknown axiom or a witness of the wrong arity.
Sides evaluate_axiom(const StructureBialgebra& a, const std::string& axiom, std::span<const Index> witness,
                     const Tensor3* barstar = nullptr);

AxiomReport check_coassoc(const StructureBialgebra& a);
AxiomReport check_cocommutative(const StructureBialgebra& a);
AxiomReport check_counit(const StructureBialgebra& a);
AxiomReport check_compat(const StructureBialgebra& a);
AxiomReport check_sd_bialgebra(const StructureBialgebra& a);
AxiomReport check_sd_plain(const StructureBialgebra& a);
AxiomReport check_cube_zero(const StructureBialgebra& a);
AxiomReport check_novikov(const StructureBialgebra& a);
AxiomReport check_gen_idempotent(const StructureBialgebra& a);
AxiomReport check_gen_jordan(const StructureBialgebra& a);

struct CounitSolution {
  Vec counit;
  bool unique;
};

/// Solves the 2d^2 linear equations of the counit axiom. When a counit is
/// stored it is verified instead. Free variables of a non-unique solution are
/// set to zero.
std::optional<CounitSolution> find_counit(const StructureBialgebra& a);

/// Sub-verdicts for the linear shelf / rack / quandle axioms, with the
/// multiplication of `a` playing the role of *.
struct LinearRackReport {
  AxiomReport coassoc;
  AxiomReport counit;
  AxiomReport morphism;          // * is a coalgebra morphism
  AxiomReport self_distributive;  // axiom 3
  AxiomReport inverse;            // axiom 2, two identities
  AxiomReport barstar_morphism;   // the second operation is a coalgebra morphism
  AxiomReport idempotent;         // axiom 1
  MagmaClass label = MagmaClass::none;
};

/// Throws MissingStructure without a counit. Without `barstar` the inverse
/// axiom is reported as failed with an explanatory detail.
LinearRackReport check_linear_rack(const StructureBialgebra& a, const std::optional<Tensor3>& barstar);

/// Named axiom suite used by the CLI; "all" expands to every checker that the
/// structure supports.
std::vector<std::string> known_axioms();
AxiomReport run_axiom(const StructureBialgebra& a, const std::string& name);

/// Swaps the roles of multiplication and comultiplication on the dual basis:
/// mu'_k^ij = m_ij^k and m'_ij^k = mu_k^ij. Counit and unit are dropped.
StructureBialgebra dualize(const StructureBialgebra& a);

/// Re-expresses all structure in the basis g_i = sum_j P_ij e_j. Throws
/// SingularMatrix when P is not invertible.
StructureBialgebra change_basis(const StructureBialgebra& a, const Matrix& p);

}  // namespace sdalg
