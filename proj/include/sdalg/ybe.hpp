#pragma once

// Linear Yang-Baxter operators R(a (x) b) = b1 (x) (a * b2) built from a
// cocommutative linear rack, with braid and invertibility checks.

#include "sdalg/bialg.hpp"

namespace sdalg {

class PreconditionFailed : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Matrix acting on A (x) A; basis tensor e_j (x) e_k has index j*d + k and
/// column c holds the image of basis tensor c.
struct TensorOperator {
  std::size_t d;
  Matrix m;
};

/// R(e_a (x) e_b) = sum_jk mu_b^jk e_j (x) (e_a * e_k). Requires multiplication,
/// comultiplication and counit, and a cocommutative Delta unless `force`.
TensorOperator build_R(const StructureBialgebra& a, bool force = false);

/// R^-1(e_a (x) e_b) = sum_jk mu_a^jk (e_b bar e_j) (x) e_k.
TensorOperator build_Rinv(const StructureBialgebra& a, const Tensor3& barstar);

/// (R (x) id)(id (x) R)(R (x) id) = (id (x) R)(R (x) id)(id (x) R). The witness
/// is the first input basis triple whose images differ.
AxiomReport check_braid(const TensorOperator& r);

/// R Rinv = Rinv R = id. The witness is the first basis pair where either
/// product differs from the identity; sides are the two product columns.
AxiomReport check_inverse(const TensorOperator& r, const TensorOperator& rinv);

/// For operators sending basis tensors to basis tensors: the induced map on
/// index pairs, or none when some column is not a basis tensor.
std::optional<std::vector<std::pair<Index, Index>>> induced_set_map(const TensorOperator& r);

/// Set-level braid relation R12 R23 R12 = R23 R12 R23 for the map
/// (a, b) -> (b, a * b) on X x X.
bool check_set_braid(const FiniteMagma& x);

}  // namespace sdalg
