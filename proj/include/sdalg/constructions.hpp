#pragma once

// Concrete self-distributive structures: rack algebras, the augmented
// extension, Leibniz racks, group adjoint actions and small Novikov algebras.

#include "sdalg/bialg.hpp"

namespace sdalg {

class NotARack : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Multiplication tensor of the linear extension of a finite magma.
Tensor3 magma_tensor(const FiniteMagma& m, const RingDescriptor& ring);

/// k[X] with group-like comultiplication and eps = (1, ..., 1). Throws NotARack.
StructureBialgebra rack_algebra(const FiniteMagma& x, const RingDescriptor& ring);

/// The second operation of k[X]: linear extension of the left division.
Tensor3 rack_barstar(const FiniteMagma& x, const RingDescriptor& ring);

/// {x - x0 : x != x0}, a basis of the kernel of eps.
std::vector<Vec> augmentation_ideal_basis(Index n, const RingDescriptor& ring, Index x0);

/// k + k[X] on the basis {1, x_0, ..., x_{n-1}} (1 at index 0) with
/// 1 x = 1, x 1 = 0, 1 1 = 0, Delta(1) = 1 (x) 1 and eps(1) = 1.
StructureBialgebra augmented_rack_bialgebra(const FiniteMagma& x, const RingDescriptor& ring);

/// phi(a, b) = the unique c with c * a = b, extended bilinearly. Throws NotARack.
Tensor3 phi_map(const FiniteMagma& x, const RingDescriptor& ring);

/// phi(x1, y) x2 for the group-like comultiplication of k[X].
Vec phi_identity_lhs(const StructureBialgebra& kx, const Tensor3& phi, const Vec& x, const Vec& y);

/// Checks phi(x1, y) x2 = eps(x) y on basis pairs (x, y).
AxiomReport check_phi_identity(const StructureBialgebra& kx, const Tensor3& phi);

/// Solves x a = b in k[T] for a trivial quandle T on n points. Returns
/// eps(a)^-1 b when eps(a) != 0, the zero vector when b = 0, otherwise none.
std::optional<Vec> solve_right_mult(Index n, const Vec& a, const Vec& b);

/// Bracket algebra [e_i, e_j] = sum_k c_ij^k e_k.
struct LeibnizData {
  RingDescriptor ring;
  std::size_t dim;
  Tensor3 bracket;
};

/// [[a,b],c] = [[a,c],b] + [a,[b,c]] on basis triples.
AxiomReport check_right_leibniz(const LeibnizData& l);
/// [[x,y],z] + [[y,z],x] + [[z,x],y] = 0 on basis triples (informational).
AxiomReport check_cyclic_jacobi(const LeibnizData& l);

namespace lie {
/// [e1, e2] = e2, [e2, e1] = -e2 (0-based: indices 0 and 1).
LeibnizData solvable2(const RingDescriptor& ring);
LeibnizData abelian(std::size_t dim, const RingDescriptor& ring);
}  // namespace lie

struct LeibnizRack {
  StructureBialgebra star;  // * as multiplication, 1 at index 0
  Tensor3 barstar;
};

/// N = k + L with Delta(x) = x (x) 1 + 1 (x) x, 1*1 = 1, 1*x = 0, x*1 = x,
/// x*y = [x,y], and the second operation with x bar y = -[x,y].
/// Throws std::invalid_argument when the right Leibniz identity fails.
LeibnizRack leibniz_rack(const LeibnizData& l);

/// Adjoint action h' * h = sum h1 h' S(h2) on a Hopf algebra given by its
/// multiplication, comultiplication and antipode matrix (column i = S(e_i)).
Tensor3 adjoint_action(const Tensor3& mult, const Tensor3& comult, const Matrix& antipode);

/// k[G] with group-like Delta, S(g) = g^-1 and the adjoint product g' * g = g g' g^-1.
StructureBialgebra group_hopf_adjoint(const GroupTable& g, const RingDescriptor& ring);

enum class NovikovExample { A1, A2 };

/// A1: e1 e2 = e2. A2: e1 e1 = e1, e2 e1 = e2. Multiplication only.
StructureBialgebra novikov_example(NovikovExample which, const RingDescriptor& ring);

}  // namespace sdalg
