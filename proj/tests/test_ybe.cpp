#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sdalg/constructions.hpp"
#include "sdalg/ybe.hpp"

#include <chrono>

using namespace sdalg;

namespace {

const RingDescriptor Q = RingDescriptor::rationals();

Vec tensor(std::size_t d, Index j, Index k) { return unit_vec(Q, d * d, j * d + k); }

}  // namespace

TEST_CASE("R on rack algebras") {
  auto t2 = rack_algebra(magmas::trivial(2), Q);
  auto r = build_R(t2);
  for (Index a = 0; a < 2; ++a)
    for (Index b = 0; b < 2; ++b) CHECK(r.m.apply(tensor(2, a, b)) == tensor(2, b, a));

  auto r3 = rack_algebra(magmas::dihedral(3), Q);
  auto rr = build_R(r3);
  CHECK(rr.m.apply(tensor(3, 0, 1)) == tensor(3, 1, 2));
}

TEST_CASE("R on the abelian Leibniz rack is the flip on L") {
  auto n = leibniz_rack(lie::abelian(2, Q));
  auto r = build_R(n.star);
  for (Index x = 1; x < 3; ++x)
    for (Index y = 1; y < 3; ++y) CHECK(r.m.apply(tensor(3, x, y)) == tensor(3, y, x));
}

TEST_CASE("check_braid") {
  CHECK(check_braid(build_R(rack_algebra(magmas::trivial(2), Q))).pass);
  CHECK(check_braid(build_R(rack_algebra(magmas::dihedral(3), Q))).pass);

  // rank-1 map sending every basis tensor to e0 (x) e1
  Matrix p(Q, 4, 4);
  for (Index c = 0; c < 4; ++c) p(1, c) = Q.one();
  auto rep = check_braid({2, p});
  CHECK_FALSE(rep.pass);
  REQUIRE(rep.witness.size() == 3);
  Matrix id = Matrix::identity(Q, 2);
  Matrix r12 = kron(p, id), r23 = kron(id, p);
  Index col = (rep.witness[0] * 2 + rep.witness[1]) * 2 + rep.witness[2];
  CHECK((r12 * r23 * r12).column(col) == rep.lhs);
  CHECK((r23 * r12 * r23).column(col) == rep.rhs);
  CHECK(rep.lhs != rep.rhs);
}

TEST_CASE("inverse operator") {
  auto t2 = magmas::trivial(2);
  auto kt = rack_algebra(t2, Q);
  auto rinv = build_Rinv(kt, rack_barstar(t2, Q));
  CHECK(rinv.m == build_R(kt).m);
  CHECK(check_inverse(build_R(kt), rinv).pass);

  auto r3 = magmas::dihedral(3);
  auto kr = rack_algebra(r3, Q);
  CHECK(check_inverse(build_R(kr), build_Rinv(kr, rack_barstar(r3, Q))).pass);

  auto l = leibniz_rack(lie::solvable2(Q));
  auto rl = build_R(l.star);
  CHECK(check_braid(rl).pass);
  CHECK(check_inverse(rl, build_Rinv(l.star, l.barstar)).pass);

  // the wrong second operation is caught
  auto bad = check_inverse(rl, build_Rinv(l.star, l.star.mult()));
  CHECK_FALSE(bad.pass);
}

TEST_CASE("cocommutativity precondition") {
  // dual of upper triangular 2x2 matrices on E11, E12, E22:
  // Delta f12 = f11 (x) f12 + f12 (x) f22
  Tensor3 upper(Q, 3);
  upper(0, 0, 0) = Q.one();
  upper(0, 1, 1) = Q.one();
  upper(1, 2, 1) = Q.one();
  upper(2, 2, 2) = Q.one();
  auto dual = dualize(StructureBialgebra(Q, 3, upper, std::nullopt));
  StructureBialgebra a(Q, 3, Tensor3(Q, 3), dual.comult(), Vec{Q.one(), Q.zero(), Q.one()});
  CHECK_FALSE(check_cocommutative(a).pass);
  CHECK_THROWS_AS(build_R(a), PreconditionFailed);
  CHECK(build_R(a, true).m.rows() == 9);
  CHECK_THROWS_AS(build_R(StructureBialgebra(Q, 3, std::nullopt, dual.comult())), PreconditionFailed);
}

TEST_CASE("braid relation and invertibility for every rack up to size 5") {
  auto start = std::chrono::steady_clock::now();
  for (Index n = 1; n <= 5; ++n) {
    auto racks = enumerate_racks(n, true);
    for (const auto& x : racks) {
      auto kx = rack_algebra(x, Q);
      auto r = build_R(kx);
      CHECK(check_braid(r).pass);
      CHECK(check_inverse(r, build_Rinv(kx, rack_barstar(x, Q))).pass);
      auto set_map = induced_set_map(r);
      REQUIRE(set_map);
      for (Index a = 0; a < n; ++a)
        for (Index b = 0; b < n; ++b) CHECK((*set_map)[a * n + b] == std::make_pair(b, x(a, b)));
      CHECK(check_set_braid(x));
    }
    if (n == 5) CHECK(racks.size() == 74);
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  MESSAGE("racks up to size 5 checked in " << secs << " s");
}

TEST_CASE("set braid relation fails without self-distributivity") {
  CHECK_FALSE(check_set_braid(FiniteMagma({{0, 1, 2}, {1, 2, 0}, {2, 0, 1}})));
}
