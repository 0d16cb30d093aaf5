#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sdalg/constructions.hpp"

#include <random>

using namespace sdalg;

namespace {

const RingDescriptor Q = RingDescriptor::rationals();

Scalar q(long n, long d = 1) { return Scalar::rational(mpq_class(n, d)); }

// xx = a1 x + a2 y, xy = b1 x + b2 y, yx = c1 x + c2 y, yy = d1 x + d2 y
Tensor3 table2(const RingDescriptor& ring, const std::array<Scalar, 8>& c) {
  Tensor3 m(ring, 2);
  for (Index i = 0; i < 2; ++i)
    for (Index j = 0; j < 2; ++j)
      for (Index k = 0; k < 2; ++k) m(i, j, k) = c[(i * 2 + j) * 2 + k];
  return m;
}

Tensor3 table2(const RingDescriptor& ring, const std::array<long, 8>& c) {
  std::array<Scalar, 8> s{};
  for (std::size_t i = 0; i < 8; ++i) s[i] = ring.from_int(c[i]);
  return table2(ring, s);
}

Tensor3 type2_comult(const RingDescriptor& ring) {
  Tensor3 t(ring, 2);
  t(0, 0, 0) = ring.one();
  t(1, 0, 1) = ring.one();
  t(1, 1, 0) = ring.one();
  return t;
}

Tensor3 type3_comult(const RingDescriptor& ring, const Scalar& a) {
  Tensor3 t = type2_comult(ring);
  t(0, 1, 1) = a;
  return t;
}

StructureBialgebra algebra(const RingDescriptor& ring, const std::array<long, 8>& c) {
  return StructureBialgebra(ring, 2, table2(ring, c), std::nullopt);
}

StructureBialgebra grouplike2(const RingDescriptor& ring, const std::array<long, 8>& c) {
  return StructureBialgebra(ring, 2, table2(ring, c), grouplike_comult(ring, 2), Vec{ring.one(), ring.one()});
}

Vec v(std::initializer_list<long> xs) {
  Vec out;
  for (long x : xs) out.push_back(q(x));
  return out;
}

void expect_reproducible(const StructureBialgebra& a, const AxiomReport& r, const Tensor3* bar = nullptr) {
  if (r.pass || r.witness.empty()) return;
  Sides s = evaluate_axiom(a, r.axiom, r.witness, bar);
  CHECK(s.lhs != s.rhs);
  CHECK(s.lhs == r.lhs);
  CHECK(s.rhs == r.rhs);
}

Vec random_vec(std::mt19937_64& rng, const RingDescriptor& ring, std::size_t d) {
  std::uniform_int_distribution<int> coef(-5, 5);
  Vec out;
  for (std::size_t i = 0; i < d; ++i) out.push_back(ring.from_int(coef(rng)));
  return out;
}

}  // namespace

TEST_CASE("mul and comul") {
  auto t2 = rack_algebra(magmas::trivial(2), Q);
  CHECK(mul(t2, v({1, 0}), v({0, 1})) == v({1, 0}));
  CHECK(mul(t2, v({0, 0}), v({3, 4})) == v({0, 0}));
  auto r3 = rack_algebra(magmas::dihedral(3), Q);
  CHECK(mul(r3, v({1, 0, 0}), v({0, 1, 0})) == v({0, 0, 1}));

  CHECK(comul(t2, v({1, 0})) == v({1, 0, 0, 0}));
  StructureBialgebra n2(Q, 2, std::nullopt, type2_comult(Q));
  CHECK(comul(n2, v({0, 1})) == v({0, 1, 1, 0}));
  Vec s = sweedler3(t2, v({1, 0}));
  Vec expected = zero_vec(Q, 8);
  expected[0] = q(1);
  CHECK(s == expected);
}

TEST_CASE("check_coassoc") {
  for (std::size_t d = 1; d <= 4; ++d)
    CHECK(check_coassoc(StructureBialgebra(Q, d, std::nullopt, grouplike_comult(Q, d))).pass);
  CHECK(check_coassoc(StructureBialgebra(Q, 2, std::nullopt, type3_comult(Q, q(3)))).pass);
  CHECK(check_coassoc(StructureBialgebra(Q, 2, std::nullopt, type3_comult(Q, q(-7, 2)))).pass);

  // Delta x = x(x)x + x(x)y, Delta y = 0
  Tensor3 bad(Q, 2);
  bad(0, 0, 0) = q(1);
  bad(0, 0, 1) = q(1);
  StructureBialgebra b(Q, 2, std::nullopt, bad);
  auto r = check_coassoc(b);
  CHECK_FALSE(r.pass);
  CHECK(r.witness == std::vector<Index>{0});
  expect_reproducible(b, r);
}

TEST_CASE("find_counit") {
  auto g = find_counit(StructureBialgebra(Q, 2, std::nullopt, grouplike_comult(Q, 2)));
  REQUIRE(g);
  CHECK(g->counit == v({1, 1}));
  CHECK(g->unique);

  auto t2 = find_counit(StructureBialgebra(Q, 2, std::nullopt, type2_comult(Q)));
  REQUIRE(t2);
  CHECK(t2->counit == v({1, 0}));

  for (long a : {1, 2, -3, 5}) {
    auto t3 = find_counit(StructureBialgebra(Q, 2, std::nullopt, type3_comult(Q, q(a))));
    REQUIRE(t3);
    CHECK(t3->counit == v({1, 0}));
  }

  Tensor3 none(Q, 2);
  none(0, 0, 1) = q(1);
  CHECK_FALSE(find_counit(StructureBialgebra(Q, 2, std::nullopt, none)));

  // a stored counit that fails the axiom is rejected at construction
  CHECK_THROWS_AS(StructureBialgebra(Q, 2, std::nullopt, grouplike_comult(Q, 2), v({1, 0})), InvalidStructure);
}

TEST_CASE("check_compat") {
  auto t3 = StructureBialgebra(Q, 2, table2(Q, {1, 0, 0, 0, 0, -1, 0, 0}), type3_comult(Q, q(2)), v({1, 0}));
  CHECK(check_compat(t3).pass);

  auto bad = grouplike2(Q, {1, 1, 0, 0, 0, 0, 0, 0});
  auto r = check_compat(bad);
  CHECK_FALSE(r.pass);
  CHECK(r.witness == std::vector<Index>{0, 0});
  expect_reproducible(bad, r);
}

TEST_CASE("check_sd_bialgebra") {
  for (Index n = 1; n <= 4; ++n)
    for (const auto& m : enumerate_racks(n, true))
      if (check_axioms(m).q1) CHECK(check_sd_bialgebra(rack_algebra(m, Q)).pass);
  CHECK(check_sd_bialgebra(grouplike2(Q, {0, 0, 0, 0, 0, 0, 0, 0})).pass);

  FiniteMagma sum({{0, 1, 2}, {1, 2, 0}, {2, 0, 1}});
  StructureBialgebra ks(Q, 3, magma_tensor(sum, Q), grouplike_comult(Q, 3), v({1, 1, 1}));
  auto r = check_sd_bialgebra(ks);
  CHECK_FALSE(r.pass);
  REQUIRE(r.witness.size() == 3);
  // on basis elements the identity reduces to the magma identity
  Index x = r.witness[0], y = r.witness[1], z = r.witness[2];
  CHECK(sum(sum(x, y), z) != sum(sum(x, z), sum(y, z)));
  expect_reproducible(ks, r);
}

TEST_CASE("check_sd_plain and check_cube_zero") {
  auto z2 = RingDescriptor::gfp(2);
  CHECK(check_sd_plain(rack_algebra(magmas::trivial(2), z2)).pass);
  auto qt2 = rack_algebra(magmas::trivial(2), Q);
  auto plain = check_sd_plain(qt2);
  CHECK_FALSE(plain.pass);
  expect_reproducible(qt2, plain);

  auto a1 = novikov_example(NovikovExample::A1, Q);
  CHECK(check_sd_plain(a1).pass);
  CHECK(check_cube_zero(a1).pass);

  auto cube = check_cube_zero(qt2);
  CHECK_FALSE(cube.pass);
  CHECK(cube.witness == std::vector<Index>{0, 0, 0});
  CHECK(cube.lhs == v({1, 0}));
  CHECK(check_cube_zero(algebra(Q, {0, 0, 0, 0, 0, 0, 0, 0})).pass);
}

TEST_CASE("check_novikov") {
  CHECK(check_novikov(novikov_example(NovikovExample::A1, Q)).pass);
  CHECK(check_novikov(novikov_example(NovikovExample::A2, Q)).pass);
  auto r3 = rack_algebra(magmas::dihedral(3), Q);
  auto r = check_novikov(r3);
  CHECK_FALSE(r.pass);
  expect_reproducible(r3, r);
}

TEST_CASE("check_gen_idempotent") {
  CHECK(check_gen_idempotent(rack_algebra(magmas::dihedral(3), Q)).pass);
  auto sw = rack_algebra(FiniteMagma({{1, 1}, {0, 0}}), Q);
  auto r = check_gen_idempotent(sw);
  CHECK_FALSE(r.pass);
  CHECK(r.witness == std::vector<Index>{0});
  CHECK(r.lhs == v({0, 1}));

  auto aug = augmented_rack_bialgebra(magmas::trivial(1), Q);
  auto ra = check_gen_idempotent(aug);
  CHECK_FALSE(ra.pass);
  CHECK(ra.witness == std::vector<Index>{0});
  CHECK(ra.lhs == v({0, 0}));
}

TEST_CASE("check_gen_jordan") {
  CHECK(check_gen_jordan(rack_algebra(magmas::dihedral(3), Q)).pass);
  CHECK(check_gen_jordan(rack_algebra(magmas::trivial(2), Q)).pass);
  // x x = y y = 0 kills both sides for a in {x, y}
  CHECK(check_gen_jordan(grouplike2(Q, {0, 0, 0, 1, 0, 0, 0, 0})).pass);
  for (Index n = 1; n <= 4; ++n)
    for (const auto& m : enumerate_racks(n, false))
      if (check_axioms(m).q1) CHECK(check_gen_jordan(rack_algebra(m, Q)).pass);
}

TEST_CASE("check_linear_rack") {
  auto r3 = magmas::dihedral(3);
  auto rep = check_linear_rack(rack_algebra(r3, Q), rack_barstar(r3, Q));
  CHECK(rep.label == MagmaClass::quandle);

  FiniteMagma constant({{0, 0}, {0, 0}});
  StructureBialgebra kc(Q, 2, magma_tensor(constant, Q), grouplike_comult(Q, 2), v({1, 1}));
  auto shelf = check_linear_rack(kc, std::nullopt);
  CHECK(shelf.label == MagmaClass::shelf);
  CHECK_FALSE(shelf.inverse.pass);

  CHECK_THROWS_AS(check_linear_rack(novikov_example(NovikovExample::A1, Q), std::nullopt), MissingStructure);
}

TEST_CASE("every small rack algebra is a counital SD bialgebra") {
  for (Index n = 1; n <= 4; ++n)
    for (const auto& m : enumerate_racks(n, false)) {
      auto a = rack_algebra(m, Q);
      CHECK(check_coassoc(a).pass);
      CHECK(check_compat(a).pass);
      CHECK(check_sd_bialgebra(a).pass);
      StructureBialgebra bare(Q, n, a.mult(), a.comult());
      auto eps = find_counit(bare);
      REQUIRE(eps);
      CHECK(eps->counit == Vec(n, q(1)));
    }
}

TEST_CASE("plain self-distributivity agrees with random element triples") {
  std::mt19937_64 rng(20240611);
  std::vector<StructureBialgebra> samples = {
      novikov_example(NovikovExample::A1, Q),
      novikov_example(NovikovExample::A2, Q),
      novikov_example(NovikovExample::A2, RingDescriptor::gfp(2)),
      rack_algebra(magmas::trivial(2), Q),
      rack_algebra(magmas::trivial(3), RingDescriptor::gfp(2)),
      rack_algebra(magmas::dihedral(3), RingDescriptor::gfp(3)),
      algebra(Q, {0, 0, 0, 0, 0, 0, 0, 0}),
  };
  std::uniform_int_distribution<int> c(-1, 1);
  for (int i = 0; i < 40; ++i) {
    std::array<long, 8> t{};
    for (auto& x : t) x = c(rng);
    samples.push_back(algebra(Q, t));
  }
  int passing = 0;
  for (const auto& a : samples) {
    bool verdict = check_sd_plain(a).pass;
    passing += verdict;
    bool all_agree = true;
    for (int k = 0; k < 200; ++k) {
      Vec x = random_vec(rng, a.ring(), a.dim()), y = random_vec(rng, a.ring(), a.dim()),
          z = random_vec(rng, a.ring(), a.dim());
      if (mul(a, mul(a, x, y), z) != mul(a, mul(a, x, z), mul(a, y, z))) all_agree = false;
    }
    CHECK(verdict == all_agree);
  }
  CHECK(passing >= 4);
}

TEST_CASE("plain SD implies cube zero outside characteristic 2") {
  std::array<long, 8> t{};
  int sd = 0;
  for (int code = 0; code < 6561; ++code) {
    int c = code;
    for (auto& x : t) {
      x = c % 3 - 1;
      c /= 3;
    }
    auto a = algebra(Q, t);
    if (!check_sd_plain(a).pass) continue;
    ++sd;
    CHECK(check_cube_zero(a).pass);
  }
  CHECK(sd > 1);
  CHECK(check_sd_plain(rack_algebra(magmas::trivial(3), RingDescriptor::gfp(2))).pass);
  CHECK_FALSE(check_cube_zero(rack_algebra(magmas::trivial(3), RingDescriptor::gfp(2))).pass);
}

TEST_CASE("dual comultiplications of the 2-dim unital algebras") {
  // e1 = index 0, e2 = index 1
  auto alg1 = algebra(Q, {1, 0, 0, 1, 0, 1, 1, 0});
  auto alg2 = algebra(Q, {1, 0, 0, 1, 0, 1, 0, 0});
  auto d1 = dualize(alg1), d2 = dualize(alg2);
  CHECK(comul(d1, v({1, 0})) == v({1, 0, 0, 1}));
  CHECK(comul(d1, v({0, 1})) == v({0, 1, 1, 0}));
  CHECK(comul(d2, v({1, 0})) == v({1, 0, 0, 0}));
  CHECK(comul(d2, v({0, 1})) == v({0, 1, 1, 0}));
  for (long a : {2, -1, 3}) {
    auto alg3 = algebra(Q, {1, 0, 0, 1, 0, 1, a, 0});
    auto d3 = dualize(alg3);
    CHECK(comul(d3, v({1, 0})) == Vec{q(1), q(0), q(0), q(a)});
    CHECK(comul(d3, v({0, 1})) == v({0, 1, 1, 0}));
    CHECK(check_coassoc(d3).pass);
    CHECK(dualize(d3).mult() == alg3.mult());
  }
  CHECK(check_coassoc(d1).pass);
  CHECK(check_coassoc(d2).pass);
  CHECK_FALSE(d1.has_mult());
}

TEST_CASE("dualize twice is the identity") {
  auto r3 = rack_algebra(magmas::dihedral(3), Q);
  auto back = dualize(dualize(r3));
  CHECK(back.mult() == r3.mult());
  CHECK(back.comult() == r3.comult());
  auto a2 = novikov_example(NovikovExample::A2, Q);
  CHECK(dualize(dualize(a2)).mult() == a2.mult());
}

TEST_CASE("change_basis") {
  StructureBialgebra t1(Q, 2, std::nullopt, dualize(algebra(Q, {1, 0, 0, 1, 0, 1, 1, 0})).comult());
  Matrix p = Matrix::from_rows({v({1, 1}), v({1, -1})});
  CHECK(change_basis(t1, p).comult() == grouplike_comult(Q, 2));

  auto r3 = rack_algebra(magmas::dihedral(3), Q);
  CHECK(change_basis(r3, Matrix::identity(Q, 3)) == r3);

  // e1' = (e1 + e2)/2, e2' = (e1 - e2)/2
  auto alg1 = algebra(Q, {1, 0, 0, 1, 0, 1, 1, 0});
  Matrix half = Matrix::from_rows({{q(1, 2), q(1, 2)}, {q(1, 2), q(-1, 2)}});
  CHECK(change_basis(alg1, half).mult() == table2(Q, {1, 0, 0, 0, 0, 0, 0, 1}));

  CHECK_THROWS_AS(change_basis(alg1, Matrix::from_rows({v({1, 1}), v({2, 2})})), SingularMatrix);
}

TEST_CASE("change_basis preserves verdicts") {
  auto suite = [](const StructureBialgebra& a) {
    std::vector<int> out;
    for (const auto& name : known_axioms()) {
      try {
        out.push_back(run_axiom(a, name).pass ? 1 : 0);
      } catch (const MissingStructure&) {
        out.push_back(-1);
      }
    }
    return out;
  };
  struct Sample {
    StructureBialgebra a;
    Matrix p;
  };
  std::vector<Sample> samples = {
      {rack_algebra(magmas::dihedral(3), Q), Matrix::from_rows({v({1, 2, 0}), v({0, 1, 1}), v({1, 0, 1})})},
      {StructureBialgebra(Q, 2, table2(Q, {1, 0, 0, 0, 0, -1, 0, 0}), type3_comult(Q, q(2)), v({1, 0})),
       Matrix::from_rows({v({1, 1}), v({0, 1})})},
      {augmented_rack_bialgebra(magmas::trivial(1), Q), Matrix::from_rows({v({1, 0}), v({1, 1})})},
      {novikov_example(NovikovExample::A1, Q), Matrix::from_rows({v({2, 1}), v({1, 1})})},
      {StructureBialgebra(Q, 2, table2(Q, {1, 0, 0, 1, 0, 0, 0, 0}), type2_comult(Q), v({1, 0})),
       Matrix::from_rows({v({1, 0}), v({3, 1})})},
  };
  for (const auto& s : samples) {
    auto before = suite(s.a);
    auto after = suite(change_basis(s.a, s.p));
    CHECK(before == after);
    // and back again
    CHECK(change_basis(change_basis(s.a, s.p), inverse(s.p)) == s.a);
  }
}

TEST_CASE("witnesses are reproducible") {
  std::vector<StructureBialgebra> all = {
      rack_algebra(magmas::trivial(2), Q),
      rack_algebra(magmas::dihedral(3), Q),
      rack_algebra(FiniteMagma({{1, 1}, {0, 0}}), Q),
      augmented_rack_bialgebra(magmas::dihedral(3), Q),
      grouplike2(Q, {1, 1, 0, 0, 0, 0, 0, 0}),
      StructureBialgebra(Q, 2, table2(Q, {0, 0, 0, 1, 0, 0, 0, 0}), type2_comult(Q), v({1, 0})),
  };
  for (const auto& a : all)
    for (const auto& name : known_axioms()) expect_reproducible(a, run_axiom(a, name));
}

TEST_CASE("structure validation") {
  CHECK_THROWS_AS(StructureBialgebra(Q, 2, std::nullopt, std::nullopt), InvalidStructure);
  CHECK_THROWS_AS(StructureBialgebra(Q, 2, Tensor3(Q, 3), std::nullopt), InvalidStructure);
  CHECK_THROWS_AS(StructureBialgebra(Q, 2, Tensor3(RingDescriptor::gfp(3), 2), std::nullopt), InvalidStructure);
  // index 0 of type 2 is group-like, index 1 is not
  CHECK_NOTHROW(StructureBialgebra(Q, 2, std::nullopt, type2_comult(Q), v({1, 0}), Index{0}));
  CHECK_THROWS_AS(StructureBialgebra(Q, 2, std::nullopt, type2_comult(Q), v({1, 0}), Index{1}), InvalidStructure);
  CHECK_THROWS_AS(novikov_example(NovikovExample::A1, Q).comult(), MissingStructure);
  CHECK_THROWS(run_axiom(rack_algebra(magmas::trivial(2), Q), "nonsense"));
}
