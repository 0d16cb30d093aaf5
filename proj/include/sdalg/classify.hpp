#pragma once

// Two-dimensional self-distributive bialgebras for the three counital
// comultiplications on the basis {x, y}:
//   type 1: Delta x = x (x) x, Delta y = y (x) y, eps = (1, 1)
//   type 2: Delta x = x (x) x, Delta y = x (x) y + y (x) x, eps = (1, 0)
//   type 3: Delta x = x (x) x + a y (x) y, Delta y = x (x) y + y (x) x, eps = (1, 0)

#include "sdalg/bialg.hpp"
#include "sdalg/poly.hpp"

#include <array>
#include <stdexcept>

namespace sdalg {

class EnumerationIncomplete : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// xx = a1 x + a2 y, xy = b1 x + b2 y, yx = c1 x + c2 y, yy = d1 x + d2 y,
/// stored in that order.
struct MultTable2 {
  std::array<Scalar, 8> c;

  static MultTable2 from_ints(const RingDescriptor& ring, const std::array<long, 8>& v);
  static MultTable2 from_tensor(const Tensor3& m);
  const RingDescriptor& ring() const { return c[0].ring(); }
  Tensor3 tensor() const;
  /// "x^2 = x, xy = y, yx = 0, y^2 = 0"
  std::string to_string() const;

  friend bool operator==(const MultTable2&, const MultTable2&) = default;
};

/// Lexicographic order on the coefficient tuple.
bool table_less(const MultTable2& a, const MultTable2& b);

enum class ComultKind { type1, type2, type3 };

struct ComultType {
  ComultKind kind;
  std::optional<Scalar> a;  // type 3 only

  static ComultType type1() { return {ComultKind::type1, std::nullopt}; }
  static ComultType type2() { return {ComultKind::type2, std::nullopt}; }
  /// Throws std::invalid_argument for a = 0.
  static ComultType type3(const Scalar& a);

  Tensor3 comult(const RingDescriptor& ring) const;
  Vec counit(const RingDescriptor& ring) const;
  std::string name() const;
};

StructureBialgebra make_bialgebra(const MultTable2& t, const ComultType& type);

/// coassoc, counit, compat and sd_bialgebra from the independent checkers.
struct Verification {
  std::vector<AxiomReport> reports;
  bool pass() const;
};
Verification verify_table(const MultTable2& t, const ComultType& type);

enum class Symmetry { swap, scale };
std::string to_string(Symmetry s);

/// x <-> y.
MultTable2 swap_xy(const MultTable2& t);
/// y -> lambda y.
MultTable2 scale_y(const MultTable2& t, const Scalar& lambda);
/// swap: the smaller of t and swap_xy(t). scale: the first nonzero of
/// (d2, b1, c1, a2) normalised to 1; tables where none of these is nonzero
/// are returned unchanged.
MultTable2 canonicalize(const MultTable2& t, Symmetry sym);

// Symbolic layer: unknowns a1..d2 are variables 0..7, the type-3 parameter is 8.
namespace unknowns {
inline constexpr std::size_t a1 = 0, a2 = 1, b1 = 2, b2 = 3, c1 = 4, c2 = 5, d1 = 6, d2 = 7, a = 8;
inline constexpr std::size_t count = 9;
const std::vector<std::string>& names();
Poly var(std::size_t v);
Poly constant(const mpq_class& c);
}  // namespace unknowns

/// lhs = rhs, both polynomials in the unknowns.
struct Equation {
  std::string label;
  Poly lhs;
  Poly rhs;
  Poly residual() const { return lhs - rhs; }
  bool holds_at(const std::vector<Scalar>& point, const RingDescriptor& ring) const;
};

/// Coefficient equations of Delta(uv) = Delta(u) Delta(v) on basis pairs,
/// expanded symbolically. Type 3 keeps a as variable 8.
std::vector<Equation> compat_equations(ComultKind kind);
/// Coefficient equations of (uv)w = (u w1)(v w2) on basis triples.
std::vector<Equation> sd_equations(ComultKind kind);
/// Reference transcription of the four type-3 compatibility systems (three
/// equations per product xx, yy, xy, yx), kept verbatim so that it can be
/// compared against compat_equations(type3).
std::vector<Equation> type3_printed_systems();

/// One solution component: values[i] is a polynomial in the free unknowns,
/// subject to every polynomial in `nonzero` being nonzero.
struct Component {
  std::array<Poly, 8> values;
  std::vector<std::size_t> free;
  std::vector<Poly> nonzero;

  bool is_point() const { return free.empty(); }
  /// Instantiates free unknowns (in order of `free`).
  MultTable2 at(const RingDescriptor& ring, const std::vector<mpq_class>& params) const;
  std::string to_string() const;
  friend bool operator==(const Component&, const Component&) = default;
};

/// Triangular reduction of a polynomial system in the unknowns a1..d2:
/// case splits on rational roots of univariate equations and on common
/// variable factors, substitution of variables that occur linearly with a
/// constant coefficient. Throws EnumerationIncomplete when no rule applies or
/// a univariate equation has non-rational roots.
std::vector<Component> reduce_system(const std::vector<Poly>& equations);

struct CompatDomain {
  ComultType type;
  std::vector<Component> components;   // solutions of the compat equations
  std::vector<MultTable2> candidates;  // when finite
  std::vector<Equation> systems;       // type 3: the printed systems
};
CompatDomain compat_domain(const ComultType& type);

struct ClassificationResult {
  ComultType type;
  Symmetry symmetry;
  std::vector<MultTable2> solutions;        // isolated solutions, sorted
  std::vector<MultTable2> representatives;  // canonical forms, sorted, distinct
  std::vector<Verification> verification;   // per solution
  std::vector<Component> families;          // positive-dimensional components
  std::vector<std::pair<MultTable2, Verification>> family_samples;
  std::size_t candidates_scanned = 0;
};

ClassificationResult enumerate_type1();
ClassificationResult enumerate_type2();

/// The 13 and 4 tables that a complete classification is compared against.
std::vector<MultTable2> expected_type1_tables();
std::vector<MultTable2> expected_type2_tables();

struct Type3Entry {
  int entry;               // 1..6
  std::string convention;  // "printed" or "flipped" (sign of the y^2 term)
  MultTable2 table;
  Verification checks;
  std::vector<bool> printed_systems;  // per equation of type3_printed_systems()
  std::vector<bool> derived_systems;  // per equation of compat_equations(type3)
  bool all_printed() const;
  bool all_derived() const;
};

struct Type3Result {
  mpq_class a;
  RingDescriptor ring;
  Scalar sqrt_a;
  std::vector<Type3Entry> entries;
};

/// Works over Q when a is a rational square, otherwise over Q(sqrt(s)) with
/// a = r^2 s. Throws std::invalid_argument for a = 0.
Type3Result verify_type3(const mpq_class& a);

}  // namespace sdalg
