#include "sdalg/io.hpp"

#include <fstream>
#include <sstream>

namespace sdalg::io {

namespace {

std::string at(const std::string& where, std::size_t i) { return where + "[" + std::to_string(i) + "]"; }

const json& field(const json& j, const char* key, const std::string& where) {
  if (!j.is_object()) throw ParseError(where + ": expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(where + ": missing field \"" + key + "\"");
  return *it;
}

std::int64_t integer(const json& j, const std::string& where) {
  if (!j.is_number_integer()) throw ParseError(where + ": expected an integer");
  return j.get<std::int64_t>();
}

std::size_t size_value(const json& j, const std::string& where) {
  std::int64_t n = integer(j, where);
  if (n < 0) throw ParseError(where + ": expected a nonnegative integer");
  return static_cast<std::size_t>(n);
}

const json& array(const json& j, std::size_t n, const std::string& where) {
  if (!j.is_array() || j.size() != n)
    throw ParseError(where + ": expected an array of length " + std::to_string(n));
  return j;
}

mpq_class rational(const json& j, const std::string& where) {
  if (j.is_number_integer()) return mpq_class(mpz_class(std::to_string(j.get<std::int64_t>())));
  if (!j.is_string()) throw ParseError(where + ": expected a rational string such as \"-3/4\"");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const std::exception& e) {
    throw ParseError(where + ": " + e.what());
  }
}

}  // namespace

json to_json(const RingDescriptor& ring) {
  switch (ring.kind) {
    case RingKind::rational:
      return {{"kind", "rational"}};
    case RingKind::gfp:
      return {{"kind", "gfp"}, {"p", ring.p}};
    case RingKind::quad:
      return {{"kind", "quad"}, {"d", ring.d}};
  }
  return {};
}

RingDescriptor ring_from_json(const json& j, const std::string& where) {
  const json& kind = field(j, "kind", where);
  if (!kind.is_string()) throw ParseError(where + ".kind: expected a string");
  const std::string k = kind.get<std::string>();
  try {
    if (k == "rational") return RingDescriptor::rationals();
    if (k == "gfp") return RingDescriptor::gfp(integer(field(j, "p", where), where + ".p"));
    if (k == "quad") return RingDescriptor::quad(integer(field(j, "d", where), where + ".d"));
  } catch (const ParseError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw ParseError(where + ": " + e.what());
  }
  throw ParseError(where + ".kind: unknown ring kind \"" + k + "\"");
}

json to_json(const Scalar& s) {
  if (s.ring().kind == RingKind::quad) return json::array({s.u().get_str(), s.v().get_str()});
  return s.u().get_str();
}

Scalar scalar_from_json(const json& j, const RingDescriptor& ring, const std::string& where) {
  mpq_class u, v = 0;
  if (j.is_array()) {
    array(j, 2, where);
    u = rational(j[0], where + "[0]");
    v = rational(j[1], where + "[1]");
  } else {
    u = rational(j, where);
  }
  try {
    if (ring.kind == RingKind::quad) return Scalar::quad(ring, u, v);
    if (v != 0) throw ParseError(where + ": a sqrt coefficient needs a quad ring, not " + ring.to_string());
    return ring.from_rational(u);
  } catch (const DivisionByZero& e) {
    throw ParseError(where + ": " + e.what());
  }
}

json to_json(const Vec& v) {
  json out = json::array();
  for (const auto& s : v) out.push_back(to_json(s));
  return out;
}

Vec vec_from_json(const json& j, const RingDescriptor& ring, std::size_t n, const std::string& where) {
  array(j, n, where);
  Vec out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(scalar_from_json(j[i], ring, at(where, i)));
  return out;
}

json to_json(const Matrix& m) {
  json out = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(to_json(m.row(r)));
  return out;
}

Matrix matrix_from_json(const json& j, const RingDescriptor& ring, const std::string& where) {
  if (!j.is_array() || j.empty()) throw ParseError(where + ": expected a nonempty array of rows");
  if (!j[0].is_array()) throw ParseError(at(where, 0) + ": expected an array");
  const std::size_t cols = j[0].size();
  std::vector<Vec> rows;
  for (std::size_t r = 0; r < j.size(); ++r) rows.push_back(vec_from_json(j[r], ring, cols, at(where, r)));
  return Matrix::from_rows(rows);
}

json to_json(const FiniteMagma& m) { return {{"size", m.size()}, {"table", m.table()}}; }

FiniteMagma magma_from_json(const json& j) {
  const std::size_t n = size_value(field(j, "size", "magma"), "size");
  if (n == 0) throw ParseError("size: must be positive");
  const json& t = array(field(j, "table", "magma"), n, "table");
  std::vector<std::vector<Index>> table(n);
  for (std::size_t x = 0; x < n; ++x) {
    array(t[x], n, at("table", x));
    for (std::size_t y = 0; y < n; ++y) {
      std::string w = at(at("table", x), y);
      std::size_t v = size_value(t[x][y], w);
      if (v >= n) throw ParseError(w + ": entry " + std::to_string(v) + " out of range");
      table[x].push_back(v);
    }
  }
  return FiniteMagma(std::move(table));
}

json to_json(const Tensor3& t) {
  json out = json::array();
  for (Index i = 0; i < t.dim(); ++i) {
    json row = json::array();
    for (Index j = 0; j < t.dim(); ++j) row.push_back(to_json(t.fiber(i, j)));
    out.push_back(std::move(row));
  }
  return out;
}

Tensor3 tensor_from_json(const json& j, const RingDescriptor& ring, std::size_t dim, const std::string& where) {
  Tensor3 t(ring, dim);
  array(j, dim, where);
  for (Index i = 0; i < dim; ++i) {
    array(j[i], dim, at(where, i));
    for (Index k = 0; k < dim; ++k) {
      Vec v = vec_from_json(j[i][k], ring, dim, at(at(where, i), k));
      for (Index l = 0; l < dim; ++l) t(i, k, l) = v[l];
    }
  }
  return t;
}

json to_json(const StructureBialgebra& a, const std::optional<Tensor3>& barstar) {
  json out = {{"ring", to_json(a.ring())}, {"dim", a.dim()}};
  if (a.has_mult()) out["mult"] = to_json(a.mult());
  if (a.has_comult()) out["comult"] = to_json(a.comult());
  if (a.counit()) out["counit"] = to_json(*a.counit());
  if (a.unit_index()) out["unit_index"] = *a.unit_index();
  if (barstar) out["barstar"] = to_json(*barstar);
  return out;
}

BialgebraFile bialgebra_from_json(const json& j, const std::optional<RingDescriptor>& ring_override) {
  RingDescriptor ring = ring_override ? *ring_override : ring_from_json(field(j, "ring", "bialgebra"));
  const std::size_t d = size_value(field(j, "dim", "bialgebra"), "dim");
  if (d == 0) throw ParseError("dim: must be positive");
  auto optional_tensor = [&](const char* key) -> std::optional<Tensor3> {
    if (!j.contains(key)) return std::nullopt;
    return tensor_from_json(j[key], ring, d, key);
  };
  std::optional<Tensor3> mult = optional_tensor("mult"), comult = optional_tensor("comult");
  std::optional<Tensor3> barstar = optional_tensor("barstar");
  std::optional<Vec> counit;
  if (j.contains("counit")) counit = vec_from_json(j["counit"], ring, d, "counit");
  std::optional<Index> unit;
  if (j.contains("unit_index")) {
    unit = size_value(j["unit_index"], "unit_index");
    if (*unit >= d) throw ParseError("unit_index: out of range");
  }
  if (!mult && !comult) throw ParseError("bialgebra: needs \"mult\" or \"comult\"");
  try {
    return {StructureBialgebra(ring, d, std::move(mult), std::move(comult), std::move(counit), unit),
            std::move(barstar)};
  } catch (const InvalidStructure& e) {
    throw ParseError(std::string("bialgebra: ") + e.what());
  }
}

json to_json(const AxiomReport& r) {
  json out = {{"axiom", r.axiom}, {"pass", r.pass}};
  if (!r.pass) {
    out["witness"] = r.witness;
    out["lhs"] = to_json(r.lhs);
    out["rhs"] = to_json(r.rhs);
  }
  if (!r.detail.empty()) out["detail"] = r.detail;
  return out;
}

json to_json(const MultTable2& t) {
  static const char* names[] = {"a1", "a2", "b1", "b2", "c1", "c2", "d1", "d2"};
  json coeffs = json::object();
  for (std::size_t i = 0; i < 8; ++i) coeffs[names[i]] = to_json(t.c[i]);
  return {{"ring", to_json(t.ring())}, {"coefficients", coeffs}, {"law", t.to_string()}};
}

json read_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path.string() + ": cannot open file");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

void write_json(const std::filesystem::path& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw ParseError(path.string() + ": cannot write file");
  out << dump(j);
}

}  // namespace sdalg::io
