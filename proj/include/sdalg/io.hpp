#pragma once

// JSON serialization of rings, scalars, magmas, bialgebras and
// classification records.
//
//   ring:      {"kind":"rational"} | {"kind":"gfp","p":2} | {"kind":"quad","d":2}
//   scalar:    "num/den" string (integers may omit "/1", GF(p) residues are
//              integers), quad values as ["u","v"]
//   magma:     {"size": n, "table": [[...], ...]}, 0-based
//   bialgebra: {"ring", "dim", "mult"?, "comult"?, "counit"?, "unit_index"?,
//               "barstar"?} with mult[i][j][k] = m_ij^k, comult[i][j][k] = mu_i^jk

#include "sdalg/bialg.hpp"
#include "sdalg/classify.hpp"

#include <json.hpp>

#include <filesystem>
#include <optional>
#include <stdexcept>

namespace sdalg::io {

using nlohmann::json;

/// Malformed input. The message names the offending field, e.g.
/// "mult[0][1]: expected an array of length 2".
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

json to_json(const RingDescriptor& ring);
RingDescriptor ring_from_json(const json& j, const std::string& where = "ring");

json to_json(const Scalar& s);
/// Coefficients are read as rationals (or quad pairs) and mapped into `ring`.
Scalar scalar_from_json(const json& j, const RingDescriptor& ring, const std::string& where);

json to_json(const Vec& v);
Vec vec_from_json(const json& j, const RingDescriptor& ring, std::size_t n, const std::string& where);

json to_json(const Matrix& m);
Matrix matrix_from_json(const json& j, const RingDescriptor& ring, const std::string& where);

json to_json(const FiniteMagma& m);
FiniteMagma magma_from_json(const json& j);

json to_json(const Tensor3& t);
Tensor3 tensor_from_json(const json& j, const RingDescriptor& ring, std::size_t dim, const std::string& where);

/// A bialgebra file: the structure plus an optional second operation.
struct BialgebraFile {
  StructureBialgebra structure;
  std::optional<Tensor3> barstar;
};

json to_json(const StructureBialgebra& a, const std::optional<Tensor3>& barstar = std::nullopt);
/// `ring_override` reinterprets every coefficient in another ring.
BialgebraFile bialgebra_from_json(const json& j, const std::optional<RingDescriptor>& ring_override = std::nullopt);

json to_json(const AxiomReport& r);
json to_json(const MultTable2& t);

/// Reads and parses a JSON file; ParseError carries the path and position.
json read_json(const std::filesystem::path& path);
/// Pretty-printed with a trailing newline.
void write_json(const std::filesystem::path& path, const json& j);
std::string dump(const json& j);

}  // namespace sdalg::io
