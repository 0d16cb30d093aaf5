#include "sdalg/classify.hpp"
#include "sdalg/cli.hpp"
#include "sdalg/constructions.hpp"
#include "sdalg/io.hpp"
#include "sdalg/ybe.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace sdalg;

namespace {

std::optional<RingDescriptor> parse_ring(const std::optional<std::string>& ring) {
  if (!ring) return std::nullopt;
  return io::ring_from_json(io::json::parse(*ring));
}

py::dict magma_report(const std::vector<std::vector<Index>>& table) {
  FiniteMagma m(table);
  MagmaReport r = check_axioms(m);
  py::dict out;
  out["q1"] = r.q1;
  out["q2"] = r.q2;
  out["q3"] = r.q3;
  out["label"] = to_string(r.label);
  auto unit = unit_check(m);
  out["unit"] = unit ? py::cast(*unit) : py::none();
  return out;
}

std::vector<std::vector<std::vector<Index>>> racks(Index n, bool up_to_isomorphism) {
  std::vector<std::vector<std::vector<Index>>> out;
  for (const auto& m : enumerate_racks(n, up_to_isomorphism)) out.push_back(m.table());
  return out;
}

std::string check_bialgebra(const std::string& text, const std::vector<std::string>& axioms,
                            const std::optional<std::string>& ring) {
  auto file = io::bialgebra_from_json(io::json::parse(text), parse_ring(ring));
  std::vector<std::string> names = axioms.empty() ? known_axioms() : axioms;
  io::json rows = io::json::array();
  for (const auto& n : names) {
    try {
      rows.push_back(io::to_json(run_axiom(file.structure, n)));
    } catch (const MissingStructure& e) {
      if (!axioms.empty()) throw;
      rows.push_back({{"axiom", n}, {"skipped", e.what()}});
    }
  }
  return rows.dump();
}

py::dict ybe(const std::string& text, bool force) {
  auto file = io::bialgebra_from_json(io::json::parse(text));
  TensorOperator r = build_R(file.structure, force);
  py::dict out;
  out["braid"] = check_braid(r).pass;
  if (file.barstar) out["inverse"] = check_inverse(r, build_Rinv(file.structure, *file.barstar)).pass;
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact checks for self-distributive algebras, bialgebras and Yang-Baxter operators";

  py::register_exception<io::ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<EnumerationIncomplete>(m, "EnumerationIncomplete", PyExc_RuntimeError);

  m.def("check_magma", &magma_report, py::arg("table"));
  m.def("enumerate_racks", &racks, py::arg("n"), py::arg("up_to_isomorphism") = false);
  m.def("known_axioms", &known_axioms);
  m.def("check_bialgebra", &check_bialgebra, py::arg("structure"), py::arg("axioms") = std::vector<std::string>{},
        py::arg("ring") = std::nullopt, "JSON list of axiom reports for a bialgebra file given as JSON text");
  m.def("ybe", &ybe, py::arg("structure"), py::arg("force") = false);
  m.def(
      "run",
      [](const std::vector<std::string>& args) {
        std::vector<const char*> argv{"sdalg"};
        for (const auto& a : args) argv.push_back(a.c_str());
        auto parsed = cli::parse_args(static_cast<int>(argv.size()), argv.data());
        auto r = parsed.config ? cli::run(*parsed.config) : parsed.early;
        return py::make_tuple(r.exit_code, r.out, r.err);
      },
      py::arg("args"), "Runs a command-line invocation; returns (exit_code, stdout, stderr).");
}
