// Python bindings. Rationals cross the boundary as "p/q" strings (or ints),
// which the Python side maps to fractions.Fraction.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gstruct/cli.hpp"
#include "gstruct/errors.hpp"
#include "gstruct/prolong.hpp"
#include "gstruct/structures.hpp"

namespace py = pybind11;
using namespace gstruct;

namespace {

using StrMatrix = std::vector<std::vector<std::string>>;

RatMatrix to_matrix(const StrMatrix& rows) {
  std::size_t cols = rows.empty() ? 0 : rows.front().size();
  RatMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw InvalidArgument("ragged matrix");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = parse_rational(rows[i][j]);
  }
  return m;
}

std::vector<std::string> to_strings(const RatVector& v) {
  std::vector<std::string> out;
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

LieSubalgebra algebra(const std::string& name, std::size_t n, std::size_t q) {
  AlgebraSpec spec;
  spec.name = name;
  spec.n = n;
  spec.q = q;
  return builtin_algebra(spec);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact computations with jet groups, prolongations and G-structures";

  py::register_exception<InvalidArgument>(m, "SchemaError", PyExc_ValueError);
  py::register_exception<DomainError>(m, "PreconditionError", PyExc_ArithmeticError);

  m.def("command_names", &cli::command_names);

  m.def(
      "run_json",
      [](const std::string& command, const std::string& payload, double tolerance, std::size_t k_max,
         std::uint64_t seed) {
        cli::CommandOptions opts{tolerance, k_max, seed};
        cli::CommandResult r;
        try {
          r = cli::run(command, cli::json::parse(payload), opts);
        } catch (const cli::json::parse_error& e) {
          r.status = cli::Status::Error;
          r.code = "schema";
          r.diagnostics.push_back(e.what());
        }
        return py::make_tuple(r.to_json().dump(), r.exit_code());
      },
      py::arg("command"), py::arg("payload"), py::arg("tolerance") = 1e-12, py::arg("k_max") = 4,
      py::arg("seed") = 0, "Runs one command on a JSON payload; returns (envelope JSON, exit code).");

  m.def(
      "nullspace", [](const StrMatrix& a, std::size_t cols) {
        RatMatrix mat = a.empty() ? RatMatrix(0, cols) : to_matrix(a);
        std::vector<std::vector<std::string>> out;
        for (const auto& v : nullspace_vectors(mat)) out.push_back(to_strings(v));
        return out;
      },
      py::arg("matrix"), py::arg("cols") = 0, "Exact kernel basis of a rational matrix.");

  m.def("rank", [](const StrMatrix& a) { return rank(to_matrix(a)); }, py::arg("matrix"));

  m.def(
      "signature",
      [](const StrMatrix& g) {
        Signature s = metric_signature(to_matrix(g));
        return py::make_tuple(s.q, s.p);
      },
      py::arg("g"), "(q, p) with q the number of negative directions.");

  m.def(
      "prolongation_dim",
      [](const std::string& name, std::size_t n, std::size_t q, std::size_t k) {
        return kth_prolongation(algebra(name, n, q), k).dim();
      },
      py::arg("name"), py::arg("n"), py::arg("q") = 0, py::arg("k") = 1);

  m.def(
      "finite_type",
      [](const std::string& name, std::size_t n, std::size_t q, std::size_t k_max) {
        TypeReport r = finite_type_order(algebra(name, n, q), k_max);
        return py::make_tuple(r.dims, r.verdict());
      },
      py::arg("name"), py::arg("n"), py::arg("q") = 0, py::arg("k_max") = 4);
}
