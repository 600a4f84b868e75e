#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>
#include <variant>

#include "cli_commands.hpp"
#include "schurpb/analytic.hpp"
#include "schurpb/bernoulli.hpp"
#include "schurpb/polylog.hpp"
#include "schurpb/shapes.hpp"

namespace py = pybind11;
using namespace schurpb;

namespace {

using Rows = std::vector<std::vector<int>>;
using RealRows = std::vector<std::vector<double>>;

// Exact values cross as fractions.Fraction, built from "p/q" text.
py::object fraction(const BigRational& q) {
  static py::object cls = py::module_::import("fractions").attr("Fraction");
  return cls(to_string(q));
}

template <class V>
Tableau<V> tableau(const std::vector<std::vector<V>>& rows) {
  return Tableau<V>::from_rows(rows);
}

py::tuple value_tuple(const ValueWithBound& v) { return py::make_tuple(v.value, v.bound, to_string(v.method)); }

QuadratureSpec quad(double abs_tol, int max_depth) {
  QuadratureSpec q;
  q.abs_tol = abs_tol;
  q.max_depth = max_depth;
  return q;
}

}  // namespace

PYBIND11_MODULE(_schurpb, m) {
  m.doc() = "Schur multiple zeta values and Schur type poly-Bernoulli numbers";

  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);

  m.def("corners", [](const std::vector<int>& parts) {
    std::vector<std::pair<int, int>> out;
    for (const Cell& c : corners(Partition(parts))) out.emplace_back(c.row, c.col);
    return out;
  }, py::arg("shape"));

  m.def("conjugate", [](const std::vector<int>& parts) { return conjugate(Partition(parts)).parts(); },
        py::arg("shape"));

  m.def("bernoulli_table",
        [](const Rows& k, std::variant<int, std::vector<int>> orders_in, const std::string& kind) {
          const WeightTableau w = tableau(k);
          std::vector<int> orders = std::holds_alternative<int>(orders_in)
                                        ? std::vector<int>(corners(w.shape()).size(), std::get<int>(orders_in))
                                        : std::get<std::vector<int>>(orders_in);
          const BernoulliTable t = bernoulli_table(w.shape(), w, orders, parse_kind(kind));
          py::dict out;
          for (const auto& idx : t.indices()) out[py::tuple(py::cast(idx))] = fraction(t.at(idx));
          return out;
        },
        py::arg("k"), py::arg("orders"), py::arg("kind") = "B",
        "Table {m: Fraction} for the shape of k; one order per corner or one for all.");

  m.def("hook_b_stirling",
        [](const Rows& k, int n, int mm) {
          const WeightTableau w = tableau(k);
          return fraction(hook_b_stirling(w.shape(), w, n, mm));
        },
        py::arg("k"), py::arg("n"), py::arg("m"));

  m.def("decompose",
        [](const std::vector<std::vector<std::string>>& rows, bool star) {
          const auto s = Tableau<std::string>::from_rows(rows);
          auto plus = [](const std::string& a, const std::string& b) { return a + "+" + b; };
          std::vector<std::pair<int, std::vector<std::string>>> out;
          for (const auto& c : star ? decompose_to_mzv_star(s, plus) : decompose_to_mzv(s, plus))
            out.emplace_back(c.sign, c.parts);
          return out;
        },
        py::arg("s"), py::arg("star") = false);

  m.def("mzv", [](const std::vector<double>& s, double tol) { return value_tuple(mzv_eval(s, tol)); },
        py::arg("s"), py::arg("tol") = 1e-12);
  m.def("mzv_star", [](const std::vector<double>& s, double tol) { return value_tuple(mzv_star_eval(s, tol)); },
        py::arg("s"), py::arg("tol") = 1e-12);

  m.def("schur_zeta", [](const RealRows& s, double tol) { return value_tuple(schur_zeta_eval(tableau(s), tol)); },
        py::arg("s"), py::arg("tol") = 1e-12);
  m.def("schur_zeta_via_decomposition",
        [](const RealRows& s, bool star, double tol) {
          return value_tuple(schur_zeta_via_decomposition(tableau(s), star, tol));
        },
        py::arg("s"), py::arg("star") = false, py::arg("tol") = 1e-10);

  m.def("polylog",
        [](const Rows& k, const std::vector<double>& point, double tol) {
          const WeightTableau w = tableau(k);
          return value_tuple(schur_polylog_eval(w.shape(), w, point, tol));
        },
        py::arg("k"), py::arg("point"), py::arg("tol") = 1e-12);

  m.def("xi",
        [](const Rows& k, const std::vector<double>& s, double abs_tol, int max_depth) {
          const WeightTableau w = tableau(k);
          ValueWithBound v;
          {
            py::gil_scoped_release release;
            v = xi_eval(w.shape(), w, s, quad(abs_tol, max_depth));
          }
          return value_tuple(v);
        },
        py::arg("k"), py::arg("s"), py::arg("abs_tol") = 1e-7, py::arg("max_depth") = 8);
  m.def("xi_oracle",
        [](const Rows& k, const std::vector<double>& s, double tol) {
          const WeightTableau w = tableau(k);
          return value_tuple(xi_series_oracle(w.shape(), w, s, tol));
        },
        py::arg("k"), py::arg("s"), py::arg("tol") = 1e-9);
  m.def("xi_special_value",
        [](const Rows& k, const std::vector<int>& mm) {
          const WeightTableau w = tableau(k);
          return fraction(xi_special_value(w.shape(), w, mm));
        },
        py::arg("k"), py::arg("m"));

  m.def("eta",
        [](int k, double s, double abs_tol) { return value_tuple(eta_classical_eval(k, s, quad(abs_tol, 8))); },
        py::arg("k"), py::arg("s"), py::arg("abs_tol") = 1e-7);
  m.def("eta_special_value",
        [](const Rows& k, const std::vector<int>& mm) {
          const WeightTableau w = tableau(k);
          return fraction(eta_special_value(w.shape(), w, mm));
        },
        py::arg("k"), py::arg("m"));

  m.def("run_cli",
        [](const std::vector<std::string>& args) {
          std::ostringstream out, err;
          int code;
          {
            py::gil_scoped_release release;
            code = cli::run_cli(args, out, err);
          }
          return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"), "Run the command line front end in-process; returns (exit code, stdout, stderr).");
}
