/*
   Copyright 2026 the knotscan authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "knotscan/alexander.hpp"
#include "knotscan/obstructions.hpp"
#include "knotscan/parse.hpp"
#include "knotscan/report.hpp"
#include "knotscan/selftest.hpp"
#include "knotscan/table.hpp"

namespace py = pybind11;

namespace pybind11::detail {

// mpz_class <-> python int, exact in both directions via decimal strings.
template <>
struct type_caster<mpz_class> {
   public:
    PYBIND11_TYPE_CASTER(mpz_class, const_name("int"));

    bool load(handle src, bool) {
        if (!PyLong_Check(src.ptr())) return false;
        PyObject* s = PyObject_Str(src.ptr());
        if (!s) {
            PyErr_Clear();
            return false;
        }
        const char* text = PyUnicode_AsUTF8(s);
        if (!text) {
            Py_DECREF(s);
            PyErr_Clear();
            return false;
        }
        value = mpz_class(text, 10);
        Py_DECREF(s);
        return true;
    }

    static handle cast(const mpz_class& src, return_value_policy, handle) {
        return PyLong_FromString(src.get_str().c_str(), nullptr, 10);
    }
};

}  // namespace pybind11::detail

namespace {

using knotscan::BigInt;
using knotscan::ConwayPolynomial;

py::dict triple_square_dict(const knotscan::TripleSquareResult& r) {
    py::dict out;
    out["product"] = knotscan::to_string(r.triple, 'z');
    out["product_mod4"] = knotscan::to_string(knotscan::reduce_mod4(r.triple), 'z');
    out["square"] = r.verdict.square;
    if (r.verdict.square) {
        out["witness"] = knotscan::to_string(r.verdict.witness, 'z');
        out["first_failure_exponent"] = py::none();
    } else {
        out["witness"] = py::none();
        out["first_failure_exponent"] = r.verdict.first_failure_exponent;
    }
    py::dict parities;
    for (const auto& p : r.pc_parities) parities[py::int_(p.index)] = p.parity;
    out["pc_parities"] = parities;
    out["parity_consistent"] = r.parity_consistent;
    return out;
}

py::dict hk_dict(const knotscan::HKVerdict& v) {
    py::dict out;
    out["factored"] = v.factored;
    if (v.factored) {
        out["phi"] = knotscan::to_string(v.phi, 'z');
        out["strongly_positive"] = v.strongly_positive;
        out["reason"] = py::none();
    } else {
        out["phi"] = py::none();
        out["strongly_positive"] = false;
        out["reason"] = v.reason + ": " + knotscan::to_string(v.blocking_factor, 'z');
    }
    return out;
}

py::dict two_squares_dict(const knotscan::TwoSquares& t) {
    py::dict out;
    out["representable"] = t.representable;
    if (t.representable) {
        out["witness"] = py::make_tuple(t.a, t.b);
        out["blocking_prime"] = py::none();
    } else {
        out["witness"] = py::none();
        out["blocking_prime"] = t.blocking_prime;
    }
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact amphicheirality obstructions from Conway polynomials";

    py::register_exception<knotscan::parse_error>(m, "ParseError", PyExc_ValueError);
    py::register_exception<knotscan::invalid_form_error>(m, "InvalidFormError", PyExc_ValueError);
    py::register_exception<knotscan::io_error>(m, "IoError", PyExc_OSError);

    py::class_<ConwayPolynomial>(m, "ConwayPolynomial")
        .def(py::init([](const std::string& expr) { return knotscan::parse_conway(expr); }),
             py::arg("expression"), "Parse from an expression like '1 - z^2 + 2z^4'")
        .def_static(
            "from_coefficients",
            [](const std::vector<BigInt>& even) { return ConwayPolynomial(even); },
            py::arg("even_coefficients"),
            "Coefficients of z^0, z^2, z^4, ...; the first must be 1")
        .def("coefficients",
             [](const ConwayPolynomial& c) { return c.coefficients_x(); },
             "Coefficients of z^0, z^2, z^4, ...")
        .def("degree_z", &ConwayPolynomial::degree_z)
        .def("__str__", [](const ConwayPolynomial& c) { return knotscan::to_string(c); })
        .def("__repr__",
             [](const ConwayPolynomial& c) {
                 return "ConwayPolynomial('" + knotscan::to_string(c) + "')";
             })
        .def("__eq__", [](const ConwayPolynomial& a, const ConwayPolynomial& b) { return a == b; })
        .def("__mul__",
             [](const ConwayPolynomial& a, const ConwayPolynomial& b) { return a * b; },
             "Connected sum");

    m.def("pc_sequence",
          [](const ConwayPolynomial& c, std::size_t horizon) {
              return knotscan::pc_sequence(c, horizon).entries();
          },
          py::arg("conway"), py::arg("horizon") = knotscan::kDefaultHorizon,
          "pc_2, pc_4, ... pc_{2*horizon} as a list");
    m.def("mod2_criterion", &knotscan::mod2_criterion, py::arg("conway"), py::arg("k"),
          "The degree 4/8/12 mod-2 criterion for k = 1/2/3");
    m.def("pc_parity_criterion", &knotscan::pc_parity_criterion, py::arg("conway"), py::arg("i"),
          "pc_{4i} mod 2");
    m.def("determinant", &knotscan::determinant, py::arg("conway"));
    m.def("sum_of_two_squares",
          [](const BigInt& n) { return two_squares_dict(knotscan::sum_of_two_squares(n)); },
          py::arg("n"));
    m.def("v3_from_jones",
          [](const std::string& jones) {
              return knotscan::v3_from_jones(
                  knotscan::JonesPolynomial(knotscan::parse_polynomial(jones, 't')));
          },
          py::arg("jones"), "v3 from a Jones polynomial expression in t");

    m.def("triple_product",
          [](const ConwayPolynomial& c) {
              return knotscan::to_string(knotscan::triple_product(c), 'z');
          },
          py::arg("conway"), "The exact integer product C(z) C(iz) C(z^2), in z");
    m.def("triple_square_test",
          [](const ConwayPolynomial& c) {
              return triple_square_dict(knotscan::triple_square_test(c));
          },
          py::arg("conway"));
    m.def("hk_factorization",
          [](const ConwayPolynomial& c) { return hk_dict(knotscan::hk_factorization(c)); },
          py::arg("conway"), "Mirror factorization C(z) = phi(z) phi(-z)");

    m.def("exp_z",
          [](const std::vector<BigInt>& entries, std::size_t order) {
              return knotscan::exp_z(knotscan::ExponentSequence(entries), order).coefficients();
          },
          py::arg("entries"), py::arg("order"),
          "Expand prod (1+(-x)^i)^{a_i}; entries[0] is a_1");
    m.def("log_z",
          [](const std::vector<BigInt>& coeffs) {
              std::size_t order = coeffs.empty() ? 0 : coeffs.size() - 1;
              return knotscan::log_z(knotscan::TruncatedSeries<BigInt>(order, coeffs)).entries();
          },
          py::arg("coefficients"),
          "Inverse of exp_z; input is the series 1 + f_1 x + ... as coefficients");
    m.def("closed_form_b",
          [](const BigInt& a1, const BigInt& a2, const BigInt& a3, const BigInt& a4) {
              auto b = knotscan::closed_form_b({a1, a2, a3, a4});
              return py::make_tuple(b[0], b[1], b[2], b[3]);
          },
          py::arg("a1"), py::arg("a2"), py::arg("a3"), py::arg("a4"));

    m.def("conway_to_alexander",
          [](const ConwayPolynomial& c) {
              return knotscan::to_string(knotscan::conway_to_alexander(c));
          },
          py::arg("conway"), "The Alexander polynomial as an expression in t");
    m.def("alexander_to_conway",
          [](const std::string& alexander) {
              return knotscan::alexander_to_conway(knotscan::parse_alexander(alexander));
          },
          py::arg("alexander"));
    m.def("alexander_triple_square_test",
          [](const std::string& alexander) {
              auto r = knotscan::alexander_triple_square_test(knotscan::parse_alexander(alexander));
              py::dict out = triple_square_dict(r.base);
              if (r.laurent_witness) {
                  out["laurent_witness"] = knotscan::to_string(*r.laurent_witness, 't');
              } else {
                  out["laurent_witness"] = py::none();
              }
              return out;
          },
          py::arg("alexander"));

    m.def("analyze_file",
          [](const std::string& path, const std::string& format, std::size_t horizon,
             bool strict) {
              auto fmt = format == "json" ? knotscan::TableFormat::json : knotscan::TableFormat::csv;
              auto loaded = knotscan::load_table(path, fmt, strict);
              auto doc = knotscan::reports_document(knotscan::analyze(loaded.records, horizon),
                                                    horizon);
              return knotscan::render_document(doc);
          },
          py::arg("path"), py::arg("format") = "csv",
          py::arg("horizon") = knotscan::kDefaultHorizon, py::arg("strict") = false,
          "Analyze a knot table file; returns the JSON report document");
    m.def("analyze_embedded",
          [](std::size_t horizon) {
              auto doc = knotscan::reports_document(
                  knotscan::analyze(knotscan::embedded_sample(), horizon), horizon);
              return knotscan::render_document(doc);
          },
          py::arg("horizon") = knotscan::kDefaultHorizon,
          "Analyze the embedded three-knot sample; returns the JSON report document");
    m.def("selftest_json", []() {
        return knotscan::render_document(knotscan::selftest_to_json(knotscan::run_selftest()));
    });

    m.attr("__version__") = "0.1.0";
}
