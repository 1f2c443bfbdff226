#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "heisrep/generators.hpp"
#include "heisrep/io.hpp"
#include "heisrep/search.hpp"
#include "heisrep/structure.hpp"

namespace py = pybind11;
using namespace heisrep;

namespace {

GroupKind group_from_name(const std::string& name) {
    if (name == "Ga") return GroupKind::Ga;
    if (name == "H1") return GroupKind::H1;
    throw std::invalid_argument("group must be 'Ga' or 'H1'");
}

FieldSpec field_from_args(std::int64_t p, bool rational) {
    if (rational && p != 0) throw std::invalid_argument("give either p or rational, not both");
    return rational ? FieldSpec::rational() : FieldSpec::prime(p);
}

py::dict report_to_dict(const VerificationReport& report) {
    py::dict d;
    d["ok"] = report.ok;
    py::list violations;
    for (const auto& v : report.violations) {
        py::dict e;
        e["site"] = v.site;
        e["description"] = v.description;
        violations.append(e);
    }
    d["violations"] = violations;
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact-arithmetic representations of Ga and H1";

    py::register_exception<FieldError>(m, "FieldError");
    py::register_exception<HypothesisError>(m, "HypothesisError");
    py::register_exception<IoError>(m, "IoError");

    py::class_<CoefficientFamily>(m, "Rep")
        .def_property_readonly("dim", &CoefficientFamily::dim)
        .def_property_readonly(
            "group",
            [](const CoefficientFamily& f) {
                return f.group() == GroupKind::Ga ? "Ga" : "H1";
            })
        .def_property_readonly("num_coefficients",
                               [](const CoefficientFamily& f) { return f.coeffs().size(); })
        .def("support",
             [](const CoefficientFamily& f) {
                 std::vector<ExpVec> keys;
                 for (const auto& [e, mat] : f.coeffs()) keys.push_back(e);
                 return keys;
             })
        .def("coefficient",
             [](const CoefficientFamily& f, const ExpVec& e) {
                 std::vector<std::tuple<int, int, std::string>> out;
                 for (const auto& [i, j, v] : f.coeff(e).nonzero_entries())
                     out.emplace_back(i, j, v.str());
                 return out;
             },
             py::arg("exponent"),
             "nonzero entries of the coefficient matrix as (row, col, value) triples")
        .def("verify_axioms",
             [](const CoefficientFamily& f) { return report_to_dict(verify_comodule_axioms(f)); })
        .def("verify_relation",
             [](const CoefficientFamily& f) {
                 return report_to_dict(verify_fundamental_relation(f));
             })
        .def("check_layers",
             [](const CoefficientFamily& f) {
                 return report_to_dict(check_layer_relations(extract_layers(f)));
             })
        .def("tensor", &tensor_product)
        .def("direct_sum", &direct_sum)
        .def("to_json", &write_rep)
        .def("__eq__", [](const CoefficientFamily& a, const CoefficientFamily& b) { return a == b; })
        .def("__repr__", [](const CoefficientFamily& f) {
            return "<Rep " + std::string(f.group() == GroupKind::Ga ? "Ga" : "H1") + " dim=" +
                   std::to_string(f.dim()) + " coeffs=" + std::to_string(f.coeffs().size()) + ">";
        });

    m.def("rep_from_json", &read_rep, py::arg("text"));

    m.def(
        "coalg",
        [](const std::string& group, std::int64_t p, bool rational, std::int64_t degree) {
            return monomial_coalgebra_rep(field_from_args(p, rational), group_from_name(group),
                                          degree);
        },
        py::arg("group"), py::arg("p") = 0, py::arg("rational") = false, py::arg("degree") = 1,
        "monomial coalgebra representation of degree <= degree");

    m.def(
        "construct",
        [](const std::string& lie_json) { return construct_h1_charp(read_lie(lie_json)); },
        py::arg("lie_json"), "build the H1 representation from LIE layer data");

    m.def(
        "expform",
        [](const std::string& lie_json) {
            return from_polynomial_matrix(exponential_form_h1(read_lie(lie_json)), GroupKind::H1);
        },
        py::arg("lie_json"), "the same representation via the exponential formula");

    m.def(
        "factor",
        [](const CoefficientFamily& f) {
            FrobeniusLayers layers = extract_layers(f);
            LieLayerData data;
            data.p = layers.p;
            data.dim = layers.dim;
            data.triples = layers.layers;
            return write_lie(data);
        },
        py::arg("rep"), "extract Frobenius layers as LIE text");

    m.def(
        "search",
        [](std::int64_t p, int dim, std::int64_t budget, std::uint64_t seed,
           const std::map<std::string, double>& mix, bool fail_fast) {
            SearchConfig cfg;
            cfg.p = p;
            cfg.target_dim = dim;
            cfg.budget = budget;
            cfg.seed = seed;
            cfg.fail_fast = fail_fast;
            if (!mix.empty()) {
                std::map<std::string, GeneratorKind> names = {
                    {"coalg", GeneratorKind::Coalgebra},
                    {"tensor", GeneratorKind::Tensor},
                    {"sum", GeneratorKind::DirectSum},
                    {"lie", GeneratorKind::LieConstruct}};
                cfg.mix.clear();
                for (const auto& [name, w] : mix) {
                    auto it = names.find(name);
                    if (it == names.end())
                        throw std::invalid_argument("unknown generator '" + name + "'");
                    cfg.mix[it->second] = w;
                }
            }
            SearchReport report = run_conjecture_search(cfg);
            py::dict d;
            d["candidates_examined"] = report.candidates_examined;
            d["exhausted"] = report.exhausted;
            d["caveat"] = report.caveat;
            py::list violations;
            for (const auto& v : report.violations) {
                py::dict e;
                e["candidate"] = v.candidate_index;
                e["recipe"] = v.recipe.describe();
                e["condition"] = v.condition;
                e["site"] = v.site;
                violations.append(e);
            }
            d["violations"] = violations;
            d["internal_errors"] = py::int_(report.internal_errors.size());
            return d;
        },
        py::arg("p"), py::arg("dim") = 0, py::arg("budget") = 1000, py::arg("seed") = 0,
        py::arg("mix") = std::map<std::string, double>{}, py::arg("fail_fast") = false,
        "seeded search for layer-condition violations");

    m.def("lucas_binomial",
          [](std::int64_t n, std::int64_t r, std::int64_t p) {
              return lucas_binomial(n, r, p).str();
          },
          py::arg("n"), py::arg("r"), py::arg("p"));
}
