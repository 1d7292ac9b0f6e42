// Python bindings: parse a quiver, compute dimensions, products and witnesses.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <memory>
#include <optional>

#include "quiverhh/closed_form.hpp"
#include "quiverhh/gerstenhaber.hpp"
#include "quiverhh/invariants.hpp"
#include "quiverhh/io.hpp"

namespace py = pybind11;
using namespace quiverhh;

namespace {

using Term = std::tuple<std::string, std::string, std::string>;  // rho, gamma, coefficient

std::vector<Term> terms(const BoundQuiver& bq, const Cochain& c) {
    std::vector<Term> out;
    for (const auto& [p, x] : c.terms()) out.emplace_back(bq.describe(p.rho), bq.describe(p.gamma), to_string(x));
    return out;
}

std::vector<std::string> coords(const std::vector<Scalar>& v) {
    std::vector<std::string> out;
    for (const auto& x : v) out.push_back(to_string(x));
    return out;
}

// Owns the quiver and its cochain complex; the complex itself is not copyable.
class Algebra {
public:
    Algebra(QuiverFile qf, std::optional<std::uint32_t> characteristic)
        : field_(characteristic ? Field(*characteristic) : qf.field), quiver_(qf.quiver) {
        auto report = validate_string_algebra(quiver_);
        if (!report.ok()) {
            std::string msg = "not a string algebra:";
            for (const auto& v : report.violations) msg += std::string(" ") + to_string(v.condition) + " (" + v.witness + ")";
            throw HypothesisError(msg);
        }
        cx_ = std::make_unique<CochainComplex>(quiver_, field_);
    }

    std::uint32_t characteristic() const { return field_.characteristic(); }
    bool gentle() const { return is_gentle(quiver_); }
    std::size_t hh_dim(std::size_t n) const { return cx_->hh_dim(n); }
    std::size_t formula_dim(std::size_t n) const { return hh_dim_formula(quiver_, n, field_).dim; }

    std::vector<std::pair<std::string, long>> breakdown(std::size_t n) const {
        std::vector<std::pair<std::string, long>> out;
        for (const auto& s : hh_dim_formula(quiver_, n, field_).breakdown) out.emplace_back(s.name, s.value);
        return out;
    }

    std::vector<std::vector<Term>> cohomology_basis(std::size_t n) const {
        std::vector<std::vector<Term>> out;
        for (const auto& c : cx_->cohomology_basis(n)) out.push_back(terms(quiver_, c));
        return out;
    }

    // table[i][j] = coordinates of the product of basis classes i and j
    std::vector<std::vector<std::vector<std::string>>> table(std::size_t n, std::size_t m, bool is_cup) const {
        if (!is_cup && n + m == 0) throw std::invalid_argument("the bracket needs n + m >= 1");
        auto left = cx_->cohomology_basis(n), right = cx_->cohomology_basis(m);
        std::vector<std::vector<std::vector<std::string>>> out;
        for (const auto& f : left) {
            auto& row = out.emplace_back();
            for (const auto& g : right)
                row.push_back(coords(cx_->class_coordinates(is_cup ? cup_class(*cx_, f, g) : bracket_class(*cx_, f, g))));
        }
        return out;
    }

    std::optional<py::dict> witness(const std::string& kind, std::size_t max_degree) const {
        if (kind != "cup" && kind != "bracket") throw std::invalid_argument("kind must be 'cup' or 'bracket'");
        auto w = kind == "cup" ? find_cup_witness(*cx_, max_degree) : find_bracket_witness(*cx_, max_degree);
        if (!w) return std::nullopt;
        py::dict d;
        d["kind"] = kind;
        d["omega"] = describe(quiver_, w->omega);
        d["n"] = w->n;
        d["order"] = w->k;
        d["s1"] = w->s1;
        d["s2"] = w->s2;
        d["product"] = terms(quiver_, w->product);
        d["expected"] = terms(quiver_, w->expected);
        d["coefficient"] = to_string(w->coefficient);
        d["verified"] = w->verified();
        return d;
    }

    std::vector<std::tuple<std::string, bool, std::size_t>> selftest(std::size_t max_degree) const {
        SuiteOptions o;
        o.max_degree = max_degree;
        std::vector<std::tuple<std::string, bool, std::size_t>> out;
        for (const auto& r : run_invariants(*cx_, o)) out.emplace_back(r.name, r.passed, r.cases);
        return out;
    }

    std::string emit() const { return emit_quiver(quiver_, field_); }

private:
    Field field_;
    BoundQuiver quiver_;
    std::unique_ptr<CochainComplex> cx_;
};

}  // namespace

PYBIND11_MODULE(_quiverhh, m) {
    m.doc() = "Hochschild cohomology of quadratic string algebras";

    py::register_exception<HypothesisError>(m, "HypothesisError", PyExc_ValueError);
    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<NotCocycleError>(m, "NotCocycleError", PyExc_ValueError);

    py::class_<Algebra>(m, "Algebra")
        .def_property_readonly("characteristic", &Algebra::characteristic)
        .def_property_readonly("gentle", &Algebra::gentle)
        .def("hh_dim", &Algebra::hh_dim, py::arg("n"), "dim HH^n from the cochain complex")
        .def("formula_dim", &Algebra::formula_dim, py::arg("n"), "dim HH^n from the closed-form counts")
        .def("breakdown", &Algebra::breakdown, py::arg("n"))
        .def("cohomology_basis", &Algebra::cohomology_basis, py::arg("n"))
        .def("cup_table", [](const Algebra& a, std::size_t n, std::size_t k) { return a.table(n, k, true); })
        .def("bracket_table", [](const Algebra& a, std::size_t n, std::size_t k) { return a.table(n, k, false); })
        .def("witness", &Algebra::witness, py::arg("kind") = "cup", py::arg("max_degree") = 4)
        .def("selftest", &Algebra::selftest, py::arg("max_degree") = 4)
        .def("emit", &Algebra::emit);

    m.def(
        "parse",
        [](const std::string& text, std::optional<std::uint32_t> characteristic) {
            return Algebra(parse_quiver(text), characteristic);
        },
        py::arg("text"), py::arg("char") = py::none());
    m.def(
        "load",
        [](const std::string& path, std::optional<std::uint32_t> characteristic) {
            return Algebra(load_quiver(path), characteristic);
        },
        py::arg("path"), py::arg("char") = py::none());
}
