#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "braidrep/json_io.hpp"
#include "braidrep/path_oracle.hpp"

namespace py = pybind11;
using namespace braidrep;

namespace {

RepSpec make_spec_py(const std::string& kind, const std::map<std::string, std::string>& params) {
    std::map<char, LaurentPolynomial> parsed;
    for (const auto& [name, text] : params) {
        if (name.size() != 1 || var_index(name[0]) == kNumVars)
            throw InvalidParams("unknown parameter '" + name + "'");
        parsed.emplace(name[0], LaurentPolynomial::parse(text));
    }
    return make_spec(rep_kind_from_string(kind), std::move(parsed));
}

std::vector<std::vector<std::string>> matrix_rows(const PolyMatrix& m) {
    std::vector<std::vector<std::string>> rows(m.dim());
    for (std::size_t i = 0; i < m.dim(); ++i)
        for (std::size_t j = 0; j < m.dim(); ++j) rows[i].push_back(m.at(i, j).str());
    return rows;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "braid group representations: exact symbolic evaluation and kernel search";

    // translators run newest-first, so the base class goes first
    py::register_exception<Error>(m, "BraidrepError");
    py::register_exception<NotAUnit>(m, "NotAUnit");
    py::register_exception<SyntaxError>(m, "PolySyntaxError");
    py::register_exception<NonUnitDeterminant>(m, "NonUnitDeterminant");
    py::register_exception<InvalidParams>(m, "InvalidParams");

    py::class_<LaurentPolynomial>(m, "LaurentPolynomial")
        .def(py::init([](const std::string& text) { return LaurentPolynomial::parse(text); }))
        .def_static("parse", &LaurentPolynomial::parse)
        .def("__str__", &LaurentPolynomial::str)
        .def("__repr__",
             [](const LaurentPolynomial& p) { return "LaurentPolynomial('" + p.str() + "')"; })
        .def("__add__", &LaurentPolynomial::operator+)
        .def("__sub__", py::overload_cast<const LaurentPolynomial&>(&LaurentPolynomial::operator-,
                                                                    py::const_))
        .def("__mul__", &LaurentPolynomial::operator*)
        .def("__neg__", py::overload_cast<>(&LaurentPolynomial::operator-, py::const_))
        .def("__eq__", [](const LaurentPolynomial& a, const LaurentPolynomial& b) { return a == b; })
        .def("is_zero", &LaurentPolynomial::is_zero)
        .def("is_unit", &LaurentPolynomial::is_unit)
        .def("monomial_inverse", &LaurentPolynomial::monomial_inverse)
        .def("substitute", &LaurentPolynomial::substitute, py::arg("assignment"),
             py::arg("modulus"));

    py::class_<PolyMatrix>(m, "PolyMatrix")
        .def_static("identity", &PolyMatrix::identity)
        .def_property_readonly("n", &PolyMatrix::dim)
        .def("entry",
             [](const PolyMatrix& mat, std::size_t i, std::size_t j) { return mat.at(i, j); })
        .def("rows", &matrix_rows)
        .def("__mul__", &PolyMatrix::operator*)
        .def("__eq__", [](const PolyMatrix& a, const PolyMatrix& b) { return a == b; })
        .def("is_identity", &PolyMatrix::is_identity)
        .def("determinant", &PolyMatrix::determinant)
        .def("__repr__", [](const PolyMatrix& mat) { return matrix_to_json(mat).dump(); });

    py::class_<BraidWord>(m, "BraidWord")
        .def(py::init([](const std::string& text, std::size_t n) { return parse_word(text, n); }),
             py::arg("text"), py::arg("n"))
        .def_readonly("n", &BraidWord::n)
        .def_readonly("letters", &BraidWord::letters)
        .def("__str__", &format_word)
        .def("__eq__", [](const BraidWord& a, const BraidWord& b) { return a == b; });

    py::class_<RepSpec>(m, "RepSpec")
        .def_property_readonly("kind", [](const RepSpec& s) { return rep_kind_name(s.kind); });

    py::class_<RelationReport>(m, "RelationReport")
        .def_readonly("n", &RelationReport::n)
        .def_readonly("cubic_failures", &RelationReport::cubic_failures)
        .def_readonly("commuting_failures", &RelationReport::commuting_failures)
        .def_readonly("passed", &RelationReport::passed);

    py::class_<KernelWitness>(m, "KernelWitness")
        .def_readonly("word", &KernelWitness::word)
        .def_readonly("image_is_identity", &KernelWitness::image_is_identity)
        .def_readonly("burau_image_nontrivial", &KernelWitness::burau_image_nontrivial)
        .def_readonly("certified", &KernelWitness::certified);

    py::class_<SearchResult>(m, "SearchResult")
        .def_readonly("witnesses", &SearchResult::witnesses)
        .def_readonly("words_enumerated", &SearchResult::words_enumerated)
        .def_readonly("fingerprint_hits", &SearchResult::fingerprint_hits)
        .def_readonly("confirmed", &SearchResult::confirmed);

    m.def("make_spec", &make_spec_py, py::arg("kind"),
          py::arg("params") = std::map<std::string, std::string>{});
    m.def("parse_word", &parse_word, py::arg("text"), py::arg("n"));
    m.def("format_word", &format_word);
    m.def("inverse", &inverse);
    m.def("compose", &compose);
    m.def("free_reduce", &free_reduce);
    m.def("permutation", &permutation);
    m.def("generator_image", &generator_image, py::arg("spec"), py::arg("i"), py::arg("sign"),
          py::arg("n"));
    m.def("evaluate", &evaluate, py::arg("spec"), py::arg("word"));
    m.def("path_matrix", &path_matrix);
    m.def(
        "cubic_residual",
        [](const std::string& a, const std::string& b, const std::string& c,
           const std::string& d) {
            return cubic_residual(LaurentPolynomial::parse(a), LaurentPolynomial::parse(b),
                                  LaurentPolynomial::parse(c), LaurentPolynomial::parse(d));
        },
        py::arg("a"), py::arg("b"), py::arg("c"), py::arg("d"));
    m.def(
        "classify_case",
        [](const std::string& a, const std::string& b, const std::string& c,
           const std::string& d) {
            CaseLabel label =
                classify_case(LaurentPolynomial::parse(a), LaurentPolynomial::parse(b),
                              LaurentPolynomial::parse(c), LaurentPolynomial::parse(d));
            return std::make_pair(std::string(case_kind_name(label.label)), label.reason);
        },
        py::arg("a"), py::arg("b"), py::arg("c"), py::arg("d"));
    m.def("check_relations", &check_relations, py::arg("spec"), py::arg("n"));
    m.def("verify_kernel_witness", &verify_kernel_witness, py::arg("spec"), py::arg("word"));
    m.def(
        "search_kernel",
        [](std::size_t n, std::size_t max_len, const RepSpec& spec, std::uint64_t seed,
           std::uint64_t modulus, std::size_t limit) {
            SearchConfig config{n, max_len, spec, seed, modulus, limit};
            return search_kernel(config);
        },
        py::arg("n"), py::arg("max_len"), py::arg("spec"), py::arg("seed") = 0,
        py::arg("modulus") = 2305843009213693951ULL, py::arg("limit") = 1);
}
