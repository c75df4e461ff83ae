// Python bindings for the main operations. Dimensions and reports cross the
// boundary as JSON strings or ints; all matrix input uses exact rational
// strings ("p/q" or integer strings), never floats.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "lgl/group_cohomology.hpp"
#include "lgl/operator_parser.hpp"
#include "lgl/report.hpp"

namespace py = pybind11;

namespace {

lgl::QMatrix matrix_of(const std::vector<std::vector<std::string>>& rows) {
    if (rows.empty()) throw lgl::InvalidCombination("empty matrix");
    lgl::QMatrix m(rows.size(), rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != m.cols()) throw lgl::InvalidCombination("ragged matrix");
        for (std::size_t j = 0; j < rows[i].size(); ++j)
            m.at(i, j) = lgl::Rational::from_string(rows[i][j]);
    }
    return m;
}

lgl::RatFunc scalar_of(const std::string& text) { return lgl::parse_rational_function(text); }

std::string lgl_report(const std::string& text, bool verify, long genus) {
    const lgl::DiffOp op = lgl::parse_operator(text);
    if (op.order() != 1) {
        const auto oracle = lgl::lgl_oracle(op);
        return lgl::report_from_oracle(text, oracle).to_json().dump();
    }
    const lgl::RatFunc f = -(op.coefficient(0) / op.coefficient(1));
    const lgl::LglReport formula = lgl::lgl_rank1(f, genus);
    if (verify && genus == 0) {
        const auto oracle = lgl::lgl_oracle(op);
        return lgl::report_combined(text, formula, oracle).to_json().dump();
    }
    return lgl::report_from_formula(text, formula).to_json().dump();
}

long oracle_dimension(const std::string& text) {
    return static_cast<long>(lgl::lgl_oracle(lgl::parse_operator(text)).dimension);
}

std::string ga_report(const std::string& f_text, long n, long genus) {
    const lgl::LglReport formula = lgl::lgl_ga_nilpotent(scalar_of(f_text), n, genus);
    return lgl::report_from_formula(f_text, formula).to_json().dump();
}

std::string fuchsian_report(std::size_t rank, const std::vector<std::string>& points,
                            const std::vector<std::vector<std::vector<std::string>>>& matrices) {
    lgl::FuchsianInput input;
    input.rank = rank;
    for (const auto& p : points) input.points.push_back(lgl::Place::from_string(p));
    for (const auto& m : matrices) input.matrices.push_back(matrix_of(m));
    const lgl::LglReport formula = lgl::lgl_fuchsian(input);
    lgl::Report report = lgl::report_from_formula("fuchsian", formula);
    if (formula.chi) report.breakdown["chi"] = *formula.chi;
    return report.to_json().dump();
}

py::tuple ga_cohomology_py(const std::vector<std::vector<std::string>>& n) {
    const auto dims = lgl::ga_cohomology({matrix_of(n)});
    return py::make_tuple(dims.h0, dims.h1);
}

py::tuple free_unipotent_py(std::size_t v_dim,
                            const std::vector<std::vector<std::vector<std::string>>>& gens) {
    lgl::GeneratorFamily fam;
    fam.v_dim = v_dim;
    for (const auto& g : gens) fam.generators.push_back(matrix_of(g));
    const auto dims = lgl::free_unipotent_cohomology(fam);
    return py::make_tuple(dims.h0, dims.h1);
}

py::tuple constant_system_py(const std::vector<std::vector<std::string>>& b, long precision) {
    const auto dims = lgl::constant_system_dims(matrix_of(b), precision);
    return py::make_tuple(dims.ker_dim, dims.coker_dim);
}

std::size_t formal_irregularity_py(const std::vector<std::pair<long, std::size_t>>& blocks) {
    lgl::SolutionSpaceData data;
    for (const auto& [deg, dim] : blocks) data.blocks.push_back({deg, dim});
    return lgl::formal_irregularity(data);
}

py::dict malgrange_py(const std::string& f_text, const std::string& place) {
    const auto dims = lgl::malgrange_check(scalar_of(f_text), lgl::Place::from_string(place));
    py::dict d;
    d["ker_analytic"] = dims.ker_analytic;
    d["ker_formal"] = dims.ker_formal;
    d["irregularity"] = dims.irregularity;
    d["coker_analytic"] = dims.coker_analytic;
    d["coker_formal"] = dims.coker_formal;
    d["alternating_sum_zero"] = dims.alternating_sum_zero;
    return d;
}

std::string classify_py(const std::string& f_text) {
    return lgl::classify_rank1(scalar_of(f_text)).str();
}

std::string normalize_py(const std::string& text) {
    return lgl::print_operator(lgl::clear_denominators(lgl::parse_operator(text)));
}

}  // namespace

PYBIND11_MODULE(lgllab, m) {
    m.doc() = "exact local-global dimension computations for linear differential operators";

    py::register_exception<lgl::MathError>(m, "MathError");
    py::register_exception<lgl::SyntaxError>(m, "OperatorSyntaxError");

    m.def("lgl_report", &lgl_report, py::arg("operator"), py::arg("verify") = false,
          py::arg("genus") = 0,
          "JSON report with the dimension of the local-global obstruction space");
    m.def("oracle_dimension", &oracle_dimension, py::arg("operator"),
          "brute-force dimension for a scalar operator");
    m.def("ga_report", &ga_report, py::arg("f"), py::arg("n"), py::arg("genus") = 0,
          "JSON report for the nilpotent single-block system case");
    m.def("fuchsian_report", &fuchsian_report, py::arg("rank"), py::arg("points"),
          py::arg("matrices"), "JSON report for the regular-singular case");
    m.def("ga_cohomology", &ga_cohomology_py, py::arg("n"),
          "(h0, h1) for a nilpotent generator action");
    m.def("free_unipotent_cohomology", &free_unipotent_py, py::arg("v_dim"), py::arg("generators"),
          "(h0, h1) for a family of free unipotent generators");
    m.def("constant_system_dims", &constant_system_py, py::arg("b"), py::arg("precision"),
          "(ker, coker) of z d/dz + B on formal Laurent series");
    m.def("formal_irregularity", &formal_irregularity_py, py::arg("blocks"),
          "sum of q-degree times multiplicity over slope blocks");
    m.def("malgrange_check", &malgrange_py, py::arg("f"), py::arg("place") = "0",
          "five-term dimension record of the rank-1 local module");
    m.def("classify_rank1", &classify_py, py::arg("f"),
          "differential Galois class of y' = f y over Q(z)");
    m.def("normalize_operator", &normalize_py, py::arg("operator"),
          "cleared, normalized operator text");
}
