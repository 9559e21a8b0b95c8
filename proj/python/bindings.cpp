#include "liecohom/cli.hpp"
#include "liecohom/regression.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <map>

namespace py = pybind11;

namespace {

py::tuple run_command(const std::string& command, const std::string& catalog, const std::string& input,
                      const std::string& input_text, const std::map<std::string, std::string>& params,
                      const std::string& format, bool with_reps, const std::string& field, const std::string& S,
                      int degree, const std::string& structure, const std::vector<int>& stages,
                      const std::string& triple, const std::string& param_name, const std::vector<std::string>& values,
                      const std::string& of, int samples, unsigned seed, bool sequential, bool verbose) {
    lc::cli::Options opt;
    opt.catalog = catalog;
    opt.input = input;
    opt.input_text = input_text;
    opt.format = format;
    opt.with_reps = with_reps;
    opt.field = field;
    opt.S = S;
    opt.degree = degree;
    opt.structure = structure;
    opt.stages = stages;
    opt.triple = triple;
    opt.param_name = param_name;
    opt.values = values;
    opt.sweep_of = of;
    opt.samples = samples;
    opt.seed = seed;
    opt.sequential = sequential;
    opt.verbose = verbose;
    lc::cli::Outcome out;
    {
        py::gil_scoped_release release;
        try {
            for (const auto& [k, v] : params) opt.params.insert(lc::cli::parse_param(k + "=" + v));
            out = lc::cli::run(command, opt);
        } catch (const std::exception& e) {
            out.exit_code = lc::cli::kParse;
            out.error = std::string("parse error: ") + e.what();
        }
    }
    return py::make_tuple(out.exit_code, out.output, out.error);
}

py::list regression(int samples, unsigned seed, bool parallel) {
    lc::RegressionOptions opt;
    opt.dcx_samples = samples;
    opt.seed = seed;
    opt.parallel = parallel;
    std::vector<lc::Criterion> result;
    {
        py::gil_scoped_release release;
        result = lc::run_regression(opt);
    }
    py::list out;
    for (const auto& c : result) {
        py::list checks;
        for (const auto& ch : c.checks) checks.append(py::dict(py::arg("name") = ch.name, py::arg("ok") = ch.ok, py::arg("detail") = ch.detail));
        out.append(py::dict(py::arg("id") = c.id, py::arg("title") = c.title, py::arg("tolerance") = c.tolerance,
                            py::arg("passed") = c.passed(), py::arg("line") = lc::format_criterion(c), py::arg("checks") = checks));
    }
    return out;
}

}  // namespace

PYBIND11_MODULE(_liecohom, m) {
    m.doc() = "Exact cohomology of Lie algebras with complex, symplectic and D-complex structures";
    m.attr("SCHEMA_VERSION") = lc::cli::kSchemaVersion;
    m.def("run", &run_command, py::arg("command"), py::arg("catalog") = "", py::arg("input") = "",
          py::arg("input_text") = "", py::arg("params") = std::map<std::string, std::string>{}, py::arg("format") = "json",
          py::arg("with_reps") = false, py::arg("field") = "auto", py::arg("S") = "", py::arg("degree") = -1,
          py::arg("structure") = "", py::arg("stages") = std::vector<int>{}, py::arg("triple") = "",
          py::arg("param_name") = "", py::arg("values") = std::vector<std::string>{}, py::arg("of") = "",
          py::arg("samples") = 200, py::arg("seed") = 20240607u, py::arg("sequential") = false, py::arg("verbose") = false,
          "Run one CLI command; returns (exit_code, output, error).");
    m.def("catalog_names", &lc::catalog_names);
    m.def("command_names", &lc::cli::command_names);
    m.def("regression", &regression, py::arg("samples") = 200, py::arg("seed") = 20240607u, py::arg("parallel") = true,
          "Run the acceptance criteria; one dict per criterion.");
    m.def("betti_numbers", [](const std::string& salamon) { return lc::betti_numbers(lc::parse_salamon(salamon)); },
          py::arg("structure_equations"));
}
