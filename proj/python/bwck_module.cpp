#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>

#include "bwc/construct.hpp"
#include "bwc/formula.hpp"
#include "bwc/ipexport.hpp"
#include "bwc/oracle.hpp"
#include "bwc/transform.hpp"

namespace py = pybind11;

namespace {

py::dict phi(int m, int n) {
    bwc::PhiResult r = bwc::phi_knight(m, n);
    py::dict d;
    d["m"] = r.m;
    d["n"] = r.n;
    d["value"] = r.value;
    d["uncolored"] = r.uncolored_target;
    d["regime"] = bwc::regime_name(r.regime);
    return d;
}

py::dict construct(int m, int n) {
    bwc::Construction c = bwc::construct(m, n);
    py::dict d;
    d["b"] = c.certificate.black;
    d["w"] = c.certificate.white;
    d["uncolored"] = c.certificate.uncolored;
    d["placement"] = bwc::write_placement(c.coloring);
    return d;
}

py::dict verify(const std::string& placement) {
    bwc::Coloring c = bwc::read_placement(placement);
    bwc::VerifyReport rep = bwc::verify(c);
    py::dict d;
    d["valid"] = rep.valid;
    d["black"] = rep.black;
    d["white"] = rep.white;
    d["uncolored"] = rep.uncolored;
    if (rep.violation) {
        d["violation"] = py::make_tuple(
            py::make_tuple(rep.violation->first.row, rep.violation->first.col),
            py::make_tuple(rep.violation->second.row, rep.violation->second.col));
    } else {
        d["violation"] = py::none();
    }
    return d;
}

bwc::SearchBudget budget_of(std::optional<int> max_sep, std::optional<long long> max_nodes,
                            std::optional<double> time_limit) {
    bwc::SearchBudget b;
    b.max_separator_size = max_sep;
    b.max_nodes = max_nodes;
    b.time_limit_seconds = time_limit;
    return b;
}

py::dict solve_result(const bwc::SolveResult& res) {
    py::dict d;
    d["value"] = res.value;
    d["separator"] = res.separator_size;
    d["proven"] = res.proven_optimal;
    d["nodes"] = res.explored;
    d["witness"] = bwc::write_placement(res.witness);
    return d;
}

py::dict solve(int m, int n, const std::string& piece, std::optional<int> max_sep,
               std::optional<long long> max_nodes, std::optional<double> time_limit,
               int threads) {
    bwc::BoardSpec spec(m, n, bwc::piece_from_name(piece));
    return solve_result(
        bwc::solve_balanced(spec, budget_of(max_sep, max_nodes, time_limit), threads));
}

py::dict solve_fixed_b(int m, int n, int b, const std::string& piece,
                       std::optional<long long> max_nodes, std::optional<double> time_limit) {
    bwc::BoardSpec spec(m, n, bwc::piece_from_name(piece));
    return solve_result(
        bwc::solve_fixed_b(spec, b, budget_of(std::nullopt, max_nodes, time_limit)));
}

py::dict normalize(const std::string& placement) {
    bwc::Coloring c = bwc::read_placement(placement);
    auto [result, trace] = bwc::normalize(c.spec(), c.black());
    py::list steps;
    for (const bwc::TraceStep& s : trace.steps)
        steps.append(py::make_tuple(s.name, s.n_value));
    py::dict d;
    d["n_initial"] = trace.steps.front().n_value;
    d["n_final"] = trace.steps.back().n_value;
    d["monotone"] = trace.monotone;
    d["steps"] = steps;
    d["placement"] =
        bwc::write_placement(bwc::Coloring(c.spec(), result, bwc::CellSet(c.spec())));
    return d;
}

std::string export_lp(int m, int n, const std::string& piece,
                      std::optional<long long> fix_b) {
    bwc::BoardSpec spec(m, n, bwc::piece_from_name(piece));
    return bwc::write_lp(bwc::build_ip(spec, fix_b));
}

}  // namespace

PYBIND11_MODULE(bwck, m) {
    m.doc() = "balanced black-and-white anticoloring toolkit";

    m.def("phi", &phi, py::arg("m"), py::arg("n"),
          "closed-form optimal balanced value for knights");
    m.def("conjecture_value", &bwc::conjecture_value, py::arg("n"),
          "the conjectured square-board value, evaluated verbatim");
    m.def("uncolored_target", &bwc::uncolored_target, py::arg("m"), py::arg("n"));
    m.def("w_opt", &bwc::w_opt, py::arg("m"), py::arg("n"), py::arg("b"));
    m.def("construct", &construct, py::arg("m"), py::arg("n"),
          "optimal placement with a verification certificate");
    m.def("verify", &verify, py::arg("placement"), "check a placement JSON string");
    m.def("solve", &solve, py::arg("m"), py::arg("n"), py::arg("piece") = "knight",
          py::arg("max_sep") = py::none(), py::arg("max_nodes") = py::none(),
          py::arg("time_limit") = py::none(), py::arg("threads") = 1,
          "exact balanced optimum by separator search");
    m.def("solve_fixed_b", &solve_fixed_b, py::arg("m"), py::arg("n"), py::arg("b"),
          py::arg("piece") = "knight", py::arg("max_nodes") = py::none(),
          py::arg("time_limit") = py::none(), "exact max white for a fixed black count");
    m.def("normalize", &normalize, py::arg("placement"),
          "column-normalization pipeline with a step/N trace");
    m.def("export_lp", &export_lp, py::arg("m"), py::arg("n"), py::arg("piece") = "knight",
          py::arg("fix_b") = py::none(), "the integer program in LP text format");
}
