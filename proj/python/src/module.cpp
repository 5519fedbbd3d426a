#include "potgraphic/error.hpp"
#include "potgraphic/extremal.hpp"
#include "potgraphic/graph.hpp"
#include "potgraphic/potential.hpp"
#include "potgraphic/report.hpp"
#include "potgraphic/sequence.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace potgraphic;

namespace {

DegreeSequence to_sequence(const std::vector<int> & values)
{
    return DegreeSequence(values);
}

std::vector<int> from_sequence(const DegreeSequence & seq)
{
    return {seq.begin(), seq.end()};
}

SimpleGraph to_graph(int order, const std::vector<Edge> & edges)
{
    SimpleGraph g(order);
    for (auto [u, v] : edges)
        g.add_edge(u, v);
    return g;
}

py::object from_json(const nlohmann::json & value)
{
    return py::module_::import("json").attr("loads")(value.dump());
}

PatternSpec pattern_spec(int r, int k, int t)
{
    PatternSpec spec{r, k, t};
    spec.validate();
    return spec;
}

} // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Degree sequences, potentially H-graphic decisions and extremal thresholds";

    static py::exception<Error> error_type(m, "Error", PyExc_ValueError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p)
                std::rethrow_exception(p);
        }
        catch (const Error & e) {
            py::object exc = py::reinterpret_borrow<py::object>(error_type.ptr())(e.what());
            exc.attr("code") = std::string(to_string(e.code()));
            PyErr_SetObject(error_type.ptr(), exc.ptr());
        }
    });

    py::class_<SimpleGraph>(m, "Graph")
        .def(py::init(&to_graph), py::arg("order"), py::arg("edges") = std::vector<Edge>{})
        .def_property_readonly("order", &SimpleGraph::order)
        .def_property_readonly("size", &SimpleGraph::size)
        .def("edges", &SimpleGraph::edges)
        .def("degrees", &SimpleGraph::degrees)
        .def("adjacent", &SimpleGraph::adjacent)
        .def("__eq__", [](const SimpleGraph & a, const SimpleGraph & b) { return a == b; })
        .def("__repr__", [](const SimpleGraph & g) {
            return "Graph(order=" + std::to_string(g.order()) + ", size=" + std::to_string(g.size()) + ")";
        });

    m.def("normalize", [](std::vector<int> raw) { return from_sequence(normalize(std::move(raw))); });
    m.def("parse_sequence", [](const std::string & text) { return from_sequence(parse_sequence(text)); });
    m.def("is_graphic", [](const std::vector<int> & s) { return is_graphic(to_sequence(s)); });
    m.def("erdos_gallai_margins", [](const std::vector<int> & s) { return erdos_gallai_margins(to_sequence(s)); });
    m.def("layoff", [](const std::vector<int> & s, std::size_t k) { return from_sequence(layoff(to_sequence(s), k)); },
          py::arg("sequence"), py::arg("k"));
    m.def("havel_hakimi_realize", [](const std::vector<int> & s) { return havel_hakimi_realize(to_sequence(s)); });
    m.def(
        "enumerate_graphic_sequences",
        [](int n, std::optional<std::int64_t> min_sigma, bool exclude_zero_terms) {
            EnumerationOptions options;
            options.min_sigma = min_sigma;
            options.exclude_zero_terms = exclude_zero_terms;
            std::vector<std::vector<int>> out;
            for_each_graphic_sequence(n, options, [&](const DegreeSequence & s) {
                out.push_back(from_sequence(s));
                return true;
            });
            return out;
        },
        py::arg("n"), py::arg("min_sigma") = py::none(), py::arg("exclude_zero_terms") = false);

    m.def("complete", &complete);
    m.def("path_graph", &path_graph);
    m.def("cycle_graph", &cycle_graph);
    m.def("matching", &matching);
    m.def("complement", &complement);
    m.def("join", &join);
    m.def("disjoint_union", &disjoint_union);
    m.def("degree_sequence", [](const SimpleGraph & g) { return from_sequence(degree_sequence(g)); });
    m.def("contains_subgraph", &contains_subgraph, py::arg("host"), py::arg("pattern"));
    m.def("are_isomorphic", &are_isomorphic);
    m.def("build_removed_pattern", [](int r, int k, int t) { return build_removed_pattern({r, k, t}); },
          py::arg("r"), py::arg("k"), py::arg("t"));
    m.def("extremal_construction", &extremal_construction, py::arg("r"), py::arg("n"));
    m.def("parse_graph", &parse_graph);
    m.def("format_graph", &format_graph);

    py::class_<PotentialDecision>(m, "PotentialDecision")
        .def_readonly("verdict", &PotentialDecision::verdict)
        .def_readonly("not_graphic", &PotentialDecision::not_graphic)
        .def_readonly("witness", &PotentialDecision::witness)
        .def_readonly("embedding", &PotentialDecision::embedding)
        .def("__bool__", [](const PotentialDecision & d) { return d.verdict; });

    m.def("is_potentially_subgraph",
          [](const std::vector<int> & s, const SimpleGraph & h) { return is_potentially_subgraph(to_sequence(s), h); },
          py::arg("sequence"), py::arg("pattern"));
    m.def("is_potentially_clique_on_top",
          [](const std::vector<int> & s, int r) { return is_potentially_clique_on_top(to_sequence(s), r); },
          py::arg("sequence"), py::arg("r"));
    m.def(
        "realization_with_pattern_on_top",
        [](const std::vector<int> & s, const SimpleGraph & h) -> std::optional<std::pair<SimpleGraph, Embedding>> {
            auto placed = realization_with_pattern_on_top(to_sequence(s), h);
            if (!placed)
                return std::nullopt;
            return std::make_pair(placed->graph, placed->embedding);
        },
        py::arg("sequence"), py::arg("pattern"));
    m.def(
        "hypothesis_check",
        [](const std::string & id, const std::vector<int> & s, int r) {
            return hypothesis_check(parse_condition_id(id), to_sequence(s), r);
        },
        py::arg("condition_id"), py::arg("sequence"), py::arg("r"));
    m.def(
        "conclusion_check",
        [](const std::string & id, const std::vector<int> & s, int r) {
            return conclusion_check(parse_condition_id(id), to_sequence(s), r);
        },
        py::arg("condition_id"), py::arg("sequence"), py::arg("r"));

    m.def(
        "sigma_formula",
        [](int r, int k, int t, int n, bool strict) {
            return sigma_formula(r, k, t, n, strict ? FormulaMode::Strict : FormulaMode::Relaxed);
        },
        py::arg("r"), py::arg("k"), py::arg("t"), py::arg("n"), py::arg("strict") = true);
    m.def("lower_bound_sum", &lower_bound_sum, py::arg("r"), py::arg("n"));
    m.def(
        "brute_force_sigma",
        [](const SimpleGraph & h, int n, bool exclude_zero_terms, std::uint64_t work_bound, int threads) {
            BruteForceOptions options;
            options.exclude_zero_terms = exclude_zero_terms;
            options.work_bound = work_bound;
            options.threads = threads;
            ThresholdReport report;
            {
                py::gil_scoped_release release;
                report = brute_force_sigma(h, n, options);
            }
            return from_json(report::to_json(report, false));
        },
        py::arg("pattern"), py::arg("n"), py::arg("exclude_zero_terms") = false, py::arg("work_bound") = 10'000'000,
        py::arg("threads") = 1);
    m.def(
        "verify_lower_bound",
        [](int r, int k, int t, int n) { return from_json(report::to_json(verify_lower_bound(pattern_spec(r, k, t), n))); },
        py::arg("r"), py::arg("k"), py::arg("t"), py::arg("n"));
    m.def("unique_realization_check", [](const std::vector<int> & s) { return unique_realization_check(to_sequence(s)); });
    m.def("special_sequence", [](int r, int n) { return from_sequence(special_sequence(r, n)); }, py::arg("r"),
          py::arg("n"));
    m.def(
        "proof_path_check",
        [](const std::vector<int> & s, int r) { return from_json(report::to_json(proof_path_check(to_sequence(s), r))); },
        py::arg("sequence"), py::arg("r"));
    m.def(
        "sample_graphic_sequences",
        [](int n, std::int64_t min_sigma, std::size_t count, std::uint64_t seed) {
            std::vector<std::vector<int>> out;
            for (const auto & s : sample_graphic_sequences(n, min_sigma, count, seed))
                out.push_back(from_sequence(s));
            return out;
        },
        py::arg("n"), py::arg("min_sigma"), py::arg("count"), py::arg("seed"));
}
