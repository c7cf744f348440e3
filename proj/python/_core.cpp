#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "stabce/dyadic.hpp"
#include "stabce/graph.hpp"
#include "stabce/metrics.hpp"
#include "stabce/stabilizer.hpp"
#include "stabce/survey.hpp"

namespace py = pybind11;
using namespace stabce;

namespace {

// Python sees exact values as (numerator, log2 denominator); the package wraps them in Fraction.
py::tuple exact(const DyadicRational& d) {
    auto num = py::int_(py::str(to_decimal(d.numerator())));
    return py::make_tuple(num, d.log2_denominator());
}

QubitSet to_set(const Graph& g, const std::vector<std::size_t>& labels) {
    return QubitSet::from_labels(g.size(), labels);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Graph-state purities and concentratable entanglement from stabilizer ranks.";

    py::register_exception<Graph6Error>(m, "Graph6Error", PyExc_ValueError);

    py::class_<Graph>(m, "Graph")
        .def(py::init<std::size_t>(), py::arg("n"))
        .def_static(
            "from_edges",
            [](std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
                std::vector<Graph::Edge> zero_based;
                for (auto [u, v] : edges) {
                    if (u == 0 || v == 0) throw py::value_error("vertex labels are 1-indexed");
                    zero_based.emplace_back(u - 1, v - 1);
                }
                return Graph::from_edges(n, zero_based);
            },
            py::arg("n"), py::arg("edges"))
        .def_static("from_graph6", [](const std::string& s) { return parse_graph6(s); })
        .def_static("from_edge_list", [](const std::string& s) { return parse_edge_list(s); })
        .def_static("family", [](const std::string& kind, std::size_t n) {
            return Graph::family(parse_family(kind), n);
        }, py::arg("kind"), py::arg("n"))
        .def_property_readonly("n", &Graph::size)
        .def("edges", [](const Graph& g) {
            std::vector<std::pair<std::size_t, std::size_t>> out;
            for (auto [u, v] : g.edges()) out.emplace_back(u + 1, v + 1);
            return out;
        })
        .def("is_connected", &Graph::is_connected)
        .def("graph6", [](const Graph& g) { return write_graph6(g); })
        .def("edge_list", [](const Graph& g) { return write_edge_list(g); })
        .def("canonical_form", [](const Graph& g) { return canonical_form(g); })
        .def("__len__", &Graph::size)
        .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
        .def("__repr__", [](const Graph& g) { return "Graph('" + write_graph6(g) + "')"; });

    m.def("_purity", [](const Graph& g, const std::vector<std::size_t>& kept) {
        return exact(purity(g, to_set(g, kept)));
    });
    m.def("schmidt_rank", [](const Graph& g, const std::vector<std::size_t>& kept) {
        return schmidt_rank(g, to_set(g, kept));
    }, py::arg("graph"), py::arg("kept"));
    m.def("distinct_sets", [](const Graph& g, const std::vector<std::size_t>& traced) {
        return count_distinct_sets_fast(g, to_set(g, traced));
    }, py::arg("graph"), py::arg("traced"));
    m.def("_ce", [](const Graph& g, const std::vector<std::size_t>& subset) {
        auto s = subset.empty() ? QubitSet::full(g.size()) : to_set(g, subset);
        return exact(concentratable_entanglement(g, s));
    });
    m.def("_bounds", [](std::size_t n) {
        auto b = ce_bounds(n);
        return py::make_tuple(exact(b.min), exact(b.max));
    });
    m.def("rank_index", [](const Graph& g, std::size_t level) {
        return rank_index(g, level).counts;
    }, py::arg("graph"), py::arg("m"));
    m.def("spectrum", [](const Graph& g) { return purity_spectrum(g).rank_counts; }, py::arg("graph"),
          "rank_counts[m][r]: level-m bipartitions with purity 2^-r.");
    m.def("_survey", [](std::size_t n) {
        py::list out;
        for (const auto& r : ce_survey(n).records) {
            out.append(py::make_tuple(r.graph6, exact(r.ce), r.distinct_purities, r.achieves_min,
                                      r.achieves_max));
        }
        return out;
    });
    m.def("max_achievers", [](std::size_t n) { return max_achievers(n); }, py::arg("n"));
}
