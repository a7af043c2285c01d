#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "brauerkit/algebra.hpp"
#include "brauerkit/canonical.hpp"
#include "brauerkit/correspondence.hpp"
#include "brauerkit/derived.hpp"
#include "brauerkit/flip.hpp"
#include "brauerkit/json_io.hpp"
#include "brauerkit/mutation.hpp"
#include "brauerkit/reduction.hpp"

namespace py = pybind11;
using namespace brauerkit;

// JSON strings are the exchange format on the Python side; the same schemas
// the CLI reads and writes.

PYBIND11_MODULE(_brauerkit, m) {
    m.doc() = "SB quivers, Brauer graphs, tilting mutation and flips";

    m.def("validate_sb", [](const std::string& text) {
        return validate(sb_quiver_from_json(text));
    });
    m.def("validate_bg", [](const std::string& text) {
        return validate(brauer_graph_from_json(text));
    });
    m.def("to_sb", [](const std::string& text) {
        return to_json(renumbered(brauer_quiver(brauer_graph_from_json(text))));
    });
    m.def("to_bg", [](const std::string& text) {
        return to_json(renumbered(brauer_graph_of(sb_quiver_from_json(text))));
    });
    m.def("mutate", [](const std::string& text, int vertex, bool left) {
        SBQuiver q = sb_quiver_from_json(text);
        return to_json(renumbered(left ? mutate_left(q, vertex) : mutate_right(q, vertex)));
    }, py::arg("sb_json"), py::arg("vertex"), py::arg("left") = false);
    m.def("flip", [](const std::string& text, int edge, bool left) {
        BrauerGraph g = brauer_graph_from_json(text);
        return to_json(renumbered(left ? flip_left(g, edge) : flip_right(g, edge)));
    }, py::arg("bg_json"), py::arg("edge"), py::arg("left") = false);
    m.def("cartan", [](const std::string& text) {
        Matrix c = cartan_matrix(sb_quiver_from_json(text));
        std::vector<std::vector<long long>> out(c.begin(), c.end());
        return out;
    });
    m.def("oracle_cartan", [](const std::string& text) {
        SBQuiver q = sb_quiver_from_json(text);
        Matrix c = oracle_quotient(q, oracle_default_bound(q));
        std::vector<std::vector<long long>> out(c.begin(), c.end());
        return out;
    });
    m.def("euler_cartan", [](const std::string& text, int vertex) {
        Matrix c = euler_cartan(sb_quiver_from_json(text), vertex);
        std::vector<std::vector<long long>> out(c.begin(), c.end());
        return out;
    });
    m.def("ext_table", [](const std::string& text, int vertex) {
        Matrix c = ext_table(sb_quiver_from_json(text), vertex);
        std::vector<std::vector<long long>> out(c.begin(), c.end());
        return out;
    });
    m.def("fingerprint", [](const std::string& text) {
        Fingerprint f = looks_like_sb_quiver(text)
                            ? fingerprint(sb_quiver_from_json(text))
                            : fingerprint(brauer_graph_from_json(text));
        return to_json(f);
    });
    m.def("canonical", [](const std::string& text) {
        return looks_like_sb_quiver(text)
                   ? canonical_form(sb_quiver_from_json(text))
                   : canonical_form(brauer_graph_from_json(text));
    });
    m.def("isomorphic_sb", [](const std::string& a, const std::string& b) {
        return isomorphic(sb_quiver_from_json(a), sb_quiver_from_json(b));
    });
    m.def("isomorphic_bg", [](const std::string& a, const std::string& b) {
        return isomorphic(brauer_graph_from_json(a), brauer_graph_from_json(b));
    });
    m.def("reduce", [](const std::string& text, long long budget) {
        SBQuiver q = looks_like_sb_quiver(text)
                         ? sb_quiver_from_json(text)
                         : brauer_quiver(brauer_graph_from_json(text));
        ReductionOutcome r = to_double_star(q, budget);
        return py::make_tuple(to_json(renumbered(r.quiver)), to_json(r.log));
    }, py::arg("json"), py::arg("budget") = -1);
    m.def("is_double_star", [](const std::string& text) {
        auto [shape, mult] = is_double_star(brauer_graph_from_json(text));
        return py::make_tuple(shape, mult);
    });
    m.def("search", [](const std::string& a, const std::string& b, int depth) {
        FlipSearchResult r =
            flip_search(brauer_graph_from_json(a), brauer_graph_from_json(b), depth);
        return py::make_tuple(r.found, to_json(r.steps));
    }, py::arg("bg1_json"), py::arg("bg2_json"), py::arg("depth") = 8);
    m.def("export_dot", [](const std::string& text) {
        return looks_like_sb_quiver(text) ? to_dot(sb_quiver_from_json(text))
                                          : to_dot(brauer_graph_from_json(text));
    });
}
