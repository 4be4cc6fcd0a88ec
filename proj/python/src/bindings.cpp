// Thin JSON-in/JSON-out layer; the Python package turns "p/q" strings into Fractions.

#include "fhtw/decomposition.hpp"
#include "fhtw/enumerate.hpp"
#include "fhtw/errors.hpp"
#include "fhtw/game.hpp"
#include "fhtw/generators.hpp"
#include "fhtw/io.hpp"
#include "fhtw/solver.hpp"
#include "fhtw/weights.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace fhtw;

namespace {

Hypergraph hg(const std::string& text) { return hypergraph_from_json(Json::parse(text)); }
CspInstance inst(const std::string& text) { return instance_from_json(Json::parse(text)); }

FractionalHypertreeDecomposition fhd_for(const CspInstance& i, const std::optional<std::string>& dec) {
    auto h = hypergraph_of(i);
    return dec ? decomposition_from_json(h, Json::parse(*dec)) : optimal_fractional_decomposition(h);
}

WidthMeasure measure_of(const std::string& m) {
    if (m == "tree")
        return WidthMeasure::Tree;
    if (m == "ghw")
        return WidthMeasure::Generalized;
    if (m == "fhw")
        return WidthMeasure::Fractional;
    throw InvalidArgument("measure must be tree, ghw or fhw");
}

std::string dump(const Json& j) { return j.dump(); }

// Streams hold the instance alive through the shared plan; results are JSON lines.
class SolutionIter {
  public:
    SolutionIter(CspInstance i, SolutionStream s) : inst_(std::move(i)), stream_(std::move(s)) {}
    std::string next() {
        auto a = stream_.next();
        if (!a)
            throw py::stop_iteration();
        return dump(assignment_to_json(inst_, *a));
    }

  private:
    CspInstance inst_;
    SolutionStream stream_;
};

class ProjectionIter {
  public:
    ProjectionIter(CspInstance i, ProjectionStream s) : inst_(std::move(i)), stream_(std::move(s)) {}
    std::string next() {
        auto a = stream_.next();
        if (!a)
            throw py::stop_iteration();
        return dump(assignment_to_json(inst_, *a));
    }

  private:
    CspInstance inst_;
    ProjectionStream stream_;
};

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Fractional hypertree width: covers, widths, the robber-and-army game and CSP solving";

    static py::exception<ResourceLimit> resource_limit(m, "ResourceLimitError", PyExc_RuntimeError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p)
                std::rethrow_exception(p);
        } catch (const ResourceLimit& e) {
            py::set_error(resource_limit, e.what());
        } catch (const InvalidArgument& e) {
            py::set_error(PyExc_ValueError, e.what());
        } catch (const Json::exception& e) {
            py::set_error(PyExc_ValueError, e.what());
        }
    });

    m.def("rho_star", [](const std::string& h) {
        auto g = hg(h);
        auto c = fractional_edge_cover(g, g.all_vertices());
        return dump(Json{{"value", to_string(c.value)}, {"witness", weighting_to_json(g, c.cover)}});
    });
    m.def("fractional_edge_cover", [](const std::string& h, const std::vector<std::string>& target) {
        auto g = hg(h);
        auto c = fractional_edge_cover(g, g.make_set(target));
        return dump(Json{{"value", to_string(c.value)}, {"witness", weighting_to_json(g, c.cover)}});
    });
    m.def("alpha_star", [](const std::string& h) {
        auto g = hg(h);
        auto y = fractional_independent_set(g);
        Json w = Json::object();
        for (std::size_t v = 0; v < g.num_vertices(); ++v)
            w[g.name(static_cast<int>(v))] = to_string(y.weights[v]);
        return dump(Json{{"value", to_string(y.value)}, {"witness", w}});
    });
    m.def("edge_cover_number", [](const std::string& h, const std::vector<std::string>& target) {
        auto g = hg(h);
        auto c = integral_edge_cover(g, g.make_set(target));
        Json edges = Json::array();
        for (auto e : c.edges)
            edges.push_back(g.names_of(g.edge(e)));
        return dump(Json{{"value", c.value}, {"witness", edges}});
    });
    m.def("exact_width", [](const std::string& h, const std::string& measure) {
        auto g = hg(h);
        auto r = exact_width(g, measure_of(measure));
        return dump(Json{{"value", to_string(r.value)}, {"decomposition", to_json(g, r.witness)}});
    });
    m.def("validate", [](const std::string& h, const std::string& d) {
        auto g = hg(h);
        return dump(to_json(validate(g, decomposition_from_json(g, Json::parse(d)))));
    });
    m.def("army_width", [](const std::string& h) { return to_string(army_width(hg(h))); });
    m.def("general_wins", [](const std::string& h, const std::string& r) { return general_wins(hg(h), parse_rational(r)); });
    m.def("decompose_by_separators", [](const std::string& h, const std::string& r) -> std::optional<std::string> {
        auto g = hg(h);
        auto d = decompose_by_separators(g, parse_rational(r));
        if (!d)
            return std::nullopt;
        return dump(to_json(g, *d));
    });

    m.def("solve", [](const std::string& i, const std::optional<std::string>& dec) -> std::optional<std::string> {
        auto c = inst(i);
        auto s = solve_with_decomposition(c, fhd_for(c, dec));
        if (!s)
            return std::nullopt;
        return dump(assignment_to_json(c, *s));
    }, py::arg("instance"), py::arg("decomposition") = py::none());
    m.def("enumerate_by_cover", [](const std::string& i) {
        auto c = inst(i);
        std::vector<std::string> out;
        for (const auto& a : enumerate_by_cover(c))
            out.push_back(dump(assignment_to_json(c, a)));
        return out;
    });
    m.def("brute_force_solutions", [](const std::string& i) {
        auto c = inst(i);
        std::vector<std::string> out;
        for (const auto& a : brute_force_solutions(c))
            out.push_back(dump(assignment_to_json(c, a)));
        return out;
    });

    py::class_<SolutionIter>(m, "SolutionIter")
        .def("__iter__", [](SolutionIter& s) -> SolutionIter& { return s; })
        .def("__next__", &SolutionIter::next);
    py::class_<ProjectionIter>(m, "ProjectionIter")
        .def("__iter__", [](ProjectionIter& s) -> ProjectionIter& { return s; })
        .def("__next__", &ProjectionIter::next);

    m.def("enumerate_all", [](const std::string& i, const std::optional<std::string>& dec) {
        auto c = inst(i);
        auto stream = enumerate_all(c, fhd_for(c, dec));
        return SolutionIter(std::move(c), std::move(stream));
    }, py::arg("instance"), py::arg("decomposition") = py::none());
    m.def("project_solutions", [](const std::string& i, const std::vector<std::string>& vars,
                                  const std::optional<std::string>& dec) {
        auto c = inst(i);
        std::vector<int> head;
        for (const auto& v : vars)
            head.push_back(c.variable_index(v));
        auto stream = project_solutions(c, fhd_for(c, dec), head);
        return ProjectionIter(std::move(c), std::move(stream));
    }, py::arg("instance"), py::arg("variables"), py::arg("decomposition") = py::none());

    m.def("generate_tight", [](const std::string& h, std::uint64_t n0) { return dump(to_json(generate_tight(hg(h), n0))); });
    m.def("generate_hn", [](int n) { return dump(to_json(generate_hn(n))); });
    m.def("generate_matching", [](int k) { return dump(to_json(generate_matching(k))); });
    m.def("generate_universal", [](int n) { return dump(to_json(generate_universal(n))); });
    m.def("generate_path", [](int n) { return dump(to_json(generate_path(n))); });
    m.def("generate_cycle", [](int n) { return dump(to_json(generate_cycle(n))); });
    m.def("generate_random", [](std::uint64_t seed, int vars, int domain, int constraints, int arity, double density) {
        return dump(to_json(generate_random(seed, vars, domain, constraints, arity, density)));
    });
}
