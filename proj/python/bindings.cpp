#include <pybind11/eigen.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <chaingraph/chain_graph.hpp>
#include <chaingraph/equivalence.hpp>
#include <chaingraph/gaussian_oracle.hpp>
#include <chaingraph/graph_io.hpp>
#include <chaingraph/markov_structures.hpp>
#include <chaingraph/separation.hpp>

namespace py = pybind11;
namespace cg = chaingraph;

namespace {

cg::Criterion criterion_of(const std::string& name) {
    if (name == "lwf") return cg::Criterion::lwf;
    if (name == "amp") return cg::Criterion::amp;
    throw py::value_error("criterion must be 'lwf' or 'amp', got '" + name + "'");
}

cg::EquivalenceCriterion equivalence_of(const std::string& name) {
    if (name == "adg") return cg::EquivalenceCriterion::adg;
    if (name == "lwf") return cg::EquivalenceCriterion::lwf;
    if (name == "amp") return cg::EquivalenceCriterion::amp;
    throw py::value_error("criterion must be 'adg', 'lwf' or 'amp', got '" + name + "'");
}

py::tuple query_tuple(const cg::CIQuery& q) { return py::make_tuple(q.a, q.b, q.s); }

py::dict flag_dict(const cg::Flag& f) {
    py::dict d;
    d["a"] = f.a;
    d["c"] = f.c;
    d["b"] = f.b;
    d["kind"] = cg::to_string(f.kind);
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Chain graphs under the LWF and AMP Markov properties";

    // The module attribute keeps the type alive for the translator below.
    static py::handle error_type = py::exception<cg::Error>(m, "ChainGraphError", PyExc_ValueError).release();
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const cg::Error& e) {
            py::object instance = error_type(e.what());
            instance.attr("kind") = e.kind();
            if (const auto* located = dynamic_cast<const cg::LocatedError*>(&e))
                instance.attr("lines") = located->lines();
            PyErr_SetObject(error_type.ptr(), instance.ptr());
        }
    });

    py::class_<cg::ChainGraph>(m, "ChainGraph")
        .def(py::init([](const std::vector<cg::Vertex>& vertices, const std::vector<cg::Edge>& arrows,
                         const std::vector<cg::Edge>& lines) { return cg::ChainGraph::build(vertices, arrows, lines); }),
             py::arg("vertices"), py::arg("arrows") = std::vector<cg::Edge>{},
             py::arg("lines") = std::vector<cg::Edge>{})
        .def_static("parse", &cg::parse_graph, py::arg("text"))
        .def_static("read", [](const std::string& path) { return cg::read_graph_file(path); }, py::arg("path"))
        .def_property_readonly("vertices", &cg::ChainGraph::vertices)
        .def_property_readonly("arrows", &cg::ChainGraph::arrows)
        .def_property_readonly("lines", &cg::ChainGraph::lines)
        .def("has_arrow", &cg::ChainGraph::has_arrow)
        .def("has_line", &cg::ChainGraph::has_line)
        .def("adjacent", &cg::ChainGraph::adjacent)
        .def("is_undirected", &cg::ChainGraph::is_undirected)
        .def("is_directed", &cg::ChainGraph::is_directed)
        .def("serialize", [](const cg::ChainGraph& g) { return cg::serialize_graph(g); })
        .def("__len__", &cg::ChainGraph::size)
        .def("__eq__", [](const cg::ChainGraph& a, const cg::ChainGraph& b) { return a == b; })
        .def("__repr__", [](const cg::ChainGraph& g) {
            return "<ChainGraph " + std::to_string(g.size()) + " vertices, " + std::to_string(g.lines().size()) +
                   " lines, " + std::to_string(g.arrows().size()) + " arrows>";
        });

    m.def("chain_components", [](const cg::ChainGraph& g) {
        const auto cs = cg::chain_components(g);
        return py::make_tuple(cs.components, cs.dag);
    }, py::arg("graph"), "Components ordered by smallest vertex, and the edges of D(G) as index pairs.");
    m.def("co_closure", &cg::co_closure, py::arg("graph"), py::arg("vertices"));
    m.def("an_closure", &cg::an_closure, py::arg("graph"), py::arg("vertices"));
    m.def("at_closure", &cg::at_closure, py::arg("graph"), py::arg("vertices"));
    m.def("skeleton", &cg::skeleton, py::arg("graph"));
    m.def("moral", &cg::moral, py::arg("graph"));
    m.def("augmented", &cg::augmented, py::arg("graph"));
    m.def("extended_subgraph", &cg::extended_subgraph, py::arg("graph"), py::arg("vertices"));
    m.def("spanned_subgraph", &cg::spanned_subgraph, py::arg("graph"), py::arg("vertices"));

    m.def("flags", [](const cg::ChainGraph& g) {
        py::list out;
        for (const auto& f : cg::flags(g)) out.append(flag_dict(f));
        return out;
    }, py::arg("graph"));
    m.def("double_flags", [](const cg::ChainGraph& g) {
        py::list out;
        for (const auto& d : cg::double_flags(g)) out.append(py::make_tuple(d.a, d.c, d.d, d.b));
        return out;
    }, py::arg("graph"));
    m.def("minimal_complexes", [](const cg::ChainGraph& g) {
        py::list out;
        for (const auto& c : cg::minimal_complexes(g)) out.append(py::make_tuple(c.a, c.path, c.b));
        return out;
    }, py::arg("graph"));

    m.def("separated", [](const cg::ChainGraph& g, const std::string& criterion, const cg::VertexSet& a,
                          const cg::VertexSet& b, const cg::VertexSet& s) {
        return cg::separated(g, criterion_of(criterion), {a, b, s});
    }, py::arg("graph"), py::arg("criterion"), py::arg("a"), py::arg("b"), py::arg("s") = cg::VertexSet{});
    m.def("enumerate_triples", [](const cg::ChainGraph& g, const std::string& criterion, bool full) {
        py::list out;
        for (const auto& q : cg::enumerate_triples(g, criterion_of(criterion), full ? cg::TripleMode::full : cg::TripleMode::pairwise))
            out.append(query_tuple(q));
        return out;
    }, py::arg("graph"), py::arg("criterion"), py::arg("full") = false);
    m.def("block_recursive_statements", [](const cg::ChainGraph& g, const std::string& variant) {
        py::list out;
        for (const auto& st : cg::block_recursive_statements(g, criterion_of(variant)))
            out.append(py::make_tuple(cg::to_string(st.source), st.query.a, st.query.b, st.query.s));
        return out;
    }, py::arg("graph"), py::arg("variant"));

    m.def("equivalent", [](const cg::ChainGraph& g1, const cg::ChainGraph& g2, const std::string& criterion) {
        return cg::equivalent(g1, g2, equivalence_of(criterion));
    }, py::arg("first"), py::arg("second"), py::arg("criterion"));
    m.def("fingerprint_difference", [](const cg::ChainGraph& g1, const cg::ChainGraph& g2, const std::string& criterion) {
        const auto diff = cg::compare_fingerprints(g1, g2, equivalence_of(criterion));
        auto names = [](const std::set<cg::StructuralFeature>& fs) {
            std::vector<std::string> out;
            for (const auto& f : fs) out.push_back(cg::to_string(f));
            return out;
        };
        py::dict d;
        d["skeleton_only_first"] = diff.skeleton_only_first;
        d["skeleton_only_second"] = diff.skeleton_only_second;
        d["features_only_first"] = names(diff.features_only_first);
        d["features_only_second"] = names(diff.features_only_second);
        return d;
    }, py::arg("first"), py::arg("second"), py::arg("criterion"));
    m.def("lwf_amp_coincide", &cg::lwf_amp_coincide, py::arg("graph"));
    m.def("coincidence_witness", [](const cg::ChainGraph& g) -> py::object {
        const auto w = cg::coincidence_witness(g);
        return w ? py::object(flag_dict(*w)) : py::object(py::none());
    }, py::arg("graph"));
    m.def("enumerate_chain_graphs", &cg::enumerate_chain_graphs, py::arg("n"));

    m.def("joint_covariance", [](const cg::ChainGraph& g, const std::string& variant, std::uint64_t seed) {
        const auto sigma = cg::joint_covariance(cg::sample_sem(g, criterion_of(variant), seed));
        return py::make_tuple(sigma.labels, sigma.values);
    }, py::arg("graph"), py::arg("variant"), py::arg("seed"),
       "Covariance of a sampled model: (labels, matrix).");
    m.def("certify", [](const cg::ChainGraph& g, const std::string& criterion, std::size_t seeds,
                        double sound_tol, double complete_threshold, std::uint64_t base_seed) {
        cg::CertificationOptions options;
        options.seeds = seeds;
        options.sound_tol = sound_tol;
        options.complete_threshold = complete_threshold;
        options.base_seed = base_seed;
        const auto report = cg::certify(g, criterion_of(criterion), options);
        auto list = [](const std::vector<cg::CertificationViolation>& vs) {
            py::list out;
            for (const auto& v : vs) out.append(py::make_tuple(query_tuple(v.query), v.origin, v.seed, v.magnitude));
            return out;
        };
        py::dict d;
        d["separated_triples"] = report.separated_triples;
        d["block_statements"] = report.block_statements;
        d["dependent_pairs"] = report.dependent_pairs;
        d["soundness_violations"] = list(report.soundness_violations);
        d["completeness_failures"] = list(report.completeness_failures);
        d["passed"] = report.passed();
        return d;
    }, py::arg("graph"), py::arg("criterion"), py::arg("seeds") = 5, py::arg("sound_tol") = 1e-9,
       py::arg("complete_threshold") = 1e-4, py::arg("base_seed") = 1);
}
