#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "bmdm/bench.hpp"
#include "bmdm/classification.hpp"
#include "bmdm/decomposition.hpp"
#include "bmdm/document.hpp"
#include "bmdm/graph.hpp"
#include "bmdm/matching.hpp"
#include "bmdm/oracle.hpp"
#include "bmdm/random_instances.hpp"
#include "bmdm/verifying.hpp"

namespace py = pybind11;
using namespace bmdm;

namespace {

VertexSet to_vertex_set(int universe, const std::vector<int>& members) {
  VertexSet s(universe);
  for (int v : members) s.insert(v);
  return s;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Dulmage-Mendelsohn decomposition for bipartite b-matchings";

  py::register_exception<Error>(m, "Error");

  py::class_<BipartiteGraph>(m, "BipartiteGraph")
      .def_property_readonly("a_count", &BipartiteGraph::a_count)
      .def_property_readonly("b_count", &BipartiteGraph::b_count)
      .def_property_readonly("vertex_count", &BipartiteGraph::vertex_count)
      .def_property_readonly("edge_count", &BipartiteGraph::edge_count)
      .def("cap", &BipartiteGraph::cap, py::arg("v"))
      .def("degree", &BipartiteGraph::degree, py::arg("v"))
      .def("side", [](const BipartiteGraph& g, int v) {
        return g.side(v) == Side::A ? "A" : "B";
      }, py::arg("v"))
      .def("edges", [](const BipartiteGraph& g) {
        std::vector<std::pair<int, int>> out;
        for (const Edge& e : g.edges()) out.emplace_back(e.u, e.v);
        return out;
      })
      .def("vertex_name", [](const BipartiteGraph& g, int v) { return vertex_name(g, v); },
           py::arg("v"))
      .def("vertex_id", [](const BipartiteGraph& g, const std::string& name) {
        return vertex_id(g, name);
      }, py::arg("name"))
      .def("__repr__", [](const BipartiteGraph& g) {
        return "<BipartiteGraph |A|=" + std::to_string(g.a_count()) +
               " |B|=" + std::to_string(g.b_count()) +
               " m=" + std::to_string(g.edge_count()) + ">";
      });

  m.def("build_graph",
        [](int a, int b, const std::vector<std::pair<int, int>>& edges,
           const std::vector<int>& caps) { return build_graph(a, b, edges, caps); },
        py::arg("a_count"), py::arg("b_count"), py::arg("edges"),
        py::arg("caps") = std::vector<int>{},
        "Build a bipartite graph from (a_index, b_index) edge pairs; an empty "
        "caps list means unit capacities.");

  py::class_<Matching>(m, "Matching")
      .def_property_readonly("size", &Matching::size)
      .def_property_readonly("edge_ids",
                             [](const Matching& m_) { return m_.edge_ids(); })
      .def("load", &Matching::load, py::arg("v"))
      .def("contains", &Matching::contains, py::arg("edge_id"))
      .def("__len__", &Matching::size);

  m.def("matching_from_edge_ids",
        [](const BipartiteGraph& g, const std::vector<int>& ids) {
          return Matching::from_edge_ids(g, ids);
        },
        py::arg("graph"), py::arg("edge_ids"));
  m.def("is_b_matching",
        [](const BipartiteGraph& g, const std::vector<int>& ids) {
          return is_b_matching(g, ids);
        },
        py::arg("graph"), py::arg("edge_ids"));
  m.def("max_b_matching", &max_b_matching, py::arg("graph"));
  m.def("loose_vertices",
        [](const BipartiteGraph& g, const Matching& m_, const std::string& side) {
          return loose_vertices(g, m_, side == "A" ? Side::A : Side::B).to_vector();
        },
        py::arg("graph"), py::arg("matching"), py::arg("side"));

  py::class_<FlexComponent>(m, "FlexComponent")
      .def_readonly("id", &FlexComponent::id)
      .def_readonly("trivial", &FlexComponent::trivial)
      .def_property_readonly("vertices",
                             [](const FlexComponent& fc) { return fc.vertices.to_vector(); })
      .def_property_readonly("kind",
                             [](const FlexComponent& fc) { return kind_name(fc.kind); });

  py::class_<Decomposition>(m, "Decomposition")
      .def_property_readonly("component_count", &Decomposition::component_count)
      .def_property_readonly("components",
                             [](const Decomposition& d) { return d.components(); })
      .def("component_of", &Decomposition::component_of, py::arg("v"))
      .def_property_readonly("order_arcs",
                             [](const Decomposition& d) { return d.order_arcs(); })
      .def_property_readonly("matching", &Decomposition::matching)
      .def("ext", [](const Decomposition& d, const std::string& side) {
        return d.ext(side == "A" ? Side::A : Side::B).to_vector();
      }, py::arg("side"))
      .def("poset_leq", &Decomposition::poset_leq, py::arg("c1"), py::arg("c2"))
      .def("transitive_reduction", &Decomposition::transitive_reduction);

  m.def("decompose", &decompose, py::arg("graph"), py::arg("matching"));
  m.def("restricted_capacity", &restricted_capacity, py::arg("graph"),
        py::arg("decomposition"), py::arg("component"));

  m.def("classify_edges",
        [](const BipartiteGraph& g, const Matching& m_, const Decomposition& d) {
          EdgeClassification cls = classify_edges(g, m_, d);
          std::vector<std::string> out;
          out.reserve(cls.class_of.size());
          for (EdgeClass c : cls.class_of) out.emplace_back(edge_class_name(c));
          return out;
        },
        py::arg("graph"), py::arg("matching"), py::arg("decomposition"));
  m.def("loose_attainable",
        [](const Decomposition& d) { return loose_attainable(d).to_vector(); },
        py::arg("decomposition"));
  m.def("canonical_verifying_sets",
        [](const Decomposition& d) {
          auto [z1, z2] = canonical_verifying_sets(d);
          return std::make_pair(z1.to_vector(), z2.to_vector());
        },
        py::arg("decomposition"));

  m.def("verifying_cost",
        [](const BipartiteGraph& g, const std::vector<int>& z) {
          return verifying_cost(g, to_vertex_set(g.vertex_count(), z));
        },
        py::arg("graph"), py::arg("vertices"));
  m.def("is_verifying",
        [](const BipartiteGraph& g, const std::vector<int>& z, const Matching& m_) {
          return is_verifying(g, to_vertex_set(g.vertex_count(), z), m_);
        },
        py::arg("graph"), py::arg("vertices"), py::arg("matching"));
  m.def("ideal_to_verifying",
        [](const Decomposition& d, const std::vector<int>& lower,
           const std::vector<int>& upper) {
          return ideal_to_verifying(d, NormalizedIdealPair{lower, upper}).to_vector();
        },
        py::arg("decomposition"), py::arg("lower"), py::arg("upper"));
  m.def("verifying_to_ideal",
        [](const BipartiteGraph& g, const Decomposition& d, const std::vector<int>& z) {
          NormalizedIdealPair p =
              verifying_to_ideal(g, d, to_vertex_set(g.vertex_count(), z));
          return std::make_pair(p.lower, p.upper);
        },
        py::arg("graph"), py::arg("decomposition"), py::arg("vertices"));
  m.def("enumerate_verifying_sets",
        [](const Decomposition& d, std::int64_t cap) {
          VerifyingFamily family = enumerate_verifying_sets(d, cap);
          std::vector<std::vector<int>> sets;
          sets.reserve(family.sets.size());
          for (const VertexSet& z : family.sets) sets.push_back(z.to_vector());
          return std::make_pair(sets, family.truncated);
        },
        py::arg("decomposition"), py::arg("cap") = 1000);

  m.def("oracle_report",
        [](const BipartiteGraph& g) {
          OracleReport r = oracle_report(g);
          py::dict out;
          out["max_size"] = r.max_size;
          out["min_verifying_cost"] = r.min_verifying_cost;
          out["all_max_matchings"] = r.all_max_matchings;
          std::vector<std::string> classes;
          for (EdgeClass c : r.edge_class) classes.emplace_back(edge_class_name(c));
          out["edge_class"] = classes;
          out["d_set"] = r.d_set.to_vector();
          std::vector<std::pair<std::vector<int>, std::string>> comps;
          for (const auto& [vertices, kind] : r.components) {
            comps.emplace_back(vertices.to_vector(), kind_name(kind));
          }
          out["components"] = comps;
          std::vector<std::vector<int>> sets;
          for (const VertexSet& z : r.verifying_sets) sets.push_back(z.to_vector());
          out["verifying_sets"] = sets;
          return out;
        },
        py::arg("graph"));
  m.def("equivalence_check",
        [](const BipartiteGraph& g) {
          EquivalenceReport r = equivalence_check(g);
          return std::make_pair(r.ok, r.divergence);
        },
        py::arg("graph"));

  m.def("random_instance",
        [](std::uint64_t seed, std::uint64_t index) { return random_instance(seed, index); },
        py::arg("seed"), py::arg("index"));
  m.def("graph_from_json", &graph_from_string, py::arg("text"));
  m.def("graph_to_json",
        [](const BipartiteGraph& g) { return graph_to_json(g).dump(2); }, py::arg("graph"));
  m.def("decomposition_document",
        [](const BipartiteGraph& g, const Decomposition& d) {
          EdgeClassification cls = classify_edges(g, d.matching(), d);
          return decomposition_document(g, d, cls).dump(2);
        },
        py::arg("graph"), py::arg("decomposition"),
        "The decomposition document as a JSON string (schema_version 1).");
  m.def("dot_export", &dot_export, py::arg("decomposition"), py::arg("reduce") = false);
}
