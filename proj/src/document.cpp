#include "bmdm/document.hpp"

#include <sstream>

namespace bmdm {

std::string vertex_name(const BipartiteGraph& g, int v) {
  if (v < 0 || v >= g.vertex_count()) {
    throw Error(Errc::IndexOutOfRange, "vertex " + std::to_string(v));
  }
  if (v < g.a_count()) return "a" + std::to_string(v);
  return "b" + std::to_string(v - g.a_count());
}

int vertex_id(const BipartiteGraph& g, const std::string& name) {
  if (name.size() < 2 || (name[0] != 'a' && name[0] != 'b')) {
    throw Error(Errc::ParseError, "bad vertex name '" + name + "'");
  }
  int index = 0;
  for (std::size_t i = 1; i < name.size(); ++i) {
    if (name[i] < '0' || name[i] > '9' || index > g.vertex_count()) {
      throw Error(Errc::ParseError, "bad vertex name '" + name + "'");
    }
    index = index * 10 + (name[i] - '0');
  }
  if (name[0] == 'a') {
    if (index >= g.a_count()) {
      throw Error(Errc::ParseError, "vertex '" + name + "' out of range");
    }
    return index;
  }
  if (index >= g.b_count()) {
    throw Error(Errc::ParseError, "vertex '" + name + "' out of range");
  }
  return g.a_count() + index;
}

BipartiteGraph graph_from_json(const nlohmann::json& doc) {
  if (!doc.is_object()) {
    throw Error(Errc::ParseError, "top-level value is not an object");
  }
  if (!doc.contains("a") || !doc.contains("b") || !doc["a"].is_number_integer() ||
      !doc["b"].is_number_integer()) {
    throw Error(Errc::ParseError, "missing or non-integer class sizes 'a'/'b'");
  }
  int a = doc["a"].get<int>();
  int b = doc["b"].get<int>();
  if (a < 0 || b < 0) {
    throw Error(Errc::ParseError, "negative class size");
  }

  std::vector<std::pair<int, int>> edges;
  if (doc.contains("edges")) {
    if (!doc["edges"].is_array()) {
      throw Error(Errc::ParseError, "'edges' is not an array");
    }
    for (const auto& item : doc["edges"]) {
      if (!item.is_array() || item.size() != 2 || !item[0].is_number_integer() ||
          !item[1].is_number_integer()) {
        throw Error(Errc::ParseError, "each edge must be a pair of integers");
      }
      edges.emplace_back(item[0].get<int>(), item[1].get<int>());
    }
  }

  std::vector<int> caps(static_cast<std::size_t>(a + b), 1);
  if (doc.contains("cap")) {
    if (!doc["cap"].is_object()) {
      throw Error(Errc::ParseError, "'cap' is not an object");
    }
    for (const auto& [name, value] : doc["cap"].items()) {
      if (!value.is_number_integer()) {
        throw Error(Errc::ParseError, "capacity of '" + name + "' is not an integer");
      }
      if (name.size() < 2 || (name[0] != 'a' && name[0] != 'b')) {
        throw Error(Errc::ParseError, "bad vertex name '" + name + "' in 'cap'");
      }
      int index = 0;
      for (std::size_t i = 1; i < name.size(); ++i) {
        if (name[i] < '0' || name[i] > '9' || index > a + b) {
          throw Error(Errc::ParseError, "bad vertex name '" + name + "' in 'cap'");
        }
        index = index * 10 + (name[i] - '0');
      }
      int v;
      if (name[0] == 'a') {
        if (index >= a) throw Error(Errc::ParseError, "'" + name + "' out of range");
        v = index;
      } else {
        if (index >= b) throw Error(Errc::ParseError, "'" + name + "' out of range");
        v = a + index;
      }
      caps[static_cast<std::size_t>(v)] = value.get<int>();
    }
  }
  return build_graph(a, b, edges, caps);
}

BipartiteGraph graph_from_string(const std::string& text) {
  nlohmann::json doc = nlohmann::json::parse(text, nullptr, false);
  if (doc.is_discarded()) {
    throw Error(Errc::ParseError, "input is not valid JSON");
  }
  return graph_from_json(doc);
}

nlohmann::json graph_to_json(const BipartiteGraph& g) {
  nlohmann::json doc;
  doc["a"] = g.a_count();
  doc["b"] = g.b_count();
  doc["edges"] = nlohmann::json::array();
  for (const Edge& e : g.edges()) {
    doc["edges"].push_back({e.u, e.v - g.a_count()});
  }
  doc["cap"] = nlohmann::json::object();
  for (int v = 0; v < g.vertex_count(); ++v) {
    doc["cap"][vertex_name(g, v)] = g.cap(v);
  }
  return doc;
}

namespace {

nlohmann::json name_list(const BipartiteGraph& g, const VertexSet& s) {
  nlohmann::json out = nlohmann::json::array();
  s.for_each([&](int v) { out.push_back(vertex_name(g, v)); });
  return out;
}

}  // namespace

nlohmann::json decomposition_document(const BipartiteGraph& g, const Decomposition& d,
                                      const EdgeClassification& cls) {
  nlohmann::json doc;
  doc["schema_version"] = "1";
  doc["max_size"] = d.matching().size();

  doc["matching"] = nlohmann::json::array();
  for (int e : d.matching().edge_ids()) {
    doc["matching"].push_back(
        {vertex_name(g, g.edge(e).u), vertex_name(g, g.edge(e).v)});
  }

  doc["components"] = nlohmann::json::array();
  for (const FlexComponent& fc : d.components()) {
    nlohmann::json comp;
    comp["id"] = fc.id;
    comp["kind"] = kind_name(fc.kind);
    comp["vertices"] = name_list(g, fc.vertices);
    doc["components"].push_back(std::move(comp));
  }

  doc["order_arcs"] = nlohmann::json::array();
  for (const auto& [from, to] : d.order_arcs()) {
    doc["order_arcs"].push_back({from, to});
  }

  doc["ext_A"] = name_list(g, d.ext(Side::A));
  doc["ext_B"] = name_list(g, d.ext(Side::B));
  doc["D_set"] = name_list(g, loose_attainable(d));

  doc["edge_classes"] = nlohmann::json::object();
  for (int e = 0; e < g.edge_count(); ++e) {
    std::string key =
        vertex_name(g, g.edge(e).u) + "-" + vertex_name(g, g.edge(e).v);
    doc["edge_classes"][key] = edge_class_name(cls.class_of[static_cast<std::size_t>(e)]);
  }

  auto [z1, z2] = canonical_verifying_sets(d);
  doc["canonical_verifying"] = nlohmann::json::array();
  doc["canonical_verifying"].push_back(name_list(g, z1));
  doc["canonical_verifying"].push_back(name_list(g, z2));
  return doc;
}

std::string dot_export(const Decomposition& d, bool reduce) {
  std::ostringstream out;
  out << "digraph components {\n";
  for (const FlexComponent& fc : d.components()) {
    out << "  c" << fc.id << " [label=\"C" << fc.id << "[" << kind_name(fc.kind)
        << "]\"];\n";
  }
  const auto arcs = reduce ? d.transitive_reduction() : d.order_arcs();
  for (const auto& [from, to] : arcs) {
    out << "  c" << from << " -> c" << to << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace bmdm
