#pragma once

#include <string>

#include <json.hpp>

#include "bmdm/classification.hpp"
#include "bmdm/decomposition.hpp"
#include "bmdm/graph.hpp"

namespace bmdm {

/// External vertex naming: "a<i>" for the i-th A vertex, "b<j>" for the
/// j-th B vertex. Internal ids never appear in documents.
std::string vertex_name(const BipartiteGraph& g, int v);

/// Inverse of vertex_name; throws ParseError on unknown names.
int vertex_id(const BipartiteGraph& g, const std::string& name);

/// Graph schema:
///   {"a": <int>, "b": <int>, "edges": [[ai, bi], ...],
///    "cap": {"a0": k, ..., "b0": k, ...}}
/// Caps omitted from "cap" (or the whole "cap" object) default to 1.
BipartiteGraph graph_from_json(const nlohmann::json& doc);
BipartiteGraph graph_from_string(const std::string& text);
nlohmann::json graph_to_json(const BipartiteGraph& g);

/// The decomposition document, schema_version "1". Serialization is
/// deterministic: same input graph, same bytes.
nlohmann::json decomposition_document(const BipartiteGraph& g, const Decomposition& d,
                                      const EdgeClassification& cls);

/// Graphviz DOT rendering of the component order; nodes are labeled
/// C<id>[kind]. With `reduce`, transitively implied arcs are dropped.
std::string dot_export(const Decomposition& d, bool reduce);

}  // namespace bmdm
