#include "bmdm/classification.hpp"

#include <algorithm>

namespace bmdm {

const char* edge_class_name(EdgeClass c) noexcept {
  switch (c) {
    case EdgeClass::Forbidden: return "forbidden";
    case EdgeClass::Inevitable: return "inevitable";
    case EdgeClass::Flexible: return "flexible";
  }
  return "unknown";
}

EdgeClassification classify_edges(const BipartiteGraph& g, const Matching& m,
                                  const Decomposition& d) {
  if (d.vertex_count() != g.vertex_count()) {
    throw Error(Errc::InconsistentDecomposition, "decomposition of a different graph");
  }
  require_matching_of(g, m);
  EdgeClassification cls;
  cls.class_of.resize(static_cast<std::size_t>(g.edge_count()));
  for (int e = 0; e < g.edge_count(); ++e) {
    int cu = d.component_of(g.edge(e).u);
    int cv = d.component_of(g.edge(e).v);
    if (cu < 0 || cv < 0) {
      throw Error(Errc::InconsistentDecomposition,
                  "edge endpoint not covered by any component");
    }
    if (cu == cv) {
      cls.class_of[static_cast<std::size_t>(e)] = EdgeClass::Flexible;
    } else if (m.contains(e)) {
      cls.class_of[static_cast<std::size_t>(e)] = EdgeClass::Inevitable;
    } else {
      cls.class_of[static_cast<std::size_t>(e)] = EdgeClass::Forbidden;
    }
  }
  return cls;
}

VertexSet loose_attainable(const Decomposition& d) {
  VertexSet out(d.vertex_count());
  d.ext(Side::A).for_each([&](int v) {
    if (v < d.a_count()) out.insert(v);
  });
  d.ext(Side::B).for_each([&](int v) {
    if (v >= d.a_count()) out.insert(v);
  });
  return out;
}

std::vector<VertexSet> elementary_components(const BipartiteGraph& g,
                                             const EdgeClassification& cls) {
  if (static_cast<int>(cls.class_of.size()) != g.edge_count()) {
    throw Error(Errc::InconsistentDecomposition, "classification of a different graph");
  }
  const int n = g.vertex_count();
  std::vector<VertexSet> comps;
  VertexSet seen(n);
  for (int root = 0; root < n; ++root) {
    if (seen.contains(root)) continue;
    VertexSet members(n);
    std::vector<int> frontier{root};
    seen.insert(root);
    while (!frontier.empty()) {
      int v = frontier.back();
      frontier.pop_back();
      members.insert(v);
      for (int e : g.incident(v)) {
        if (cls.class_of[static_cast<std::size_t>(e)] == EdgeClass::Forbidden) continue;
        int w = g.other_end(e, v);
        if (!seen.contains(w)) {
          seen.insert(w);
          frontier.push_back(w);
        }
      }
    }
    comps.push_back(std::move(members));
  }
  return comps;
}

std::pair<VertexSet, VertexSet> canonical_verifying_sets(const Decomposition& d) {
  const int n = d.vertex_count();
  VertexSet side_a(n);
  for (int v = 0; v < d.a_count(); ++v) side_a.insert(v);
  VertexSet side_b = side_a.complement();
  VertexSet z1 = (d.ext(Side::A) & side_a) | (side_b - d.ext(Side::A));
  VertexSet z2 = (d.ext(Side::B) & side_b) | (side_a - d.ext(Side::B));
  return {z1, z2};
}

}  // namespace bmdm
