#pragma once

// Small instances shared across the test suites. Vertex ids follow the
// builder: A block first, so e.g. path3() has a0=0, a1=1, b0=2.

#include <random>
#include <utility>
#include <vector>

#include "bmdm/decomposition.hpp"
#include "bmdm/graph.hpp"

namespace bmdm::testing {

/// a0 - b0 - a1, unit capacities.
inline BipartiteGraph path3() {
  return build_graph(2, 1, {{0, 0}, {1, 0}});
}

/// Four-cycle a0b0, a0b1, a1b0, a1b1, unit capacities.
inline BipartiteGraph cycle4() {
  return build_graph(2, 2, {{0, 0}, {0, 1}, {1, 0}, {1, 1}});
}

/// Edges a0b0, a1b1, a0b1 with unit capacities; the unique maximum matching
/// is {a0b0, a1b1}, which makes a0b1 forbidden and the others inevitable.
inline BipartiteGraph chain4() {
  return build_graph(2, 2, {{0, 0}, {1, 1}, {0, 1}});
}

/// Star a0, a1, a2 - b0 with cap(b0) = 2.
inline BipartiteGraph star3() {
  return build_graph(3, 1, {{0, 0}, {1, 0}, {2, 0}}, {1, 1, 1, 2});
}

/// Single edge with cap(a0) = 2: a0 stays loose under the unique maximum.
inline BipartiteGraph single_edge_cap2() {
  return build_graph(1, 1, {{0, 0}}, {2, 1});
}

/// a0 - b0 - a1 with cap(b0) = 0: the only matching is empty.
inline BipartiteGraph path3_inactive_center() {
  return build_graph(2, 1, {{0, 0}, {1, 0}}, {1, 1, 0});
}

/// Three four-cycle blocks chained by forbidden edges; the middle arc of the
/// component order is implied by the other two, so the transitive reduction
/// is a proper subset of the generating arcs.
inline BipartiteGraph three_blocks() {
  return build_graph(6, 6,
                     {{0, 0}, {0, 1}, {1, 0}, {1, 1},   // block 0
                      {2, 2}, {2, 3}, {3, 2}, {3, 3},   // block 1
                      {4, 4}, {4, 5}, {5, 4}, {5, 5},   // block 2
                      {2, 0},                            // block0 <= block1
                      {4, 2},                            // block1 <= block2
                      {5, 1}});                          // block0 <= block2 (implied)
}

/// Dense 4x4 instance with capacities in {1, 2}. These carry many maximum
/// matchings, so replay-style tests actually replay something.
inline BipartiteGraph dense4x4(std::uint64_t index) {
  std::seed_seq seq{std::uint64_t{7777}, index};
  std::mt19937_64 rng(seq);
  std::vector<int> caps;
  for (int v = 0; v < 8; ++v) caps.push_back(1 + static_cast<int>(rng() % 2));
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      if (rng() % 100 < 65) edges.emplace_back(i, j);
    }
  }
  return build_graph(4, 4, edges, caps);
}

/// Same graph with the color classes exchanged, plus the vertex relabeling
/// old id -> new id.
inline std::pair<BipartiteGraph, std::vector<int>> swap_sides(const BipartiteGraph& g) {
  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<std::size_t>(g.edge_count()));
  for (const Edge& e : g.edges()) {
    edges.emplace_back(e.v - g.a_count(), e.u);
  }
  std::vector<int> caps(static_cast<std::size_t>(g.vertex_count()));
  std::vector<int> remap(static_cast<std::size_t>(g.vertex_count()));
  for (int v = 0; v < g.vertex_count(); ++v) {
    int mapped = v < g.a_count() ? g.b_count() + v : v - g.a_count();
    remap[static_cast<std::size_t>(v)] = mapped;
    caps[static_cast<std::size_t>(mapped)] = g.cap(v);
  }
  return {build_graph(g.b_count(), g.a_count(), edges, caps), remap};
}

/// Closure of the component order as a dense boolean matrix.
inline std::vector<std::vector<bool>> closure_matrix(const Decomposition& d) {
  int k = d.component_count();
  std::vector<std::vector<bool>> leq(static_cast<std::size_t>(k),
                                     std::vector<bool>(static_cast<std::size_t>(k)));
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      leq[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = d.poset_leq(i, j);
    }
  }
  return leq;
}

}  // namespace bmdm::testing
