#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

#include "bmdm/errors.hpp"

namespace bmdm {

/// Color class of a bipartite graph.
enum class Side { A, B };

constexpr Side opposite(Side s) noexcept {
  return s == Side::A ? Side::B : Side::A;
}

/// Subset of the vertices of one graph, stored as a bitmap.
/// Vertices are dense integer ids in [0, universe()).
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(int universe);

  static VertexSet full(int universe);
  static VertexSet of(int universe, std::initializer_list<int> members);

  int universe() const noexcept { return universe_; }
  bool contains(int v) const;
  void insert(int v);
  void erase(int v);
  int count() const noexcept;
  bool empty() const noexcept { return count() == 0; }

  /// V(G) \ X.
  VertexSet complement() const;

  bool intersects(const VertexSet& other) const;
  bool is_subset_of(const VertexSet& other) const;

  /// Members in ascending order.
  std::vector<int> to_vector() const;

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits != 0) {
        int b = count_trailing(bits);
        f(static_cast<int>(w * 64) + b);
        bits &= bits - 1;
      }
    }
  }

  friend VertexSet operator&(const VertexSet& a, const VertexSet& b);
  friend VertexSet operator|(const VertexSet& a, const VertexSet& b);
  friend VertexSet operator-(const VertexSet& a, const VertexSet& b);
  friend bool operator==(const VertexSet& a, const VertexSet& b);

  /// Lexicographic order on membership bitmaps, lowest vertex id first and
  /// absent < present. Canonical ordering for set families.
  static bool lex_less(const VertexSet& a, const VertexSet& b);

 private:
  static int count_trailing(std::uint64_t bits) noexcept;
  void check_range(int v) const;
  static void check_same_universe(const VertexSet& a, const VertexSet& b);

  int universe_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Undirected edge; `u` is always the A-side endpoint, `v` the B-side one.
/// Endpoints are global vertex ids.
struct Edge {
  int u;
  int v;
};

/// Immutable bipartite graph with per-vertex capacities.
///
/// Vertex ids are dense: the A class occupies [0, a_count()) and the B class
/// [a_count(), a_count() + b_count()). Safe to read concurrently.
class BipartiteGraph {
 public:
  BipartiteGraph() = default;

  int a_count() const noexcept { return a_count_; }
  int b_count() const noexcept { return b_count_; }
  int vertex_count() const noexcept { return a_count_ + b_count_; }
  int edge_count() const noexcept { return static_cast<int>(edges_.size()); }

  Side side(int v) const { return v < a_count_ ? Side::A : Side::B; }
  int cap(int v) const { return caps_.at(static_cast<std::size_t>(v)); }
  const std::vector<int>& caps() const noexcept { return caps_; }

  const Edge& edge(int e) const { return edges_.at(static_cast<std::size_t>(e)); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  /// Ids of edges incident to v, ascending.
  std::span<const int> incident(int v) const;
  int degree(int v) const;
  int other_end(int e, int v) const;

  VertexSet all_vertices() const { return VertexSet::full(vertex_count()); }
  VertexSet side_set(Side s) const;

  /// Sum of capacities over X, i.e. b(X).
  long long cap_sum(const VertexSet& x) const;

  /// N(X): vertices adjacent to X and not themselves in X.
  VertexSet neighbors(const VertexSet& x) const;

  /// E[X]: ids of edges with both ends in X, ascending.
  std::vector<int> edges_within(const VertexSet& x) const;

  /// E[X, Y]: ids of edges with one end in X and the other in Y, ascending.
  std::vector<int> edges_between(const VertexSet& x, const VertexSet& y) const;

  /// cut(X) = E[X, V \ X].
  std::vector<int> cut(const VertexSet& x) const;

  friend BipartiteGraph build_graph(int a_count, int b_count,
                                    const std::vector<std::pair<int, int>>& edge_pairs,
                                    const std::vector<int>& caps);

 private:
  int a_count_ = 0;
  int b_count_ = 0;
  std::vector<Edge> edges_;
  std::vector<int> caps_;
  std::vector<int> adj_offsets_;
  std::vector<int> adj_edges_;
};

/// Validates and builds a graph. Edges are given as (a_index, b_index) pairs
/// local to each class; `caps` holds one capacity per global vertex id and
/// may be empty, which means b == 1 everywhere.
BipartiteGraph build_graph(int a_count, int b_count,
                           const std::vector<std::pair<int, int>>& edge_pairs,
                           const std::vector<int>& caps = {});

}  // namespace bmdm
