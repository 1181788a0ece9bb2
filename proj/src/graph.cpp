#include "bmdm/graph.hpp"

#include <algorithm>
#include <bit>
#include <string>
#include <unordered_set>

namespace bmdm {

const char* errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::DuplicateEdge: return "DuplicateEdge";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::NegativeCapacity: return "NegativeCapacity";
    case Errc::UnknownEdgeId: return "UnknownEdgeId";
    case Errc::NotABMatching: return "NotABMatching";
    case Errc::NotMaximumMatching: return "NotMaximumMatching";
    case Errc::UnknownComponent: return "UnknownComponent";
    case Errc::InconsistentDecomposition: return "InconsistentDecomposition";
    case Errc::NotAnIdeal: return "NotAnIdeal";
    case Errc::NotNormalized: return "NotNormalized";
    case Errc::NotVerifying: return "NotVerifying";
    case Errc::MalformedSet: return "MalformedSet";
    case Errc::TooLarge: return "TooLarge";
    case Errc::ParseError: return "ParseError";
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::InternalInvariant: return "InternalInvariant";
  }
  return "UnknownError";
}

VertexSet::VertexSet(int universe) : universe_(universe) {
  if (universe < 0) {
    throw Error(Errc::IndexOutOfRange, "negative universe size");
  }
  words_.assign((static_cast<std::size_t>(universe) + 63) / 64, 0);
}

VertexSet VertexSet::full(int universe) {
  VertexSet s(universe);
  for (std::size_t w = 0; w < s.words_.size(); ++w) {
    s.words_[w] = ~std::uint64_t{0};
  }
  int tail = universe % 64;
  if (tail != 0 && !s.words_.empty()) {
    s.words_.back() = (std::uint64_t{1} << tail) - 1;
  }
  return s;
}

VertexSet VertexSet::of(int universe, std::initializer_list<int> members) {
  VertexSet s(universe);
  for (int v : members) s.insert(v);
  return s;
}

int VertexSet::count_trailing(std::uint64_t bits) noexcept {
  return std::countr_zero(bits);
}

void VertexSet::check_range(int v) const {
  if (v < 0 || v >= universe_) {
    throw Error(Errc::IndexOutOfRange,
                "vertex " + std::to_string(v) + " outside universe of size " +
                    std::to_string(universe_));
  }
}

void VertexSet::check_same_universe(const VertexSet& a, const VertexSet& b) {
  if (a.universe_ != b.universe_) {
    throw Error(Errc::IndexOutOfRange, "vertex sets over different universes");
  }
}

bool VertexSet::contains(int v) const {
  check_range(v);
  return (words_[static_cast<std::size_t>(v) / 64] >> (v % 64)) & 1u;
}

void VertexSet::insert(int v) {
  check_range(v);
  words_[static_cast<std::size_t>(v) / 64] |= std::uint64_t{1} << (v % 64);
}

void VertexSet::erase(int v) {
  check_range(v);
  words_[static_cast<std::size_t>(v) / 64] &= ~(std::uint64_t{1} << (v % 64));
}

int VertexSet::count() const noexcept {
  int total = 0;
  for (std::uint64_t w : words_) total += std::popcount(w);
  return total;
}

VertexSet VertexSet::complement() const {
  VertexSet out = full(universe_);
  for (std::size_t w = 0; w < words_.size(); ++w) {
    out.words_[w] &= ~words_[w];
  }
  return out;
}

bool VertexSet::intersects(const VertexSet& other) const {
  check_same_universe(*this, other);
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if ((words_[w] & other.words_[w]) != 0) return true;
  }
  return false;
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
  check_same_universe(*this, other);
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if ((words_[w] & ~other.words_[w]) != 0) return false;
  }
  return true;
}

std::vector<int> VertexSet::to_vector() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(count()));
  for_each([&out](int v) { out.push_back(v); });
  return out;
}

VertexSet operator&(const VertexSet& a, const VertexSet& b) {
  VertexSet::check_same_universe(a, b);
  VertexSet out(a.universe_);
  for (std::size_t w = 0; w < out.words_.size(); ++w) {
    out.words_[w] = a.words_[w] & b.words_[w];
  }
  return out;
}

VertexSet operator|(const VertexSet& a, const VertexSet& b) {
  VertexSet::check_same_universe(a, b);
  VertexSet out(a.universe_);
  for (std::size_t w = 0; w < out.words_.size(); ++w) {
    out.words_[w] = a.words_[w] | b.words_[w];
  }
  return out;
}

VertexSet operator-(const VertexSet& a, const VertexSet& b) {
  VertexSet::check_same_universe(a, b);
  VertexSet out(a.universe_);
  for (std::size_t w = 0; w < out.words_.size(); ++w) {
    out.words_[w] = a.words_[w] & ~b.words_[w];
  }
  return out;
}

bool operator==(const VertexSet& a, const VertexSet& b) {
  return a.universe_ == b.universe_ && a.words_ == b.words_;
}

bool VertexSet::lex_less(const VertexSet& a, const VertexSet& b) {
  check_same_universe(a, b);
  for (std::size_t w = 0; w < a.words_.size(); ++w) {
    std::uint64_t diff = a.words_[w] ^ b.words_[w];
    if (diff != 0) {
      // The lowest differing vertex decides; absent sorts before present.
      int bit = count_trailing(diff);
      return ((a.words_[w] >> bit) & 1u) == 0;
    }
  }
  return false;
}

std::span<const int> BipartiteGraph::incident(int v) const {
  if (v < 0 || v >= vertex_count()) {
    throw Error(Errc::IndexOutOfRange, "vertex " + std::to_string(v));
  }
  auto begin = adj_edges_.data() + adj_offsets_[static_cast<std::size_t>(v)];
  auto end = adj_edges_.data() + adj_offsets_[static_cast<std::size_t>(v) + 1];
  return {begin, end};
}

int BipartiteGraph::degree(int v) const {
  return static_cast<int>(incident(v).size());
}

int BipartiteGraph::other_end(int e, int v) const {
  const Edge& ed = edge(e);
  if (ed.u == v) return ed.v;
  if (ed.v == v) return ed.u;
  throw Error(Errc::IndexOutOfRange,
              "vertex " + std::to_string(v) + " not an end of edge " + std::to_string(e));
}

VertexSet BipartiteGraph::side_set(Side s) const {
  VertexSet out(vertex_count());
  int lo = s == Side::A ? 0 : a_count_;
  int hi = s == Side::A ? a_count_ : vertex_count();
  for (int v = lo; v < hi; ++v) out.insert(v);
  return out;
}

long long BipartiteGraph::cap_sum(const VertexSet& x) const {
  long long total = 0;
  x.for_each([&](int v) { total += caps_[static_cast<std::size_t>(v)]; });
  return total;
}

VertexSet BipartiteGraph::neighbors(const VertexSet& x) const {
  VertexSet out(vertex_count());
  x.for_each([&](int v) {
    for (int e : incident(v)) {
      out.insert(other_end(e, v));
    }
  });
  return out - x;
}

std::vector<int> BipartiteGraph::edges_within(const VertexSet& x) const {
  std::vector<int> out;
  for (int e = 0; e < edge_count(); ++e) {
    if (x.contains(edges_[static_cast<std::size_t>(e)].u) &&
        x.contains(edges_[static_cast<std::size_t>(e)].v)) {
      out.push_back(e);
    }
  }
  return out;
}

std::vector<int> BipartiteGraph::edges_between(const VertexSet& x,
                                               const VertexSet& y) const {
  std::vector<int> out;
  for (int e = 0; e < edge_count(); ++e) {
    const Edge& ed = edges_[static_cast<std::size_t>(e)];
    bool forward = x.contains(ed.u) && y.contains(ed.v);
    bool backward = y.contains(ed.u) && x.contains(ed.v);
    if (forward || backward) out.push_back(e);
  }
  return out;
}

std::vector<int> BipartiteGraph::cut(const VertexSet& x) const {
  std::vector<int> out;
  for (int e = 0; e < edge_count(); ++e) {
    const Edge& ed = edges_[static_cast<std::size_t>(e)];
    if (x.contains(ed.u) != x.contains(ed.v)) out.push_back(e);
  }
  return out;
}

BipartiteGraph build_graph(int a_count, int b_count,
                           const std::vector<std::pair<int, int>>& edge_pairs,
                           const std::vector<int>& caps) {
  if (a_count < 0 || b_count < 0) {
    throw Error(Errc::IndexOutOfRange, "negative class size");
  }
  BipartiteGraph g;
  g.a_count_ = a_count;
  g.b_count_ = b_count;

  const int n = a_count + b_count;
  if (caps.empty()) {
    g.caps_.assign(static_cast<std::size_t>(n), 1);
  } else {
    if (static_cast<int>(caps.size()) != n) {
      throw Error(Errc::IndexOutOfRange,
                  "capacity vector has size " + std::to_string(caps.size()) +
                      ", expected " + std::to_string(n));
    }
    for (int v = 0; v < n; ++v) {
      if (caps[static_cast<std::size_t>(v)] < 0) {
        throw Error(Errc::NegativeCapacity,
                    "vertex " + std::to_string(v) + " has capacity " +
                        std::to_string(caps[static_cast<std::size_t>(v)]));
      }
    }
    g.caps_ = caps;
  }

  g.edges_.reserve(edge_pairs.size());
  std::unordered_set<std::uint64_t> seen;
  seen.reserve(edge_pairs.size() * 2);
  for (const auto& [ai, bi] : edge_pairs) {
    if (ai < 0 || ai >= a_count || bi < 0 || bi >= b_count) {
      throw Error(Errc::IndexOutOfRange,
                  "edge (" + std::to_string(ai) + ", " + std::to_string(bi) + ")");
    }
    std::uint64_t key =
        (static_cast<std::uint64_t>(ai) << 32) | static_cast<std::uint32_t>(bi);
    if (!seen.insert(key).second) {
      throw Error(Errc::DuplicateEdge,
                  "edge (" + std::to_string(ai) + ", " + std::to_string(bi) +
                      ") appears twice");
    }
    g.edges_.push_back(Edge{ai, a_count + bi});
  }

  g.adj_offsets_.assign(static_cast<std::size_t>(n) + 1, 0);
  for (const Edge& e : g.edges_) {
    ++g.adj_offsets_[static_cast<std::size_t>(e.u) + 1];
    ++g.adj_offsets_[static_cast<std::size_t>(e.v) + 1];
  }
  for (int v = 0; v < n; ++v) {
    g.adj_offsets_[static_cast<std::size_t>(v) + 1] +=
        g.adj_offsets_[static_cast<std::size_t>(v)];
  }
  g.adj_edges_.resize(g.edges_.size() * 2);
  std::vector<int> cursor(g.adj_offsets_.begin(), g.adj_offsets_.end() - 1);
  for (int e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edges_[static_cast<std::size_t>(e)];
    g.adj_edges_[static_cast<std::size_t>(cursor[static_cast<std::size_t>(ed.u)]++)] = e;
    g.adj_edges_[static_cast<std::size_t>(cursor[static_cast<std::size_t>(ed.v)]++)] = e;
  }
  return g;
}

}  // namespace bmdm
