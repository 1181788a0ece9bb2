#include "bmdm/matching.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <string>

namespace bmdm {

Matching Matching::from_edge_ids(const BipartiteGraph& g, std::span<const int> ids) {
  Matching m;
  m.member_.assign(static_cast<std::size_t>(g.edge_count()), 0);
  m.loads_.assign(static_cast<std::size_t>(g.vertex_count()), 0);
  for (int e : ids) {
    if (e < 0 || e >= g.edge_count()) {
      throw Error(Errc::UnknownEdgeId, "edge id " + std::to_string(e));
    }
    m.member_[static_cast<std::size_t>(e)] = 1;
  }
  for (int e = 0; e < g.edge_count(); ++e) {
    if (m.member_[static_cast<std::size_t>(e)] == 0) continue;
    m.ids_.push_back(e);
    ++m.loads_[static_cast<std::size_t>(g.edge(e).u)];
    ++m.loads_[static_cast<std::size_t>(g.edge(e).v)];
  }
  m.size_ = static_cast<int>(m.ids_.size());
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (m.loads_[static_cast<std::size_t>(v)] > g.cap(v)) {
      throw Error(Errc::NotABMatching,
                  "vertex " + std::to_string(v) + " loaded " +
                      std::to_string(m.loads_[static_cast<std::size_t>(v)]) +
                      " over capacity " + std::to_string(g.cap(v)));
    }
  }
  return m;
}

bool is_b_matching(const BipartiteGraph& g, std::span<const int> edge_ids) {
  std::vector<std::uint8_t> member(static_cast<std::size_t>(g.edge_count()), 0);
  for (int e : edge_ids) {
    if (e < 0 || e >= g.edge_count()) {
      throw Error(Errc::UnknownEdgeId, "edge id " + std::to_string(e));
    }
    member[static_cast<std::size_t>(e)] = 1;
  }
  std::vector<int> loads(static_cast<std::size_t>(g.vertex_count()), 0);
  for (int e = 0; e < g.edge_count(); ++e) {
    if (member[static_cast<std::size_t>(e)] == 0) continue;
    if (++loads[static_cast<std::size_t>(g.edge(e).u)] > g.cap(g.edge(e).u)) return false;
    if (++loads[static_cast<std::size_t>(g.edge(e).v)] > g.cap(g.edge(e).v)) return false;
  }
  return true;
}

namespace {

// Dinic max-flow on the standard degree-constrained network: source -> A
// vertex arcs of capacity b(v), one unit arc per graph edge, B vertex -> sink
// arcs of capacity b(v). Arc lists are built in ascending id order and the
// search visits them in that order, which fixes the resulting matching.
class FlowNetwork {
 public:
  explicit FlowNetwork(int node_count) : heads_(static_cast<std::size_t>(node_count), -1) {}

  int add_arc(int from, int to, int capacity) {
    int id = static_cast<int>(to_.size());
    to_.push_back(to);
    cap_.push_back(capacity);
    next_.push_back(heads_[static_cast<std::size_t>(from)]);
    heads_[static_cast<std::size_t>(from)] = id;
    to_.push_back(from);
    cap_.push_back(0);
    next_.push_back(heads_[static_cast<std::size_t>(to)]);
    heads_[static_cast<std::size_t>(to)] = id + 1;
    return id;
  }

  long long max_flow(int source, int sink) {
    long long total = 0;
    while (bfs(source, sink)) {
      iter_ = heads_;
      long long pushed;
      while ((pushed = dfs(source, sink, std::numeric_limits<int>::max())) > 0) {
        total += pushed;
      }
    }
    return total;
  }

  int residual(int arc) const { return cap_[static_cast<std::size_t>(arc)]; }

 private:
  bool bfs(int source, int sink) {
    level_.assign(heads_.size(), -1);
    level_[static_cast<std::size_t>(source)] = 0;
    std::queue<int> q;
    q.push(source);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int a = heads_[static_cast<std::size_t>(v)]; a != -1;
           a = next_[static_cast<std::size_t>(a)]) {
        int w = to_[static_cast<std::size_t>(a)];
        if (cap_[static_cast<std::size_t>(a)] > 0 && level_[static_cast<std::size_t>(w)] < 0) {
          level_[static_cast<std::size_t>(w)] = level_[static_cast<std::size_t>(v)] + 1;
          q.push(w);
        }
      }
    }
    return level_[static_cast<std::size_t>(sink)] >= 0;
  }

  int dfs(int v, int sink, int limit) {
    if (v == sink) return limit;
    for (int& a = iter_[static_cast<std::size_t>(v)]; a != -1;
         a = next_[static_cast<std::size_t>(a)]) {
      int w = to_[static_cast<std::size_t>(a)];
      if (cap_[static_cast<std::size_t>(a)] <= 0 ||
          level_[static_cast<std::size_t>(w)] != level_[static_cast<std::size_t>(v)] + 1) {
        continue;
      }
      int pushed = dfs(w, sink, std::min(limit, cap_[static_cast<std::size_t>(a)]));
      if (pushed > 0) {
        cap_[static_cast<std::size_t>(a)] -= pushed;
        cap_[static_cast<std::size_t>(a ^ 1)] += pushed;
        return pushed;
      }
    }
    return 0;
  }

  std::vector<int> heads_;
  std::vector<int> to_;
  std::vector<int> cap_;
  std::vector<int> next_;
  std::vector<int> level_;
  std::vector<int> iter_;
};

}  // namespace

Matching max_b_matching(const BipartiteGraph& g) {
  const int n = g.vertex_count();
  const int source = n;
  const int sink = n + 1;
  FlowNetwork net(n + 2);

  // Adjacency lists are intrusive stacks, so arcs are pushed in descending
  // id order to make the solver visit them ascending.
  for (int v = g.a_count() - 1; v >= 0; --v) {
    net.add_arc(source, v, g.cap(v));
  }
  for (int v = n - 1; v >= g.a_count(); --v) {
    net.add_arc(v, sink, g.cap(v));
  }
  std::vector<int> edge_arc(static_cast<std::size_t>(g.edge_count()), -1);
  for (int e = g.edge_count() - 1; e >= 0; --e) {
    edge_arc[static_cast<std::size_t>(e)] = net.add_arc(g.edge(e).u, g.edge(e).v, 1);
  }

  net.max_flow(source, sink);

  std::vector<int> chosen;
  for (int e = 0; e < g.edge_count(); ++e) {
    if (net.residual(edge_arc[static_cast<std::size_t>(e)]) == 0) {
      chosen.push_back(e);
    }
  }
  return Matching::from_edge_ids(g, chosen);
}

void require_matching_of(const BipartiteGraph& g, const Matching& m) {
  if (m.vertex_count() != g.vertex_count() || m.edge_universe() != g.edge_count()) {
    throw Error(Errc::NotABMatching, "matching belongs to a different graph");
  }
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (m.load(v) > g.cap(v)) {
      throw Error(Errc::NotABMatching,
                  "vertex " + std::to_string(v) + " loaded over capacity");
    }
  }
}

VertexSet loose_vertices(const BipartiteGraph& g, const Matching& m, Side side) {
  require_matching_of(g, m);
  VertexSet out(g.vertex_count());
  int lo = side == Side::A ? 0 : g.a_count();
  int hi = side == Side::A ? g.a_count() : g.vertex_count();
  for (int v = lo; v < hi; ++v) {
    if (m.load(v) < g.cap(v)) out.insert(v);
  }
  return out;
}

}  // namespace bmdm
