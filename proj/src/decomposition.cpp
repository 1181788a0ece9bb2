#include "bmdm/decomposition.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <string>

namespace bmdm {

const char* kind_name(ComponentKind k) noexcept {
  switch (k) {
    case ComponentKind::Consistent: return "consistent";
    case ComponentKind::LooseHookedA: return "loose_hooked_a";
    case ComponentKind::LooseHookedB: return "loose_hooked_b";
    case ComponentKind::InactiveHookedA: return "inactive_hooked_a";
    case ComponentKind::InactiveHookedB: return "inactive_hooked_b";
  }
  return "unknown";
}

namespace {

void build_arc_csr(AuxDigraph& d) {
  d.out_offsets.assign(static_cast<std::size_t>(d.n) + 1, 0);
  for (const auto& [from, to] : d.arcs) {
    (void)to;
    ++d.out_offsets[static_cast<std::size_t>(from) + 1];
  }
  for (int v = 0; v < d.n; ++v) {
    d.out_offsets[static_cast<std::size_t>(v) + 1] += d.out_offsets[static_cast<std::size_t>(v)];
  }
  d.out_to.resize(d.arcs.size());
  std::vector<int> cursor(d.out_offsets.begin(), d.out_offsets.end() - 1);
  for (const auto& [from, to] : d.arcs) {
    d.out_to[static_cast<std::size_t>(cursor[static_cast<std::size_t>(from)]++)] = to;
  }
}

}  // namespace

AuxDigraph build_aux(const BipartiteGraph& g, Side w1, const Matching& m,
                     const VertexSet& restrict_to) {
  require_matching_of(g, m);
  if (restrict_to.universe() != g.vertex_count()) {
    throw Error(Errc::IndexOutOfRange, "restriction set over a different universe");
  }
  AuxDigraph d;
  d.n = g.vertex_count();
  d.domain = restrict_to;
  d.arcs.reserve(static_cast<std::size_t>(g.edge_count()));
  for (int e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    if (!restrict_to.contains(ed.u) || !restrict_to.contains(ed.v)) continue;
    int in_w1 = w1 == Side::A ? ed.u : ed.v;
    int in_w2 = w1 == Side::A ? ed.v : ed.u;
    if (m.contains(e)) {
      d.arcs.emplace_back(in_w2, in_w1);
    } else {
      d.arcs.emplace_back(in_w1, in_w2);
    }
  }
  build_arc_csr(d);
  return d;
}

VertexSet inconsistent_unit(const BipartiteGraph& g, const Matching& m, Side side) {
  AuxDigraph aux = build_aux(g, side, m, g.all_vertices());
  VertexSet reached = loose_vertices(g, m, side);
  std::vector<int> frontier = reached.to_vector();
  while (!frontier.empty()) {
    int v = frontier.back();
    frontier.pop_back();
    for (int w : aux.out(v)) {
      if (!reached.contains(w)) {
        reached.insert(w);
        frontier.push_back(w);
      }
    }
  }
  return reached;
}

SccResult strongly_connected_components(const AuxDigraph& d) {
  const int n = d.n;
  SccResult result;
  result.scc_of.assign(static_cast<std::size_t>(n), -1);

  std::vector<int> index(static_cast<std::size_t>(n), -1);
  std::vector<int> low(static_cast<std::size_t>(n), 0);
  std::vector<std::uint8_t> on_stack(static_cast<std::size_t>(n), 0);
  std::vector<int> stack;
  std::vector<std::pair<int, std::size_t>> frames;
  std::vector<std::vector<int>> comps;
  int next_index = 0;

  for (int root = 0; root < n; ++root) {
    if (!d.domain.contains(root) || index[static_cast<std::size_t>(root)] != -1) continue;
    index[static_cast<std::size_t>(root)] = low[static_cast<std::size_t>(root)] = next_index++;
    stack.push_back(root);
    on_stack[static_cast<std::size_t>(root)] = 1;
    frames.emplace_back(root, 0);
    while (!frames.empty()) {
      int v = frames.back().first;
      std::size_t pos = frames.back().second;
      auto outs = d.out(v);
      if (pos < outs.size()) {
        ++frames.back().second;
        int w = outs[pos];
        if (index[static_cast<std::size_t>(w)] == -1) {
          index[static_cast<std::size_t>(w)] = low[static_cast<std::size_t>(w)] = next_index++;
          stack.push_back(w);
          on_stack[static_cast<std::size_t>(w)] = 1;
          frames.emplace_back(w, 0);
        } else if (on_stack[static_cast<std::size_t>(w)]) {
          low[static_cast<std::size_t>(v)] =
              std::min(low[static_cast<std::size_t>(v)], index[static_cast<std::size_t>(w)]);
        }
      } else {
        frames.pop_back();
        if (!frames.empty()) {
          int parent = frames.back().first;
          low[static_cast<std::size_t>(parent)] =
              std::min(low[static_cast<std::size_t>(parent)], low[static_cast<std::size_t>(v)]);
        }
        if (low[static_cast<std::size_t>(v)] == index[static_cast<std::size_t>(v)]) {
          std::vector<int> members;
          while (true) {
            int w = stack.back();
            stack.pop_back();
            on_stack[static_cast<std::size_t>(w)] = 0;
            members.push_back(w);
            if (w == v) break;
          }
          std::sort(members.begin(), members.end());
          comps.push_back(std::move(members));
        }
      }
    }
  }

  // Renumber components by their smallest contained vertex.
  std::vector<int> order(comps.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&comps](int a, int b) { return comps[static_cast<std::size_t>(a)].front() <
                                            comps[static_cast<std::size_t>(b)].front(); });
  result.components.resize(comps.size());
  std::vector<int> renumber(comps.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    renumber[static_cast<std::size_t>(order[i])] = static_cast<int>(i);
    result.components[i] = std::move(comps[static_cast<std::size_t>(order[i])]);
    for (int v : result.components[i]) {
      result.scc_of[static_cast<std::size_t>(v)] = static_cast<int>(i);
    }
  }

  for (const auto& [from, to] : d.arcs) {
    int cf = result.scc_of[static_cast<std::size_t>(from)];
    int ct = result.scc_of[static_cast<std::size_t>(to)];
    if (cf != ct) result.condensation_arcs.emplace_back(cf, ct);
  }
  std::sort(result.condensation_arcs.begin(), result.condensation_arcs.end());
  result.condensation_arcs.erase(
      std::unique(result.condensation_arcs.begin(), result.condensation_arcs.end()),
      result.condensation_arcs.end());
  return result;
}

namespace {

// Connected components of G[sub], roots visited in ascending vertex order.
std::vector<std::vector<int>> induced_components(const BipartiteGraph& g,
                                                 const VertexSet& sub) {
  std::vector<std::vector<int>> comps;
  VertexSet seen(g.vertex_count());
  sub.for_each([&](int root) {
    if (seen.contains(root)) return;
    std::vector<int> members;
    std::vector<int> frontier{root};
    seen.insert(root);
    while (!frontier.empty()) {
      int v = frontier.back();
      frontier.pop_back();
      members.push_back(v);
      for (int e : g.incident(v)) {
        int w = g.other_end(e, v);
        if (sub.contains(w) && !seen.contains(w)) {
          seen.insert(w);
          frontier.push_back(w);
        }
      }
    }
    std::sort(members.begin(), members.end());
    comps.push_back(std::move(members));
  });
  return comps;
}

}  // namespace

Decomposition decompose(const BipartiteGraph& g, const Matching& m) {
  require_matching_of(g, m);
  const int n = g.vertex_count();

  Decomposition d;
  d.a_count_ = g.a_count();
  d.b_count_ = g.b_count();
  d.matching_ = m;
  d.ext_a_ = inconsistent_unit(g, m, Side::A);
  d.ext_b_ = inconsistent_unit(g, m, Side::B);
  if (d.ext_a_.intersects(d.ext_b_)) {
    throw Error(Errc::NotMaximumMatching,
                "the two inconsistent units overlap; the matching is not maximum");
  }

  // If the matching is maximum, the canonical set built from the A-side unit
  // attains |M|; otherwise its cost exceeds |M| and we reject the input.
  VertexSet z1 = (d.ext_a_ & g.side_set(Side::A)) | (g.side_set(Side::B) - d.ext_a_);
  long long z1_cost = g.cap_sum(z1.complement()) +
                      static_cast<long long>(g.edges_within(z1).size());
  if (z1_cost != m.size()) {
    throw Error(Errc::NotMaximumMatching,
                "canonical set costs " + std::to_string(z1_cost) + " but |M| = " +
                    std::to_string(m.size()));
  }

  VertexSet inactive(n);
  for (int v = 0; v < n; ++v) {
    if (g.cap(v) == 0) inactive.insert(v);
  }
  VertexSet inactive_a = d.ext_a_ & inactive;
  VertexSet inactive_b = d.ext_b_ & inactive;

  struct Raw {
    std::vector<int> members;
    ComponentKind kind;
  };
  std::vector<Raw> raw;
  inactive_a.for_each([&](int v) { raw.push_back({{v}, ComponentKind::InactiveHookedA}); });
  inactive_b.for_each([&](int v) { raw.push_back({{v}, ComponentKind::InactiveHookedB}); });
  for (auto& members : induced_components(g, d.ext_a_ - inactive_a)) {
    raw.push_back({std::move(members), ComponentKind::LooseHookedA});
  }
  for (auto& members : induced_components(g, d.ext_b_ - inactive_b)) {
    raw.push_back({std::move(members), ComponentKind::LooseHookedB});
  }

  VertexSet v0 = (d.ext_a_ | d.ext_b_).complement();
  SccResult scc;
  std::vector<int> scc_representative;
  if (!v0.empty()) {
    AuxDigraph aux0 = build_aux(g, Side::B, m, v0);
    scc = strongly_connected_components(aux0);
    scc_representative.reserve(scc.components.size());
    for (auto& members : scc.components) {
      scc_representative.push_back(members.front());
      raw.push_back({std::move(members), ComponentKind::Consistent});
    }
  }

  std::sort(raw.begin(), raw.end(),
            [](const Raw& a, const Raw& b) { return a.members.front() < b.members.front(); });

  d.comp_of_.assign(static_cast<std::size_t>(n), -1);
  d.components_.reserve(raw.size());
  for (std::size_t i = 0; i < raw.size(); ++i) {
    FlexComponent fc;
    fc.id = static_cast<int>(i);
    fc.kind = raw[i].kind;
    fc.trivial = raw[i].members.size() == 1;
    fc.vertices = VertexSet(n);
    for (int v : raw[i].members) {
      fc.vertices.insert(v);
      d.comp_of_[static_cast<std::size_t>(v)] = static_cast<int>(i);
    }
    d.components_.push_back(std::move(fc));
  }

  // Order arcs. Consistent-to-consistent relations come from the
  // condensation; every pair involving an inconsistent component is related
  // through the edges that join them.
  std::vector<std::pair<int, int>> arcs;
  for (const auto& [cf, ct] : scc.condensation_arcs) {
    int from = d.comp_of_[static_cast<std::size_t>(scc_representative[static_cast<std::size_t>(cf)])];
    int to = d.comp_of_[static_cast<std::size_t>(scc_representative[static_cast<std::size_t>(ct)])];
    arcs.emplace_back(from, to);
  }
  for (int e = 0; e < g.edge_count(); ++e) {
    int cu = d.comp_of_[static_cast<std::size_t>(g.edge(e).u)];
    int cv = d.comp_of_[static_cast<std::size_t>(g.edge(e).v)];
    if (cu == cv) continue;
    ComponentKind ku = d.components_[static_cast<std::size_t>(cu)].kind;
    ComponentKind kv = d.components_[static_cast<std::size_t>(cv)].kind;
    bool u_in_a = hooked_by(ku, Side::A);
    bool v_in_a = hooked_by(kv, Side::A);
    bool u_in_b = hooked_by(ku, Side::B);
    bool v_in_b = hooked_by(kv, Side::B);
    if (u_in_a && v_in_a) {
      // Within the A-hooked unit only inactive-loose adjacency can occur,
      // and the inactive singleton precedes the loose component.
      if (ku == ComponentKind::InactiveHookedA && kv == ComponentKind::LooseHookedA) {
        arcs.emplace_back(cu, cv);
      } else if (kv == ComponentKind::InactiveHookedA && ku == ComponentKind::LooseHookedA) {
        arcs.emplace_back(cv, cu);
      } else {
        throw Error(Errc::InternalInvariant,
                    "adjacent same-kind components inside the A-hooked unit");
      }
    } else if (u_in_b && v_in_b) {
      if (ku == ComponentKind::InactiveHookedB && kv == ComponentKind::LooseHookedB) {
        arcs.emplace_back(cv, cu);
      } else if (kv == ComponentKind::InactiveHookedB && ku == ComponentKind::LooseHookedB) {
        arcs.emplace_back(cu, cv);
      } else {
        throw Error(Errc::InternalInvariant,
                    "adjacent same-kind components inside the B-hooked unit");
      }
    } else if (u_in_a) {
      arcs.emplace_back(cu, cv);
    } else if (v_in_a) {
      arcs.emplace_back(cv, cu);
    } else if (u_in_b) {
      arcs.emplace_back(cv, cu);
    } else if (v_in_b) {
      arcs.emplace_back(cu, cv);
    }
    // Both consistent: covered by the condensation arcs above.
  }
  std::sort(arcs.begin(), arcs.end());
  arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());
  d.order_arcs_ = std::move(arcs);

  // Topological order; a cycle here would contradict antisymmetry.
  const int k = d.component_count();
  std::vector<int> indegree(static_cast<std::size_t>(k), 0);
  std::vector<std::vector<int>> succ(static_cast<std::size_t>(k));
  for (const auto& [from, to] : d.order_arcs_) {
    succ[static_cast<std::size_t>(from)].push_back(to);
    ++indegree[static_cast<std::size_t>(to)];
  }
  std::priority_queue<int, std::vector<int>, std::greater<>> ready;
  for (int c = 0; c < k; ++c) {
    if (indegree[static_cast<std::size_t>(c)] == 0) ready.push(c);
  }
  d.topo_order_.reserve(static_cast<std::size_t>(k));
  while (!ready.empty()) {
    int c = ready.top();
    ready.pop();
    d.topo_order_.push_back(c);
    for (int s : succ[static_cast<std::size_t>(c)]) {
      if (--indegree[static_cast<std::size_t>(s)] == 0) ready.push(s);
    }
  }
  if (static_cast<int>(d.topo_order_.size()) != k) {
    throw Error(Errc::InternalInvariant, "component order contains a cycle");
  }

  d.closure_cell_ = std::make_unique<Decomposition::ClosureCell>();
  return d;
}

const FlexComponent& Decomposition::component(int c) const {
  if (c < 0 || c >= component_count()) {
    throw Error(Errc::UnknownComponent, "component id " + std::to_string(c));
  }
  return components_[static_cast<std::size_t>(c)];
}

int Decomposition::component_of(int v) const {
  if (v < 0 || v >= vertex_count()) {
    throw Error(Errc::IndexOutOfRange, "vertex " + std::to_string(v));
  }
  return comp_of_[static_cast<std::size_t>(v)];
}

const Decomposition::Closure& Decomposition::closure() const {
  std::call_once(closure_cell_->once, [this] {
    auto built = std::make_unique<Closure>();
    const int k = component_count();
    built->words = (static_cast<std::size_t>(k) + 63) / 64;
    built->reach.assign(static_cast<std::size_t>(k) * built->words, 0);
    std::vector<std::vector<int>> succ(static_cast<std::size_t>(k));
    for (const auto& [from, to] : order_arcs_) {
      succ[static_cast<std::size_t>(from)].push_back(to);
    }
    for (auto it = topo_order_.rbegin(); it != topo_order_.rend(); ++it) {
      int c = *it;
      std::uint64_t* row = built->reach.data() + static_cast<std::size_t>(c) * built->words;
      row[static_cast<std::size_t>(c) / 64] |= std::uint64_t{1} << (c % 64);
      for (int s : succ[static_cast<std::size_t>(c)]) {
        const std::uint64_t* srow =
            built->reach.data() + static_cast<std::size_t>(s) * built->words;
        for (std::size_t w = 0; w < built->words; ++w) row[w] |= srow[w];
      }
    }
    closure_cell_->value = std::move(built);
  });
  return *closure_cell_->value;
}

bool Decomposition::poset_leq(int c1, int c2) const {
  if (c1 < 0 || c1 >= component_count() || c2 < 0 || c2 >= component_count()) {
    throw Error(Errc::UnknownComponent,
                "component pair (" + std::to_string(c1) + ", " + std::to_string(c2) + ")");
  }
  const Closure& cl = closure();
  const std::uint64_t* row = cl.reach.data() + static_cast<std::size_t>(c1) * cl.words;
  return (row[static_cast<std::size_t>(c2) / 64] >> (c2 % 64)) & 1u;
}

std::vector<std::pair<int, int>> Decomposition::transitive_reduction() const {
  const Closure& cl = closure();
  std::vector<std::vector<int>> succ(static_cast<std::size_t>(component_count()));
  for (const auto& [from, to] : order_arcs_) {
    succ[static_cast<std::size_t>(from)].push_back(to);
  }
  auto reaches = [&cl](int from, int to) {
    const std::uint64_t* row = cl.reach.data() + static_cast<std::size_t>(from) * cl.words;
    return ((row[static_cast<std::size_t>(to) / 64] >> (to % 64)) & 1u) != 0;
  };
  std::vector<std::pair<int, int>> kept;
  for (const auto& [from, to] : order_arcs_) {
    bool redundant = false;
    for (int mid : succ[static_cast<std::size_t>(from)]) {
      if (mid != to && reaches(mid, to)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) kept.emplace_back(from, to);
  }
  return kept;
}

std::vector<std::pair<int, int>> restricted_capacity(const BipartiteGraph& g,
                                                     const Decomposition& d, int c) {
  if (g.vertex_count() != d.vertex_count()) {
    throw Error(Errc::InconsistentDecomposition, "decomposition of a different graph");
  }
  const FlexComponent& fc = d.component(c);
  std::vector<std::pair<int, int>> out;
  fc.vertices.for_each([&](int v) {
    int leaving_inevitable = 0;
    for (int e : g.incident(v)) {
      int w = g.other_end(e, v);
      if (!fc.vertices.contains(w) && d.matching().contains(e)) {
        ++leaving_inevitable;
      }
    }
    out.emplace_back(v, g.cap(v) - leaving_inevitable);
  });
  return out;
}

}  // namespace bmdm
