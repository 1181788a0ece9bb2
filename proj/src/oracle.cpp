#include "bmdm/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <sstream>

#include "bmdm/matching.hpp"
#include "bmdm/verifying.hpp"

namespace bmdm {

namespace {

bool subset_is_b_matching(const BipartiteGraph& g, std::uint32_t mask,
                          std::vector<int>& loads) {
  std::fill(loads.begin(), loads.end(), 0);
  std::uint32_t bits = mask;
  while (bits != 0) {
    int e = std::countr_zero(bits);
    bits &= bits - 1;
    const Edge& ed = g.edge(e);
    if (++loads[static_cast<std::size_t>(ed.u)] > g.cap(ed.u)) return false;
    if (++loads[static_cast<std::size_t>(ed.v)] > g.cap(ed.v)) return false;
  }
  return true;
}

std::vector<int> mask_to_ids(std::uint32_t mask) {
  std::vector<int> ids;
  while (mask != 0) {
    ids.push_back(std::countr_zero(mask));
    mask &= mask - 1;
  }
  return ids;
}

}  // namespace

OracleReport oracle_report(const BipartiteGraph& g, const OracleLimits& limits) {
  const int m = g.edge_count();
  const int n = g.vertex_count();
  // 2^m edge subsets and 2^n vertex subsets; the hard caps keep the masks
  // in range no matter how generous the caller-supplied limits are.
  constexpr int kHardCap = 24;
  if (m > limits.max_edges || n > limits.max_vertices || m > kHardCap || n > kHardCap) {
    throw Error(Errc::TooLarge,
                "instance with " + std::to_string(n) + " vertices and " +
                    std::to_string(m) + " edges exceeds the oracle limits");
  }

  OracleReport report;
  report.d_set = VertexSet(n);
  std::vector<int> loads(static_cast<std::size_t>(n), 0);

  const std::uint64_t subsets = std::uint64_t{1} << m;
  for (std::uint64_t mask = 0; mask < subsets; ++mask) {
    if (!subset_is_b_matching(g, static_cast<std::uint32_t>(mask), loads)) continue;
    report.max_size = std::max(report.max_size, std::popcount(mask));
  }

  std::uint32_t in_all = m == 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << m) - 1;
  std::uint32_t in_some = 0;
  for (std::uint64_t mask = 0; mask < subsets; ++mask) {
    if (std::popcount(mask) != report.max_size) continue;
    if (!subset_is_b_matching(g, static_cast<std::uint32_t>(mask), loads)) continue;
    report.all_max_matchings.push_back(mask_to_ids(static_cast<std::uint32_t>(mask)));
    in_all &= static_cast<std::uint32_t>(mask);
    in_some |= static_cast<std::uint32_t>(mask);
    for (int v = 0; v < n; ++v) {
      if (loads[static_cast<std::size_t>(v)] < g.cap(v)) report.d_set.insert(v);
    }
  }

  report.edge_class.resize(static_cast<std::size_t>(m));
  for (int e = 0; e < m; ++e) {
    bool always = (in_all >> e) & 1u;
    bool sometimes = (in_some >> e) & 1u;
    report.edge_class[static_cast<std::size_t>(e)] =
        always ? EdgeClass::Inevitable
               : (sometimes ? EdgeClass::Flexible : EdgeClass::Forbidden);
  }

  // Flexible components with kinds, straight from the definitions.
  {
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
          if (report.edge_class[static_cast<std::size_t>(e)] != EdgeClass::Flexible) continue;
          int w = g.other_end(e, v);
          if (!seen.contains(w)) {
            seen.insert(w);
            frontier.push_back(w);
          }
        }
      }

      bool hooked_a = false;
      bool hooked_b = false;
      members.for_each([&](int v) {
        if (!report.d_set.contains(v)) return;
        (g.side(v) == Side::A ? hooked_a : hooked_b) = true;
      });
      ComponentKind kind = ComponentKind::Consistent;
      if (hooked_a && hooked_b) {
        throw Error(Errc::InternalInvariant,
                    "a flexible component is loose on both classes");
      }
      if (hooked_a) {
        kind = ComponentKind::LooseHookedA;
      } else if (hooked_b) {
        kind = ComponentKind::LooseHookedB;
      } else if (members.count() == 1 && g.cap(root) == 0) {
        // An inactive singleton is inconsistent iff it neighbors D(G;b);
        // the hooking side is the one its neighbors belong to.
        bool next_to_d = g.neighbors(members).intersects(report.d_set);
        if (next_to_d) {
          kind = g.side(root) == Side::B ? ComponentKind::InactiveHookedA
                                         : ComponentKind::InactiveHookedB;
        }
      }
      report.components.emplace_back(std::move(members), kind);
    }
  }

  report.min_verifying_cost = g.cap_sum(VertexSet(n).complement());
  std::vector<VertexSet> attaining;
  for (std::uint64_t zmask = 0; zmask < (std::uint64_t{1} << n); ++zmask) {
    VertexSet z(n);
    std::uint64_t bits = zmask;
    while (bits != 0) {
      z.insert(std::countr_zero(bits));
      bits &= bits - 1;
    }
    long long cost = verifying_cost(g, z);
    if (cost < report.min_verifying_cost) {
      report.min_verifying_cost = cost;
      attaining.clear();
    }
    if (cost == report.min_verifying_cost) {
      attaining.push_back(std::move(z));
    }
  }
  std::sort(attaining.begin(), attaining.end(), VertexSet::lex_less);
  report.verifying_sets = std::move(attaining);
  return report;
}

namespace {

std::string vertex_list(const BipartiteGraph& g, const VertexSet& s) {
  std::ostringstream out;
  out << "{";
  bool first = true;
  s.for_each([&](int v) {
    if (!first) out << ",";
    first = false;
    out << (g.side(v) == Side::A ? "a" : "b")
        << (g.side(v) == Side::A ? v : v - g.a_count());
  });
  out << "}";
  return out.str();
}

}  // namespace

EquivalenceReport equivalence_check(const BipartiteGraph& g, const OracleLimits& limits) {
  OracleReport oracle = oracle_report(g, limits);
  EquivalenceReport report;
  auto fail = [&report](const std::string& message) {
    report.ok = false;
    report.divergence = message;
  };

  Matching m = max_b_matching(g);
  if (m.size() != oracle.max_size) {
    fail("max_size: fast " + std::to_string(m.size()) + " vs oracle " +
         std::to_string(oracle.max_size));
    return report;
  }
  if (oracle.min_verifying_cost != oracle.max_size) {
    fail("min_cost: minimum subset cost " + std::to_string(oracle.min_verifying_cost) +
         " differs from maximum size " + std::to_string(oracle.max_size));
    return report;
  }

  Decomposition d = decompose(g, m);
  EdgeClassification cls = classify_edges(g, m, d);
  for (int e = 0; e < g.edge_count(); ++e) {
    if (cls.class_of[static_cast<std::size_t>(e)] !=
        oracle.edge_class[static_cast<std::size_t>(e)]) {
      fail("edge_class: edge " + std::to_string(e) + " fast " +
           edge_class_name(cls.class_of[static_cast<std::size_t>(e)]) + " vs oracle " +
           edge_class_name(oracle.edge_class[static_cast<std::size_t>(e)]));
      return report;
    }
  }

  VertexSet fast_d = loose_attainable(d);
  if (!(fast_d == oracle.d_set)) {
    fail("d_set: fast " + vertex_list(g, fast_d) + " vs oracle " +
         vertex_list(g, oracle.d_set));
    return report;
  }

  if (d.component_count() != static_cast<int>(oracle.components.size())) {
    fail("components: fast count " + std::to_string(d.component_count()) +
         " vs oracle " + std::to_string(oracle.components.size()));
    return report;
  }
  for (int c = 0; c < d.component_count(); ++c) {
    const FlexComponent& fc = d.component(c);
    const auto& [overts, okind] = oracle.components[static_cast<std::size_t>(c)];
    if (!(fc.vertices == overts)) {
      fail("components: component " + std::to_string(c) + " fast " +
           vertex_list(g, fc.vertices) + " vs oracle " + vertex_list(g, overts));
      return report;
    }
    if (fc.kind != okind) {
      fail("component_kind: component " + std::to_string(c) + " fast " +
           std::string(kind_name(fc.kind)) + " vs oracle " + kind_name(okind));
      return report;
    }
  }

  std::int64_t cap = static_cast<std::int64_t>(oracle.verifying_sets.size()) + 1;
  VerifyingFamily family = enumerate_verifying_sets(d, cap);
  if (family.truncated || family.sets.size() != oracle.verifying_sets.size()) {
    fail("verifying_sets: fast count " + std::to_string(family.sets.size()) +
         (family.truncated ? "+ (truncated)" : "") + " vs oracle " +
         std::to_string(oracle.verifying_sets.size()));
    return report;
  }
  for (std::size_t i = 0; i < family.sets.size(); ++i) {
    if (!(family.sets[i] == oracle.verifying_sets[i])) {
      fail("verifying_sets: entry " + std::to_string(i) + " fast " +
           vertex_list(g, family.sets[i]) + " vs oracle " +
           vertex_list(g, oracle.verifying_sets[i]));
      return report;
    }
  }
  return report;
}

}  // namespace bmdm
