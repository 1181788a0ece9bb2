#include "bmdm/verifying.hpp"

#include <algorithm>
#include <string>

namespace bmdm {

long long verifying_cost(const BipartiteGraph& g, const VertexSet& z) {
  if (z.universe() != g.vertex_count()) {
    throw Error(Errc::IndexOutOfRange, "set over a different universe");
  }
  return g.cap_sum(z.complement()) + static_cast<long long>(g.edges_within(z).size());
}

bool is_verifying(const BipartiteGraph& g, const VertexSet& z, const Matching& m) {
  require_matching_of(g, m);
  if (z.universe() != g.vertex_count()) {
    throw Error(Errc::IndexOutOfRange, "set over a different universe");
  }
  for (int e = 0; e < g.edge_count(); ++e) {
    bool u_in = z.contains(g.edge(e).u);
    bool v_in = z.contains(g.edge(e).v);
    if (u_in && v_in && !m.contains(e)) return false;
    if (!u_in && !v_in && m.contains(e)) return false;
  }
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (!z.contains(v) && m.load(v) < g.cap(v)) return false;
  }
  return true;
}

namespace {

std::vector<std::uint8_t> membership(const Decomposition& d, const std::vector<int>& ids,
                                     Errc bad_id) {
  std::vector<std::uint8_t> in(static_cast<std::size_t>(d.component_count()), 0);
  for (int c : ids) {
    if (c < 0 || c >= d.component_count()) {
      throw Error(bad_id, "component id " + std::to_string(c));
    }
    in[static_cast<std::size_t>(c)] = 1;
  }
  return in;
}

VertexSet projective_union(const Decomposition& d, const std::vector<std::uint8_t>& in_lower) {
  VertexSet z(d.vertex_count());
  for (const FlexComponent& fc : d.components()) {
    bool lower = in_lower[static_cast<std::size_t>(fc.id)] != 0;
    fc.vertices.for_each([&](int v) {
      bool is_a = v < d.a_count();
      if (lower == is_a) z.insert(v);
    });
  }
  return z;
}

}  // namespace

VertexSet ideal_to_verifying(const Decomposition& d, const NormalizedIdealPair& p) {
  std::vector<std::uint8_t> in_lower = membership(d, p.lower, Errc::UnknownComponent);
  std::vector<std::uint8_t> in_upper = membership(d, p.upper, Errc::UnknownComponent);
  for (int c = 0; c < d.component_count(); ++c) {
    if (in_lower[static_cast<std::size_t>(c)] == in_upper[static_cast<std::size_t>(c)]) {
      throw Error(Errc::NotAnIdeal,
                  "ideals are not a complementary pair at component " + std::to_string(c));
    }
  }
  for (const auto& [from, to] : d.order_arcs()) {
    if (in_lower[static_cast<std::size_t>(to)] && !in_lower[static_cast<std::size_t>(from)]) {
      throw Error(Errc::NotAnIdeal,
                  "lower ideal misses predecessor " + std::to_string(from) +
                      " of component " + std::to_string(to));
    }
  }
  for (const FlexComponent& fc : d.components()) {
    bool lower = in_lower[static_cast<std::size_t>(fc.id)] != 0;
    if (hooked_by(fc.kind, Side::A) && !lower) {
      throw Error(Errc::NotNormalized,
                  "A-hooked component " + std::to_string(fc.id) + " outside the lower ideal");
    }
    if (hooked_by(fc.kind, Side::B) && lower) {
      throw Error(Errc::NotNormalized,
                  "B-hooked component " + std::to_string(fc.id) + " inside the lower ideal");
    }
  }
  return projective_union(d, in_lower);
}

NormalizedIdealPair verifying_to_ideal(const BipartiteGraph& g, const Decomposition& d,
                                       const VertexSet& z) {
  if (g.vertex_count() != d.vertex_count()) {
    throw Error(Errc::InconsistentDecomposition, "decomposition of a different graph");
  }
  if (z.universe() != g.vertex_count()) {
    throw Error(Errc::IndexOutOfRange, "set over a different universe");
  }

  VertexSet z_and_a(g.vertex_count());
  VertexSet z_and_b(g.vertex_count());
  z.for_each([&](int v) {
    if (v < g.a_count()) {
      z_and_a.insert(v);
    } else {
      z_and_b.insert(v);
    }
  });
  for (const FlexComponent& fc : d.components()) {
    if (fc.vertices.intersects(z_and_a) && fc.vertices.intersects(z_and_b)) {
      throw Error(Errc::MalformedSet,
                  "component " + std::to_string(fc.id) +
                      " has vertices of both classes in the set");
    }
  }

  long long cost = verifying_cost(g, z);
  if (cost != d.matching().size()) {
    throw Error(Errc::NotVerifying,
                "cost " + std::to_string(cost) + " differs from maximum size " +
                    std::to_string(d.matching().size()));
  }

  NormalizedIdealPair pair;
  for (const FlexComponent& fc : d.components()) {
    bool touches_a = fc.vertices.intersects(z_and_a);
    bool touches_b = fc.vertices.intersects(z_and_b);
    bool has_a = false;
    bool has_b = false;
    fc.vertices.for_each([&](int v) { (v < g.a_count() ? has_a : has_b) = true; });
    bool lower;
    if (touches_a) {
      lower = true;
    } else if (touches_b) {
      lower = false;
    } else {
      // Untouched components project on an empty class; only one-class
      // components can be untouched in a verifying set.
      if (has_a && has_b) {
        throw Error(Errc::MalformedSet,
                    "component " + std::to_string(fc.id) + " is untouched on both classes");
      }
      lower = !has_a;
    }
    (lower ? pair.lower : pair.upper).push_back(fc.id);
  }
  return pair;
}

VerifyingFamily enumerate_verifying_sets(const Decomposition& d, std::int64_t cap) {
  if (cap <= 0) {
    throw Error(Errc::InvalidArgument, "cap must be positive");
  }
  const int k = d.component_count();
  std::vector<std::vector<int>> preds(static_cast<std::size_t>(k));
  for (const auto& [from, to] : d.order_arcs()) {
    preds[static_cast<std::size_t>(to)].push_back(from);
  }

  VerifyingFamily family;
  std::vector<std::uint8_t> in_lower(static_cast<std::size_t>(k), 0);
  const std::vector<int>& topo = d.topological_order();

  // Walks the components in topological order deciding membership in the
  // lower ideal; hooked components are forced, downward closure prunes the
  // rest. Every completed walk is one normalized lower ideal.
  auto walk = [&](auto&& self, std::size_t pos) -> void {
    if (family.truncated) return;
    if (pos == topo.size()) {
      if (static_cast<std::int64_t>(family.sets.size()) == cap) {
        family.truncated = true;
        return;
      }
      family.sets.push_back(projective_union(d, in_lower));
      return;
    }
    int c = topo[pos];
    const FlexComponent& fc = d.component(c);
    bool forced_in = hooked_by(fc.kind, Side::A);
    bool forced_out = hooked_by(fc.kind, Side::B);
    bool preds_in = true;
    for (int p : preds[static_cast<std::size_t>(c)]) {
      if (!in_lower[static_cast<std::size_t>(p)]) {
        preds_in = false;
        break;
      }
    }
    if (!forced_out && preds_in) {
      in_lower[static_cast<std::size_t>(c)] = 1;
      self(self, pos + 1);
      in_lower[static_cast<std::size_t>(c)] = 0;
    }
    if (!forced_in) {
      self(self, pos + 1);
    }
  };
  walk(walk, 0);

  std::sort(family.sets.begin(), family.sets.end(), VertexSet::lex_less);
  family.sets.erase(std::unique(family.sets.begin(), family.sets.end()), family.sets.end());
  return family;
}

}  // namespace bmdm
