#include <doctest.h>

#include <algorithm>
#include <atomic>
#include <set>
#include <thread>

#include "bmdm/classification.hpp"
#include "bmdm/decomposition.hpp"
#include "bmdm/matching.hpp"
#include "bmdm/oracle.hpp"
#include "bmdm/random_instances.hpp"
#include "fixtures.hpp"

using namespace bmdm;
using namespace bmdm::testing;

namespace {

std::multiset<std::pair<int, int>> arc_set(const std::vector<std::pair<int, int>>& arcs) {
  return {arcs.begin(), arcs.end()};
}

}  // namespace

TEST_CASE("auxiliary digraph arcs") {
  BipartiteGraph g = path3();
  Matching m = Matching::from_edge_ids(g, std::vector<int>{0});
  AuxDigraph aux = build_aux(g, Side::A, m, g.all_vertices());
  CHECK(arc_set(aux.arcs) == std::multiset<std::pair<int, int>>{{1, 2}, {2, 0}});

  BipartiteGraph edgeless = build_graph(2, 1, {});
  Matching empty = Matching::from_edge_ids(edgeless, std::vector<int>{});
  CHECK(build_aux(edgeless, Side::A, empty, edgeless.all_vertices()).arcs.empty());

  BipartiteGraph c4 = cycle4();
  Matching mc = Matching::from_edge_ids(c4, std::vector<int>{0, 3});
  AuxDigraph aux_ba = build_aux(c4, Side::B, mc, c4.all_vertices());
  CHECK(arc_set(aux_ba.arcs) ==
        std::multiset<std::pair<int, int>>{{0, 2}, {1, 3}, {3, 0}, {2, 1}});
  SccResult scc = strongly_connected_components(aux_ba);
  CHECK(scc.components.size() == 1);
  CHECK(scc.condensation_arcs.empty());
}

TEST_CASE("strongly connected components") {
  // Chain digraph: four singletons condensing to a path.
  BipartiteGraph g = chain4();
  Matching m = Matching::from_edge_ids(g, std::vector<int>{0, 1});
  AuxDigraph aux = build_aux(g, Side::B, m, g.all_vertices());
  SccResult scc = strongly_connected_components(aux);
  REQUIRE(scc.components.size() == 4);
  CHECK(scc.components[0] == std::vector<int>{0});
  CHECK(scc.components[3] == std::vector<int>{3});
  CHECK(scc.condensation_arcs ==
        std::vector<std::pair<int, int>>{{0, 2}, {1, 3}, {3, 0}});

  // Empty digraph on three vertices.
  BipartiteGraph edgeless = build_graph(2, 1, {});
  Matching empty = Matching::from_edge_ids(edgeless, std::vector<int>{});
  SccResult trivial = strongly_connected_components(
      build_aux(edgeless, Side::A, empty, edgeless.all_vertices()));
  CHECK(trivial.components.size() == 3);
  CHECK(trivial.condensation_arcs.empty());
}

TEST_CASE("inconsistent units") {
  BipartiteGraph g = path3();
  Matching m = max_b_matching(g);
  CHECK(inconsistent_unit(g, m, Side::A) == VertexSet::full(3));
  CHECK(inconsistent_unit(g, m, Side::B) == VertexSet(3));

  BipartiteGraph c4 = cycle4();
  Matching mc = max_b_matching(c4);
  CHECK(inconsistent_unit(c4, mc, Side::A) == VertexSet(4));
  CHECK(inconsistent_unit(c4, mc, Side::B) == VertexSet(4));

  BipartiteGraph gi = path3_inactive_center();
  Matching mi = max_b_matching(gi);
  CHECK(inconsistent_unit(gi, mi, Side::A) == VertexSet::full(3));
}

TEST_CASE("decompose the path") {
  BipartiteGraph g = path3();
  Decomposition d = decompose(g, max_b_matching(g));
  REQUIRE(d.component_count() == 1);
  CHECK(d.component(0).vertices == VertexSet::full(3));
  CHECK(d.component(0).kind == ComponentKind::LooseHookedA);
  CHECK(!d.component(0).trivial);
  CHECK(d.order_arcs().empty());
  CHECK(d.ext(Side::A) == VertexSet::full(3));
  CHECK(d.ext(Side::B) == VertexSet(3));
}

TEST_CASE("decompose the chain") {
  BipartiteGraph g = chain4();
  Decomposition d = decompose(g, max_b_matching(g));
  REQUIRE(d.component_count() == 4);
  for (int c = 0; c < 4; ++c) {
    CHECK(d.component(c).kind == ComponentKind::Consistent);
    CHECK(d.component(c).trivial);
  }
  CHECK(d.component_of(0) == 0);
  CHECK(d.component_of(1) == 1);
  CHECK(d.component_of(2) == 2);
  CHECK(d.component_of(3) == 3);
  CHECK(d.order_arcs() == std::vector<std::pair<int, int>>{{0, 2}, {1, 3}, {3, 0}});

  // {a1} <= {b1} <= {a0} <= {b0}, nothing else besides reflexivity.
  CHECK(d.poset_leq(1, 3));
  CHECK(d.poset_leq(3, 0));
  CHECK(d.poset_leq(1, 2));
  CHECK(d.poset_leq(0, 0));
  CHECK(!d.poset_leq(2, 1));
  CHECK(!d.poset_leq(0, 1));
  CHECK_THROWS_AS(d.poset_leq(0, 9), Error);
}

TEST_CASE("decompose the loose half edge") {
  BipartiteGraph g = single_edge_cap2();
  Decomposition d = decompose(g, max_b_matching(g));
  REQUIRE(d.component_count() == 2);
  CHECK(d.component(0).vertices == VertexSet::of(2, {0}));
  CHECK(d.component(0).kind == ComponentKind::LooseHookedA);
  CHECK(d.component(1).vertices == VertexSet::of(2, {1}));
  CHECK(d.component(1).kind == ComponentKind::Consistent);
  CHECK(d.order_arcs() == std::vector<std::pair<int, int>>{{0, 1}});
}

TEST_CASE("decompose with an inactive center") {
  BipartiteGraph g = path3_inactive_center();
  Decomposition d = decompose(g, max_b_matching(g));
  REQUIRE(d.component_count() == 3);
  CHECK(d.component(0).vertices == VertexSet::of(3, {0}));
  CHECK(d.component(0).kind == ComponentKind::LooseHookedA);
  CHECK(d.component(1).kind == ComponentKind::LooseHookedA);
  CHECK(d.component(2).vertices == VertexSet::of(3, {2}));
  CHECK(d.component(2).kind == ComponentKind::InactiveHookedA);
  CHECK(d.order_arcs() == std::vector<std::pair<int, int>>{{2, 0}, {2, 1}});
}

TEST_CASE("submaximal matchings are rejected") {
  BipartiteGraph g = path3();
  Matching empty = Matching::from_edge_ids(g, std::vector<int>{});
  CHECK_THROWS_AS(decompose(g, empty), Error);
  try {
    decompose(cycle4(), Matching::from_edge_ids(cycle4(), std::vector<int>{0}));
    FAIL("expected NotMaximumMatching");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotMaximumMatching);
  }
}

TEST_CASE("transitive reduction drops implied arcs") {
  BipartiteGraph g = three_blocks();
  Matching m = max_b_matching(g);
  CHECK(m.size() == 6);
  Decomposition d = decompose(g, m);
  REQUIRE(d.component_count() == 3);
  for (int c = 0; c < 3; ++c) CHECK(d.component(c).kind == ComponentKind::Consistent);
  CHECK(d.order_arcs() == std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {1, 2}});
  CHECK(d.transitive_reduction() == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});
  CHECK(d.poset_leq(0, 2));
}

TEST_CASE("restricted capacities") {
  BipartiteGraph g = single_edge_cap2();
  Decomposition d = decompose(g, max_b_matching(g));
  CHECK(restricted_capacity(g, d, 1) == std::vector<std::pair<int, int>>{{1, 0}});
  // The matched edge leaving {a0} is inevitable, so one unit is pinned.
  CHECK(restricted_capacity(g, d, 0) == std::vector<std::pair<int, int>>{{0, 1}});

  BipartiteGraph c4 = cycle4();
  Decomposition dc = decompose(c4, max_b_matching(c4));
  CHECK(restricted_capacity(c4, dc, 0) ==
        std::vector<std::pair<int, int>>{{0, 1}, {1, 1}, {2, 1}, {3, 1}});

  BipartiteGraph ch = chain4();
  Decomposition dch = decompose(ch, max_b_matching(ch));
  CHECK(restricted_capacity(ch, dch, 3) == std::vector<std::pair<int, int>>{{3, 0}});
  CHECK_THROWS_AS(restricted_capacity(ch, dch, 11), Error);
}

TEST_CASE("partition and units on random instances") {
  for (int i = 0; i < 150; ++i) {
    BipartiteGraph g = random_instance(31, static_cast<std::uint64_t>(i));
    Matching m = max_b_matching(g);
    Decomposition d = decompose(g, m);
    CAPTURE(i);

    CHECK(!d.ext(Side::A).intersects(d.ext(Side::B)));

    VertexSet covered(g.vertex_count());
    for (const FlexComponent& fc : d.components()) {
      CHECK(!fc.vertices.empty());
      CHECK(!covered.intersects(fc.vertices));
      covered = covered | fc.vertices;
      CHECK(fc.trivial == (fc.vertices.count() == 1));
      if (hooked_by(fc.kind, Side::A)) CHECK(fc.vertices.is_subset_of(d.ext(Side::A)));
      if (hooked_by(fc.kind, Side::B)) CHECK(fc.vertices.is_subset_of(d.ext(Side::B)));
      if (fc.kind == ComponentKind::InactiveHookedA ||
          fc.kind == ComponentKind::InactiveHookedB) {
        CHECK(fc.vertices.count() == 1);
        CHECK(g.cap(fc.vertices.to_vector().front()) == 0);
      }
    }
    CHECK(covered == g.all_vertices());

    // Tight components carry a perfect restricted matching.
    for (const FlexComponent& fc : d.components()) {
      if (fc.kind == ComponentKind::LooseHookedA || fc.kind == ComponentKind::LooseHookedB) {
        continue;
      }
      for (const auto& [v, restricted] : restricted_capacity(g, d, fc.id)) {
        int inside = 0;
        for (int e : g.incident(v)) {
          if (m.contains(e) && fc.vertices.contains(g.other_end(e, v))) ++inside;
        }
        CHECK(inside == restricted);
      }
    }

    // Distinct loose components hooked by the same side never touch.
    for (const FlexComponent& c1 : d.components()) {
      for (const FlexComponent& c2 : d.components()) {
        if (c1.id >= c2.id || c1.kind != c2.kind) continue;
        if (c1.kind != ComponentKind::LooseHookedA && c1.kind != ComponentKind::LooseHookedB) {
          continue;
        }
        CHECK(g.edges_between(c1.vertices, c2.vertices).empty());
      }
    }
  }
}

TEST_CASE("order closure equals the edge-class relation") {
  // Rebuild the generating relation straight from its definition: an
  // inevitable edge points from the component of its A end to the component
  // of its B end, a forbidden edge the other way. Its reachability closure
  // must equal poset_leq exactly.
  for (int i = 0; i < 150; ++i) {
    BipartiteGraph g = i < 100 ? random_instance(34, static_cast<std::uint64_t>(i))
                               : dense4x4(static_cast<std::uint64_t>(i));
    Matching m = max_b_matching(g);
    Decomposition d = decompose(g, m);
    EdgeClassification cls = classify_edges(g, m, d);
    const int k = d.component_count();

    std::vector<std::vector<bool>> leq(static_cast<std::size_t>(k),
                                       std::vector<bool>(static_cast<std::size_t>(k)));
    for (int c = 0; c < k; ++c) leq[static_cast<std::size_t>(c)][static_cast<std::size_t>(c)] = true;
    for (int e = 0; e < g.edge_count(); ++e) {
      int ca = d.component_of(g.edge(e).u);
      int cb = d.component_of(g.edge(e).v);
      if (ca == cb) continue;
      if (cls.class_of[static_cast<std::size_t>(e)] == EdgeClass::Inevitable) {
        leq[static_cast<std::size_t>(ca)][static_cast<std::size_t>(cb)] = true;
      } else {
        leq[static_cast<std::size_t>(cb)][static_cast<std::size_t>(ca)] = true;
      }
    }
    for (int mid = 0; mid < k; ++mid) {
      for (int a = 0; a < k; ++a) {
        for (int b = 0; b < k; ++b) {
          if (leq[static_cast<std::size_t>(a)][static_cast<std::size_t>(mid)] &&
              leq[static_cast<std::size_t>(mid)][static_cast<std::size_t>(b)]) {
            leq[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = true;
          }
        }
      }
    }

    CAPTURE(i);
    CHECK(closure_matrix(d) == leq);
  }
}

TEST_CASE("the matching restricted to a component is maximum there") {
  for (int i = 0; i < 150; ++i) {
    BipartiteGraph g = i < 100 ? random_instance(35, static_cast<std::uint64_t>(i))
                               : dense4x4(static_cast<std::uint64_t>(i));
    Matching m = max_b_matching(g);
    Decomposition d = decompose(g, m);
    CAPTURE(i);
    for (const FlexComponent& fc : d.components()) {
      // Extract G[C] with the restricted capacities.
      std::vector<int> members = fc.vertices.to_vector();
      std::vector<int> local(static_cast<std::size_t>(g.vertex_count()), -1);
      int local_a = 0;
      for (int v : members) {
        if (v < g.a_count()) local[static_cast<std::size_t>(v)] = local_a++;
      }
      int local_b = 0;
      for (int v : members) {
        if (v >= g.a_count()) local[static_cast<std::size_t>(v)] = local_a + local_b++;
      }
      std::vector<int> caps(static_cast<std::size_t>(local_a + local_b), 0);
      for (const auto& [v, restricted] : restricted_capacity(g, d, fc.id)) {
        REQUIRE(restricted >= 0);
        caps[static_cast<std::size_t>(local[static_cast<std::size_t>(v)])] = restricted;
      }
      std::vector<std::pair<int, int>> edges;
      int inside_matched = 0;
      for (int e = 0; e < g.edge_count(); ++e) {
        if (!fc.vertices.contains(g.edge(e).u) || !fc.vertices.contains(g.edge(e).v)) continue;
        edges.emplace_back(local[static_cast<std::size_t>(g.edge(e).u)],
                           local[static_cast<std::size_t>(g.edge(e).v)] - local_a);
        if (m.contains(e)) ++inside_matched;
      }
      BipartiteGraph sub = build_graph(local_a, local_b, edges, caps);
      CHECK(max_b_matching(sub).size() == inside_matched);
    }
  }
}

TEST_CASE("decomposition is matching independent") {
  for (int i = 0; i < 100; ++i) {
    BipartiteGraph g = i < 60 ? random_instance(32, static_cast<std::uint64_t>(i))
                              : dense4x4(static_cast<std::uint64_t>(i));
    OracleReport oracle = oracle_report(g);
    Matching first = Matching::from_edge_ids(g, oracle.all_max_matchings.front());
    Decomposition reference = decompose(g, first);
    auto ref_closure = closure_matrix(reference);
    CAPTURE(i);
    for (const auto& ids : oracle.all_max_matchings) {
      Decomposition d = decompose(g, Matching::from_edge_ids(g, ids));
      REQUIRE(d.component_count() == reference.component_count());
      for (int c = 0; c < d.component_count(); ++c) {
        CHECK(d.component(c).vertices == reference.component(c).vertices);
        CHECK(d.component(c).kind == reference.component(c).kind);
      }
      CHECK(closure_matrix(d) == ref_closure);
    }
  }
}

TEST_CASE("shared decomposition answers order queries from many threads") {
  BipartiteGraph g = dense4x4(5);
  Matching m = max_b_matching(g);
  auto expected = closure_matrix(decompose(g, m));

  // Fresh instance: the first poset_leq calls race to build the closure.
  Decomposition d = decompose(g, m);
  std::atomic<int> mismatches{0};
  std::vector<std::thread> workers;
  for (int t = 0; t < 8; ++t) {
    workers.emplace_back([&] {
      for (int c1 = 0; c1 < d.component_count(); ++c1) {
        for (int c2 = 0; c2 < d.component_count(); ++c2) {
          if (d.poset_leq(c1, c2) !=
              expected[static_cast<std::size_t>(c1)][static_cast<std::size_t>(c2)]) {
            ++mismatches;
          }
        }
      }
    });
  }
  for (std::thread& w : workers) w.join();
  CHECK(mismatches == 0);
}

TEST_CASE("swapping the classes reverses the order") {
  for (int i = 0; i < 80; ++i) {
    BipartiteGraph g = random_instance(33, static_cast<std::uint64_t>(i));
    Decomposition d = decompose(g, max_b_matching(g));
    auto [h, remap] = swap_sides(g);
    Decomposition ds = decompose(h, max_b_matching(h));
    CAPTURE(i);

    REQUIRE(ds.component_count() == d.component_count());
    // Map each original component to its counterpart in the swapped graph.
    std::vector<int> counterpart(static_cast<std::size_t>(d.component_count()));
    for (int c = 0; c < d.component_count(); ++c) {
      VertexSet image(h.vertex_count());
      d.component(c).vertices.for_each(
          [&](int v) { image.insert(remap[static_cast<std::size_t>(v)]); });
      int mapped = ds.component_of(image.to_vector().front());
      CHECK(ds.component(mapped).vertices == image);
      counterpart[static_cast<std::size_t>(c)] = mapped;

      ComponentKind k = d.component(c).kind;
      ComponentKind expected =
          k == ComponentKind::LooseHookedA     ? ComponentKind::LooseHookedB
          : k == ComponentKind::LooseHookedB   ? ComponentKind::LooseHookedA
          : k == ComponentKind::InactiveHookedA ? ComponentKind::InactiveHookedB
          : k == ComponentKind::InactiveHookedB ? ComponentKind::InactiveHookedA
                                                : ComponentKind::Consistent;
      CHECK(ds.component(mapped).kind == expected);
    }
    for (int c1 = 0; c1 < d.component_count(); ++c1) {
      for (int c2 = 0; c2 < d.component_count(); ++c2) {
        CHECK(d.poset_leq(c1, c2) ==
              ds.poset_leq(counterpart[static_cast<std::size_t>(c2)],
                           counterpart[static_cast<std::size_t>(c1)]));
      }
    }
  }
}
