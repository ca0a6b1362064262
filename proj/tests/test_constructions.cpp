#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "oracles.hpp"
#include "pmc_atlas/constructions.hpp"
#include "pmc_atlas/io.hpp"

using pmca::Bitset;
using pmca::Graph64;
using VS = Bitset<1>;

TEST_CASE("cover supergraph shape") {
  Graph64 k2 = Graph64::from_edges(2, {{0, 1}});
  auto m1 = pmca::build_cover_supergraph(k2, pmca::make_vertex_cover(k2, VS::of({0})));
  CHECK(m1.graph.size() == 3);  // n + 2^1 - 1
  CHECK(m1.graph.neighbors(m1.subset_vertex(1)) == VS::of({0}));
  CHECK(m1.graph.label(2) == "M{0}");

  Graph64 p3 = Graph64::from_edges(3, {{0, 1}, {1, 2}});
  auto m2 = pmca::build_cover_supergraph(p3, pmca::make_vertex_cover(p3, VS::of({1})));
  CHECK(m2.graph.size() == 4);

  auto m3 = pmca::build_cover_supergraph(k2, pmca::make_vertex_cover(k2, VS::of({0, 1})));
  CHECK(m3.graph.size() == 5);  // 2 + 2^2 - 1
  CHECK(m3.graph.neighbors(m3.subset_vertex(0b01)) == VS::of({0}));
  CHECK(m3.graph.neighbors(m3.subset_vertex(0b10)) == VS::of({1}));
  CHECK(m3.graph.neighbors(m3.subset_vertex(0b11)) == VS::of({0, 1}));
  CHECK(m3.graph.label(4) == "M{0,1}");

  CHECK_THROWS_AS(m3.subset_vertex(0), pmca::InputError);
  CHECK_THROWS_AS(m3.subset_vertex(4), pmca::InputError);
}

TEST_CASE("cover supergraph preserves the base graph and the cover") {
  std::mt19937 rng(271828);
  for (int trial = 0; trial < 20; ++trial) {
    int k = 1 + static_cast<int>(rng() % 3);
    int n = k + static_cast<int>(rng() % 5);
    auto inst = pmca::random_graph_with_cover<1>(k, n, {1, 2}, rng());
    auto m = pmca::build_cover_supergraph(inst.graph, inst.cover);
    CHECK(m.graph.size() == n + (1 << k) - 1);
    // base is the induced subgraph on the original ids
    auto induced = m.graph.induced_subgraph(VS::first_n(n));
    CHECK(induced.graph.edges() == inst.graph.edges());
    // the cover still covers the supergraph
    CHECK(pmca::is_vertex_cover(m.graph, m.inner));
    // every added vertex neighbors exactly its subset
    for (std::uint32_t mask = 1; mask < (1u << k); ++mask) {
      VS expect;
      for (int i = 0; i < k; ++i)
        if (mask >> i & 1) expect.set(m.cover_vertices[static_cast<std::size_t>(i)]);
      CHECK(m.graph.neighbors(m.subset_vertex(mask)) == expect);
    }
  }
}

TEST_CASE("cover supergraph budget") {
  Graph64 k2 = Graph64::from_edges(2, {{0, 1}});
  CHECK_THROWS_AS(pmca::build_cover_supergraph(k2, pmca::make_vertex_cover(k2, VS::of({0})), 0),
                  pmca::BudgetError);
  // width overflow: 2^6 - 1 + 8 > 64
  auto wide = pmca::random_graph_with_cover<1>(6, 8, {1, 1}, 5);
  CHECK_THROWS_AS(pmca::build_cover_supergraph(wide.graph, wide.cover), pmca::BudgetError);
  auto ok = pmca::random_graph_with_cover<2>(6, 8, {1, 1}, 5);
  CHECK(pmca::build_cover_supergraph(ok.graph, ok.cover).graph.size() == 71);
}

TEST_CASE("pair incidence family shape") {
  auto g2 = pmca::build_pair_incidence_graph<1>(2);
  CHECK(g2.graph.size() == 3);  // path 1 - (1,2) - 2
  CHECK(g2.graph.edge_count() == 2);
  CHECK(g2.graph.adjacent(g2.integer_vertex(1), g2.pair_vertex(1, 2)));

  auto g3 = pmca::build_pair_incidence_graph<1>(3);
  CHECK(g3.graph.size() == 6);
  CHECK(g3.graph.edge_count() == 6);
  for (int v = 0; v < 6; ++v) CHECK(g3.graph.neighbors(v).count() == 2);  // 2-regular
  CHECK(g3.graph.components(VS{}).size() == 1);                           // connected: a 6-cycle

  auto g5 = pmca::build_pair_incidence_graph<1>(5);
  CHECK(g5.graph.size() == 15);
  CHECK(g5.graph.edge_count() == 20);

  // both sides independent, integers form a cover
  for (int i = 1; i <= 5; ++i)
    for (int j = i + 1; j <= 5; ++j)
      CHECK_FALSE(g5.graph.adjacent(g5.integer_vertex(i), g5.integer_vertex(j)));
  CHECK(pmca::is_vertex_cover(g5.graph, g5.integer_vertices));

  CHECK(g5.graph.label(g5.integer_vertex(1)) == "1");
  CHECK(g5.graph.label(g5.pair_vertex(2, 4)) == "(2,4)");
  auto [a, b] = g5.pair_of(g5.pair_vertex(2, 4));
  CHECK(a == 2);
  CHECK(b == 4);

  CHECK_THROWS_AS(pmca::build_pair_incidence_graph<1>(0), pmca::InputError);
  CHECK_THROWS_AS(pmca::build_pair_incidence_graph<1>(12), pmca::BudgetError);  // 78 > 64
  CHECK(pmca::build_pair_incidence_graph<2>(12).graph.size() == 78);
}

TEST_CASE("star family") {
  CHECK(pmca::build_star<1>(2).edge_count() == 1);
  Graph64 s4 = pmca::build_star<1>(4);
  CHECK(s4.neighbors(0).count() == 3);
  CHECK(s4.edge_count() == 3);
  CHECK(pmca::build_star<1>(3).adjacent(0, 2));
  CHECK_THROWS_AS(pmca::build_star<1>(1), pmca::InputError);
}

TEST_CASE("tripartition PMCs") {
  auto g3 = pmca::build_pair_incidence_graph<1>(3);
  VS omega = pmca::pmc_from_tripartition(g3, {{{1}, {2}, {3}}});
  CHECK(omega == VS::of({g3.pair_vertex(1, 2), g3.pair_vertex(1, 3), g3.pair_vertex(2, 3)}));
  CHECK(pmca::check_pmc(g3.graph, omega).is_pmc());
  CHECK(pmca::is_free(g3.graph, omega));
  CHECK((omega & g3.integer_vertices).empty());

  auto g4 = pmca::build_pair_incidence_graph<1>(4);
  VS omega4 = pmca::pmc_from_tripartition(g4, {{{1, 2}, {3}, {4}}});
  VS expect;
  for (auto [i, j] : {std::pair{1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}) expect.set(g4.pair_vertex(i, j));
  CHECK(omega4 == expect);

  // all tripartitions of a 4-set: distinct verified free PMCs, S(4,3) many
  std::set<std::uint64_t> seen;
  int count = 0;
  pmca::for_each_tripartition(4, [&](const std::array<std::vector<int>, 3>& parts) {
    VS o = pmca::pmc_from_tripartition(g4, parts);
    CHECK(pmca::check_pmc(g4.graph, o).is_pmc());
    CHECK(pmca::is_free(g4.graph, o));
    seen.insert(o.word(0));
    ++count;
  });
  CHECK(count == static_cast<int>(oracle::stirling_by_enumeration(4, 3)));
  CHECK(seen.size() == 6);

  CHECK_THROWS_AS(pmca::pmc_from_tripartition(g4, {{{1, 2}, {3}, {}}}), pmca::InputError);
  CHECK_THROWS_AS(pmca::pmc_from_tripartition(g4, {{{1, 2}, {3}, {3, 4}}}), pmca::InputError);
  CHECK_THROWS_AS(pmca::pmc_from_tripartition(g4, {{{1}, {2}, {3}}}), pmca::InputError);
}

TEST_CASE("tripartition PMC induces the matching cover partition") {
  auto g5 = pmca::build_pair_incidence_graph<1>(5);
  std::array<std::vector<int>, 3> parts = {{{1, 4}, {2}, {3, 5}}};
  VS omega = pmca::pmc_from_tripartition(g5, parts);
  auto cp = pmca::cover_partition(g5.graph, g5.integer_cover(), omega);
  CHECK(cp.shape == pmca::PartitionShape::kThreeParts);
  REQUIRE(cp.parts.size() == 3);
  CHECK(cp.parts[0] == VS::of({0, 3}));  // integers 1,4
  CHECK(cp.parts[1] == VS::of({1}));     // integer 2
  CHECK(cp.parts[2] == VS::of({2, 4}));  // integers 3,5
}

TEST_CASE("lifting free PMCs") {
  auto g3 = pmca::build_pair_incidence_graph<1>(3);
  auto g4 = pmca::build_pair_incidence_graph<1>(4);
  VS base = pmca::pmc_from_tripartition(g3, {{{1}, {2}, {3}}});

  auto lift = pmca::lift_free_pmc(g4, base, 1);
  CHECK(pmca::check_pmc(g4.graph, lift.omega).is_pmc());
  CHECK(pmca::is_free(g4.graph, lift.omega));
  CHECK((lift.omega & g4.integer_vertices) == VS::of({g4.integer_vertex(4)}));
  CHECK(pmca::check_pmc(g4.graph, lift.omega_relabeled).is_pmc());
  CHECK(pmca::is_free(g4.graph, lift.omega_relabeled));
  CHECK((lift.omega_relabeled & g4.integer_vertices) == VS::of({g4.integer_vertex(1)}));
  CHECK(lift.swapped == std::make_pair(1, 4));

  // chain g3 -> g4 -> g5 stays a free PMC at every step
  auto g5 = pmca::build_pair_incidence_graph<1>(5);
  auto lift2 = pmca::lift_free_pmc(g5, lift.omega_relabeled, 2);
  CHECK(pmca::check_pmc(g5.graph, lift2.omega).is_pmc());
  CHECK((lift2.omega_relabeled & g5.integer_vertices) == VS::first_n(2));

  // wrong integer trace for the target index
  CHECK_THROWS_AS(pmca::lift_free_pmc(g4, base, 2), pmca::InputError);
  CHECK_THROWS_AS(pmca::lift_free_pmc(g4, VS::of({0, 1}), 1), pmca::InputError);
  // correct trace but not a PMC of the smaller family
  CHECK_THROWS_AS(pmca::lift_free_pmc(g4, VS::of({g3.pair_vertex(1, 2)}), 1), pmca::InputError);
}

TEST_CASE("constructed prefix classes have the predicted sizes") {
  for (int k = 3; k <= 5; ++k) {
    for (int i = 0; i <= k; ++i) {
      auto sets = pmca::construct_prefix_free_pmcs<1>(k, i);
      CHECK(static_cast<long long>(sets.size()) == oracle::stirling_by_enumeration(k - i, 3));
      auto gk = pmca::build_pair_incidence_graph<1>(k);
      std::set<std::uint64_t> distinct;
      for (const auto& omega : sets) {
        CHECK(pmca::check_pmc(gk.graph, omega).is_pmc());
        CHECK(pmca::is_free(gk.graph, omega));
        CHECK((omega & gk.integer_vertices) == VS::first_n(i));
        distinct.insert(omega.word(0));
      }
      CHECK(distinct.size() == sets.size());
    }
  }
}

TEST_CASE("free-PMC prefix classes grow along the lift") {
  // |free PMCs of G_k with integer trace {1..i}| never drops below the same
  // count one family earlier, one prefix shorter.
  auto prefix_counts = [](int k) {
    auto gk = pmca::build_pair_incidence_graph<1>(k);
    std::vector<std::uint64_t> counts(static_cast<std::size_t>(k) + 1, 0);
    for (const auto& rec : pmca::enumerate_pmcs(gk.graph)) {
      if (!rec.free) continue;
      for (int i = 0; i <= k; ++i)
        if ((rec.omega & gk.integer_vertices) == VS::first_n(i)) ++counts[static_cast<std::size_t>(i)];
    }
    return counts;
  };
  auto c3 = prefix_counts(3), c4 = prefix_counts(4), c5 = prefix_counts(5);
  for (int i = 1; i <= 4; ++i)
    CHECK(c4[static_cast<std::size_t>(i)] >= c3[static_cast<std::size_t>(i - 1)]);
  for (int i = 1; i <= 5; ++i)
    CHECK(c5[static_cast<std::size_t>(i)] >= c4[static_cast<std::size_t>(i - 1)]);
  CHECK(c5[0] == 25);  // exactly the tripartition sets at the empty prefix
}

TEST_CASE("index permutations are automorphisms") {
  auto g4 = pmca::build_pair_incidence_graph<1>(4);
  VS omega = pmca::pmc_from_tripartition(g4, {{{1, 2}, {3}, {4}}});
  VS image = pmca::apply_index_permutation(g4, omega, {4, 3, 2, 1});
  CHECK(pmca::check_pmc(g4.graph, image).is_pmc());
  CHECK(pmca::is_free(g4.graph, image));
  CHECK(image == pmca::pmc_from_tripartition(g4, {{{4, 3}, {2}, {1}}}));
  CHECK_THROWS_AS(pmca::apply_index_permutation(g4, omega, {1, 1, 2, 3}), pmca::InputError);
  CHECK_THROWS_AS(pmca::apply_index_permutation(g4, omega, {1, 2, 3}), pmca::InputError);
}

TEST_CASE("seeded random cover instances") {
  auto empty = pmca::random_graph_with_cover<1>(2, 6, {0, 1}, 99);
  CHECK(empty.graph.edge_count() == 0);
  CHECK(pmca::is_vertex_cover(empty.graph, empty.cover.vertices));

  auto full = pmca::random_graph_with_cover<1>(1, 4, {1, 1}, 99);
  CHECK(full.graph.edges() == std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {0, 3}});

  auto a = pmca::random_graph_with_cover<1>(3, 10, {1, 2}, 12345);
  auto b = pmca::random_graph_with_cover<1>(3, 10, {1, 2}, 12345);
  CHECK(pmca::to_edge_list(a.graph) == pmca::to_edge_list(b.graph));
  CHECK(pmca::is_vertex_cover(a.graph, a.cover.vertices));
  // no edges among the non-cover side
  for (int u = 3; u < 10; ++u)
    for (int v = u + 1; v < 10; ++v) CHECK_FALSE(a.graph.adjacent(u, v));

  CHECK_THROWS_AS(pmca::random_graph_with_cover<1>(5, 3, {1, 2}, 1), pmca::InputError);
  CHECK_THROWS_AS((pmca::random_graph_with_cover<1>(1, 3, {3, 2}, 1)), pmca::InputError);
}
