#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "oracles.hpp"
#include "pmc_atlas/constructions.hpp"
#include "pmc_atlas/cover.hpp"

using pmca::Bitset;
using pmca::Graph64;
using pmca::PartitionShape;
using VS = Bitset<1>;

namespace {

Graph64 path(int n) {
  std::vector<std::pair<int, int>> e;
  for (int v = 0; v + 1 < n; ++v) e.emplace_back(v, v + 1);
  return Graph64::from_edges(n, e);
}

Graph64 cycle(int n) {
  std::vector<std::pair<int, int>> e;
  for (int v = 0; v < n; ++v) e.emplace_back(v, (v + 1) % n);
  return Graph64::from_edges(n, e);
}

Graph64 random_graph(int n, std::mt19937& rng, int percent = 50) {
  std::vector<std::pair<int, int>> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (static_cast<int>(rng() % 100) < percent) e.emplace_back(u, v);
  return Graph64::from_edges(n, e);
}

}  // namespace

TEST_CASE("vertex cover test") {
  Graph64 s = pmca::build_star<1>(5);
  CHECK(pmca::is_vertex_cover(s, VS::of({0})));
  Graph64 p3 = path(3);
  CHECK(pmca::is_vertex_cover(p3, VS::of({0, 2})));
  CHECK_FALSE(pmca::is_vertex_cover(p3, VS::of({0})));
  CHECK(pmca::is_vertex_cover(p3, VS::of({0, 1, 2})));
  CHECK(pmca::is_vertex_cover(Graph64::from_edges(3, {}), VS{}));
}

TEST_CASE("minimum vertex cover on hand examples") {
  auto star_cover = pmca::minimum_vertex_cover(pmca::build_star<1>(7));
  CHECK(star_cover.size == 1);
  CHECK(star_cover.vertices == VS::of({0}));

  auto c4 = pmca::minimum_vertex_cover(cycle(4));
  CHECK(c4.size == 2);
  CHECK(c4.vertices == VS::of({0, 2}));  // lex tie-break over {1,3}

  auto g3 = pmca::build_pair_incidence_graph<1>(3);  // a 6-cycle
  CHECK(pmca::minimum_vertex_cover(g3.graph).size == 3);
}

TEST_CASE("minimum vertex cover is minimum, exhaustively") {
  std::mt19937 rng(808);
  for (int trial = 0; trial < 50; ++trial) {
    int n = 1 + static_cast<int>(rng() % 16);
    Graph64 g = random_graph(n, rng, 10 + static_cast<int>(rng() % 70));
    auto cover = pmca::minimum_vertex_cover(g);
    CHECK(pmca::is_vertex_cover(g, cover.vertices));
    CHECK(cover.size == cover.vertices.count());
    CHECK(cover.size == oracle::minimum_cover_size(oracle::make_graph(n, g.edges())));
  }
}

TEST_CASE("minimum vertex cover tie-break is lexicographic") {
  std::mt19937 rng(809);
  for (int trial = 0; trial < 25; ++trial) {
    int n = 2 + static_cast<int>(rng() % 10);
    Graph64 g = random_graph(n, rng, 40);
    auto cover = pmca::minimum_vertex_cover(g);
    // no cover of the same size is lexicographically smaller
    for (std::uint64_t mask = 0; mask < (1ULL << n); ++mask) {
      VS s = VS::from_word(mask);
      if (s.count() != cover.size || !pmca::is_vertex_cover(g, s)) continue;
      CHECK_FALSE(pmca::lex_vertices_less(s, cover.vertices));
    }
  }
}

TEST_CASE("cover search budgets") {
  auto opts = pmca::CoverSearchOptions{.max_cover = 1, .node_budget = 1000000};
  CHECK_THROWS_AS(pmca::minimum_vertex_cover(cycle(4), opts), pmca::BudgetError);
  auto tiny = pmca::CoverSearchOptions{.max_cover = 32, .node_budget = 2};
  CHECK_THROWS_AS(pmca::minimum_vertex_cover(cycle(12), tiny), pmca::BudgetError);
}

TEST_CASE("cover partition on hand examples") {
  auto g3 = pmca::build_pair_incidence_graph<1>(3);
  auto vk = g3.integer_cover();
  VS omega = pmca::pmc_from_tripartition(g3, {{{1}, {2}, {3}}});
  auto part = pmca::cover_partition(g3.graph, vk, omega);
  CHECK(part.inner_in_omega.empty());
  REQUIRE(part.parts.size() == 3);
  CHECK(part.parts[0] == VS::of({0}));
  CHECK(part.parts[1] == VS::of({1}));
  CHECK(part.parts[2] == VS::of({2}));
  CHECK(part.shape == PartitionShape::kThreeParts);

  Graph64 s = pmca::build_star<1>(4);
  auto spart = pmca::cover_partition(s, pmca::make_vertex_cover(s, VS::of({0})), VS::of({0, 1}));
  CHECK(spart.inner_in_omega == VS::of({0}));
  CHECK(spart.parts.empty());
  CHECK(spart.shape == PartitionShape::kInnerOnly);

  Graph64 p3 = path(3);
  auto ppart = pmca::cover_partition(p3, pmca::make_vertex_cover(p3, VS::of({1})), VS::of({0, 1}));
  CHECK(ppart.inner_in_omega == VS::of({1}));
  CHECK(ppart.parts.empty());
  CHECK(ppart.shape == PartitionShape::kInnerOnly);
}

TEST_CASE("cover partition pieces are disjoint and exhaustive") {
  std::mt19937 rng(4096);
  for (int trial = 0; trial < 30; ++trial) {
    int n = 2 + static_cast<int>(rng() % 9);
    Graph64 g = random_graph(n, rng, 35);
    auto vk = pmca::minimum_vertex_cover(g);
    for (const auto& rec : pmca::enumerate_pmcs(g)) {
      auto part = pmca::cover_partition(g, vk, rec.omega);
      VS seen = part.inner_in_omega;
      for (const auto& p : part.parts) {
        CHECK_FALSE(p.empty());
        CHECK((p & seen).empty());
        seen |= p;
      }
      CHECK(seen == vk.vertices);
    }
  }
}

TEST_CASE("classification groups free PMCs by exact partition") {
  // Supergraph of K2 over the cover {0}: 3 vertices
  Graph64 k2 = Graph64::from_edges(2, {{0, 1}});
  auto vk = pmca::make_vertex_cover(k2, VS::of({0}));
  auto m = pmca::build_cover_supergraph(k2, vk);
  REQUIRE(m.graph.size() == 3);
  auto classes = pmca::classify_free_pmcs(m.graph, pmca::make_vertex_cover(m.graph, m.inner),
                                          pmca::enumerate_pmcs(m.graph), true);
  // per-shape caps for k = 1
  for (const auto& cls : classes) {
    INFO(pmca::to_string(cls.partition.shape));
    switch (cls.partition.shape) {
      case PartitionShape::kInnerOnePart:
        CHECK(cls.members.size() <= 1);  // k = 1
        break;
      case PartitionShape::kInnerTwoParts:
        CHECK(cls.members.size() <= 2);  // 2k
        break;
      case PartitionShape::kInnerThreeParts:
      case PartitionShape::kThreeParts:
        CHECK(cls.members.size() <= 1);
        break;
      case PartitionShape::kInnerOnly:
      case PartitionShape::kOnePart:
      case PartitionShape::kTwoParts:
        FAIL("free PMC with a forbidden partition shape");
        break;
      default:
        break;
    }
  }

  // G_3 with the integer cover: the tripartition PMC forms its own class
  auto g3 = pmca::build_pair_incidence_graph<1>(3);
  VS omega = pmca::pmc_from_tripartition(g3, {{{1}, {2}, {3}}});
  auto g3_classes = pmca::classify_free_pmcs(g3.graph, g3.integer_cover(),
                                             pmca::enumerate_pmcs(g3.graph));
  bool found = false;
  for (const auto& cls : g3_classes) {
    if (cls.partition.shape != PartitionShape::kThreeParts) continue;
    found = true;
    REQUIRE(cls.members.size() == 1);
    CHECK(cls.members[0] == omega);
  }
  CHECK(found);

  // no free PMCs at all -> empty grouping
  auto empty_classes = pmca::classify_free_pmcs(pmca::build_star<1>(5),
                                                pmca::make_vertex_cover(pmca::build_star<1>(5), VS::of({0})),
                                                pmca::enumerate_pmcs(pmca::build_star<1>(5)));
  CHECK(empty_classes.empty());
}

TEST_CASE("arbitrary graphs may exceed three parts and are only tagged") {
  // Star with the all-leaves cover: {center, leaf} is a PMC and the other
  // four leaves are four one-vertex components, each a part of its own.
  Graph64 s6 = pmca::build_star<1>(6);
  VS omega = VS::of({0, 1});
  REQUIRE(pmca::check_pmc(s6, omega).is_pmc());
  auto vk = pmca::make_vertex_cover(s6, VS::of({1, 2, 3, 4, 5}));
  auto part = pmca::cover_partition(s6, vk, omega);
  CHECK(part.inner_in_omega == VS::of({1}));
  CHECK(part.parts.size() == 4);
  CHECK(part.shape == PartitionShape::kOutOfTheory);
  CHECK_THROWS_AS(pmca::cover_partition(s6, vk, omega, true), pmca::InvariantViolation);
}

TEST_CASE("partition keys order classes deterministically") {
  std::mt19937 rng(11);
  Graph64 g = random_graph(9, rng, 45);
  auto vk = pmca::minimum_vertex_cover(g);
  auto records = pmca::enumerate_pmcs(g);
  auto a = pmca::classify_free_pmcs(g, vk, records);
  auto b = pmca::classify_free_pmcs(g, vk, records);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].partition.same_partition(b[i].partition));
    CHECK(a[i].members == b[i].members);
    if (i > 0) CHECK(a[i - 1].partition.before(a[i].partition));
  }
}
