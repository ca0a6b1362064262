#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "pmc_atlas/cover.hpp"
#include "pmc_atlas/errors.hpp"
#include "pmc_atlas/graph.hpp"
#include "pmc_atlas/pmc.hpp"

namespace pmca {

/// The cover supergraph: the input graph plus one added vertex per non-empty
/// subset X of the cover, adjacent to exactly X. Original vertices keep their
/// ids; added vertices follow in ascending order of the subset bitmask (over
/// the cover vertices in ascending order).
template <unsigned Words>
struct CoverSupergraph {
  Graph<Words> base;
  Graph<Words> graph;
  Bitset<Words> inner;               // the cover, unchanged ids
  std::vector<int> cover_vertices;   // ascending
  int k = 0;

  /// Vertex id of the added vertex for subset `mask` (bit i = cover_vertices[i]).
  int subset_vertex(std::uint32_t mask) const {
    if (mask == 0 || mask >= (1u << k)) throw InputError("subset mask out of range");
    return base.size() + static_cast<int>(mask) - 1;
  }

  bool is_added_vertex(int v) const { return v >= base.size(); }

  /// Outer vertices: everything except the cover (non-cover originals plus
  /// all added vertices).
  Bitset<Words> outer() const { return graph.vertex_set() - inner; }
};

template <unsigned Words>
CoverSupergraph<Words> build_cover_supergraph(const Graph<Words>& g, const VertexCover<Words>& vk,
                                              int k_cap = 16) {
  if (!is_vertex_cover(g, vk.vertices)) throw InputError("given set is not a vertex cover");
  int k = vk.size;
  if (k > k_cap)
    throw BudgetError("cover has " + std::to_string(k) + " vertices; the supergraph adds 2^k-1 and the cap is k <= " +
                      std::to_string(k_cap));
  long long added = (1LL << k) - 1;
  long long total = g.size() + added;
  if (total > Bitset<Words>::capacity())
    throw BudgetError("cover supergraph needs " + std::to_string(total) + " vertices; this build supports up to " +
                      std::to_string(Bitset<Words>::capacity()));

  CoverSupergraph<Words> m;
  m.base = g;
  m.inner = vk.vertices;
  m.cover_vertices = vk.vertices.to_vector();
  m.k = k;

  std::vector<std::pair<int, int>> edges = g.edges();
  std::vector<std::string> labels;
  labels.reserve(static_cast<std::size_t>(total));
  for (int v = 0; v < g.size(); ++v) labels.push_back(g.label(v));
  for (std::uint32_t mask = 1; mask < (1u << k); ++mask) {
    int id = g.size() + static_cast<int>(mask) - 1;
    std::string name = "M{";
    bool first = true;
    for (int i = 0; i < k; ++i) {
      if (!(mask >> i & 1)) continue;
      if (!first) name += ",";
      first = false;
      name += g.label(m.cover_vertices[static_cast<std::size_t>(i)]);
      edges.emplace_back(m.cover_vertices[static_cast<std::size_t>(i)], id);
    }
    name += "}";
    labels.push_back(std::move(name));
  }
  m.graph = Graph<Words>::from_edges(static_cast<int>(total), edges, std::move(labels));
  return m;
}

/// The lower-bound family graph: integers 1..k on one side, all unordered
/// pairs from them on the other, each pair vertex adjacent to its two
/// endpoints. Integer i sits at id i-1; pair vertices follow in lexicographic
/// order. Both sides are independent sets and the integers form a (given, not
/// necessarily minimum) vertex cover.
template <unsigned Words>
struct PairIncidenceGraph {
  int k = 0;
  Graph<Words> graph;
  Bitset<Words> integer_vertices;

  int integer_vertex(int i) const {  // 1-indexed
    if (i < 1 || i > k) throw InputError("integer vertex index out of range");
    return i - 1;
  }

  int pair_vertex(int i, int j) const {  // 1-indexed, i != j
    if (i == j || i < 1 || j < 1 || i > k || j > k) throw InputError("bad pair vertex indices");
    if (i > j) std::swap(i, j);
    return k + (i - 1) * k - i * (i - 1) / 2 + (j - i - 1);
  }

  /// Inverse of pair_vertex for ids >= k.
  std::pair<int, int> pair_of(int id) const {
    if (id < k || id >= graph.size()) throw InputError("not a pair vertex id");
    int t = id - k;
    for (int i = 1; i < k; ++i) {
      int row = k - i;
      if (t < row) return {i, i + 1 + t};
      t -= row;
    }
    throw InputError("not a pair vertex id");
  }

  VertexCover<Words> integer_cover() const {
    return VertexCover<Words>{integer_vertices, k};
  }
};

template <unsigned Words>
PairIncidenceGraph<Words> build_pair_incidence_graph(int k) {
  if (k < 1) throw InputError("family parameter k must be >= 1");
  long long n = k + static_cast<long long>(k) * (k - 1) / 2;
  if (n > Bitset<Words>::capacity())
    throw BudgetError("family graph needs " + std::to_string(n) + " vertices; this build supports up to " +
                      std::to_string(Bitset<Words>::capacity()));

  PairIncidenceGraph<Words> gk;
  gk.k = k;
  gk.integer_vertices = Bitset<Words>::first_n(k);

  std::vector<std::string> labels;
  for (int i = 1; i <= k; ++i) labels.push_back(std::to_string(i));
  std::vector<std::pair<int, int>> edges;
  int id = k;
  for (int i = 1; i <= k; ++i) {
    for (int j = i + 1; j <= k; ++j, ++id) {
      labels.push_back("(" + std::to_string(i) + "," + std::to_string(j) + ")");
      edges.emplace_back(i - 1, id);
      edges.emplace_back(j - 1, id);
    }
  }
  gk.graph = Graph<Words>::from_edges(static_cast<int>(n), edges, std::move(labels));
  return gk;
}

/// Star with center 0 and leaves 1..n-1.
template <unsigned Words>
Graph<Words> build_star(int n) {
  if (n < 2) throw InputError("star requires n >= 2");
  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<std::size_t>(n) - 1);
  for (int v = 1; v < n; ++v) edges.emplace_back(0, v);
  return Graph<Words>::from_edges(n, edges);
}

/// Enumerates the partitions of {1..m} into exactly three non-empty parts, in
/// canonical (restricted-growth) order. The callback receives the parts with
/// 1 in the first part and part order fixed by first occurrence.
template <typename F>
void for_each_tripartition(int m, F f) {
  if (m < 3) return;
  std::vector<int> assign(static_cast<std::size_t>(m), 0);
  auto rec = [&](auto&& self, int next, int used) -> void {
    if (next == m) {
      if (used != 3) return;
      std::array<std::vector<int>, 3> parts;
      for (int e = 0; e < m; ++e) parts[static_cast<std::size_t>(assign[static_cast<std::size_t>(e)])].push_back(e + 1);
      f(parts);
      return;
    }
    int top = std::min(used, 2);  // may join an existing part or open the next one
    for (int p = 0; p <= top; ++p) {
      assign[static_cast<std::size_t>(next)] = p;
      self(self, next + 1, std::max(used, p + 1));
    }
  };
  assign[0] = 0;
  rec(rec, 1, 1);
}

/// The explicit free PMC of the pair-incidence graph determined by a
/// tripartition of {1..k}: all pair vertices whose endpoints lie in different
/// parts. Distinct tripartitions give distinct sets, and the result is always
/// a free PMC disjoint from the integer side.
template <unsigned Words>
Bitset<Words> pmc_from_tripartition(const PairIncidenceGraph<Words>& gk,
                                    const std::array<std::vector<int>, 3>& parts) {
  std::vector<int> part_of(static_cast<std::size_t>(gk.k) + 1, -1);
  int covered = 0;
  for (int p = 0; p < 3; ++p) {
    if (parts[static_cast<std::size_t>(p)].empty()) throw InputError("tripartition parts must be non-empty");
    for (int e : parts[static_cast<std::size_t>(p)]) {
      if (e < 1 || e > gk.k || part_of[static_cast<std::size_t>(e)] != -1)
        throw InputError("tripartition must cover {1..k} with disjoint parts");
      part_of[static_cast<std::size_t>(e)] = p;
      ++covered;
    }
  }
  if (covered != gk.k) throw InputError("tripartition must cover {1..k} with disjoint parts");

  Bitset<Words> omega;
  for (int i = 1; i <= gk.k; ++i)
    for (int j = i + 1; j <= gk.k; ++j)
      if (part_of[static_cast<std::size_t>(i)] != part_of[static_cast<std::size_t>(j)])
        omega.set(gk.pair_vertex(i, j));
  return omega;
}

/// Relabels a vertex set of the pair-incidence graph along a permutation of
/// the integer indices (1-indexed; perm[i-1] is the image of i). Index
/// permutations are graph automorphisms, so PMC-ness and freeness carry over.
template <unsigned Words>
Bitset<Words> apply_index_permutation(const PairIncidenceGraph<Words>& gk,
                                      const Bitset<Words>& set, const std::vector<int>& perm) {
  if (static_cast<int>(perm.size()) != gk.k) throw InputError("permutation size must equal k");
  std::vector<bool> seen(static_cast<std::size_t>(gk.k) + 1, false);
  for (int image : perm) {
    if (image < 1 || image > gk.k || seen[static_cast<std::size_t>(image)])
      throw InputError("not a permutation of {1..k}");
    seen[static_cast<std::size_t>(image)] = true;
  }
  Bitset<Words> out;
  set.for_each([&](int v) {
    if (v < gk.k) {
      out.set(gk.integer_vertex(perm[static_cast<std::size_t>(v)]));
    } else {
      auto [i, j] = gk.pair_of(v);
      out.set(gk.pair_vertex(perm[static_cast<std::size_t>(i - 1)], perm[static_cast<std::size_t>(j - 1)]));
    }
  });
  return out;
}

template <unsigned Words>
struct LiftedPmc {
  Bitset<Words> omega;            // integer trace {1..i-1} u {k}
  Bitset<Words> omega_relabeled;  // after swapping k and i: integer trace {1..i}
  std::pair<int, int> swapped;    // the applied transposition (i, k)
};

/// Lifts a free PMC of the (k-1)-family into the k-family by embedding it and
/// adding integer k. The input must be a free PMC of the (k-1)-family whose
/// integer trace is exactly {1..i-1}; the output is a free PMC with integer
/// trace {1..i-1} u {k}, plus the transposed copy whose trace is {1..i}.
template <unsigned Words>
LiftedPmc<Words> lift_free_pmc(const PairIncidenceGraph<Words>& gk, const Bitset<Words>& omega_prev,
                               int i) {
  int k = gk.k;
  if (k < 2) throw InputError("lift requires k >= 2");
  if (i < 1 || i > k) throw InputError("lift target index out of range");
  PairIncidenceGraph<Words> prev = build_pair_incidence_graph<Words>(k - 1);
  prev.graph.require_subset(omega_prev);
  if ((omega_prev & prev.integer_vertices) != Bitset<Words>::first_n(i - 1))
    throw InputError("input integer trace must be exactly {1..i-1}");
  if (!check_pmc(prev.graph, omega_prev).is_pmc() || !is_free(prev.graph, omega_prev))
    throw InputError("lift input must be a free PMC of the (k-1)-family");

  LiftedPmc<Words> out;
  omega_prev.for_each([&](int v) {
    if (v < k - 1) {
      out.omega.set(v);
    } else {
      auto [a, b] = prev.pair_of(v);
      out.omega.set(gk.pair_vertex(a, b));
    }
  });
  out.omega.set(gk.integer_vertex(k));
  out.swapped = {i, k};
  std::vector<int> perm(static_cast<std::size_t>(k));
  for (int e = 1; e <= k; ++e) perm[static_cast<std::size_t>(e - 1)] = e;
  perm[static_cast<std::size_t>(i - 1)] = k;
  perm[static_cast<std::size_t>(k - 1)] = i;
  out.omega_relabeled = apply_index_permutation(gk, out.omega, perm);
  return out;
}

/// Builds the S(k-i, 3) constructed free PMCs of the k-family whose integer
/// trace is exactly {1..i}: tripartition PMCs of the (k-i)-family pushed up
/// through i successive lifts, each verified on the way.
template <unsigned Words>
std::vector<Bitset<Words>> construct_prefix_free_pmcs(int k, int i) {
  if (k < 1 || i < 0 || i > k) throw InputError("need 0 <= i <= k with k >= 1");
  int base_k = k - i;
  if (base_k < 3) return {};
  PairIncidenceGraph<Words> base = build_pair_incidence_graph<Words>(base_k);
  std::vector<Bitset<Words>> current;
  for_each_tripartition(base_k, [&](const std::array<std::vector<int>, 3>& parts) {
    current.push_back(pmc_from_tripartition(base, parts));
  });
  for (int step = 1; step <= i; ++step) {
    PairIncidenceGraph<Words> next = build_pair_incidence_graph<Words>(base_k + step);
    std::vector<Bitset<Words>> lifted;
    lifted.reserve(current.size());
    for (const auto& omega : current)
      lifted.push_back(lift_free_pmc(next, omega, step).omega_relabeled);
    current = std::move(lifted);
  }
  return current;
}

/// Probability as an exact fraction so that edge draws are reproducible
/// across platforms.
struct EdgeProbability {
  std::uint64_t num = 1;
  std::uint64_t den = 2;
};

template <unsigned Words>
struct RandomCoverInstance {
  Graph<Words> graph;
  VertexCover<Words> cover;
};

/// Seeded random graph in which vertices 0..k-1 form a vertex cover: every
/// edge incident to that side is drawn independently with the given
/// probability, and the remaining vertices form an independent set. The draw
/// sequence is fixed (u ascending, then v), so one seed always produces the
/// same graph.
template <unsigned Words>
RandomCoverInstance<Words> random_graph_with_cover(int k, int n, EdgeProbability p,
                                                   std::uint64_t seed) {
  if (k < 0 || n < 0 || k > n) throw InputError("need 0 <= k <= n");
  if (p.den == 0 || p.num > p.den) throw InputError("edge probability must be a fraction in [0, 1]");
  if (n > Bitset<Words>::capacity())
    throw BudgetError("graph has " + std::to_string(n) + " vertices; this build supports up to " +
                      std::to_string(Bitset<Words>::capacity()));
  std::mt19937_64 rng(seed);
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < k; ++u) {
    for (int v = u + 1; v < n; ++v) {
      std::uint64_t draw = rng();
      // draw / 2^64 < num/den, in exact integer arithmetic
      if (static_cast<unsigned __int128>(draw) * p.den < (static_cast<unsigned __int128>(p.num) << 64))
        edges.emplace_back(u, v);
    }
  }
  RandomCoverInstance<Words> inst;
  inst.graph = Graph<Words>::from_edges(n, edges);
  inst.cover = VertexCover<Words>{Bitset<Words>::first_n(k), k};
  return inst;
}

}  // namespace pmca
