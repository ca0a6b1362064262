#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "pmc_atlas/errors.hpp"
#include "pmc_atlas/graph.hpp"
#include "pmc_atlas/pmc.hpp"

namespace pmca {

template <unsigned Words>
bool is_vertex_cover(const Graph<Words>& g, const Bitset<Words>& s) {
  g.require_subset(s);
  for (int v = 0; v < g.size(); ++v) {
    if (s.test(v)) continue;
    if (!(g.neighbors(v) - s).empty()) return false;  // edge with both ends outside s
  }
  return true;
}

template <unsigned Words>
struct VertexCover {
  Bitset<Words> vertices;
  int size = 0;
};

template <unsigned Words>
VertexCover<Words> make_vertex_cover(const Graph<Words>& g, const Bitset<Words>& s) {
  if (!is_vertex_cover(g, s)) throw InputError("set is not a vertex cover");
  return VertexCover<Words>{s, s.count()};
}

struct CoverSearchOptions {
  int max_cover = 32;
  std::uint64_t node_budget = 50'000'000;
};

namespace cover_detail {

template <unsigned Words>
struct CoverSearch {
  const Graph<Words>& g;
  CoverSearchOptions opts;
  std::uint64_t nodes = 0;
  int best_size;
  Bitset<Words> best;
  bool found = false;

  explicit CoverSearch(const Graph<Words>& graph, CoverSearchOptions o)
      : g(graph), opts(o), best_size(o.max_cover + 1) {}

  // Smallest-endpoint uncovered edge, or (-1, -1) when chosen is a cover.
  std::pair<int, int> uncovered_edge(const Bitset<Words>& chosen) const {
    for (int u = 0; u < g.size(); ++u) {
      if (chosen.test(u)) continue;
      Bitset<Words> nb = g.neighbors(u) - chosen;
      if (!nb.empty()) return {u, nb.first()};
    }
    return {-1, -1};
  }

  // Number of pairwise-disjoint uncovered edges; each forces one more pick.
  int matching_lower_bound(const Bitset<Words>& chosen) const {
    Bitset<Words> blocked = chosen;
    int count = 0;
    for (int u = 0; u < g.size(); ++u) {
      if (blocked.test(u)) continue;
      Bitset<Words> nb = g.neighbors(u) - blocked;
      if (nb.empty()) continue;
      blocked.set(u);
      blocked.set(nb.first());
      ++count;
    }
    return count;
  }

  void run(Bitset<Words> chosen, int chosen_size) {
    if (++nodes > opts.node_budget)
      throw BudgetError("vertex cover search exceeded its node budget");
    // Equal-size branches stay open so ties resolve to the lexicographically
    // smallest cover.
    if (chosen_size + matching_lower_bound(chosen) > best_size) return;
    auto [u, v] = uncovered_edge(chosen);
    if (u == -1) {
      if (chosen_size < best_size ||
          (chosen_size == best_size && lex_vertices_less(chosen, best))) {
        best_size = chosen_size;
        best = chosen;
        found = true;
      }
      return;
    }
    if (chosen_size + 1 > best_size) return;
    Bitset<Words> with_u = chosen;
    with_u.set(u);
    run(with_u, chosen_size + 1);
    Bitset<Words> with_v = chosen;
    with_v.set(v);
    run(with_v, chosen_size + 1);
  }
};

}  // namespace cover_detail

/// Minimum vertex cover by branching on an uncovered edge, pruned by a greedy
/// matching lower bound. Ties break toward the lexicographically smallest
/// vertex sequence. Throws BudgetError if no cover within `max_cover` exists
/// or the node budget runs out.
template <unsigned Words>
VertexCover<Words> minimum_vertex_cover(const Graph<Words>& g, CoverSearchOptions opts = {}) {
  cover_detail::CoverSearch<Words> search(g, opts);
  search.run(Bitset<Words>{}, 0);
  if (!search.found)
    throw BudgetError("no vertex cover of size <= " + std::to_string(opts.max_cover) + " found");
  return VertexCover<Words>{search.best, search.best_size};
}

/// The case shapes a PMC can induce on a vertex cover: which of the pieces
/// {cover-inside-omega, P1, P2, P3} are present. More than three parts is
/// impossible on cover supergraphs and is reported as out_of_theory on
/// arbitrary graphs.
enum class PartitionShape {
  kEmpty,            // k = 0
  kInnerOnly,
  kOnePart,
  kTwoParts,
  kThreeParts,
  kInnerOnePart,
  kInnerTwoParts,
  kInnerThreeParts,
  kOutOfTheory,
};

inline const char* to_string(PartitionShape s) {
  switch (s) {
    case PartitionShape::kEmpty: return "empty";
    case PartitionShape::kInnerOnly: return "inner_only";
    case PartitionShape::kOnePart: return "one_part";
    case PartitionShape::kTwoParts: return "two_parts";
    case PartitionShape::kThreeParts: return "three_parts";
    case PartitionShape::kInnerOnePart: return "inner_one_part";
    case PartitionShape::kInnerTwoParts: return "inner_two_parts";
    case PartitionShape::kInnerThreeParts: return "inner_three_parts";
    case PartitionShape::kOutOfTheory: return "out_of_theory";
  }
  return "?";
}

/// Partition of a vertex cover induced by a PMC: the cover vertices inside
/// the PMC, plus the cover's trace on each component of G \ omega. Parts are
/// canonically ordered by smallest element.
template <unsigned Words>
struct CoverPartition {
  Bitset<Words> inner_in_omega;
  std::vector<Bitset<Words>> parts;
  PartitionShape shape = PartitionShape::kEmpty;

  bool same_partition(const CoverPartition& o) const {
    return inner_in_omega == o.inner_in_omega && parts == o.parts;
  }

  /// Deterministic order over partitions, used to key classification groups.
  bool before(const CoverPartition& o) const {
    if (!(inner_in_omega == o.inner_in_omega)) return inner_in_omega.mask_less(o.inner_in_omega);
    if (parts.size() != o.parts.size()) return parts.size() < o.parts.size();
    for (std::size_t i = 0; i < parts.size(); ++i)
      if (!(parts[i] == o.parts[i])) return parts[i].mask_less(o.parts[i]);
    return false;
  }
};

/// Computes the induced partition. With `cover_supergraph_rules` set (the
/// builder that attaches one vertex per cover subset guarantees this), more
/// than three parts aborts as a falsified structural fact; otherwise the
/// partition is tagged out_of_theory and returned.
template <unsigned Words>
CoverPartition<Words> cover_partition(const Graph<Words>& g, const VertexCover<Words>& vk,
                                      const Bitset<Words>& omega,
                                      bool cover_supergraph_rules = false) {
  g.require_subset(omega);
  if (!is_vertex_cover(g, vk.vertices)) throw InputError("given set is not a vertex cover");
  assert(check_pmc(g, omega).is_pmc() && "cover_partition requires a PMC");

  CoverPartition<Words> p;
  p.inner_in_omega = vk.vertices & omega;
  for (const auto& comp : g.components(omega)) {
    Bitset<Words> part = comp & vk.vertices;
    if (!part.empty()) p.parts.push_back(part);
  }
  std::sort(p.parts.begin(), p.parts.end(),
            [](const Bitset<Words>& a, const Bitset<Words>& b) { return a.first() < b.first(); });

  bool inner = !p.inner_in_omega.empty();
  std::size_t np = p.parts.size();
  if (np > 3) {
    if (cover_supergraph_rules)
      throw InvariantViolation("PMC splits the cover across " + std::to_string(np) +
                               " components of a cover supergraph");
    p.shape = PartitionShape::kOutOfTheory;
  } else if (!inner && np == 0) {
    p.shape = PartitionShape::kEmpty;
  } else if (np == 0) {
    p.shape = PartitionShape::kInnerOnly;
  } else if (inner) {
    p.shape = np == 1 ? PartitionShape::kInnerOnePart
                      : np == 2 ? PartitionShape::kInnerTwoParts : PartitionShape::kInnerThreeParts;
  } else {
    p.shape = np == 1 ? PartitionShape::kOnePart
                      : np == 2 ? PartitionShape::kTwoParts : PartitionShape::kThreeParts;
  }
  return p;
}

/// All free PMCs with one exact cover partition.
template <unsigned Words>
struct FreePmcClass {
  CoverPartition<Words> partition;
  std::vector<Bitset<Words>> members;  // ascending bitmask order
};

/// Groups free PMCs by the exact partition they induce on the cover. Classes
/// come out in canonical partition order, members in enumeration order, so
/// the grouping is stable across runs and worker counts.
template <unsigned Words>
std::vector<FreePmcClass<Words>> classify_free_pmcs(const Graph<Words>& g,
                                                    const VertexCover<Words>& vk,
                                                    const std::vector<PmcRecord<Words>>& records,
                                                    bool cover_supergraph_rules = false) {
  std::vector<FreePmcClass<Words>> classes;
  for (const auto& rec : records) {
    if (!rec.free) continue;
    CoverPartition<Words> part = cover_partition(g, vk, rec.omega, cover_supergraph_rules);
    FreePmcClass<Words>* slot = nullptr;
    for (auto& cls : classes)
      if (cls.partition.same_partition(part)) {
        slot = &cls;
        break;
      }
    if (!slot) {
      classes.push_back(FreePmcClass<Words>{std::move(part), {}});
      slot = &classes.back();
    }
    slot->members.push_back(rec.omega);
  }
  std::sort(classes.begin(), classes.end(),
            [](const FreePmcClass<Words>& a, const FreePmcClass<Words>& b) {
              return a.partition.before(b.partition);
            });
  return classes;
}

/// Convenience overload that enumerates internally.
template <unsigned Words>
std::vector<FreePmcClass<Words>> classify_free_pmcs(const Graph<Words>& g,
                                                    const VertexCover<Words>& vk,
                                                    EnumerationOptions opts = {},
                                                    bool cover_supergraph_rules = false) {
  return classify_free_pmcs(g, vk, enumerate_pmcs(g, opts), cover_supergraph_rules);
}

}  // namespace pmca
