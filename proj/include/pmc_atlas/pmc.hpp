#pragma once

#include <cassert>
#include <cstdint>
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "pmc_atlas/errors.hpp"
#include "pmc_atlas/graph.hpp"

namespace pmca {

/// Outcome of testing one vertex set against the two-part potential-maximal-
/// clique characterization: no full component, and every non-adjacent pair
/// inside the set shares some component's neighborhood (the cliquish
/// condition). A false flag always carries a witness.
template <unsigned Words>
struct PmcCheck {
  bool no_full_component = false;
  bool cliquish = false;
  std::optional<Bitset<Words>> full_component;          // witness for condition 1
  std::optional<std::pair<int, int>> uncovered_pair;    // witness for condition 2

  bool is_pmc() const { return no_full_component && cliquish; }
};

/// One verified PMC. `center` is set exactly when the PMC is non-free, in
/// which case omega equals the closed neighborhood of the center.
template <unsigned Words>
struct PmcRecord {
  Bitset<Words> omega;
  bool free = false;
  std::optional<int> center;
};

namespace pmc_detail {

/// Reusable per-worker buffers for the subset scan.
template <unsigned Words>
struct Scratch {
  std::vector<Bitset<Words>> covered;

  void prepare(int n) {
    if (static_cast<int>(covered.size()) < n) covered.resize(static_cast<std::size_t>(n));
  }
};

/// Optimized membership test. Component discovery and both conditions run on
/// word-parallel set operations; `covered[v]` accumulates the union of
/// component neighborhoods containing v, which turns the pair condition into
/// one subset test per member of omega.
template <unsigned Words>
bool is_pmc_subset(const Graph<Words>& g, const Bitset<Words>& omega, Scratch<Words>& scratch) {
  using VS = Bitset<Words>;
  scratch.prepare(g.size());
  omega.for_each([&](int v) { scratch.covered[static_cast<std::size_t>(v)] = VS{}; });

  VS rest = g.vertex_set() - omega;
  while (!rest.empty()) {
    int seed = rest.first();
    VS comp = VS::single(seed);
    VS frontier = comp;
    VS reach;  // union of N(v) over the component
    while (!frontier.empty()) {
      VS next;
      frontier.for_each([&](int u) { next |= g.neighbors(u); });
      reach |= next;
      next &= rest;
      next -= comp;
      comp |= next;
      frontier = next;
    }
    rest -= comp;
    VS nb = reach & omega;
    if (nb == omega) return false;  // full component
    nb.for_each([&](int v) { scratch.covered[static_cast<std::size_t>(v)] |= nb; });
  }

  bool ok = true;
  omega.for_each([&](int u) {
    if (!ok) return;
    VS missing = omega - g.closed_neighborhood(u);
    missing -= scratch.covered[static_cast<std::size_t>(u)];
    if (!missing.empty()) ok = false;
  });
  return ok;
}

}  // namespace pmc_detail

/// Full check with witnesses. Evaluates both conditions independently (no
/// short-circuit between them), so callers can report which one failed.
template <unsigned Words>
PmcCheck<Words> check_pmc(const Graph<Words>& g, const Bitset<Words>& omega) {
  using VS = Bitset<Words>;
  g.require_subset(omega);
  PmcCheck<Words> result;
  result.no_full_component = true;
  result.cliquish = true;

  std::vector<VS> comps = g.components(omega);
  std::vector<VS> nbs;
  nbs.reserve(comps.size());
  for (const VS& c : comps) {
    VS nb = g.neighborhood_of(c) & omega;
    if (result.no_full_component && nb == omega) {
      result.no_full_component = false;
      result.full_component = c;
    }
    nbs.push_back(nb);
  }

  std::vector<VS> covered(static_cast<std::size_t>(g.size()));
  for (const VS& nb : nbs) nb.for_each([&](int v) { covered[static_cast<std::size_t>(v)] |= nb; });
  omega.for_each([&](int u) {
    if (!result.cliquish) return;
    VS missing = omega - g.closed_neighborhood(u);
    missing -= covered[static_cast<std::size_t>(u)];
    if (!missing.empty()) {
      result.cliquish = false;
      result.uncovered_pair = std::make_pair(u, missing.first());
    }
  });
  return result;
}

/// True iff every vertex of the PMC has a neighbor outside it. The input must
/// already be a PMC; that contract is assert-checked.
template <unsigned Words>
bool is_free(const Graph<Words>& g, const Bitset<Words>& omega) {
  g.require_subset(omega);
  assert(check_pmc(g, omega).is_pmc() && "is_free requires a PMC");
  bool free = true;
  omega.for_each([&](int v) {
    if ((g.neighbors(v) - omega).empty()) free = false;
  });
  return free;
}

/// For a non-free PMC, returns the smallest vertex whose closed neighborhood
/// equals it. Such a vertex always exists for non-free PMCs; its absence
/// would be a counterexample and aborts loudly.
template <unsigned Words>
int nonfree_center(const Graph<Words>& g, const Bitset<Words>& omega) {
  g.require_subset(omega);
  assert(check_pmc(g, omega).is_pmc() && "nonfree_center requires a PMC");
  if (is_free(g, omega)) throw InputError("free PMC has no center");
  int center = -1;
  omega.for_each([&](int v) {
    if (center == -1 && g.closed_neighborhood(v) == omega) center = v;
  });
  if (center == -1)
    throw InvariantViolation("non-free PMC is not a closed neighborhood: this contradicts the "
                             "structure of non-free PMCs");
  return center;
}

/// Default cap on brute-force subset scans (2^26 subsets).
inline constexpr int kDefaultEnumerationLimit = 26;

struct EnumerationOptions {
  int max_vertices = kDefaultEnumerationLimit;
  int jobs = 1;
};

namespace pmc_detail {

template <unsigned Words>
void classify_record(const Graph<Words>& g, PmcRecord<Words>& rec) {
  using VS = Bitset<Words>;
  bool free = true;
  rec.omega.for_each([&](int v) {
    if ((g.neighbors(v) - rec.omega).empty()) free = false;
  });
  rec.free = free;
  if (free) return;
  int center = -1;
  rec.omega.for_each([&](int v) {
    if (center == -1 && g.closed_neighborhood(v) == rec.omega) center = v;
  });
  if (center == -1)
    throw InvariantViolation("enumeration found a non-free PMC that is not a closed neighborhood");
  rec.center = center;
}

template <unsigned Words>
std::vector<PmcRecord<Words>> scan_range(const Graph<Words>& g, std::uint64_t lo, std::uint64_t hi) {
  std::vector<PmcRecord<Words>> out;
  Scratch<Words> scratch;
  for (std::uint64_t mask = lo; mask < hi; ++mask) {
    Bitset<Words> omega = Bitset<Words>::from_word(mask);
    if (!is_pmc_subset(g, omega, scratch)) continue;
    PmcRecord<Words> rec;
    rec.omega = omega;
    classify_record(g, rec);
    out.push_back(std::move(rec));
  }
  return out;
}

}  // namespace pmc_detail

/// Brute-force enumeration of all PMCs, in ascending order of the subset
/// bitmask. The subset space may be split into contiguous mask ranges handled
/// by independent workers; shard outputs concatenate in range order, so the
/// result is byte-identical for every worker count.
template <unsigned Words>
std::vector<PmcRecord<Words>> enumerate_pmcs(const Graph<Words>& g, EnumerationOptions opts = {}) {
  int n = g.size();
  int hard_cap = std::min(Bitset<Words>::capacity(), 63);
  int limit = std::min(opts.max_vertices, hard_cap);
  if (n > limit)
    throw BudgetError("graph has " + std::to_string(n) + " vertices; brute-force enumeration is capped at " +
                      std::to_string(limit) + " (2^n subsets)");

  std::uint64_t total = 1ULL << n;
  int jobs = std::max(1, opts.jobs);
  if (jobs == 1 || total < 1024) return pmc_detail::scan_range(g, 0, total);

  std::vector<std::vector<PmcRecord<Words>>> shards(static_cast<std::size_t>(jobs));
  std::vector<std::thread> workers;
  workers.reserve(static_cast<std::size_t>(jobs));
  for (int j = 0; j < jobs; ++j) {
    std::uint64_t lo = total / static_cast<std::uint64_t>(jobs) * static_cast<std::uint64_t>(j);
    std::uint64_t hi = (j + 1 == jobs) ? total : total / static_cast<std::uint64_t>(jobs) * static_cast<std::uint64_t>(j + 1);
    workers.emplace_back([&g, &shards, j, lo, hi] { shards[static_cast<std::size_t>(j)] = pmc_detail::scan_range(g, lo, hi); });
  }
  for (auto& w : workers) w.join();

  std::vector<PmcRecord<Words>> out;
  for (auto& shard : shards)
    for (auto& rec : shard) out.push_back(std::move(rec));
  return out;
}

struct PmcCounts {
  std::uint64_t total = 0;
  std::uint64_t free_count = 0;
  std::uint64_t nonfree = 0;
};

/// Tallies over enumerate_pmcs. Also enforces the structural cap that the
/// number of non-free PMCs cannot exceed n.
template <unsigned Words>
PmcCounts count_pmcs(const Graph<Words>& g, EnumerationOptions opts = {}) {
  PmcCounts c;
  for (const auto& rec : enumerate_pmcs(g, opts)) {
    ++c.total;
    if (rec.free)
      ++c.free_count;
    else
      ++c.nonfree;
  }
  if (c.nonfree > static_cast<std::uint64_t>(g.size()))
    throw InvariantViolation("more non-free PMCs than vertices");
  return c;
}

}  // namespace pmca
