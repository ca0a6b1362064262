#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "pmc_atlas/errors.hpp"

namespace pmca {

/// Every counting formula in this header is evaluated in exact arbitrary
/// precision; 4^k leaves 64 bits at k = 32 and the inequalities must not be
/// decided by rounding.
using BigInt = boost::multiprecision::cpp_int;

/// Stirling number of the second kind S(n, k): partitions of an n-set into k
/// non-empty parts. Computed by the recurrence
/// S(n, k) = k * S(n-1, k) + S(n-1, k-1).
inline BigInt stirling2(int n, int k) {
  if (n < 0 || k < 0) throw InputError("stirling2 arguments must be non-negative");
  if (k > n) return 0;
  std::vector<BigInt> row(static_cast<std::size_t>(k) + 1, 0);
  row[0] = 1;  // S(0, 0)
  for (int i = 1; i <= n; ++i) {
    for (int j = std::min(i, k); j >= 1; --j)
      row[static_cast<std::size_t>(j)] = j * row[static_cast<std::size_t>(j)] + row[static_cast<std::size_t>(j) - 1];
    row[0] = 0;  // S(i, 0) for i > 0
  }
  return row[static_cast<std::size_t>(k)];
}

/// Binomial coefficient, exact; 0 outside the triangle.
inline BigInt binomial(int n, int k) {
  if (n < 0) throw InputError("binomial requires n >= 0");
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt r = 1;
  for (int i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;  // exact: r is C(n-k+i, i) after this step
  }
  return r;
}

inline BigInt pow2(int k) { return BigInt(1) << k; }
inline BigInt pow4(int k) { return BigInt(1) << (2 * k); }

/// The four addends bounding the free PMC count of the cover supergraph:
/// S(k,3) + k*2^k + 6k*S(k,3) + 4*S(k,4), one per partition shape.
struct FreeBoundTerms {
  BigInt three_parts;        // S(k, 3)
  BigInt inner_one_part;     // k * 2^k
  BigInt inner_two_parts;    // 6k * S(k, 3)
  BigInt inner_three_parts;  // 4 * S(k, 4)

  BigInt total() const { return three_parts + inner_one_part + inner_two_parts + inner_three_parts; }
};

inline FreeBoundTerms free_bound_terms(int k) {
  if (k < 0) throw InputError("free_bound_terms requires k >= 0");
  FreeBoundTerms t;
  BigInt s3 = stirling2(k, 3);
  t.three_parts = s3;
  t.inner_one_part = k * pow2(k);
  t.inner_two_parts = 6 * k * s3;
  t.inner_three_parts = 4 * stirling2(k, 4);
  return t;
}

/// Lower-bound sum sum_{i=0}^{k} C(k,i) * S(k-i, 3): the number of free PMCs
/// the explicit construction produces on the k-th lower-bound family graph.
inline BigInt lower_bound_sum(int k) {
  if (k < 0) throw InputError("lower_bound_sum requires k >= 0");
  BigInt total = 0;
  for (int i = 0; i <= k; ++i) total += binomial(k, i) * stirling2(k - i, 3);
  return total;
}

/// Exact per-k verification of the two inequalities the 4^k + n bound rests
/// on: (free bound) + (2^k - 1) <= 4^k, and 24 * S(k,4) <= 4^k.
struct TheoremCheck {
  int k = 0;
  FreeBoundTerms terms;
  BigInt extra_nonfree;  // 2^k - 1
  BigInt budget;         // 4^k
  bool within_budget = false;   // terms.total() + extra_nonfree <= 4^k
  bool tail_term_small = false; // 4 * S(k,4) <= 4^k / 6
};

inline std::vector<TheoremCheck> verify_theorem_inequality(int k_max) {
  if (k_max < 1) throw InputError("verify_theorem_inequality requires k_max >= 1");
  std::vector<TheoremCheck> out;
  out.reserve(static_cast<std::size_t>(k_max));
  for (int k = 1; k <= k_max; ++k) {
    TheoremCheck c;
    c.k = k;
    c.terms = free_bound_terms(k);
    c.extra_nonfree = pow2(k) - 1;
    c.budget = pow4(k);
    c.within_budget = c.terms.total() + c.extra_nonfree <= c.budget;
    c.tail_term_small = 6 * c.terms.inner_three_parts <= c.budget;
    out.push_back(std::move(c));
  }
  return out;
}

/// Exact-integer evaluation of every bound for one (k, n) experiment, with
/// the observed enumeration counts alongside when available.
struct BoundReport {
  int k = 0;
  int n = 0;
  BigInt upper_total;    // 4^k + n
  FreeBoundTerms free_terms;
  BigInt nonfree_bound;  // n + 2^k - 1
  BigInt lower_sum;
  std::optional<std::uint64_t> observed_total;
  std::optional<std::uint64_t> observed_free;
  std::optional<std::uint64_t> observed_nonfree;

  bool upper_bound_holds() const {
    return !observed_total || BigInt(*observed_total) <= upper_total;
  }
};

inline BoundReport make_bound_report(int k, int n) {
  if (k < 0 || n < 0) throw InputError("bound report requires k, n >= 0");
  BoundReport r;
  r.k = k;
  r.n = n;
  r.upper_total = pow4(k) + n;
  r.free_terms = free_bound_terms(k);
  r.nonfree_bound = BigInt(n) + pow2(k) - 1;
  r.lower_sum = lower_bound_sum(k);
  return r;
}

}  // namespace pmca
