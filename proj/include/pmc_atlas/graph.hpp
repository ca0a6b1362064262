#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "pmc_atlas/bitset.hpp"
#include "pmc_atlas/errors.hpp"

namespace pmca {

/// Immutable simple undirected graph on vertices 0..n-1 with bitset-valued
/// adjacency. Everything that looks like a modification (induced subgraphs,
/// the supergraph builders) constructs a new graph, so instances can be
/// shared between worker threads freely.
///
/// Vertices may carry display labels; constructions use them to name added
/// vertices. Unlabeled vertices print as their index.
template <unsigned Words>
class Graph {
public:
  using VertexSet = Bitset<Words>;

  Graph() = default;

  /// Builds a graph from an edge list. Rejects self-loops and out-of-range
  /// endpoints; duplicate edges collapse. `labels` is either empty or has
  /// exactly n entries.
  static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges,
                          std::vector<std::string> labels = {}) {
    if (n < 0) throw InputError("vertex count must be non-negative");
    if (n > VertexSet::capacity())
      throw BudgetError("graph has " + std::to_string(n) + " vertices; this build supports up to " +
                        std::to_string(VertexSet::capacity()));
    if (!labels.empty() && static_cast<int>(labels.size()) != n)
      throw InputError("label count does not match vertex count");
    Graph g;
    g.n_ = n;
    g.adj_.assign(static_cast<std::size_t>(n), VertexSet{});
    g.labels_ = std::move(labels);
    for (auto [u, v] : edges) {
      if (u < 0 || u >= n || v < 0 || v >= n)
        throw InputError("edge endpoint out of range: " + std::to_string(u) + " " + std::to_string(v));
      if (u == v) throw InputError("self-loop at vertex " + std::to_string(u));
      g.adj_[static_cast<std::size_t>(u)].set(v);
      g.adj_[static_cast<std::size_t>(v)].set(u);
    }
    g.m_ = 0;
    for (int v = 0; v < n; ++v) g.m_ += g.adj_[static_cast<std::size_t>(v)].count();
    g.m_ /= 2;
    return g;
  }

  int size() const { return n_; }
  int edge_count() const { return m_; }

  bool adjacent(int u, int v) const {
    require_vertex(u);
    require_vertex(v);
    return adj_[static_cast<std::size_t>(u)].test(v);
  }

  const VertexSet& neighbors(int v) const {
    require_vertex(v);
    return adj_[static_cast<std::size_t>(v)];
  }

  /// The whole vertex set {0..n-1}.
  VertexSet vertex_set() const { return VertexSet::first_n(n_); }

  /// N[v] = N(v) u {v}.
  VertexSet closed_neighborhood(int v) const {
    require_vertex(v);
    VertexSet r = adj_[static_cast<std::size_t>(v)];
    r.set(v);
    return r;
  }

  /// N(X), the union of N(v) over v in X. May intersect X; callers subtract X
  /// when they want the outside boundary only.
  VertexSet neighborhood_of(const VertexSet& x) const {
    require_subset(x);
    VertexSet r;
    x.for_each([&](int v) { r |= adj_[static_cast<std::size_t>(v)]; });
    return r;
  }

  /// Connected components of the subgraph induced on V \ removed, ordered by
  /// smallest contained vertex.
  std::vector<VertexSet> components(const VertexSet& removed) const {
    require_subset(removed);
    std::vector<VertexSet> out;
    VertexSet rest = vertex_set() - removed;
    while (!rest.empty()) {
      int v = rest.first();
      VertexSet comp = VertexSet::single(v);
      VertexSet frontier = comp;
      while (!frontier.empty()) {
        VertexSet next;
        frontier.for_each([&](int u) { next |= adj_[static_cast<std::size_t>(u)]; });
        next &= rest;
        next -= comp;
        comp |= next;
        frontier = next;
      }
      rest -= comp;
      out.push_back(comp);
    }
    return out;
  }

  /// True iff c is a full component of x, i.e. N(c) covers all of x. c must
  /// be an actual component of G \ x.
  bool is_full_component(const VertexSet& x, const VertexSet& c) const {
    require_subset(x);
    require_subset(c);
    if (c.empty() || c.intersects(x))
      throw InputError("set is not a component of the residual graph");
    VertexSet grown = VertexSet::single(c.first());
    VertexSet frontier = grown;
    while (!frontier.empty()) {
      VertexSet next;
      frontier.for_each([&](int u) { next |= adj_[static_cast<std::size_t>(u)]; });
      next -= x;
      next -= grown;
      grown |= next;
      frontier = next;
    }
    if (!(grown == c)) throw InputError("set is not a component of the residual graph");
    VertexSet nb = neighborhood_of(c);
    return (nb & x) == x;
  }

  struct Induced {
    Graph graph;
    std::vector<int> old_to_new;  // -1 for dropped vertices
    std::vector<int> new_to_old;
  };

  /// Subgraph induced by `keep`, with the vertex relabeling in both
  /// directions. Labels follow their vertices.
  Induced induced_subgraph(const VertexSet& keep) const {
    require_subset(keep);
    Induced r;
    r.old_to_new.assign(static_cast<std::size_t>(n_), -1);
    keep.for_each([&](int v) {
      r.old_to_new[static_cast<std::size_t>(v)] = static_cast<int>(r.new_to_old.size());
      r.new_to_old.push_back(v);
    });
    std::vector<std::pair<int, int>> edges;
    std::vector<std::string> labels;
    if (!labels_.empty())
      for (int v : r.new_to_old) labels.push_back(labels_[static_cast<std::size_t>(v)]);
    keep.for_each([&](int v) {
      VertexSet nb = adj_[static_cast<std::size_t>(v)] & keep;
      nb.for_each([&](int u) {
        if (v < u) edges.emplace_back(r.old_to_new[static_cast<std::size_t>(v)],
                                      r.old_to_new[static_cast<std::size_t>(u)]);
      });
    });
    r.graph = from_edges(static_cast<int>(r.new_to_old.size()), edges, std::move(labels));
    return r;
  }

  /// All edges as (u, v) with u < v, sorted.
  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<std::size_t>(m_));
    for (int v = 0; v < n_; ++v) {
      adj_[static_cast<std::size_t>(v)].for_each([&](int u) {
        if (v < u) out.emplace_back(v, u);
      });
    }
    return out;
  }

  std::string label(int v) const {
    require_vertex(v);
    if (labels_.empty()) return std::to_string(v);
    return labels_[static_cast<std::size_t>(v)];
  }

  bool has_labels() const { return !labels_.empty(); }

  void require_vertex(int v) const {
    if (v < 0 || v >= n_)
      throw InputError("vertex " + std::to_string(v) + " out of range [0, " + std::to_string(n_) + ")");
  }

  void require_subset(const VertexSet& x) const {
    if (!vertex_set().contains(x))
      throw InputError("vertex set contains out-of-range vertices");
  }

private:
  int n_ = 0;
  int m_ = 0;
  std::vector<VertexSet> adj_;
  std::vector<std::string> labels_;
};

using Graph64 = Graph<1>;
using Graph128 = Graph<2>;

}  // namespace pmca
