#ifndef SPECBISECT_GRAPH_HPP
#define SPECBISECT_GRAPH_HPP

#include <algorithm>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "specbisect/errors.hpp"

namespace specbisect {

using Edge = std::pair<int, int>;
using VertexSet = std::vector<int>;

/// Undirected simple unweighted graph on vertices 0..n-1, immutable after
/// construction. Self-loops are dropped and duplicate edges collapsed, so
/// the stored edge list (u < v, sorted) and the per-vertex neighbor lists
/// always agree.
class Graph {
 public:
  Graph(int n, const std::vector<Edge>& raw_edges) {
    if (n < 1) throw InputError("graph needs at least one vertex");
    n_ = n;
    adj_.resize(static_cast<std::size_t>(n));
    edges_.reserve(raw_edges.size());
    for (auto [u, v] : raw_edges) {
      if (u < 0 || u >= n || v < 0 || v >= n)
        throw InputError("edge endpoint out of range: (" + std::to_string(u) +
                         ", " + std::to_string(v) + ")");
      if (u == v) continue;
      if (u > v) std::swap(u, v);
      edges_.emplace_back(u, v);
    }
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
    for (auto [u, v] : edges_) {
      adj_[u].push_back(v);
      adj_[v].push_back(u);
    }
    for (auto& nbrs : adj_) std::sort(nbrs.begin(), nbrs.end());
  }

  int num_vertices() const { return n_; }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }
  const std::vector<int>& neighbors(int v) const { return adj_[v]; }
  /// Edge list with u < v, sorted lexicographically.
  const std::vector<Edge>& edges() const { return edges_; }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adj_;
};

inline Graph build_graph(int n, const std::vector<Edge>& raw_edges) {
  return Graph(n, raw_edges);
}

/// Ordered pair of disjoint equal-size vertex halves covering V.
struct Bisection {
  VertexSet a;
  VertexSet b;
};

/// Four disjoint blocks refining a bisection: a1 and a2 partition A, b1 and
/// b2 partition B, with |a1| = |a2| and |b1| = |b2|.
struct QuadPartition {
  VertexSet a1, a2, b1, b2;
};

namespace detail {

// Labels each vertex with the 1-based index of the set containing it.
// Out-of-range vertices, duplicates within a set, and overlaps between sets
// all raise InputError.
inline std::vector<int> label_sets(int n,
                                   std::initializer_list<const VertexSet*> sets) {
  std::vector<int> label(static_cast<std::size_t>(n), 0);
  int tag = 0;
  for (const VertexSet* s : sets) {
    ++tag;
    for (int v : *s) {
      if (v < 0 || v >= n)
        throw InputError("vertex " + std::to_string(v) + " out of range");
      if (label[v] == tag)
        throw InputError("vertex " + std::to_string(v) + " listed twice");
      if (label[v] != 0)
        throw InputError("vertex sets overlap at " + std::to_string(v));
      label[v] = tag;
    }
  }
  return label;
}

inline void require_full_cover(const std::vector<int>& label) {
  for (std::size_t v = 0; v < label.size(); ++v)
    if (label[v] == 0)
      throw InputError("vertex " + std::to_string(v) +
                       " not covered by the partition");
}

}  // namespace detail

/// Number of edges with one endpoint in s and the other in t.
inline int cross_edges(const Graph& g, const VertexSet& s, const VertexSet& t) {
  const auto label = detail::label_sets(g.num_vertices(), {&s, &t});
  int count = 0;
  for (auto [u, v] : g.edges())
    if (label[u] != 0 && label[v] != 0 && label[u] != label[v]) ++count;
  return count;
}

namespace detail {

// Validates the bisection and returns the side label (1 = A, 2 = B) per vertex.
inline std::vector<int> bisection_labels(const Graph& g, const Bisection& bis) {
  if (bis.a.size() != bis.b.size())
    throw InputError("bisection halves differ in size (" +
                     std::to_string(bis.a.size()) + " vs " +
                     std::to_string(bis.b.size()) + ")");
  auto label = label_sets(g.num_vertices(), {&bis.a, &bis.b});
  require_full_cover(label);
  return label;
}

}  // namespace detail

inline void validate_bisection(const Graph& g, const Bisection& bis) {
  detail::bisection_labels(g, bis);
}

/// E(A, B) for a balanced bisection.
inline int cut_size(const Graph& g, const Bisection& bis) {
  const auto label = detail::bisection_labels(g, bis);
  int count = 0;
  for (auto [u, v] : g.edges())
    if (label[u] != label[v]) ++count;
  return count;
}

inline void validate_quad(const Graph& g, const QuadPartition& q) {
  if (q.a1.size() != q.a2.size())
    throw InputError("quad blocks A1, A2 differ in size");
  if (q.b1.size() != q.b2.size())
    throw InputError("quad blocks B1, B2 differ in size");
  if (q.a1.size() + q.a2.size() != q.b1.size() + q.b2.size())
    throw InputError("quad sides A, B differ in size");
  const auto label =
      detail::label_sets(g.num_vertices(), {&q.a1, &q.a2, &q.b1, &q.b2});
  detail::require_full_cover(label);
}

inline bool is_connected(const Graph& g) {
  const int n = g.num_vertices();
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int w : g.neighbors(v))
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
  }
  return reached == n;
}

/// True if two bisections are the same unordered pair of vertex sets.
/// Inputs must have sorted halves (as produced by library operations).
inline bool same_split(const Bisection& lhs, const Bisection& rhs) {
  return (lhs.a == rhs.a && lhs.b == rhs.b) ||
         (lhs.a == rhs.b && lhs.b == rhs.a);
}

}  // namespace specbisect

#endif  // SPECBISECT_GRAPH_HPP
