#ifndef SPECBISECT_ORGANIZED_HPP
#define SPECBISECT_ORGANIZED_HPP

#include <Eigen/Core>
#include <algorithm>
#include <cmath>

#include "specbisect/graph.hpp"

namespace specbisect {

namespace detail {

// Edge counts between the four blocks of a quad, indexed by block pair.
// Blocks are labeled 1 = A1, 2 = A2, 3 = B1, 4 = B2.
struct QuadEdgeCounts {
  long long a1a2 = 0, b1b2 = 0, a1b1 = 0, a2b2 = 0, a1b2 = 0, a2b1 = 0;
};

inline QuadEdgeCounts quad_edge_counts(const Graph& g, const QuadPartition& q) {
  validate_quad(g, q);
  const auto label = label_sets(g.num_vertices(), {&q.a1, &q.a2, &q.b1, &q.b2});
  QuadEdgeCounts c;
  for (auto [u, v] : g.edges()) {
    const int lo = std::min(label[u], label[v]);
    const int hi = std::max(label[u], label[v]);
    if (lo == 1 && hi == 2) ++c.a1a2;
    else if (lo == 3 && hi == 4) ++c.b1b2;
    else if (lo == 1 && hi == 3) ++c.a1b1;
    else if (lo == 2 && hi == 4) ++c.a2b2;
    else if (lo == 1 && hi == 4) ++c.a1b2;
    else if (lo == 2 && hi == 3) ++c.a2b1;
  }
  return c;
}

inline VertexSet sorted_union(const VertexSet& x, const VertexSet& y) {
  VertexSet out;
  out.reserve(x.size() + y.size());
  out.insert(out.end(), x.begin(), x.end());
  out.insert(out.end(), y.begin(), y.end());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace detail

/// A quad together with its objective value. The minimum over all quads of a
/// bisection is D_C; the oracle module computes it exhaustively.
struct QuadScore {
  long long value;
  QuadPartition quad;
};

/// The organized-partition objective
/// E(A1,A2) + E(B1,B2) - E(A1,B1) - E(A2,B2). Negative scores certify that
/// the enclosing bisection is not minimum; positive that it is not maximum.
inline long long quad_score(const Graph& g, const QuadPartition& q) {
  const auto c = detail::quad_edge_counts(g, q);
  return c.a1a2 + c.b1b2 - c.a1b1 - c.a2b2;
}

/// The equivalent objective E(A1,B2) + E(A2,B1) + E(A1,A2) + E(B1,B2);
/// satisfies alt_quad_score = cut_size(A,B) + quad_score for every quad.
inline long long alt_quad_score(const Graph& g, const QuadPartition& q) {
  const auto c = detail::quad_edge_counts(g, q);
  return c.a1b2 + c.a2b1 + c.a1a2 + c.b1b2;
}

/// The bisection pooling A1 with B1 against A2 with B2. By the score
/// trichotomy its cut is smaller / equal / larger than E(A,B) exactly when
/// the quad's score is negative / zero / positive.
inline Bisection improved_cut_from_quad(const QuadPartition& q) {
  return {detail::sorted_union(q.a1, q.b1), detail::sorted_union(q.a2, q.b2)};
}

/// The sign encoding of a balanced bisection: +1/sqrt(n) on A, -1/sqrt(n)
/// on B. Unit length, orthogonal to the ones vector, and its Rayleigh
/// quotient with the Laplacian is (4/n) E(A,B).
inline Eigen::VectorXd indicator_vector(const Bisection& bis) {
  if (bis.a.size() != bis.b.size())
    throw InputError("indicator vector needs |A| = |B|");
  const int n = static_cast<int>(bis.a.size() + bis.b.size());
  const auto label = detail::label_sets(n, {&bis.a, &bis.b});
  detail::require_full_cover(label);
  const double entry = 1.0 / std::sqrt(static_cast<double>(n));
  Eigen::VectorXd v(n);
  for (int i = 0; i < n; ++i) v[i] = label[i] == 1 ? entry : -entry;
  return v;
}

/// The sign encoding of a quad: +1/sqrt(n) on A1 and B1, -1/sqrt(n) on A2
/// and B2. Orthogonal to the enclosing bisection's indicator, and
/// (n/4) x^T L x = E(A,B) + quad_score(q).
inline Eigen::VectorXd quad_indicator(const QuadPartition& q) {
  if (q.a1.size() != q.a2.size() || q.b1.size() != q.b2.size())
    throw InputError("quad indicator needs |A1| = |A2| and |B1| = |B2|");
  const int n = static_cast<int>(q.a1.size() + q.a2.size() + q.b1.size() +
                                 q.b2.size());
  const auto label = detail::label_sets(n, {&q.a1, &q.a2, &q.b1, &q.b2});
  detail::require_full_cover(label);
  const double entry = 1.0 / std::sqrt(static_cast<double>(n));
  Eigen::VectorXd v(n);
  for (int i = 0; i < n; ++i)
    v[i] = (label[i] == 1 || label[i] == 3) ? entry : -entry;
  return v;
}

/// MinCut(G) >= (n/4) lambda2.
inline double bound_donath_hoffman(const Graph& g, double lambda2) {
  return g.num_vertices() / 4.0 * lambda2;
}

/// MinCut(G) >= (n/8)(lambda2 + lambda3) - D_C/2, where d_c is the
/// organized-partition value of a minimum cut (exhaustive to obtain; see the
/// oracle module).
inline double bound_l2_l3(const Graph& g, double lambda2, double lambda3,
                          long long d_c) {
  return g.num_vertices() / 8.0 * (lambda2 + lambda3) - d_c / 2.0;
}

/// True when the two-eigenvalue bound beats the Donath-Hoffman bound,
/// i.e. d_c < (n/4)(lambda3 - lambda2).
inline bool tighter_bound_condition(const Graph& g, double lambda2,
                                    double lambda3, long long d_c) {
  return static_cast<double>(d_c) <
         g.num_vertices() / 4.0 * (lambda3 - lambda2);
}

}  // namespace specbisect

#endif  // SPECBISECT_ORGANIZED_HPP
