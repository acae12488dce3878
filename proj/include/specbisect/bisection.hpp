#ifndef SPECBISECT_BISECTION_HPP
#define SPECBISECT_BISECTION_HPP

#include <Eigen/Core>
#include <algorithm>
#include <numeric>
#include <utility>
#include <vector>

#include "specbisect/graph.hpp"
#include "specbisect/organized.hpp"
#include "specbisect/spectral.hpp"

namespace specbisect {

/// Outcome of a rotation sweep. origin_vertex is -1 when the initial
/// bisection was never beaten, otherwise the embedding point whose rotation
/// produced the winner.
struct SweepResult {
  Bisection best;
  int best_cut = 0;
  int candidates_evaluated = 0;
  int origin_vertex = -1;
};

/// A = the n/2 vertices with the largest entries of u, ties resolved toward
/// the smaller vertex index; B = the rest.
inline Bisection top_half_partition(const Eigen::VectorXd& u) {
  const int n = static_cast<int>(u.size());
  if (n % 2 != 0) throw InputError("top-half split needs an even vertex count");
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&u](int i, int j) {
    if (u[i] != u[j]) return u[i] > u[j];
    return i < j;
  });
  Bisection out;
  out.a.assign(order.begin(), order.begin() + n / 2);
  out.b.assign(order.begin() + n / 2, order.end());
  std::sort(out.a.begin(), out.a.end());
  std::sort(out.b.begin(), out.b.end());
  return out;
}

/// Classic spectral bisection: the top half of the Fiedler vector.
inline Bisection spectral_bisection(const Graph& g,
                                    const SpectralOptions& opts = {}) {
  const int n = g.num_vertices();
  if (n % 2 != 0)
    throw DomainError("spectral bisection needs an even vertex count");
  if (n == 2) {
    if (!is_connected(g)) throw DomainError("graph is disconnected");
    const auto pairs = smallest_eigenpairs(laplacian(g), 2, opts.tol);
    return top_half_partition(pairs[1].vector);
  }
  return top_half_partition(spectral_basis(g, opts).y);
}

/// Evaluates the bisection induced by the rotation through each embedding
/// point (x_i, y_i) and keeps the smallest cut; points at the origin are
/// skipped, and ties keep the incumbent so the initial bisection survives
/// unless a rotation strictly improves on it.
inline SweepResult rotation_sweep(const Graph& g, const Eigen::VectorXd& x,
                                  const Eigen::VectorXd& y,
                                  const Bisection& initial) {
  const int n = g.num_vertices();
  if (x.size() != n || y.size() != n)
    throw InputError("sweep vectors must have one entry per vertex");
  SweepResult result;
  result.best = initial;
  result.best_cut = cut_size(g, initial);
  for (int i = 0; i < n; ++i) {
    const auto u = rotation_for_point(x, y, i);
    if (!u) continue;
    ++result.candidates_evaluated;
    Bisection candidate = top_half_partition(*u);
    const int cut = cut_size(g, candidate);
    if (cut < result.best_cut) {
      result.best = std::move(candidate);
      result.best_cut = cut;
      result.origin_vertex = i;
    }
  }
  return result;
}

/// Two-eigenvector bisection: sweep the rotations of (third eigenvector,
/// Fiedler vector) starting from the classic spectral bisection. The result
/// never cuts more edges than the spectral bisection itself.
inline SweepResult improved_bisection(const Graph& g,
                                      const SpectralOptions& opts = {}) {
  if (g.num_vertices() % 2 != 0)
    throw DomainError("bisection needs an even vertex count");
  const SpectralBasis basis = spectral_basis(g, opts);
  return rotation_sweep(g, basis.x, basis.y, top_half_partition(basis.y));
}

/// Refines a given bisection: encode it as an indicator vector y, solve the
/// constrained minimization of x^T L x over the complement of {1, y}, and
/// sweep the rotations of (x, y) starting from the given bisection.
inline SweepResult refine_bisection(const Graph& g, const Bisection& given,
                                    const SpectralOptions& opts = {}) {
  validate_bisection(g, given);
  if (!is_connected(g)) throw DomainError("graph is disconnected");
  const Eigen::VectorXd y = indicator_vector(given);
  const int n = g.num_vertices();
  Eigen::VectorXd x = n <= opts.dense_cutoff
                          ? constrained_min_quadratic(laplacian(g), y, opts.tol).second
                          : constrained_min_quadratic(g, y, opts).second;
  return rotation_sweep(g, x, y, given);
}

}  // namespace specbisect

#endif  // SPECBISECT_BISECTION_HPP
