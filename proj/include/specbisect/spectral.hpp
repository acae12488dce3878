#ifndef SPECBISECT_SPECTRAL_HPP
#define SPECBISECT_SPECTRAL_HPP

#include <Eigen/Core>
#include <Eigen/Eigenvalues>
#include <Eigen/QR>
#include <cmath>
#include <functional>
#include <limits>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "specbisect/graph.hpp"

namespace specbisect {

struct EigenPair {
  double value;
  Eigen::VectorXd vector;
};

/// Second and third smallest Laplacian eigenpairs of a connected graph.
/// y is the Fiedler vector.
struct SpectralBasis {
  double lambda2;
  Eigen::VectorXd y;
  double lambda3;
  Eigen::VectorXd x;
};

struct SpectralOptions {
  /// Accepted residual ||L v - lambda v|| per eigenpair.
  double tol = 1e-8;
  /// Above this order the solver switches from dense tridiagonalization to
  /// Lanczos on the implicit Laplacian operator.
  int dense_cutoff = 4000;
  /// Krylov subspace cap for the Lanczos path.
  int lanczos_max_dim = 1000;
};

/// L = D - Adj as a dense symmetric matrix.
inline Eigen::MatrixXd laplacian(const Graph& g) {
  const int n = g.num_vertices();
  Eigen::MatrixXd L = Eigen::MatrixXd::Zero(n, n);
  for (auto [u, v] : g.edges()) {
    L(u, u) += 1.0;
    L(v, v) += 1.0;
    L(u, v) -= 1.0;
    L(v, u) -= 1.0;
  }
  return L;
}

/// Flips v so its first entry of largest magnitude is positive. Fixes the
/// eigenvector sign ambiguity, making repeated runs reproducible whenever the
/// eigenvalue is simple.
inline void canonicalize_sign(Eigen::VectorXd& v) {
  int arg = 0;
  double best = -1.0;
  for (int i = 0; i < v.size(); ++i) {
    const double m = std::abs(v[i]);
    if (m > best) {
      best = m;
      arg = i;
    }
  }
  if (v[arg] < 0.0) v = -v;
}

namespace detail {

// y = L x computed from adjacency lists; never materializes the matrix.
struct LaplacianApply {
  const Graph* g;
  void operator()(const Eigen::VectorXd& x, Eigen::VectorXd& y) const {
    const int n = g->num_vertices();
    for (int i = 0; i < n; ++i) {
      double acc = g->degree(i) * x[i];
      for (int j : g->neighbors(i)) acc -= x[j];
      y[i] = acc;
    }
  }
};

using ApplyFn = std::function<void(const Eigen::VectorXd&, Eigen::VectorXd&)>;

// Lanczos with full reorthogonalization for the k smallest eigenpairs of a
// symmetric PSD operator restricted to the orthogonal complement of the
// `deflate` columns (the all-ones nullvector, or a partition indicator).
// Residuals are measured inside that subspace: the restricted operator is
// P A P, and its eigenpairs are exactly what the callers need.
inline std::vector<EigenPair> lanczos_smallest(const ApplyFn& apply, int n,
                                               int k,
                                               const Eigen::MatrixXd& deflate,
                                               double tol, int max_dim) {
  const int subspace = n - static_cast<int>(deflate.cols());
  if (k < 1 || k > subspace)
    throw InputError("eigenpair count exceeds the deflated subspace");
  const int m = std::min(subspace, std::max(max_dim, 2 * k + 2));
  Eigen::MatrixXd V(n, m);
  Eigen::VectorXd alpha = Eigen::VectorXd::Zero(m);
  Eigen::VectorXd beta = Eigen::VectorXd::Zero(m);

  std::mt19937_64 rng(0x5bd1e995u);  // fixed seed: identical runs for identical inputs
  auto random_unit = [&]() {
    Eigen::VectorXd v(n);
    for (int i = 0; i < n; ++i)
      v[i] = static_cast<double>(rng() >> 11) * 0x1.0p-52 - 1.0;
    return v;
  };
  auto project_out = [&](Eigen::VectorXd& w, int cols) {
    for (int pass = 0; pass < 2; ++pass) {
      if (deflate.cols() > 0) w -= deflate * (deflate.transpose() * w);
      if (cols > 0) {
        auto Vj = V.leftCols(cols);
        w -= Vj * (Vj.transpose() * w);
      }
    }
  };
  // Ritz pairs of the current tridiagonal block, with subspace residuals.
  Eigen::VectorXd w(n), r(n);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> small;
  auto extract = [&](int dim, double* worst) {
    std::vector<EigenPair> out;
    *worst = 0.0;
    for (int i = 0; i < k; ++i) {
      EigenPair p;
      p.value = small.eigenvalues()[i];
      p.vector = V.leftCols(dim) * small.eigenvectors().col(i);
      p.vector.normalize();
      apply(p.vector, r);
      r -= p.value * p.vector;
      if (deflate.cols() > 0) r -= deflate * (deflate.transpose() * r);
      *worst = std::max(*worst, r.norm());
      canonicalize_sign(p.vector);
      out.push_back(std::move(p));
    }
    return out;
  };

  Eigen::VectorXd v = random_unit();
  project_out(v, 0);
  v.normalize();
  V.col(0) = v;

  double worst_residual = std::numeric_limits<double>::infinity();
  int dim = 0;
  for (int j = 0; j < m; ++j) {
    apply(V.col(j), w);
    alpha[j] = V.col(j).dot(w);
    project_out(w, j + 1);
    dim = j + 1;

    const bool last = (j + 1 == m);
    if (last || ((j + 1) % 50 == 0 && j + 1 > k)) {
      Eigen::MatrixXd T = Eigen::MatrixXd::Zero(dim, dim);
      for (int i = 0; i < dim; ++i) {
        T(i, i) = alpha[i];
        if (i + 1 < dim) T(i, i + 1) = T(i + 1, i) = beta[i];
      }
      small.compute(T);
      const double bnd = w.norm();
      bool promising = dim >= k;
      for (int i = 0; i < k && promising; ++i)
        if (bnd * std::abs(small.eigenvectors()(dim - 1, i)) > tol)
          promising = false;
      if (promising || last) {
        auto out = extract(dim, &worst_residual);
        if (worst_residual <= tol) return out;
        if (last) break;
      }
    }

    if (j + 1 < m) {
      beta[j] = w.norm();
      if (beta[j] < 1e-13) {
        // Krylov space exhausted; continue in a fresh random direction.
        w = random_unit();
        project_out(w, j + 1);
        const double nrm = w.norm();
        if (nrm < 1e-13) break;
        beta[j] = 0.0;
        V.col(j + 1) = w / nrm;
      } else {
        V.col(j + 1) = w / beta[j];
      }
    }
  }
  throw NumericError("Lanczos did not reach the requested residual after " +
                         std::to_string(dim) + " iterations",
                     worst_residual);
}

}  // namespace detail

/// k smallest eigenpairs of a dense symmetric matrix, ascending, each with
/// residual ||L v - lambda v|| <= tol and the canonical sign.
inline std::vector<EigenPair> smallest_eigenpairs(const Eigen::MatrixXd& L,
                                                  int k, double tol = 1e-8) {
  const int n = static_cast<int>(L.rows());
  if (k < 1 || k > n) throw InputError("eigenpair count out of range");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(L);
  if (solver.info() != Eigen::Success)
    throw NumericError("dense symmetric eigensolver failed",
                       std::numeric_limits<double>::quiet_NaN());
  std::vector<EigenPair> out;
  out.reserve(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) {
    EigenPair p{solver.eigenvalues()[i], solver.eigenvectors().col(i)};
    const double res = (L * p.vector - p.value * p.vector).norm();
    if (res > tol)
      throw NumericError("eigenpair residual above tolerance", res);
    canonicalize_sign(p.vector);
    out.push_back(std::move(p));
  }
  return out;
}

/// Matrix-free variant for graphs too large to densify.
inline std::vector<EigenPair> smallest_eigenpairs(const Graph& g, int k,
                                                  const SpectralOptions& opts) {
  detail::LaplacianApply apply{&g};
  return detail::lanczos_smallest(apply, g.num_vertices(), k,
                                  Eigen::MatrixXd(g.num_vertices(), 0),
                                  opts.tol, opts.lanczos_max_dim);
}

/// (lambda2, y, lambda3, x) of a connected graph, skipping the trivial pair
/// (0, 1/sqrt(n)). For lambda2 = lambda3 any orthonormal basis of the
/// eigenspace may be returned.
inline SpectralBasis spectral_basis(const Graph& g,
                                    const SpectralOptions& opts = {}) {
  const int n = g.num_vertices();
  if (n < 3)
    throw DomainError("need at least 3 vertices for (lambda2, lambda3)");
  if (!is_connected(g))
    throw DomainError("graph is disconnected (lambda2 = 0)");

  if (n <= opts.dense_cutoff) {
    auto pairs = smallest_eigenpairs(laplacian(g), 3, opts.tol);
    if (pairs[1].value <= opts.tol)
      throw DomainError("lambda2 below tolerance; graph is numerically disconnected");
    return {pairs[1].value, std::move(pairs[1].vector), pairs[2].value,
            std::move(pairs[2].vector)};
  }

  // Large graphs: deflate the known nullvector and take the two smallest
  // pairs of the restricted operator.
  Eigen::MatrixXd ones(n, 1);
  ones.col(0) = Eigen::VectorXd::Constant(n, 1.0 / std::sqrt(double(n)));
  detail::LaplacianApply apply{&g};
  auto pairs = detail::lanczos_smallest(apply, n, 2, ones, opts.tol,
                                        opts.lanczos_max_dim);
  if (pairs[0].value <= opts.tol)
    throw DomainError("lambda2 below tolerance; graph is numerically disconnected");
  return {pairs[0].value, std::move(pairs[0].vector), pairs[1].value,
          std::move(pairs[1].vector)};
}

/// Minimizes x^T L x over unit x with x^T 1 = 0 and y^T x = 0, by projecting
/// L onto an orthonormal basis Q of the constraint space and solving the
/// smallest eigenpair of Q^T L Q. Returns (x^T L x, x).
inline std::pair<double, Eigen::VectorXd> constrained_min_quadratic(
    const Eigen::MatrixXd& L, const Eigen::VectorXd& y, double tol = 1e-8) {
  const int n = static_cast<int>(L.rows());
  if (n < 3) throw DomainError("constraint space is empty for n < 3");
  if (y.size() != n) throw InputError("constraint vector length mismatch");
  const double check = std::max(tol, 1e-12);
  if (std::abs(y.norm() - 1.0) > check)
    throw InputError("constraint vector is not unit length");
  if (std::abs(y.sum()) / std::sqrt(double(n)) > check)
    throw InputError("constraint vector is not orthogonal to the ones vector");

  Eigen::MatrixXd span(n, 2);
  span.col(0) = Eigen::VectorXd::Constant(n, 1.0 / std::sqrt(double(n)));
  span.col(1) = y;
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(span);
  const Eigen::MatrixXd Qfull = qr.householderQ();
  const Eigen::MatrixXd Q = Qfull.rightCols(n - 2);

  Eigen::MatrixXd B = Q.transpose() * L * Q;
  B = ((B + B.transpose()) / 2.0).eval();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(B);
  if (solver.info() != Eigen::Success)
    throw NumericError("projected eigensolver failed",
                       std::numeric_limits<double>::quiet_NaN());
  Eigen::VectorXd x = Q * solver.eigenvectors().col(0);
  x.normalize();
  canonicalize_sign(x);
  return {x.dot(L * x), std::move(x)};
}

/// Matrix-free variant: Lanczos restricted to the complement of {1, y}.
inline std::pair<double, Eigen::VectorXd> constrained_min_quadratic(
    const Graph& g, const Eigen::VectorXd& y, const SpectralOptions& opts) {
  const int n = g.num_vertices();
  if (n < 3) throw DomainError("constraint space is empty for n < 3");
  Eigen::MatrixXd deflate(n, 2);
  deflate.col(0) = Eigen::VectorXd::Constant(n, 1.0 / std::sqrt(double(n)));
  deflate.col(1) = y;
  detail::LaplacianApply apply{&g};
  auto pairs =
      detail::lanczos_smallest(apply, n, 1, deflate, opts.tol, opts.lanczos_max_dim);
  Eigen::VectorXd w(n);
  apply(pairs[0].vector, w);
  return {pairs[0].vector.dot(w), std::move(pairs[0].vector)};
}

/// u = cos(theta) x + sin(theta) y, v = sin(theta) x - cos(theta) y.
/// For orthonormal (x, y) the pair (u, v) is orthonormal and preserves
/// x^T L x + y^T L y for every symmetric L.
struct RotatedPair {
  Eigen::VectorXd u, v;
};

inline RotatedPair rotate_pair(const Eigen::VectorXd& x,
                               const Eigen::VectorXd& y, double theta) {
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  return {c * x + s * y, s * x - c * y};
}

/// The rotation of (x, y) whose angle passes through embedding point i:
/// u = (x_i x + y_i y) / sqrt(x_i^2 + y_i^2). Empty when the point is the
/// origin, where the rotation is undefined and the caller skips the
/// candidate.
inline std::optional<Eigen::VectorXd> rotation_for_point(
    const Eigen::VectorXd& x, const Eigen::VectorXd& y, int i) {
  if (i < 0 || i >= x.size() || y.size() != x.size())
    throw InputError("rotation point index out of range");
  const double xi = x[i];
  const double yi = y[i];
  const double r = std::hypot(xi, yi);
  if (r == 0.0) return std::nullopt;
  return ((xi * x + yi * y) / r).eval();
}

}  // namespace specbisect

#endif  // SPECBISECT_SPECTRAL_HPP
