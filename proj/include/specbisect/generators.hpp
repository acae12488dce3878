#ifndef SPECBISECT_GENERATORS_HPP
#define SPECBISECT_GENERATORS_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "specbisect/graph.hpp"

namespace specbisect {

/// Roach graph with arm length k: two paths of 2k vertices each
/// (upper 0..2k-1, lower 2k..4k-1) joined by k rung edges {i, 2k+i} on the
/// left half. The unattached right halves are the antennae. 4k vertices,
/// 2(2k-1) + k edges.
inline Graph gen_roach(int k) {
  if (k < 1) throw InputError("roach arm length must be >= 1");
  const int n = 4 * k;
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(2 * (2 * k - 1) + k));
  for (int i = 0; i + 1 < 2 * k; ++i) {
    edges.emplace_back(i, i + 1);
    edges.emplace_back(2 * k + i, 2 * k + i + 1);
  }
  for (int i = 0; i < k; ++i) edges.emplace_back(i, 2 * k + i);
  return Graph(n, edges);
}

/// G(n, p): each of the n(n-1)/2 vertex pairs is an edge independently with
/// probability p. Identical output for identical (n, p, seed) on every
/// platform; the uniform draw uses raw generator bits, not
/// std::bernoulli_distribution, whose stream is implementation-defined.
inline Graph gen_erdos_renyi(int n, double p, std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0))
    throw InputError("edge probability must lie in [0, 1]");
  if (n < 1) throw InputError("graph needs at least one vertex");
  std::mt19937_64 rng(seed);
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
      if (u < p) edges.emplace_back(i, j);
    }
  return Graph(n, edges);
}

enum class FixtureKind { path, cycle, complete };

inline Graph gen_fixture(FixtureKind kind, int n) {
  std::vector<Edge> edges;
  switch (kind) {
    case FixtureKind::path:
      if (n < 2) throw InputError("path needs n >= 2");
      for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
      break;
    case FixtureKind::cycle:
      if (n < 3) throw InputError("cycle needs n >= 3");
      for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
      break;
    case FixtureKind::complete:
      if (n < 2) throw InputError("complete graph needs n >= 2");
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
      break;
  }
  return Graph(n, edges);
}

}  // namespace specbisect

#endif  // SPECBISECT_GENERATORS_HPP
