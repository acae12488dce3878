#ifndef SPECBISECT_ORACLE_HPP
#define SPECBISECT_ORACLE_HPP

#include <bit>
#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "specbisect/graph.hpp"
#include "specbisect/organized.hpp"

// Exhaustive desk-scale solvers used as ground truth. Everything here
// enumerates bitmask subsets, so results are exact integers and the
// iteration order (ascending mask value) pins which optimum is "first".

namespace specbisect {

namespace detail {

inline std::vector<std::uint64_t> adjacency_masks(const Graph& g) {
  const int n = g.num_vertices();
  std::vector<std::uint64_t> adj(static_cast<std::size_t>(n), 0);
  for (auto [u, v] : g.edges()) {
    adj[u] |= 1ull << v;
    adj[v] |= 1ull << u;
  }
  return adj;
}

inline int mask_cross(const std::vector<std::uint64_t>& adj, std::uint64_t x,
                      std::uint64_t y) {
  int count = 0;
  for (std::uint64_t rest = x; rest != 0; rest &= rest - 1) {
    const int v = std::countr_zero(rest);
    count += std::popcount(adj[v] & y);
  }
  return count;
}

// Visits every r-subset of {0, ..., m-1} as a bitmask, ascending (Gosper).
template <typename Fn>
inline void for_each_combination(int m, int r, Fn&& fn) {
  if (r == 0) {
    fn(0ull);
    return;
  }
  if (r > m) return;
  std::uint64_t c = (1ull << r) - 1;
  const std::uint64_t limit = 1ull << m;
  while (c < limit) {
    fn(c);
    const std::uint64_t lo = c & (~c + 1);
    const std::uint64_t lz = c + lo;
    c = lz | (((c ^ lz) / lo) >> 2);
  }
}

inline VertexSet mask_to_set(std::uint64_t mask) {
  VertexSet out;
  for (std::uint64_t rest = mask; rest != 0; rest &= rest - 1)
    out.push_back(std::countr_zero(rest));
  return out;
}

// Spreads an index-space combination over the given (sorted) elements.
inline std::uint64_t lift_mask(std::uint64_t comb, const VertexSet& elements) {
  std::uint64_t out = 0;
  for (std::uint64_t rest = comb; rest != 0; rest &= rest - 1)
    out |= 1ull << elements[std::countr_zero(rest)];
  return out;
}

}  // namespace detail

struct MinBisectionResult {
  int cut;
  std::vector<Bisection> bisections;  // every optimum, vertex 0 always in A
};

struct BisectionResult {
  int cut;
  Bisection bisection;
};

/// Enumerates all C(n, n/2)/2 balanced splits (vertex 0 pinned to A) and
/// returns the minimum cut with every achieving bisection.
inline MinBisectionResult min_bisection_bf(const Graph& g) {
  const int n = g.num_vertices();
  if (n % 2 != 0)
    throw DomainError("brute-force bisection needs an even vertex count");
  if (n > 20)
    throw ResourceError("brute-force bisection is limited to n <= 20, got " +
                        std::to_string(n));
  const auto adj = detail::adjacency_masks(g);
  const std::uint64_t universe = (1ull << n) - 1;
  int best = std::numeric_limits<int>::max();
  std::vector<std::uint64_t> winners;
  detail::for_each_combination(n - 1, n / 2 - 1, [&](std::uint64_t comb) {
    const std::uint64_t amask = (comb << 1) | 1ull;
    const int cut = detail::mask_cross(adj, amask, universe & ~amask);
    if (cut < best) {
      best = cut;
      winners.assign(1, amask);
    } else if (cut == best) {
      winners.push_back(amask);
    }
  });
  MinBisectionResult out;
  out.cut = best;
  out.bisections.reserve(winners.size());
  for (std::uint64_t amask : winners)
    out.bisections.push_back(
        {detail::mask_to_set(amask), detail::mask_to_set(universe & ~amask)});
  return out;
}

/// Smallest cut among bisections outside the optimal set when the optimum is
/// unique; otherwise a second optimal bisection (same cut value).
inline BisectionResult second_min_bisection_bf(const Graph& g) {
  const int n = g.num_vertices();
  if (n % 2 != 0)
    throw DomainError("brute-force bisection needs an even vertex count");
  if (n > 20)
    throw ResourceError("brute-force bisection is limited to n <= 20, got " +
                        std::to_string(n));
  if (n < 4)
    throw DomainError("a second minimum needs at least two distinct bisections");
  const auto adj = detail::adjacency_masks(g);
  const std::uint64_t universe = (1ull << n) - 1;

  std::vector<std::pair<int, std::uint64_t>> cuts;
  detail::for_each_combination(n - 1, n / 2 - 1, [&](std::uint64_t comb) {
    const std::uint64_t amask = (comb << 1) | 1ull;
    cuts.emplace_back(detail::mask_cross(adj, amask, universe & ~amask), amask);
  });
  int best = std::numeric_limits<int>::max();
  for (const auto& [cut, mask] : cuts) best = std::min(best, cut);

  // Second optimum when the minimum is not unique, otherwise the best
  // bisection outside the optimal set; enumeration order breaks ties.
  int optima_seen = 0;
  int second = std::numeric_limits<int>::max();
  std::uint64_t pick = 0;
  for (const auto& [cut, mask] : cuts) {
    if (cut == best) {
      if (++optima_seen == 2) {
        second = cut;
        pick = mask;
        break;
      }
    } else if (cut < second) {
      second = cut;
      pick = mask;
    }
  }
  return {second,
          {detail::mask_to_set(pick), detail::mask_to_set(universe & ~pick)}};
}

inline BisectionResult max_bisection_bf(const Graph& g) {
  const int n = g.num_vertices();
  if (n % 2 != 0)
    throw DomainError("brute-force bisection needs an even vertex count");
  if (n > 20)
    throw ResourceError("brute-force bisection is limited to n <= 20, got " +
                        std::to_string(n));
  const auto adj = detail::adjacency_masks(g);
  const std::uint64_t universe = (1ull << n) - 1;
  int best = -1;
  std::uint64_t winner = 0;
  detail::for_each_combination(n - 1, n / 2 - 1, [&](std::uint64_t comb) {
    const std::uint64_t amask = (comb << 1) | 1ull;
    const int cut = detail::mask_cross(adj, amask, universe & ~amask);
    if (cut > best) {
      best = cut;
      winner = amask;
    }
  });
  return {best, {detail::mask_to_set(winner),
                 detail::mask_to_set(universe & ~winner)}};
}

/// Exact D_C of a bisection: the minimum of the organized-partition objective
/// over all quads, with one achieving quad. The smallest vertex of A is
/// pinned to A1, which removes exactly the simultaneous block swap
/// (A1,A2,B1,B2) -> (A2,A1,B2,B1) under which the objective is invariant;
/// B1 ranges over all half-subsets of B because the two sides' labels pair
/// up in the objective and cannot be fixed independently.
inline QuadScore organized_partition_bf(const Graph& g, const Bisection& bis) {
  validate_bisection(g, bis);
  VertexSet A = bis.a, B = bis.b;
  std::sort(A.begin(), A.end());
  std::sort(B.begin(), B.end());
  const int half = static_cast<int>(A.size());
  if (half % 2 != 0)
    throw DomainError("organized partition needs even bisection halves");
  if (half > 16)
    throw ResourceError("organized partition enumeration is limited to |A| <= 16, got " +
                        std::to_string(half));

  const auto adj = detail::adjacency_masks(g);
  std::uint64_t amask = 0, bmask = 0;
  for (int v : A) amask |= 1ull << v;
  for (int v : B) bmask |= 1ull << v;

  const VertexSet a_rest(A.begin() + 1, A.end());
  std::vector<std::uint64_t> a1_masks, b1_masks;
  std::vector<int> a_internal, b_internal;
  detail::for_each_combination(half - 1, half / 2 - 1, [&](std::uint64_t comb) {
    const std::uint64_t a1 = detail::lift_mask(comb, a_rest) | (1ull << A[0]);
    a1_masks.push_back(a1);
    a_internal.push_back(detail::mask_cross(adj, a1, amask & ~a1));
  });
  detail::for_each_combination(half, half / 2, [&](std::uint64_t comb) {
    const std::uint64_t b1 = detail::lift_mask(comb, B);
    b1_masks.push_back(b1);
    b_internal.push_back(detail::mask_cross(adj, b1, bmask & ~b1));
  });

  long long best = std::numeric_limits<long long>::max();
  std::uint64_t best_a1 = 0, best_b1 = 0;
  for (std::size_t ai = 0; ai < a1_masks.size(); ++ai) {
    const std::uint64_t a1 = a1_masks[ai];
    const std::uint64_t a2 = amask & ~a1;
    for (std::size_t bi = 0; bi < b1_masks.size(); ++bi) {
      const std::uint64_t b1 = b1_masks[bi];
      const std::uint64_t b2 = bmask & ~b1;
      const long long score = a_internal[ai] + b_internal[bi] -
                              detail::mask_cross(adj, a1, b1) -
                              detail::mask_cross(adj, a2, b2);
      if (score < best) {
        best = score;
        best_a1 = a1;
        best_b1 = b1;
      }
    }
  }
  QuadPartition quad{detail::mask_to_set(best_a1),
                     detail::mask_to_set(amask & ~best_a1),
                     detail::mask_to_set(best_b1),
                     detail::mask_to_set(bmask & ~best_b1)};
  return {best, std::move(quad)};
}

/// Verifies the integer-program identity: the minimum crossing count over
/// all splits induced by feasible sign vectors (positive on A1 and B1)
/// equals E(A,B) + D_C. The left side counts edges across the induced
/// vertex split directly, the right side combines the four-term objective,
/// so the two routes share no arithmetic.
inline bool integer_program_identity_check(const Graph& g,
                                           const Bisection& bis) {
  const QuadScore organized = organized_partition_bf(g, bis);
  const long long rhs = cut_size(g, bis) + organized.value;

  VertexSet A = bis.a, B = bis.b;
  std::sort(A.begin(), A.end());
  std::sort(B.begin(), B.end());
  const int half = static_cast<int>(A.size());
  const auto adj = detail::adjacency_masks(g);
  const std::uint64_t universe =
      g.num_vertices() == 64 ? ~0ull : (1ull << g.num_vertices()) - 1;

  const VertexSet a_rest(A.begin() + 1, A.end());
  long long lhs = std::numeric_limits<long long>::max();
  detail::for_each_combination(half - 1, half / 2 - 1, [&](std::uint64_t ac) {
    const std::uint64_t a1 = detail::lift_mask(ac, a_rest) | (1ull << A[0]);
    detail::for_each_combination(half, half / 2, [&](std::uint64_t bc) {
      const std::uint64_t positive = a1 | detail::lift_mask(bc, B);
      const long long crossing =
          detail::mask_cross(adj, positive, universe & ~positive);
      if (crossing < lhs) lhs = crossing;
    });
  });
  return lhs == rhs;
}

struct JointProgramResult {
  Bisection bisection;
  QuadPartition quad;
  int cut;
  long long d_c;
};

/// Solves the two nested integer programs: the minimum bisection first, then
/// the organized partition of the winner.
inline JointProgramResult joint_program_bf(const Graph& g) {
  const int n = g.num_vertices();
  if (n % 4 != 0)
    throw DomainError("joint program needs n divisible by 4");
  if (n > 16)
    throw ResourceError("joint program enumeration is limited to n <= 16, got " +
                        std::to_string(n));
  auto mins = min_bisection_bf(g);
  auto organized = organized_partition_bf(g, mins.bisections.front());
  return {mins.bisections.front(), std::move(organized.quad), mins.cut,
          organized.value};
}

struct OracleReport {
  int min_cut = 0;
  std::vector<Bisection> min_bisections;
  std::optional<int> second_min_cut;
  int max_cut = 0;
  std::optional<long long> d_c_of_min;
  std::optional<QuadPartition> organized_quad;
};

/// Full exact report for one graph: minimum / second-minimum / maximum
/// bisections plus the organized partition of the designated (first)
/// minimum, when its halves have even size.
inline OracleReport full_oracle_report(const Graph& g) {
  OracleReport report;
  auto mins = min_bisection_bf(g);
  report.min_cut = mins.cut;
  report.min_bisections = std::move(mins.bisections);
  if (g.num_vertices() >= 4)
    report.second_min_cut = second_min_bisection_bf(g).cut;
  report.max_cut = max_bisection_bf(g).cut;
  if ((g.num_vertices() / 2) % 2 == 0) {
    auto organized = organized_partition_bf(g, report.min_bisections.front());
    report.d_c_of_min = organized.value;
    report.organized_quad = std::move(organized.quad);
  }
  return report;
}

}  // namespace specbisect

#endif  // SPECBISECT_ORACLE_HPP
