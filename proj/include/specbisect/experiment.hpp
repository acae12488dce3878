#ifndef SPECBISECT_EXPERIMENT_HPP
#define SPECBISECT_EXPERIMENT_HPP

#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "specbisect/bisection.hpp"
#include "specbisect/generators.hpp"
#include "specbisect/graph.hpp"
#include "specbisect/spectral.hpp"

namespace specbisect {

enum class BisectMethod { sb, alg1 };

/// Per-graph comparison record. For the two-eigenvector method alg1_cut and
/// improvement are filled; plain spectral bisection leaves them empty.
struct CutReport {
  std::string graph_id;
  int n = 0;
  int m = 0;
  int sb_cut = 0;
  std::optional<int> alg1_cut;
  std::optional<double> improvement;  // (sb_cut - alg1_cut) / sb_cut
  double lambda2 = 0.0;
  double lambda3 = 0.0;
  double eigen_ms = 0.0;
  double sweep_ms = 0.0;
  double total_ms = 0.0;
};

struct BisectOutcome {
  CutReport report;
  Bisection partition;
};

namespace detail {

inline double ms_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - start)
      .count();
}

}  // namespace detail

/// Runs spectral bisection (and, for alg1, the rotation sweep) on one graph.
/// The sweep result can never cut more edges than the spectral bisection it
/// starts from; if that is ever observed the process aborts after dumping
/// the eigenvectors, since it means the eigensolver or the sweep is broken.
inline BisectOutcome bisect_report(const Graph& g, const std::string& graph_id,
                                   BisectMethod method,
                                   const SpectralOptions& opts = {}) {
  if (g.num_vertices() % 2 != 0)
    throw DomainError("bisection needs an even vertex count");
  const auto t0 = std::chrono::steady_clock::now();
  const SpectralBasis basis = spectral_basis(g, opts);
  const double eigen_ms = detail::ms_since(t0);

  CutReport report;
  report.graph_id = graph_id;
  report.n = g.num_vertices();
  report.m = g.num_edges();
  report.lambda2 = basis.lambda2;
  report.lambda3 = basis.lambda3;
  report.eigen_ms = eigen_ms;

  const Bisection sb = top_half_partition(basis.y);
  report.sb_cut = cut_size(g, sb);
  Bisection partition = sb;

  if (method == BisectMethod::alg1) {
    const auto t1 = std::chrono::steady_clock::now();
    SweepResult sweep = rotation_sweep(g, basis.x, basis.y, sb);
    report.sweep_ms = detail::ms_since(t1);
    report.alg1_cut = sweep.best_cut;
    report.improvement =
        static_cast<double>(report.sb_cut - sweep.best_cut) / report.sb_cut;
    partition = std::move(sweep.best);
    if (sweep.best_cut > report.sb_cut) {
      std::cerr << "FATAL: rotation sweep returned a larger cut ("
                << sweep.best_cut << " > " << report.sb_cut << ") on "
                << graph_id << "\n  lambda2 = " << basis.lambda2
                << ", lambda3 = " << basis.lambda3
                << "\n  y = " << basis.y.transpose()
                << "\n  x = " << basis.x.transpose() << "\n";
      std::abort();
    }
  }
  report.total_ms = detail::ms_since(t0);
  return {std::move(report), std::move(partition)};
}

struct ExperimentParams {
  int n = 100;
  double p = 0.1;
  int samples = 1000;
  std::uint64_t seed = 0;
  int threads = 0;  // 0: hardware concurrency
};

/// Aggregate over `samples` random graphs; disconnected draws are discarded
/// (and counted) rather than redrawn, so the sample index stream is stable.
struct ExperimentSummary {
  int n = 0;
  double p = 0.0;
  int samples = 0;
  int discarded_disconnected = 0;
  double mean_improvement = 0.0;
  std::uint64_t seed = 0;
};

namespace detail {

// splitmix64 of (seed, index): independent per-sample streams that do not
// depend on how samples are scheduled across threads.
inline std::uint64_t sample_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ull * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

}  // namespace detail

inline ExperimentSummary run_experiment(const ExperimentParams& params,
                                        const SpectralOptions& opts = {}) {
  if (params.n < 4 || params.n % 2 != 0)
    throw InputError("experiment needs an even vertex count >= 4");
  if (params.samples < 1) throw InputError("experiment needs samples >= 1");
  if (!(params.p >= 0.0 && params.p <= 1.0))
    throw InputError("edge probability must lie in [0, 1]");

  // one slot per sample; workers never touch the same index
  std::vector<std::optional<double>> gains(
      static_cast<std::size_t>(params.samples));
  auto worker = [&](int first, int stride) {
    for (int i = first; i < params.samples; i += stride) {
      const Graph g = gen_erdos_renyi(
          params.n, params.p, detail::sample_seed(params.seed, i));
      if (!is_connected(g)) continue;
      const auto outcome =
          bisect_report(g, "sample-" + std::to_string(i), BisectMethod::alg1,
                        opts);
      gains[i] = *outcome.report.improvement;
    }
  };

  int threads = params.threads > 0
                    ? params.threads
                    : static_cast<int>(std::thread::hardware_concurrency());
  threads = std::max(1, std::min(threads, params.samples));
  if (threads == 1) {
    worker(0, 1);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(threads));
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker, t, threads);
    for (auto& th : pool) th.join();
  }

  ExperimentSummary summary;
  summary.n = params.n;
  summary.p = params.p;
  summary.samples = params.samples;
  summary.seed = params.seed;
  double total = 0.0;
  int kept = 0;
  for (const auto& gain : gains) {
    if (gain) {
      total += *gain;
      ++kept;
    } else {
      ++summary.discarded_disconnected;
    }
  }
  if (kept == 0)
    throw DomainError("every sampled graph was disconnected; raise p or n");
  summary.mean_improvement = total / kept;
  return summary;
}

}  // namespace specbisect

#endif  // SPECBISECT_EXPERIMENT_HPP
