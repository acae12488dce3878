#include <chrono>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "specbisect/bisection.hpp"
#include "specbisect/experiment.hpp"
#include "specbisect/generators.hpp"
#include "specbisect/graph.hpp"
#include "specbisect/io.hpp"
#include "specbisect/oracle.hpp"
#include "specbisect/spectral.hpp"

namespace {

using nlohmann::json;
using namespace specbisect;

constexpr int kExitInput = 2;
constexpr int kExitDomain = 3;
constexpr int kExitResource = 4;
constexpr int kExitNumeric = 5;

// Sniffs the banner line so .mtx files work under any extension.
Graph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::string first;
  std::getline(in, first);
  in.clear();
  in.seekg(0);
  if (first.rfind("%%MatrixMarket", 0) == 0) return read_matrix_market(in);
  return read_edge_list(in);
}

Bisection load_partition(const std::string& path, const Graph& g) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  return read_partition(in, g);
}

void save_partition(const std::string& path, const Graph& g,
                    const Bisection& bis) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot open '" + path + "' for writing");
  write_partition(out, g, bis);
}

std::string graph_label(const std::string& path) {
  return std::filesystem::path(path).stem().string();
}

json bisection_to_json(const Bisection& b) {
  return json{{"a", b.a}, {"b", b.b}};
}

json quad_to_json(const QuadPartition& q) {
  return json{{"a1", q.a1}, {"a2", q.a2}, {"b1", q.b1}, {"b2", q.b2}};
}

void print_report(const CutReport& r, const std::string& method,
                  const std::string& format) {
  if (format == "csv") {
    std::cout << "graph_id,n,m,sb_cut,alg1_cut,improvement,lambda2,lambda3,"
                 "runtime_ms\n"
              << r.graph_id << ',' << r.n << ',' << r.m << ',' << r.sb_cut
              << ',';
    if (r.alg1_cut) std::cout << *r.alg1_cut;
    std::cout << ',';
    if (r.improvement) std::cout << *r.improvement;
    std::cout << ',' << r.lambda2 << ',' << r.lambda3 << ',' << r.total_ms
              << '\n';
    return;
  }
  json j{{"graph_id", r.graph_id},
         {"n", r.n},
         {"m", r.m},
         {"method", method},
         {"sb_cut", r.sb_cut},
         {"lambda2", r.lambda2},
         {"lambda3", r.lambda3},
         {"runtime_ms",
          {{"eigen", r.eigen_ms}, {"sweep", r.sweep_ms}, {"total", r.total_ms}}}};
  if (r.alg1_cut) {
    j["alg1_cut"] = *r.alg1_cut;
    j["improvement"] = *r.improvement;
  }
  std::cout << j.dump(2) << '\n';
}

double ms_between(std::chrono::steady_clock::time_point a,
                  std::chrono::steady_clock::time_point b) {
  return std::chrono::duration<double, std::milli>(b - a).count();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"graph bisection via rotations of two Laplacian eigenvectors"};
  app.require_subcommand(1);

  std::string format = "json";
  std::uint64_t seed = 0;
  std::string out_path;
  SpectralOptions opts;
  app.add_option("--format", format, "report format")
      ->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--tol", opts.tol, "eigensolver residual tolerance");
  app.add_option("--seed", seed, "RNG seed");
  app.add_option("--out", out_path, "output file path");
  app.add_option("--dense-cutoff", opts.dense_cutoff,
                 "largest order solved by the dense eigensolver");
  app.add_option("--lanczos-dim", opts.lanczos_max_dim,
                 "Krylov subspace cap for the matrix-free eigensolver");

  auto* generate =
      app.add_subcommand("generate", "write a generated graph as an edge list");
  generate->fallthrough();
  std::string kind;
  int roach_k = 4;
  int gen_n = 16;
  double gen_p = 0.5;
  generate->add_option("kind", kind, "roach | er | path | cycle | complete")
      ->required()
      ->check(CLI::IsMember({"roach", "er", "path", "cycle", "complete"}));
  generate->add_option("--k", roach_k, "roach arm length");
  generate->add_option("--n", gen_n, "vertex count");
  generate->add_option("--p", gen_p, "edge probability (er)");

  auto* bisect = app.add_subcommand(
      "bisect", "bisect a graph; emits a report and optionally the partition");
  bisect->fallthrough();
  std::string bisect_in;
  std::string method = "alg1";
  bisect->add_option("input", bisect_in, "graph file (edge list or MatrixMarket)")
      ->required();
  bisect->add_option("--method", method, "sb | alg1")
      ->check(CLI::IsMember({"sb", "alg1"}));

  auto* refine =
      app.add_subcommand("refine", "refine a given bisection of a graph");
  refine->fallthrough();
  std::string refine_in, refine_part;
  refine->add_option("input", refine_in, "graph file")->required();
  refine->add_option("partition", refine_part, "partition file")->required();

  auto* oracle = app.add_subcommand(
      "oracle", "exact brute-force answers for desk-scale graphs");
  oracle->fallthrough();
  std::string oracle_in, which, oracle_part;
  oracle->add_option("input", oracle_in, "graph file")->required();
  oracle->add_option("which", which, "min | max | second | dc | identity")
      ->required()
      ->check(CLI::IsMember({"min", "max", "second", "dc", "identity"}));
  oracle->add_option("--partition", oracle_part,
                     "partition file (dc and identity queries)");

  auto* experiment = app.add_subcommand(
      "experiment", "average Algorithm-1 gain over random graph samples");
  experiment->fallthrough();
  ExperimentParams params;
  experiment->add_option("--n", params.n, "vertex count");
  experiment->add_option("--p", params.p, "edge probability");
  experiment->add_option("--samples", params.samples, "graphs to draw");
  experiment->add_option("--threads", params.threads, "worker threads (0 = auto)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return kExitInput;
  }

  try {
    if (generate->parsed()) {
      const Graph g = [&] {
        if (kind == "roach") return gen_roach(roach_k);
        if (kind == "er") return gen_erdos_renyi(gen_n, gen_p, seed);
        if (kind == "path") return gen_fixture(FixtureKind::path, gen_n);
        if (kind == "cycle") return gen_fixture(FixtureKind::cycle, gen_n);
        return gen_fixture(FixtureKind::complete, gen_n);
      }();
      if (out_path.empty()) {
        write_edge_list(std::cout, g);
      } else {
        std::ofstream out(out_path);
        if (!out) throw InputError("cannot open '" + out_path + "' for writing");
        write_edge_list(out, g);
      }
    } else if (bisect->parsed()) {
      const Graph g = load_graph(bisect_in);
      const auto outcome = bisect_report(
          g, graph_label(bisect_in),
          method == "sb" ? BisectMethod::sb : BisectMethod::alg1, opts);
      print_report(outcome.report, method, format);
      if (!out_path.empty()) save_partition(out_path, g, outcome.partition);
    } else if (refine->parsed()) {
      const Graph g = load_graph(refine_in);
      const Bisection given = load_partition(refine_part, g);
      const auto t0 = std::chrono::steady_clock::now();
      const SpectralBasis basis = spectral_basis(g, opts);
      const auto t1 = std::chrono::steady_clock::now();
      const SweepResult refined = refine_bisection(g, given, opts);
      const auto t2 = std::chrono::steady_clock::now();

      CutReport report;
      report.graph_id = graph_label(refine_in);
      report.n = g.num_vertices();
      report.m = g.num_edges();
      report.sb_cut = cut_size(g, given);  // the cut being refined
      report.alg1_cut = refined.best_cut;
      report.improvement =
          static_cast<double>(report.sb_cut - refined.best_cut) / report.sb_cut;
      report.lambda2 = basis.lambda2;
      report.lambda3 = basis.lambda3;
      report.eigen_ms = ms_between(t0, t1);
      report.sweep_ms = ms_between(t1, t2);
      report.total_ms = ms_between(t0, t2);
      print_report(report, "refine", format);
      if (!out_path.empty()) save_partition(out_path, g, refined.best);
    } else if (oracle->parsed()) {
      const Graph g = load_graph(oracle_in);
      json j{{"graph_id", graph_label(oracle_in)}, {"query", which}};
      if (which == "min") {
        const auto result = min_bisection_bf(g);
        j["min_cut"] = result.cut;
        j["optimal_count"] = result.bisections.size();
        json list = json::array();
        for (const auto& bis : result.bisections)
          list.push_back(bisection_to_json(bis));
        j["min_bisections"] = std::move(list);
      } else if (which == "second") {
        const auto result = second_min_bisection_bf(g);
        j["second_min_cut"] = result.cut;
        j["bisection"] = bisection_to_json(result.bisection);
      } else if (which == "max") {
        const auto result = max_bisection_bf(g);
        j["max_cut"] = result.cut;
        j["bisection"] = bisection_to_json(result.bisection);
      } else {
        if (oracle_part.empty())
          throw InputError("--partition is required for the '" + which +
                           "' query");
        const Bisection bis = load_partition(oracle_part, g);
        j["cut"] = cut_size(g, bis);
        const QuadScore organized = organized_partition_bf(g, bis);
        j["d_c"] = organized.value;
        j["organized_quad"] = quad_to_json(organized.quad);
        if (which == "identity")
          j["holds"] = integer_program_identity_check(g, bis);
      }
      std::cout << j.dump(2) << '\n';
    } else if (experiment->parsed()) {
      params.seed = seed;
      const ExperimentSummary summary = run_experiment(params, opts);
      if (format == "csv") {
        std::cout << "n,p,samples,discarded_disconnected,mean_improvement,seed\n"
                  << summary.n << ',' << summary.p << ',' << summary.samples
                  << ',' << summary.discarded_disconnected << ','
                  << summary.mean_improvement << ',' << summary.seed << '\n';
      } else {
        const json j{{"n", summary.n},
                     {"p", summary.p},
                     {"samples", summary.samples},
                     {"discarded_disconnected", summary.discarded_disconnected},
                     {"mean_improvement", summary.mean_improvement},
                     {"seed", summary.seed}};
        std::cout << j.dump(2) << '\n';
      }
    }
  } catch (const ResourceError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitResource;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitDomain;
  } catch (const NumericError& e) {
    std::cerr << "error: " << e.what() << " (residual " << e.residual << ")\n";
    return kExitNumeric;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
