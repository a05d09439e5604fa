#pragma once

#include "divmax/solvers.hpp"

#include <nlohmann/json.hpp>

#include <functional>
#include <iosfwd>

namespace divmax {
namespace io {

/// Streaming JSON-lines reader: one object per line with fields `id`
/// (string), `vector` (array of numbers), `categories` (array of strings).
/// The callback receives each point and its zero-based line position;
/// malformed lines raise InputError naming the line number.
void for_each_point(std::istream& in, const std::function<void(Point&&, int)>& fn);

Dataset load_points(const std::string& path, MetricKind metric);

/// Matroid config: {"type":"partition","quotas":{...}} or
/// {"type":"transversal","categories":[...]}.
Matroid load_matroid(const std::string& path);

/// Loads both files and validates the matroid against the dataset.
std::pair<Dataset, Matroid> ingest(const std::string& pointsPath, const std::string& matroidPath,
                                   MetricKind metric);

struct GenSpec {
  int n = 1000;
  int dim = 8;
  int clusters = 10;
  int categories = 16;
  std::string matroid_type = "partition";  // or "transversal"
  std::uint64_t seed = 1;
  int target_rank = 0;      // partition only; 0 = one quota slot per category count/4
  int max_cats_per_point = 3;  // transversal only
};

/// Synthetic Gaussian-blob instance, deterministic by seed.
std::pair<Dataset, Matroid> generate(const GenSpec& spec, MetricKind metric);

/// Writes the generated pair as ingestible files.
void generate_files(const GenSpec& spec, const std::string& pointsPath,
                    const std::string& matroidPath);

struct RunConfig {
  std::string points_path;
  std::string matroid_path;
  MetricKind metric = MetricKind::Euclidean;
  int k = 2;
  DiversityKind kind = DiversityKind::Sum;
  Pipeline pipeline = Pipeline::Seq;
  StopRule stop = TauStop{64};
  SolverChoice solver = LocalSearchSolver{0.0};
  int parallelism = 1;
  std::uint64_t seed = 1;
  int repetitions = 1;
  std::string output_path;  // empty = stdout
};

/// Executes the configured pipeline `repetitions` times, each on a freshly
/// permuted dataset (seed + repetition index), and returns the JSON report
/// (per-run records plus mean/min/max summary). Failed repetitions are
/// recorded, not silently dropped.
nlohmann::json run(const RunConfig& cfg, const Dataset& d, const Matroid& m);

nlohmann::json run_from_files(const RunConfig& cfg);

bool report_has_failures(const nlohmann::json& report);

struct BenchConfig {
  int k = 4;
  DiversityKind kind = DiversityKind::Sum;
  std::vector<int> taus = {8, 16, 32, 64, 128, 256};
  std::vector<int> ells = {1, 4};
  int bench_tau = 64;  // cluster budget for the parallelism sweep
  int repetitions = 10;
  std::uint64_t seed = 1;
  double gamma = 0.0;
};

/// Tau sweep (quality vs coreset granularity) plus a parallelism sweep at
/// a fixed tau; returns the combined JSON report.
nlohmann::json bench(const Dataset& d, const Matroid& m, const BenchConfig& cfg);

void write_json(const nlohmann::json& j, const std::string& path);

}  // namespace io
}  // namespace divmax
