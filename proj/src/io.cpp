#include "divmax/io.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <numbers>
#include <random>
#include <sstream>

namespace divmax {
namespace io {

using nlohmann::json;

void for_each_point(std::istream& in, const std::function<void(Point&&, int)>& fn) {
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    if (line.empty()) {
      ++lineno;
      continue;
    }
    json j;
    try {
      j = json::parse(line);
    } catch (const json::exception& e) {
      throw InputError("points file line " + std::to_string(lineno + 1) + ": " + e.what());
    }
    Point p;
    try {
      p.id = j.at("id").get<std::string>();
      const auto& vec = j.at("vector");
      p.vec.resize(static_cast<Eigen::Index>(vec.size()));
      for (size_t i = 0; i < vec.size(); ++i)
        p.vec[static_cast<Eigen::Index>(i)] = vec[i].get<double>();
      p.categories = j.at("categories").get<std::vector<std::string>>();
    } catch (const json::exception& e) {
      throw InputError("points file line " + std::to_string(lineno + 1) + ": " + e.what());
    }
    fn(std::move(p), lineno);
    ++lineno;
  }
}

Dataset load_points(const std::string& path, MetricKind metric) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open points file: " + path);
  std::vector<Point> pts;
  for_each_point(in, [&](Point&& p, int) { pts.push_back(std::move(p)); });
  return Dataset(std::move(pts), metric);
}

Matroid load_matroid(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open matroid file: " + path);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception& e) {
    throw InputError(std::string("matroid file: ") + e.what());
  }
  const std::string type = j.value("type", "");
  if (type == "partition") {
    std::map<std::string, int> quotas;
    for (const auto& [cat, q] : j.at("quotas").items()) {
      const int quota = q.get<int>();
      if (quota < 0) throw InputError("matroid file: negative quota for " + cat);
      quotas[cat] = quota;
    }
    return Matroid::partition(std::move(quotas));
  }
  if (type == "transversal") {
    std::set<std::string> cats;
    for (const auto& c : j.at("categories")) cats.insert(c.get<std::string>());
    return Matroid::transversal(std::move(cats));
  }
  throw InputError("matroid file: unknown type '" + type + "'");
}

std::pair<Dataset, Matroid> ingest(const std::string& pointsPath, const std::string& matroidPath,
                                   MetricKind metric) {
  Dataset d = load_points(pointsPath, metric);
  Matroid m = load_matroid(matroidPath);
  validate(m, d);
  return {std::move(d), std::move(m)};
}

namespace {

// Box-Muller, hand-rolled so the byte stream is stable across library
// implementations of normal_distribution.
class Gaussian {
 public:
  explicit Gaussian(std::uint64_t seed) : rng_(seed) {}
  double operator()() {
    if (have_) {
      have_ = false;
      return spare_;
    }
    const double u1 = uniform01();
    const double u2 = uniform01();
    const double r = std::sqrt(-2.0 * std::log(u1));
    spare_ = r * std::sin(2.0 * std::numbers::pi * u2);
    have_ = true;
    return r * std::cos(2.0 * std::numbers::pi * u2);
  }
  std::uint64_t raw() { return rng_(); }

 private:
  double uniform01() {
    // (0,1]: avoids log(0)
    return (static_cast<double>(rng_() >> 11) + 1.0) * 0x1.0p-53;
  }
  std::mt19937_64 rng_;
  bool have_ = false;
  double spare_ = 0.0;
};

std::string category_name(int i) { return "cat" + std::to_string(i); }

}  // namespace

std::pair<Dataset, Matroid> generate(const GenSpec& spec, MetricKind metric) {
  if (spec.n < 1 || spec.dim < 1 || spec.clusters < 1 || spec.categories < 1)
    throw InputError("gen: n, dim, clusters and categories must be positive");
  Gaussian g(spec.seed);

  std::vector<Eigen::VectorXd> blobCenters(static_cast<size_t>(spec.clusters));
  for (auto& c : blobCenters) {
    c.resize(spec.dim);
    for (int j = 0; j < spec.dim; ++j) c[j] = 10.0 * g();
  }

  const bool partition = spec.matroid_type == "partition";
  if (!partition && spec.matroid_type != "transversal")
    throw InputError("gen: matroid type must be partition or transversal");

  std::vector<Point> pts(static_cast<size_t>(spec.n));
  std::vector<int> catCount(static_cast<size_t>(spec.categories), 0);
  for (int i = 0; i < spec.n; ++i) {
    Point& p = pts[static_cast<size_t>(i)];
    p.id = "p" + std::to_string(i);
    const int blob = static_cast<int>(g.raw() % static_cast<std::uint64_t>(spec.clusters));
    p.vec.resize(spec.dim);
    for (int j = 0; j < spec.dim; ++j)
      p.vec[j] = blobCenters[static_cast<size_t>(blob)][j] + g();
    if (partition) {
      const int cat = static_cast<int>(g.raw() % static_cast<std::uint64_t>(spec.categories));
      p.categories = {category_name(cat)};
      ++catCount[static_cast<size_t>(cat)];
    } else {
      const int howMany =
          1 + static_cast<int>(g.raw() % static_cast<std::uint64_t>(
                                   std::max(1, spec.max_cats_per_point)));
      std::set<std::string> cats;
      for (int t = 0; t < howMany; ++t)
        cats.insert(category_name(
            static_cast<int>(g.raw() % static_cast<std::uint64_t>(spec.categories))));
      p.categories.assign(cats.begin(), cats.end());
    }
  }

  Dataset d(std::move(pts), metric);
  if (partition) {
    // Quotas proportional to category counts (largest remainder), with a
    // minimum of one slot for every populated category, summing to the
    // requested rank.
    int targetRank = spec.target_rank;
    if (targetRank <= 0) {
      targetRank = 0;
      for (int c : catCount) targetRank += std::max(1, c / 4);
    }
    std::map<std::string, int> quotas;
    int populated = 0;
    for (int c : catCount)
      if (c > 0) ++populated;
    targetRank = std::clamp(targetRank, populated, spec.n);

    std::vector<std::pair<double, int>> remainders;
    int assigned = 0;
    std::vector<int> quota(static_cast<size_t>(spec.categories), 0);
    for (int c = 0; c < spec.categories; ++c) {
      if (catCount[static_cast<size_t>(c)] == 0) continue;
      const double share = static_cast<double>(targetRank) *
                           catCount[static_cast<size_t>(c)] / static_cast<double>(spec.n);
      quota[static_cast<size_t>(c)] =
          std::clamp(static_cast<int>(share), 1, catCount[static_cast<size_t>(c)]);
      assigned += quota[static_cast<size_t>(c)];
      remainders.emplace_back(share - static_cast<int>(share), c);
    }
    std::sort(remainders.begin(), remainders.end(),
              [](const auto& a, const auto& b) { return a.first > b.first; });
    for (const auto& [frac, c] : remainders) {
      if (assigned >= targetRank) break;
      if (quota[static_cast<size_t>(c)] < catCount[static_cast<size_t>(c)]) {
        ++quota[static_cast<size_t>(c)];
        ++assigned;
      }
    }
    // If rounding left us short (all fractional candidates exhausted),
    // distribute the remainder wherever capacity is left.
    for (int c = 0; c < spec.categories && assigned < targetRank; ++c) {
      while (quota[static_cast<size_t>(c)] < catCount[static_cast<size_t>(c)] &&
             assigned < targetRank) {
        ++quota[static_cast<size_t>(c)];
        ++assigned;
      }
    }
    for (int c = 0; c < spec.categories; ++c)
      if (catCount[static_cast<size_t>(c)] > 0)
        quotas[category_name(c)] = quota[static_cast<size_t>(c)];
    return {std::move(d), Matroid::partition(std::move(quotas))};
  }

  std::set<std::string> active;
  for (int c = 0; c < spec.categories; ++c) active.insert(category_name(c));
  return {std::move(d), Matroid::transversal(std::move(active))};
}

void generate_files(const GenSpec& spec, const std::string& pointsPath,
                    const std::string& matroidPath) {
  auto [d, m] = generate(spec, MetricKind::Euclidean);
  std::ofstream pf(pointsPath);
  if (!pf) throw InputError("cannot write points file: " + pointsPath);
  for (int i = 0; i < d.size(); ++i) {
    const Point& p = d[i];
    json j;
    j["id"] = p.id;
    std::vector<double> vec(p.vec.data(), p.vec.data() + p.vec.size());
    j["vector"] = vec;
    j["categories"] = p.categories;
    pf << j.dump() << "\n";
  }
  std::ofstream mf(matroidPath);
  if (!mf) throw InputError("cannot write matroid file: " + matroidPath);
  json j;
  if (m.is_partition()) {
    j["type"] = "partition";
    j["quotas"] = m.as_partition().quotas;
  } else {
    j["type"] = "transversal";
    j["categories"] = m.as_transversal().categories;
  }
  mf << j.dump(2) << "\n";
}

namespace {

json stop_to_json(const StopRule& stop) {
  json j;
  if (const auto* eps = std::get_if<EpsilonStop>(&stop))
    j["epsilon"] = eps->epsilon;
  else
    j["tau"] = std::get<TauStop>(stop).tau;
  return j;
}

json config_to_json(const RunConfig& cfg) {
  json j;
  j["k"] = cfg.k;
  j["diversity"] = to_string(cfg.kind);
  j["metric"] = to_string(cfg.metric);
  j["pipeline"] = cfg.pipeline == Pipeline::Seq      ? "seq"
                  : cfg.pipeline == Pipeline::Stream ? "stream"
                                                     : "parallel";
  j["stop"] = stop_to_json(cfg.stop);
  if (const auto* ls = std::get_if<LocalSearchSolver>(&cfg.solver)) {
    j["solver"] = "local-search";
    j["gamma"] = ls->gamma;
  } else {
    j["solver"] = "exhaustive";
    j["budget"] = std::get<ExhaustiveSolver>(cfg.solver).budget;
  }
  j["parallelism"] = cfg.parallelism;
  j["seed"] = cfg.seed;
  j["repetitions"] = cfg.repetitions;
  return j;
}

}  // namespace

nlohmann::json run(const RunConfig& cfg, const Dataset& d, const Matroid& m) {
  json report;
  report["config"] = config_to_json(cfg);
  json records = json::array();

  double meanValue = 0.0, minValue = 0.0, maxValue = 0.0;
  double meanCoreset = 0.0, meanSolver = 0.0;
  int ok = 0, failed = 0;
  std::exception_ptr firstError;

  for (int rep = 0; rep < cfg.repetitions; ++rep) {
    const std::uint64_t repSeed = cfg.seed + static_cast<std::uint64_t>(rep);
    json rec;
    rec["seed"] = repSeed;
    try {
      Dataset perm = d.permuted(repSeed);
      SolveReport sr;
      Solution sol =
          solve(perm, m, cfg.k, cfg.kind, cfg.pipeline, cfg.stop, cfg.solver,
                cfg.parallelism, &sr);
      std::vector<std::string> ids;
      ids.reserve(sol.ids.size());
      for (int i : sol.ids) ids.push_back(perm[i].id);
      std::sort(ids.begin(), ids.end());
      rec["diversity"] = sol.value;
      rec["solution_ids"] = ids;
      rec["coreset_size"] = sr.coreset_size;
      rec["tau"] = sr.tau;
      rec["radius"] = sr.radius;
      rec["coreset_seconds"] = sr.coreset_seconds;
      rec["solver_seconds"] = sr.solver_seconds;
      if (sr.swap_cap_hit) rec["swap_cap_hit"] = true;
      if (ok == 0) {
        minValue = maxValue = sol.value;
      } else {
        minValue = std::min(minValue, sol.value);
        maxValue = std::max(maxValue, sol.value);
      }
      meanValue += sol.value;
      meanCoreset += sr.coreset_seconds;
      meanSolver += sr.solver_seconds;
      ++ok;
    } catch (const std::exception& e) {
      rec["error"] = e.what();
      if (!firstError) firstError = std::current_exception();
      ++failed;
    }
    records.push_back(std::move(rec));
  }
  // Partial failures are reported; when nothing succeeded the caller gets
  // the original error (and with it the precise exit code).
  if (ok == 0 && firstError) std::rethrow_exception(firstError);

  report["records"] = std::move(records);
  json summary;
  summary["runs_ok"] = ok;
  summary["runs_failed"] = failed;
  if (ok > 0) {
    summary["mean_diversity"] = meanValue / ok;
    summary["min_diversity"] = minValue;
    summary["max_diversity"] = maxValue;
    summary["mean_coreset_seconds"] = meanCoreset / ok;
    summary["mean_solver_seconds"] = meanSolver / ok;
  }
  report["summary"] = std::move(summary);
  return report;
}

nlohmann::json run_from_files(const RunConfig& cfg) {
  auto [d, m] = ingest(cfg.points_path, cfg.matroid_path, cfg.metric);
  return run(cfg, d, m);
}

bool report_has_failures(const nlohmann::json& report) {
  return report.at("summary").at("runs_failed").get<int>() > 0;
}

nlohmann::json bench(const Dataset& d, const Matroid& m, const BenchConfig& cfg) {
  json out;
  out["k"] = cfg.k;
  out["diversity"] = to_string(cfg.kind);
  out["repetitions"] = cfg.repetitions;

  json sweep = json::array();
  for (int tau : cfg.taus) {
    RunConfig rc;
    rc.k = cfg.k;
    rc.kind = cfg.kind;
    rc.pipeline = Pipeline::Seq;
    rc.stop = TauStop{tau};
    rc.solver = LocalSearchSolver{cfg.gamma};
    rc.seed = cfg.seed;
    rc.repetitions = cfg.repetitions;
    json rep = run(rc, d, m);
    json row;
    row["tau"] = tau;
    row["summary"] = rep["summary"];
    sweep.push_back(std::move(row));
  }
  out["tau_sweep"] = std::move(sweep);

  json par = json::array();
  for (int ell : cfg.ells) {
    RunConfig rc;
    rc.k = cfg.k;
    rc.kind = cfg.kind;
    rc.pipeline = Pipeline::Parallel;
    rc.stop = TauStop{cfg.bench_tau};
    rc.solver = LocalSearchSolver{cfg.gamma};
    rc.parallelism = ell;
    rc.seed = cfg.seed;
    rc.repetitions = cfg.repetitions;
    json rep = run(rc, d, m);
    json row;
    row["ell"] = ell;
    row["tau"] = cfg.bench_tau;
    row["summary"] = rep["summary"];
    par.push_back(std::move(row));
  }
  out["parallelism_sweep"] = std::move(par);
  return out;
}

void write_json(const nlohmann::json& j, const std::string& path) {
  if (path.empty()) {
    std::cout << j.dump(2) << std::endl;
    return;
  }
  std::ofstream out(path);
  if (!out) throw InputError("cannot write output file: " + path);
  out << j.dump(2) << "\n";
}

}  // namespace io
}  // namespace divmax
