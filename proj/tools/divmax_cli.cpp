#include "divmax/io.hpp"
#include "divmax/oracle.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace {

using namespace divmax;
using nlohmann::json;

json coreset_to_json(const Coreset& t, const Dataset& d) {
  json j;
  j["tau"] = t.tau;
  j["radius"] = t.radius;
  j["size"] = t.ids.size();
  std::vector<std::string> ids;
  ids.reserve(t.ids.size());
  for (int i : t.ids) ids.push_back(d[i].id);
  j["ids"] = ids;
  json clusters = json::array();
  for (size_t c = 0; c < t.per_cluster.size(); ++c) {
    json cluster;
    std::vector<std::string> cids;
    for (int i : t.per_cluster[c]) cids.push_back(d[i].id);
    cluster["ids"] = cids;
    if (!t.shard_of_cluster.empty()) cluster["shard"] = t.shard_of_cluster[c];
    clusters.push_back(std::move(cluster));
  }
  j["clusters"] = std::move(clusters);
  return j;
}

struct CommonOpts {
  std::string points, matroid, output, metric = "euclidean";
  int k = 4;
  std::uint64_t seed = 1;
  double epsilon = 0.0;
  int tau = 0;
};

void add_common(CLI::App* cmd, CommonOpts& o, bool needStop = true) {
  cmd->add_option("points", o.points, "JSON-lines points file")->required();
  cmd->add_option("--matroid", o.matroid, "matroid config file")->required();
  cmd->add_option("--k", o.k, "solution size");
  cmd->add_option("--metric", o.metric, "euclidean | angular-cosine");
  cmd->add_option("--seed", o.seed, "permutation seed");
  cmd->add_option("--output", o.output, "output path (default stdout)");
  if (needStop) {
    auto* eps = cmd->add_option("--epsilon", o.epsilon, "coreset accuracy parameter");
    auto* tau = cmd->add_option("--tau", o.tau, "number of clusters");
    eps->excludes(tau);
    tau->excludes(eps);
  }
}

StopRule make_stop(const CommonOpts& o) {
  if (o.epsilon > 0.0 && o.tau > 0)
    throw InputError("exactly one of --epsilon/--tau must be set");
  if (o.epsilon > 0.0) return EpsilonStop{o.epsilon};
  if (o.tau > 0) return TauStop{o.tau};
  throw InputError("one of --epsilon/--tau is required");
}

int dispatch(int argc, char** argv) {
  CLI::App app{"coreset-based diversity maximization under matroid constraints"};
  app.require_subcommand(1);

  CommonOpts seqO, parO, streamO, solveO, verifyO, benchO;

  auto* seqCmd = app.add_subcommand("coreset-seq", "sequential coreset construction");
  add_common(seqCmd, seqO);

  auto* parCmd = app.add_subcommand("coreset-parallel", "partitioned coreset construction");
  add_common(parCmd, parO);
  int parEll = 0;
  parCmd->add_option("--parallelism", parEll, "number of shards (0 = auto)");

  auto* streamCmd = app.add_subcommand("coreset-stream", "one-pass streaming coreset");
  add_common(streamCmd, streamO);

  auto* solveCmd = app.add_subcommand("solve", "full pipeline: coreset + final solver");
  add_common(solveCmd, solveO);
  std::string solvePipeline = "seq", solveSolver = "local-search", solveKind = "sum";
  double solveGamma = 0.0;
  int solveEll = 1, solveReps = 1;
  unsigned long long solveBudget = 100000000ULL;
  solveCmd->add_option("--pipeline", solvePipeline, "seq | stream | parallel");
  solveCmd->add_option("--solver", solveSolver, "local-search | exhaustive");
  solveCmd->add_option("--diversity", solveKind, "sum|star|tree|cycle|bipartition");
  solveCmd->add_option("--gamma", solveGamma, "local-search improvement factor");
  solveCmd->add_option("--parallelism", solveEll, "shards for the parallel pipeline");
  solveCmd->add_option("--reps", solveReps, "repetitions (fresh permutation each)");
  solveCmd->add_option("--budget", solveBudget, "exhaustive-search candidate budget");

  auto* verifyCmd = app.add_subcommand("verify", "brute-force reference answers");
  add_common(verifyCmd, verifyO, /*needStop=*/false);
  std::string verifyKind = "sum";
  int verifyTau = 0;
  unsigned long long verifyBudget = 10000000ULL;
  verifyCmd->add_option("--diversity", verifyKind, "objective to verify");
  verifyCmd->add_option("--tau", verifyTau, "also report the optimal tau-clustering radius");
  verifyCmd->add_option("--budget", verifyBudget, "enumeration budget");

  auto* genCmd = app.add_subcommand("gen", "generate a synthetic instance");
  io::GenSpec spec;
  std::string genPoints, genMatroid;
  genCmd->add_option("--n", spec.n, "number of points");
  genCmd->add_option("--dim", spec.dim, "vector dimensionality");
  genCmd->add_option("--clusters", spec.clusters, "Gaussian blob count");
  genCmd->add_option("--categories", spec.categories, "category count");
  genCmd->add_option("--type", spec.matroid_type, "partition | transversal");
  genCmd->add_option("--seed", spec.seed, "generator seed");
  genCmd->add_option("--rank", spec.target_rank, "target matroid rank (partition)");
  genCmd->add_option("--max-cats", spec.max_cats_per_point,
                     "max categories per point (transversal)");
  genCmd->add_option("--points", genPoints, "output points file")->required();
  genCmd->add_option("--matroid-out", genMatroid, "output matroid file")->required();

  auto* benchCmd = app.add_subcommand("bench", "tau and parallelism sweeps");
  add_common(benchCmd, benchO, /*needStop=*/false);
  io::BenchConfig bc;
  std::string benchKind = "sum";
  benchCmd->add_option("--diversity", benchKind, "objective");
  benchCmd->add_option("--reps", bc.repetitions, "repetitions per configuration");
  benchCmd->add_option("--taus", bc.taus, "tau sweep values");
  benchCmd->add_option("--ells", bc.ells, "parallelism sweep values");
  benchCmd->add_option("--gamma", bc.gamma, "local-search improvement factor");

  CLI11_PARSE(app, argc, argv);

  if (seqCmd->parsed()) {
    auto [d, m] = io::ingest(seqO.points, seqO.matroid, metric_from_string(seqO.metric));
    Dataset perm = d.permuted(seqO.seed);
    Coreset t = seq_coreset(perm, m, seqO.k, make_stop(seqO));
    io::write_json(coreset_to_json(t, perm), seqO.output);
    return 0;
  }
  if (parCmd->parsed()) {
    auto [d, m] = io::ingest(parO.points, parO.matroid, metric_from_string(parO.metric));
    Dataset perm = d.permuted(parO.seed);
    const int ell = parEll > 0 ? parEll : default_parallelism(perm.size(), parO.k);
    Coreset t = parallel_coreset(perm, m, parO.k, ell, make_stop(parO));
    json j = coreset_to_json(t, perm);
    j["parallelism"] = ell;
    io::write_json(j, parO.output);
    return 0;
  }
  if (streamCmd->parsed()) {
    // Single pass over the file; only centers and delegates stay resident.
    Matroid m = io::load_matroid(streamO.matroid);
    StreamMode mode = streamO.epsilon > 0.0
                          ? StreamMode{StreamEpsilonMode{streamO.epsilon, streamO.k}}
                          : StreamMode{StreamTauMode{streamO.tau > 0 ? streamO.tau : 64,
                                                     streamO.k}};
    StreamState st(m, mode, metric_from_string(streamO.metric));
    std::ifstream in(streamO.points);
    if (!in) throw InputError("cannot open points file: " + streamO.points);
    io::for_each_point(in, [&](Point&& p, int i) { st.push(p, i); });
    Coreset t = st.finalize();
    json j;
    j["tau"] = t.tau;
    j["size"] = t.ids.size();
    json clusters = json::array();
    for (auto& ids : st.delegate_ids()) {
      json cluster;
      cluster["ids"] = ids;
      clusters.push_back(std::move(cluster));
    }
    j["clusters"] = std::move(clusters);
    io::write_json(j, streamO.output);
    return 0;
  }
  if (solveCmd->parsed()) {
    io::RunConfig rc;
    rc.points_path = solveO.points;
    rc.matroid_path = solveO.matroid;
    rc.metric = metric_from_string(solveO.metric);
    rc.k = solveO.k;
    rc.kind = diversity_from_string(solveKind);
    rc.pipeline = pipeline_from_string(solvePipeline);
    rc.stop = make_stop(solveO);
    if (solveSolver == "local-search")
      rc.solver = LocalSearchSolver{solveGamma};
    else if (solveSolver == "exhaustive")
      rc.solver = ExhaustiveSolver{solveBudget};
    else
      throw InputError("unknown solver: " + solveSolver);
    rc.parallelism = solveEll;
    rc.seed = solveO.seed;
    rc.repetitions = solveReps;
    json report = io::run_from_files(rc);
    io::write_json(report, solveO.output);
    return io::report_has_failures(report) ? 1 : 0;
  }
  if (verifyCmd->parsed()) {
    auto [d, m] = io::ingest(verifyO.points, verifyO.matroid, metric_from_string(verifyO.metric));
    const DiversityKind kind = diversity_from_string(verifyKind);
    json j;
    Solution opt = oracle::brute_force_optimum(d, m, verifyO.k, kind, verifyBudget);
    std::vector<std::string> ids;
    for (int i : opt.ids) ids.push_back(d[i].id);
    j["optimum"] = opt.value;
    j["optimum_ids"] = ids;
    j["average_farness"] = opt.value / static_cast<double>(pair_count(kind, verifyO.k).f);
    j["diameter"] = diameter(d);
    if (verifyTau > 0)
      j["optimal_radius"] = oracle::brute_force_optimal_radius(d, verifyTau, verifyBudget);
    io::write_json(j, verifyO.output);
    return 0;
  }
  if (genCmd->parsed()) {
    io::generate_files(spec, genPoints, genMatroid);
    return 0;
  }
  if (benchCmd->parsed()) {
    auto [d, m] = io::ingest(benchO.points, benchO.matroid, metric_from_string(benchO.metric));
    bc.k = benchO.k;
    bc.kind = diversity_from_string(benchKind);
    bc.seed = benchO.seed;
    io::write_json(io::bench(d, m, bc), benchO.output);
    return 0;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return dispatch(argc, argv);
  } catch (const divmax::InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 1;
  } catch (const divmax::InfeasibleError& e) {
    std::cerr << "infeasible: " << e.what() << "\n";
    return 2;
  } catch (const divmax::CapabilityError& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
