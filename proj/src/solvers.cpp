#include "divmax/solvers.hpp"

#include <algorithm>
#include <chrono>

namespace divmax {

namespace {

double sum_against(const Dataset& d, const IndexSet& ids, int x, int skip) {
  double total = 0.0;
  for (int u : ids)
    if (u != skip && u != x) total += d.dist(x, u);
  return total;
}

unsigned long long choose_capped(int n, int k, unsigned long long cap) {
  if (k < 0 || k > n) return 0;
  unsigned long long c = 1;
  for (int i = 1; i <= k; ++i) {
    // c * (n-k+i) / i, watching for overflow against the cap
    if (c > cap) return cap + 1;
    c = c * static_cast<unsigned long long>(n - k + i) / static_cast<unsigned long long>(i);
  }
  return c;
}

}  // namespace

Pipeline pipeline_from_string(const std::string& s) {
  if (s == "seq") return Pipeline::Seq;
  if (s == "stream") return Pipeline::Stream;
  if (s == "parallel") return Pipeline::Parallel;
  throw InputError("unknown pipeline: " + s);
}

Solution local_search_sum(const Dataset& d, const Matroid& m, const IndexSet& pool, int k,
                          double gamma, long long swap_cap, LocalSearchStats* stats) {
  check_ids(d, pool);
  if (k < 2) throw InputError("local_search_sum: k must be at least 2");
  IndexSet current = maximal_independent_subset(m, d, pool, k);
  if (static_cast<int>(current.size()) < k)
    throw InfeasibleError("local_search_sum: pool has no independent set of size " +
                          std::to_string(k));

  if (swap_cap < 0)
    swap_cap = static_cast<long long>(k) * static_cast<long long>(pool.size()) *
               static_cast<long long>(pool.size());

  double value = 0.0;
  for (size_t i = 0; i < current.size(); ++i)
    for (size_t j = i + 1; j < current.size(); ++j)
      value += d.dist(current[i], current[j]);

  LocalSearchStats local;
  std::vector<char> inSolution(static_cast<size_t>(d.size()), 0);
  for (int s : current) inSolution[static_cast<size_t>(s)] = 1;

  bool improved = true;
  while (improved && local.swaps_accepted < swap_cap) {
    improved = false;
    for (size_t si = 0; si < current.size() && !improved; ++si) {
      const int s = current[si];
      const double without = sum_against(d, current, s, s);  // s's contribution
      for (int x : pool) {
        if (inSolution[static_cast<size_t>(x)]) continue;
        const double candidate = value - without + sum_against(d, current, x, s);
        if (!(candidate > (1.0 + gamma) * value)) continue;
        IndexSet swapped = current;
        swapped[si] = x;
        std::sort(swapped.begin(), swapped.end());
        if (!is_independent(m, d, swapped)) continue;
        inSolution[static_cast<size_t>(s)] = 0;
        inSolution[static_cast<size_t>(x)] = 1;
        current = std::move(swapped);
        value = candidate;
        ++local.swaps_accepted;
        improved = true;
        break;
      }
    }
  }
  local.cap_hit = improved && local.swaps_accepted >= swap_cap;
  if (stats) *stats = local;
  return Solution{current, k, DiversityKind::Sum, value};
}

Solution exhaustive_search(const Dataset& d, const Matroid& m, const IndexSet& pool, int k,
                           DiversityKind kind, unsigned long long budget) {
  check_ids(d, pool);
  if (k < 1) throw InputError("exhaustive_search: k must be positive");
  IndexSet sorted = pool;
  std::sort(sorted.begin(), sorted.end());
  const unsigned long long candidates =
      choose_capped(static_cast<int>(sorted.size()), k, budget);
  if (candidates > budget)
    throw CapabilityError(
        "exhaustive_search: candidate count exceeds budget; use a smaller coreset");

  Solution best;
  best.k = k;
  best.kind = kind;
  best.value = -1.0;
  bool found = false;

  IndexSet chosen;
  chosen.reserve(static_cast<size_t>(k));
  // Lexicographic enumeration with hereditary pruning: a dependent prefix
  // cannot extend to an independent set.
  auto recurse = [&](auto&& self, size_t from) -> void {
    if (static_cast<int>(chosen.size()) == k) {
      const double v = evaluate(d, kind, chosen);
      if (!found || v > best.value) {
        found = true;
        best.ids = chosen;
        best.value = v;
      }
      return;
    }
    const size_t need = static_cast<size_t>(k) - chosen.size();
    for (size_t i = from; i + need <= sorted.size(); ++i) {
      chosen.push_back(sorted[i]);
      if (is_independent(m, d, chosen)) self(self, i + 1);
      chosen.pop_back();
    }
  };
  recurse(recurse, 0);

  if (!found)
    throw InfeasibleError("exhaustive_search: pool has no independent set of size " +
                          std::to_string(k));
  return best;
}

Solution solve(const Dataset& d, const Matroid& m, int k, DiversityKind kind,
               Pipeline pipeline, const StopRule& stop, const SolverChoice& solver,
               int parallelism, SolveReport* report) {
  if (std::holds_alternative<LocalSearchSolver>(solver) && kind != DiversityKind::Sum)
    throw InputError("solve: local search supports only the sum objective");

  using clock = std::chrono::steady_clock;
  const auto t0 = clock::now();
  Coreset t;
  switch (pipeline) {
    case Pipeline::Seq:
      t = seq_coreset(d, m, k, stop);
      break;
    case Pipeline::Stream: {
      StreamMode mode = std::holds_alternative<EpsilonStop>(stop)
                            ? StreamMode{StreamEpsilonMode{std::get<EpsilonStop>(stop).epsilon, k}}
                            : StreamMode{StreamTauMode{std::get<TauStop>(stop).tau, k}};
      t = stream_coreset(d, m, mode);
      break;
    }
    case Pipeline::Parallel:
      t = parallel_coreset(d, m, k, parallelism, stop);
      break;
  }
  const auto t1 = clock::now();

  Solution sol;
  LocalSearchStats stats;
  if (const auto* ls = std::get_if<LocalSearchSolver>(&solver)) {
    sol = local_search_sum(d, m, t.ids, k, ls->gamma, -1, &stats);
  } else {
    sol = exhaustive_search(d, m, t.ids, k, kind, std::get<ExhaustiveSolver>(solver).budget);
  }
  const auto t2 = clock::now();

  if (report) {
    report->coreset_size = static_cast<int>(t.ids.size());
    report->tau = t.tau;
    report->radius = t.radius;
    report->coreset_seconds = std::chrono::duration<double>(t1 - t0).count();
    report->solver_seconds = std::chrono::duration<double>(t2 - t1).count();
    report->swap_cap_hit = stats.cap_hit;
  }
  return sol;
}

}  // namespace divmax
