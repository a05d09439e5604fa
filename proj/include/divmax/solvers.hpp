#pragma once

#include "divmax/coreset_parallel.hpp"
#include "divmax/coreset_stream.hpp"
#include "divmax/diversity.hpp"

namespace divmax {

struct Solution {
  IndexSet ids;  // sorted dataset indices, |ids| = k
  int k = 0;
  DiversityKind kind = DiversityKind::Sum;
  double value = 0.0;
};

struct LocalSearchStats {
  long long swaps_accepted = 0;
  bool cap_hit = false;
};

/// Matroid-constrained swap local search for the Sum objective. Starts
/// from a greedy independent k-set, accepts the first swap improving the
/// value by a factor > (1+gamma), and stops at a local optimum. With
/// gamma = 0 termination is guarded by swap_cap (default k*|pool|^2);
/// hitting the cap is reported through stats, never silent.
Solution local_search_sum(const Dataset& d, const Matroid& m, const IndexSet& pool, int k,
                          double gamma, long long swap_cap = -1,
                          LocalSearchStats* stats = nullptr);

/// Exact maximum over independent k-subsets of the pool, enumerated in
/// lexicographic index order. Refuses to start when C(|pool|, k) exceeds
/// the budget.
Solution exhaustive_search(const Dataset& d, const Matroid& m, const IndexSet& pool, int k,
                           DiversityKind kind,
                           unsigned long long budget = 100'000'000ULL);

enum class Pipeline { Seq, Stream, Parallel };

struct LocalSearchSolver {
  double gamma = 0.0;
};
struct ExhaustiveSolver {
  unsigned long long budget = 100'000'000ULL;
};
using SolverChoice = std::variant<LocalSearchSolver, ExhaustiveSolver>;

struct SolveReport {
  int coreset_size = 0;
  int tau = 0;
  double radius = 0.0;
  double coreset_seconds = 0.0;
  double solver_seconds = 0.0;
  bool swap_cap_hit = false;
};

Pipeline pipeline_from_string(const std::string& s);

/// Full pipeline: build the coreset (Seq/Stream/Parallel), run the chosen
/// solver on it, report the timing breakdown and coreset statistics.
Solution solve(const Dataset& d, const Matroid& m, int k, DiversityKind kind,
               Pipeline pipeline, const StopRule& stop, const SolverChoice& solver,
               int parallelism, SolveReport* report = nullptr);

}  // namespace divmax
