#pragma once

#include "divmax/diversity.hpp"
#include "divmax/matroid.hpp"
#include "divmax/solvers.hpp"

namespace divmax {
namespace oracle {

/// Exact optimum by plain enumeration of all k-subsets, filtered through
/// is_independent. Deliberately simple; used to validate everything else.
Solution brute_force_optimum(const Dataset& d, const Matroid& m, int k, DiversityKind kind,
                             unsigned long long budget = 10'000'000ULL);

/// Optimal diversity divided by the pair count f(k).
double average_farness(const Dataset& d, const Matroid& m, int k, DiversityKind kind,
                       unsigned long long budget = 10'000'000ULL);

/// Minimum radius over all tau-center subsets (exact 1-median-style scan).
double brute_force_optimal_radius(const Dataset& d, int tau,
                                  unsigned long long budget = 1'000'000ULL);

/// Transversal independence decided by exhaustive assignment enumeration
/// instead of augmenting-path matching; cross-checks the production oracle
/// on instances with <= 10 points.
bool transversal_independent_bruteforce(const TransversalMatroid& tm,
                                        const Dataset& d, const IndexSet& ids);

}  // namespace oracle
}  // namespace divmax
