#pragma once

#include "divmax/core.hpp"

namespace divmax {

struct PairCount {
  DiversityKind kind;
  int k;
  long long f;
};

/// Number of distance terms in the objective: C(k,2) for Sum, k-1 for
/// Star/Tree, k for Cycle, floor(k/2)*ceil(k/2) for Bipartition.
PairCount pair_count(DiversityKind kind, int k);

/// Exact MST weight of the complete distance graph over ids (dense Prim).
double mst_weight(const Dataset& d, const IndexSet& ids);

/// Exact minimum Hamiltonian cycle weight (Held-Karp). Capped at 18 points;
/// beyond that a CapabilityError is thrown.
double tsp_weight(const Dataset& d, const IndexSet& ids);

/// Exact value of the chosen diversity objective on ids. Bipartition is
/// evaluated by enumerating floor(k/2)-subsets and is capped at 20 points.
double evaluate(const Dataset& d, DiversityKind kind, const IndexSet& ids);

}  // namespace divmax
