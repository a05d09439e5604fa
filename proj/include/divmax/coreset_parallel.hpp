#pragma once

#include "divmax/coreset.hpp"

namespace divmax {

/// Composable-coreset driver: splits the dataset into ell contiguous
/// shards (sizes differing by at most one), runs seq_coreset on each shard
/// concurrently, and unions the results. With a TauStop the tau budget is
/// divided across shards; with ell = 1 the output equals seq_coreset's.
/// The returned radius is the maximum shard radius.
Coreset parallel_coreset(const Dataset& d, const Matroid& m, int k, int ell,
                         const StopRule& stop);

/// Second-level reduction: seq_coreset on the sub-dataset induced by t,
/// mapped back to the original indices. Quality multiplies.
Coreset reduce_coreset(const Coreset& t, const Dataset& d, const Matroid& m, int k,
                       const StopRule& stop);

/// Default degree of parallelism: min(sqrt(n/k), hardware workers).
int default_parallelism(int n, int k);

}  // namespace divmax
