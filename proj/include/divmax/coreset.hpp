#pragma once

#include "divmax/clustering.hpp"
#include "divmax/matroid.hpp"

#include <variant>

namespace divmax {

/// Stop rule for the GMM phase: either the accuracy-driven radius
/// threshold epsilon*delta/(16k), or a fixed number of clusters (the
/// experimental control knob).
struct EpsilonStop {
  double epsilon;
};
struct TauStop {
  int tau;
};
using StopRule = std::variant<EpsilonStop, TauStop>;

struct Coreset {
  IndexSet ids;                         // union of per_cluster, sorted
  std::vector<IndexSet> per_cluster;    // by center position
  std::vector<int> shard_of_cluster;    // parallel provenance; empty for seq
  int tau = 0;
  double radius = 0.0;
};

/// Per-cluster selection. Picks a largest independent subset U of size
/// <= k; if |U| = k or the matroid is a partition matroid, returns U.
/// Transversal: tops up every category of a point of U to
/// min{k, |A inter cluster|} members. Any other matroid: the whole cluster.
IndexSet extract(const Dataset& d, const Matroid& m, const IndexSet& cluster, int k);

/// SeqCoreset: GMM until the stop rule is met, then extract per cluster
/// and take the union.
Coreset seq_coreset(const Dataset& d, const Matroid& m, int k, const StopRule& stop);

/// Coreset assembled from an already computed clustering (shared by the
/// sequential and parallel drivers).
Coreset coreset_from_clustering(const Dataset& d, const Matroid& m, int k, const Clustering& c);

namespace detail {
/// SeqCoreset body without the top-level k <= rank check; shards of a
/// partitioned run may have rank below k and still contribute.
Coreset seq_coreset_impl(const Dataset& d, const Matroid& m, int k, const StopRule& stop);
}  // namespace detail

}  // namespace divmax
