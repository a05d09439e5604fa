#include "divmax/coreset.hpp"

#include <algorithm>
#include <map>

namespace divmax {

IndexSet extract(const Dataset& d, const Matroid& m, const IndexSet& cluster, int k) {
  if (cluster.empty()) throw InputError("extract: empty cluster");
  IndexSet u = maximal_independent_subset(m, d, cluster, k);
  if (static_cast<int>(u.size()) == k || m.is_partition()) return u;

  if (m.is_transversal()) {
    const auto& active = m.as_transversal().categories;
    // Categories of the points of U, restricted to the active family.
    std::set<std::string> wanted;
    for (int i : u)
      for (const std::string& c : d[i].categories)
        if (active.contains(c)) wanted.insert(c);

    std::map<std::string, int> inCluster;   // |A inter cluster|
    for (int i : cluster)
      for (const std::string& c : d[i].categories)
        if (wanted.contains(c)) ++inCluster[c];

    std::map<std::string, int> have;        // members per wanted category in the result
    std::vector<char> taken(static_cast<size_t>(d.size()), 0);
    IndexSet result = u;
    for (int i : u) {
      taken[static_cast<size_t>(i)] = 1;
      for (const std::string& c : d[i].categories)
        if (wanted.contains(c)) ++have[c];
    }
    // Top up each category to min{k, |A inter cluster|}; a point counts
    // toward all of its categories. Candidates scanned in index order.
    for (const std::string& cat : wanted) {
      const int target = std::min(k, inCluster[cat]);
      for (int i : cluster) {
        if (have[cat] >= target) break;
        if (taken[static_cast<size_t>(i)]) continue;
        const auto& pc = d[i].categories;
        if (std::find(pc.begin(), pc.end(), cat) == pc.end()) continue;
        taken[static_cast<size_t>(i)] = 1;
        result.push_back(i);
        for (const std::string& c : pc)
          if (wanted.contains(c)) ++have[c];
      }
    }
    std::sort(result.begin(), result.end());
    return result;
  }

  // General matroid: without a size-k independent set the whole cluster
  // stays in the coreset.
  return cluster;
}

Coreset coreset_from_clustering(const Dataset& d, const Matroid& m, int k, const Clustering& c) {
  Coreset t;
  t.tau = c.tau();
  t.radius = c.radius;
  t.per_cluster.assign(static_cast<size_t>(c.tau()), {});
  std::vector<IndexSet> clusters(static_cast<size_t>(c.tau()));
  for (int i = 0; i < d.size(); ++i)
    clusters[static_cast<size_t>(c.assign[static_cast<size_t>(i)])].push_back(i);
  for (int ci = 0; ci < c.tau(); ++ci) {
    if (clusters[static_cast<size_t>(ci)].empty()) continue;
    t.per_cluster[static_cast<size_t>(ci)] = extract(d, m, clusters[static_cast<size_t>(ci)], k);
    t.ids.insert(t.ids.end(), t.per_cluster[static_cast<size_t>(ci)].begin(),
                 t.per_cluster[static_cast<size_t>(ci)].end());
  }
  std::sort(t.ids.begin(), t.ids.end());
  return t;
}

Coreset detail::seq_coreset_impl(const Dataset& d, const Matroid& m, int k,
                                 const StopRule& stop) {
  if (d.size() < 2) throw InputError("seq_coreset: need at least 2 points");
  if (k < 1) throw InputError("seq_coreset: k must be positive");

  Clustering c;
  if (const auto* eps = std::get_if<EpsilonStop>(&stop)) {
    if (eps->epsilon <= 0.0 || eps->epsilon >= 1.0)
      throw InputError("seq_coreset: epsilon must lie in (0,1)");
    Clustering init = gmm_init(d);
    const double threshold = eps->epsilon * init.delta / (16.0 * k);
    c = std::move(init);
    while (c.radius > threshold && c.tau() < d.size()) gmm_iteration(d, c);
  } else {
    c = gmm_fixed_tau(d, std::get<TauStop>(stop).tau);
  }
  return coreset_from_clustering(d, m, k, c);
}

Coreset seq_coreset(const Dataset& d, const Matroid& m, int k, const StopRule& stop) {
  if (k > rank(m, d).rank) throw InfeasibleError("seq_coreset: k exceeds the matroid rank");
  return detail::seq_coreset_impl(d, m, k, stop);
}

}  // namespace divmax
