#include "divmax/coreset_parallel.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <thread>

namespace divmax {

namespace {

// Contiguous shard boundaries; first (n mod ell) shards get one extra.
std::vector<std::pair<int, int>> shard_ranges(int n, int ell) {
  std::vector<std::pair<int, int>> ranges;
  const int base = n / ell;
  const int extra = n % ell;
  int start = 0;
  for (int s = 0; s < ell; ++s) {
    const int len = base + (s < extra ? 1 : 0);
    ranges.emplace_back(start, start + len);
    start += len;
  }
  return ranges;
}

StopRule shard_stop(const StopRule& stop, int ell, int shard) {
  if (const auto* tau = std::get_if<TauStop>(&stop)) {
    const int base = tau->tau / ell;
    const int extra = tau->tau % ell;
    return TauStop{std::max(2, base + (shard < extra ? 1 : 0))};
  }
  return stop;  // epsilon applies per shard
}

}  // namespace

int default_parallelism(int n, int k) {
  const int workers = std::max(1u, std::thread::hardware_concurrency());
  const int bySize = static_cast<int>(std::sqrt(static_cast<double>(n) / std::max(1, k)));
  return std::max(1, std::min(bySize, workers));
}

Coreset parallel_coreset(const Dataset& d, const Matroid& m, int k, int ell,
                         const StopRule& stop) {
  if (ell < 1) throw InputError("parallel_coreset: ell must be positive");
  if (ell > d.size()) throw InputError("parallel_coreset: ell exceeds the dataset size");

  const auto ranges = shard_ranges(d.size(), ell);
  std::vector<std::future<Coreset>> jobs;
  jobs.reserve(static_cast<size_t>(ell));
  for (int s = 0; s < ell; ++s) {
    jobs.push_back(std::async(std::launch::async, [&, s]() {
      const auto [lo, hi] = ranges[static_cast<size_t>(s)];
      IndexSet ids(static_cast<size_t>(hi - lo));
      for (int i = lo; i < hi; ++i) ids[static_cast<size_t>(i - lo)] = i;
      Dataset shard = d.subset(ids);
      Coreset local = detail::seq_coreset_impl(shard, m, k, shard_stop(stop, ell, s));
      // Map shard-local indices back to dataset indices.
      for (int& i : local.ids) i += lo;
      for (IndexSet& cluster : local.per_cluster)
        for (int& i : cluster) i += lo;
      return local;
    }));
  }

  Coreset out;
  for (int s = 0; s < ell; ++s) {
    Coreset local = jobs[static_cast<size_t>(s)].get();
    out.tau += local.tau;
    out.radius = std::max(out.radius, local.radius);
    out.ids.insert(out.ids.end(), local.ids.begin(), local.ids.end());
    for (IndexSet& cluster : local.per_cluster) {
      out.per_cluster.push_back(std::move(cluster));
      out.shard_of_cluster.push_back(s);
    }
  }
  std::sort(out.ids.begin(), out.ids.end());
  return out;
}

Coreset reduce_coreset(const Coreset& t, const Dataset& d, const Matroid& m, int k,
                       const StopRule& stop) {
  if (t.ids.empty()) throw InputError("reduce_coreset: empty coreset");
  Dataset sub = d.subset(t.ids);
  Coreset reduced = detail::seq_coreset_impl(sub, m, k, stop);
  const IndexSet& back = t.ids;  // sub index -> original index
  for (int& i : reduced.ids) i = back[static_cast<size_t>(i)];
  for (IndexSet& cluster : reduced.per_cluster) {
    for (int& i : cluster) i = back[static_cast<size_t>(i)];
    std::sort(cluster.begin(), cluster.end());
  }
  std::sort(reduced.ids.begin(), reduced.ids.end());
  return reduced;
}

}  // namespace divmax
