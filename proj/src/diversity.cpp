#include "divmax/diversity.hpp"

#include <algorithm>
#include <bit>
#include <limits>

namespace divmax {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

Eigen::MatrixXd distance_matrix(const Dataset& d, const IndexSet& ids) {
  const int n = static_cast<int>(ids.size());
  Eigen::MatrixXd dm(n, n);
  for (int i = 0; i < n; ++i) {
    dm(i, i) = 0.0;
    for (int j = i + 1; j < n; ++j) {
      const double v = d.dist(ids[static_cast<size_t>(i)], ids[static_cast<size_t>(j)]);
      dm(i, j) = v;
      dm(j, i) = v;
    }
  }
  return dm;
}

double sum_of_pairs(const Eigen::MatrixXd& dm) {
  double total = 0.0;
  for (int i = 0; i < dm.rows(); ++i)
    for (int j = i + 1; j < dm.cols(); ++j) total += dm(i, j);
  return total;
}

double star_value(const Eigen::MatrixXd& dm) {
  double best = kInf;
  for (int c = 0; c < dm.rows(); ++c) best = std::min(best, dm.row(c).sum());
  return best;
}

double prim_mst(const Eigen::MatrixXd& dm) {
  const int n = static_cast<int>(dm.rows());
  std::vector<double> key(static_cast<size_t>(n), kInf);
  std::vector<char> inTree(static_cast<size_t>(n), 0);
  key[0] = 0.0;
  double total = 0.0;
  for (int it = 0; it < n; ++it) {
    int u = -1;
    for (int v = 0; v < n; ++v)
      if (!inTree[static_cast<size_t>(v)] && (u < 0 || key[static_cast<size_t>(v)] < key[static_cast<size_t>(u)]))
        u = v;
    inTree[static_cast<size_t>(u)] = 1;
    total += key[static_cast<size_t>(u)];
    for (int v = 0; v < n; ++v)
      if (!inTree[static_cast<size_t>(v)])
        key[static_cast<size_t>(v)] = std::min(key[static_cast<size_t>(v)], dm(u, v));
  }
  return total;
}

double held_karp(const Eigen::MatrixXd& dm) {
  const int n = static_cast<int>(dm.rows());
  // dp[mask][j]: shortest path starting at node 0, visiting exactly the
  // nodes of mask (0 always in mask), ending at j.
  const size_t nmask = size_t{1} << n;
  std::vector<double> dp(nmask * static_cast<size_t>(n), kInf);
  dp[(size_t{1} << 0) * static_cast<size_t>(n) + 0] = 0.0;
  for (size_t mask = 1; mask < nmask; ++mask) {
    if (!(mask & 1)) continue;
    for (int j = 0; j < n; ++j) {
      if (!(mask >> j & 1)) continue;
      const double cur = dp[mask * static_cast<size_t>(n) + static_cast<size_t>(j)];
      if (cur == kInf) continue;
      for (int t = 1; t < n; ++t) {
        if (mask >> t & 1) continue;
        const size_t next = mask | (size_t{1} << t);
        double& slot = dp[next * static_cast<size_t>(n) + static_cast<size_t>(t)];
        slot = std::min(slot, cur + dm(j, t));
      }
    }
  }
  double best = kInf;
  const size_t full = nmask - 1;
  for (int j = 1; j < n; ++j)
    best = std::min(best, dp[full * static_cast<size_t>(n) + static_cast<size_t>(j)] + dm(j, 0));
  return best;
}

// Minimum over floor(n/2)-subsets Q of the cut weight between Q and its
// complement. Enumerates subsets containing node 0 (the cut is symmetric
// for even n; for odd n both orientations of each split are visited).
double bipartition_value(const Eigen::MatrixXd& dm) {
  const int n = static_cast<int>(dm.rows());
  const int half = n / 2;
  double best = kInf;
  const unsigned full = (1u << n) - 1u;
  for (unsigned mask = 0; mask <= full; ++mask) {
    if (std::popcount(mask) != half) continue;
    double cut = 0.0;
    for (int i = 0; i < n; ++i) {
      if (!(mask >> i & 1)) continue;
      for (int j = 0; j < n; ++j)
        if (!(mask >> j & 1)) cut += dm(i, j);
    }
    best = std::min(best, cut);
  }
  return best;
}

}  // namespace

PairCount pair_count(DiversityKind kind, int k) {
  if (k < 2) throw InputError("pair_count: k must be at least 2");
  const long long kk = k;
  long long f = 0;
  switch (kind) {
    case DiversityKind::Sum: f = kk * (kk - 1) / 2; break;
    case DiversityKind::Star:
    case DiversityKind::Tree: f = kk - 1; break;
    case DiversityKind::Cycle: f = kk; break;
    case DiversityKind::Bipartition: f = (kk / 2) * ((kk + 1) / 2); break;
  }
  return PairCount{kind, k, f};
}

double mst_weight(const Dataset& d, const IndexSet& ids) {
  if (ids.size() < 2) throw InputError("mst_weight: need at least 2 points");
  check_ids(d, ids);
  return prim_mst(distance_matrix(d, ids));
}

double tsp_weight(const Dataset& d, const IndexSet& ids) {
  if (ids.size() < 3) throw InputError("tsp_weight: need at least 3 points");
  if (ids.size() > 18) throw CapabilityError("tsp_weight: Held-Karp limited to 18 points");
  check_ids(d, ids);
  return held_karp(distance_matrix(d, ids));
}

double evaluate(const Dataset& d, DiversityKind kind, const IndexSet& ids) {
  check_ids(d, ids);
  switch (kind) {
    case DiversityKind::Sum:
      if (ids.size() < 2) throw InputError("evaluate: sum needs at least 2 points");
      return sum_of_pairs(distance_matrix(d, ids));
    case DiversityKind::Star:
      if (ids.size() < 2) throw InputError("evaluate: star needs at least 2 points");
      return star_value(distance_matrix(d, ids));
    case DiversityKind::Tree:
      return mst_weight(d, ids);
    case DiversityKind::Cycle:
      return tsp_weight(d, ids);
    case DiversityKind::Bipartition:
      if (ids.size() < 2) throw InputError("evaluate: bipartition needs at least 2 points");
      if (ids.size() > 20)
        throw CapabilityError("evaluate: bipartition enumeration limited to 20 points");
      return bipartition_value(distance_matrix(d, ids));
  }
  return 0.0;
}

}  // namespace divmax
