#include "divmax/clustering.hpp"

#include <algorithm>
#include <limits>

namespace divmax {

namespace {

void add_center(const Dataset& d, Clustering& c, int center) {
  const int ci = c.tau();
  c.centers.push_back(center);
  double radius = 0.0;
  for (int i = 0; i < d.size(); ++i) {
    const double dist = d.dist(i, center);
    if (dist < c.dist_to_center[static_cast<size_t>(i)]) {
      c.dist_to_center[static_cast<size_t>(i)] = dist;
      c.assign[static_cast<size_t>(i)] = ci;
    }
    radius = std::max(radius, c.dist_to_center[static_cast<size_t>(i)]);
  }
  c.radius = radius;
}

}  // namespace

Clustering gmm_init(const Dataset& d) {
  if (d.size() < 2) throw InputError("gmm_init: need at least 2 points");
  Clustering c;
  c.assign.assign(static_cast<size_t>(d.size()), 0);
  c.dist_to_center.assign(static_cast<size_t>(d.size()),
                          std::numeric_limits<double>::infinity());
  add_center(d, c, 0);
  int farthest = 0;
  for (int i = 1; i < d.size(); ++i)
    if (c.dist_to_center[static_cast<size_t>(i)] >
        c.dist_to_center[static_cast<size_t>(farthest)])
      farthest = i;
  c.delta = c.dist_to_center[static_cast<size_t>(farthest)];
  add_center(d, c, farthest);
  return c;
}

void gmm_iteration(const Dataset& d, Clustering& c) {
  if (c.tau() >= d.size())
    throw CapabilityError("gmm_iteration: all points are already centers");
  int next = 0;
  for (int i = 1; i < d.size(); ++i)
    if (c.dist_to_center[static_cast<size_t>(i)] >
        c.dist_to_center[static_cast<size_t>(next)])
      next = i;
  add_center(d, c, next);
}

Clustering gmm_until(const Dataset& d,
                     const std::function<bool(const Clustering&, int)>& stop) {
  Clustering c = gmm_init(d);
  int iteration = 2;
  while (!stop(c, iteration)) {
    gmm_iteration(d, c);
    ++iteration;
  }
  return c;
}

Clustering gmm_fixed_tau(const Dataset& d, int tau) {
  const int target = std::clamp(tau, 2, d.size());
  return gmm_until(d, [target](const Clustering& c, int) { return c.tau() >= target; });
}

Clustering gmm_radius_threshold(const Dataset& d, double threshold) {
  return gmm_until(d, [&d, threshold](const Clustering& c, int) {
    return c.radius <= threshold || c.tau() >= d.size();
  });
}

}  // namespace divmax
