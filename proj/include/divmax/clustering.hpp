#pragma once

#include "divmax/core.hpp"

#include <functional>

namespace divmax {

/// Farthest-first (GMM) clustering state. Every point is assigned to its
/// nearest center (ties to the lowest center index); the per-point
/// distance cache makes each iteration O(n).
struct Clustering {
  std::vector<int> centers;           // dataset indices, insertion order
  std::vector<int> assign;            // per point: position in centers
  std::vector<double> dist_to_center; // per point: distance to its center
  double radius = 0.0;                // max of dist_to_center
  double delta = 0.0;                 // d(z1, z2); in [diameter/2, diameter]

  int tau() const { return static_cast<int>(centers.size()); }
};

/// First two GMM centers: z1 = first dataset point, z2 = farthest from z1.
Clustering gmm_init(const Dataset& d);

/// Adds the point farthest from its current center (ties to the lowest
/// dataset index) and reassigns. Radius is non-increasing.
void gmm_iteration(const Dataset& d, Clustering& c);

/// Runs gmm_iteration until stop(clustering, iteration) is true; stop is
/// evaluated first on the 2-center initialization (iteration = 2).
Clustering gmm_until(const Dataset& d,
                     const std::function<bool(const Clustering&, int)>& stop);

/// Exactly tau centers (clamped to [2, n]).
Clustering gmm_fixed_tau(const Dataset& d, int tau);

/// Stops as soon as the radius drops to the threshold.
Clustering gmm_radius_threshold(const Dataset& d, double threshold);

}  // namespace divmax
