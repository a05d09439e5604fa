#pragma once

#include <Eigen/Core>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace divmax {

// Error taxonomy, mapped to CLI exit codes (1, 2, 3).
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct InfeasibleError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct CapabilityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class MetricKind { AngularCosine, Euclidean };

enum class DiversityKind { Sum, Star, Tree, Cycle, Bipartition };

const char* to_string(MetricKind m);
const char* to_string(DiversityKind k);
MetricKind metric_from_string(const std::string& s);
DiversityKind diversity_from_string(const std::string& s);

struct Point {
  std::string id;
  Eigen::VectorXd vec;
  std::vector<std::string> categories;
};

/// Sets of points are represented as sorted vectors of dataset indices.
using IndexSet = std::vector<int>;

/// Distance between two points. AngularCosine is arccos(clamped cosine
/// similarity)/pi, which is a metric on nonzero vectors with range [0,1].
double distance(const Point& a, const Point& b, MetricKind m);

/// Immutable indexed point collection with a fixed metric.
class Dataset {
 public:
  Dataset(std::vector<Point> points, MetricKind metric);

  int size() const { return static_cast<int>(points_.size()); }
  int dim() const { return points_.empty() ? 0 : static_cast<int>(points_[0].vec.size()); }
  MetricKind metric() const { return metric_; }
  const Point& operator[](int i) const { return points_[static_cast<size_t>(i)]; }
  const std::vector<Point>& points() const { return points_; }

  double dist(int a, int b) const {
    return distance(points_[static_cast<size_t>(a)], points_[static_cast<size_t>(b)], metric_);
  }

  /// Index of the point with the given id; throws InputError if unknown.
  int index_of(const std::string& id) const;

  /// Copy with points reordered by a seeded Fisher-Yates shuffle.
  Dataset permuted(std::uint64_t seed) const;

  /// Sub-dataset induced by the given indices (in the given order).
  Dataset subset(const IndexSet& ids) const;

  /// Largest value among points of categories-per-point.
  int max_categories_per_point() const;

 private:
  std::vector<Point> points_;
  MetricKind metric_;
  std::unordered_map<std::string, int> by_id_;
};

/// Exact diameter by quadratic scan; 0 for a singleton.
double diameter(const Dataset& d);

/// Throws InputError unless ids is a valid subset of dataset indices.
void check_ids(const Dataset& d, const IndexSet& ids);

}  // namespace divmax
