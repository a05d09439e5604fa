#pragma once

#include "divmax/coreset.hpp"
#include "divmax/matroid.hpp"

#include <optional>

namespace divmax {

/// Diameter-estimate mode of the one-pass construction: new center when
/// the nearest one is farther than 2*epsilon*R/(c*k), restructure when the
/// estimate R grows.
struct StreamEpsilonMode {
  double epsilon;
  int k;
  double c = 32.0;
};

/// Cluster-count-controlled variant: a point within 2R of a center is
/// handled there, otherwise it opens a new center; above tau centers the
/// set is restructured and R doubles.
struct StreamTauMode {
  int tau;
  int k;
};

using StreamMode = std::variant<StreamEpsilonMode, StreamTauMode>;

/// One-pass coreset builder. Holds copies of the retained points only
/// (centers and delegates); consumed non-delegate points are dropped.
class StreamState {
 public:
  StreamState(Matroid matroid, StreamMode mode, MetricKind metric,
              bool track_references = false);

  /// Consumes the next stream point. `index` is the point's position in
  /// the stream (used for provenance and reference tracking).
  void push(const Point& x, int index);

  /// Coreset of all retained delegates; requires >= 2 consumed points.
  /// Cluster order is center insertion order; ids are stream positions.
  Coreset finalize() const;

  int count() const { return count_; }
  double estimate() const { return radius_estimate_; }
  int num_centers() const { return static_cast<int>(centers_.size()); }
  int num_delegates() const;
  int max_delegate_set_size() const;

  /// Stream position of each center, in insertion order.
  std::vector<int> center_indices() const;

  /// Point ids of the retained delegates, one list per center.
  std::vector<std::vector<std::string>> delegate_ids() const;

  /// With track_references enabled: for every consumed point, the stream
  /// position of its current reference center (the chain of closest
  /// surviving centers). Diagnostics only; disabled by default to keep the
  /// working memory proportional to the retained points.
  const std::vector<int>& reference_centers() const;

 private:
  struct Held {
    Point p;
    int index;
  };
  struct Center {
    Held self;
    std::vector<Held> delegates;  // insertion order; contains self first
  };

  void handle(const Point& x, int index, Center& z);
  void restructure(double threshold);
  double nearest_center(const Point& x, int& pos) const;
  bool delegates_independent_k(const Center& z) const;
  void collapse_to_witness(Center& z);

  Matroid matroid_;
  StreamMode mode_;
  MetricKind metric_kind_;
  bool track_;
  int count_ = 0;
  double radius_estimate_ = 0.0;  // R
  std::optional<Held> first_;     // x1, kept for the diameter estimate
  std::optional<Held> pending_;   // first point before initialization
  std::vector<Center> centers_;
  std::vector<int> reference_;    // per consumed point, when track_
};

/// Drives a StreamState over a dataset in index order.
Coreset stream_coreset(const Dataset& d, const Matroid& m, const StreamMode& mode);

}  // namespace divmax
