#include "divmax/core.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

namespace divmax {

const char* to_string(MetricKind m) {
  switch (m) {
    case MetricKind::AngularCosine: return "angular-cosine";
    case MetricKind::Euclidean: return "euclidean";
  }
  return "?";
}

const char* to_string(DiversityKind k) {
  switch (k) {
    case DiversityKind::Sum: return "sum";
    case DiversityKind::Star: return "star";
    case DiversityKind::Tree: return "tree";
    case DiversityKind::Cycle: return "cycle";
    case DiversityKind::Bipartition: return "bipartition";
  }
  return "?";
}

MetricKind metric_from_string(const std::string& s) {
  if (s == "angular-cosine" || s == "cosine") return MetricKind::AngularCosine;
  if (s == "euclidean") return MetricKind::Euclidean;
  throw InputError("unknown metric: " + s);
}

DiversityKind diversity_from_string(const std::string& s) {
  if (s == "sum") return DiversityKind::Sum;
  if (s == "star") return DiversityKind::Star;
  if (s == "tree") return DiversityKind::Tree;
  if (s == "cycle") return DiversityKind::Cycle;
  if (s == "bipartition") return DiversityKind::Bipartition;
  throw InputError("unknown diversity kind: " + s);
}

double distance(const Point& a, const Point& b, MetricKind m) {
  if (a.vec.size() != b.vec.size())
    throw InputError("distance: dimensionality mismatch (" + a.id + " vs " + b.id + ")");
  switch (m) {
    case MetricKind::Euclidean:
      return (a.vec - b.vec).norm();
    case MetricKind::AngularCosine: {
      const double na = a.vec.norm();
      const double nb = b.vec.norm();
      if (na == 0.0 || nb == 0.0)
        throw InputError("distance: zero vector under angular-cosine metric");
      const double sim = std::clamp(a.vec.dot(b.vec) / (na * nb), -1.0, 1.0);
      return std::acos(sim) / std::numbers::pi;
    }
  }
  return 0.0;
}

Dataset::Dataset(std::vector<Point> points, MetricKind metric)
    : points_(std::move(points)), metric_(metric) {
  if (points_.empty()) throw InputError("dataset: must contain at least one point");
  const auto dim = points_[0].vec.size();
  for (size_t i = 0; i < points_.size(); ++i) {
    const Point& p = points_[i];
    if (p.vec.size() == 0) throw InputError("dataset: empty vector for point " + p.id);
    if (p.vec.size() != dim)
      throw InputError("dataset: dimension mismatch for point " + p.id);
    if (!p.vec.allFinite())
      throw InputError("dataset: non-finite coordinate for point " + p.id);
    if (p.categories.empty())
      throw InputError("dataset: point " + p.id + " has no categories");
    for (const std::string& c : p.categories)
      if (c.empty()) throw InputError("dataset: point " + p.id + " has an empty category");
    auto [it, fresh] = by_id_.emplace(p.id, static_cast<int>(i));
    if (!fresh) throw InputError("dataset: duplicate id " + p.id);
  }
}

int Dataset::index_of(const std::string& id) const {
  auto it = by_id_.find(id);
  if (it == by_id_.end()) throw InputError("unknown point id: " + id);
  return it->second;
}

Dataset Dataset::permuted(std::uint64_t seed) const {
  std::vector<Point> pts = points_;
  std::mt19937_64 rng(seed);
  // Fisher-Yates, explicit so the permutation is stable across platforms.
  for (size_t i = pts.size(); i > 1; --i) {
    const size_t j = static_cast<size_t>(rng() % i);
    std::swap(pts[i - 1], pts[j]);
  }
  return Dataset(std::move(pts), metric_);
}

Dataset Dataset::subset(const IndexSet& ids) const {
  std::vector<Point> pts;
  pts.reserve(ids.size());
  for (int i : ids) pts.push_back(points_[static_cast<size_t>(i)]);
  return Dataset(std::move(pts), metric_);
}

int Dataset::max_categories_per_point() const {
  size_t best = 0;
  for (const Point& p : points_) best = std::max(best, p.categories.size());
  return static_cast<int>(best);
}

double diameter(const Dataset& d) {
  double best = 0.0;
  for (int i = 0; i < d.size(); ++i)
    for (int j = i + 1; j < d.size(); ++j) best = std::max(best, d.dist(i, j));
  return best;
}

void check_ids(const Dataset& d, const IndexSet& ids) {
  std::vector<bool> seen(static_cast<size_t>(d.size()), false);
  for (int i : ids) {
    if (i < 0 || i >= d.size()) throw InputError("point index out of range: " + std::to_string(i));
    if (seen[static_cast<size_t>(i)])
      throw InputError("duplicate point index: " + std::to_string(i));
    seen[static_cast<size_t>(i)] = true;
  }
}

}  // namespace divmax
