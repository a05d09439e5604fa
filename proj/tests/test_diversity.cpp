#include <doctest.h>

#include "divmax/diversity.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

using namespace divmax;

namespace {

Dataset from_coords(const std::vector<std::vector<double>>& coords) {
  std::vector<Point> pts;
  for (size_t i = 0; i < coords.size(); ++i) {
    Eigen::VectorXd v(static_cast<int>(coords[i].size()));
    for (size_t j = 0; j < coords[i].size(); ++j) v[static_cast<int>(j)] = coords[i][j];
    pts.push_back(Point{"p" + std::to_string(i), std::move(v), {"a"}});
  }
  return Dataset(std::move(pts), MetricKind::Euclidean);
}

Dataset random_points(std::mt19937_64& rng, int n, int dim = 2) {
  std::uniform_real_distribution<double> u(0.0, 10.0);
  std::vector<std::vector<double>> coords(static_cast<size_t>(n),
                                          std::vector<double>(static_cast<size_t>(dim)));
  for (auto& row : coords)
    for (double& x : row) x = u(rng);
  return from_coords(coords);
}

IndexSet iota_ids(int n) {
  IndexSet ids(static_cast<size_t>(n));
  std::iota(ids.begin(), ids.end(), 0);
  return ids;
}

// Minimum spanning tree weight by Prufer-sequence enumeration of all
// labelled trees (n^(n-2) of them); independent of the Prim implementation.
double mst_by_prufer(const Dataset& d, const IndexSet& ids) {
  const int n = static_cast<int>(ids.size());
  if (n == 2) return d.dist(ids[0], ids[1]);
  std::vector<int> seq(static_cast<size_t>(n - 2), 0);
  double best = std::numeric_limits<double>::infinity();
  while (true) {
    // decode the sequence into tree edges
    std::vector<int> deg(static_cast<size_t>(n), 1);
    for (int s : seq) ++deg[static_cast<size_t>(s)];
    double w = 0.0;
    std::vector<bool> used(static_cast<size_t>(n), false);
    for (int s : seq) {
      int leaf = -1;
      for (int v = 0; v < n; ++v)
        if (deg[static_cast<size_t>(v)] == 1 && !used[static_cast<size_t>(v)]) {
          leaf = v;
          break;
        }
      used[static_cast<size_t>(leaf)] = true;
      --deg[static_cast<size_t>(s)];
      w += d.dist(ids[static_cast<size_t>(leaf)], ids[static_cast<size_t>(s)]);
    }
    int u = -1, v = -1;
    for (int x = 0; x < n; ++x)
      if (!used[static_cast<size_t>(x)] && deg[static_cast<size_t>(x)] == 1) (u < 0 ? u : v) = x;
    w += d.dist(ids[static_cast<size_t>(u)], ids[static_cast<size_t>(v)]);
    best = std::min(best, w);
    // next sequence
    int pos = n - 3;
    while (pos >= 0 && seq[static_cast<size_t>(pos)] == n - 1) seq[static_cast<size_t>(pos--)] = 0;
    if (pos < 0) break;
    ++seq[static_cast<size_t>(pos)];
  }
  return best;
}

// Minimum tour weight by enumerating all (n-1)! orderings with p0 fixed.
double tsp_by_permutations(const Dataset& d, const IndexSet& ids) {
  std::vector<int> rest(ids.begin() + 1, ids.end());
  std::sort(rest.begin(), rest.end());
  double best = std::numeric_limits<double>::infinity();
  do {
    double w = d.dist(ids[0], rest.front()) + d.dist(rest.back(), ids[0]);
    for (size_t i = 0; i + 1 < rest.size(); ++i) w += d.dist(rest[i], rest[i + 1]);
    best = std::min(best, w);
  } while (std::next_permutation(rest.begin(), rest.end()));
  return best;
}

double star_by_definition(const Dataset& d, const IndexSet& ids) {
  double best = std::numeric_limits<double>::infinity();
  for (int c : ids) {
    double s = 0.0;
    for (int x : ids) s += d.dist(c, x);
    best = std::min(best, s);
  }
  return best;
}

double bipartition_by_splits(const Dataset& d, const IndexSet& ids) {
  const int n = static_cast<int>(ids.size());
  double best = std::numeric_limits<double>::infinity();
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    int c = 0;
    for (int i = 0; i < n; ++i) c += (mask >> i) & 1;
    if (c != n / 2) continue;
    double cut = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (((mask >> i) & 1) && !((mask >> j) & 1)) cut += d.dist(ids[static_cast<size_t>(i)], ids[static_cast<size_t>(j)]);
    best = std::min(best, cut);
  }
  return best;
}

}  // namespace

TEST_CASE("pair counts") {
  CHECK(pair_count(DiversityKind::Sum, 4).f == 6);
  CHECK(pair_count(DiversityKind::Sum, 2).f == 1);
  CHECK(pair_count(DiversityKind::Star, 5).f == 4);
  CHECK(pair_count(DiversityKind::Tree, 5).f == 4);
  CHECK(pair_count(DiversityKind::Cycle, 4).f == 4);
  CHECK(pair_count(DiversityKind::Bipartition, 4).f == 4);
  CHECK(pair_count(DiversityKind::Bipartition, 5).f == 6);
  CHECK_THROWS_AS(pair_count(DiversityKind::Sum, 1), InputError);
}

TEST_CASE("equilateral unit triangle") {
  const double h = std::sqrt(3.0) / 2.0;
  Dataset d = from_coords({{0, 0}, {1, 0}, {0.5, h}});
  IndexSet ids = iota_ids(3);
  CHECK(evaluate(d, DiversityKind::Sum, ids) == doctest::Approx(3.0));
  CHECK(evaluate(d, DiversityKind::Star, ids) == doctest::Approx(2.0));
  CHECK(evaluate(d, DiversityKind::Tree, ids) == doctest::Approx(2.0));
  CHECK(evaluate(d, DiversityKind::Cycle, ids) == doctest::Approx(3.0));
  CHECK(evaluate(d, DiversityKind::Bipartition, ids) == doctest::Approx(2.0));
}

TEST_CASE("unit square") {
  Dataset d = from_coords({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
  IndexSet ids = iota_ids(4);
  const double r2 = std::sqrt(2.0);
  CHECK(evaluate(d, DiversityKind::Sum, ids) == doctest::Approx(4.0 + 2.0 * r2));
  CHECK(evaluate(d, DiversityKind::Star, ids) == doctest::Approx(2.0 + r2));
  CHECK(evaluate(d, DiversityKind::Tree, ids) == doctest::Approx(3.0));
  CHECK(evaluate(d, DiversityKind::Cycle, ids) == doctest::Approx(4.0));
  CHECK(evaluate(d, DiversityKind::Bipartition, ids) == doctest::Approx(4.0));
}

TEST_CASE("objectives agree with enumeration on random instances") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 25; ++trial) {
    const int n = 4 + static_cast<int>(rng() % 4);  // 4..7
    Dataset d = random_points(rng, n);
    IndexSet ids = iota_ids(n);
    CHECK(evaluate(d, DiversityKind::Star, ids) ==
          doctest::Approx(star_by_definition(d, ids)));
    CHECK(evaluate(d, DiversityKind::Tree, ids) == doctest::Approx(mst_by_prufer(d, ids)));
    CHECK(evaluate(d, DiversityKind::Cycle, ids) ==
          doctest::Approx(tsp_by_permutations(d, ids)));
    CHECK(evaluate(d, DiversityKind::Bipartition, ids) ==
          doctest::Approx(bipartition_by_splits(d, ids)));
  }
}

TEST_CASE("mst is a lower bound for tsp") {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 20; ++trial) {
    Dataset d = random_points(rng, 8);
    IndexSet ids = iota_ids(8);
    CHECK(mst_weight(d, ids) <= tsp_weight(d, ids) + 1e-12);
  }
}

TEST_CASE("size caps and minimums") {
  std::mt19937_64 rng(47);
  Dataset d = random_points(rng, 22);
  CHECK_THROWS_AS(evaluate(d, DiversityKind::Cycle, iota_ids(19)), CapabilityError);
  CHECK_THROWS_AS(evaluate(d, DiversityKind::Bipartition, iota_ids(21)), CapabilityError);
  CHECK_THROWS_AS(evaluate(d, DiversityKind::Cycle, {0, 1}), InputError);
  CHECK_THROWS_AS(evaluate(d, DiversityKind::Sum, {0}), InputError);
  CHECK_NOTHROW(evaluate(d, DiversityKind::Cycle, iota_ids(3)));
}

TEST_CASE("evaluate rejects bad ids") {
  Dataset d = from_coords({{0, 0}, {1, 0}});
  CHECK_THROWS_AS(evaluate(d, DiversityKind::Sum, {0, 5}), InputError);
}
