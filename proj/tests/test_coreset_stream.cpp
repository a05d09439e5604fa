#include <doctest.h>

#include "divmax/coreset_stream.hpp"
#include "divmax/oracle.hpp"

#include <random>
#include <set>

using namespace divmax;

namespace {

Dataset random_instance(std::mt19937_64& rng, int n, int cats, double scale = 10.0) {
  std::uniform_real_distribution<double> u(0.0, scale);
  std::vector<Point> pts;
  for (int i = 0; i < n; ++i) {
    Eigen::VectorXd v(2);
    v << u(rng), u(rng);
    pts.push_back(Point{"p" + std::to_string(i), std::move(v),
                        {"c" + std::to_string(rng() % static_cast<unsigned>(cats))}});
  }
  return Dataset(std::move(pts), MetricKind::Euclidean);
}

Matroid uniform_partition(int cats, int quota) {
  std::map<std::string, int> q;
  for (int c = 0; c < cats; ++c) q["c" + std::to_string(c)] = quota;
  return Matroid::partition(q);
}

}  // namespace

TEST_CASE("epsilon mode maintains the streaming invariants on every prefix") {
  std::mt19937_64 rng(3);
  const double eps = 0.5;
  const int k = 3;
  const double c = 32.0;
  Dataset d = random_instance(rng, 150, 3);
  Matroid m = uniform_partition(3, 2);

  StreamState st(m, StreamEpsilonMode{eps, k}, d.metric(), /*track_references=*/true);
  double prefixDiameter = 0.0;
  for (int i = 0; i < d.size(); ++i) {
    for (int j = 0; j < i; ++j) prefixDiameter = std::max(prefixDiameter, d.dist(i, j));
    st.push(d[i], i);
    if (i < 1) continue;

    const double R = st.estimate();
    CHECK(R >= prefixDiameter / 4.0 - 1e-12);
    CHECK(R <= prefixDiameter + 1e-12);

    const double sep = eps * R / (c * k);
    std::vector<int> centers = st.center_indices();
    for (size_t a = 0; a < centers.size(); ++a)
      for (size_t b = a + 1; b < centers.size(); ++b)
        CHECK(d.dist(centers[a], centers[b]) > sep - 1e-12);

    const std::vector<int>& ref = st.reference_centers();
    for (int p = 0; p <= i; ++p)
      CHECK(d.dist(p, ref[static_cast<size_t>(p)]) <= 2.0 * sep + 1e-12);
  }
}

TEST_CASE("partition delegate sets stay independent and small") {
  std::mt19937_64 rng(7);
  const int k = 3;
  Dataset d = random_instance(rng, 200, 4);
  Matroid m = uniform_partition(4, 1);  // rank 4

  StreamState st(m, StreamEpsilonMode{0.5, k}, d.metric());
  for (int i = 0; i < d.size(); ++i) st.push(d[i], i);
  CHECK(st.max_delegate_set_size() <= k);

  Coreset t = st.finalize();
  for (const IndexSet& cluster : t.per_cluster)
    CHECK(is_independent(m, d, cluster));
}

TEST_CASE("working memory is bounded by the retained points") {
  // 400 points on a 4x5 grid: at most one center per occupied location
  std::mt19937_64 rng(11);
  const int k = 2;
  std::vector<Point> pts;
  for (int i = 0; i < 400; ++i) {
    Eigen::VectorXd v(2);
    v << double(rng() % 4), double(rng() % 5);
    pts.push_back(Point{"p" + std::to_string(i), std::move(v),
                        {"c" + std::to_string(rng() % 2)}});
  }
  Dataset d(std::move(pts), MetricKind::Euclidean);
  Matroid m = uniform_partition(2, 1);
  StreamState st(m, StreamEpsilonMode{0.5, k}, d.metric());
  for (int i = 0; i < d.size(); ++i) st.push(d[i], i);
  CHECK(st.num_centers() <= 20);
  CHECK(st.num_delegates() <= st.num_centers() * k);
}

TEST_CASE("feasibility is preserved") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 6; ++trial) {
    const int k = 3;
    Dataset d = random_instance(rng, 60, 3);
    Matroid m = uniform_partition(3, 1);  // rank 3
    Coreset t = stream_coreset(d, m, StreamEpsilonMode{0.5, k});
    CHECK(maximal_independent_subset(m, d, t.ids, k).size() == k);
  }
}

TEST_CASE("stream coreset preserves the optimum up to the accuracy target") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 5; ++trial) {
    const int k = 3;
    const double eps = 0.5;
    Dataset d = random_instance(rng, 60, 3);
    Matroid m = uniform_partition(3, 2);
    Coreset t = stream_coreset(d, m, StreamEpsilonMode{eps, k});
    const double full = oracle::brute_force_optimum(d, m, k, DiversityKind::Sum).value;
    Dataset sub = d.subset(t.ids);
    const double onCoreset =
        oracle::brute_force_optimum(sub, m, k, DiversityKind::Sum).value;
    CHECK(onCoreset >= (1.0 - eps) * full - 1e-9);
    CHECK(onCoreset <= full + 1e-9);
  }
}

TEST_CASE("tau mode caps the number of centers at every prefix") {
  std::mt19937_64 rng(19);
  const int tau = 8;
  Dataset d = random_instance(rng, 300, 3);
  Matroid m = uniform_partition(3, 2);
  StreamState st(m, StreamTauMode{tau, 3}, d.metric());
  for (int i = 0; i < d.size(); ++i) {
    st.push(d[i], i);
    CHECK(st.num_centers() <= std::max(tau, 2));
  }
  Coreset t = st.finalize();
  CHECK(t.tau <= tau);
  CHECK(!t.ids.empty());
}

TEST_CASE("tau mode copes with coincident leading points") {
  std::vector<Point> pts;
  auto mk = [&](double x) {
    Eigen::VectorXd v(1);
    v << x;
    pts.push_back(Point{"p" + std::to_string(pts.size()), std::move(v), {"a"}});
  };
  for (int i = 0; i < 5; ++i) mk(0.0);
  for (int i = 0; i < 6; ++i) mk(double(i));
  Dataset d(std::move(pts), MetricKind::Euclidean);
  Matroid m = uniform_partition(1, 2);
  StreamState st(m, StreamTauMode{2, 2}, d.metric());
  for (int i = 0; i < d.size(); ++i) st.push(d[i], i);
  CHECK(st.num_centers() <= 2);
  CHECK(st.count() == d.size());
}

TEST_CASE("finalize needs two points and is deterministic") {
  Matroid m = uniform_partition(1, 2);
  Eigen::VectorXd v(1);
  v << 0.0;
  Point p{"only", v, {"c0"}};
  StreamState st(m, StreamEpsilonMode{0.5, 2}, MetricKind::Euclidean);
  st.push(p, 0);
  CHECK_THROWS_AS(st.finalize(), InputError);

  std::mt19937_64 rng(23);
  Dataset d = random_instance(rng, 80, 2);
  Matroid m2 = uniform_partition(2, 2);
  Coreset a = stream_coreset(d, m2, StreamTauMode{6, 3});
  Coreset b = stream_coreset(d, m2, StreamTauMode{6, 3});
  CHECK(a.ids == b.ids);
  CHECK(a.per_cluster == b.per_cluster);
  CHECK(a.radius == b.radius);
}

TEST_CASE("reference tracking is opt-in") {
  Matroid m = uniform_partition(1, 1);
  StreamState st(m, StreamEpsilonMode{0.5, 1}, MetricKind::Euclidean);
  CHECK_THROWS_AS(st.reference_centers(), std::logic_error);
}

TEST_CASE("transversal handling keeps only category-relevant delegates") {
  std::mt19937_64 rng(29);
  const int k = 2;
  Dataset d = random_instance(rng, 150, 3);
  Matroid m = Matroid::transversal({"c0", "c1", "c2"});
  StreamState st(m, StreamEpsilonMode{0.5, k}, d.metric());
  for (int i = 0; i < d.size(); ++i) st.push(d[i], i);
  // per category at most k members are ever needed before a witness forms
  CHECK(st.max_delegate_set_size() <= 3 * k + 1);
  Coreset t = st.finalize();
  CHECK(maximal_independent_subset(m, d, t.ids, k).size() == k);
}
