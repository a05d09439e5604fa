#include "divmax/matroid.hpp"

#include <algorithm>

namespace divmax {

namespace {

bool partition_independent(const PartitionMatroid& pm, const std::vector<const Point*>& pts) {
  std::map<std::string, int> counts;
  for (const Point* p : pts) {
    for (const std::string& c : p->categories) {
      auto it = pm.quotas.find(c);
      if (it == pm.quotas.end()) continue;
      if (++counts[c] > it->second) return false;
    }
  }
  return true;
}

// Kuhn augmenting-path matching on the pts x categories membership graph.
// Instances are tiny (|pts| <= k), so O(V*E) is fine.
bool transversal_independent(const TransversalMatroid& tm, const std::vector<const Point*>& pts) {
  const int n = static_cast<int>(pts.size());
  std::map<std::string, int> catId;
  std::vector<std::vector<int>> adj(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    for (const std::string& c : pts[static_cast<size_t>(i)]->categories) {
      if (!tm.categories.contains(c)) continue;
      auto [it, _] = catId.emplace(c, static_cast<int>(catId.size()));
      adj[static_cast<size_t>(i)].push_back(it->second);
    }
  }
  std::vector<int> matchCat(catId.size(), -1);
  std::vector<char> seen;
  std::function<bool(int)> tryMatch = [&](int u) {
    for (int c : adj[static_cast<size_t>(u)]) {
      if (seen[static_cast<size_t>(c)]) continue;
      seen[static_cast<size_t>(c)] = 1;
      if (matchCat[static_cast<size_t>(c)] < 0 || tryMatch(matchCat[static_cast<size_t>(c)])) {
        matchCat[static_cast<size_t>(c)] = u;
        return true;
      }
    }
    return false;
  };
  for (int u = 0; u < n; ++u) {
    seen.assign(catId.size(), 0);
    if (!tryMatch(u)) return false;  // u cannot be saturated
  }
  return true;
}

std::vector<const Point*> to_pts(const Dataset& d, const IndexSet& ids) {
  std::vector<const Point*> pts;
  pts.reserve(ids.size());
  for (int i : ids) pts.push_back(&d[i]);
  return pts;
}

}  // namespace

void validate(const Matroid& m, const Dataset& d) {
  if (m.is_partition()) {
    const auto& quotas = m.as_partition().quotas;
    for (const Point& p : d.points()) {
      int hits = 0;
      for (const std::string& c : p.categories)
        if (quotas.contains(c)) ++hits;
      if (hits != 1)
        throw InputError("partition matroid: point " + p.id + " has " + std::to_string(hits) +
                         " quota categories (expected exactly 1)");
    }
  } else if (m.is_transversal()) {
    const auto& cats = m.as_transversal().categories;
    for (const Point& p : d.points()) {
      bool hit = std::any_of(p.categories.begin(), p.categories.end(),
                             [&](const std::string& c) { return cats.contains(c); });
      if (!hit) throw InputError("transversal matroid: point " + p.id + " has no active category");
    }
  }
}

bool is_independent_pts(const Matroid& m, const std::vector<const Point*>& pts) {
  if (m.is_partition()) return partition_independent(m.as_partition(), pts);
  if (m.is_transversal()) return transversal_independent(m.as_transversal(), pts);
  return m.as_custom().oracle(pts);
}

bool is_independent(const Matroid& m, const Dataset& d, const IndexSet& ids) {
  check_ids(d, ids);
  return is_independent_pts(m, to_pts(d, ids));
}

RankInfo rank(const Matroid& m, const Dataset& d) {
  if (m.is_partition()) {
    // rank = sum over categories of min(quota, members); counting beats
    // the generic greedy by a quadratic factor on large datasets
    const auto& quotas = m.as_partition().quotas;
    std::map<std::string, int> counts;
    for (const Point& p : d.points())
      for (const std::string& c : p.categories)
        if (quotas.contains(c)) ++counts[c];
    int r = 0;
    for (const auto& [cat, n] : counts) r += std::min(n, quotas.at(cat));
    return RankInfo{r};
  }
  if (m.is_transversal()) {
    // one incremental maximum matching over the whole membership graph
    const auto& active = m.as_transversal().categories;
    std::map<std::string, int> catId;
    std::vector<std::vector<int>> adj(static_cast<size_t>(d.size()));
    for (int i = 0; i < d.size(); ++i)
      for (const std::string& c : d[i].categories) {
        if (!active.contains(c)) continue;
        auto [it, _] = catId.emplace(c, static_cast<int>(catId.size()));
        adj[static_cast<size_t>(i)].push_back(it->second);
      }
    std::vector<int> matchCat(catId.size(), -1);
    std::vector<char> seen;
    std::function<bool(int)> tryMatch = [&](int u) {
      for (int c : adj[static_cast<size_t>(u)]) {
        if (seen[static_cast<size_t>(c)]) continue;
        seen[static_cast<size_t>(c)] = 1;
        if (matchCat[static_cast<size_t>(c)] < 0 || tryMatch(matchCat[static_cast<size_t>(c)])) {
          matchCat[static_cast<size_t>(c)] = u;
          return true;
        }
      }
      return false;
    };
    int r = 0;
    for (int u = 0; u < d.size(); ++u) {
      if (r == static_cast<int>(catId.size())) break;
      seen.assign(catId.size(), 0);
      if (tryMatch(u)) ++r;
    }
    return RankInfo{r};
  }
  IndexSet all(static_cast<size_t>(d.size()));
  for (int i = 0; i < d.size(); ++i) all[static_cast<size_t>(i)] = i;
  IndexSet maximal = maximal_independent_subset(m, d, all, d.size());
  return RankInfo{static_cast<int>(maximal.size())};
}

IndexSet maximal_independent_subset(const Matroid& m, const Dataset& d, const IndexSet& pool,
                                    int cap) {
  check_ids(d, pool);
  IndexSet result;
  std::vector<const Point*> pts;
  for (int i : pool) {
    if (static_cast<int>(result.size()) >= cap) break;
    pts.push_back(&d[i]);
    if (is_independent_pts(m, pts)) {
      result.push_back(i);
    } else {
      pts.pop_back();
    }
  }
  return result;
}

IndexSet augment(const Matroid& m, const Dataset& d, const IndexSet& base, const IndexSet& donor,
                 int target) {
  IndexSet result = base;
  std::vector<const Point*> pts = to_pts(d, result);
  while (static_cast<int>(result.size()) < target) {
    bool found = false;
    for (int x : donor) {
      if (std::find(result.begin(), result.end(), x) != result.end()) continue;
      pts.push_back(&d[x]);
      if (is_independent_pts(m, pts)) {
        result.push_back(x);
        found = true;
        break;
      }
      pts.pop_back();
    }
    if (!found)
      throw std::logic_error(
          "augment: no augmenting element despite preconditions (broken custom oracle?)");
  }
  std::sort(result.begin(), result.end());
  return result;
}

}  // namespace divmax
