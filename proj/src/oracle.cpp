#include "divmax/oracle.hpp"

#include <algorithm>

namespace divmax {
namespace oracle {

namespace {

unsigned long long choose_capped(int n, int k, unsigned long long cap) {
  if (k < 0 || k > n) return 0;
  unsigned long long c = 1;
  for (int i = 1; i <= k; ++i) {
    if (c > cap) return cap + 1;
    c = c * static_cast<unsigned long long>(n - k + i) / static_cast<unsigned long long>(i);
  }
  return c;
}

// Advances a combination (indices 0..n-1) to its lexicographic successor.
bool next_combination(std::vector<int>& comb, int n) {
  const int k = static_cast<int>(comb.size());
  for (int i = k - 1; i >= 0; --i) {
    if (comb[static_cast<size_t>(i)] < n - k + i) {
      ++comb[static_cast<size_t>(i)];
      for (int j = i + 1; j < k; ++j)
        comb[static_cast<size_t>(j)] = comb[static_cast<size_t>(j - 1)] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

Solution brute_force_optimum(const Dataset& d, const Matroid& m, int k, DiversityKind kind,
                             unsigned long long budget) {
  if (k < 1 || k > d.size()) throw InputError("brute_force_optimum: invalid k");
  if (choose_capped(d.size(), k, budget) > budget)
    throw CapabilityError("brute_force_optimum: C(n,k) exceeds the budget");

  std::vector<int> comb(static_cast<size_t>(k));
  for (int i = 0; i < k; ++i) comb[static_cast<size_t>(i)] = i;

  Solution best;
  best.k = k;
  best.kind = kind;
  bool found = false;
  do {
    if (!is_independent(m, d, comb)) continue;
    const double v = evaluate(d, kind, comb);
    if (!found || v > best.value) {
      found = true;
      best.ids = comb;
      best.value = v;
    }
  } while (next_combination(comb, d.size()));

  if (!found)
    throw InfeasibleError("brute_force_optimum: no independent set of size " +
                          std::to_string(k));
  return best;
}

double average_farness(const Dataset& d, const Matroid& m, int k, DiversityKind kind,
                       unsigned long long budget) {
  const Solution opt = brute_force_optimum(d, m, k, kind, budget);
  return opt.value / static_cast<double>(pair_count(kind, k).f);
}

double brute_force_optimal_radius(const Dataset& d, int tau, unsigned long long budget) {
  if (tau < 1 || tau > d.size()) throw InputError("brute_force_optimal_radius: invalid tau");
  if (choose_capped(d.size(), tau, budget) > budget)
    throw CapabilityError("brute_force_optimal_radius: C(n,tau) exceeds the budget");

  std::vector<int> comb(static_cast<size_t>(tau));
  for (int i = 0; i < tau; ++i) comb[static_cast<size_t>(i)] = i;
  double best = std::numeric_limits<double>::infinity();
  do {
    double radius = 0.0;
    for (int i = 0; i < d.size() && radius < best; ++i) {
      double nearest = std::numeric_limits<double>::infinity();
      for (int z : comb) nearest = std::min(nearest, d.dist(i, z));
      radius = std::max(radius, nearest);
    }
    best = std::min(best, radius);
  } while (next_combination(comb, d.size()));
  return best;
}

bool transversal_independent_bruteforce(const TransversalMatroid& tm, const Dataset& d,
                                        const IndexSet& ids) {
  check_ids(d, ids);
  // Try to assign each point a distinct active category, backtracking.
  std::set<std::string> used;
  auto recurse = [&](auto&& self, size_t at) -> bool {
    if (at == ids.size()) return true;
    for (const std::string& c : d[ids[at]].categories) {
      if (!tm.categories.contains(c) || used.contains(c)) continue;
      used.insert(c);
      if (self(self, at + 1)) return true;
      used.erase(c);
    }
    return false;
  };
  return recurse(recurse, 0);
}

}  // namespace oracle
}  // namespace divmax
