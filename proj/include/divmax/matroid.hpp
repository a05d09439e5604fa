#pragma once

#include "divmax/core.hpp"

#include <functional>
#include <map>
#include <set>
#include <variant>

namespace divmax {

/// Independence = at most quotas[A] elements from each category A.
/// Every point must belong to exactly one quota category.
struct PartitionMatroid {
  std::map<std::string, int> quotas;
};

/// Independence = the set matches injectively into the active categories
/// of the bipartite membership graph.
struct TransversalMatroid {
  std::set<std::string> categories;
};

/// User-supplied independence oracle over point sets. Must be hereditary
/// and satisfy the augmentation property; property-tested, not enforced.
using CustomOracle = std::function<bool(const std::vector<const Point*>&)>;

struct CustomMatroid {
  CustomOracle oracle;
};

class Matroid {
 public:
  using Kind = std::variant<PartitionMatroid, TransversalMatroid, CustomMatroid>;

  explicit Matroid(Kind kind) : kind_(std::move(kind)) {}

  static Matroid partition(std::map<std::string, int> quotas) {
    return Matroid(PartitionMatroid{std::move(quotas)});
  }
  static Matroid transversal(std::set<std::string> categories) {
    return Matroid(TransversalMatroid{std::move(categories)});
  }
  static Matroid custom(CustomOracle oracle) {
    return Matroid(CustomMatroid{std::move(oracle)});
  }

  bool is_partition() const { return std::holds_alternative<PartitionMatroid>(kind_); }
  bool is_transversal() const { return std::holds_alternative<TransversalMatroid>(kind_); }
  bool is_custom() const { return std::holds_alternative<CustomMatroid>(kind_); }

  const PartitionMatroid& as_partition() const { return std::get<PartitionMatroid>(kind_); }
  const TransversalMatroid& as_transversal() const { return std::get<TransversalMatroid>(kind_); }
  const CustomMatroid& as_custom() const { return std::get<CustomMatroid>(kind_); }

 private:
  Kind kind_;
};

struct RankInfo {
  int rank;
};

/// Throws InputError if the dataset violates the matroid's per-point
/// requirements (partition: exactly one quota category; transversal: at
/// least one active category).
void validate(const Matroid& m, const Dataset& d);

/// Independence test over point objects (streaming-friendly; no dataset
/// context required). Transversal independence is decided by a fresh
/// maximum-matching computation.
bool is_independent_pts(const Matroid& m, const std::vector<const Point*>& pts);

bool is_independent(const Matroid& m, const Dataset& d, const IndexSet& ids);

RankInfo rank(const Matroid& m, const Dataset& d);

/// Greedy maximal independent subset of pool (scanned in the given order,
/// which call sites keep equal to dataset index order), capped at cap.
/// By the matroid exchange property the result is a *largest* independent
/// subset of the pool, truncated at cap.
IndexSet maximal_independent_subset(const Matroid& m, const Dataset& d, const IndexSet& pool,
                                    int cap);

/// Extends base with (target - |base|) elements of donor \ base, staying
/// independent at every step. Exists by the augmentation property; a
/// failure signals a broken custom oracle.
IndexSet augment(const Matroid& m, const Dataset& d, const IndexSet& base, const IndexSet& donor,
                 int target);

}  // namespace divmax
