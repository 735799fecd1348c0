#pragma once

#include <Eigen/Core>
#include <vector>

namespace cleval {

/// Square K x K profit matrix for cluster -> class matching.
/// entries(c, g) is the gain of assigning cluster c to class g; when built
/// from a contingency table it is the number of samples with predicted
/// cluster c and ground-truth class g.
struct ProfitMatrix {
  Eigen::MatrixXd entries;

  int size() const { return static_cast<int>(entries.rows()); }
};

/// Optimal one-to-one cluster -> class mapping.
struct Assignment {
  std::vector<int> mapping;  // mapping[cluster] = class, a bijection on {0..K-1}
  double total_profit = 0.0;
};

/// Counts (predicted cluster, ground-truth class) co-occurrences into a
/// K x K contingency table. All ids must lie in [0, K).
ProfitMatrix build_profit_matrix(const std::vector<int>& predicted,
                                 const std::vector<int>& ground_truth, int num_classes);

/// Exact maximum-profit bipartite matching (Kuhn-Munkres, O(K^3) on the
/// negated matrix). Deterministic: among equally profitable assignments the
/// lexicographically smallest mapping is returned, i.e. lower cluster
/// indices prefer lower class indices.
Assignment solve_max_matching(const ProfitMatrix& profit);

}  // namespace cleval
