#include "cleval/assignment.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "cleval/errors.hpp"

namespace cleval {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Shortest-augmenting-path Kuhn-Munkres on a square cost matrix
// (minimization). Scans rows and columns in ascending order with strict
// comparisons, so the result is deterministic. 1-based internally;
// matched[j] is the row assigned to column j.
std::vector<int> solve_min_cost(const Eigen::MatrixXd& cost) {
  const int n = static_cast<int>(cost.rows());
  std::vector<double> u(n + 1, 0.0), v(n + 1, 0.0);
  std::vector<int> matched(n + 1, 0), way(n + 1, 0);
  for (int i = 1; i <= n; ++i) {
    matched[0] = i;
    int j0 = 0;
    std::vector<double> min_slack(n + 1, kInf);
    std::vector<char> used(n + 1, 0);
    do {
      used[j0] = 1;
      const int i0 = matched[j0];
      int j1 = 0;
      double delta = kInf;
      for (int j = 1; j <= n; ++j) {
        if (used[j]) continue;
        const double cur = cost(i0 - 1, j - 1) - u[i0] - v[j];
        if (cur < min_slack[j]) {
          min_slack[j] = cur;
          way[j] = j0;
        }
        if (min_slack[j] < delta) {
          delta = min_slack[j];
          j1 = j;
        }
      }
      for (int j = 0; j <= n; ++j) {
        if (used[j]) {
          u[matched[j]] += delta;
          v[j] -= delta;
        } else {
          min_slack[j] -= delta;
        }
      }
      j0 = j1;
    } while (matched[j0] != 0);
    do {
      const int j1 = way[j0];
      matched[j0] = matched[j1];
      j0 = j1;
    } while (j0 != 0);
  }
  std::vector<int> mapping(n, -1);
  for (int j = 1; j <= n; ++j) mapping[matched[j] - 1] = j - 1;
  return mapping;
}

double mapping_profit(const Eigen::MatrixXd& profit, const std::vector<int>& mapping) {
  double total = 0.0;
  for (int c = 0; c < static_cast<int>(mapping.size()); ++c) total += profit(c, mapping[c]);
  return total;
}

// Best profit achievable when matching rows `rows` to columns `cols`
// (both ascending). Returns the winning column per row in row order.
double solve_subproblem(const Eigen::MatrixXd& profit, const std::vector<int>& rows,
                        const std::vector<int>& cols, std::vector<int>* chosen_cols) {
  const int m = static_cast<int>(rows.size());
  if (m == 0) return 0.0;
  Eigen::MatrixXd cost(m, m);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) cost(a, b) = -profit(rows[a], cols[b]);
  const std::vector<int> sub = solve_min_cost(cost);
  double total = 0.0;
  chosen_cols->resize(m);
  for (int a = 0; a < m; ++a) {
    (*chosen_cols)[a] = cols[sub[a]];
    total += profit(rows[a], cols[sub[a]]);
  }
  return total;
}

// Among all maximum-profit assignments, pick the lexicographically smallest
// mapping vector: cluster 0 takes the lowest class consistent with
// optimality, then cluster 1, and so on. Exact for integer profit matrices;
// if floating-point regrouping ever breaks the equality test the plain
// solver result is returned instead (still optimal, still deterministic).
std::vector<int> lexicographic_refine(const Eigen::MatrixXd& profit,
                                      const std::vector<int>& base, double best_total) {
  const int n = static_cast<int>(profit.rows());
  std::vector<int> mapping(n, -1);
  std::vector<int> available(n);
  for (int g = 0; g < n; ++g) available[g] = g;
  double prefix = 0.0;
  for (int c = 0; c < n; ++c) {
    std::vector<int> rest_rows;
    for (int r = c + 1; r < n; ++r) rest_rows.push_back(r);
    bool fixed = false;
    for (std::size_t gi = 0; gi < available.size() && !fixed; ++gi) {
      const int g = available[gi];
      std::vector<int> rest_cols;
      for (int other : available)
        if (other != g) rest_cols.push_back(other);
      std::vector<int> completion;
      const double rest = solve_subproblem(profit, rest_rows, rest_cols, &completion);
      if (prefix + profit(c, g) + rest == best_total) {
        mapping[c] = g;
        prefix += profit(c, g);
        available.erase(available.begin() + static_cast<std::ptrdiff_t>(gi));
        fixed = true;
      }
    }
    if (!fixed) return base;
  }
  return mapping;
}

}  // namespace

ProfitMatrix build_profit_matrix(const std::vector<int>& predicted,
                                 const std::vector<int>& ground_truth, int num_classes) {
  if (num_classes < 1) throw InputError("build_profit_matrix: num_classes must be >= 1");
  if (predicted.empty()) throw InputError("build_profit_matrix: empty input");
  if (predicted.size() != ground_truth.size())
    throw InputError("build_profit_matrix: predicted/ground_truth length mismatch (" +
                     std::to_string(predicted.size()) + " vs " +
                     std::to_string(ground_truth.size()) + ")");
  ProfitMatrix m;
  m.entries = Eigen::MatrixXd::Zero(num_classes, num_classes);
  for (std::size_t n = 0; n < predicted.size(); ++n) {
    const int c = predicted[n];
    const int g = ground_truth[n];
    if (c < 0 || c >= num_classes || g < 0 || g >= num_classes)
      throw InputError("build_profit_matrix: id out of range at sample " + std::to_string(n));
    m.entries(c, g) += 1.0;
  }
  return m;
}

Assignment solve_max_matching(const ProfitMatrix& profit) {
  const Eigen::MatrixXd& p = profit.entries;
  if (p.rows() < 1 || p.rows() != p.cols())
    throw InputError("solve_max_matching: profit matrix must be square and non-empty");
  if (!p.allFinite()) throw InputError("solve_max_matching: profit matrix has non-finite entries");

  const std::vector<int> base = solve_min_cost(-p);
  const double best_total = mapping_profit(p, base);

  Assignment out;
  out.mapping = lexicographic_refine(p, base, best_total);
  out.total_profit = mapping_profit(p, out.mapping);
  return out;
}

}  // namespace cleval
