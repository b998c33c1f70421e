#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace strokeforge {

/// Pairwise distances between N samples plus their writer labels. Query and
/// database selectors default to "everything".
struct RetrievalProblem {
  std::vector<std::vector<double>> dist;
  std::vector<std::string> labels;
  std::vector<bool> query_mask;
  std::vector<bool> db_mask;

  std::size_t size() const { return labels.size(); }
  /// Throws std::invalid_argument unless dist is square, symmetric,
  /// non-negative with a zero diagonal and all sizes agree.
  void validate() const;
};

struct RetrievalReport {
  double map = 0.0;       // percent
  double accuracy = 0.0;  // percent, rank-1 label match
  std::map<std::size_t, double> soft;  // K -> percent of queries with a hit in the top K
  std::size_t evaluated = 0;
  std::size_t skipped = 0;  // queries without any relevant candidate
};

/// Average precision of a ranked relevance list (1-based ranks), without
/// interpolation. Returns 0 when nothing is relevant.
double average_precision(const std::vector<bool>& ranked_relevance);

/// Ranks database items for every query by ascending distance (ties by
/// index), leaving out the query itself and every (query, item) pair in
/// `exclusions`. Percentages are rounded to two decimals.
RetrievalReport leave_one_out_eval(const RetrievalProblem& problem,
                                   const std::vector<std::pair<std::size_t, std::size_t>>& exclusions,
                                   const std::vector<std::size_t>& soft_ks = {2, 3, 4, 5});

}  // namespace strokeforge
