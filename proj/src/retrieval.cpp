#include "strokeforge/retrieval.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <stdexcept>

namespace strokeforge {

void RetrievalProblem::validate() const {
  const std::size_t n = labels.size();
  if (dist.size() != n) throw std::invalid_argument("distance matrix rows do not match label count");
  for (std::size_t i = 0; i < n; ++i) {
    if (dist[i].size() != n) throw std::invalid_argument("distance matrix is not square");
    if (dist[i][i] != 0.0) throw std::invalid_argument("distance matrix diagonal must be zero");
    for (std::size_t j = 0; j < n; ++j) {
      if (!(dist[i][j] >= 0.0)) throw std::invalid_argument("distances must be non-negative");
      if (dist[i][j] != dist[j][i]) throw std::invalid_argument("distance matrix must be symmetric");
    }
  }
  if (!query_mask.empty() && query_mask.size() != n) throw std::invalid_argument("query mask size mismatch");
  if (!db_mask.empty() && db_mask.size() != n) throw std::invalid_argument("database mask size mismatch");
}

double average_precision(const std::vector<bool>& ranked_relevance) {
  double sum = 0.0;
  std::size_t hits = 0;
  for (std::size_t r = 0; r < ranked_relevance.size(); ++r) {
    if (!ranked_relevance[r]) continue;
    ++hits;
    sum += static_cast<double>(hits) / static_cast<double>(r + 1);
  }
  return hits == 0 ? 0.0 : sum / static_cast<double>(hits);
}

namespace {

double percent(double fraction) { return std::round(fraction * 100.0 * 100.0) / 100.0; }

}  // namespace

RetrievalReport leave_one_out_eval(const RetrievalProblem& problem,
                                   const std::vector<std::pair<std::size_t, std::size_t>>& exclusions,
                                   const std::vector<std::size_t>& soft_ks) {
  problem.validate();
  const std::size_t n = problem.size();
  for (auto [q, d] : exclusions)
    if (q >= n || d >= n) throw std::invalid_argument("exclusion index out of range");
  for (std::size_t k : soft_ks)
    if (k == 0) throw std::invalid_argument("soft-K rank must be >= 1");
  const std::set<std::pair<std::size_t, std::size_t>> excluded(exclusions.begin(), exclusions.end());

  auto is_query = [&](std::size_t i) { return problem.query_mask.empty() || problem.query_mask[i]; };
  auto in_db = [&](std::size_t i) { return problem.db_mask.empty() || problem.db_mask[i]; };

  RetrievalReport report;
  double ap_sum = 0.0;
  std::size_t top1 = 0;
  std::map<std::size_t, std::size_t> soft_hits;
  for (std::size_t k : soft_ks) soft_hits[k] = 0;

  for (std::size_t q = 0; q < n; ++q) {
    if (!is_query(q)) continue;
    std::vector<std::size_t> candidates;
    for (std::size_t d = 0; d < n; ++d)
      if (d != q && in_db(d) && !excluded.count({q, d})) candidates.push_back(d);
    std::stable_sort(candidates.begin(), candidates.end(),
                     [&](std::size_t l, std::size_t r) { return problem.dist[q][l] < problem.dist[q][r]; });

    std::vector<bool> relevance;
    relevance.reserve(candidates.size());
    for (std::size_t d : candidates) relevance.push_back(problem.labels[d] == problem.labels[q]);
    const auto first_hit = std::find(relevance.begin(), relevance.end(), true);
    if (first_hit == relevance.end()) {
      ++report.skipped;
      continue;
    }

    ++report.evaluated;
    ap_sum += average_precision(relevance);
    const auto hit_rank = static_cast<std::size_t>(first_hit - relevance.begin()) + 1;
    if (hit_rank == 1) ++top1;
    for (auto& [k, hits] : soft_hits)
      if (hit_rank <= k) ++hits;
  }

  if (report.evaluated > 0) {
    const auto m = static_cast<double>(report.evaluated);
    report.map = percent(ap_sum / m);
    report.accuracy = percent(static_cast<double>(top1) / m);
    for (auto [k, hits] : soft_hits) report.soft[k] = percent(static_cast<double>(hits) / m);
  } else {
    for (auto [k, hits] : soft_hits) report.soft[k] = 0.0;
  }
  return report;
}

}  // namespace strokeforge
