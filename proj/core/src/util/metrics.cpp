#include "mantis/util/metrics.hpp"

#include <algorithm>
#include <cstdio>
#include <numeric>
#include <stdexcept>

namespace mantis::util {

double BinaryMetrics::accuracy() const {
  int64_t total = tp + fp + tn + fn;
  return total ? static_cast<double>(tp + tn) / static_cast<double>(total) : 0.0;
}

double BinaryMetrics::precision() const {
  return (tp + fp) ? static_cast<double>(tp) / static_cast<double>(tp + fp) : 0.0;
}

double BinaryMetrics::recall() const {
  return (tp + fn) ? static_cast<double>(tp) / static_cast<double>(tp + fn) : 0.0;
}

double BinaryMetrics::f1() const {
  double p = precision(), r = recall();
  return (p + r > 0) ? 2 * p * r / (p + r) : 0.0;
}

double BinaryMetrics::fpr() const {
  return (fp + tn) ? static_cast<double>(fp) / static_cast<double>(fp + tn) : 0.0;
}

std::string BinaryMetrics::summary() const {
  char buf[160];
  std::snprintf(buf, sizeof(buf), "acc=%.4f prec=%.4f rec=%.4f f1=%.4f fpr=%.4f", accuracy(),
                precision(), recall(), f1(), fpr());
  return buf;
}

BinaryMetrics confusion_at(const std::vector<double>& scores, const std::vector<int>& labels,
                           double threshold) {
  if (scores.size() != labels.size()) throw std::invalid_argument("scores/labels size mismatch");
  BinaryMetrics m;
  for (size_t i = 0; i < scores.size(); ++i) {
    bool pred = scores[i] >= threshold;
    if (labels[i] == 1) {
      pred ? ++m.tp : ++m.fn;
    } else {
      pred ? ++m.fp : ++m.tn;
    }
  }
  return m;
}

double auc(const std::vector<double>& scores, const std::vector<int>& labels) {
  if (scores.size() != labels.size()) throw std::invalid_argument("scores/labels size mismatch");
  size_t n = scores.size();
  std::vector<size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](size_t a, size_t b) { return scores[a] < scores[b]; });

  double pos_rank_sum = 0;
  int64_t n_pos = 0, n_neg = 0;
  size_t i = 0;
  while (i < n) {
    size_t j = i;
    while (j < n && scores[order[j]] == scores[order[i]]) ++j;
    double mean_rank = 0.5 * static_cast<double>(i + 1 + j);  // average of ranks i+1..j
    for (size_t k = i; k < j; ++k) {
      if (labels[order[k]] == 1) {
        pos_rank_sum += mean_rank;
        ++n_pos;
      } else {
        ++n_neg;
      }
    }
    i = j;
  }
  if (n_pos == 0 || n_neg == 0) return 0.5;
  double u = pos_rank_sum - static_cast<double>(n_pos) * (n_pos + 1) / 2.0;
  return u / (static_cast<double>(n_pos) * static_cast<double>(n_neg));
}

}  // namespace mantis::util
