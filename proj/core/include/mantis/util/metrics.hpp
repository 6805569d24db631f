#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace mantis::util {

struct BinaryMetrics {
  int64_t tp = 0, fp = 0, tn = 0, fn = 0;

  double accuracy() const;
  double precision() const;
  double recall() const;
  double f1() const;
  double fpr() const;
  std::string summary() const;
};

// labels: 1 = positive (malicious), 0 = negative.
BinaryMetrics confusion_at(const std::vector<double>& scores, const std::vector<int>& labels,
                           double threshold);

// Mann-Whitney AUC with tie correction. Returns 0.5 when one class is absent.
double auc(const std::vector<double>& scores, const std::vector<int>& labels);

}  // namespace mantis::util
