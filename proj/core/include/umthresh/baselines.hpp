#pragma once

#include <umthresh/histogram.hpp>
#include <umthresh/thresholding.hpp>

namespace umthresh {

/// Otsu's threshold: maximizes between-class variance of {v <= t} vs {v > t}.
/// Ties break toward the lower t. Throws DegenerateHistogram when fewer than
/// two bins are populated.
int otsu(const Histogram& hist);

/// Multilevel Otsu: classes-1 thresholds maximizing total between-class
/// variance. Exhaustive search for classes <= 3, dynamic programming above;
/// ties break toward the lexicographically smallest tuple.
ThresholdSet multi_otsu(const Histogram& hist, int classes);

/// The threshold values alone (ascending), same search as multi_otsu.
std::vector<int> multi_otsu_values(const Histogram& hist, int classes);

} // namespace umthresh
