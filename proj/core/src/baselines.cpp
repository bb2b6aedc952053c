#include <umthresh/baselines.hpp>
#include <umthresh/errors.hpp>

#include <algorithm>
#include <cmath>
#include <limits>

namespace umthresh {

namespace {

struct PrefixSums {
    std::vector<double> count;  // count[t] = sum of counts[0..t]
    std::vector<double> weight; // weight[t] = sum of v*counts[v], v <= t

    explicit PrefixSums(const Histogram& hist) {
        const std::size_t n = hist.counts.size();
        count.resize(n);
        weight.resize(n);
        double c = 0.0, w = 0.0;
        for (std::size_t v = 0; v < n; ++v) {
            c += static_cast<double>(hist.counts[v]);
            w += static_cast<double>(v) * static_cast<double>(hist.counts[v]);
            count[v] = c;
            weight[v] = w;
        }
    }

    // Between-class contribution sum^2/count of bins [lo, hi], 0 when empty.
    double score(int lo, int hi) const {
        const double c = count[hi] - (lo > 0 ? count[lo - 1] : 0.0);
        if (c <= 0.0) return 0.0;
        const double w = weight[hi] - (lo > 0 ? weight[lo - 1] : 0.0);
        return w * w / c;
    }
};

int nonzero_bins(const Histogram& hist) {
    int n = 0;
    for (auto c : hist.counts)
        if (c > 0) ++n;
    return n;
}

constexpr double kTieTolerance = 1e-7;

// Exhaustive search over threshold tuples in lexicographic order; strict
// improvement keeps the lexicographically smallest maximizer.
void search_exhaustive(const PrefixSums& sums, int bins, int classes, int depth, int start,
                       std::vector<int>& current, double partial, double& best,
                       std::vector<int>& best_tuple) {
    if (depth == classes - 1) {
        const double total = partial + sums.score(start, bins - 1);
        if (total > best + kTieTolerance) {
            best = total;
            best_tuple = current;
        }
        return;
    }
    for (int t = start; t <= bins - (classes - depth); ++t) {
        current.push_back(t);
        search_exhaustive(sums, bins, classes, depth + 1, t + 1, current,
                          partial + sums.score(start, t), best, best_tuple);
        current.pop_back();
    }
}

// DP over [v..end] split into j classes, then front-to-back reconstruction
// choosing the smallest threshold that still achieves the optimum.
std::vector<int> search_dp(const PrefixSums& sums, int bins, int classes) {
    // best[j][v]: best value for partitioning bins [v, bins) into j classes.
    std::vector<std::vector<double>> best(classes + 1,
                                          std::vector<double>(bins + 1,
                                                              -std::numeric_limits<double>::infinity()));
    for (int v = 0; v < bins; ++v) best[1][v] = sums.score(v, bins - 1);
    best[1][bins] = -std::numeric_limits<double>::infinity();
    for (int j = 2; j <= classes; ++j) {
        for (int v = 0; v + j <= bins; ++v) {
            double acc = -std::numeric_limits<double>::infinity();
            for (int t = v; t + (j - 1) <= bins - 1; ++t) {
                const double cand = sums.score(v, t) + best[j - 1][t + 1];
                if (cand > acc) acc = cand;
            }
            best[j][v] = acc;
        }
    }

    std::vector<int> thresholds;
    int v = 0;
    for (int j = classes; j >= 2; --j) {
        const double target = best[j][v];
        for (int t = v; t + (j - 1) <= bins - 1; ++t) {
            const double cand = sums.score(v, t) + best[j - 1][t + 1];
            if (cand >= target - kTieTolerance * std::max(1.0, std::abs(target))) {
                thresholds.push_back(t);
                v = t + 1;
                break;
            }
        }
    }
    return thresholds;
}

} // namespace

int otsu(const Histogram& hist) {
    if (nonzero_bins(hist) < 2)
        raise(Errc::DegenerateHistogram, "need at least two populated bins");
    const PrefixSums sums(hist);
    const int bins = static_cast<int>(hist.counts.size());
    double best = -1.0;
    int best_t = 0;
    for (int t = 0; t + 1 < bins; ++t) {
        const double value = sums.score(0, t) + sums.score(t + 1, bins - 1);
        if (value > best + kTieTolerance) {
            best = value;
            best_t = t;
        }
    }
    return best_t;
}

std::vector<int> multi_otsu_values(const Histogram& hist, int classes) {
    if (classes < 2)
        raise(Errc::TooFewLevels, "need at least 2 classes");
    if (nonzero_bins(hist) < classes)
        raise(Errc::TooFewLevels, "histogram has fewer populated bins than classes");

    const PrefixSums sums(hist);
    const int bins = static_cast<int>(hist.counts.size());
    if (classes <= 3) {
        double best = -1.0;
        std::vector<int> best_tuple, current;
        search_exhaustive(sums, bins, classes, 0, 0, current, 0.0, best, best_tuple);
        return best_tuple;
    }
    return search_dp(sums, bins, classes);
}

ThresholdSet multi_otsu(const Histogram& hist, int classes) {
    ThresholdSet out;
    for (int t : multi_otsu_values(hist, classes)) {
        ThresholdEntry entry;
        entry.value = t;
        entry.provenance.kind = Provenance::Kind::Manual;
        out.thresholds.push_back(entry);
    }
    return out;
}

} // namespace umthresh
