#pragma once

#include <umthresh/image.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace umthresh {

/// Intensity histogram: counts[v] = number of pixels with intensity v.
/// counts.size() == 2^bit_depth of the source image.
struct Histogram {
    std::vector<std::int64_t> counts;
    std::int64_t total = 0;
};

Histogram compute_histogram(const GrayImage& img);

/// Moving average with edge replication. window must be odd; window == 1 is
/// the identity. Throws EvenWindow otherwise.
std::vector<double> smooth(const std::vector<double>& counts, int window);
std::vector<double> smooth(const Histogram& hist, int window);

/// One detected histogram mode. width is the Gaussian spread assigned to it
/// (inter-valley distance / width_divisor).
struct Peak {
    int mean = 0;
    double width = 1.0;
    int left_valley = 0;
    int right_valley = 0;
};

/// Peaks sorted ascending by mean. Adjacent peaks share a valley:
/// peaks[k].right_valley == peaks[k+1].left_valley. The histogram ends serve
/// as the outer valleys.
struct PeakSet {
    std::vector<Peak> peaks;
    int count() const { return static_cast<int>(peaks.size()); }
};

struct PeakConfig {
    int smooth_window = 9;
    double prominence_fraction = 0.05;
    int min_separation = 10;
    double width_divisor = 2.0;
};

/// Finds local maxima of the smoothed histogram with prominence at least
/// prominence_fraction * max(smoothed), keeping only peaks pairwise separated
/// by at least min_separation intensity levels (higher peaks win).
/// Throws NoPeaks when nothing qualifies (e.g. an all-zero histogram).
PeakSet detect_peaks(const Histogram& hist, const PeakConfig& cfg = {});

std::string peakset_to_json(const PeakSet& peaks);
PeakSet peakset_from_json(const std::string& text);

} // namespace umthresh
