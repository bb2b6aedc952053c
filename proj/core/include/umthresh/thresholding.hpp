#pragma once

#include <umthresh/histogram.hpp>
#include <umthresh/image.hpp>
#include <umthresh/povm.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace umthresh {

enum class ThresholdMode { Exact, Sampled };

/// Where a threshold came from: the unimodal argmax, the crossing of the
/// adjacent peak pair (lo, hi), the shared valley fallback for that pair, or
/// an externally supplied value.
struct Provenance {
    enum class Kind { UnimodalArgmax, Crossing, ValleyFallback, Manual };
    Kind kind = Kind::Manual;
    int peak_lo = -1;
    int peak_hi = -1;
    double mean_lo = 0.0;
    double mean_hi = 0.0;

    std::string label() const;
};

struct ThresholdEntry {
    int value = 0;
    Provenance provenance;
};

struct ThresholdSet {
    std::vector<ThresholdEntry> thresholds; // strictly ascending values
    ThresholdMode mode = ThresholdMode::Exact;
    std::int64_t shots = 0;
    std::uint64_t seed = 0;

    std::vector<int> values() const;
};

/// Measured distribution for one peak's effect-weighted state (probabilities
/// in exact mode, tallies in sampled mode), indexed by basis index.
struct PeakMeasurement {
    int peak_index = 0;
    std::vector<double> mass;

    double total() const;
};

struct ThresholdConfig {
    PeakConfig peaks;
    ThresholdMode mode = ThresholdMode::Exact;
    std::int64_t shots = 1000;
    std::uint64_t seed = 0;
    /// Bypasses detect_peaks when set (e.g. to reproduce a known figure).
    std::optional<PeakSet> manual_peaks;
};

/// Intensity of the maximum-mass basis state; ties go to the lower intensity.
int unimodal_threshold(const PeakMeasurement& meas, const IntensityBasis& basis);

/// Among intensities inside [window.first, window.second] carrying mass in
/// both measurements, the one minimizing |P_a - P_b| (ties toward the lower
/// intensity). Throws EmptyOverlap when the window holds no shared mass.
int crossing_threshold(const PeakMeasurement& a, const PeakMeasurement& b,
                       const IntensityBasis& basis, std::pair<double, double> window);

/// Everything the pipeline produced on the way to the thresholds, so callers
/// can dump the per-peak probability curves.
struct ThresholdResult {
    ThresholdSet set;
    PeakSet peaks;
    IntensityBasis basis;
    std::vector<PeakMeasurement> measurements;
};

/// Runs the whole pipeline: peak detection, per-peak Gaussian effect applied
/// to the uniform state, amplitude loading through the divide-and-conquer
/// circuit, exact or sampled measurement, then threshold extraction
/// (unimodal argmax for one peak, adjacent-pair crossings otherwise).
ThresholdResult compute_thresholds(const GrayImage& img, const ThresholdConfig& cfg = {});

/// Single-threshold variant for binarization: with more than two detected
/// peaks, the two tallest are kept and their crossing is the threshold.
ThresholdResult compute_binary_threshold(const GrayImage& img, const ThresholdConfig& cfg = {});

enum class LevelRule { SegmentMean, PeakValue, BinaryExtremes };

/// Maps pixel v with T_j < v <= T_{j+1} to the segment's representative
/// (T_0 = -1, T_{m+1} = max). binary-extremes needs exactly one threshold and
/// maps to {0, 2^q - 1} with strict >.
GrayImage quantize(const GrayImage& img, const ThresholdSet& tset, LevelRule rule);

std::string thresholds_to_json(const ThresholdSet& tset);
ThresholdSet thresholds_from_json(const std::string& text);

} // namespace umthresh
