#include <umthresh/histogram.hpp>
#include <umthresh/errors.hpp>

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cmath>

namespace umthresh {

Histogram compute_histogram(const GrayImage& img) {
    Histogram hist;
    hist.counts.assign(std::size_t(1) << img.bit_depth, 0);
    for (std::uint8_t v : img.pixels) ++hist.counts[v];
    hist.total = static_cast<std::int64_t>(img.pixels.size());
    return hist;
}

std::vector<double> smooth(const std::vector<double>& counts, int window) {
    if (window < 1 || window % 2 == 0)
        raise(Errc::EvenWindow, "smoothing window must be odd and >= 1, got " +
                                    std::to_string(window));
    if (window == 1 || counts.empty()) return counts;

    const int n = static_cast<int>(counts.size());
    const int half = window / 2;
    std::vector<double> out(counts.size());
    for (int i = 0; i < n; ++i) {
        double acc = 0.0;
        for (int j = i - half; j <= i + half; ++j) {
            const int k = std::clamp(j, 0, n - 1); // edge replication
            acc += counts[k];
        }
        out[i] = acc / window;
    }
    return out;
}

std::vector<double> smooth(const Histogram& hist, int window) {
    std::vector<double> counts(hist.counts.begin(), hist.counts.end());
    return smooth(counts, window);
}

namespace {

struct Candidate {
    int index;     // plateau middle
    double height; // smoothed count at index
};

// Plateau-aware local maxima of s, interior only. For a flat run higher than
// both neighbours, the (left) middle of the run is reported.
std::vector<Candidate> local_maxima(const std::vector<double>& s) {
    std::vector<Candidate> out;
    const int n = static_cast<int>(s.size());
    int i = 1;
    while (i < n - 1) {
        if (s[i] > s[i - 1]) {
            int j = i;
            while (j < n - 1 && s[j + 1] == s[i]) ++j;
            if (j < n - 1 && s[j + 1] < s[i]) {
                out.push_back({(i + j) / 2, s[i]});
            }
            i = j + 1;
        } else {
            ++i;
        }
    }
    return out;
}

// Topographic prominence: walk out from the peak until a strictly higher
// sample (or the boundary), tracking the lowest sample seen on each side.
double prominence(const std::vector<double>& s, int peak) {
    const int n = static_cast<int>(s.size());
    double left_base = s[peak];
    for (int j = peak - 1; j >= 0; --j) {
        if (s[j] > s[peak]) break;
        left_base = std::min(left_base, s[j]);
    }
    double right_base = s[peak];
    for (int j = peak + 1; j < n; ++j) {
        if (s[j] > s[peak]) break;
        right_base = std::min(right_base, s[j]);
    }
    return s[peak] - std::max(left_base, right_base);
}

// Leftmost minimum of s on the open interval (lo, hi). Falls back to lo when
// the interval is empty.
int valley_between(const std::vector<double>& s, int lo, int hi) {
    int best = lo;
    double best_val = std::numeric_limits<double>::infinity();
    for (int j = lo + 1; j < hi; ++j) {
        if (s[j] < best_val) {
            best_val = s[j];
            best = j;
        }
    }
    return best;
}

} // namespace

PeakSet detect_peaks(const Histogram& hist, const PeakConfig& cfg) {
    if (hist.counts.empty())
        raise(Errc::NoPeaks, "empty histogram");
    const auto s = smooth(hist, cfg.smooth_window);
    const double max_count = *std::max_element(s.begin(), s.end());
    if (max_count <= 0.0)
        raise(Errc::NoPeaks, "all-zero histogram");

    auto candidates = local_maxima(s);
    std::erase_if(candidates, [&](const Candidate& c) {
        return prominence(s, c.index) < cfg.prominence_fraction * max_count;
    });
    if (candidates.empty())
        raise(Errc::NoPeaks, "no local maximum passes the prominence filter");

    // Enforce min separation, higher peaks first.
    std::stable_sort(candidates.begin(), candidates.end(), [](const Candidate& a, const Candidate& b) {
        if (a.height != b.height) return a.height > b.height;
        return a.index < b.index;
    });
    std::vector<int> kept;
    for (const Candidate& c : candidates) {
        bool clear = true;
        for (int k : kept) {
            if (std::abs(k - c.index) < cfg.min_separation) {
                clear = false;
                break;
            }
        }
        if (clear) kept.push_back(c.index);
    }
    std::sort(kept.begin(), kept.end());

    const int last = static_cast<int>(s.size()) - 1;
    PeakSet out;
    out.peaks.resize(kept.size());
    for (std::size_t k = 0; k < kept.size(); ++k) {
        Peak& p = out.peaks[k];
        p.mean = kept[k];
        p.left_valley = (k == 0) ? 0 : valley_between(s, kept[k - 1], kept[k]);
        p.right_valley = (k + 1 == kept.size()) ? last : valley_between(s, kept[k], kept[k + 1]);
        if (k > 0) out.peaks[k - 1].right_valley = p.left_valley;
    }
    for (Peak& p : out.peaks) {
        p.width = std::max(0.5, (p.right_valley - p.left_valley) / cfg.width_divisor);
    }
    return out;
}

std::string peakset_to_json(const PeakSet& peaks) {
    nlohmann::ordered_json doc;
    doc["peaks"] = nlohmann::ordered_json::array();
    for (const Peak& p : peaks.peaks) {
        doc["peaks"].push_back({{"mean", p.mean},
                                {"width", p.width},
                                {"left_valley", p.left_valley},
                                {"right_valley", p.right_valley}});
    }
    return doc.dump(2) + "\n";
}

PeakSet peakset_from_json(const std::string& text) {
    PeakSet out;
    try {
        const auto doc = nlohmann::json::parse(text);
        for (const auto& item : doc.at("peaks")) {
            Peak p;
            p.mean = item.at("mean").get<int>();
            p.width = item.at("width").get<double>();
            p.left_valley = item.value("left_valley", p.mean);
            p.right_valley = item.value("right_valley", p.mean);
            out.peaks.push_back(p);
        }
    } catch (const nlohmann::json::exception& e) {
        raise(Errc::InvalidArgument, std::string("bad PeakSet JSON: ") + e.what());
    }
    if (out.peaks.empty())
        raise(Errc::InvalidArgument, "PeakSet JSON contains no peaks");
    std::sort(out.peaks.begin(), out.peaks.end(),
              [](const Peak& a, const Peak& b) { return a.mean < b.mean; });
    for (const Peak& p : out.peaks)
        if (p.width <= 0.0)
            raise(Errc::InvalidArgument, "peak width must be > 0");
    return out;
}

} // namespace umthresh
