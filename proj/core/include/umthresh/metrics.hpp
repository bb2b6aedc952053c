#pragma once

#include <umthresh/image.hpp>

#include <string>

namespace umthresh {

struct SsimConfig {
    int window = 8;
    int stride = 1;
    double k1 = 0.01;
    double k2 = 0.03;
};

struct MetricsReport {
    double psnr_db = 0.0;
    double ssim = 0.0;
    double mse = 0.0;
    int window = 8;
    double c1 = 0.0;
    double c2 = 0.0;
};

/// 10*log10(mp^2 / MSE) with mp = 2^bit_depth - 1. Identical images report
/// the 100 dB cap instead of infinity.
double psnr(const GrayImage& a, const GrayImage& b);

/// Mean structural similarity over uniform windows (stride-1 by default).
/// c1 = (k1*mp)^2, c2 = (k2*mp)^2; sample statistics per window.
double ssim(const GrayImage& a, const GrayImage& b, const SsimConfig& cfg = {});

MetricsReport compare_images(const GrayImage& a, const GrayImage& b, const SsimConfig& cfg = {});

std::string metrics_to_json(const MetricsReport& report);

} // namespace umthresh
