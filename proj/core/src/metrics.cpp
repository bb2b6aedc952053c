#include <umthresh/metrics.hpp>
#include <umthresh/errors.hpp>

#include <nlohmann/json.hpp>

#include <cmath>

namespace umthresh {

namespace {

void check_same_shape(const GrayImage& a, const GrayImage& b) {
    if (a.width != b.width || a.height != b.height || a.bit_depth != b.bit_depth)
        raise(Errc::DimensionMismatch, "images differ in dimensions or bit depth");
}

double mean_squared_error(const GrayImage& a, const GrayImage& b) {
    double acc = 0.0;
    for (std::size_t i = 0; i < a.pixels.size(); ++i) {
        const double d = static_cast<double>(a.pixels[i]) - static_cast<double>(b.pixels[i]);
        acc += d * d;
    }
    return acc / static_cast<double>(a.pixels.size());
}

} // namespace

double psnr(const GrayImage& a, const GrayImage& b) {
    check_same_shape(a, b);
    const double mse = mean_squared_error(a, b);
    if (mse == 0.0) return 100.0;
    const double mp = a.max_value();
    return 10.0 * std::log10(mp * mp / mse);
}

double ssim(const GrayImage& a, const GrayImage& b, const SsimConfig& cfg) {
    check_same_shape(a, b);
    const int w = cfg.window;
    if (w < 1 || cfg.stride < 1)
        raise(Errc::InvalidArgument, "window and stride must be >= 1");
    if (w > a.width || w > a.height)
        raise(Errc::WindowTooLarge, "window " + std::to_string(w) + " exceeds image size");

    const double mp = a.max_value();
    const double c1 = (cfg.k1 * mp) * (cfg.k1 * mp);
    const double c2 = (cfg.k2 * mp) * (cfg.k2 * mp);
    const int n = w * w;
    const double denom = (n > 1) ? n - 1 : 1; // sample statistics

    double acc = 0.0;
    std::int64_t windows = 0;
    for (int y = 0; y + w <= a.height; y += cfg.stride) {
        for (int x = 0; x + w <= a.width; x += cfg.stride) {
            double sa = 0, sb = 0, saa = 0, sbb = 0, sab = 0;
            for (int dy = 0; dy < w; ++dy) {
                for (int dx = 0; dx < w; ++dx) {
                    const double va = a.at(y + dy, x + dx);
                    const double vb = b.at(y + dy, x + dx);
                    sa += va;
                    sb += vb;
                    saa += va * va;
                    sbb += vb * vb;
                    sab += va * vb;
                }
            }
            const double mu_a = sa / n;
            const double mu_b = sb / n;
            const double var_a = (saa - sa * mu_a) / denom;
            const double var_b = (sbb - sb * mu_b) / denom;
            const double cov = (sab - sa * mu_b) / denom;
            const double value = ((2 * mu_a * mu_b + c1) * (2 * cov + c2)) /
                                 ((mu_a * mu_a + mu_b * mu_b + c1) * (var_a + var_b + c2));
            acc += value;
            ++windows;
        }
    }
    return acc / static_cast<double>(windows);
}

MetricsReport compare_images(const GrayImage& a, const GrayImage& b, const SsimConfig& cfg) {
    MetricsReport report;
    report.mse = mean_squared_error(a, b);
    report.psnr_db = psnr(a, b);
    report.ssim = ssim(a, b, cfg);
    report.window = cfg.window;
    const double mp = a.max_value();
    report.c1 = (cfg.k1 * mp) * (cfg.k1 * mp);
    report.c2 = (cfg.k2 * mp) * (cfg.k2 * mp);
    return report;
}

std::string metrics_to_json(const MetricsReport& report) {
    nlohmann::ordered_json doc;
    doc["psnr_db"] = report.psnr_db;
    doc["ssim"] = report.ssim;
    doc["mse"] = report.mse;
    doc["window"] = report.window;
    doc["c1"] = report.c1;
    doc["c2"] = report.c2;
    return doc.dump(2) + "\n";
}

} // namespace umthresh
