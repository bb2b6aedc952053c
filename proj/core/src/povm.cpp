#include <umthresh/povm.hpp>
#include <umthresh/errors.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>

namespace umthresh {

IntensityBasis IntensityBasis::present_in(const GrayImage& img) {
    std::set<int> seen(img.pixels.begin(), img.pixels.end());
    IntensityBasis basis;
    basis.intensities.assign(seen.begin(), seen.end());
    return basis;
}

IntensityBasis IntensityBasis::present_in(const Histogram& hist) {
    IntensityBasis basis;
    for (std::size_t v = 0; v < hist.counts.size(); ++v)
        if (hist.counts[v] > 0) basis.intensities.push_back(static_cast<int>(v));
    return basis;
}

IntensityBasis IntensityBasis::full_range(int bit_depth) {
    IntensityBasis basis;
    basis.intensities.resize(std::size_t(1) << bit_depth);
    for (int v = 0; v < static_cast<int>(basis.intensities.size()); ++v)
        basis.intensities[v] = v;
    return basis;
}

int IntensityBasis::qubit_count() const {
    int bits = 0;
    while ((1 << bits) < size()) ++bits;
    return bits;
}

std::optional<int> IntensityBasis::index_of(int intensity) const {
    const auto it = std::lower_bound(intensities.begin(), intensities.end(), intensity);
    if (it == intensities.end() || *it != intensity) return std::nullopt;
    return static_cast<int>(it - intensities.begin());
}

GrayImage recode_image(const GrayImage& img, const IntensityBasis& basis) {
    if (basis.size() == 0)
        raise(Errc::EmptyBasis, "cannot recode against an empty basis");
    GrayImage out = img;
    out.bit_depth = std::max(1, basis.qubit_count());
    for (std::size_t i = 0; i < img.pixels.size(); ++i) {
        const auto idx = basis.index_of(img.pixels[i]);
        if (!idx)
            raise(Errc::BasisMismatch, "pixel value " + std::to_string(img.pixels[i]) +
                                           " is not in the basis");
        out.pixels[i] = static_cast<std::uint8_t>(*idx);
    }
    return out;
}

double GaussianEffect::weight_at(int intensity) const {
    const double d = mean - intensity;
    return std::exp(-d * d / (2.0 * width * width));
}

double GaussianEffect::prefactored_weight_at(int intensity) const {
    return weight_at(intensity) / std::sqrt(2.0 * std::numbers::pi * width * width);
}

double AmplitudeMap::norm() const {
    double acc = 0.0;
    for (double a : amplitudes) acc += a * a;
    return std::sqrt(acc);
}

std::vector<double> AmplitudeMap::probabilities() const {
    std::vector<double> out(amplitudes.size());
    double total = 0.0;
    for (double a : amplitudes) total += a * a;
    if (total <= 0.0)
        raise(Errc::InvalidArgument, "amplitude map has zero norm");
    for (std::size_t i = 0; i < amplitudes.size(); ++i)
        out[i] = amplitudes[i] * amplitudes[i] / total;
    return out;
}

AmplitudeMap build_uniform_state(const IntensityBasis& basis) {
    if (basis.size() == 0)
        raise(Errc::EmptyBasis, "cannot build a state over an empty basis");
    AmplitudeMap state;
    state.basis = basis;
    state.amplitudes.assign(basis.size(), 1.0);
    state.normalized = false;
    return state;
}

AmplitudeMap apply_effect(const GaussianEffect& effect, const AmplitudeMap& state) {
    if (!(effect.basis == state.basis))
        raise(Errc::BasisMismatch, "effect and state use different bases");
    if (effect.width <= 0.0)
        raise(Errc::InvalidArgument, "effect width must be > 0");

    AmplitudeMap out;
    out.basis = state.basis;
    out.amplitudes.resize(state.amplitudes.size());
    double norm_sq = 0.0;
    for (int m = 0; m < state.basis.size(); ++m) {
        const double w = effect.weight_at(state.basis.intensity_at(m));
        out.amplitudes[m] = state.amplitudes[m] * w;
        norm_sq += out.amplitudes[m] * out.amplitudes[m];
    }
    if (norm_sq <= 0.0)
        raise(Errc::InvalidArgument, "effect annihilates the state (all weights underflow)");
    const double inv = 1.0 / std::sqrt(norm_sq);
    for (double& a : out.amplitudes) a *= inv;
    out.normalized = true;
    return out;
}

double effect_sum_check(const std::vector<GaussianEffect>& effects) {
    if (effects.empty())
        raise(Errc::InvalidArgument, "need at least one effect");
    const IntensityBasis& basis = effects.front().basis;
    for (const GaussianEffect& e : effects)
        if (!(e.basis == basis))
            raise(Errc::BasisMismatch, "effects do not share a basis");

    double worst = 0.0;
    for (int m = 0; m < basis.size(); ++m) {
        double column = 0.0;
        for (const GaussianEffect& e : effects)
            column += e.prefactored_weight_at(basis.intensity_at(m));
        worst = std::max(worst, std::abs(column - 1.0));
    }
    return worst;
}

} // namespace umthresh
