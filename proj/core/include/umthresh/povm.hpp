#pragma once

#include <umthresh/histogram.hpp>
#include <umthresh/image.hpp>

#include <optional>
#include <vector>

namespace umthresh {

/// Ordered set of intensities mapped one-to-one onto basis indices. The
/// basis index is what ends up encoded in qubits; qubit_count() is the
/// smallest register that can hold every index.
struct IntensityBasis {
    std::vector<int> intensities; // strictly ascending

    static IntensityBasis present_in(const GrayImage& img);
    static IntensityBasis present_in(const Histogram& hist);
    static IntensityBasis full_range(int bit_depth);

    int size() const { return static_cast<int>(intensities.size()); }
    int qubit_count() const;
    std::optional<int> index_of(int intensity) const;
    int intensity_at(int index) const { return intensities[index]; }

    bool operator==(const IntensityBasis&) const = default;
};

/// Re-expresses an image's pixels as basis indices (the compact encoding used
/// when loading intensities into a small register). Every pixel value must be
/// in the basis. The result's bit depth is max(1, basis.qubit_count()).
GrayImage recode_image(const GrayImage& img, const IntensityBasis& basis);

/// Diagonal Gaussian effect over an intensity basis. The weight at a basis
/// entry depends on the true intensity stored there, not on the index.
struct GaussianEffect {
    double mean = 0.0;  // center intensity
    double width = 1.0; // spread, > 0
    IntensityBasis basis;

    double weight_at(int intensity) const;             // exp(-(mean-v)^2 / (2 width^2))
    double prefactored_weight_at(int intensity) const; // with 1/sqrt(2 pi width^2)
};

/// Real amplitudes over a basis. `normalized` distinguishes the raw
/// superposition (all ones) from unit-norm states.
struct AmplitudeMap {
    IntensityBasis basis;
    std::vector<double> amplitudes;
    bool normalized = false;

    double norm() const;
    /// |amplitude|^2 scaled to sum to 1.
    std::vector<double> probabilities() const;
};

/// Equal amplitude 1 on every basis entry, unnormalized.
AmplitudeMap build_uniform_state(const IntensityBasis& basis);

/// Multiplies each amplitude by the Gaussian weight of its true intensity and
/// renormalizes to unit norm. Entries that start at zero stay zero.
AmplitudeMap apply_effect(const GaussianEffect& effect, const AmplitudeMap& state);

/// Diagnostic for the partition-of-unity condition: max over basis entries of
/// |sum_k w_k(entry) - 1| using prefactor-included weights.
double effect_sum_check(const std::vector<GaussianEffect>& effects);

} // namespace umthresh
