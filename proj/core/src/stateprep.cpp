#include <umthresh/stateprep.hpp>
#include <umthresh/errors.hpp>

#include <cmath>

namespace umthresh {

std::span<const double> AngleTree::level(int l) const {
    const std::size_t first = (std::size_t(1) << l) - 1;
    const std::size_t count = std::size_t(1) << l;
    return std::span<const double>(angles).subspan(first, count);
}

AngleTree gen_angles(std::span<const double> probabilities) {
    const std::size_t n = probabilities.size();
    if (n == 0 || (n & (n - 1)) != 0)
        raise(Errc::BadLength, "probability vector length must be a power of two, got " +
                                   std::to_string(n));
    double sum = 0.0;
    for (double p : probabilities) {
        if (p < 0.0)
            raise(Errc::InvalidArgument, "probabilities must be nonnegative");
        sum += p;
    }
    if (std::abs(sum - 1.0) > 1e-9)
        raise(Errc::NotNormalized, "probabilities sum to " + std::to_string(sum));

    AngleTree tree;
    while ((std::size_t(1) << tree.qubit_count) < n) ++tree.qubit_count;
    tree.angles.assign(n - 1, 0.0);

    // mass[i] over the implicit full tree: leaves at [n-1, 2n-1), internal
    // nodes folded bottom-up.
    std::vector<double> mass(2 * n - 1, 0.0);
    for (std::size_t j = 0; j < n; ++j) mass[n - 1 + j] = probabilities[j];
    for (std::size_t i = n - 1; i-- > 0;) {
        const double left = mass[2 * i + 1];
        const double right = mass[2 * i + 2];
        mass[i] = left + right;
        if (mass[i] > 0.0)
            tree.angles[i] = 2.0 * std::asin(std::sqrt(right / mass[i]));
    }
    return tree;
}

namespace {

// Uniformly controlled RY: applies RY(angles[j]) on `target` where j is the
// value packed from `controls` (controls[i] supplies bit i). Decomposes
// exactly into RY and CNOT via angle halving; conjugation by X flips the RY
// sign, so the two halves add or cancel depending on the control bit.
void apply_multiplexed_ry(Circuit& circuit, std::span<const int> controls, int target,
                          std::vector<double> angles) {
    if (controls.empty()) {
        circuit.append(Gate::ry(target, angles[0]));
        return;
    }
    const std::size_t half = angles.size() / 2;
    const int top = controls[controls.size() - 1];
    std::vector<double> plus(half), minus(half);
    for (std::size_t j = 0; j < half; ++j) {
        plus[j] = (angles[j] + angles[j + half]) / 2.0;
        minus[j] = (angles[j] - angles[j + half]) / 2.0;
    }
    const auto rest = controls.subspan(0, controls.size() - 1);
    apply_multiplexed_ry(circuit, rest, target, std::move(plus));
    circuit.append(Gate::cnot(top, target));
    apply_multiplexed_ry(circuit, rest, target, std::move(minus));
    circuit.append(Gate::cnot(top, target));
}

} // namespace

Circuit build_load_circuit(const AngleTree& tree) {
    const int k = tree.qubit_count;
    Circuit circuit(k);
    if (k == 0) return circuit;

    // Tree level l decides the basis-label bit k-1-l, so the root rotates the
    // top qubit and each deeper level is multiplexed on the qubits above it.
    for (int l = 0; l < k; ++l) {
        const int target = k - 1 - l;
        std::vector<int> controls;
        for (int c = 0; c < l; ++c) controls.push_back(k - 1 - c);

        const auto level_angles = tree.level(l);
        // angles[j]: control qubit k-1-c supplies path bit c, while
        // apply_multiplexed_ry packs controls[i] into bit i of j.
        std::vector<double> angles(level_angles.size());
        for (std::size_t node = 0; node < level_angles.size(); ++node) {
            std::size_t j = 0;
            for (int c = 0; c < l; ++c) {
                const std::size_t path_bit = (node >> (l - 1 - c)) & 1;
                if (path_bit) j |= std::size_t(1) << c;
            }
            angles[j] = level_angles[node];
        }
        apply_multiplexed_ry(circuit, controls, target, std::move(angles));
    }

    std::vector<int> all(k);
    for (int q = 0; q < k; ++q) all[q] = q;
    circuit.set_measured(std::move(all));
    return circuit;
}

} // namespace umthresh
