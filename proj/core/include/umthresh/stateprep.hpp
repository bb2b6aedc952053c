#pragma once

#include <umthresh/qcircuit.hpp>

#include <span>
#include <vector>

namespace umthresh {

/// Complete binary tree of rotation angles in heap order (root at 0, node i
/// has children 2i+1 / 2i+2). Depth equals qubit_count; the leaf layer is the
/// probability vector itself and is not stored.
struct AngleTree {
    int qubit_count = 0;
    std::vector<double> angles; // size 2^qubit_count - 1, each in [0, pi]

    int node_count() const { return static_cast<int>(angles.size()); }
    /// Nodes of tree level l (root level 0), left to right.
    std::span<const double> level(int l) const;
};

/// Bottom-up angle generation: each internal node holds
/// 2*asin(sqrt(right_mass / (left_mass + right_mass))), or 0 when the subtree
/// carries no mass. Input length must be a power of two and sum to 1 (1e-9).
AngleTree gen_angles(std::span<const double> probabilities);

/// Divide-and-conquer amplitude loader: a plain RY at the root, then one
/// RY/CNOT multiplexor per level. Simulating from |0...0> yields amplitudes
/// sqrt(p_j), all real and nonnegative. Basis label MSB is the last qubit.
Circuit build_load_circuit(const AngleTree& tree);

} // namespace umthresh
