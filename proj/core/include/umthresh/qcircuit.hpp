#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace umthresh {

enum class GateKind { Not, H, Cnot, Toffoli, Mcx, Ry, Cry, Fredkin };

const char* gate_kind_name(GateKind kind);

/// One gate over indexed qubits. controls/targets hold qubit indices;
/// polarity (Mcx only) marks each control as firing on |1> (true) or |0>.
struct Gate {
    GateKind kind;
    std::vector<int> controls;
    std::vector<bool> polarity;
    std::vector<int> targets; // Fredkin: the swap pair
    double angle = 0.0;       // Ry / Cry, radians

    static Gate not_gate(int target);
    static Gate h(int target);
    static Gate cnot(int control, int target);
    static Gate toffoli(int control_a, int control_b, int target);
    static Gate mcx(std::vector<int> controls, std::vector<bool> polarity, int target);
    static Gate ry(int target, double angle);
    static Gate cry(int control, int target, double angle);
    static Gate fredkin(int control, int swap_a, int swap_b);

    std::vector<int> qubits() const;
};

/// Ordered gate list over `width` qubits plus the set of qubits to read out.
/// Builders declare their ancilla qubits for cost reporting.
struct Circuit {
    int width = 0;
    std::vector<Gate> gates;
    std::vector<int> measured; // sorted, unique
    std::vector<int> ancillas; // declared by the builder

    explicit Circuit(int width = 0) : width(width) {}

    /// Validates qubit indices (distinct within the gate, < width).
    void append(Gate gate);
    /// Appends another circuit's gates; widths must match.
    void append(const Circuit& other);
    void set_measured(std::vector<int> qubits);
};

/// 2^width complex amplitudes, qubit 0 = least significant bit of the index.
struct StateVector {
    int width = 0;
    std::vector<std::complex<double>> amplitudes;

    explicit StateVector(int width = 0);
    double norm() const;
};

/// Measurement tallies keyed by bitstring (most significant qubit first).
struct Counts {
    std::map<std::string, std::int64_t> tally;
    std::int64_t shots = 0;
};

/// Exact statevector simulation, all gates applied in order.
StateVector simulate(const Circuit& circuit);
StateVector simulate(const Circuit& circuit, StateVector initial);

/// Exact outcome distribution over the given qubits. Entries are
/// (bitstring, probability) in ascending bitstring order; zero-probability
/// outcomes are omitted (threshold 1e-12).
std::vector<std::pair<std::string, double>>
marginal_probabilities(const StateVector& state, const std::vector<int>& measured);

/// Draws `shots` outcomes from the marginal distribution with a deterministic
/// seeded generator. Identical seed => identical Counts.
Counts sample(const StateVector& state, const std::vector<int>& measured, std::int64_t shots,
              std::uint64_t seed);

/// Per-kind gate costs; MCX cost is looked up by control count.
struct CostTable {
    std::map<GateKind, int> base;
    std::map<int, int> mcx_by_controls;
};

/// NOT/CNOT = 1, Toffoli/Fredkin = 5, H/RY = 1, CRY = 4 (two CNOT + two RY),
/// MCX(k) = 5(2k-3) for k >= 2 (Toffoli-ladder convention), MCX(1) = 1.
CostTable default_cost_table();

struct CircuitStats {
    std::int64_t quantum_cost = 0;
    int depth = 0; // greedy layering: gates on disjoint qubits share a layer
    int ancilla_count = 0;
};

CircuitStats cost_and_depth(const Circuit& circuit, const CostTable& table = default_cost_table());

/// Line-oriented text form, one gate per line, for debugging and golden tests.
std::string circuit_to_text(const Circuit& circuit);
Circuit circuit_from_text(const std::string& text);

} // namespace umthresh
