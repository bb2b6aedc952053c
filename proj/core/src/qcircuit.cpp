#include <umthresh/qcircuit.hpp>
#include <umthresh/errors.hpp>

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

namespace umthresh {

const char* gate_kind_name(GateKind kind) {
    switch (kind) {
    case GateKind::Not: return "NOT";
    case GateKind::H: return "H";
    case GateKind::Cnot: return "CNOT";
    case GateKind::Toffoli: return "TOFFOLI";
    case GateKind::Mcx: return "MCX";
    case GateKind::Ry: return "RY";
    case GateKind::Cry: return "CRY";
    case GateKind::Fredkin: return "FREDKIN";
    }
    return "?";
}

Gate Gate::not_gate(int target) { return Gate{GateKind::Not, {}, {}, {target}}; }
Gate Gate::h(int target) { return Gate{GateKind::H, {}, {}, {target}}; }
Gate Gate::cnot(int control, int target) { return Gate{GateKind::Cnot, {control}, {}, {target}}; }
Gate Gate::toffoli(int control_a, int control_b, int target) {
    return Gate{GateKind::Toffoli, {control_a, control_b}, {}, {target}};
}
Gate Gate::mcx(std::vector<int> controls, std::vector<bool> polarity, int target) {
    return Gate{GateKind::Mcx, std::move(controls), std::move(polarity), {target}};
}
Gate Gate::ry(int target, double angle) { return Gate{GateKind::Ry, {}, {}, {target}, angle}; }
Gate Gate::cry(int control, int target, double angle) {
    return Gate{GateKind::Cry, {control}, {}, {target}, angle};
}
Gate Gate::fredkin(int control, int swap_a, int swap_b) {
    return Gate{GateKind::Fredkin, {control}, {}, {swap_a, swap_b}};
}

std::vector<int> Gate::qubits() const {
    std::vector<int> out = controls;
    out.insert(out.end(), targets.begin(), targets.end());
    return out;
}

void Circuit::append(Gate gate) {
    auto touched = gate.qubits();
    std::sort(touched.begin(), touched.end());
    if (std::adjacent_find(touched.begin(), touched.end()) != touched.end())
        raise(Errc::InvalidArgument, "gate touches a qubit twice");
    for (int q : touched)
        if (q < 0 || q >= width)
            raise(Errc::InvalidArgument, "qubit index " + std::to_string(q) +
                                             " outside circuit width " + std::to_string(width));
    if (gate.kind == GateKind::Mcx) {
        if (gate.controls.empty())
            raise(Errc::InvalidArgument, "MCX needs at least one control");
        if (gate.polarity.size() != gate.controls.size())
            raise(Errc::InvalidArgument, "MCX polarity list must match controls");
    }
    if ((gate.kind == GateKind::Ry || gate.kind == GateKind::Cry) && !std::isfinite(gate.angle))
        raise(Errc::InvalidArgument, "rotation angle must be finite");
    gates.push_back(std::move(gate));
}

void Circuit::append(const Circuit& other) {
    if (other.width != width)
        raise(Errc::WidthMismatch, "cannot append circuit of width " +
                                       std::to_string(other.width) + " to width " +
                                       std::to_string(width));
    for (const Gate& g : other.gates) append(g);
}

void Circuit::set_measured(std::vector<int> qubits) {
    std::sort(qubits.begin(), qubits.end());
    qubits.erase(std::unique(qubits.begin(), qubits.end()), qubits.end());
    for (int q : qubits)
        if (q < 0 || q >= width)
            raise(Errc::InvalidArgument, "measured qubit " + std::to_string(q) + " out of range");
    measured = std::move(qubits);
}

StateVector::StateVector(int width) : width(width) {
    amplitudes.assign(std::size_t(1) << width, {0.0, 0.0});
    amplitudes[0] = {1.0, 0.0};
}

double StateVector::norm() const {
    double acc = 0.0;
    for (const auto& a : amplitudes) acc += std::norm(a);
    return std::sqrt(acc);
}

namespace {

using Amp = std::complex<double>;

// Applies X on `target` restricted to indices where `mask_on` bits are set
// and `mask_off` bits are clear.
void apply_controlled_x(std::vector<Amp>& a, int target, std::uint64_t mask_on,
                        std::uint64_t mask_off) {
    const std::uint64_t t = std::uint64_t(1) << target;
    const std::uint64_t n = a.size();
    for (std::uint64_t i = 0; i < n; ++i) {
        if ((i & t) != 0) continue;
        if ((i & mask_on) != mask_on) continue;
        if ((i & mask_off) != 0) continue;
        std::swap(a[i], a[i | t]);
    }
}

void apply_ry(std::vector<Amp>& a, int target, double angle, std::uint64_t ctrl_mask) {
    const double c = std::cos(angle / 2.0);
    const double s = std::sin(angle / 2.0);
    const std::uint64_t t = std::uint64_t(1) << target;
    const std::uint64_t n = a.size();
    for (std::uint64_t i = 0; i < n; ++i) {
        if ((i & t) != 0) continue;
        if ((i & ctrl_mask) != ctrl_mask) continue;
        const Amp a0 = a[i];
        const Amp a1 = a[i | t];
        a[i] = c * a0 - s * a1;
        a[i | t] = s * a0 + c * a1;
    }
}

void apply_h(std::vector<Amp>& a, int target) {
    constexpr double inv_sqrt2 = 0.70710678118654752440;
    const std::uint64_t t = std::uint64_t(1) << target;
    const std::uint64_t n = a.size();
    for (std::uint64_t i = 0; i < n; ++i) {
        if ((i & t) != 0) continue;
        const Amp a0 = a[i];
        const Amp a1 = a[i | t];
        a[i] = inv_sqrt2 * (a0 + a1);
        a[i | t] = inv_sqrt2 * (a0 - a1);
    }
}

void apply_fredkin(std::vector<Amp>& a, int control, int swap_a, int swap_b) {
    const std::uint64_t c = std::uint64_t(1) << control;
    const std::uint64_t x = std::uint64_t(1) << swap_a;
    const std::uint64_t y = std::uint64_t(1) << swap_b;
    const std::uint64_t n = a.size();
    for (std::uint64_t i = 0; i < n; ++i) {
        // Visit each swapped pair once: swap_a set, swap_b clear.
        if ((i & c) == 0 || (i & x) == 0 || (i & y) != 0) continue;
        std::swap(a[i], a[(i & ~x) | y]);
    }
}

void apply_gate(std::vector<Amp>& a, const Gate& g) {
    switch (g.kind) {
    case GateKind::Not:
        apply_controlled_x(a, g.targets[0], 0, 0);
        break;
    case GateKind::H:
        apply_h(a, g.targets[0]);
        break;
    case GateKind::Cnot:
        apply_controlled_x(a, g.targets[0], std::uint64_t(1) << g.controls[0], 0);
        break;
    case GateKind::Toffoli:
        apply_controlled_x(a, g.targets[0],
                           (std::uint64_t(1) << g.controls[0]) |
                               (std::uint64_t(1) << g.controls[1]),
                           0);
        break;
    case GateKind::Mcx: {
        std::uint64_t on = 0, off = 0;
        for (std::size_t k = 0; k < g.controls.size(); ++k) {
            const std::uint64_t bit = std::uint64_t(1) << g.controls[k];
            if (g.polarity[k])
                on |= bit;
            else
                off |= bit;
        }
        apply_controlled_x(a, g.targets[0], on, off);
        break;
    }
    case GateKind::Ry:
        apply_ry(a, g.targets[0], g.angle, 0);
        break;
    case GateKind::Cry:
        apply_ry(a, g.targets[0], g.angle, std::uint64_t(1) << g.controls[0]);
        break;
    case GateKind::Fredkin:
        apply_fredkin(a, g.controls[0], g.targets[0], g.targets[1]);
        break;
    }
}

} // namespace

StateVector simulate(const Circuit& circuit) {
    return simulate(circuit, StateVector(circuit.width));
}

StateVector simulate(const Circuit& circuit, StateVector initial) {
    if (initial.width != circuit.width)
        raise(Errc::WidthMismatch, "initial state width " + std::to_string(initial.width) +
                                       " != circuit width " + std::to_string(circuit.width));
    for (const Gate& g : circuit.gates) apply_gate(initial.amplitudes, g);
    return initial;
}

std::vector<std::pair<std::string, double>>
marginal_probabilities(const StateVector& state, const std::vector<int>& measured) {
    if (measured.empty())
        raise(Errc::EmptyMeasureSet, "no qubits selected for measurement");
    std::vector<int> qs = measured;
    std::sort(qs.begin(), qs.end());
    qs.erase(std::unique(qs.begin(), qs.end()), qs.end());
    for (int q : qs)
        if (q < 0 || q >= state.width)
            raise(Errc::InvalidArgument, "measured qubit " + std::to_string(q) + " out of range");

    const int m = static_cast<int>(qs.size());
    std::vector<double> probs(std::size_t(1) << m, 0.0);
    for (std::size_t i = 0; i < state.amplitudes.size(); ++i) {
        const double p = std::norm(state.amplitudes[i]);
        if (p == 0.0) continue;
        std::uint64_t packed = 0;
        for (int j = 0; j < m; ++j)
            if (i & (std::uint64_t(1) << qs[j])) packed |= std::uint64_t(1) << j;
        probs[packed] += p;
    }

    std::vector<std::pair<std::string, double>> out;
    for (std::size_t packed = 0; packed < probs.size(); ++packed) {
        if (probs[packed] <= 1e-12) continue;
        std::string bits(m, '0');
        for (int j = 0; j < m; ++j)
            if (packed & (std::uint64_t(1) << (m - 1 - j))) bits[j] = '1';
        out.emplace_back(std::move(bits), probs[packed]);
    }
    return out;
}

Counts sample(const StateVector& state, const std::vector<int>& measured, std::int64_t shots,
              std::uint64_t seed) {
    if (shots < 1)
        raise(Errc::InvalidArgument, "shots must be >= 1");
    const auto dist = marginal_probabilities(state, measured);

    std::vector<double> cdf(dist.size());
    double acc = 0.0;
    for (std::size_t i = 0; i < dist.size(); ++i) {
        acc += dist[i].second;
        cdf[i] = acc;
    }

    // mt19937_64 with a fixed 53-bit uniform mapping keeps results identical
    // across platforms; std::discrete_distribution is implementation-defined.
    std::mt19937_64 rng(seed);
    Counts counts;
    counts.shots = shots;
    for (std::int64_t s = 0; s < shots; ++s) {
        const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53 * acc;
        const auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
        const std::size_t idx = std::min<std::size_t>(it - cdf.begin(), dist.size() - 1);
        ++counts.tally[dist[idx].first];
    }
    return counts;
}

CostTable default_cost_table() {
    CostTable table;
    table.base = {{GateKind::Not, 1},     {GateKind::H, 1},       {GateKind::Cnot, 1},
                  {GateKind::Ry, 1},      {GateKind::Cry, 4},     {GateKind::Toffoli, 5},
                  {GateKind::Fredkin, 5}};
    table.mcx_by_controls[1] = 1;
    for (int k = 2; k <= 24; ++k) table.mcx_by_controls[k] = 5 * (2 * k - 3);
    return table;
}

CircuitStats cost_and_depth(const Circuit& circuit, const CostTable& table) {
    CircuitStats stats;
    stats.ancilla_count = static_cast<int>(circuit.ancillas.size());
    std::vector<int> layer_of(circuit.width, 0);
    for (const Gate& g : circuit.gates) {
        if (g.kind == GateKind::Mcx) {
            const auto it = table.mcx_by_controls.find(static_cast<int>(g.controls.size()));
            if (it == table.mcx_by_controls.end())
                raise(Errc::UnknownGateKind, "no cost entry for MCX with " +
                                                 std::to_string(g.controls.size()) + " controls");
            stats.quantum_cost += it->second;
        } else {
            const auto it = table.base.find(g.kind);
            if (it == table.base.end())
                raise(Errc::UnknownGateKind,
                      std::string("no cost entry for ") + gate_kind_name(g.kind));
            stats.quantum_cost += it->second;
        }
        int start = 0;
        for (int q : g.qubits()) start = std::max(start, layer_of[q]);
        for (int q : g.qubits()) layer_of[q] = start + 1;
        stats.depth = std::max(stats.depth, start + 1);
    }
    return stats;
}

std::string circuit_to_text(const Circuit& circuit) {
    std::ostringstream out;
    out.precision(15);
    out << "QUBITS " << circuit.width << "\n";
    if (!circuit.ancillas.empty()) {
        out << "ANCILLA";
        for (int q : circuit.ancillas) out << ' ' << q;
        out << "\n";
    }
    for (const Gate& g : circuit.gates) {
        out << gate_kind_name(g.kind);
        if (g.kind == GateKind::Mcx) {
            for (std::size_t k = 0; k < g.controls.size(); ++k)
                out << ' ' << (g.polarity[k] ? "" : "!") << g.controls[k];
        } else {
            for (int q : g.controls) out << ' ' << q;
        }
        for (int q : g.targets) out << ' ' << q;
        if (g.kind == GateKind::Ry || g.kind == GateKind::Cry) out << ' ' << g.angle;
        out << "\n";
    }
    if (!circuit.measured.empty()) {
        out << "MEASURE";
        for (int q : circuit.measured) out << ' ' << q;
        out << "\n";
    }
    return out.str();
}

Circuit circuit_from_text(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    Circuit circuit(0);
    bool have_width = false;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        std::string kind;
        ls >> kind;
        if (kind == "QUBITS") {
            int w;
            if (!(ls >> w)) raise(Errc::InvalidArgument, "bad QUBITS line: " + line);
            circuit = Circuit(w);
            have_width = true;
            continue;
        }
        if (!have_width) raise(Errc::InvalidArgument, "circuit text must start with QUBITS");
        if (kind == "ANCILLA") {
            int q;
            while (ls >> q) circuit.ancillas.push_back(q);
            continue;
        }
        if (kind == "MEASURE") {
            std::vector<int> qs;
            int q;
            while (ls >> q) qs.push_back(q);
            circuit.set_measured(std::move(qs));
            continue;
        }
        std::vector<std::string> tokens;
        std::string tok;
        while (ls >> tok) tokens.push_back(tok);
        auto to_int = [&](const std::string& t) {
            try {
                return std::stoi(t);
            } catch (...) {
                raise(Errc::InvalidArgument, "bad token '" + t + "' in line: " + line);
            }
        };
        if (kind == "NOT" && tokens.size() == 1)
            circuit.append(Gate::not_gate(to_int(tokens[0])));
        else if (kind == "H" && tokens.size() == 1)
            circuit.append(Gate::h(to_int(tokens[0])));
        else if (kind == "CNOT" && tokens.size() == 2)
            circuit.append(Gate::cnot(to_int(tokens[0]), to_int(tokens[1])));
        else if (kind == "TOFFOLI" && tokens.size() == 3)
            circuit.append(Gate::toffoli(to_int(tokens[0]), to_int(tokens[1]), to_int(tokens[2])));
        else if (kind == "FREDKIN" && tokens.size() == 3)
            circuit.append(Gate::fredkin(to_int(tokens[0]), to_int(tokens[1]), to_int(tokens[2])));
        else if (kind == "RY" && tokens.size() == 2)
            circuit.append(Gate::ry(to_int(tokens[0]), std::stod(tokens[1])));
        else if (kind == "CRY" && tokens.size() == 3)
            circuit.append(Gate::cry(to_int(tokens[0]), to_int(tokens[1]), std::stod(tokens[2])));
        else if (kind == "MCX" && tokens.size() >= 2) {
            std::vector<int> controls;
            std::vector<bool> polarity;
            for (std::size_t k = 0; k + 1 < tokens.size(); ++k) {
                std::string t = tokens[k];
                bool positive = true;
                if (!t.empty() && t[0] == '!') {
                    positive = false;
                    t = t.substr(1);
                }
                controls.push_back(to_int(t));
                polarity.push_back(positive);
            }
            circuit.append(Gate::mcx(std::move(controls), std::move(polarity),
                                     to_int(tokens.back())));
        } else {
            raise(Errc::UnknownGateKind, "cannot parse line: " + line);
        }
    }
    if (!have_width) raise(Errc::InvalidArgument, "empty circuit text");
    return circuit;
}

} // namespace umthresh
