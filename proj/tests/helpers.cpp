#include "helpers.hpp"

#include <cmath>

namespace qroute::testing {

Circuit random_circuit(int num_qubits, int num_gates, uint64_t seed,
                       const CircuitOptions &opts) {
    Rng rng(seed);
    Circuit c;
    c.num_logical = num_qubits;
    c.qregs.emplace_back("q", num_qubits);
    int clbits = 0;
    for (int i = 0; i < num_gates; ++i) {
        Gate g;
        int roll = rng.below(100);
        if (roll < 40 && num_qubits >= 2) {
            g.kind = GateKind::Cx;
        } else if (roll < 44 && num_qubits >= 2 && opts.allow_swap) {
            g.kind = GateKind::Swap;
        } else if (roll < 48 && opts.allow_measure) {
            g.kind = GateKind::Measure;
        } else if (roll < 51 && opts.allow_barrier) {
            g.kind = GateKind::Barrier;
        } else {
            static const GateKind singles[] = {GateKind::H,  GateKind::X,   GateKind::Y,
                                               GateKind::Z,  GateKind::S,   GateKind::Sdg,
                                               GateKind::T,  GateKind::Tdg, GateKind::Rx,
                                               GateKind::Ry, GateKind::Rz,  GateKind::U1,
                                               GateKind::U2, GateKind::U3};
            g.kind = singles[rng.below(14)];
        }
        if (g.kind == GateKind::Barrier) {
            int span = 1 + rng.below(std::min(3, num_qubits));
            int start = rng.below(num_qubits);
            for (int k = 0; k < span; ++k)
                g.qubits.push_back((start + k) % num_qubits);
            std::sort(g.qubits.begin(), g.qubits.end());
            g.qubits.erase(std::unique(g.qubits.begin(), g.qubits.end()), g.qubits.end());
        } else if (is_two_qubit(g.kind)) {
            int a = rng.below(num_qubits);
            int b = rng.below(num_qubits - 1);
            if (b >= a)
                ++b;
            g.qubits = {a, b};
        } else {
            g.qubits = {rng.below(num_qubits)};
            if (g.kind == GateKind::Measure)
                g.clbit = clbits++;
        }
        for (int p = 0; p < kind_num_params(g.kind); ++p)
            g.params.push_back(rng.angle());
        g.id = static_cast<int>(c.gates.size());
        c.gates.push_back(std::move(g));
    }
    c.num_clbits = clbits;
    if (clbits > 0)
        c.cregs.emplace_back("c", clbits);
    return c;
}

bool oracle_commutes(const Gate &g1, const Gate &g2, int num_qubits) {
    const size_t dim = size_t{1} << num_qubits;
    for (size_t basis = 0; basis < dim; ++basis) {
        std::vector<std::complex<double>> amp(dim, 0.0);
        amp[basis] = 1.0;
        Statevector a(num_qubits, amp);
        Statevector b(num_qubits, amp);
        a.apply(g1);
        a.apply(g2);
        b.apply(g2);
        b.apply(g1);
        for (size_t i = 0; i < dim; ++i)
            if (std::abs(a.amplitudes()[i] - b.amplitudes()[i]) > 1e-12)
                return false;
    }
    return true;
}

Gate make_gate(GateKind kind, std::vector<int> qubits, std::vector<double> params, int id) {
    Gate g;
    g.id = id;
    g.kind = kind;
    g.qubits = std::move(qubits);
    g.params = std::move(params);
    return g;
}

Circuit make_circuit(int num_qubits, std::vector<Gate> gates) {
    Circuit c;
    c.num_logical = num_qubits;
    c.qregs.emplace_back("q", num_qubits);
    c.gates = std::move(gates);
    for (size_t i = 0; i < c.gates.size(); ++i) {
        c.gates[i].id = static_cast<int>(i);
        if (c.gates[i].kind == GateKind::Measure && c.gates[i].clbit < 0)
            c.gates[i].clbit = c.num_clbits;
        if (c.gates[i].kind == GateKind::Measure)
            c.num_clbits = std::max(c.num_clbits, c.gates[i].clbit + 1);
    }
    return c;
}

} // namespace qroute::testing
