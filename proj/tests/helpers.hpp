#pragma once

#include <cstdint>
#include <vector>

#include "qroute/arch.hpp"
#include "qroute/gate.hpp"
#include "qroute/verify.hpp"

namespace qroute::testing {

/// Deterministic generator so fixtures are identical on every platform.
struct Rng {
    uint64_t state;
    explicit Rng(uint64_t seed) : state(seed) {}
    uint64_t next() {
        uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    int below(int n) { return static_cast<int>(next() % static_cast<uint64_t>(n)); }
    double angle() { return (static_cast<double>(next() % 10000) / 10000.0 - 0.5) * 6.0; }
    bool chance(int percent) { return below(100) < percent; }
};

struct CircuitOptions {
    bool allow_swap = true;
    bool allow_measure = true;
    bool allow_barrier = true;
};

/// Random supported-subset circuit; unitary-only kinds dominate so the
/// statevector oracle stays meaningful.
Circuit random_circuit(int num_qubits, int num_gates, uint64_t seed,
                       const CircuitOptions &opts = {});

/// Independent commutation oracle: applies g1;g2 and g2;g1 to every basis
/// state of an n-qubit register and compares amplitudes exactly. True iff
/// the unitaries commute (within 1e-12).
bool oracle_commutes(const Gate &g1, const Gate &g2, int num_qubits);

/// Builds a gate quickly in tests.
Gate make_gate(GateKind kind, std::vector<int> qubits, std::vector<double> params = {},
               int id = -1);

Circuit make_circuit(int num_qubits, std::vector<Gate> gates);

} // namespace qroute::testing
