/*
 * Copyright (c) the qroute authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <string>
#include <vector>

namespace qroute {

enum class GateKind {
    H,
    X,
    Y,
    Z,
    S,
    Sdg,
    T,
    Tdg,
    Rx,
    Ry,
    Rz,
    U1,
    U2,
    U3,
    Cx,
    Swap,
    Measure,
    Barrier,
};

constexpr int kNumGateKinds = 18;

const std::string &kind_name(GateKind k);

/// Looks up a gate kind by its OpenQASM mnemonic ("cx", "rz", ...).
/// Returns false if the name is not a supported kind.
bool kind_from_name(const std::string &name, GateKind &out);

/// Number of qubit operands; -1 for barrier (variadic, >= 1).
int kind_arity(GateKind k);

/// Number of angle parameters the kind expects.
int kind_num_params(GateKind k);

inline bool is_two_qubit(GateKind k) { return k == GateKind::Cx || k == GateKind::Swap; }
inline bool is_single_qubit(GateKind k) {
    return !is_two_qubit(k) && k != GateKind::Barrier;
}

/// One gate of a circuit. Qubit indices are logical in a Circuit and
/// physical in a MappedCircuit; the structure is shared.
struct Gate {
    int id = -1; ///< position in the owning circuit; -1 for synthesized gates
    GateKind kind = GateKind::H;
    std::vector<double> params;
    std::vector<int> qubits;
    int clbit = -1; ///< classical target of a measure, -1 otherwise

    bool two_qubit() const { return is_two_qubit(kind); }
};

/// An ordered gate sequence over logical qubits 0..num_logical-1.
/// Gate ids equal list positions.
struct Circuit {
    std::vector<Gate> gates;
    int num_logical = 0;
    int num_clbits = 0;
    /// Source register bookkeeping (name, size) in declaration order.
    std::vector<std::pair<std::string, int>> qregs;
    std::vector<std::pair<std::string, int>> cregs;

    /// Gate order reversed, ids renumbered to positions. Gates themselves
    /// are not inverted; routing only sees their qubit footprint.
    Circuit reversed() const;
};

/// Checks arity, operand distinctness and ranges; throws QasmError.
void validate_gate(const Gate &g, int num_qubits);

} // namespace qroute
