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

#include "qroute/gate.hpp"

#include <array>
#include <unordered_map>

#include "qroute/errors.hpp"

namespace qroute {

namespace {

const std::array<std::string, kNumGateKinds> kKindNames = {
    "h",  "x",  "y",  "z",  "s",  "sdg", "t",    "tdg",
    "rx", "ry", "rz", "u1", "u2", "u3",  "cx",   "swap",
    "measure", "barrier"};

const std::unordered_map<std::string, GateKind> &name_table() {
    static const std::unordered_map<std::string, GateKind> table = [] {
        std::unordered_map<std::string, GateKind> t;
        for (int i = 0; i < kNumGateKinds; ++i)
            t.emplace(kKindNames[i], static_cast<GateKind>(i));
        return t;
    }();
    return table;
}

} // namespace

const std::string &kind_name(GateKind k) { return kKindNames[static_cast<int>(k)]; }

bool kind_from_name(const std::string &name, GateKind &out) {
    auto it = name_table().find(name);
    if (it == name_table().end())
        return false;
    out = it->second;
    return true;
}

int kind_arity(GateKind k) {
    switch (k) {
    case GateKind::Cx:
    case GateKind::Swap:
        return 2;
    case GateKind::Barrier:
        return -1;
    default:
        return 1;
    }
}

int kind_num_params(GateKind k) {
    switch (k) {
    case GateKind::Rx:
    case GateKind::Ry:
    case GateKind::Rz:
    case GateKind::U1:
        return 1;
    case GateKind::U2:
        return 2;
    case GateKind::U3:
        return 3;
    default:
        return 0;
    }
}

Circuit Circuit::reversed() const {
    Circuit rev = *this;
    rev.gates.assign(gates.rbegin(), gates.rend());
    for (size_t i = 0; i < rev.gates.size(); ++i)
        rev.gates[i].id = static_cast<int>(i);
    return rev;
}

void validate_gate(const Gate &g, int num_qubits) {
    int arity = kind_arity(g.kind);
    if (arity >= 0 && static_cast<int>(g.qubits.size()) != arity)
        throw QasmError("gate '" + kind_name(g.kind) + "' expects " + std::to_string(arity) +
                        " qubit operand(s), got " + std::to_string(g.qubits.size()));
    if (g.kind == GateKind::Barrier && g.qubits.empty())
        throw QasmError("barrier needs at least one qubit operand");
    if (static_cast<int>(g.params.size()) != kind_num_params(g.kind))
        throw QasmError("gate '" + kind_name(g.kind) + "' expects " +
                        std::to_string(kind_num_params(g.kind)) + " parameter(s)");
    for (size_t i = 0; i < g.qubits.size(); ++i) {
        if (g.qubits[i] < 0 || g.qubits[i] >= num_qubits)
            throw QasmError("qubit index " + std::to_string(g.qubits[i]) + " out of range");
        for (size_t j = i + 1; j < g.qubits.size(); ++j)
            if (g.qubits[i] == g.qubits[j])
                throw QasmError("gate '" + kind_name(g.kind) + "' has repeated qubit operand " +
                                std::to_string(g.qubits[i]));
    }
}

} // namespace qroute
