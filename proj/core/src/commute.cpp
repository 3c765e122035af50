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

#include "qroute/commute.hpp"

#include <algorithm>

namespace qroute {

CommClass comm_class(GateKind kind, int operand_role) {
    switch (kind) {
    case GateKind::Z:
    case GateKind::S:
    case GateKind::Sdg:
    case GateKind::T:
    case GateKind::Tdg:
    case GateKind::Rz:
    case GateKind::U1:
        return CommClass::ZDiag;
    case GateKind::X:
    case GateKind::Rx:
        return CommClass::XAxis;
    case GateKind::Cx:
        return operand_role == 0 ? CommClass::ZDiag : CommClass::XAxis;
    default:
        return CommClass::None;
    }
}

bool commutes(const Gate &g1, int role1, const Gate &g2, int role2) {
    CommClass c1 = comm_class(g1.kind, role1);
    CommClass c2 = comm_class(g2.kind, role2);
    return c1 != CommClass::None && c1 == c2;
}

bool reorderable(const Gate &g1, const Gate &g2) {
    for (size_t i = 0; i < g1.qubits.size(); ++i)
        for (size_t j = 0; j < g2.qubits.size(); ++j)
            if (g1.qubits[i] == g2.qubits[j] &&
                !commutes(g1, static_cast<int>(i), g2, static_cast<int>(j)))
                return false;
    return true;
}

DependencyDag build_dag(const Circuit &c) {
    DependencyDag dag;
    dag.qubit_gates.assign(c.num_logical, {});
    dag.direct_preds.assign(c.gates.size(), {});
    std::vector<int> last(c.num_logical, -1);
    for (const Gate &g : c.gates) {
        auto &preds = dag.direct_preds[g.id];
        for (int q : g.qubits) {
            dag.qubit_gates[q].push_back(g.id);
            if (last[q] >= 0)
                preds.push_back(last[q]);
            last[q] = g.id;
        }
        std::sort(preds.begin(), preds.end());
        preds.erase(std::unique(preds.begin(), preds.end()), preds.end());
    }
    return dag;
}

std::vector<int> cf_frontier(const Circuit &c, const DependencyDag &dag,
                             const std::vector<char> &executed) {
    // Per-qubit summary of the classes of earlier unexecuted sharers:
    // kEmpty admits anything, a class admits only itself, kMixed nothing.
    constexpr int kEmpty = -1;
    constexpr int kMixed = -2;
    std::vector<int> seen(dag.qubit_gates.size(), kEmpty);

    std::vector<int> frontier;
    for (const Gate &g : c.gates) {
        if (executed[g.id])
            continue;
        bool eligible = true;
        for (size_t r = 0; r < g.qubits.size(); ++r) {
            int state = seen[g.qubits[r]];
            if (state == kEmpty)
                continue;
            CommClass cls = comm_class(g.kind, static_cast<int>(r));
            if (state == kMixed || cls == CommClass::None || state != static_cast<int>(cls)) {
                eligible = false;
                break;
            }
        }
        if (eligible)
            frontier.push_back(g.id);
        for (size_t r = 0; r < g.qubits.size(); ++r) {
            int &state = seen[g.qubits[r]];
            CommClass cls = comm_class(g.kind, static_cast<int>(r));
            if (cls == CommClass::None)
                state = kMixed;
            else if (state == kEmpty)
                state = static_cast<int>(cls);
            else if (state != static_cast<int>(cls))
                state = kMixed;
        }
    }
    return frontier;
}

} // namespace qroute
