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

#include <vector>

#include "qroute/gate.hpp"

namespace qroute {

/// Commutation class of a gate kind at one operand position. Two gates
/// sharing a qubit may be reordered iff their classes on that qubit are
/// equal and not None: Z-diagonal kinds (z, s, sdg, t, tdg, rz, u1 and a
/// cx control) commute pairwise, as do X-axis kinds (x, rx, a cx target).
/// Everything else, including barrier and measure, commutes with nothing.
enum class CommClass { None, ZDiag, XAxis };

CommClass comm_class(GateKind kind, int operand_role);

/// True iff the two gates are order-independent on a qubit they share in
/// the given operand roles. Symmetric in its arguments.
bool commutes(const Gate &g1, int role1, const Gate &g2, int role2);

/// True iff g1 and g2 may be reordered: they either share no qubit or
/// commute on every shared qubit.
bool reorderable(const Gate &g1, const Gate &g2);

/// Per-qubit dependency structure of a circuit.
struct DependencyDag {
    /// Gate ids touching each logical qubit, in program order.
    std::vector<std::vector<int>> qubit_gates;
    /// Direct predecessors: for each gate, the nearest earlier sharer on
    /// each of its qubits (deduplicated).
    std::vector<std::vector<int>> direct_preds;
};

DependencyDag build_dag(const Circuit &c);

/// The commutation-forward frontier I_CF: every unexecuted gate whose
/// earlier unexecuted sharers all commute with it on every shared qubit.
/// Returned in ascending gate id; never empty while unexecuted gates
/// remain. `executed` is indexed by gate id.
std::vector<int> cf_frontier(const Circuit &c, const DependencyDag &dag,
                             const std::vector<char> &executed);

} // namespace qroute
