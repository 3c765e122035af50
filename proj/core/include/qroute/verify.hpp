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

#include <complex>
#include <string>
#include <vector>

#include "qroute/arch.hpp"
#include "qroute/gate.hpp"
#include "qroute/schedule.hpp"

namespace qroute {

/// Deliberately naive dense simulator (O(2^n) amplitudes): an oracle, not
/// a product feature. Qubit q is bit q of the basis index. Measure and
/// barrier act as identity.
class Statevector {
  public:
    explicit Statevector(int num_qubits);
    Statevector(int num_qubits, std::vector<std::complex<double>> amplitudes);

    void apply(const Gate &g);
    int num_qubits() const { return n_; }
    const std::vector<std::complex<double>> &amplitudes() const { return amp_; }

    /// |<a|b>| for unit vectors; 1 means equal up to global phase.
    static double overlap(const Statevector &a, const Statevector &b);

  private:
    int n_;
    std::vector<std::complex<double>> amp_;
};

Statevector simulate(const Circuit &c);
Statevector simulate(const MappedCircuit &mc);

struct CheckResult {
    bool ok = true;
    std::string message;
};

/// One inserted swap with the mapping on either side of it.
struct PermutationStep {
    std::pair<int, int> edge;
    Mapping before;
    Mapping after;
};

/// Time-ordered swap history of a routed schedule; composing the steps
/// from the initial mapping yields the final mapping.
struct PermutationTrace {
    std::vector<PermutationStep> steps;
};

PermutationTrace trace_permutations(const MappedSchedule &routed);

/// Replays the routed schedule in start-time order (ties by emission
/// order), tracking the mapping through inserted swaps. Checks that every
/// original gate appears exactly once on the physical qubits its logical
/// operands were mapped to, that swaps are exactly the inserted ones,
/// that the final mapping is reproduced, and that every non-commuting
/// original pair runs in dependency-respecting time order.
CheckResult permutation_check(const Circuit &original, const MappedSchedule &routed,
                              const Architecture &arch);

/// Exact statevector equivalence of original and routed circuits, with the
/// routed state read back through the final mapping and compared up to
/// global phase. Throws Error above 12 qubits.
CheckResult statevector_equiv(const Circuit &original, const MappedSchedule &routed,
                              double tol = 1e-9);

/// Same check for a mapped circuit alone (used for swap decomposition).
CheckResult statevector_equiv_mapped(const MappedCircuit &a, const MappedCircuit &b,
                                     double tol = 1e-9);

} // namespace qroute
