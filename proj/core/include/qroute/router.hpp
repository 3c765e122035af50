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

#include <cstdint>
#include <utility>
#include <vector>

#include "qroute/arch.hpp"
#include "qroute/gate.hpp"
#include "qroute/mapping.hpp"
#include "qroute/schedule.hpp"

namespace qroute {

struct RouterOptions {
    /// When false, swaps are ranked by the distance heuristic alone
    /// (the lattice balance tiebreaker is skipped).
    bool use_fine = true;
    /// When true, a deadlock raises InternalError instead of forcing the
    /// best candidate swap.
    bool deadlock_error = false;
    /// Upper bound on cycles that insert swaps; 0 selects the default
    /// 10 * |gates| * num_physical. Overflow means a progress bug.
    int64_t iteration_budget = 0;
    /// Only consumed by initial-mapping callers; the router itself is
    /// deterministic.
    uint64_t seed = 0;
};

/// A coupled physical-qubit pair considered for insertion, with its
/// two-level priority.
struct CandidateSwap {
    int a = 0;
    int b = 0;
    long long h_basic = 0;
    long long h_fine = 0;
};

/// Subset of the frontier `cf` that can launch now: every mapped operand
/// free at t, and coupled operands for two-qubit kinds.
std::vector<int> directly_executable(const Circuit &c, const std::vector<int> &cf,
                                     const QubitLocks &locks, const Mapping &pi,
                                     const Architecture &arch, int64_t t);

/// Lock-free edges incident to the mapped operands of the pending gates,
/// deduplicated, ascending (a, b). Edges may reach an unoccupied physical
/// qubit; the swap then just moves the logical occupant.
std::vector<std::pair<int, int>> candidate_swaps(const Circuit &c,
                                                 const std::vector<int> &pending,
                                                 const QubitLocks &locks, const Mapping &pi,
                                                 const Architecture &arch, int64_t t);

/// Total coupling-distance reduction the swap brings to the given
/// two-qubit frontier gates: sum of L(pi, g) - L(pi_after_swap, g).
long long h_basic(std::pair<int, int> swap_edge, const Circuit &c,
                  const std::vector<int> &cf_two_qubit, const Mapping &pi,
                  const DistanceMatrix &dist);

/// Lattice balance tiebreaker: sum over pending gates of
/// -|VD(pi_new, g) - HD(pi_new, g)|. Zero when the architecture has no
/// grid coordinates.
long long h_fine(std::pair<int, int> swap_edge, const Circuit &c,
                 const std::vector<int> &pending, const Mapping &pi, const Architecture &arch);

/// Next event time: the smallest lock expiry strictly after t, or t when
/// every qubit is already free (the caller then handles deadlock).
int64_t advance_time(const QubitLocks &locks, int64_t t);

/// The duration-aware remapper. Simulates the execution timeline with
/// per-qubit locks: each cycle launches every directly executable
/// frontier gate, then greedily inserts positive-priority lock-free swaps
/// ranked by (h_basic, h_fine, ascending endpoints). If nothing launched,
/// no swap is positive and all qubits are free, the single best candidate
/// is forced to break the deadlock.
MappedSchedule route(const Circuit &c, const Architecture &arch, const Mapping &pi0,
                     const RouterOptions &opts = {});

} // namespace qroute
