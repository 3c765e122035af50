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

#include <algorithm>
#include <cstdint>
#include <vector>

#include "qroute/mapped.hpp"

namespace qroute {

/// Per-physical-qubit busy-until timestamps. A qubit p is free at time t
/// iff t_end[p] <= t; t_end never decreases.
class QubitLocks {
  public:
    explicit QubitLocks(int num_qubits) : t_end_(num_qubits, 0) {}

    bool free_at(int p, int64_t t) const { return t_end_[p] <= t; }
    int64_t until(int p) const { return t_end_[p]; }
    void lock(int p, int64_t until) { t_end_[p] = std::max(t_end_[p], until); }
    bool all_free(int64_t t) const {
        return std::all_of(t_end_.begin(), t_end_.end(), [t](int64_t e) { return e <= t; });
    }
    int size() const { return static_cast<int>(t_end_.size()); }

  private:
    std::vector<int64_t> t_end_;
};

/// A gate pinned to a start cycle; it occupies its operand qubits over
/// [start, start + duration).
struct ScheduledGate {
    RoutedGate g;
    int64_t start = 0;
};

struct RouterStats {
    int64_t cycles = 0;          ///< scheduler loop iterations
    int64_t swap_cycles = 0;     ///< cycles that applied at least one swap
    int reorder_events = 0;      ///< launches ahead of an earlier unexecuted gate
    int deadlock_events = 0;     ///< forced-swap rule activations
};

/// Routing/scheduling result: the schedule, the emitted circuit, and the
/// total execution time (weighted depth = max start + duration).
struct MappedSchedule {
    std::vector<ScheduledGate> scheduled; // emission order
    MappedCircuit mapped_circuit;
    int64_t weighted_depth = 0;
    int swap_count = 0;
    RouterStats stats;
};

} // namespace qroute
