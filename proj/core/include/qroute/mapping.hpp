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

namespace qroute {

/// Injective assignment of logical to physical qubits. Physical qubits
/// with no logical occupant map back to -1. Forward and reverse views are
/// kept mutually consistent.
class Mapping {
  public:
    Mapping() = default;

    /// Builds from a forward table (logical -> physical). Throws
    /// CapacityError when num_logical > num_physical and InternalError on
    /// non-injective or out-of-range entries.
    Mapping(std::vector<int> forward, int num_physical);

    static Mapping identity(int num_logical, int num_physical);

    int num_logical() const { return static_cast<int>(fwd_.size()); }
    int num_physical() const { return static_cast<int>(rev_.size()); }

    int physical(int logical) const { return fwd_[logical]; }
    /// Logical occupant of a physical qubit, or -1.
    int logical_at(int physical) const { return rev_[physical]; }

    /// Exchanges the logical occupants of two physical qubits. Either side
    /// may be unoccupied.
    void swap_physical(int p_a, int p_b);

    const std::vector<int> &forward() const { return fwd_; }

    bool operator==(const Mapping &) const = default;

  private:
    std::vector<int> fwd_;
    std::vector<int> rev_;
};

} // namespace qroute
