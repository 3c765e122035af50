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

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qroute/gate.hpp"

namespace qroute {

/// Gate durations in quantum clock cycles. Construction fills defaults:
/// single-qubit kinds and measure take 1 cycle, cx 2, swap 6, barrier 0.
class DurationMap {
  public:
    DurationMap();

    int cycles(GateKind k) const { return cycles_[static_cast<int>(k)]; }
    /// Lookup by OpenQASM mnemonic; throws ArchError on unknown kinds.
    int cycles(const std::string &kind_name) const;
    void set(GateKind k, int cycles);

    bool operator==(const DurationMap &) const = default;

  private:
    std::array<int, kNumGateKinds> cycles_;
};

struct GridPos {
    int row = 0;
    int col = 0;
    bool operator==(const GridPos &) const = default;
};

/// All-pairs hop counts of the coupling graph (unweighted BFS).
class DistanceMatrix {
  public:
    DistanceMatrix() = default;
    DistanceMatrix(int n, std::vector<int> dist) : n_(n), dist_(std::move(dist)) {}

    int at(int p, int q) const { return dist_[static_cast<size_t>(p) * n_ + q]; }
    int size() const { return n_; }

  private:
    int n_ = 0;
    std::vector<int> dist_;
};

/// Static device model: physical qubits, symmetric coupling graph,
/// optional lattice coordinates and a gate duration map. Immutable after
/// construction; safe to share across concurrent routing jobs.
class Architecture {
  public:
    /// Validates and normalizes. Throws ArchError naming the violated
    /// invariant: out-of-range qubit, self-loop, duplicate edge,
    /// disconnected graph, non-adjacent or duplicated grid coordinates.
    Architecture(std::string name, int num_qubits, std::vector<std::pair<int, int>> edges,
                 std::optional<std::vector<GridPos>> grid = std::nullopt,
                 DurationMap durations = DurationMap());

    const std::string &name() const { return name_; }
    int num_qubits() const { return num_qubits_; }
    const std::vector<std::pair<int, int>> &edges() const { return edges_; }
    const std::vector<int> &neighbors(int p) const { return adj_[p]; }
    bool coupled(int p, int q) const;

    bool has_grid() const { return grid_.has_value(); }
    const std::vector<GridPos> &grid() const { return *grid_; }

    const DurationMap &durations() const { return durations_; }
    int duration(GateKind k) const { return durations_.cycles(k); }

  private:
    std::string name_;
    int num_qubits_;
    std::vector<std::pair<int, int>> edges_; // normalized a < b, sorted
    std::vector<std::vector<int>> adj_;
    std::optional<std::vector<GridPos>> grid_;
    DurationMap durations_;
};

/// BFS from every vertex. The Architecture invariant guarantees
/// connectivity, so every entry is finite.
DistanceMatrix compute_distances(const Architecture &arch);

/// (HD, VD) = (|col a - col b|, |row a - row b|) on the lattice.
/// Throws ArchError when the architecture has no grid coordinates.
std::pair<int, int> hd_vd(const Architecture &arch, int p_a, int p_b);

/// Parses an architecture description document (YAML: name, num_qubits,
/// edges, optional grid, optional durations). Throws ArchError with the
/// offending line or field.
Architecture load_architecture_text(const std::string &text,
                                    const std::string &source_name = "<string>");
Architecture load_architecture_file(const std::string &path);

/// Bundled architectures: q16-melbourne, q20-tokyo, grid-6x6, sycamore-54,
/// plus the parameterized families line-N and grid-RxC. Throws ArchError
/// for unknown names. Bundled edge-list files are resolved under the data
/// directory (QROUTE_DATA_DIR overrides the built-in location).
Architecture builtin(const std::string &name);

/// Names builtin() resolves, for `arch list`.
std::vector<std::string> builtin_names();

/// Duration presets addressable by `--durations`: "default" or a file path
/// (YAML map gate name -> cycles under a `durations` key).
DurationMap load_durations(const std::string &name_or_path);

/// Convenience generators used by the builtin families.
Architecture make_line(int n);
Architecture make_grid(int rows, int cols, const std::string &name = "");

} // namespace qroute
