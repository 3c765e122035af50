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
#include <string>
#include <vector>

namespace qroute {

/// Per-run routing report. Serialized as YAML with schema_version 1;
/// emission is deterministic byte-for-byte except wall_clock_ms.
struct RouteReport {
    std::string benchmark;
    std::string architecture;
    std::string router; // "comet" or "baseline"
    uint64_t seed = 0;
    std::string initial;      // initial mapping strategy
    int64_t t_o = 0;          // original weighted depth, coupling ignored
    int64_t weighted_depth = 0;
    int swap_count = 0;
    int total_gates = 0;      // gates in the source circuit
    int cx_gates = 0;
    int64_t wall_clock_ms = 0;
    std::vector<int> initial_mapping;
    std::vector<int> final_mapping;
};

std::string to_yaml(const RouteReport &r);

struct CompareRow {
    std::string benchmark;
    std::string architecture;
    bool ok = true;
    std::string error;
    int64_t t_o = 0;
    int64_t t_c = 0; // duration-aware router depth
    int64_t t_s = 0; // baseline depth
    int swaps_comet = 0;
    int swaps_baseline = 0;
    double ratio = 0.0; // t_s / t_c
};

struct CompareReport {
    uint64_t seed = 0;
    std::vector<std::string> architectures;
    std::vector<CompareRow> rows;
    int compared = 0; // rows included in the means
    int wins = 0;     // rows with t_c <= t_s
    double arithmetic_mean = 0.0;
    double geometric_mean = 0.0;
};

std::string to_yaml(const CompareReport &r);

/// Fixed-point table for terminal output.
std::string to_table(const CompareReport &r);

} // namespace qroute
