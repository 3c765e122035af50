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

#include "qroute/report.hpp"

#include <cstdio>

namespace qroute {

namespace {

std::string fixed4(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.4f", v);
    return buf;
}

std::string int_list(const std::vector<int> &v) {
    std::string out = "[";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i)
            out += ", ";
        out += std::to_string(v[i]);
    }
    return out + "]";
}

} // namespace

std::string to_yaml(const RouteReport &r) {
    std::string out;
    out += "schema_version: 1\n";
    out += "kind: route\n";
    out += "benchmark: " + r.benchmark + "\n";
    out += "architecture: " + r.architecture + "\n";
    out += "router: " + r.router + "\n";
    out += "initial: " + r.initial + "\n";
    out += "seed: " + std::to_string(r.seed) + "\n";
    out += "t_o: " + std::to_string(r.t_o) + "\n";
    out += "weighted_depth: " + std::to_string(r.weighted_depth) + "\n";
    out += "swap_count: " + std::to_string(r.swap_count) + "\n";
    out += "total_gates: " + std::to_string(r.total_gates) + "\n";
    out += "cx_gates: " + std::to_string(r.cx_gates) + "\n";
    out += "wall_clock_ms: " + std::to_string(r.wall_clock_ms) + "\n";
    out += "initial_mapping: " + int_list(r.initial_mapping) + "\n";
    out += "final_mapping: " + int_list(r.final_mapping) + "\n";
    return out;
}

std::string to_yaml(const CompareReport &r) {
    std::string out;
    out += "schema_version: 1\n";
    out += "kind: compare\n";
    out += "seed: " + std::to_string(r.seed) + "\n";
    out += "architectures: [";
    for (size_t i = 0; i < r.architectures.size(); ++i) {
        if (i)
            out += ", ";
        out += r.architectures[i];
    }
    out += "]\n";
    out += "rows:\n";
    for (const auto &row : r.rows) {
        out += "  - benchmark: " + row.benchmark + "\n";
        out += "    architecture: " + row.architecture + "\n";
        if (!row.ok) {
            out += "    error: \"" + row.error + "\"\n";
            continue;
        }
        out += "    t_o: " + std::to_string(row.t_o) + "\n";
        out += "    t_c: " + std::to_string(row.t_c) + "\n";
        out += "    t_s: " + std::to_string(row.t_s) + "\n";
        out += "    swaps_comet: " + std::to_string(row.swaps_comet) + "\n";
        out += "    swaps_baseline: " + std::to_string(row.swaps_baseline) + "\n";
        out += "    ratio: " + fixed4(row.ratio) + "\n";
    }
    out += "summary:\n";
    out += "  compared: " + std::to_string(r.compared) + "\n";
    out += "  wins: " + std::to_string(r.wins) + "\n";
    out += "  arithmetic_mean_ratio: " + fixed4(r.arithmetic_mean) + "\n";
    out += "  geometric_mean_ratio: " + fixed4(r.geometric_mean) + "\n";
    return out;
}

std::string to_table(const CompareReport &r) {
    std::string out;
    char buf[256];
    std::snprintf(buf, sizeof(buf), "%-20s %-14s %8s %8s %8s %8s\n", "benchmark", "arch", "T_o",
                  "T_C", "T_S", "T_S/T_C");
    out += buf;
    for (const auto &row : r.rows) {
        if (!row.ok) {
            std::snprintf(buf, sizeof(buf), "%-20s %-14s failed: %s\n", row.benchmark.c_str(),
                          row.architecture.c_str(), row.error.c_str());
            out += buf;
            continue;
        }
        std::snprintf(buf, sizeof(buf), "%-20s %-14s %8lld %8lld %8lld %8.4f\n",
                      row.benchmark.c_str(), row.architecture.c_str(),
                      static_cast<long long>(row.t_o), static_cast<long long>(row.t_c),
                      static_cast<long long>(row.t_s), row.ratio);
        out += buf;
    }
    std::snprintf(buf, sizeof(buf),
                  "rows: %d  wins(T_C<=T_S): %d  mean: %.4f  geomean: %.4f\n", r.compared,
                  r.wins, r.arithmetic_mean, r.geometric_mean);
    out += buf;
    return out;
}

} // namespace qroute
