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

#include <string>
#include <vector>

#include "qroute/arch.hpp"
#include "qroute/baseline.hpp"
#include "qroute/gate.hpp"
#include "qroute/initial.hpp"
#include "qroute/report.hpp"

namespace qroute {

struct CompareOptions {
    uint64_t seed = 42;
    InitialKind initial = InitialKind::ReverseTraversal;
    int rt_rounds = 3;
    int rt_restarts = 12;
    RouterOptions router;
    BaselineOptions baseline;
};

/// Routes every (benchmark x architecture) pair with both routers from a
/// shared initial mapping and tabulates T_o, T_C, T_S and T_S/T_C with
/// arithmetic and geometric mean footers. Per-row failures are recorded
/// and excluded from the means; the run continues. Row order follows the
/// input order (deterministic output for a fixed seed).
CompareReport run_compare(const std::vector<std::pair<std::string, Circuit>> &benchmarks,
                          const std::vector<Architecture> &archs, const CompareOptions &opts);

/// Loads `*.qasm` files from a directory, sorted by filename.
std::vector<std::pair<std::string, Circuit>> load_benchmark_dir(const std::string &dir);

} // namespace qroute
