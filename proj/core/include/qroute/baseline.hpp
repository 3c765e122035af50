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

#include "qroute/arch.hpp"
#include "qroute/gate.hpp"
#include "qroute/mapping.hpp"
#include "qroute/schedule.hpp"

namespace qroute {

/// Published defaults of the swap-based bidirectional search this
/// baseline models. `decay_delta` is the depth-focus knob.
struct BaselineOptions {
    int lookahead_window = 20;
    double lookahead_weight = 0.5;
    double decay_delta = 0.001;
    int decay_reset_interval = 5;
    int64_t iteration_budget = 0; // 0: 10 * |gates| * num_physical swaps
};

/// Duration-unaware front-layer router: executes every coupled
/// dependency-free two-qubit gate (single-qubit gates as soon as their
/// predecessors are emitted), otherwise inserts the swap minimizing the
/// front-layer distance sum plus a weighted lookahead term, scaled by a
/// per-qubit decay that discourages repeated swaps. Never consults gate
/// durations or qubit locks; the result is scheduled by asap_schedule to
/// obtain its weighted depth.
MappedSchedule baseline_route(const Circuit &c, const Architecture &arch, const Mapping &pi0,
                              const BaselineOptions &opts = {});

} // namespace qroute
