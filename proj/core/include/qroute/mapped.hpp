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

#include "qroute/gate.hpp"
#include "qroute/mapping.hpp"

namespace qroute {

/// A gate over physical qubits. `gate.id` is the id of the original
/// logical gate it was rewritten from, or -1 for router-inserted swaps.
struct RoutedGate {
    Gate gate;
    bool inserted = false;
};

/// Hardware-targeted gate sequence: original gates rewritten through the
/// evolving mapping plus inserted swaps, in emission order.
struct MappedCircuit {
    std::vector<RoutedGate> gates;
    Mapping initial_mapping;
    Mapping final_mapping;
    int num_physical = 0;
    int num_logical = 0;
    int num_clbits = 0;
};

} // namespace qroute
