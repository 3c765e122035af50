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

#include "qroute/arch.hpp"
#include "qroute/gate.hpp"
#include "qroute/mapping.hpp"
#include "qroute/router.hpp"

namespace qroute {

/// Uniform injective assignment from a seeded deterministic generator
/// (same seed, same mapping, on every platform).
Mapping random_mapping(int num_logical, int num_physical, uint64_t seed);

/// Reverse-traversal refinement: from a random start, alternately route
/// the forward and the reversed gate sequence, feeding each final mapping
/// back as the next initial mapping. Each restart is scored by the
/// weighted depth of a forward route from its refined mapping; the best
/// restart wins (ties to the lowest index). Defaults: 3 rounds, 12
/// restarts.
Mapping reverse_traversal(const Circuit &c, const Architecture &arch, int rounds, int restarts,
                          uint64_t seed, const RouterOptions &router_opts = {});

enum class InitialKind { Identity, Random, ReverseTraversal };

InitialKind initial_kind_from_name(const std::string &name);

Mapping make_initial_mapping(InitialKind kind, const Circuit &c, const Architecture &arch,
                             uint64_t seed, int rt_rounds, int rt_restarts,
                             const RouterOptions &router_opts = {});

} // namespace qroute
