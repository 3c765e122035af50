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

#include "qroute/initial.hpp"

#include <numeric>

#include "qroute/errors.hpp"

namespace qroute {

namespace {

/// splitmix64; fixed output across platforms, unlike <random> adaptors.
struct SplitMix64 {
    uint64_t state;
    uint64_t next() {
        uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
};

} // namespace

Mapping random_mapping(int num_logical, int num_physical, uint64_t seed) {
    if (num_logical > num_physical)
        throw CapacityError("cannot place " + std::to_string(num_logical) +
                            " logical qubits on " + std::to_string(num_physical) +
                            " physical qubits");
    std::vector<int> targets(num_physical);
    std::iota(targets.begin(), targets.end(), 0);
    SplitMix64 rng{seed};
    std::vector<int> fwd(num_logical);
    for (int i = 0; i < num_logical; ++i) {
        int j = i + static_cast<int>(rng.next() % static_cast<uint64_t>(num_physical - i));
        std::swap(targets[i], targets[j]);
        fwd[i] = targets[i];
    }
    return Mapping(std::move(fwd), num_physical);
}

Mapping reverse_traversal(const Circuit &c, const Architecture &arch, int rounds, int restarts,
                          uint64_t seed, const RouterOptions &router_opts) {
    if (rounds < 1)
        throw ValidationError("reverse traversal needs rounds >= 1");
    if (restarts < 1)
        throw ValidationError("reverse traversal needs restarts >= 1");
    if (c.num_logical > arch.num_qubits())
        throw CapacityError("circuit uses " + std::to_string(c.num_logical) +
                            " logical qubits, device '" + arch.name() + "' has " +
                            std::to_string(arch.num_qubits()));

    const Circuit reversed = c.reversed();
    Mapping best;
    int64_t best_depth = -1;

    for (int r = 0; r < restarts; ++r) {
        SplitMix64 split{seed ^ (0x9e3779b97f4a7c15ULL * static_cast<uint64_t>(r + 1))};
        Mapping pi = random_mapping(c.num_logical, arch.num_qubits(), split.next());
        for (int round = 0; round < rounds; ++round) {
            MappedSchedule fwd = route(c, arch, pi, router_opts);
            MappedSchedule rev = route(reversed, arch, fwd.mapped_circuit.final_mapping,
                                       router_opts);
            pi = rev.mapped_circuit.final_mapping;
        }
        int64_t depth = route(c, arch, pi, router_opts).weighted_depth;
        if (best_depth < 0 || depth < best_depth) {
            best_depth = depth;
            best = pi;
        }
    }
    return best;
}

InitialKind initial_kind_from_name(const std::string &name) {
    if (name == "identity")
        return InitialKind::Identity;
    if (name == "random")
        return InitialKind::Random;
    if (name == "reverse-traversal")
        return InitialKind::ReverseTraversal;
    throw ValidationError("unknown initial mapping strategy '" + name + "'");
}

Mapping make_initial_mapping(InitialKind kind, const Circuit &c, const Architecture &arch,
                             uint64_t seed, int rt_rounds, int rt_restarts,
                             const RouterOptions &router_opts) {
    switch (kind) {
    case InitialKind::Identity:
        if (c.num_logical > arch.num_qubits())
            throw CapacityError("circuit uses " + std::to_string(c.num_logical) +
                                " logical qubits, device '" + arch.name() + "' has " +
                                std::to_string(arch.num_qubits()));
        return Mapping::identity(c.num_logical, arch.num_qubits());
    case InitialKind::Random:
        return random_mapping(c.num_logical, arch.num_qubits(), seed);
    case InitialKind::ReverseTraversal:
    default:
        return reverse_traversal(c, arch, rt_rounds, rt_restarts, seed, router_opts);
    }
}

} // namespace qroute
