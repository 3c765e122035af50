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

#include "qroute/baseline.hpp"

#include <algorithm>
#include <set>

#include "qroute/commute.hpp"
#include "qroute/errors.hpp"
#include "qroute/sched.hpp"

namespace qroute {

MappedSchedule baseline_route(const Circuit &c, const Architecture &arch, const Mapping &pi0,
                              const BaselineOptions &opts) {
    const int num_gates = static_cast<int>(c.gates.size());
    if (c.num_logical > arch.num_qubits())
        throw CapacityError("circuit uses " + std::to_string(c.num_logical) +
                            " logical qubits, device '" + arch.name() + "' has " +
                            std::to_string(arch.num_qubits()));
    if (pi0.num_logical() < c.num_logical || pi0.num_physical() != arch.num_qubits())
        throw InternalError("initial mapping does not cover the circuit or device");

    const DistanceMatrix dist = compute_distances(arch);
    const DependencyDag dag = build_dag(c);
    const int64_t budget = opts.iteration_budget > 0
                               ? opts.iteration_budget
                               : 10LL * std::max(num_gates, 1) * arch.num_qubits();

    std::vector<int> indegree(num_gates, 0);
    std::vector<std::vector<int>> successors(num_gates);
    for (int gid = 0; gid < num_gates; ++gid)
        for (int pred : dag.direct_preds[gid]) {
            successors[pred].push_back(gid);
            ++indegree[gid];
        }

    MappedCircuit mc;
    mc.initial_mapping = pi0;
    mc.num_physical = arch.num_qubits();
    mc.num_logical = c.num_logical;
    mc.num_clbits = c.num_clbits;

    Mapping pi = pi0;
    std::set<int> ready;
    for (int gid = 0; gid < num_gates; ++gid)
        if (indegree[gid] == 0)
            ready.insert(gid);
    std::vector<char> executed(num_gates, 0);
    int remaining = num_gates;

    std::vector<double> decay(arch.num_qubits(), 1.0);
    int swaps_since_reset = 0;
    int64_t swaps_total = 0;

    auto emit_gate = [&](int gid) {
        Gate phys = c.gates[gid];
        for (size_t i = 0; i < phys.qubits.size(); ++i)
            phys.qubits[i] = pi.physical(c.gates[gid].qubits[i]);
        mc.gates.push_back(RoutedGate{phys, false});
        executed[gid] = 1;
        --remaining;
        ready.erase(gid);
        for (int succ : successors[gid])
            if (--indegree[succ] == 0)
                ready.insert(succ);
    };

    while (remaining > 0) {
        // Drain everything executable: non-two-qubit gates immediately,
        // two-qubit gates when their mapped operands are coupled.
        bool progress = true;
        while (progress) {
            progress = false;
            for (auto it = ready.begin(); it != ready.end();) {
                int gid = *it;
                const Gate &g = c.gates[gid];
                bool can = !g.two_qubit() ||
                           arch.coupled(pi.physical(g.qubits[0]), pi.physical(g.qubits[1]));
                ++it;
                if (can) {
                    emit_gate(gid);
                    progress = true;
                    // Executing a gate resets the decay state.
                    std::fill(decay.begin(), decay.end(), 1.0);
                    swaps_since_reset = 0;
                }
            }
        }
        if (remaining == 0)
            break;

        // Front layer: every ready gate is now an uncoupled two-qubit gate.
        std::vector<int> front(ready.begin(), ready.end());

        // Lookahead window: the next two-qubit gates beyond the front, in
        // program order.
        std::vector<int> extended;
        for (int gid = 0; gid < num_gates &&
                          static_cast<int>(extended.size()) < opts.lookahead_window;
             ++gid) {
            if (executed[gid] || !c.gates[gid].two_qubit() || ready.count(gid))
                continue;
            extended.push_back(gid);
        }

        std::set<std::pair<int, int>> cand_set;
        for (int gid : front)
            for (int q : c.gates[gid].qubits) {
                int p = pi.physical(q);
                for (int nbr : arch.neighbors(p))
                    cand_set.insert({std::min(p, nbr), std::max(p, nbr)});
            }

        auto score_after = [&](std::pair<int, int> e) {
            auto mapped = [&](int logical) {
                int p = pi.physical(logical);
                if (p == e.first)
                    return e.second;
                if (p == e.second)
                    return e.first;
                return p;
            };
            double front_sum = 0;
            for (int gid : front)
                front_sum += dist.at(mapped(c.gates[gid].qubits[0]),
                                     mapped(c.gates[gid].qubits[1]));
            double score = front_sum / static_cast<double>(front.size());
            if (!extended.empty()) {
                double ext_sum = 0;
                for (int gid : extended)
                    ext_sum += dist.at(mapped(c.gates[gid].qubits[0]),
                                       mapped(c.gates[gid].qubits[1]));
                score += opts.lookahead_weight * ext_sum / static_cast<double>(extended.size());
            }
            return std::max(decay[e.first], decay[e.second]) * score;
        };

        std::pair<int, int> best{-1, -1};
        double best_score = 0;
        for (auto e : cand_set) {
            double sc = score_after(e);
            if (best.first < 0 || sc < best_score) {
                best = e;
                best_score = sc;
            }
        }
        if (best.first < 0)
            throw InternalError("baseline has a blocked front layer but no candidate swaps");

        Gate sw;
        sw.id = -1;
        sw.kind = GateKind::Swap;
        sw.qubits = {best.first, best.second};
        mc.gates.push_back(RoutedGate{sw, true});
        pi.swap_physical(best.first, best.second);
        decay[best.first] += opts.decay_delta;
        decay[best.second] += opts.decay_delta;
        if (++swaps_since_reset >= opts.decay_reset_interval) {
            std::fill(decay.begin(), decay.end(), 1.0);
            swaps_since_reset = 0;
        }
        if (++swaps_total > budget)
            throw InternalError("baseline iteration budget exceeded (" + std::to_string(budget) +
                                " swaps)");
    }

    mc.final_mapping = pi;
    MappedSchedule s = asap_schedule(mc, arch);
    return s;
}

} // namespace qroute
