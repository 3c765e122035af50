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

#include "qroute/router.hpp"

#include <algorithm>
#include <limits>

#include "qroute/commute.hpp"
#include "qroute/errors.hpp"

namespace qroute {

namespace {

/// Physical position of a logical operand under pi with the edge's
/// occupants virtually exchanged.
inline int mapped_after_swap(const Mapping &pi, std::pair<int, int> e, int logical) {
    int p = pi.physical(logical);
    if (p == e.first)
        return e.second;
    if (p == e.second)
        return e.first;
    return p;
}

} // namespace

std::vector<int> directly_executable(const Circuit &c, const std::vector<int> &cf,
                                     const QubitLocks &locks, const Mapping &pi,
                                     const Architecture &arch, int64_t t) {
    std::vector<int> out;
    for (int gid : cf) {
        const Gate &g = c.gates[gid];
        bool ok = true;
        for (int q : g.qubits)
            if (!locks.free_at(pi.physical(q), t)) {
                ok = false;
                break;
            }
        if (ok && g.two_qubit() && !arch.coupled(pi.physical(g.qubits[0]), pi.physical(g.qubits[1])))
            ok = false;
        if (ok)
            out.push_back(gid);
    }
    return out;
}

std::vector<std::pair<int, int>> candidate_swaps(const Circuit &c,
                                                 const std::vector<int> &pending,
                                                 const QubitLocks &locks, const Mapping &pi,
                                                 const Architecture &arch, int64_t t) {
    std::vector<std::pair<int, int>> out;
    for (int gid : pending) {
        for (int q : c.gates[gid].qubits) {
            int p = pi.physical(q);
            if (!locks.free_at(p, t))
                continue;
            for (int nbr : arch.neighbors(p))
                if (locks.free_at(nbr, t))
                    out.emplace_back(std::min(p, nbr), std::max(p, nbr));
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

long long h_basic(std::pair<int, int> swap_edge, const Circuit &c,
                  const std::vector<int> &cf_two_qubit, const Mapping &pi,
                  const DistanceMatrix &dist) {
    long long total = 0;
    for (int gid : cf_two_qubit) {
        const Gate &g = c.gates[gid];
        int before = dist.at(pi.physical(g.qubits[0]), pi.physical(g.qubits[1]));
        int after = dist.at(mapped_after_swap(pi, swap_edge, g.qubits[0]),
                            mapped_after_swap(pi, swap_edge, g.qubits[1]));
        total += before - after;
    }
    return total;
}

long long h_fine(std::pair<int, int> swap_edge, const Circuit &c,
                 const std::vector<int> &pending, const Mapping &pi, const Architecture &arch) {
    if (!arch.has_grid())
        return 0;
    const auto &grid = arch.grid();
    long long total = 0;
    for (int gid : pending) {
        const Gate &g = c.gates[gid];
        if (!g.two_qubit())
            continue;
        int pa = mapped_after_swap(pi, swap_edge, g.qubits[0]);
        int pb = mapped_after_swap(pi, swap_edge, g.qubits[1]);
        int hd = std::abs(grid[pa].col - grid[pb].col);
        int vd = std::abs(grid[pa].row - grid[pb].row);
        total -= std::abs(vd - hd);
    }
    return total;
}

int64_t advance_time(const QubitLocks &locks, int64_t t) {
    int64_t next = std::numeric_limits<int64_t>::max();
    for (int p = 0; p < locks.size(); ++p)
        if (locks.until(p) > t)
            next = std::min(next, locks.until(p));
    return next == std::numeric_limits<int64_t>::max() ? t : next;
}

MappedSchedule route(const Circuit &c, const Architecture &arch, const Mapping &pi0,
                     const RouterOptions &opts) {
    const int num_gates = static_cast<int>(c.gates.size());
    if (c.num_logical > arch.num_qubits())
        throw CapacityError("circuit uses " + std::to_string(c.num_logical) +
                            " logical qubits, device '" + arch.name() + "' has " +
                            std::to_string(arch.num_qubits()));
    if (pi0.num_logical() < c.num_logical || pi0.num_physical() != arch.num_qubits())
        throw InternalError("initial mapping does not cover the circuit or device");

    const DistanceMatrix dist = compute_distances(arch);
    const DependencyDag dag = build_dag(c);
    const int64_t swap_duration = arch.duration(GateKind::Swap);
    const int64_t budget = opts.iteration_budget > 0
                               ? opts.iteration_budget
                               : 10LL * std::max(num_gates, 1) * arch.num_qubits();

    MappedSchedule result;
    result.mapped_circuit.initial_mapping = pi0;
    result.mapped_circuit.num_physical = arch.num_qubits();
    result.mapped_circuit.num_logical = c.num_logical;
    result.mapped_circuit.num_clbits = c.num_clbits;

    Mapping pi = pi0;
    QubitLocks locks(arch.num_qubits());
    std::vector<char> executed(num_gates, 0);
    int remaining = num_gates;
    int lowest_unexecuted = 0;
    int64_t t = 0;

    auto emit = [&](const Gate &g, bool inserted, int64_t start) {
        result.scheduled.push_back(ScheduledGate{RoutedGate{g, inserted}, start});
    };

    auto apply_swap = [&](std::pair<int, int> edge) {
        Gate sw;
        sw.id = -1;
        sw.kind = GateKind::Swap;
        sw.qubits = {edge.first, edge.second};
        emit(sw, true, t);
        pi.swap_physical(edge.first, edge.second);
        locks.lock(edge.first, t + swap_duration);
        locks.lock(edge.second, t + swap_duration);
        ++result.swap_count;
    };

    while (remaining > 0) {
        ++result.stats.cycles;
        if (result.stats.cycles > 4 * budget + 1000)
            throw InternalError("router progress violation: cycle count exceeded " +
                                std::to_string(4 * budget + 1000));

        // Step 1: the commutation-forward frontier.
        std::vector<int> cf = cf_frontier(c, dag, executed);

        // Step 2: launch every directly executable lock-free gate, in
        // ascending id; a launch may lock qubits a later frontier gate
        // needs this same cycle.
        bool launched = false;
        bool launched_zero_duration = false;
        for (int gid : cf) {
            if (executed[gid])
                continue;
            const Gate &g = c.gates[gid];
            bool ok = true;
            for (int q : g.qubits)
                if (!locks.free_at(pi.physical(q), t)) {
                    ok = false;
                    break;
                }
            if (ok && g.two_qubit() &&
                !arch.coupled(pi.physical(g.qubits[0]), pi.physical(g.qubits[1])))
                ok = false;
            if (!ok)
                continue;
            Gate phys = g;
            for (size_t i = 0; i < phys.qubits.size(); ++i)
                phys.qubits[i] = pi.physical(g.qubits[i]);
            emit(phys, false, t);
            int64_t dur = arch.duration(g.kind);
            if (dur == 0)
                launched_zero_duration = true;
            for (int q : phys.qubits)
                locks.lock(q, t + dur);
            if (gid != lowest_unexecuted)
                ++result.stats.reorder_events;
            executed[gid] = 1;
            --remaining;
            while (lowest_unexecuted < num_gates && executed[lowest_unexecuted])
                ++lowest_unexecuted;
            launched = true;
        }
        if (remaining == 0)
            break;

        // Step 3: rank lock-free candidate swaps for the frontier gates
        // still blocked by connectivity.
        std::vector<int> cf_two_qubit;
        std::vector<int> pending;
        for (int gid : cf) {
            if (executed[gid] || !c.gates[gid].two_qubit())
                continue;
            cf_two_qubit.push_back(gid);
            const Gate &g = c.gates[gid];
            if (dist.at(pi.physical(g.qubits[0]), pi.physical(g.qubits[1])) > 1)
                pending.push_back(gid);
        }

        int applied = 0;
        if (!pending.empty()) {
            auto cands = candidate_swaps(c, pending, locks, pi, arch, t);
            auto pick_best = [&]() -> CandidateSwap {
                CandidateSwap best;
                bool first = true;
                for (auto e : cands) {
                    CandidateSwap cs{e.first, e.second,
                                     h_basic(e, c, cf_two_qubit, pi, dist),
                                     opts.use_fine ? h_fine(e, c, pending, pi, arch) : 0};
                    bool better =
                        first || std::tie(cs.h_basic, cs.h_fine) > std::tie(best.h_basic, best.h_fine) ||
                        (cs.h_basic == best.h_basic && cs.h_fine == best.h_fine &&
                         std::tie(cs.a, cs.b) < std::tie(best.a, best.b));
                    if (better) {
                        best = cs;
                        first = false;
                    }
                }
                return best;
            };
            while (!cands.empty()) {
                CandidateSwap best = pick_best();
                if (best.h_basic <= 0)
                    break;
                apply_swap({best.a, best.b});
                ++applied;
                std::erase_if(cands, [&](auto e) {
                    return e.first == best.a || e.first == best.b || e.second == best.a ||
                           e.second == best.b;
                });
            }
            if (!launched && applied == 0 && locks.all_free(t)) {
                // Deadlock: no executable gate, no beneficial swap, every
                // qubit idle. Force the best candidate once and resume.
                ++result.stats.deadlock_events;
                if (opts.deadlock_error)
                    throw InternalError("router deadlock at cycle " + std::to_string(t));
                if (cands.empty())
                    throw InternalError("deadlock with empty candidate set at cycle " +
                                        std::to_string(t));
                CandidateSwap forced = pick_best();
                apply_swap({forced.a, forced.b});
                ++applied;
            }
        }

        if (applied > 0) {
            ++result.stats.swap_cycles;
            if (result.stats.swap_cycles > budget)
                throw InternalError("router iteration budget exceeded (" +
                                    std::to_string(budget) + " swap cycles)");
        }

        if (!launched && applied == 0 && locks.all_free(t))
            throw InternalError("router made no progress with all qubits free at cycle " +
                                std::to_string(t));
        // A zero-duration launch (barrier) can unblock successors within
        // the same cycle; re-probe before advancing to the next event.
        if (!launched_zero_duration)
            t = advance_time(locks, t);
    }

    for (const auto &sg : result.scheduled) {
        result.mapped_circuit.gates.push_back(sg.g);
        result.weighted_depth =
            std::max(result.weighted_depth, sg.start + arch.duration(sg.g.gate.kind));
    }
    result.mapped_circuit.final_mapping = pi;
    return result;
}

} // namespace qroute
