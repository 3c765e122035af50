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

#include "qroute/sched.hpp"

#include <algorithm>

#include "qroute/commute.hpp"
#include "qroute/errors.hpp"

namespace qroute {

MappedSchedule asap_schedule(const MappedCircuit &mc, const Architecture &arch) {
    MappedSchedule s;
    s.mapped_circuit = mc;
    std::vector<int64_t> t_end(mc.num_physical, 0);
    for (const RoutedGate &rg : mc.gates) {
        const Gate &g = rg.gate;
        if (g.two_qubit() && !arch.coupled(g.qubits[0], g.qubits[1]))
            throw ValidationError("gate '" + kind_name(g.kind) + "' on uncoupled pair (" +
                                  std::to_string(g.qubits[0]) + "," +
                                  std::to_string(g.qubits[1]) + ")");
        int64_t start = 0;
        for (int q : g.qubits)
            start = std::max(start, t_end[q]);
        int64_t dur = arch.duration(g.kind);
        for (int q : g.qubits)
            t_end[q] = start + dur;
        s.scheduled.push_back(ScheduledGate{rg, start});
        s.weighted_depth = std::max(s.weighted_depth, start + dur);
        if (g.kind == GateKind::Swap)
            ++s.swap_count;
    }
    return s;
}

int64_t weighted_depth(const MappedSchedule &s, const Architecture &arch) {
    int64_t depth = 0;
    for (const auto &sg : s.scheduled)
        depth = std::max(depth, sg.start + arch.duration(sg.g.gate.kind));
    return depth;
}

int64_t original_depth(const Circuit &c, const Architecture &arch) {
    std::vector<int64_t> t_end(c.num_logical, 0);
    int64_t depth = 0;
    for (const Gate &g : c.gates) {
        int64_t start = 0;
        for (int q : g.qubits)
            start = std::max(start, t_end[q]);
        int64_t dur = arch.duration(g.kind);
        for (int q : g.qubits)
            t_end[q] = start + dur;
        depth = std::max(depth, start + dur);
    }
    return depth;
}

std::vector<ScheduleViolation> validate_schedule(const MappedSchedule &s,
                                                 const Architecture &arch) {
    std::vector<ScheduleViolation> out;
    const int n = static_cast<int>(s.scheduled.size());
    // Index scheduled gates by the physical qubits they touch.
    std::vector<std::vector<int>> by_qubit;
    for (int i = 0; i < n; ++i)
        for (int q : s.scheduled[i].g.gate.qubits) {
            if (q >= static_cast<int>(by_qubit.size()))
                by_qubit.resize(q + 1);
            by_qubit[q].push_back(i);
        }

    auto role_of = [](const Gate &g, int qubit) {
        for (size_t r = 0; r < g.qubits.size(); ++r)
            if (g.qubits[r] == qubit)
                return static_cast<int>(r);
        return -1;
    };

    for (size_t q = 0; q < by_qubit.size(); ++q) {
        const auto &list = by_qubit[q];
        for (size_t i = 0; i < list.size(); ++i) {
            for (size_t j = i + 1; j < list.size(); ++j) {
                const auto &a = s.scheduled[list[i]];
                const auto &b = s.scheduled[list[j]];
                int64_t a_end = a.start + arch.duration(a.g.gate.kind);
                int64_t b_end = b.start + arch.duration(b.g.gate.kind);
                bool overlap = a.start < b_end && b.start < a_end &&
                               arch.duration(a.g.gate.kind) > 0 &&
                               arch.duration(b.g.gate.kind) > 0;
                if (overlap)
                    out.push_back({"gates overlap on qubit " + std::to_string(q), list[i],
                                   list[j]});
                bool comm = commutes(a.g.gate, role_of(a.g.gate, static_cast<int>(q)), b.g.gate,
                                     role_of(b.g.gate, static_cast<int>(q)));
                if (!comm && a_end > b.start)
                    out.push_back({"dependency order violated on qubit " + std::to_string(q),
                                   list[i], list[j]});
            }
        }
    }
    return out;
}

std::vector<int> compliance_violations(const MappedCircuit &mc, const Architecture &arch) {
    std::vector<int> out;
    for (size_t i = 0; i < mc.gates.size(); ++i) {
        const Gate &g = mc.gates[i].gate;
        if (g.two_qubit() && !arch.coupled(g.qubits[0], g.qubits[1]))
            out.push_back(static_cast<int>(i));
    }
    return out;
}

} // namespace qroute
