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

#include "qroute/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "qroute/commute.hpp"
#include "qroute/errors.hpp"

namespace qroute {

namespace {

constexpr int kMaxOracleQubits = 12;
using cd = std::complex<double>;

/// Emitted circuits round-trip params at 12 significant digits, so the
/// replay compares them with a matching tolerance instead of bitwise.
bool params_close(const std::vector<double> &a, const std::vector<double> &b) {
    if (a.size() != b.size())
        return false;
    for (size_t i = 0; i < a.size(); ++i)
        if (std::abs(a[i] - b[i]) > 1e-9 * std::max({1.0, std::abs(a[i]), std::abs(b[i])}))
            return false;
    return true;
}

struct Mat2 {
    cd a, b, c, d; // row major
};

Mat2 single_qubit_matrix(const Gate &g) {
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    auto expi = [](double x) { return cd(std::cos(x), std::sin(x)); };
    switch (g.kind) {
    case GateKind::H:
        return {inv_sqrt2, inv_sqrt2, inv_sqrt2, -inv_sqrt2};
    case GateKind::X:
        return {0, 1, 1, 0};
    case GateKind::Y:
        return {0, cd(0, -1), cd(0, 1), 0};
    case GateKind::Z:
        return {1, 0, 0, -1};
    case GateKind::S:
        return {1, 0, 0, cd(0, 1)};
    case GateKind::Sdg:
        return {1, 0, 0, cd(0, -1)};
    case GateKind::T:
        return {1, 0, 0, expi(M_PI / 4)};
    case GateKind::Tdg:
        return {1, 0, 0, expi(-M_PI / 4)};
    case GateKind::Rx: {
        double h = g.params[0] / 2;
        return {std::cos(h), cd(0, -std::sin(h)), cd(0, -std::sin(h)), std::cos(h)};
    }
    case GateKind::Ry: {
        double h = g.params[0] / 2;
        return {std::cos(h), -std::sin(h), std::sin(h), std::cos(h)};
    }
    case GateKind::Rz: {
        double h = g.params[0] / 2;
        return {expi(-h), 0, 0, expi(h)};
    }
    case GateKind::U1:
        return {1, 0, 0, expi(g.params[0])};
    case GateKind::U2: {
        double phi = g.params[0], lam = g.params[1];
        return {inv_sqrt2, -inv_sqrt2 * expi(lam), inv_sqrt2 * expi(phi),
                inv_sqrt2 * expi(phi + lam)};
    }
    case GateKind::U3: {
        double th = g.params[0] / 2, phi = g.params[1], lam = g.params[2];
        return {std::cos(th), -expi(lam) * std::sin(th), expi(phi) * std::sin(th),
                expi(phi + lam) * std::cos(th)};
    }
    default:
        throw InternalError("no single-qubit matrix for '" + kind_name(g.kind) + "'");
    }
}

} // namespace

Statevector::Statevector(int num_qubits) : n_(num_qubits) {
    if (num_qubits > kMaxOracleQubits)
        throw Error("statevector oracle limited to " + std::to_string(kMaxOracleQubits) +
                    " qubits, got " + std::to_string(num_qubits));
    amp_.assign(size_t{1} << n_, cd(0, 0));
    amp_[0] = cd(1, 0);
}

Statevector::Statevector(int num_qubits, std::vector<cd> amplitudes) : Statevector(num_qubits) {
    if (amplitudes.size() != amp_.size())
        throw InternalError("amplitude vector size mismatch");
    amp_ = std::move(amplitudes);
}

void Statevector::apply(const Gate &g) {
    switch (g.kind) {
    case GateKind::Measure:
    case GateKind::Barrier:
        return;
    case GateKind::Cx: {
        size_t cbit = size_t{1} << g.qubits[0];
        size_t tbit = size_t{1} << g.qubits[1];
        for (size_t i = 0; i < amp_.size(); ++i)
            if ((i & cbit) && !(i & tbit))
                std::swap(amp_[i], amp_[i | tbit]);
        return;
    }
    case GateKind::Swap: {
        size_t abit = size_t{1} << g.qubits[0];
        size_t bbit = size_t{1} << g.qubits[1];
        for (size_t i = 0; i < amp_.size(); ++i)
            if ((i & abit) && !(i & bbit))
                std::swap(amp_[i], amp_[(i & ~abit) | bbit]);
        return;
    }
    default: {
        Mat2 m = single_qubit_matrix(g);
        size_t bit = size_t{1} << g.qubits[0];
        for (size_t i = 0; i < amp_.size(); ++i)
            if (!(i & bit)) {
                cd lo = amp_[i];
                cd hi = amp_[i | bit];
                amp_[i] = m.a * lo + m.b * hi;
                amp_[i | bit] = m.c * lo + m.d * hi;
            }
        return;
    }
    }
}

double Statevector::overlap(const Statevector &a, const Statevector &b) {
    cd s = 0;
    for (size_t i = 0; i < a.amp_.size() && i < b.amp_.size(); ++i)
        s += std::conj(a.amp_[i]) * b.amp_[i];
    return std::abs(s);
}

Statevector simulate(const Circuit &c) {
    Statevector sv(c.num_logical);
    for (const Gate &g : c.gates)
        sv.apply(g);
    return sv;
}

Statevector simulate(const MappedCircuit &mc) {
    Statevector sv(mc.num_physical);
    for (const RoutedGate &rg : mc.gates)
        sv.apply(rg.gate);
    return sv;
}

PermutationTrace trace_permutations(const MappedSchedule &routed) {
    std::vector<int> order(routed.scheduled.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int i, int j) {
        return routed.scheduled[i].start < routed.scheduled[j].start;
    });
    PermutationTrace trace;
    Mapping pi = routed.mapped_circuit.initial_mapping;
    for (int idx : order) {
        const auto &sg = routed.scheduled[idx];
        if (!sg.g.inserted)
            continue;
        PermutationStep step;
        step.edge = {sg.g.gate.qubits[0], sg.g.gate.qubits[1]};
        step.before = pi;
        pi.swap_physical(step.edge.first, step.edge.second);
        step.after = pi;
        trace.steps.push_back(std::move(step));
    }
    return trace;
}

CheckResult permutation_check(const Circuit &original, const MappedSchedule &routed,
                              const Architecture &arch) {
    auto fail = [](std::string msg) { return CheckResult{false, std::move(msg)}; };
    const auto &sched = routed.scheduled;

    std::vector<int> order(sched.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int i, int j) { return sched[i].start < sched[j].start; });

    Mapping pi = routed.mapped_circuit.initial_mapping;
    std::vector<char> seen(original.gates.size(), 0);
    std::vector<int64_t> start_of(original.gates.size(), -1);

    for (int idx : order) {
        const ScheduledGate &sg = sched[idx];
        const Gate &g = sg.g.gate;
        if (sg.g.inserted) {
            if (g.kind != GateKind::Swap)
                return fail("inserted gate at index " + std::to_string(idx) + " is not a swap");
            pi.swap_physical(g.qubits[0], g.qubits[1]);
            continue;
        }
        if (g.id < 0 || g.id >= static_cast<int>(original.gates.size()))
            return fail("routed gate references unknown original id " + std::to_string(g.id));
        if (seen[g.id])
            return fail("original gate " + std::to_string(g.id) + " appears twice");
        seen[g.id] = 1;
        start_of[g.id] = sg.start;
        const Gate &og = original.gates[g.id];
        if (og.kind != g.kind || !params_close(og.params, g.params) || og.clbit != g.clbit)
            return fail("original gate " + std::to_string(g.id) + " was altered");
        if (og.qubits.size() != g.qubits.size())
            return fail("original gate " + std::to_string(g.id) + " changed arity");
        for (size_t r = 0; r < og.qubits.size(); ++r)
            if (pi.physical(og.qubits[r]) != g.qubits[r])
                return fail("gate " + std::to_string(g.id) + " operand " + std::to_string(r) +
                            " expected physical " + std::to_string(pi.physical(og.qubits[r])) +
                            ", found " + std::to_string(g.qubits[r]));
    }

    for (size_t i = 0; i < seen.size(); ++i)
        if (!seen[i])
            return fail("original gate " + std::to_string(i) + " missing from routed output");
    if (!(pi == routed.mapped_circuit.final_mapping))
        return fail("replaying swaps does not reproduce the final mapping");

    // Non-commuting original pairs must run in dependency-respecting order.
    DependencyDag dag = build_dag(original);
    for (const auto &gates_on_q : dag.qubit_gates) {
        for (size_t i = 0; i < gates_on_q.size(); ++i) {
            for (size_t j = i + 1; j < gates_on_q.size(); ++j) {
                const Gate &a = original.gates[gates_on_q[i]];
                const Gate &b = original.gates[gates_on_q[j]];
                if (reorderable(a, b))
                    continue;
                int64_t a_done = start_of[a.id] + arch.duration(a.kind);
                if (a_done > start_of[b.id])
                    return fail("gates " + std::to_string(a.id) + " and " + std::to_string(b.id) +
                                " do not commute but run out of order");
            }
        }
    }
    return {};
}

CheckResult statevector_equiv(const Circuit &original, const MappedSchedule &routed,
                              double tol) {
    const MappedCircuit &mc = routed.mapped_circuit;
    Statevector orig = simulate(original);
    Statevector phys = simulate(mc);

    // Read the routed state back through the final mapping: logical l
    // lives on physical final_mapping(l); unused physical qubits must
    // stay in |0>.
    std::vector<cd> amp(size_t{1} << mc.num_physical, cd(0, 0));
    const auto &oamp = orig.amplitudes();
    for (size_t b = 0; b < oamp.size(); ++b) {
        size_t phys_index = 0;
        for (int l = 0; l < original.num_logical; ++l)
            if (b & (size_t{1} << l))
                phys_index |= size_t{1} << mc.final_mapping.physical(l);
        amp[phys_index] = oamp[b];
    }
    Statevector expected(mc.num_physical, std::move(amp));

    double ov = Statevector::overlap(expected, phys);
    if (ov < 1.0 - tol)
        return {false, "statevector overlap " + std::to_string(ov) + " below 1 - tol"};
    return {};
}

CheckResult statevector_equiv_mapped(const MappedCircuit &a, const MappedCircuit &b,
                                     double tol) {
    Statevector sa = simulate(a);
    Statevector sb = simulate(b);
    double ov = Statevector::overlap(sa, sb);
    if (ov < 1.0 - tol)
        return {false, "statevector overlap " + std::to_string(ov) + " below 1 - tol"};
    return {};
}

} // namespace qroute
