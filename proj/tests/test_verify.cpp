#include "doctest.h"

#include "helpers.hpp"
#include "qroute/errors.hpp"
#include "qroute/initial.hpp"
#include "qroute/qasm.hpp"
#include "qroute/router.hpp"
#include "qroute/verify.hpp"

using namespace qroute;
using namespace qroute::testing;

TEST_CASE("statevector gate semantics") {
    // H then CX builds the Bell state.
    Statevector sv(2);
    sv.apply(make_gate(GateKind::H, {0}));
    sv.apply(make_gate(GateKind::Cx, {0, 1}));
    CHECK(std::abs(sv.amplitudes()[0] - std::complex<double>(M_SQRT1_2, 0)) < 1e-12);
    CHECK(std::abs(sv.amplitudes()[3] - std::complex<double>(M_SQRT1_2, 0)) < 1e-12);

    // swap exchanges basis bits.
    Statevector sw(2);
    sw.apply(make_gate(GateKind::X, {0}));
    sw.apply(make_gate(GateKind::Swap, {0, 1}));
    CHECK(std::abs(sw.amplitudes()[2] - std::complex<double>(1, 0)) < 1e-12);

    CHECK_THROWS_AS(Statevector(13), Error);
}

TEST_CASE("permutation_check accepts router output and identity routing") {
    Architecture arch = builtin("grid-2x3");
    Circuit c = random_circuit(5, 15, 4242);
    MappedSchedule s = route(c, arch, Mapping::identity(5, 6));
    CHECK(permutation_check(c, s, arch).ok);

    Architecture line2 = builtin("line-2");
    Circuit compliant = make_circuit(2, {make_gate(GateKind::H, {0}),
                                         make_gate(GateKind::Cx, {0, 1})});
    MappedSchedule s2 = route(compliant, line2, Mapping::identity(2, 2));
    CHECK(s2.swap_count == 0);
    CHECK(permutation_check(compliant, s2, line2).ok);
}

TEST_CASE("permutation_check catches a deleted swap") {
    Architecture line3 = builtin("line-3");
    Circuit c = make_circuit(3, {make_gate(GateKind::Cx, {0, 2})});
    MappedSchedule s = route(c, line3, Mapping::identity(3, 3));
    REQUIRE(s.swap_count == 1);

    MappedSchedule broken = s;
    std::erase_if(broken.scheduled, [](const ScheduledGate &sg) { return sg.g.inserted; });
    broken.mapped_circuit.gates.clear();
    for (const auto &sg : broken.scheduled)
        broken.mapped_circuit.gates.push_back(sg.g);
    CheckResult r = permutation_check(c, broken, line3);
    CHECK_FALSE(r.ok);
    CHECK(!r.message.empty());
}

TEST_CASE("permutation_check catches reordered non-commuting gates") {
    Architecture line2 = builtin("line-2");
    Circuit c = make_circuit(2, {make_gate(GateKind::H, {0}), make_gate(GateKind::X, {0})});
    MappedSchedule s = route(c, line2, Mapping::identity(2, 2));
    REQUIRE(s.scheduled.size() == 2);
    std::swap(s.scheduled[0].start, s.scheduled[1].start);
    CHECK_FALSE(permutation_check(c, s, line2).ok);
}

TEST_CASE("statevector_equiv flags a flipped cx") {
    Architecture line2 = builtin("line-2");
    Circuit c = make_circuit(2, {make_gate(GateKind::H, {0}), make_gate(GateKind::Cx, {0, 1})});
    MappedSchedule s = route(c, line2, Mapping::identity(2, 2));
    CHECK(statevector_equiv(c, s).ok);

    MappedSchedule flipped = s;
    for (auto &sg : flipped.scheduled)
        if (sg.g.gate.kind == GateKind::Cx)
            std::swap(sg.g.gate.qubits[0], sg.g.gate.qubits[1]);
    flipped.mapped_circuit.gates.clear();
    for (const auto &sg : flipped.scheduled)
        flipped.mapped_circuit.gates.push_back(sg.g);
    CHECK_FALSE(statevector_equiv(c, flipped).ok);
}

TEST_CASE("statevector_equiv on the empty circuit") {
    Architecture line2 = builtin("line-2");
    Circuit empty;
    empty.num_logical = 0;
    MappedSchedule s = route(empty, line2, Mapping::identity(0, 2));
    CHECK(statevector_equiv(empty, s).ok);
    CHECK(permutation_check(empty, s, line2).ok);
}

TEST_CASE("statevector_equiv respects a nontrivial final mapping") {
    // Route a circuit that forces a swap, then confirm the oracle reads
    // the state back through the final mapping.
    Architecture line3 = builtin("line-3");
    Circuit c = make_circuit(3, {make_gate(GateKind::X, {0}), make_gate(GateKind::Cx, {0, 2})});
    MappedSchedule s = route(c, line3, Mapping::identity(3, 3));
    REQUIRE(s.swap_count >= 1);
    CHECK(statevector_equiv(c, s).ok);
}

TEST_CASE("permutation trace composes initial into final mapping") {
    Architecture arch = builtin("grid-2x3");
    Circuit c = random_circuit(5, 18, 321);
    MappedSchedule s = route(c, arch, random_mapping(5, 6, 8));
    PermutationTrace trace = trace_permutations(s);
    CHECK(trace.steps.size() == static_cast<size_t>(s.swap_count));
    Mapping pi = s.mapped_circuit.initial_mapping;
    for (const auto &step : trace.steps) {
        CHECK(step.before == pi);
        pi.swap_physical(step.edge.first, step.edge.second);
        CHECK(step.after == pi);
    }
    CHECK(pi == s.mapped_circuit.final_mapping);
}

TEST_CASE("oracle size limit") {
    Circuit big;
    big.num_logical = 13;
    MappedSchedule dummy;
    dummy.mapped_circuit.num_physical = 13;
    CHECK_THROWS_AS(statevector_equiv(big, dummy), Error);
}
