#include "doctest.h"

#include "helpers.hpp"
#include "qroute/arch.hpp"
#include "qroute/errors.hpp"

using namespace qroute;

TEST_CASE("minimal architecture from text") {
    Architecture a = load_architecture_text("{num_qubits: 2, edges: [[0, 1]]}");
    CHECK(a.num_qubits() == 2);
    CHECK(a.edges().size() == 1);
    CHECK(a.coupled(0, 1));
    CHECK(a.coupled(1, 0));
}

TEST_CASE("validation errors name the violated invariant") {
    CHECK_THROWS_WITH_AS(load_architecture_text("{num_qubits: 3, edges: [[0, 1]]}"),
                         doctest::Contains("disconnected"), ArchError);
    CHECK_THROWS_WITH_AS(load_architecture_text("{num_qubits: 2, edges: [[0, 2]]}"),
                         doctest::Contains("out-of-range"), ArchError);
    CHECK_THROWS_WITH_AS(load_architecture_text("{num_qubits: 2, edges: [[0, 1], [1, 0]]}"),
                         doctest::Contains("duplicate edge"), ArchError);
    CHECK_THROWS_WITH_AS(load_architecture_text("{num_qubits: 2, edges: [[1, 1], [0, 1]]}"),
                         doctest::Contains("self-loop"), ArchError);
    CHECK_THROWS_AS(load_architecture_text("num_qubits: [broken"), ArchError);
    CHECK_THROWS_WITH_AS(load_architecture_text("{edges: [[0, 1]]}"),
                         doctest::Contains("num_qubits"), ArchError);
    // Edge between lattice cells two steps apart.
    CHECK_THROWS_WITH_AS(
        load_architecture_text(
            "{num_qubits: 3, edges: [[0, 1], [1, 2], [0, 2]], grid: [[0,0,0],[1,0,1],[2,0,2]]}"),
        doctest::Contains("not lattice-adjacent"), ArchError);
    CHECK_THROWS_WITH_AS(
        load_architecture_text(
            "{num_qubits: 2, edges: [[0, 1]], grid: [[0,0,0],[1,0,0]]}"),
        doctest::Contains("share grid coordinates"), ArchError);
}

TEST_CASE("bundled grid-6x6 file") {
    Architecture a = load_architecture_file(std::string(QROUTE_TEST_DATA_DIR) +
                                            "/architectures/grid-6x6.yaml");
    CHECK(a.num_qubits() == 36);
    CHECK(a.edges().size() == 60); // 2 * 5 * 6 lattice edges
    CHECK(a.has_grid());
    // File content matches the generated lattice.
    CHECK(a.edges() == builtin("grid-6x6").edges());
}

TEST_CASE("builtin architectures") {
    Architecture g66 = builtin("grid-6x6");
    CHECK(g66.num_qubits() == 36);
    CHECK(g66.edges().size() == 60);
    for (int p = 0; p < 36; ++p) {
        CHECK(g66.grid()[p].row == p / 6);
        CHECK(g66.grid()[p].col == p % 6);
    }

    Architecture mel = builtin("q16-melbourne");
    CHECK(mel.num_qubits() == 16);
    CHECK(mel.has_grid());
    CHECK(mel.grid()[15].row == 1);
    CHECK(mel.grid()[15].col == 7);
    CHECK(mel.edges().size() == 22);

    Architecture tokyo = builtin("q20-tokyo");
    CHECK(tokyo.num_qubits() == 20);
    CHECK_FALSE(tokyo.has_grid());
    CHECK(tokyo.edges().size() == 43);

    Architecture syc = builtin("sycamore-54");
    CHECK(syc.num_qubits() == 54);
    CHECK(syc.edges().size() == 88);
    CHECK_FALSE(syc.has_grid());

    Architecture g22 = builtin("grid-2x2");
    CHECK(g22.num_qubits() == 4);
    CHECK(g22.edges().size() == 4);

    CHECK(builtin("line-7").num_qubits() == 7);
    CHECK_THROWS_WITH_AS(builtin("nope"), doctest::Contains("unknown architecture"), ArchError);
    CHECK_THROWS_AS(builtin("line-x"), ArchError);

    // Deterministic: repeated calls yield identical edge sets.
    CHECK(builtin("q20-tokyo").edges() == tokyo.edges());
}

TEST_CASE("distance matrix") {
    Architecture g22 = builtin("grid-2x2");
    DistanceMatrix d = compute_distances(g22);
    CHECK(d.at(0, 3) == 2); // opposite corners of the 2x2 grid
    CHECK(d.at(0, 0) == 0);

    DistanceMatrix d66 = compute_distances(builtin("grid-6x6"));
    CHECK(d66.at(0, 35) == 10); // 5 + 5 Manhattan

    DistanceMatrix d5 = compute_distances(builtin("line-5"));
    CHECK(d5.at(0, 4) == 4);
}

TEST_CASE("distance matrix axioms on random connected graphs") {
    for (uint64_t seed = 0; seed < 30; ++seed) {
        testing::Rng rng(seed * 77 + 5);
        int n = 2 + rng.below(11);
        std::vector<std::pair<int, int>> edges;
        for (int v = 1; v < n; ++v)
            edges.emplace_back(rng.below(v), v); // random spanning tree
        for (int extra = rng.below(n); extra > 0; --extra) {
            int a = rng.below(n);
            int b = rng.below(n);
            if (a == b)
                continue;
            auto e = std::make_pair(std::min(a, b), std::max(a, b));
            if (std::find(edges.begin(), edges.end(), e) == edges.end())
                edges.push_back(e);
        }
        Architecture arch("rand", n, edges);
        DistanceMatrix d = compute_distances(arch);
        for (int p = 0; p < n; ++p) {
            CHECK(d.at(p, p) == 0);
            for (int q = 0; q < n; ++q) {
                CHECK(d.at(p, q) == d.at(q, p));
                CHECK((d.at(p, q) == 1) == arch.coupled(p, q));
                for (int r = 0; r < n; ++r)
                    CHECK(d.at(p, q) <= d.at(p, r) + d.at(r, q));
            }
        }
    }
}

TEST_CASE("hd_vd") {
    Architecture g33 = builtin("grid-3x3");
    auto [hd, vd] = hd_vd(g33, 0, 5); // (0,0) vs (1,2)
    CHECK(hd == 2);
    CHECK(vd == 1);
    auto self = hd_vd(g33, 4, 4);
    CHECK(self.first == 0);
    CHECK(self.second == 0);

    CHECK_THROWS_WITH_AS(hd_vd(builtin("q20-tokyo"), 0, 1),
                         doctest::Contains("no grid coordinates"), ArchError);

    // On a full grid, hop distance equals HD + VD for every pair.
    Architecture g34 = builtin("grid-3x4");
    DistanceMatrix d = compute_distances(g34);
    for (int p = 0; p < 12; ++p)
        for (int q = 0; q < 12; ++q) {
            auto [h, v] = hd_vd(g34, p, q);
            CHECK(d.at(p, q) == h + v);
        }
}

TEST_CASE("QROUTE_DATA_DIR overrides the bundled data path") {
    setenv("QROUTE_DATA_DIR", "/nonexistent-qroute-data", 1);
    CHECK_THROWS_AS(builtin("q20-tokyo"), ArchError);
    setenv("QROUTE_DATA_DIR", QROUTE_TEST_DATA_DIR, 1);
    CHECK(builtin("q20-tokyo").num_qubits() == 20);
    unsetenv("QROUTE_DATA_DIR");
}

TEST_CASE("durations") {
    DurationMap dm;
    CHECK(dm.cycles(GateKind::H) == 1);
    CHECK(dm.cycles(GateKind::Cx) == 2);
    CHECK(dm.cycles(GateKind::Swap) == 6);
    CHECK(dm.cycles(GateKind::Measure) == 1);
    CHECK(dm.cycles(GateKind::Barrier) == 0);
    CHECK(dm.cycles("t") == 1);
    CHECK_THROWS_WITH_AS(dm.cycles("ccx"), doctest::Contains("unknown gate kind"), ArchError);

    Architecture a = load_architecture_text(
        "{num_qubits: 2, edges: [[0, 1]], durations: {cx: 4, rx: 7}}");
    CHECK(a.duration(GateKind::Cx) == 4);
    CHECK(a.duration(GateKind::Rx) == 7);
    CHECK(a.duration(GateKind::H) == 1);
    CHECK_THROWS_AS(
        load_architecture_text("{num_qubits: 2, edges: [[0, 1]], durations: {bogus: 1}}"),
        ArchError);

    CHECK(load_durations("default") == DurationMap());
    DurationMap ion =
        load_durations(std::string(QROUTE_TEST_DATA_DIR) + "/durations/iontrap.yaml");
    CHECK(ion.cycles(GateKind::H) == 1000);
    CHECK(ion.cycles(GateKind::Cx) == 2000);
}
