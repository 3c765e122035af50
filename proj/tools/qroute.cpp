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

#include <chrono>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "qroute/baseline.hpp"
#include "qroute/commute.hpp"
#include "qroute/compare.hpp"
#include "qroute/errors.hpp"
#include "qroute/initial.hpp"
#include "qroute/qasm.hpp"
#include "qroute/report.hpp"
#include "qroute/router.hpp"
#include "qroute/sched.hpp"
#include "qroute/verify.hpp"

namespace {

using namespace qroute;

struct CommonFlags {
    std::string arch_name;
    std::string arch_file;
    std::string durations = "default";
    std::string router = "comet";
    std::string initial = "reverse-traversal";
    int rt_rounds = 3;
    int rt_restarts = 12;
    uint64_t seed = 0;
    double baseline_delta = 0.001;
    bool no_fine = false;
};

void add_common_flags(CLI::App *cmd, CommonFlags &f, bool with_router = true,
                      bool with_arch = true) {
    if (with_arch)
        cmd->add_option("--arch", f.arch_name, "builtin architecture name");
    cmd->add_option("--arch-file", f.arch_file, "architecture description file");
    cmd->add_option("--durations", f.durations, "duration preset: 'default' or a file");
    if (with_router)
        cmd->add_option("--router", f.router, "router: comet or baseline")
            ->check(CLI::IsMember({"comet", "baseline"}));
    cmd->add_option("--initial", f.initial,
                    "initial mapping: identity, random or reverse-traversal")
        ->check(CLI::IsMember({"identity", "random", "reverse-traversal"}));
    cmd->add_option("--rt-rounds", f.rt_rounds, "reverse-traversal rounds");
    cmd->add_option("--rt-restarts", f.rt_restarts, "reverse-traversal restarts");
    cmd->add_option("--seed", f.seed, "random seed");
    cmd->add_option("--baseline-delta", f.baseline_delta, "baseline decay increment");
    cmd->add_flag("--no-fine", f.no_fine, "disable the lattice fine priority");
}

Architecture resolve_arch(const CommonFlags &f) {
    if (!f.arch_file.empty() && !f.arch_name.empty())
        throw ArchError("--arch and --arch-file are mutually exclusive");
    if (f.arch_file.empty() && f.arch_name.empty())
        throw ArchError("an architecture is required (--arch or --arch-file)");
    Architecture a =
        f.arch_file.empty() ? builtin(f.arch_name) : load_architecture_file(f.arch_file);
    if (f.durations == "default")
        return a;
    DurationMap dm = load_durations(f.durations);
    std::optional<std::vector<GridPos>> grid;
    if (a.has_grid())
        grid = a.grid();
    return Architecture(a.name(), a.num_qubits(), a.edges(), std::move(grid), dm);
}

RouterOptions router_options(const CommonFlags &f) {
    RouterOptions o;
    o.use_fine = !f.no_fine;
    o.seed = f.seed;
    return o;
}

void write_file(const std::string &path, const std::string &content) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw Error("cannot write '" + path + "'");
    out << content;
}

std::string schedule_listing(const MappedSchedule &s) {
    std::string out;
    for (const auto &sg : s.scheduled) {
        out += "t=" + std::to_string(sg.start) + " " + kind_name(sg.g.gate.kind);
        for (size_t i = 0; i < sg.g.gate.qubits.size(); ++i)
            out += (i ? "," : " ") + std::string("q[") +
                   std::to_string(sg.g.gate.qubits[i]) + "]";
        out += "\n";
    }
    return out;
}

int cmd_route(const CommonFlags &f, const std::string &in, const std::string &out,
              const std::string &report_path, const std::string &schedule_path,
              bool decompose) {
    Circuit c = parse_qasm_file(in);
    Architecture arch = resolve_arch(f);
    RouterOptions ropts = router_options(f);

    auto t0 = std::chrono::steady_clock::now();
    Mapping pi0 = make_initial_mapping(initial_kind_from_name(f.initial), c, arch, f.seed,
                                       f.rt_rounds, f.rt_restarts, ropts);
    MappedSchedule s;
    if (f.router == "baseline") {
        BaselineOptions bopts;
        bopts.decay_delta = f.baseline_delta;
        s = baseline_route(c, arch, pi0, bopts);
    } else {
        s = route(c, arch, pi0, ropts);
    }
    auto t1 = std::chrono::steady_clock::now();

    if (!out.empty()) {
        MappedCircuit mc = decompose ? decompose_swaps(s.mapped_circuit) : s.mapped_circuit;
        write_file(out, emit_qasm(mc));
    }
    if (!schedule_path.empty())
        write_file(schedule_path, schedule_listing(s));
    if (!report_path.empty()) {
        RouteReport r;
        r.benchmark = in;
        r.architecture = arch.name();
        r.router = f.router;
        r.initial = f.initial;
        r.seed = f.seed;
        r.t_o = original_depth(c, arch);
        r.weighted_depth = s.weighted_depth;
        r.swap_count = s.swap_count;
        r.total_gates = static_cast<int>(c.gates.size());
        for (const Gate &g : c.gates)
            if (g.kind == GateKind::Cx)
                ++r.cx_gates;
        r.wall_clock_ms =
            std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
        r.initial_mapping = s.mapped_circuit.initial_mapping.forward();
        r.final_mapping = s.mapped_circuit.final_mapping.forward();
        write_file(report_path, to_yaml(r));
    }
    std::cout << in << ": depth " << s.weighted_depth << ", swaps " << s.swap_count << " ("
              << f.router << " on " << arch.name() << ")\n";
    return 0;
}

int cmd_compare(const CommonFlags &f, const std::vector<std::string> &arch_names,
                const std::string &bench_dir, const std::string &report_path) {
    std::vector<Architecture> archs;
    for (const auto &name : arch_names) {
        CommonFlags af = f;
        af.arch_name = name;
        af.arch_file.clear();
        archs.push_back(resolve_arch(af));
    }
    if (archs.empty() && !f.arch_file.empty())
        archs.push_back(resolve_arch(f));
    if (archs.empty())
        throw ArchError("compare needs at least one architecture");

    CompareOptions opts;
    opts.seed = f.seed;
    opts.initial = initial_kind_from_name(f.initial);
    opts.rt_rounds = f.rt_rounds;
    opts.rt_restarts = f.rt_restarts;
    opts.router = router_options(f);
    opts.baseline.decay_delta = f.baseline_delta;

    CompareReport rep = run_compare(load_benchmark_dir(bench_dir), archs, opts);
    std::cout << to_table(rep);
    if (!report_path.empty())
        write_file(report_path, to_yaml(rep));
    return 0;
}

int cmd_arch_list() {
    for (const auto &name : builtin_names())
        std::cout << name << "\n";
    return 0;
}

int cmd_arch_show(const CommonFlags &f) {
    Architecture a = resolve_arch(f);
    std::cout << a.name() << ": " << a.num_qubits() << " qubits, " << a.edges().size()
              << " edges\n";
    std::cout << "grid: " << (a.has_grid() ? "yes" : "no") << "\n";
    std::cout << "durations: 1q=" << a.duration(GateKind::H)
              << " cx=" << a.duration(GateKind::Cx) << " swap=" << a.duration(GateKind::Swap)
              << " measure=" << a.duration(GateKind::Measure) << "\n";
    DistanceMatrix d = compute_distances(a);
    long long sum = 0;
    int diameter = 0;
    for (int p = 0; p < a.num_qubits(); ++p)
        for (int q = 0; q < a.num_qubits(); ++q) {
            sum += d.at(p, q);
            diameter = std::max(diameter, d.at(p, q));
        }
    std::cout << "distance: diameter " << diameter << ", mean "
              << static_cast<double>(sum) / a.num_qubits() / a.num_qubits() << "\n";
    std::cout << "edges:";
    for (auto [x, y] : a.edges())
        std::cout << " (" << x << "," << y << ")";
    std::cout << "\n";
    return 0;
}

int cmd_verify(const CommonFlags &f, const std::string &in, const std::string &routed_path,
               double tol) {
    Circuit original = parse_qasm_file(in);
    for (const Gate &g : original.gates)
        if (g.kind == GateKind::Swap)
            throw ValidationError(
                "verify cannot distinguish source swaps from inserted ones; "
                "decompose them first");
    Architecture arch = resolve_arch(f);

    std::ifstream rin(routed_path);
    if (!rin)
        throw QasmError("cannot open '" + routed_path + "'");
    std::string routed_text((std::istreambuf_iterator<char>(rin)),
                            std::istreambuf_iterator<char>());
    Circuit routed = parse_qasm(routed_text, routed_path);
    if (routed.num_logical != arch.num_qubits())
        throw ArchError("routed circuit spans " + std::to_string(routed.num_logical) +
                        " qubits but the architecture has " +
                        std::to_string(arch.num_qubits()));

    auto fwd = parse_initial_mapping_comment(routed_text);
    if (fwd && static_cast<int>(fwd->size()) != original.num_logical)
        throw ValidationError("initial-mapping header covers " + std::to_string(fwd->size()) +
                              " qubits, original uses " +
                              std::to_string(original.num_logical));
    Mapping pi0 = fwd ? Mapping(*fwd, arch.num_qubits())
                      : Mapping::identity(original.num_logical, arch.num_qubits());
    if (!fwd)
        std::cout << "note: no initial-mapping header; assuming identity\n";

    // Recover the original-gate correspondence: the router may reorder
    // commuting gates, so each routed statement must match some gate on
    // the commutation frontier of the not-yet-matched originals.
    MappedCircuit mc;
    mc.num_physical = arch.num_qubits();
    mc.num_logical = original.num_logical;
    mc.num_clbits = routed.num_clbits;
    mc.initial_mapping = pi0;
    Mapping pi = pi0;
    DependencyDag dag = build_dag(original);
    std::vector<char> matched(original.gates.size(), 0);
    auto params_match = [](const std::vector<double> &a, const std::vector<double> &b) {
        if (a.size() != b.size())
            return false;
        for (size_t i = 0; i < a.size(); ++i)
            if (std::abs(a[i] - b[i]) > 1e-9 * std::max({1.0, std::abs(a[i]), std::abs(b[i])}))
                return false;
        return true;
    };
    for (const Gate &g : routed.gates) {
        if (g.kind == GateKind::Swap) {
            Gate copy = g;
            copy.id = -1;
            mc.gates.push_back(RoutedGate{copy, true});
            pi.swap_physical(g.qubits[0], g.qubits[1]);
            continue;
        }
        int found = -1;
        for (int gid : cf_frontier(original, dag, matched)) {
            const Gate &og = original.gates[gid];
            if (og.kind != g.kind || og.clbit != g.clbit ||
                og.qubits.size() != g.qubits.size() || !params_match(og.params, g.params))
                continue;
            bool operands_ok = true;
            for (size_t r = 0; r < og.qubits.size(); ++r)
                if (pi.physical(og.qubits[r]) != g.qubits[r]) {
                    operands_ok = false;
                    break;
                }
            if (operands_ok) {
                found = gid;
                break;
            }
        }
        if (found < 0) {
            std::cout << "permutation check: MISMATCH: routed statement '" << kind_name(g.kind)
                      << "' matches no available original gate under the current mapping\n";
            return 1;
        }
        matched[found] = 1;
        Gate copy = g;
        copy.id = found;
        mc.gates.push_back(RoutedGate{copy, false});
    }
    mc.final_mapping = pi;

    MappedSchedule s = asap_schedule(mc, arch);
    CheckResult perm = permutation_check(original, s, arch);
    std::cout << "permutation check: " << (perm.ok ? "ok" : "MISMATCH: " + perm.message)
              << "\n";
    bool state_ok = true;
    if (std::max(original.num_logical, arch.num_qubits()) <= 12) {
        CheckResult sv = statevector_equiv(original, s, tol);
        state_ok = sv.ok;
        std::cout << "statevector check: " << (sv.ok ? "ok" : "FAIL: " + sv.message) << "\n";
    } else {
        std::cout << "statevector check: skipped (more than 12 qubits)\n";
    }
    return perm.ok && state_ok ? 0 : 1;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"duration-aware qubit routing toolkit"};
    app.require_subcommand(1);

    CommonFlags f;
    std::string in, out, report_path, schedule_path, bench_dir, routed_path, show_name;
    std::vector<std::string> arch_names;
    bool decompose = false;
    double tol = 1e-9;

    CLI::App *route_cmd = app.add_subcommand("route", "route a circuit onto an architecture");
    add_common_flags(route_cmd, f);
    route_cmd->add_option("--in", in, "input OpenQASM file")->required();
    route_cmd->add_option("--out", out, "mapped OpenQASM output");
    route_cmd->add_option("--report", report_path, "route report (YAML)");
    route_cmd->add_option("--schedule", schedule_path, "schedule listing output");
    route_cmd->add_flag("--decompose-swaps", decompose, "rewrite swaps as three cx");

    CLI::App *compare_cmd =
        app.add_subcommand("compare", "compare both routers over a benchmark directory");
    add_common_flags(compare_cmd, f, /*with_router=*/false, /*with_arch=*/false);
    compare_cmd->add_option("--arch", arch_names, "architectures to compare on (repeatable)")
        ->required();
    compare_cmd->add_option("--bench-dir", bench_dir, "directory of .qasm files")->required();
    compare_cmd->add_option("--report", report_path, "compare report (YAML)");

    CLI::App *arch_cmd = app.add_subcommand("arch", "inspect bundled architectures");
    CLI::App *arch_list = arch_cmd->add_subcommand("list", "list builtin names");
    CLI::App *arch_show = arch_cmd->add_subcommand("show", "describe one architecture");
    arch_show->add_option("name", show_name, "builtin name (or use --arch-file)");
    CommonFlags show_flags;
    arch_show->add_option("--arch-file", show_flags.arch_file, "architecture file");
    arch_show->add_option("--durations", show_flags.durations, "duration preset");
    arch_cmd->require_subcommand(1);

    CLI::App *verify_cmd =
        app.add_subcommand("verify", "check a routed file against its source");
    add_common_flags(verify_cmd, f, /*with_router=*/false);
    verify_cmd->add_option("--in", in, "original OpenQASM file")->required();
    verify_cmd->add_option("--routed", routed_path, "routed OpenQASM file")->required();
    verify_cmd->add_option("--tol", tol, "statevector tolerance");

    CLI11_PARSE(app, argc, argv);

    try {
        if (route_cmd->parsed())
            return cmd_route(f, in, out, report_path, schedule_path, decompose);
        if (compare_cmd->parsed())
            return cmd_compare(f, arch_names, bench_dir, report_path);
        if (arch_list->parsed())
            return cmd_arch_list();
        if (arch_show->parsed()) {
            show_flags.arch_name = show_name;
            return cmd_arch_show(show_flags);
        }
        if (verify_cmd->parsed())
            return cmd_verify(f, in, routed_path, tol);
    } catch (const Error &e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.exit_code();
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
