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

#include "qroute/compare.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <future>

#include "qroute/errors.hpp"
#include "qroute/qasm.hpp"
#include "qroute/router.hpp"
#include "qroute/sched.hpp"

namespace qroute {

namespace {

CompareRow run_row(const std::string &name, const Circuit &circuit, const Architecture &arch,
                   const CompareOptions &opts) {
    CompareRow row;
    row.benchmark = name;
    row.architecture = arch.name();
    try {
        Mapping pi0 = make_initial_mapping(opts.initial, circuit, arch, opts.seed,
                                           opts.rt_rounds, opts.rt_restarts, opts.router);
        MappedSchedule comet = route(circuit, arch, pi0, opts.router);
        MappedSchedule sabre = baseline_route(circuit, arch, pi0, opts.baseline);
        row.t_o = original_depth(circuit, arch);
        row.t_c = comet.weighted_depth;
        row.t_s = sabre.weighted_depth;
        row.swaps_comet = comet.swap_count;
        row.swaps_baseline = sabre.swap_count;
        row.ratio = row.t_c > 0 ? static_cast<double>(row.t_s) / row.t_c
                                : (row.t_s == 0 ? 1.0 : 0.0);
    } catch (const Error &e) {
        row.ok = false;
        row.error = e.what();
    }
    return row;
}

} // namespace

CompareReport run_compare(const std::vector<std::pair<std::string, Circuit>> &benchmarks,
                          const std::vector<Architecture> &archs, const CompareOptions &opts) {
    CompareReport report;
    report.seed = opts.seed;
    for (const auto &a : archs)
        report.architectures.push_back(a.name());

    // Rows are independent jobs over immutable inputs; assembly stays in
    // input order no matter how they finish.
    std::vector<std::future<CompareRow>> jobs;
    for (const auto &[name, circuit] : benchmarks)
        for (const auto &arch : archs)
            jobs.push_back(std::async(std::launch::async, run_row, std::cref(name),
                                      std::cref(circuit), std::cref(arch), std::cref(opts)));

    double log_sum = 0;
    double ratio_sum = 0;
    for (auto &job : jobs) {
        CompareRow row = job.get();
        if (row.ok) {
            ++report.compared;
            if (row.t_c <= row.t_s)
                ++report.wins;
            ratio_sum += row.ratio;
            log_sum += std::log(row.ratio > 0 ? row.ratio : 1.0);
        }
        report.rows.push_back(std::move(row));
    }
    if (report.compared > 0) {
        report.arithmetic_mean = ratio_sum / report.compared;
        report.geometric_mean = std::exp(log_sum / report.compared);
    }
    return report;
}

std::vector<std::pair<std::string, Circuit>> load_benchmark_dir(const std::string &dir) {
    namespace fs = std::filesystem;
    if (!fs::is_directory(dir))
        throw Error("benchmark directory '" + dir + "' does not exist");
    std::vector<fs::path> files;
    for (const auto &entry : fs::directory_iterator(dir))
        if (entry.is_regular_file() && entry.path().extension() == ".qasm")
            files.push_back(entry.path());
    std::sort(files.begin(), files.end());
    std::vector<std::pair<std::string, Circuit>> out;
    for (const auto &p : files)
        out.emplace_back(p.stem().string(), parse_qasm_file(p.string()));
    return out;
}

} // namespace qroute
