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

#include "qroute/arch.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <fstream>
#include <sstream>

#include <yaml-cpp/yaml.h>

#include "qroute/errors.hpp"

#ifndef QROUTE_DEFAULT_DATA_DIR
#define QROUTE_DEFAULT_DATA_DIR ""
#endif

namespace qroute {

DurationMap::DurationMap() {
    cycles_.fill(1);
    cycles_[static_cast<int>(GateKind::Cx)] = 2;
    cycles_[static_cast<int>(GateKind::Swap)] = 6;
    cycles_[static_cast<int>(GateKind::Barrier)] = 0;
}

int DurationMap::cycles(const std::string &name) const {
    GateKind k;
    if (!kind_from_name(name, k))
        throw ArchError("unknown gate kind '" + name + "' in duration lookup");
    return cycles(k);
}

void DurationMap::set(GateKind k, int c) {
    if (k != GateKind::Barrier && c < 1)
        throw ArchError("duration of '" + kind_name(k) + "' must be >= 1 cycle");
    if (c < 0)
        throw ArchError("duration of '" + kind_name(k) + "' must be >= 0");
    cycles_[static_cast<int>(k)] = c;
}

Architecture::Architecture(std::string name, int num_qubits,
                           std::vector<std::pair<int, int>> edges,
                           std::optional<std::vector<GridPos>> grid, DurationMap durations)
    : name_(std::move(name)), num_qubits_(num_qubits), grid_(std::move(grid)),
      durations_(durations) {
    if (num_qubits_ < 1)
        throw ArchError("architecture '" + name_ + "': num_qubits must be >= 1");

    edges_.reserve(edges.size());
    for (auto [a, b] : edges) {
        if (a < 0 || a >= num_qubits_ || b < 0 || b >= num_qubits_)
            throw ArchError("architecture '" + name_ + "': edge (" + std::to_string(a) + "," +
                            std::to_string(b) + ") has out-of-range qubit");
        if (a == b)
            throw ArchError("architecture '" + name_ + "': self-loop on qubit " +
                            std::to_string(a));
        edges_.emplace_back(std::min(a, b), std::max(a, b));
    }
    std::sort(edges_.begin(), edges_.end());
    for (size_t i = 1; i < edges_.size(); ++i)
        if (edges_[i] == edges_[i - 1])
            throw ArchError("architecture '" + name_ + "': duplicate edge (" +
                            std::to_string(edges_[i].first) + "," +
                            std::to_string(edges_[i].second) + ")");

    adj_.assign(num_qubits_, {});
    for (auto [a, b] : edges_) {
        adj_[a].push_back(b);
        adj_[b].push_back(a);
    }
    for (auto &nbrs : adj_)
        std::sort(nbrs.begin(), nbrs.end());

    // Connectivity: routing between components is impossible.
    std::vector<char> seen(num_qubits_, 0);
    std::deque<int> queue{0};
    seen[0] = 1;
    int reached = 1;
    while (!queue.empty()) {
        int p = queue.front();
        queue.pop_front();
        for (int q : adj_[p])
            if (!seen[q]) {
                seen[q] = 1;
                ++reached;
                queue.push_back(q);
            }
    }
    if (reached != num_qubits_)
        throw ArchError("architecture '" + name_ + "': coupling graph is disconnected (" +
                        std::to_string(num_qubits_ - reached) + " unreachable qubit(s))");

    if (grid_) {
        if (static_cast<int>(grid_->size()) != num_qubits_)
            throw ArchError("architecture '" + name_ + "': grid must assign every qubit");
        for (int p = 0; p < num_qubits_; ++p)
            for (int q = p + 1; q < num_qubits_; ++q)
                if ((*grid_)[p] == (*grid_)[q])
                    throw ArchError("architecture '" + name_ + "': qubits " + std::to_string(p) +
                                    " and " + std::to_string(q) +
                                    " share grid coordinates");
        for (auto [a, b] : edges_) {
            int d = std::abs((*grid_)[a].row - (*grid_)[b].row) +
                    std::abs((*grid_)[a].col - (*grid_)[b].col);
            if (d != 1)
                throw ArchError("architecture '" + name_ + "': edge (" + std::to_string(a) + "," +
                                std::to_string(b) + ") is not lattice-adjacent on the grid");
        }
    }
}

bool Architecture::coupled(int p, int q) const {
    if (p > q)
        std::swap(p, q);
    return std::binary_search(edges_.begin(), edges_.end(), std::make_pair(p, q));
}

DistanceMatrix compute_distances(const Architecture &arch) {
    const int n = arch.num_qubits();
    std::vector<int> dist(static_cast<size_t>(n) * n, -1);
    std::deque<int> queue;
    for (int src = 0; src < n; ++src) {
        int *row = dist.data() + static_cast<size_t>(src) * n;
        row[src] = 0;
        queue.assign(1, src);
        while (!queue.empty()) {
            int p = queue.front();
            queue.pop_front();
            for (int q : arch.neighbors(p))
                if (row[q] < 0) {
                    row[q] = row[p] + 1;
                    queue.push_back(q);
                }
        }
    }
    return DistanceMatrix(n, std::move(dist));
}

std::pair<int, int> hd_vd(const Architecture &arch, int p_a, int p_b) {
    if (!arch.has_grid())
        throw ArchError("architecture '" + arch.name() +
                        "' has no grid coordinates; horizontal/vertical distance undefined");
    const auto &g = arch.grid();
    return {std::abs(g[p_a].col - g[p_b].col), std::abs(g[p_a].row - g[p_b].row)};
}

namespace {

std::string node_pos(const YAML::Node &n) {
    return "line " + std::to_string(n.Mark().line + 1);
}

DurationMap parse_duration_node(const YAML::Node &node, DurationMap base) {
    if (!node.IsMap())
        throw ArchError("'durations' must be a map of gate name to cycles (" + node_pos(node) +
                        ")");
    for (auto it : node) {
        std::string key = it.first.as<std::string>();
        GateKind k;
        if (!kind_from_name(key, k))
            throw ArchError("unknown gate kind '" + key + "' in durations (" +
                            node_pos(it.first) + ")");
        int cycles;
        try {
            cycles = it.second.as<int>();
        } catch (const YAML::Exception &) {
            throw ArchError("duration of '" + key + "' must be an integer (" +
                            node_pos(it.second) + ")");
        }
        base.set(k, cycles);
    }
    return base;
}

} // namespace

Architecture load_architecture_text(const std::string &text, const std::string &source_name) {
    YAML::Node root;
    try {
        root = YAML::Load(text);
    } catch (const YAML::Exception &e) {
        throw ArchError(source_name + ": parse error at line " + std::to_string(e.mark.line + 1) +
                        ", column " + std::to_string(e.mark.column + 1) + ": " + e.msg);
    }
    if (!root.IsMap())
        throw ArchError(source_name + ": document must be a key/value map");

    std::string name = root["name"] ? root["name"].as<std::string>() : source_name;
    if (!root["num_qubits"])
        throw ArchError(source_name + ": missing field 'num_qubits'");
    int num_qubits;
    try {
        num_qubits = root["num_qubits"].as<int>();
    } catch (const YAML::Exception &) {
        throw ArchError(source_name + ": 'num_qubits' must be an integer (" +
                        node_pos(root["num_qubits"]) + ")");
    }

    if (!root["edges"] || !root["edges"].IsSequence())
        throw ArchError(source_name + ": missing or non-list field 'edges'");
    std::vector<std::pair<int, int>> edges;
    for (const auto &e : root["edges"]) {
        if (!e.IsSequence() || e.size() != 2)
            throw ArchError(source_name + ": each edge must be a 2-int list (" + node_pos(e) +
                            ")");
        try {
            edges.emplace_back(e[0].as<int>(), e[1].as<int>());
        } catch (const YAML::Exception &) {
            throw ArchError(source_name + ": edge endpoints must be integers (" + node_pos(e) +
                            ")");
        }
    }

    std::optional<std::vector<GridPos>> grid;
    if (root["grid"]) {
        if (!root["grid"].IsSequence())
            throw ArchError(source_name + ": 'grid' must be a list of [qubit,row,col]");
        std::vector<GridPos> coords(num_qubits);
        std::vector<char> have(std::max(num_qubits, 1), 0);
        for (const auto &g : root["grid"]) {
            if (!g.IsSequence() || g.size() != 3)
                throw ArchError(source_name + ": each grid entry must be [qubit,row,col] (" +
                                node_pos(g) + ")");
            int q = g[0].as<int>();
            if (q < 0 || q >= num_qubits)
                throw ArchError(source_name + ": grid qubit " + std::to_string(q) +
                                " out of range (" + node_pos(g) + ")");
            if (have[q])
                throw ArchError(source_name + ": grid assigns qubit " + std::to_string(q) +
                                " twice (" + node_pos(g) + ")");
            have[q] = 1;
            coords[q] = GridPos{g[1].as<int>(), g[2].as<int>()};
        }
        for (int q = 0; q < num_qubits; ++q)
            if (!have[q])
                throw ArchError(source_name + ": grid missing qubit " + std::to_string(q));
        grid = std::move(coords);
    }

    DurationMap durations;
    if (root["durations"])
        durations = parse_duration_node(root["durations"], DurationMap());

    return Architecture(std::move(name), num_qubits, std::move(edges), std::move(grid),
                        durations);
}

Architecture load_architecture_file(const std::string &path) {
    std::ifstream in(path);
    if (!in)
        throw ArchError("cannot open architecture file '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return load_architecture_text(buf.str(), path);
}

Architecture make_line(int n) {
    if (n < 2)
        throw ArchError("line-N needs N >= 2");
    std::vector<std::pair<int, int>> edges;
    std::vector<GridPos> grid;
    for (int i = 0; i < n; ++i) {
        grid.push_back({0, i});
        if (i + 1 < n)
            edges.emplace_back(i, i + 1);
    }
    return Architecture("line-" + std::to_string(n), n, std::move(edges), std::move(grid));
}

Architecture make_grid(int rows, int cols, const std::string &name) {
    if (rows < 1 || cols < 1 || static_cast<long long>(rows) * cols < 2)
        throw ArchError("grid-RxC needs at least 2 qubits");
    std::vector<std::pair<int, int>> edges;
    std::vector<GridPos> grid;
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) {
            int p = r * cols + c;
            grid.push_back({r, c});
            if (c + 1 < cols)
                edges.emplace_back(p, p + 1);
            if (r + 1 < rows)
                edges.emplace_back(p, p + cols);
        }
    std::string n = name.empty()
                        ? "grid-" + std::to_string(rows) + "x" + std::to_string(cols)
                        : name;
    return Architecture(std::move(n), rows * cols, std::move(edges), std::move(grid));
}

namespace {

std::string data_dir() {
    if (const char *env = std::getenv("QROUTE_DATA_DIR"); env && *env)
        return env;
    return QROUTE_DEFAULT_DATA_DIR;
}

bool parse_dims(const std::string &s, char sep, int &a, int &b) {
    auto pos = s.find(sep);
    if (pos == std::string::npos)
        return false;
    try {
        size_t c1, c2;
        a = std::stoi(s.substr(0, pos), &c1);
        b = std::stoi(s.substr(pos + 1), &c2);
        return c1 == pos && c2 == s.size() - pos - 1;
    } catch (...) {
        return false;
    }
}

} // namespace

Architecture builtin(const std::string &name) {
    if (name == "grid-6x6")
        return make_grid(6, 6, "grid-6x6");
    if (name == "q16-melbourne")
        return make_grid(2, 8, "q16-melbourne");
    if (name.rfind("line-", 0) == 0) {
        try {
            size_t consumed;
            int n = std::stoi(name.substr(5), &consumed);
            if (consumed == name.size() - 5)
                return make_line(n);
        } catch (...) {
        }
        throw ArchError("unknown architecture '" + name + "'");
    }
    if (name.rfind("grid-", 0) == 0) {
        int r, c;
        if (parse_dims(name.substr(5), 'x', r, c))
            return make_grid(r, c, name);
        throw ArchError("unknown architecture '" + name + "'");
    }
    if (name == "q20-tokyo" || name == "sycamore-54") {
        std::string dir = data_dir();
        if (dir.empty())
            throw ArchError("no data directory for bundled architecture '" + name +
                            "'; set QROUTE_DATA_DIR");
        return load_architecture_file(dir + "/architectures/" + name + ".yaml");
    }
    throw ArchError("unknown architecture '" + name + "'");
}

std::vector<std::string> builtin_names() {
    return {"q16-melbourne", "q20-tokyo", "grid-6x6", "sycamore-54", "line-<N>", "grid-<R>x<C>"};
}

DurationMap load_durations(const std::string &name_or_path) {
    if (name_or_path == "default")
        return DurationMap();
    std::ifstream in(name_or_path);
    if (!in)
        throw ArchError("cannot open durations file '" + name_or_path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    YAML::Node root;
    try {
        root = YAML::Load(buf.str());
    } catch (const YAML::Exception &e) {
        throw ArchError(name_or_path + ": parse error at line " +
                        std::to_string(e.mark.line + 1) + ": " + e.msg);
    }
    if (!root.IsMap() || !root["durations"])
        throw ArchError(name_or_path + ": expected a map with a 'durations' key");
    return parse_duration_node(root["durations"], DurationMap());
}

} // namespace qroute
