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

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qroute/gate.hpp"
#include "qroute/mapped.hpp"

namespace qroute {

/// Parses the practical OpenQASM 2.0 subset: OPENQASM header, include
/// lines (ignored), qreg/creg declarations, the supported gate statements,
/// measure and barrier. Registers flatten to one logical index space in
/// declaration order. Angle expressions may use numeric literals, pi,
/// parentheses and + - * /.
///
/// Gate definitions, opaque, if and reset are hard errors; silent
/// pass-through would corrupt routing. Throws QasmError with line/column.
Circuit parse_qasm(const std::string &text, const std::string &source_name = "<string>");
Circuit parse_qasm_file(const std::string &path);

/// Emits valid OpenQASM 2.0 for a mapped circuit: one qreg over the
/// physical qubits, inserted swaps as `swap` statements, and a header
/// comment recording the initial mapping. Output is deterministic
/// byte-for-byte (LF endings, params at 12 significant digits).
std::string emit_qasm(const MappedCircuit &mc);

/// Recovers the `// initial mapping:` header comment written by emit_qasm.
std::optional<std::vector<int>> parse_initial_mapping_comment(const std::string &text);

/// Rewrites every swap(a,b) as cx(a,b); cx(b,a); cx(a,b). Output contains
/// no swap gates; under default durations 3 * cx = swap, so the weighted
/// depth is unchanged.
MappedCircuit decompose_swaps(const MappedCircuit &mc);

/// Wraps a logical circuit as an identity-mapped physical circuit (used
/// by tools that schedule or emit an unrouted circuit).
MappedCircuit as_mapped(const Circuit &c, int num_physical);

} // namespace qroute
