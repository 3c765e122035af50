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

#include <string>
#include <vector>

#include "qroute/arch.hpp"
#include "qroute/schedule.hpp"

namespace qroute {

/// ASAP (level compaction) scheduling of an already hardware-compliant
/// circuit: gates are issued in emission order, each starting as soon as
/// all of its operand qubits are free. No commutation reordering; this is
/// the neutral referee between routers. Throws ValidationError when a
/// two-qubit gate sits on an uncoupled pair.
MappedSchedule asap_schedule(const MappedCircuit &mc, const Architecture &arch);

/// Max over scheduled gates of start + duration; 0 for an empty schedule.
int64_t weighted_depth(const MappedSchedule &s, const Architecture &arch);

/// T_o: the circuit's original weighted depth, ASAP over logical qubits
/// with coupling ignored and no swaps inserted.
int64_t original_depth(const Circuit &c, const Architecture &arch);

struct ScheduleViolation {
    std::string what;
    int first_gate = -1;  // index into the scheduled list
    int second_gate = -1;
};

/// Validity per the schedule definition: (a) gates sharing a physical
/// qubit never overlap in time, and (b) non-commuting pairs sharing a
/// qubit respect emission order: the earlier gate finishes before the
/// later starts. Violations are data, not errors.
std::vector<ScheduleViolation> validate_schedule(const MappedSchedule &s,
                                                 const Architecture &arch);

/// Two-qubit gates whose operand pair is not a coupling edge.
std::vector<int> compliance_violations(const MappedCircuit &mc, const Architecture &arch);

} // namespace qroute
