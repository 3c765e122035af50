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

#include <stdexcept>
#include <string>

namespace qroute {

/// Base class for all qroute errors. `exit_code()` is the process exit
/// status the CLI maps the error to.
class Error : public std::runtime_error {
  public:
    explicit Error(const std::string &msg) : std::runtime_error(msg) {}
    virtual int exit_code() const { return 1; }
};

/// Malformed or unsupported OpenQASM input (exit code 2).
class QasmError : public Error {
  public:
    using Error::Error;
    int exit_code() const override { return 2; }
};

/// Architecture description problems: unknown name, bad file, violated
/// structural invariant (exit code 3).
class ArchError : public Error {
  public:
    using Error::Error;
    int exit_code() const override { return 3; }
};

/// A circuit or schedule breaks a structural contract (uncoupled
/// two-qubit gate, invalid schedule); generic failure (exit code 1).
class ValidationError : public Error {
  public:
    using Error::Error;
};

/// Circuit needs more logical qubits than the device provides (exit code 4).
class CapacityError : public Error {
  public:
    using Error::Error;
    int exit_code() const override { return 4; }
};

/// A should-be-unreachable state: progress violation, budget overflow
/// (exit code 5).
class InternalError : public Error {
  public:
    using Error::Error;
    int exit_code() const override { return 5; }
};

} // namespace qroute
