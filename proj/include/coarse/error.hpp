// Copyright 2026 The Coarse Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace coarse {

/// Machine-readable failure codes surfaced through Error and the CLI.
enum class errc {
  invalid_argument,
  self_loop,
  duplicate_edge,
  disconnected,
  capacity_exceeded,
  empty_sphere,
  radius_margin,
  disconnected_net,
  no_convergence,
  io_error,
  bad_format,
};

const char* errc_name(errc code) noexcept;

/// Runtime error carrying the originating module and an errc code.
class Error : public std::runtime_error {
 public:
  Error(errc code, std::string module, const std::string& what)
      : std::runtime_error(what), code_(code), module_(std::move(module)) {}

  errc code() const noexcept { return code_; }
  const std::string& module() const noexcept { return module_; }

 private:
  errc code_;
  std::string module_;
};

[[noreturn]] inline void raise(errc code, std::string_view module,
                               const std::string& what) {
  throw Error(code, std::string(module), what);
}

inline const char* errc_name(errc code) noexcept {
  switch (code) {
    case errc::invalid_argument: return "invalid_argument";
    case errc::self_loop: return "self_loop";
    case errc::duplicate_edge: return "duplicate_edge";
    case errc::disconnected: return "disconnected";
    case errc::capacity_exceeded: return "capacity_exceeded";
    case errc::empty_sphere: return "empty_sphere";
    case errc::radius_margin: return "radius_margin";
    case errc::disconnected_net: return "disconnected_net";
    case errc::no_convergence: return "no_convergence";
    case errc::io_error: return "io_error";
    case errc::bad_format: return "bad_format";
  }
  return "unknown";
}

}  // namespace coarse
