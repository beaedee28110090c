// Copyright 2026 The majprop Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace majprop {

/// Caller violated a precondition (bad mode count, negative time, ...).
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Input data is structurally invalid (odd-degree Hamiltonian term, malformed file, ...).
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The propagation engine exceeded its configured term budget.
class TermCapExceeded : public std::runtime_error {
 public:
  TermCapExceeded(std::size_t cap, std::size_t reached, const std::string& context)
      : std::runtime_error("term cap exceeded (" + std::to_string(reached) + " > " +
                           std::to_string(cap) + ")" +
                           (context.empty() ? std::string() : ": " + context)),
        cap_(cap),
        reached_(reached) {}

  std::size_t cap() const { return cap_; }
  std::size_t reached() const { return reached_; }

 private:
  std::size_t cap_;
  std::size_t reached_;
};

}  // namespace majprop
