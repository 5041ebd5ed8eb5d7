// Copyright 2026 The powerlat Authors.
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

#ifndef POWERLAT_REPORT_HPP_
#define POWERLAT_REPORT_HPP_

#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "powerlat/element.hpp"

namespace powerlat {

// Outcome of one named property check. A failed check carries the elements
// that witness the failure and a short explanation.
struct CheckResult {
  std::string name;
  bool passed = true;
  std::vector<Element> witness;
  std::vector<std::string> witness_labels;
  std::string detail;
};

// Ordered list of checks run by a verifier. `complete` is false when the
// verifier stopped early because its budget ran out; in that case passing
// checks only cover the part that was actually examined.
struct VerificationReport {
  std::vector<CheckResult> checks;
  bool complete = true;

  bool all_passed() const;
  const CheckResult* find(std::string_view name) const;
  nlohmann::json to_json() const;
};

}  // namespace powerlat

#endif  // POWERLAT_REPORT_HPP_
