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

#include "powerlat/report.hpp"

#include <algorithm>

namespace powerlat {

bool VerificationReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckResult& c) { return c.passed; });
}

const CheckResult* VerificationReport::find(std::string_view name) const {
  for (const auto& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

nlohmann::json VerificationReport::to_json() const {
  nlohmann::json out;
  out["complete"] = complete;
  out["passed"] = all_passed();
  out["checks"] = nlohmann::json::array();
  for (const auto& c : checks) {
    nlohmann::json jc = {{"name", c.name}, {"passed", c.passed}};
    if (!c.passed || !c.witness_labels.empty()) jc["witness"] = c.witness_labels;
    if (!c.detail.empty()) jc["detail"] = c.detail;
    out["checks"].push_back(std::move(jc));
  }
  return out;
}

}  // namespace powerlat
