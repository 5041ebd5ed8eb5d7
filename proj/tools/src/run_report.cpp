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

#include "run_report.hpp"

#include <sstream>

namespace powerlat::cli {
namespace {

bool IsScalar(const nlohmann::json& j) { return !j.is_object() && !j.is_array(); }

std::string Scalar(const nlohmann::json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_boolean()) return j.get<bool>() ? "yes" : "no";
  return j.dump();
}

// Arrays of scalars (or of short scalar arrays) fit on one line.
bool IsFlat(const nlohmann::json& j) {
  if (!j.is_array()) return IsScalar(j);
  for (const auto& item : j) {
    if (item.is_array()) {
      for (const auto& x : item) {
        if (!IsScalar(x)) return false;
      }
    } else if (!IsScalar(item)) {
      return false;
    }
  }
  return true;
}

std::string Flat(const nlohmann::json& j) {
  if (!j.is_array()) return Scalar(j);
  std::string out = "(";
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (i) out += ", ";
    out += Flat(j[i]);
  }
  return out + ")";
}

void Render(std::ostream& out, const nlohmann::json& j, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      if (IsFlat(value)) {
        out << pad << key << ": " << Flat(value) << "\n";
      } else {
        out << pad << key << ":\n";
        Render(out, value, indent + 2);
      }
    }
    return;
  }
  if (j.is_array()) {
    for (const auto& item : j) {
      if (IsFlat(item)) {
        out << pad << "- " << Flat(item) << "\n";
      } else {
        out << pad << "-\n";
        Render(out, item, indent + 2);
      }
    }
    return;
  }
  out << pad << Scalar(j) << "\n";
}

}  // namespace

RunReport::RunReport(std::string command)
    : command_(std::move(command)), started_(Clock::now()), stage_start_(started_) {}

void RunReport::verdict(const std::string& name, bool passed) {
  verdicts_[name] = passed;
}

void RunReport::witness(const std::string& name, nlohmann::json value) {
  witnesses_[name] = std::move(value);
}

void RunReport::stage(const std::string& name) {
  const auto now = Clock::now();
  if (!stage_name_.empty()) {
    timings_[stage_name_] = std::chrono::duration<double, std::milli>(now - stage_start_).count();
  }
  stage_name_ = name;
  stage_start_ = now;
}

bool RunReport::holds() const {
  for (const auto& [name, passed] : verdicts_.items()) {
    if (!passed.get<bool>()) return false;
  }
  return true;
}

nlohmann::json RunReport::to_json(bool with_timings) const {
  nlohmann::json j = {{"command", command_},
                      {"inputs", inputs_},
                      {"holds", holds()},
                      {"verdicts", verdicts_},
                      {"witnesses", witnesses_},
                      {"result", result_}};
  if (with_timings) {
    auto t = timings_;
    const auto now = Clock::now();
    if (!stage_name_.empty()) {
      t[stage_name_] = std::chrono::duration<double, std::milli>(now - stage_start_).count();
    }
    t["total"] = std::chrono::duration<double, std::milli>(now - started_).count();
    j["timings_ms"] = std::move(t);
  }
  return j;
}

std::string RunReport::to_text(bool with_timings) const {
  std::ostringstream out;
  Render(out, to_json(with_timings), 0);
  return out.str();
}

}  // namespace powerlat::cli
