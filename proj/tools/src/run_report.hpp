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

#ifndef POWERLAT_TOOLS_RUN_REPORT_HPP_
#define POWERLAT_TOOLS_RUN_REPORT_HPP_

#include <chrono>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace powerlat::cli {

// Outcome of one command. The JSON and text renderings are produced from the
// same document, so they carry identical content.
class RunReport {
 public:
  explicit RunReport(std::string command);

  void add_input(const std::string& path) { inputs_.push_back(path); }
  // Records a named check; any failing verdict makes the run exit with 1.
  void verdict(const std::string& name, bool passed);
  void witness(const std::string& name, nlohmann::json value);
  nlohmann::json& result() { return result_; }
  void stage(const std::string& name);

  bool holds() const;
  nlohmann::json to_json(bool with_timings) const;
  std::string to_text(bool with_timings) const;

 private:
  using Clock = std::chrono::steady_clock;

  std::string command_;
  std::vector<std::string> inputs_;
  nlohmann::json verdicts_ = nlohmann::json::object();
  nlohmann::json witnesses_ = nlohmann::json::object();
  nlohmann::json result_ = nlohmann::json::object();
  nlohmann::json timings_ = nlohmann::json::object();
  Clock::time_point started_;
  Clock::time_point stage_start_;
  std::string stage_name_;
};

}  // namespace powerlat::cli

#endif  // POWERLAT_TOOLS_RUN_REPORT_HPP_
