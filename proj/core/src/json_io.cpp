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

#include "powerlat/json_io.hpp"

#include <fstream>

#include "powerlat/errors.hpp"

namespace powerlat {

nlohmann::json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path.string());
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

nlohmann::json resolve_json_ref(const nlohmann::json& value,
                                std::filesystem::path& base_dir) {
  if (!value.is_string()) return value;
  const auto path = base_dir / value.get<std::string>();
  base_dir = path.parent_path();
  return read_json_file(path);
}

}  // namespace powerlat
