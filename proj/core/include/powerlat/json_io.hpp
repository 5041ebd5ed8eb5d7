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

// Reading JSON input files.

#ifndef POWERLAT_JSON_IO_HPP_
#define POWERLAT_JSON_IO_HPP_

#include <filesystem>

#include <nlohmann/json.hpp>

namespace powerlat {

// Parses a JSON file. Throws InputError if it cannot be opened or parsed.
nlohmann::json read_json_file(const std::filesystem::path& path);

// A string is a path relative to `base_dir` naming a JSON file; anything
// else is returned as is. `base_dir` is updated to the file's directory.
nlohmann::json resolve_json_ref(const nlohmann::json& value,
                                std::filesystem::path& base_dir);

}  // namespace powerlat

#endif  // POWERLAT_JSON_IO_HPP_
