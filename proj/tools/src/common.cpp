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

#include <algorithm>
#include <sstream>

#include "commands.hpp"
#include "powerlat/errors.hpp"
#include "powerlat/json_io.hpp"

namespace powerlat::cli {

LoadedFile load(const std::string& path) {
  return {read_json_file(path), std::filesystem::path(path).parent_path()};
}

AtomOrder make_atom_order(const Lattice& lattice, const GlobalOptions& global) {
  if (global.atom_order.empty()) return AtomOrder::identity(lattice);
  std::vector<std::string> names;
  for (const auto& name : global.atom_order) {
    bool known = false;
    for (std::uint32_t a = 0; a < lattice.atom_count() && !known; ++a) {
      known = lattice.atom_label(AtomId{a}) == name;
    }
    // Boolean atoms print as "{a}"; accept the bare ground label too.
    names.push_back(known ? name : "{" + name + "}");
  }
  return AtomOrder::from_labels(lattice, names);
}

std::vector<std::size_t> parse_permutation(const std::string& text, std::size_t n) {
  std::vector<std::size_t> order;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::size_t used = 0;
    long long k = 0;
    try {
      k = std::stoll(item, &used);
    } catch (const std::exception&) {
      throw InputError("order entry '" + item + "' is not a number");
    }
    if (used != item.size() || k < 1 || static_cast<std::size_t>(k) > n) {
      throw InputError("order entry '" + item + "' is not a facet position in 1.." + std::to_string(n));
    }
    order.push_back(static_cast<std::size_t>(k - 1));
  }
  auto sorted = order;
  std::sort(sorted.begin(), sorted.end());
  if (order.size() != n || std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw InputError("order must list each of the " + std::to_string(n) + " facets exactly once");
  }
  return order;
}

Element parse_element(const Lattice& lattice, const std::string& text) {
  auto j = nlohmann::json::parse(text, nullptr, false);
  if (j.is_discarded()) j = text;
  try {
    return lattice.decode(j);
  } catch (const InputError&) {
    if (j.is_string()) throw;
    return lattice.decode(nlohmann::json(text));
  }
}

nlohmann::json labels(const Lattice& lattice, const std::vector<Element>& elements) {
  auto out = nlohmann::json::array();
  for (Element x : elements) out.push_back(lattice.label(x));
  return out;
}

}  // namespace powerlat::cli
