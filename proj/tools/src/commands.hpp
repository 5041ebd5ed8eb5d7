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

#ifndef POWERLAT_TOOLS_COMMANDS_HPP_
#define POWERLAT_TOOLS_COMMANDS_HPP_

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "powerlat/lattice.hpp"
#include "run_report.hpp"

namespace powerlat::cli {

struct GlobalOptions {
  bool text = false;
  bool timings = false;
  // Atom labels, smallest first; empty keeps the enumeration order.
  std::vector<std::string> atom_order;
};

struct LoadedFile {
  nlohmann::json json;
  std::filesystem::path base_dir;
};
LoadedFile load(const std::string& path);

AtomOrder make_atom_order(const Lattice& lattice, const GlobalOptions& global);
// Parses "2,1,3" into 0-based positions; throws InputError unless it is a
// permutation of 1..n.
std::vector<std::size_t> parse_permutation(const std::string& text, std::size_t n);
// An element given on the command line: a JSON encoding, or a bare label.
Element parse_element(const Lattice& lattice, const std::string& text);
nlohmann::json labels(const Lattice& lattice, const std::vector<Element>& elements);

struct LatticeArgs {
  std::string file;
  bool laws = false;
  bool elements = false;
};
RunReport lattice_verify(const LatticeArgs& args, const GlobalOptions& global);
RunReport lattice_info(const LatticeArgs& args, const GlobalOptions& global);

struct ComplexArgs {
  std::string file;
  std::string order;
  bool search = false;
  bool rank_lex = false;
  std::size_t cap = 12;
  std::string chain_order = "lex";
  bool homology = false;
  bool sphere_check = false;
  bool no_bottom = false;
  std::vector<std::string> elements;
  std::optional<int> rank;
  std::size_t max_chains = 10'000;
};
RunReport complex_shell(const ComplexArgs& args, const GlobalOptions& global);
RunReport complex_order(const ComplexArgs& args, const GlobalOptions& global);
RunReport complex_homology(const ComplexArgs& args, const GlobalOptions& global);
RunReport complex_sphere(const ComplexArgs& args, const GlobalOptions& global);

struct MatroidArgs {
  std::string file;
  bool order_complex = false;
};
RunReport matroid_verify(const MatroidArgs& args, const GlobalOptions& global);
RunReport matroid_bases(const MatroidArgs& args, const GlobalOptions& global);
RunReport matroid_shelling_cmd(const MatroidArgs& args, const GlobalOptions& global);
RunReport matroid_exchange(const MatroidArgs& args, const GlobalOptions& global);
RunReport graph_matroid(const MatroidArgs& args, const GlobalOptions& global);

struct SrArgs {
  std::string file;
  std::string order;
};
RunReport sr_ideal(const SrArgs& args, const GlobalOptions& global);
RunReport sr_section_check(const SrArgs& args, const GlobalOptions& global);
RunReport sr_polarize(const SrArgs& args, const GlobalOptions& global);
RunReport sr_shell_polarized(const SrArgs& args, const GlobalOptions& global);
// Raw ideal text in the requested format (m2, singular or json).
std::string export_text(const std::string& file, const std::string& format);

}  // namespace powerlat::cli

#endif  // POWERLAT_TOOLS_COMMANDS_HPP_
