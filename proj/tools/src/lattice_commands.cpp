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

#include "commands.hpp"
#include "powerlat/errors.hpp"
#include "powerlat/instances.hpp"
#include "powerlat/pcomplex.hpp"

namespace powerlat::cli {
namespace {

void Record(RunReport& run, const VerificationReport& report, const Lattice& lattice,
            const std::string& prefix) {
  if (!report.complete) {
    throw BudgetExceeded("verification stopped at the pair-operation budget before all checks ran");
  }
  for (const auto& check : report.checks) {
    run.verdict(prefix + check.name, check.passed);
    if (check.passed) continue;
    nlohmann::json w = {{"elements", labels(lattice, check.witness)}, {"detail", check.detail}};
    run.witness(prefix + check.name, std::move(w));
  }
}

}  // namespace

RunReport lattice_verify(const LatticeArgs& args, const GlobalOptions&) {
  RunReport run("lattice verify");
  run.add_input(args.file);
  run.stage("load");
  auto file = load(args.file);
  auto lattice = lattice_from_json(file.json, file.base_dir);
  run.stage("verify");
  Record(run, verify_power_lattice(*lattice), *lattice, "");
  run.result() = {{"kind", lattice->kind()}, {"size", lattice->size()}, {"height", lattice->height()}};
  if (args.laws) {
    Record(run, check_valuation_laws(*lattice), *lattice, "laws.");
    nlohmann::json strict = nullptr;
    if (const auto s = strict_join_witness(*lattice)) {
      strict = {{"x", lattice->label(s->x)},
                {"y", lattice->label(s->y)},
                {"join", lattice->label(lattice->join(s->x, s->y))},
                {"atom", lattice->atom_label(s->atom)}};
    }
    run.result()["strict_join"] = std::move(strict);
  }
  return run;
}

RunReport lattice_info(const LatticeArgs& args, const GlobalOptions& global) {
  RunReport run("lattice info");
  run.add_input(args.file);
  run.stage("load");
  auto file = load(args.file);
  auto lattice = lattice_from_json(file.json, file.base_dir);
  const auto order = make_atom_order(*lattice, global);
  run.stage("describe");
  auto atoms = nlohmann::json::array();
  for (AtomId a : order.sequence()) atoms.push_back(lattice->atom_label(a));
  auto levels = nlohmann::json::array();
  for (int r = 0; r <= lattice->height(); ++r) levels.push_back(lattice->level(r).size());
  auto& result = run.result();
  result = {{"kind", lattice->kind()},
            {"size", lattice->size()},
            {"height", lattice->height()},
            {"atoms", atoms},
            {"rank_sizes", levels},
            {"bottom", lattice->label(lattice->bottom())},
            {"top", lattice->label(lattice->top())}};
  if (args.elements) {
    auto elements = nlohmann::json::array();
    for (int r = 0; r <= lattice->height(); ++r) {
      for (Element x : sort_rank_lex(*lattice, {lattice->level(r).begin(), lattice->level(r).end()},
                                     order)) {
        auto factors = nlohmann::json::array();
        for (AtomId a : factorization(*lattice, x, order)) factors.push_back(lattice->atom_label(a));
        elements.push_back({{"element", lattice->label(x)},
                            {"rank", r},
                            {"valuation", valuation(*lattice, x)},
                            {"factorization", factors}});
      }
    }
    result["elements"] = std::move(elements);
  }
  return run;
}

}  // namespace powerlat::cli
