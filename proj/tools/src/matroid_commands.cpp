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
#include "powerlat/matroid.hpp"
#include "powerlat/order_complex.hpp"

namespace powerlat::cli {
namespace {

Matroid LoadMatroid(const std::string& path) {
  auto file = load(path);
  return matroid_from_json(file.json, file.base_dir);
}

void Record(RunReport& run, const VerificationReport& report, const Lattice& lattice) {
  for (const auto& check : report.checks) {
    run.verdict(check.name, check.passed);
    if (!check.passed) {
      run.witness(check.name, {{"elements", labels(lattice, check.witness)}, {"detail", check.detail}});
    }
  }
}

void Summarize(RunReport& run, const Matroid& m) {
  const auto& lattice = m.host();
  run.result()["ground"] = lattice.spec();
  run.result()["independents"] = m.size();
  run.result()["bases"] = labels(lattice, bases(m));
}

}  // namespace

RunReport matroid_verify(const MatroidArgs& args, const GlobalOptions&) {
  RunReport run("matroid verify");
  run.add_input(args.file);
  run.stage("load");
  const auto m = LoadMatroid(args.file);
  run.stage("axioms");
  Record(run, verify_independence_axioms(m), m.host());
  const auto b = bases(m);
  run.verdict("equal_rank", check_equal_rank(m.host(), b));
  Record(run, verify_basis_axioms(m.host(), b), m.host());
  Summarize(run, m);
  return run;
}

RunReport matroid_bases(const MatroidArgs& args, const GlobalOptions&) {
  RunReport run("matroid bases");
  run.add_input(args.file);
  run.stage("load");
  const auto m = LoadMatroid(args.file);
  run.stage("bases");
  run.verdict("equal_rank", check_equal_rank(m.host(), bases(m)));
  Summarize(run, m);
  return run;
}

RunReport matroid_shelling_cmd(const MatroidArgs& args, const GlobalOptions& global) {
  RunReport run("matroid shelling");
  run.add_input(args.file);
  run.stage("load");
  const auto m = LoadMatroid(args.file);
  const auto& lattice = m.host();
  const auto order = make_atom_order(lattice, global);
  run.stage("shelling");
  const auto sh = matroid_shelling(m, order);
  run.result()["order"] = labels(lattice, sh.order);
  run.verdict("basis_order_shelling", sh.verdict.shellable);
  if (!sh.verdict.shellable) {
    run.witness("basis_order_shelling",
                {{"positions", {sh.verdict.first, sh.verdict.second}}, {"detail", sh.verdict.detail}});
  }
  if (args.order_complex) {
    run.stage("order complex");
    const auto check = complex_order_shelling_check(independence_complex(m), order);
    run.verdict("chain_order_shelling", check.hypothesis && check.verdict.shellable);
    run.result()["chains"] = check.chains;
  }
  return run;
}

RunReport matroid_exchange(const MatroidArgs& args, const GlobalOptions&) {
  RunReport run("matroid exchange");
  run.add_input(args.file);
  run.stage("load");
  const auto m = LoadMatroid(args.file);
  const auto& lattice = m.host();
  run.stage("exchange");
  const auto summary = exhaustive_dual_exchange(lattice, bases(m));
  run.result() = {{"triples", summary.triples}, {"failures", summary.failures}};
  run.verdict("dual_exchange", summary.failures == 0);
  if (summary.first_failure) {
    const auto& [x, y, a] = *summary.first_failure;
    run.witness("dual_exchange", {{"x", lattice.label(x)},
                                  {"y", lattice.label(y)},
                                  {"atom", lattice.atom_label(a)}});
  }
  return run;
}

RunReport graph_matroid(const MatroidArgs& args, const GlobalOptions&) {
  RunReport run("graph matroid");
  run.add_input(args.file);
  run.stage("load");
  const auto graph = graph_from_json(load(args.file).json);
  run.stage("matroid");
  const auto m = graphic_matroid(graph);
  Record(run, verify_independence_axioms(m), m.host());
  run.verdict("equal_rank", check_equal_rank(m.host(), bases(m)));
  Summarize(run, m);
  return run;
}

}  // namespace powerlat::cli
