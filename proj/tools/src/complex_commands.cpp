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

#include "commands.hpp"
#include "powerlat/errors.hpp"
#include "powerlat/homology.hpp"
#include "powerlat/instances.hpp"
#include "powerlat/order_complex.hpp"
#include "powerlat/pcomplex.hpp"
#include "powerlat/simplicial.hpp"

namespace powerlat::cli {
namespace {

PComplex LoadComplex(const std::string& path) {
  auto file = load(path);
  return complex_from_json(file.json, file.base_dir);
}

nlohmann::json ChainLabels(const Lattice& lattice, const std::vector<Chain>& chains) {
  auto out = nlohmann::json::array();
  for (const auto& c : chains) out.push_back(labels(lattice, c));
  return out;
}

nlohmann::json ShellingWitness(const Lattice& lattice, const std::vector<Element>& order,
                               const ShellingVerdict& v) {
  nlohmann::json w = {{"positions", {v.first, v.second}}, {"detail", v.detail}};
  if (v.first >= 1 && v.second >= 1 && v.second <= order.size()) {
    w["facets"] = {lattice.label(order[v.first - 1]), lattice.label(order[v.second - 1])};
  }
  return w;
}

OrderComplexBudget BudgetOf(const ComplexArgs& args) {
  OrderComplexBudget budget;
  budget.max_chains = args.max_chains;
  return budget;
}

}  // namespace

RunReport complex_shell(const ComplexArgs& args, const GlobalOptions& global) {
  RunReport run("complex shell");
  run.add_input(args.file);
  run.stage("load");
  const auto complex = LoadComplex(args.file);
  const auto& lattice = complex.host();
  run.result()["facets"] = labels(lattice, complex.facets());
  if (!complex.is_pure()) {
    run.verdict("pure", false);
    run.witness("pure", "facets of different ranks; shellings are defined for pure complexes only");
    return run;
  }
  run.stage("shell");
  std::vector<Element> order;
  if (!args.order.empty()) {
    for (std::size_t k : parse_permutation(args.order, complex.facets().size())) {
      order.push_back(complex.facets()[k]);
    }
  } else if (args.rank_lex) {
    order = sort_rank_lex(lattice, complex.facets(), make_atom_order(lattice, global));
  }
  if (!order.empty()) {
    const auto v = verify_shelling(complex, order);
    run.result()["order"] = labels(lattice, order);
    run.verdict("shelling", v.shellable);
    if (!v.shellable) run.witness("shelling", ShellingWitness(lattice, order, v));
    return run;
  }
  const auto found = find_shelling(complex, args.cap);
  run.verdict("shellable", found.has_value());
  if (found) {
    run.result()["order"] = labels(lattice, *found);
  } else {
    run.witness("shellable", "no shelling (exhaustive)");
  }
  return run;
}

RunReport complex_order(const ComplexArgs& args, const GlobalOptions& global) {
  RunReport run("complex order");
  run.add_input(args.file);
  run.stage("load");
  const auto complex = LoadComplex(args.file);
  const auto& lattice = complex.host();
  const auto atom_order = make_atom_order(lattice, global);
  if (args.chain_order != "lex" && args.chain_order != "shelling") {
    throw InputError("--chain-order must be lex or shelling");
  }
  run.stage("chains");
  auto oc = order_complex(complex, !args.no_bottom, BudgetOf(args));
  const RankLexIndex levels(lattice, atom_order);
  auto chains = oc.chains;
  const bool shelling = args.chain_order == "shelling";
  std::sort(chains.begin(), chains.end(), [&](const Chain& x, const Chain& y) {
    return (shelling ? compare_shelling_order(lattice, levels, x, y)
                     : compare_reverse_lex(lattice, levels, x, y)) < 0;
  });
  auto& result = run.result();
  result["chains"] = ChainLabels(lattice, chains);
  result["dimension"] = oc.complex.dimension();
  if (shelling) {
    run.stage("shelling");
    const auto check = complex_order_shelling_check(complex, atom_order, BudgetOf(args));
    run.verdict("facet_order_shelling", check.hypothesis);
    run.verdict("chain_order_shelling", check.verdict.shellable);
    if (!check.verdict.shellable) {
      run.witness("chain_order_shelling",
                  {{"positions", {check.verdict.first, check.verdict.second}},
                   {"detail", check.verdict.detail}});
    }
  }
  if (args.homology) {
    run.stage("homology");
    result["reduced_betti"] = reduced_betti(oc.complex);
  }
  if (args.sphere_check) {
    run.stage("wedge");
    if (!oc.complex.is_pure()) throw PreconditionError("the wedge check needs a pure order complex");
    const auto wedge = check_wedge(oc.complex);
    run.verdict("wedge_of_spheres", wedge.wedge);
    result["spheres"] = wedge.spheres;
    result["reduced_betti"] = wedge.betti;
  }
  return run;
}

RunReport complex_homology(const ComplexArgs& args, const GlobalOptions&) {
  RunReport run("complex homology");
  run.add_input(args.file);
  run.stage("load");
  auto file = load(args.file);
  SimplicialComplex sc;
  if (file.json.is_object() && file.json.contains("vertices")) {
    sc = simplicial_from_json(file.json);
  } else {
    // The proper part's order complex is the barycentric subdivision.
    const auto complex = complex_from_json(file.json, file.base_dir);
    sc = order_complex(complex, false, BudgetOf(args)).complex;
  }
  run.stage("homology");
  run.result() = {{"dimension", sc.dimension()}, {"reduced_betti", reduced_betti(sc)}};
  return run;
}

RunReport complex_sphere(const ComplexArgs& args, const GlobalOptions& global) {
  RunReport run("complex sphere");
  run.add_input(args.file);
  run.stage("load");
  auto file = load(args.file);
  const auto lattice = lattice_from_json(file.json, file.base_dir);
  const auto atom_order = make_atom_order(*lattice, global);
  std::vector<Element> targets;
  for (const auto& text : args.elements) targets.push_back(parse_element(*lattice, text));
  if (args.rank) {
    const auto level = lattice->level(*args.rank);
    if (level.empty()) throw InputError("no elements of rank " + std::to_string(*args.rank));
    targets.insert(targets.end(), level.begin(), level.end());
  }
  if (args.elements.empty() && !args.rank) {
    for (int r = 2; r <= lattice->height(); ++r) {
      const auto level = lattice->level(r);
      targets.insert(targets.end(), level.begin(), level.end());
    }
  }
  run.stage("spheres");
  auto rows = nlohmann::json::array();
  for (Element x : targets) {
    const auto check = sphere_order_shelling_check(lattice, x, atom_order, BudgetOf(args));
    const auto name = lattice->label(x);
    const bool ok = check.hypothesis && check.verdict.shellable;
    run.verdict("sphere " + name, ok);
    if (!ok) {
      run.witness("sphere " + name, {{"facet_order_shelling", check.hypothesis},
                                     {"positions", {check.verdict.first, check.verdict.second}},
                                     {"detail", check.verdict.detail}});
    }
    rows.push_back({{"element", name}, {"rank", lattice->rank(x)}, {"chains", check.chains}});
  }
  run.result()["spheres"] = std::move(rows);
  return run;
}

}  // namespace powerlat::cli
