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

#include "cli.hpp"

#include <functional>
#include <string>

#include <CLI11.hpp>

#include "commands.hpp"
#include "powerlat/errors.hpp"

namespace powerlat::cli {
namespace {

constexpr int kExitFails = 1;
constexpr int kExitUsage = 2;

using Action = std::function<RunReport()>;

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Power lattices, P-complexes, matroids and multicomplex ideals", "powerlat"};
  app.fallthrough();
  app.require_subcommand(1);

  GlobalOptions global;
  app.add_flag("--text", global.text, "Human-readable output instead of JSON");
  app.add_flag("--timings", global.timings, "Include per-stage wall-clock timings");
  app.add_option("--atom-order", global.atom_order, "Atom labels, smallest first")->delimiter(',');

  Action action;
  std::string raw_output;
  bool raw = false;

  LatticeArgs lattice_args;
  auto* lattice = app.add_subcommand("lattice", "Power-lattice verification");
  lattice->require_subcommand(1);
  auto* lverify = lattice->add_subcommand("verify", "Check the power-lattice axioms");
  lverify->add_option("file", lattice_args.file, "Lattice JSON")->required();
  lverify->add_flag("--laws", lattice_args.laws, "Also check the valuation laws on all pairs");
  lverify->callback([&] { action = [&] { return lattice_verify(lattice_args, global); }; });
  auto* linfo = lattice->add_subcommand("info", "Sizes, atoms and factorizations");
  linfo->add_option("file", lattice_args.file, "Lattice JSON")->required();
  linfo->add_flag("--elements", lattice_args.elements, "List every element");
  linfo->callback([&] { action = [&] { return lattice_info(lattice_args, global); }; });

  ComplexArgs complex_args;
  auto* complex = app.add_subcommand("complex", "P-complexes and order complexes");
  complex->require_subcommand(1);
  auto* shell = complex->add_subcommand("shell", "Verify or search for a shelling");
  shell->add_option("file", complex_args.file, "Complex JSON")->required();
  auto* order_opt = shell->add_option("--order", complex_args.order,
                                      "Facet positions (1-based, comma separated)");
  shell->add_flag("--search", complex_args.search, "Search for a shelling (default)")
      ->excludes(order_opt);
  shell->add_flag("--rank-lex", complex_args.rank_lex, "Verify the rank-lex facet order")
      ->excludes(order_opt);
  shell->add_option("--cap", complex_args.cap, "Maximum facet count for the search")
      ->capture_default_str();
  shell->callback([&] { action = [&] { return complex_shell(complex_args, global); }; });

  auto* order = complex->add_subcommand("order", "Maximal chains of the order complex");
  order->add_option("file", complex_args.file, "Complex JSON")->required();
  order->add_option("--chain-order", complex_args.chain_order, "lex or shelling")
      ->check(CLI::IsMember({"lex", "shelling"}))
      ->capture_default_str();
  order->add_flag("--homology", complex_args.homology, "Reduced rational Betti numbers");
  order->add_flag("--sphere-check", complex_args.sphere_check, "Check for a wedge of spheres");
  order->add_flag("--no-bottom", complex_args.no_bottom, "Drop the bottom element from chains");
  order->add_option("--max-chains", complex_args.max_chains, "Chain budget")->capture_default_str();
  order->callback([&] { action = [&] { return complex_order(complex_args, global); }; });

  auto* homology = complex->add_subcommand("homology", "Reduced rational homology");
  homology->add_option("file", complex_args.file, "Simplicial or P-complex JSON")->required();
  homology->callback([&] { action = [&] { return complex_homology(complex_args, global); }; });

  auto* sphere = complex->add_subcommand("sphere", "Order-complex shellings of lower intervals");
  sphere->add_option("file", complex_args.file, "Lattice JSON")->required();
  sphere->add_option("--element", complex_args.elements, "Element encodings or labels");
  sphere->add_option("--rank", complex_args.rank, "All elements of this rank");
  sphere->add_option("--max-chains", complex_args.max_chains, "Chain budget")->capture_default_str();
  sphere->callback([&] { action = [&] { return complex_sphere(complex_args, global); }; });

  MatroidArgs matroid_args;
  auto* matroid = app.add_subcommand("matroid", "Matroids on power lattices");
  matroid->require_subcommand(1);
  const std::pair<const char*, RunReport (*)(const MatroidArgs&, const GlobalOptions&)>
      matroid_cmds[] = {{"verify", matroid_verify},
                        {"bases", matroid_bases},
                        {"shelling", matroid_shelling_cmd},
                        {"exchange", matroid_exchange}};
  for (const auto& [name, fn] : matroid_cmds) {
    auto* sub = matroid->add_subcommand(name);
    sub->add_option("file", matroid_args.file, "Matroid or graph JSON")->required();
    if (std::string(name) == "shelling") {
      sub->add_flag("--order-complex", matroid_args.order_complex,
                    "Also check the chain-order shelling of the independence complex");
    }
    sub->callback([&, fn = fn] { action = [&, fn] { return fn(matroid_args, global); }; });
  }
  matroid->get_subcommand("verify")->description("Independence and basis axioms");
  matroid->get_subcommand("bases")->description("List the bases");
  matroid->get_subcommand("shelling")->description("Shelling of the independence complex");
  matroid->get_subcommand("exchange")->description("Exhaustive dual-exchange check");

  auto* graph = app.add_subcommand("graph", "Weighted graphs");
  graph->require_subcommand(1);
  auto* gmatroid = graph->add_subcommand("matroid", "Graphic matroid of a weighted graph");
  gmatroid->add_option("file", matroid_args.file, "Graph JSON")->required();
  gmatroid->callback([&] { action = [&] { return graph_matroid(matroid_args, global); }; });

  SrArgs sr_args;
  auto* sr = app.add_subcommand("sr", "Multicomplex ideals and polarization");
  sr->require_subcommand(1);
  auto* ideal = sr->add_subcommand("ideal", "Minimal nonfaces");
  ideal->add_option("file", sr_args.file, "Multicomplex JSON")->required();
  ideal->callback([&] { action = [&] { return sr_ideal(sr_args, global); }; });
  auto* section = sr->add_subcommand("section-check", "Nonface ideal against the facet intersection");
  section->add_option("file", sr_args.file, "Multicomplex JSON")->required();
  section->callback([&] { action = [&] { return sr_section_check(sr_args, global); }; });
  auto* polarize = sr->add_subcommand("polarize", "Polarized ideal and complex");
  polarize->add_option("file", sr_args.file, "Multicomplex JSON")->required();
  polarize->callback([&] { action = [&] { return sr_polarize(sr_args, global); }; });
  auto* shellpol = sr->add_subcommand("shell-polarized", "Non-pure shelling of the polarization");
  shellpol->add_option("file", sr_args.file, "Multicomplex JSON")->required();
  shellpol->add_option("--order", sr_args.order, "Shelling of the multicomplex (1-based facet positions)");
  shellpol->callback([&] { action = [&] { return sr_shell_polarized(sr_args, global); }; });

  std::string export_file;
  std::string export_format = "m2";
  auto* exp = app.add_subcommand("export", "Export the nonface ideal for a computer algebra system");
  exp->add_option("file", export_file, "Multicomplex or ideal JSON")->required();
  exp->add_option("--format", export_format, "m2, singular or json")
      ->check(CLI::IsMember({"m2", "singular", "json"}))
      ->capture_default_str();
  exp->callback([&] {
    raw = true;
    action = [&] { return RunReport("export"); };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (raw) {
      raw_output = export_text(export_file, export_format);
      out << raw_output << "\n";
      return 0;
    }
    const RunReport report = action();
    if (global.text) {
      out << report.to_text(global.timings);
    } else {
      out << report.to_json(global.timings).dump(2) << "\n";
    }
    return report.holds() ? 0 : kExitFails;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << "\n";
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << "\n";
  }
  return kExitUsage;
}

}  // namespace powerlat::cli
