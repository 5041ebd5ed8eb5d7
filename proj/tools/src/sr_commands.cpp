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
#include "powerlat/stanley_reisner.hpp"

namespace powerlat::cli {
namespace {

Multicomplex LoadMulticomplex(const std::string& path) {
  auto file = load(path);
  return multicomplex_from_json(file.json, file.base_dir);
}

std::string Generators(const MonomialIdeal& ideal) {
  std::string out;
  for (const auto& g : ideal.generators()) out += (out.empty() ? "" : ", ") + format_monomial(g);
  return out;
}

nlohmann::json PolarFacets(const SimplicialComplex& sc) {
  auto out = nlohmann::json::array();
  for (const auto& f : sc.facets()) {
    std::string s;
    for (int v : f) s += sc.labels()[static_cast<std::size_t>(v)];
    out.push_back(s.empty() ? "1" : s);
  }
  return out;
}

nlohmann::json Monomials(const std::vector<Monomial>& ms) {
  auto out = nlohmann::json::array();
  for (const auto& m : ms) out.push_back(format_monomial(m));
  return out;
}

}  // namespace

RunReport sr_ideal(const SrArgs& args, const GlobalOptions&) {
  RunReport run("sr ideal");
  run.add_input(args.file);
  run.stage("load");
  const auto delta = LoadMulticomplex(args.file);
  run.stage("nonfaces");
  const auto ideal = minimal_nonfaces(delta);
  run.result() = {{"box", delta.box()},
                  {"facets", Monomials(delta.facets())},
                  {"generators", Generators(ideal)},
                  {"exponents", ideal.generators()}};
  return run;
}

RunReport sr_section_check(const SrArgs& args, const GlobalOptions&) {
  RunReport run("sr section-check");
  run.add_input(args.file);
  run.stage("load");
  const auto delta = LoadMulticomplex(args.file);
  run.stage("ideals");
  const auto r = section_ring_check(delta);
  run.verdict("facet_equals_meet", r.facet_equals_meet);
  run.verdict("nonface_equals_facet", r.equal);
  if (r.witness) run.witness("nonface_equals_facet", format_monomial(*r.witness));
  run.result() = {{"nonface_ideal", Generators(r.nonface_ideal)},
                  {"facet_ideal", Generators(r.facet_ideal)},
                  {"meet_ideal", Generators(r.meet_ideal)},
                  {"meets", Monomials(meets_of_facets(delta))}};
  return run;
}

RunReport sr_polarize(const SrArgs& args, const GlobalOptions&) {
  RunReport run("sr polarize");
  run.add_input(args.file);
  run.stage("load");
  const auto delta = LoadMulticomplex(args.file);
  run.stage("polarize");
  const auto pol = polarize_ideal(minimal_nonfaces(delta));
  auto gens = nlohmann::json::array();
  for (const auto& g : pol.generators) gens.push_back(format_polar(g));
  const auto pc = polarized_complex(delta);
  run.verdict("polarized_ideal_minimal", pol.minimal);
  run.verdict("facets_match_complement", pc.agrees);
  if (!pc.agrees) run.witness("facets_match_complement", {{"complement", PolarFacets(pc.complement)}});
  run.result() = {{"polarized_ideal", gens}, {"facets", PolarFacets(pc.complex)}};
  return run;
}

RunReport sr_shell_polarized(const SrArgs& args, const GlobalOptions&) {
  RunReport run("sr shell-polarized");
  run.add_input(args.file);
  run.stage("load");
  const auto delta = LoadMulticomplex(args.file);
  const auto facets = delta.facets();
  std::vector<Monomial> order;
  run.stage("shell");
  if (!args.order.empty()) {
    for (std::size_t k : parse_permutation(args.order, facets.size())) order.push_back(facets[k]);
  } else {
    if (!delta.complex().is_pure()) {
      throw PreconditionError("the multicomplex is not pure; pass a shelling with --order");
    }
    const auto found = find_shelling(delta.complex());
    if (!found) throw PreconditionError("the multicomplex has no shelling");
    for (Element e : *found) order.push_back(delta.lattice().exponents_of(e));
  }
  const auto ps = polarized_shelling(delta, order);
  auto polar_order = nlohmann::json::array();
  for (const auto& f : ps.order) {
    std::string s;
    for (int v : f) s += ps.polarized.complex.labels()[static_cast<std::size_t>(v)];
    polar_order.push_back(s.empty() ? "1" : s);
  }
  run.result() = {{"delta_order", Monomials(order)},
                  {"order", polar_order},
                  {"face_vectors", Monomials(ps.face_vectors)}};
  run.verdict("nonpure_shelling", ps.verdict.shellable);
  if (!ps.verdict.shellable) {
    run.witness("nonpure_shelling",
                {{"positions", {ps.verdict.first, ps.verdict.second}}, {"detail", ps.verdict.detail}});
  }
  return run;
}

std::string export_text(const std::string& file, const std::string& format) {
  auto loaded = load(file);
  const auto& j = loaded.json;
  if (j.is_object() && j.contains("gens")) {
    try {
      return export_ideal(MonomialIdeal(j.at("vars").get<std::size_t>(),
                                        j.at("gens").get<std::vector<Monomial>>()),
                          format);
    } catch (const nlohmann::json::exception& e) {
      throw InputError(std::string("malformed ideal: ") + e.what());
    }
  }
  return export_ideal(minimal_nonfaces(multicomplex_from_json(j, loaded.base_dir)), format);
}

}  // namespace powerlat::cli
