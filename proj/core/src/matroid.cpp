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

#include "powerlat/matroid.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "powerlat/errors.hpp"
#include "powerlat/json_io.hpp"

namespace powerlat {
namespace {

void Fail(const Lattice& lattice, CheckResult& check, std::vector<Element> witness,
          std::string detail) {
  check.passed = false;
  for (Element e : witness) {
    check.witness.push_back(e);
    check.witness_labels.push_back(lattice.label(e));
  }
  check.detail = std::move(detail);
}

CheckResult Named(std::string name) {
  CheckResult c;
  c.name = std::move(name);
  return c;
}

// x v a^{v_a(x)+1}, or nullopt when that power does not exist.
std::optional<Element> Augment(const Lattice& lattice, Element x, const Valuation& vx, AtomId a) {
  const auto p = atom_power(lattice, a, vx[a.index] + 1);
  if (!p) return std::nullopt;
  return lattice.join(x, *p);
}

}  // namespace

Matroid Matroid::from_predicate(LatticePtr host, const std::function<bool(Element)>& independent) {
  if (!host) throw InputError("matroid has no host lattice");
  std::vector<std::uint8_t> member(host->size());
  for (std::uint32_t i = 0; i < host->size(); ++i) member[i] = independent(Element{i}) ? 1 : 0;
  return Matroid(std::move(host), std::move(member));
}

Matroid Matroid::from_elements(LatticePtr host, const std::vector<Element>& independents) {
  if (!host) throw InputError("matroid has no host lattice");
  std::vector<std::uint8_t> member(host->size());
  for (Element x : independents) {
    host->check(x);
    member[x.index] = 1;
  }
  return Matroid(std::move(host), std::move(member));
}

std::vector<Element> Matroid::independents() const {
  std::vector<Element> out;
  for (std::uint32_t i = 0; i < member_.size(); ++i) {
    if (member_[i]) out.push_back(Element{i});
  }
  return out;
}

std::size_t Matroid::size() const {
  return static_cast<std::size_t>(std::count(member_.begin(), member_.end(), 1));
}

Matroid uniform_matroid(LatticePtr host, int k) {
  if (!host) throw InputError("matroid has no host lattice");
  if (k < 0 || k > host->height()) {
    throw InputError("uniform matroid needs 0 <= k <= " + std::to_string(host->height()) +
                     ", got " + std::to_string(k));
  }
  const Lattice& l = *host;
  return Matroid::from_predicate(std::move(host), [&](Element x) { return l.rank(x) <= k; });
}

VerificationReport verify_independence_axioms(const Matroid& matroid, const Budget& budget) {
  const Lattice& lattice = matroid.host();
  VerificationReport report;
  auto i1 = Named("I1");
  auto i2 = Named("I2");
  auto i3 = Named("I3");
  if (!matroid.is_independent(lattice.bottom())) {
    Fail(lattice, i1, {lattice.bottom()}, "bottom is not independent");
  }
  const auto indep = matroid.independents();
  for (Element x : indep) {
    for (Element u : lattice.lower_covers(x)) {
      if (!matroid.is_independent(u)) {
        Fail(lattice, i2, {x, u}, "a lower cover of an independent element is dependent");
        break;
      }
    }
    if (!i2.passed) break;
  }
  const std::uint64_t pairs = static_cast<std::uint64_t>(indep.size()) * indep.size();
  if (pairs > budget.max_pair_operations) {
    report.complete = false;
    report.checks = {i1, i2};
    return report;
  }
  std::vector<Valuation> vals;
  for (Element x : indep) vals.push_back(lattice.valuation(x));
  for (std::size_t s = 0; s < indep.size() && i3.passed; ++s) {
    for (std::size_t t = 0; t < indep.size(); ++t) {
      const Element x = indep[s], y = indep[t];
      if (lattice.rank(x) >= lattice.rank(y)) continue;
      bool ok = false;
      for (std::uint32_t a = 0; a < vals[s].size() && !ok; ++a) {
        if (vals[s][a] >= vals[t][a]) continue;
        const auto z = Augment(lattice, x, vals[s], AtomId{a});
        ok = z && matroid.is_independent(*z);
      }
      if (!ok) {
        Fail(lattice, i3, {x, y}, "no atom a with v_a(x) < v_a(y) gives an independent x v a^{v_a(x)+1}");
        break;
      }
    }
  }
  report.checks = {i1, i2, i3};
  return report;
}

std::vector<Element> bases(const Matroid& matroid) {
  const Lattice& lattice = matroid.host();
  std::vector<Element> out;
  for (Element x : matroid.independents()) {
    const auto up = lattice.upper_covers(x);
    if (std::none_of(up.begin(), up.end(), [&](Element u) { return matroid.is_independent(u); })) {
      out.push_back(x);
    }
  }
  return out;
}

bool check_equal_rank(const Lattice& lattice, const std::vector<Element>& bases) {
  return std::all_of(bases.begin(), bases.end(),
                     [&](Element b) { return lattice.rank(b) == lattice.rank(bases.front()); });
}

VerificationReport verify_basis_axioms(const Lattice& lattice, const std::vector<Element>& bases,
                                       const Budget& budget) {
  VerificationReport report;
  auto b1 = Named("B1");
  auto b2 = Named("B2");
  auto b3 = Named("B3");
  if (bases.empty()) {
    b1.passed = false;
    b1.detail = "no bases";
    report.checks = {b1, b2, b3};
    return report;
  }
  for (Element b : bases) lattice.check(b);
  const std::set<Element> in_b(bases.begin(), bases.end());
  if (static_cast<std::uint64_t>(bases.size()) * bases.size() > budget.max_pair_operations) {
    report.complete = false;
    report.checks = {b1};
    return report;
  }
  for (Element x : bases) {
    for (Element y : bases) {
      if (x != y && lattice.leq(x, y) && b2.passed) {
        Fail(lattice, b2, {x, y}, "one basis lies below another");
      }
      if (!b3.passed) continue;
      const Element xy = lattice.meet(x, y);
      const auto vy = lattice.valuation(y);
      for (Element u : lattice.lower_covers(x)) {
        if (!lattice.leq(xy, u)) continue;
        const auto vu = lattice.valuation(u);
        bool ok = false;
        for (std::uint32_t a = 0; a < vu.size() && !ok; ++a) {
          if (vu[a] >= vy[a]) continue;
          const auto z = Augment(lattice, u, vu, AtomId{a});
          ok = z && in_b.count(*z);
        }
        if (!ok) {
          Fail(lattice, b3, {x, y, u}, "no atom a with v_a(u) < v_a(y) gives a basis u v a^{v_a(u)+1}");
          break;
        }
      }
    }
  }
  report.checks = {b1, b2, b3};
  return report;
}

std::optional<ExchangeWitness> dual_exchange_witness(const Lattice& lattice,
                                                     const std::vector<Element>& bases,
                                                     Element x, Element y, AtomId a) {
  lattice.check(x);
  lattice.check(y);
  if (a.index >= lattice.atom_count()) throw InputError("atom index out of range");
  const std::set<Element> in_b(bases.begin(), bases.end());
  if (!in_b.count(x) || !in_b.count(y)) throw PreconditionError("x and y must be bases");
  if (x == y) throw PreconditionError("dual exchange needs distinct bases");
  const auto vx = lattice.valuation(x);
  const auto vy = lattice.valuation(y);
  if (vy[a.index] <= vx[a.index]) throw PreconditionError("atom a must have v_a(y) > v_a(x)");
  const Element xy = lattice.meet(x, y);
  for (Element u : lattice.level(lattice.rank(x) - 1)) {
    if (!lattice.leq(xy, u)) continue;
    const auto vu = lattice.valuation(u);
    const auto ua = Augment(lattice, u, vu, a);
    if (!ua || !in_b.count(*ua)) continue;
    for (std::uint32_t b = 0; b < vx.size(); ++b) {
      if (vy[b] >= vx[b]) continue;
      const auto ub = Augment(lattice, u, vu, AtomId{b});
      if (ub && *ub == x) return ExchangeWitness{u, AtomId{b}};
    }
  }
  return std::nullopt;
}

ExchangeSummary exhaustive_dual_exchange(const Lattice& lattice, const std::vector<Element>& bases) {
  ExchangeSummary summary;
  for (Element x : bases) {
    const auto vx = lattice.valuation(x);
    for (Element y : bases) {
      if (x == y) continue;
      const auto vy = lattice.valuation(y);
      for (std::uint32_t a = 0; a < vx.size(); ++a) {
        if (vy[a] <= vx[a]) continue;
        ++summary.triples;
        if (!dual_exchange_witness(lattice, bases, x, y, AtomId{a})) {
          ++summary.failures;
          if (!summary.first_failure) summary.first_failure = std::tuple{x, y, AtomId{a}};
        }
      }
    }
  }
  return summary;
}

PComplex independence_complex(const Matroid& matroid) {
  return PComplex::generate(matroid.host_ptr(), bases(matroid));
}

MatroidShelling matroid_shelling(const Matroid& matroid, const AtomOrder& order) {
  const auto complex = independence_complex(matroid);
  MatroidShelling out;
  out.order = sort_rank_lex(matroid.host(), complex.facets(), order);
  out.verdict = verify_shelling(complex, out.order);
  return out;
}

std::shared_ptr<const MultisetLattice> graph_lattice(const WeightedGraph& graph) {
  if (graph.edges.empty()) throw InputError("graph has no edges");
  std::vector<int> weights;
  std::vector<std::string> ids;
  for (const auto& e : graph.edges) {
    if (e.weight < 1) throw InputError("edge " + e.id + " has weight " + std::to_string(e.weight));
    const auto n = static_cast<int>(graph.vertices.size());
    if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n) {
      throw InputError("edge " + e.id + " has an endpoint outside the vertex list");
    }
    weights.push_back(e.weight);
    ids.push_back(e.id);
  }
  return build_multiset(std::move(weights), std::move(ids));
}

bool is_independent_edge_multiset(const WeightedGraph& graph, const std::vector<int>& multiplicity) {
  if (multiplicity.size() != graph.edges.size()) {
    throw InputError("edge multiset has " + std::to_string(multiplicity.size()) +
                     " entries for " + std::to_string(graph.edges.size()) + " edges");
  }
  std::vector<int> parent(graph.vertices.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (std::size_t k = 0; k < graph.edges.size(); ++k) {
    const auto& e = graph.edges[k];
    if (multiplicity[k] < 0 || multiplicity[k] > e.weight) {
      throw InputError("multiplicity " + std::to_string(multiplicity[k]) + " of edge " + e.id +
                       " exceeds its weight " + std::to_string(e.weight));
    }
    if (multiplicity[k] < e.weight) continue;
    const int ru = find(e.u), rv = find(e.v);
    if (ru == rv) return false;
    parent[ru] = rv;
  }
  return true;
}

Matroid graphic_matroid(const WeightedGraph& graph) {
  auto lattice = graph_lattice(graph);
  const MultisetLattice& l = *lattice;
  return Matroid::from_predicate(lattice, [&](Element x) {
    return is_independent_edge_multiset(graph, l.exponents_of(x));
  });
}

WeightedGraph graph_from_json(const nlohmann::json& j) {
  try {
    WeightedGraph g;
    g.vertices = j.at("vertices").get<std::vector<std::string>>();
    std::set<std::string> ids;
    for (const auto& e : j.at("edges")) {
      WeightedEdge edge;
      edge.id = e.at("id").get<std::string>();
      if (!ids.insert(edge.id).second) throw InputError("duplicate edge id '" + edge.id + "'");
      auto vertex = [&](const char* key) {
        const auto name = e.at(key).get<std::string>();
        auto it = std::find(g.vertices.begin(), g.vertices.end(), name);
        if (it == g.vertices.end()) throw InputError("edge " + edge.id + " uses unknown vertex '" + name + "'");
        return static_cast<int>(it - g.vertices.begin());
      };
      edge.u = vertex("u");
      edge.v = vertex("v");
      edge.weight = e.value("wt", 1);
      if (edge.weight < 1) throw InputError("edge " + edge.id + " needs a positive weight");
      g.edges.push_back(std::move(edge));
    }
    return g;
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed graph: ") + e.what());
  }
}

nlohmann::json graph_to_json(const WeightedGraph& graph) {
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& e : graph.edges) {
    edges.push_back({{"id", e.id}, {"u", graph.vertices[e.u]}, {"v", graph.vertices[e.v]}, {"wt", e.weight}});
  }
  return {{"vertices", graph.vertices}, {"edges", edges}};
}

Matroid matroid_from_json(const nlohmann::json& j, const std::filesystem::path& base_dir) {
  try {
    if (!j.is_object()) throw InputError("matroid file must be an object");
    if (j.contains("graph")) {
      auto dir = base_dir;
      return graphic_matroid(graph_from_json(resolve_json_ref(j.at("graph"), dir)));
    }
    if (j.contains("edges")) return graphic_matroid(graph_from_json(j));
    if (!j.contains("lattice")) throw InputError("matroid needs \"lattice\" or \"graph\"");
    auto lattice = lattice_from_json(j.at("lattice"), base_dir);
    if (j.contains("uniform")) return uniform_matroid(std::move(lattice), j.at("uniform").get<int>());
    if (!j.contains("independents")) throw InputError("matroid needs \"independents\" or \"uniform\"");
    std::vector<Element> indep;
    for (const auto& x : j.at("independents")) indep.push_back(lattice->decode(x));
    return Matroid::from_elements(std::move(lattice), indep);
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed matroid: ") + e.what());
  }
}

}  // namespace powerlat
