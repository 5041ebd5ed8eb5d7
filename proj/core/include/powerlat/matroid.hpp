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

// Matroids on power lattices and weighted graphic matroids.

#ifndef POWERLAT_MATROID_HPP_
#define POWERLAT_MATROID_HPP_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include <nlohmann/json.hpp>

#include "powerlat/instances.hpp"
#include "powerlat/lattice.hpp"
#include "powerlat/pcomplex.hpp"

namespace powerlat {

// A family of independent elements of a host lattice, stored as a bitmap
// over the host. Nothing is assumed about the family until it is verified.
class Matroid {
 public:
  static Matroid from_predicate(LatticePtr host, const std::function<bool(Element)>& independent);
  // Throws InputError for foreign handles.
  static Matroid from_elements(LatticePtr host, const std::vector<Element>& independents);

  const Lattice& host() const { return *host_; }
  const LatticePtr& host_ptr() const { return host_; }
  bool is_independent(Element x) const { return member_[x.index] != 0; }
  // Independent elements in increasing index order.
  std::vector<Element> independents() const;
  std::size_t size() const;

 private:
  Matroid(LatticePtr host, std::vector<std::uint8_t> member)
      : host_(std::move(host)), member_(std::move(member)) {}

  LatticePtr host_;
  std::vector<std::uint8_t> member_;
};

// U_k: all elements of rank at most k. Throws InputError unless
// 0 <= k <= height.
Matroid uniform_matroid(LatticePtr host, int k);

// Checks "I1" (bottom independent), "I2" (closed under lower covers, hence
// downward closed) and "I3" (augmentation by the next power of an atom).
VerificationReport verify_independence_axioms(const Matroid& matroid, const Budget& budget = {});

// Maximal independent elements in increasing index order.
std::vector<Element> bases(const Matroid& matroid);
bool check_equal_rank(const Lattice& lattice, const std::vector<Element>& bases);

// Checks "B1" (nonempty), "B2" (antichain) and "B3": for x, y in B and each
// lower cover u of x above x ^ y, some atom a has v_a(u) < v_a(y) and
// u v a^{v_a(u)+1} in B.
VerificationReport verify_basis_axioms(const Lattice& lattice, const std::vector<Element>& bases,
                                       const Budget& budget = {});

struct ExchangeWitness {
  Element u;
  AtomId b;
};

// For bases x != y and an atom a with v_a(y) > v_a(x), searches for u of
// rank rho(x) - 1 and an atom b with v_b(y) < v_b(x), x ^ y <= u,
// x = u v b^{v_b(u)+1} and u v a^{v_a(u)+1} a basis. Returns nullopt when
// none exists. Throws PreconditionError when the hypotheses fail.
std::optional<ExchangeWitness> dual_exchange_witness(const Lattice& lattice,
                                                     const std::vector<Element>& bases,
                                                     Element x, Element y, AtomId a);

struct ExchangeSummary {
  std::size_t triples = 0;
  std::size_t failures = 0;
  // First (x, y, a) without a witness.
  std::optional<std::tuple<Element, Element, AtomId>> first_failure;
};

// Runs dual_exchange_witness on every admissible (x, y, a).
ExchangeSummary exhaustive_dual_exchange(const Lattice& lattice, const std::vector<Element>& bases);

struct MatroidShelling {
  std::vector<Element> order;
  ShellingVerdict verdict;
};

// The complex generated by the bases.
PComplex independence_complex(const Matroid& matroid);
// Bases in level order <=_r, checked as a shelling of the independence
// complex.
MatroidShelling matroid_shelling(const Matroid& matroid, const AtomOrder& order);

struct WeightedEdge {
  std::string id;
  int u = 0;
  int v = 0;
  int weight = 1;
};

// Undirected multigraph; loops and parallel edges allowed.
struct WeightedGraph {
  std::vector<std::string> vertices;
  std::vector<WeightedEdge> edges;
};

// The multiset lattice with one variable per edge (labelled by its id) and
// exponent equal to its weight. Throws InputError for an empty edge set.
std::shared_ptr<const MultisetLattice> graph_lattice(const WeightedGraph& graph);

// True iff the edges used at full weight form a forest. Throws InputError
// when a multiplicity exceeds the weight.
bool is_independent_edge_multiset(const WeightedGraph& graph, const std::vector<int>& multiplicity);

// I_G on graph_lattice(graph).
Matroid graphic_matroid(const WeightedGraph& graph);

// {"vertices": [...], "edges": [{"id", "u", "v", "wt"}]}.
WeightedGraph graph_from_json(const nlohmann::json& j);
nlohmann::json graph_to_json(const WeightedGraph& graph);

// {"lattice", "independents"}, {"graph"} or {"lattice", "uniform": k}.
Matroid matroid_from_json(const nlohmann::json& j, const std::filesystem::path& base_dir = {});

}  // namespace powerlat

#endif  // POWERLAT_MATROID_HPP_
