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

// Order complexes of P-complexes, the chain orders used to shell them, and
// checks that those orders are shellings.

#ifndef POWERLAT_ORDER_COMPLEX_HPP_
#define POWERLAT_ORDER_COMPLEX_HPP_

#include <compare>
#include <cstddef>
#include <vector>

#include "powerlat/lattice.hpp"
#include "powerlat/pcomplex.hpp"
#include "powerlat/simplicial.hpp"

namespace powerlat {

struct OrderComplexBudget {
  std::size_t max_faces = 10'000;
  std::size_t max_chains = 10'000;
};

// K(S) together with the lattice data behind it. chains[k] is the maximal
// chain (listed from the bottom up) whose vertex set is complex.facets()[k].
struct OrderComplex {
  SimplicialComplex complex;
  std::vector<Element> vertex_elements;
  std::vector<Chain> chains;
};

// Maximal chains of S, each starting at the bottom. With include_bottom set
// the bottom is a vertex and the result is K(S); without it the result is
// the order complex of S minus the bottom. Throws BudgetExceeded.
OrderComplex order_complex(const PComplex& complex, bool include_bottom = true,
                           const OrderComplexBudget& budget = {});

// Reverse lexicographic order on maximal chains: decided at the largest
// index where they differ, by the level order there. Throws
// PreconditionError for chains of different lengths.
std::strong_ordering compare_reverse_lex(const Lattice& lattice, const RankLexIndex& levels,
                                         const Chain& x, const Chain& y);

// Tops compared by the level order first, then the chains without their
// tops by compare_reverse_lex.
std::strong_ordering compare_shelling_order(const Lattice& lattice, const RankLexIndex& levels,
                                            const Chain& x, const Chain& y);

struct OrderShellingResult {
  // Whether the facets of S in level order form a shelling of S. Always
  // true for spheres, where it is not checked.
  bool hypothesis = true;
  ShellingVerdict verdict;
  std::size_t chains = 0;
};

// Shells K(S_x) with its maximal chains in reverse lexicographic order.
OrderShellingResult sphere_order_shelling_check(const LatticePtr& lattice, Element x,
                                                const AtomOrder& order,
                                                const OrderComplexBudget& budget = {});

// Checks that the facets of S in level order shell S, then shells K(S) with
// its maximal chains in the order compare_shelling_order. Throws
// PreconditionError if S is not pure.
OrderShellingResult complex_order_shelling_check(const PComplex& complex,
                                                 const AtomOrder& order,
                                                 const OrderComplexBudget& budget = {});

}  // namespace powerlat

#endif  // POWERLAT_ORDER_COMPLEX_HPP_
