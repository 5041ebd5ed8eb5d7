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

// Shared instance families for the unit tests and the acceptance binary.

#ifndef POWERLAT_TESTS_CORPUS_HPP_
#define POWERLAT_TESTS_CORPUS_HPP_

#include <random>
#include <string>
#include <vector>

#include "powerlat/instances.hpp"
#include "powerlat/matroid.hpp"
#include "powerlat/stanley_reisner.hpp"

namespace powerlat::corpus {

struct NamedLattice {
  std::string name;
  LatticePtr lattice;
};
// Boolean(1..5), multiset (3,3) and (2,2,2), subspace(2,2) and (2,3),
// divisor(360), Boolean(2) x multiset(2,1).
std::vector<NamedLattice> power_lattices();
// Seven elements with unique powers but valuation totals that disagree
// with rank.
LatticePtr rank_mismatch();
LatticePtr q8_subgroups();

struct BoxComplex {
  std::vector<int> box;
  std::vector<Monomial> facets;
};
// Random facets in a box no larger than (3,3,2); the top is never a facet.
BoxComplex random_multicomplex(std::mt19937& rng);
// Random multicomplex whose facets stay strictly below the box ceiling.
BoxComplex random_below_ceiling(std::mt19937& rng);
// Twenty shellable multicomplexes written out by hand.
std::vector<BoxComplex> hand_built();

struct NamedMatroid {
  std::string name;
  Matroid matroid;
};
// U_k for every k on multiset (2,2,1) and subspace(2,3).
std::vector<NamedMatroid> uniform_matroids();

// Weighted graphs on 4 vertices with 1 to 5 edges of weight 1 or 2, one
// per isomorphism class of weighted edge multisets.
std::vector<WeightedGraph> small_graphs();

}  // namespace powerlat::corpus

#endif  // POWERLAT_TESTS_CORPUS_HPP_
