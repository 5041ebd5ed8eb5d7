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

// Downward-closed families (P-complexes) inside a power lattice, and their
// shellings.

#ifndef POWERLAT_PCOMPLEX_HPP_
#define POWERLAT_PCOMPLEX_HPP_

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "powerlat/instances.hpp"
#include "powerlat/lattice.hpp"

namespace powerlat {

// A P-complex stored by its facets. Faces are the elements below some facet
// and are only enumerated on request.
class PComplex {
 public:
  // The complex generated by `generators`: its facets are their maximal
  // elements. Throws InputError if `generators` is empty or holds a foreign
  // handle.
  static PComplex generate(LatticePtr host, const std::vector<Element>& generators);

  const Lattice& host() const { return *host_; }
  const LatticePtr& host_ptr() const { return host_; }
  // Facets in increasing index order.
  const std::vector<Element>& facets() const { return facets_; }
  bool contains(Element x) const;
  int rank() const;
  bool is_pure() const;
  // All faces in increasing index order. Throws BudgetExceeded when there
  // are more than `max_faces`.
  std::vector<Element> faces(std::size_t max_faces = 1'000'000) const;

 private:
  PComplex(LatticePtr host, std::vector<Element> facets)
      : host_(std::move(host)), facets_(std::move(facets)) {}

  LatticePtr host_;
  std::vector<Element> facets_;
};

// Outcome of checking one facet order. `first` and `second` are the 1-based
// positions (i, j) of the first pair with no admissible k.
struct ShellingVerdict {
  bool shellable = true;
  std::size_t first = 0;
  std::size_t second = 0;
  std::string detail;
};

// Checks the shelling condition: for all i < j some k < j has
// f_i ^ f_j <= f_k ^ f_j and rho(f_k ^ f_j) = r - 1. Throws
// PreconditionError for non-pure complexes and InputError when `order` is
// not a permutation of the facets.
ShellingVerdict verify_shelling(const PComplex& complex, const std::vector<Element>& order);

// Searches for a shelling order over facet subsets. Returns nullopt only
// after the search space is exhausted. Throws BudgetExceeded when the
// complex has more than `cap` facets and PreconditionError if it is not pure.
std::optional<std::vector<Element>> find_shelling(const PComplex& complex,
                                                  std::size_t cap = 12);

// S_x: all strict predecessors of x. Throws InputError for x = bottom.
PComplex sphere(LatticePtr host, Element x);

// Elements sorted by rank, then by the level order <=_l.
std::vector<Element> sort_rank_lex(const Lattice& lattice, std::vector<Element> elements,
                                   const AtomOrder& order);

// {"lattice": <spec or file name>, "facets": [<element encodings>]}.
PComplex complex_from_json(const nlohmann::json& j,
                           const std::filesystem::path& base_dir = {});
nlohmann::json complex_to_json(const PComplex& complex);

}  // namespace powerlat

#endif  // POWERLAT_PCOMPLEX_HPP_
