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

// Finite abstract simplicial complexes and their shellings.

#ifndef POWERLAT_SIMPLICIAL_HPP_
#define POWERLAT_SIMPLICIAL_HPP_

#include <cstddef>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "powerlat/pcomplex.hpp"

namespace powerlat {

using Simplex = std::vector<int>;

// Vertices are 0..vertex_count()-1; facets are sorted vertex lists.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;
  // Keeps the inclusion-maximal sets among `facets`, in their given order.
  // Throws InputError for vertex indices outside the label table.
  SimplicialComplex(std::vector<std::string> vertex_labels, std::vector<Simplex> facets);

  std::size_t vertex_count() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<Simplex>& facets() const { return facets_; }
  // Largest facet size minus one; -1 for the complex {{}}.
  int dimension() const;
  bool is_pure() const;

 private:
  std::vector<std::string> labels_;
  std::vector<Simplex> facets_;
};

// Shelling check for facets in the given order: for all i < j there is
// k < j with F_i n F_j contained in F_k n F_j and |F_k n F_j| = |F_j| - 1.
// For pure complexes this is the classical condition; otherwise it is the
// non-pure one. Witness positions are 1-based.
ShellingVerdict check_simplicial_shelling(const std::vector<Simplex>& ordered_facets);

// The pure condition on the facets of `complex` in the order given by
// `order` (indices into complex.facets(); empty means as stored). Throws
// PreconditionError if the complex is not pure.
ShellingVerdict verify_pure_simplicial_shelling(const SimplicialComplex& complex,
                                                const std::vector<std::size_t>& order = {});

// {"vertices": [labels], "facets": [[indices], ...]}.
SimplicialComplex simplicial_from_json(const nlohmann::json& j);
nlohmann::json simplicial_to_json(const SimplicialComplex& complex);

}  // namespace powerlat

#endif  // POWERLAT_SIMPLICIAL_HPP_
