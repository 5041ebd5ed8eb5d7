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

// Exact reduced simplicial homology over the rationals.

#ifndef POWERLAT_HOMOLOGY_HPP_
#define POWERLAT_HOMOLOGY_HPP_

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "powerlat/simplicial.hpp"

namespace powerlat {

// Sparse integer matrix rows: (column, value) pairs.
using SparseRow = std::vector<std::pair<int, std::int64_t>>;

// Rank over Q by fraction-free row reduction. Works in 64-bit integers and
// switches to arbitrary precision if an intermediate value overflows.
std::size_t exact_rank(const std::vector<SparseRow>& rows);

// Reduced Betti numbers b~_0 .. b~_d of a complex of dimension d, counting
// the empty face. Throws BudgetExceeded when the complex has more than
// `face_budget` faces.
std::vector<std::int64_t> reduced_betti(const SimplicialComplex& complex,
                                        std::size_t face_budget = 20'000);

struct WedgeResult {
  // Reduced homology vanishes below the top dimension.
  bool wedge = true;
  std::int64_t spheres = 0;
  std::vector<std::int64_t> betti;
};

// Throws PreconditionError for non-pure complexes.
WedgeResult check_wedge(const SimplicialComplex& complex, std::size_t face_budget = 20'000);

}  // namespace powerlat

#endif  // POWERLAT_HOMOLOGY_HPP_
