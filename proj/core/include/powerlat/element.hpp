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

#ifndef POWERLAT_ELEMENT_HPP_
#define POWERLAT_ELEMENT_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace powerlat {

// Handle to an element of a particular lattice instance. Handles are dense
// indices 0..size()-1; the owning lattice gives them meaning.
struct Element {
  std::uint32_t index = 0;

  friend constexpr auto operator<=>(Element, Element) = default;
};

// Index into the atom enumeration of a lattice (its rank-1 level).
struct AtomId {
  std::uint32_t index = 0;

  friend constexpr auto operator<=>(AtomId, AtomId) = default;
};

// Atom valuations v_w(x), indexed by AtomId::index.
using Valuation = std::vector<int>;

// Strictly increasing sequence of elements x_0 < x_1 < ... < x_k.
using Chain = std::vector<Element>;

}  // namespace powerlat

template <>
struct std::hash<powerlat::Element> {
  std::size_t operator()(powerlat::Element e) const noexcept {
    return std::hash<std::uint32_t>{}(e.index);
  }
};

#endif  // POWERLAT_ELEMENT_HPP_
