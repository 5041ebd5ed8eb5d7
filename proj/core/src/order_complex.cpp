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

#include "powerlat/order_complex.hpp"

#include <algorithm>
#include <numeric>

#include "powerlat/errors.hpp"

namespace powerlat {

OrderComplex order_complex(const PComplex& complex, bool include_bottom,
                           const OrderComplexBudget& budget) {
  const Lattice& lattice = complex.host();
  const auto faces = complex.faces(budget.max_faces);
  std::vector<int> vertex_of(lattice.size(), -1);
  OrderComplex out;
  std::vector<std::string> labels;
  for (Element f : faces) {
    if (!include_bottom && f == lattice.bottom()) continue;
    vertex_of[f.index] = static_cast<int>(out.vertex_elements.size());
    out.vertex_elements.push_back(f);
    labels.push_back(lattice.label(f));
  }

  std::vector<Simplex> facets;
  Chain chain{lattice.bottom()};
  auto emit = [&] {
    if (out.chains.size() == budget.max_chains) {
      throw BudgetExceeded("order complex has more than " + std::to_string(budget.max_chains) +
                           " maximal chains");
    }
    Simplex s;
    for (Element e : chain) {
      if (vertex_of[e.index] >= 0) s.push_back(vertex_of[e.index]);
    }
    std::sort(s.begin(), s.end());
    facets.push_back(std::move(s));
    out.chains.push_back(chain);
  };
  // Every face below a facet has an upper cover below that facet, so the
  // maximal chains are the cover paths from the bottom to a facet.
  auto extend = [&](auto& self) -> void {
    bool extended = false;
    for (Element u : lattice.upper_covers(chain.back())) {
      if (vertex_of[u.index] < 0) continue;
      extended = true;
      chain.push_back(u);
      self(self);
      chain.pop_back();
    }
    if (!extended) emit();
  };
  extend(extend);
  out.complex = SimplicialComplex(std::move(labels), std::move(facets));
  return out;
}

std::strong_ordering compare_reverse_lex(const Lattice& lattice, const RankLexIndex& levels,
                                         const Chain& x, const Chain& y) {
  if (x.size() != y.size()) throw PreconditionError("chains of different lengths");
  for (std::size_t i = x.size(); i-- > 0;) {
    if (x[i] == y[i]) continue;
    if (auto c = lattice.rank(x[i]) <=> lattice.rank(y[i]); c != 0) return c;
    return levels.compare(x[i], y[i]);
  }
  return std::strong_ordering::equal;
}

std::strong_ordering compare_shelling_order(const Lattice& lattice, const RankLexIndex& levels,
                                            const Chain& x, const Chain& y) {
  if (x.size() != y.size()) throw PreconditionError("chains of different lengths");
  if (x.empty()) return std::strong_ordering::equal;
  if (x.back() != y.back()) {
    if (auto c = lattice.rank(x.back()) <=> lattice.rank(y.back()); c != 0) return c;
    return levels.compare(x.back(), y.back());
  }
  const Chain xs(x.begin(), x.end() - 1);
  const Chain ys(y.begin(), y.end() - 1);
  return compare_reverse_lex(lattice, levels, xs, ys);
}

namespace {

template <typename Compare>
OrderShellingResult ShellSortedChains(const PComplex& complex, const OrderComplexBudget& budget,
                                      Compare compare) {
  const auto oc = order_complex(complex, true, budget);
  std::vector<std::size_t> order(oc.chains.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return compare(oc.chains[a], oc.chains[b]) < 0;
  });
  OrderShellingResult result;
  result.chains = oc.chains.size();
  result.verdict = verify_pure_simplicial_shelling(oc.complex, order);
  return result;
}

}  // namespace

OrderShellingResult sphere_order_shelling_check(const LatticePtr& lattice, Element x,
                                                const AtomOrder& order,
                                                const OrderComplexBudget& budget) {
  const auto s = sphere(lattice, x);
  const RankLexIndex levels(*lattice, order);
  return ShellSortedChains(s, budget, [&](const Chain& a, const Chain& b) {
    return compare_reverse_lex(*lattice, levels, a, b);
  });
}

OrderShellingResult complex_order_shelling_check(const PComplex& complex,
                                                 const AtomOrder& order,
                                                 const OrderComplexBudget& budget) {
  if (!complex.is_pure()) throw PreconditionError("order-complex shelling needs a pure complex");
  const Lattice& lattice = complex.host();
  const RankLexIndex levels(lattice, order);
  const auto facet_order = sort_rank_lex(lattice, complex.facets(), order);
  const bool hypothesis = verify_shelling(complex, facet_order).shellable;
  auto result = ShellSortedChains(complex, budget, [&](const Chain& a, const Chain& b) {
    return compare_shelling_order(lattice, levels, a, b);
  });
  result.hypothesis = hypothesis;
  return result;
}

}  // namespace powerlat
