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

#include "powerlat/pcomplex.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <unordered_set>

#include "powerlat/errors.hpp"
#include "powerlat/json_io.hpp"

namespace powerlat {

PComplex PComplex::generate(LatticePtr host, const std::vector<Element>& generators) {
  if (!host) throw InputError("complex has no host lattice");
  if (generators.empty()) throw InputError("a complex needs at least one generator");
  for (Element g : generators) host->check(g);
  std::vector<Element> sorted = generators;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<Element> facets;
  for (Element g : sorted) {
    const bool dominated = std::any_of(sorted.begin(), sorted.end(), [&](Element h) {
      return h != g && host->leq(g, h);
    });
    if (!dominated) facets.push_back(g);
  }
  return PComplex(std::move(host), std::move(facets));
}

bool PComplex::contains(Element x) const {
  host_->check(x);
  return std::any_of(facets_.begin(), facets_.end(),
                     [&](Element f) { return host_->leq(x, f); });
}

int PComplex::rank() const {
  int r = 0;
  for (Element f : facets_) r = std::max(r, host_->rank(f));
  return r;
}

bool PComplex::is_pure() const {
  return std::all_of(facets_.begin(), facets_.end(),
                     [&](Element f) { return host_->rank(f) == host_->rank(facets_.front()); });
}

std::vector<Element> PComplex::faces(std::size_t max_faces) const {
  std::vector<Element> out;
  for (std::uint32_t i = 0; i < host_->size(); ++i) {
    const Element x{i};
    if (!contains(x)) continue;
    if (out.size() == max_faces) {
      throw BudgetExceeded("complex has more than " + std::to_string(max_faces) + " faces");
    }
    out.push_back(x);
  }
  return out;
}

namespace {

void RequirePure(const PComplex& complex) {
  if (!complex.is_pure()) {
    throw PreconditionError("shellability is defined for pure complexes only");
  }
}

// Whether facet j may follow the facets in `earlier` (indices into facets).
// Returns the first earlier i with no admissible k, or -1.
int FirstBlocker(const Lattice& lattice, const std::vector<Element>& facets,
                 std::size_t j, const std::vector<std::size_t>& earlier, int r) {
  std::vector<Element> ridges;
  for (std::size_t k : earlier) {
    const Element m = lattice.meet(facets[k], facets[j]);
    if (lattice.rank(m) == r - 1) ridges.push_back(m);
  }
  for (std::size_t i : earlier) {
    const Element m = lattice.meet(facets[i], facets[j]);
    const bool ok = std::any_of(ridges.begin(), ridges.end(),
                                [&](Element g) { return lattice.leq(m, g); });
    if (!ok) return static_cast<int>(i);
  }
  return -1;
}

}  // namespace

ShellingVerdict verify_shelling(const PComplex& complex, const std::vector<Element>& order) {
  RequirePure(complex);
  const Lattice& lattice = complex.host();
  auto expected = complex.facets();
  auto given = order;
  std::sort(given.begin(), given.end());
  if (given != expected) throw InputError("shelling order is not a permutation of the facets");

  const int r = complex.rank();
  ShellingVerdict verdict;
  std::vector<std::size_t> earlier;
  for (std::size_t j = 0; j < order.size(); ++j) {
    const int i = FirstBlocker(lattice, order, j, earlier, r);
    if (i >= 0) {
      verdict.shellable = false;
      verdict.first = static_cast<std::size_t>(i) + 1;
      verdict.second = j + 1;
      verdict.detail = "no earlier facet f_k has f_i ^ f_j <= f_k ^ f_j of rank " +
                       std::to_string(r - 1) + " for f_i = " + lattice.label(order[i]) +
                       ", f_j = " + lattice.label(order[j]);
      return verdict;
    }
    earlier.push_back(j);
  }
  return verdict;
}

std::optional<std::vector<Element>> find_shelling(const PComplex& complex, std::size_t cap) {
  RequirePure(complex);
  const auto& facets = complex.facets();
  const std::size_t t = facets.size();
  if (t > cap || t > 24) {
    throw BudgetExceeded("shelling search is limited to " + std::to_string(std::min<std::size_t>(cap, 24)) +
                         " facets, complex has " + std::to_string(t));
  }
  const Lattice& lattice = complex.host();
  const int r = complex.rank();
  // Whether j can be appended depends only on the set of earlier facets.
  std::vector<std::uint8_t> dead(std::size_t{1} << t, 0);
  std::vector<std::size_t> prefix;
  std::function<bool(std::uint32_t)> extend = [&](std::uint32_t used) {
    if (prefix.size() == t) return true;
    if (dead[used]) return false;
    for (std::size_t j = 0; j < t; ++j) {
      if (used >> j & 1) continue;
      if (FirstBlocker(lattice, facets, j, prefix, r) >= 0) continue;
      prefix.push_back(j);
      if (extend(used | (1u << j))) return true;
      prefix.pop_back();
    }
    dead[used] = 1;
    return false;
  };
  if (!extend(0)) return std::nullopt;
  std::vector<Element> order;
  for (std::size_t j : prefix) order.push_back(facets[j]);
  return order;
}

PComplex sphere(LatticePtr host, Element x) {
  host->check(x);
  if (x == host->bottom()) throw InputError("the bottom element has no sphere");
  return PComplex::generate(host, host->lower_covers(x));
}

std::vector<Element> sort_rank_lex(const Lattice& lattice, std::vector<Element> elements,
                                   const AtomOrder& order) {
  const RankLexIndex index(lattice, order);
  std::stable_sort(elements.begin(), elements.end(), [&](Element a, Element b) {
    if (lattice.rank(a) != lattice.rank(b)) return lattice.rank(a) < lattice.rank(b);
    return index.position(a) < index.position(b);
  });
  return elements;
}

PComplex complex_from_json(const nlohmann::json& j, const std::filesystem::path& base_dir) {
  try {
    if (!j.is_object() || !j.contains("lattice") || !j.contains("facets")) {
      throw InputError("complex file needs \"lattice\" and \"facets\"");
    }
    auto lattice = lattice_from_json(j.at("lattice"), base_dir);
    std::vector<Element> facets;
    for (const auto& f : j.at("facets")) facets.push_back(lattice->decode(f));
    return PComplex::generate(std::move(lattice), facets);
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed complex: ") + e.what());
  }
}

nlohmann::json complex_to_json(const PComplex& complex) {
  nlohmann::json facets = nlohmann::json::array();
  for (Element f : complex.facets()) facets.push_back(complex.host().encode(f));
  return {{"lattice", complex.host().spec()}, {"facets", facets}};
}

}  // namespace powerlat
