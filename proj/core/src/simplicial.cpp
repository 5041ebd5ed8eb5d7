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

#include "powerlat/simplicial.hpp"

#include <algorithm>
#include <set>

#include "powerlat/errors.hpp"

namespace powerlat {

SimplicialComplex::SimplicialComplex(std::vector<std::string> vertex_labels,
                                     std::vector<Simplex> facets)
    : labels_(std::move(vertex_labels)) {
  for (auto& f : facets) {
    std::sort(f.begin(), f.end());
    f.erase(std::unique(f.begin(), f.end()), f.end());
    for (int v : f) {
      if (v < 0 || static_cast<std::size_t>(v) >= labels_.size()) {
        throw InputError("facet uses vertex " + std::to_string(v) + " but there are " +
                         std::to_string(labels_.size()) + " vertices");
      }
    }
  }
  std::set<Simplex> seen;
  for (std::size_t i = 0; i < facets.size(); ++i) {
    if (!seen.insert(facets[i]).second) continue;
    const bool maximal = std::none_of(facets.begin(), facets.end(), [&](const Simplex& g) {
      return g.size() > facets[i].size() &&
             std::includes(g.begin(), g.end(), facets[i].begin(), facets[i].end());
    });
    if (maximal) facets_.push_back(facets[i]);
  }
  if (facets_.empty()) facets_.push_back({});
}

int SimplicialComplex::dimension() const {
  std::size_t d = 0;
  for (const auto& f : facets_) d = std::max(d, f.size());
  return static_cast<int>(d) - 1;
}

bool SimplicialComplex::is_pure() const {
  return std::all_of(facets_.begin(), facets_.end(),
                     [&](const Simplex& f) { return f.size() == facets_.front().size(); });
}

ShellingVerdict check_simplicial_shelling(const std::vector<Simplex>& facets) {
  // R_j collects the vertices v of F_j whose removal leaves a subset of an
  // earlier facet. The condition fails at j exactly when some earlier F_i
  // contains all of R_j.
  std::size_t vertex_bound = 0;
  for (const auto& f : facets) {
    for (int v : f) vertex_bound = std::max<std::size_t>(vertex_bound, v + 1);
  }
  std::vector<std::vector<std::size_t>> incidence(vertex_bound);
  auto contains = [](const Simplex& big, const Simplex& small) {
    return std::includes(big.begin(), big.end(), small.begin(), small.end());
  };

  ShellingVerdict verdict;
  for (std::size_t j = 0; j < facets.size(); ++j) {
    const Simplex& fj = facets[j];
    if (j > 0) {
      Simplex restricted;
      Simplex ridge;
      for (std::size_t pos = 0; pos < fj.size(); ++pos) {
        ridge.assign(fj.begin(), fj.end());
        ridge.erase(ridge.begin() + static_cast<std::ptrdiff_t>(pos));
        bool found = false;
        const int v = fj[pos];
        auto misses_v = [&](std::size_t k) {
          return !std::binary_search(facets[k].begin(), facets[k].end(), v);
        };
        if (ridge.empty()) {
          found = incidence[v].size() < j;
        } else {
          // Scan earlier facets through the rarest vertex of the ridge.
          int rare = ridge.front();
          for (int u : ridge) {
            if (incidence[u].size() < incidence[rare].size()) rare = u;
          }
          for (std::size_t k : incidence[rare]) {
            if (contains(facets[k], ridge) && misses_v(k)) {
              found = true;
              break;
            }
          }
        }
        if (found) restricted.push_back(v);
      }
      std::size_t blocker = j;
      if (restricted.empty()) {
        blocker = 0;
      } else {
        for (std::size_t i : incidence[restricted.front()]) {
          if (contains(facets[i], restricted)) {
            blocker = i;
            break;
          }
        }
      }
      if (blocker < j) {
        verdict.shellable = false;
        verdict.first = blocker + 1;
        verdict.second = j + 1;
        verdict.detail = "no earlier facet meets F_j in a codimension-one face containing F_i n F_j";
        return verdict;
      }
    }
    for (int v : fj) incidence[v].push_back(j);
  }
  return verdict;
}

ShellingVerdict verify_pure_simplicial_shelling(const SimplicialComplex& complex,
                                                const std::vector<std::size_t>& order) {
  if (!complex.is_pure()) throw PreconditionError("simplicial complex is not pure");
  if (order.empty()) return check_simplicial_shelling(complex.facets());
  auto sorted = order;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t k = 0; k < sorted.size(); ++k) {
    if (sorted[k] != k || sorted.size() != complex.facets().size()) {
      throw InputError("facet order is not a permutation of the facets");
    }
  }
  std::vector<Simplex> ordered;
  for (std::size_t k : order) ordered.push_back(complex.facets()[k]);
  return check_simplicial_shelling(ordered);
}

SimplicialComplex simplicial_from_json(const nlohmann::json& j) {
  try {
    if (!j.is_object() || !j.contains("vertices") || !j.contains("facets")) {
      throw InputError("simplicial complex needs \"vertices\" and \"facets\"");
    }
    std::vector<std::string> labels;
    for (const auto& v : j.at("vertices")) labels.push_back(v.is_string() ? v.get<std::string>() : v.dump());
    return SimplicialComplex(std::move(labels), j.at("facets").get<std::vector<Simplex>>());
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed simplicial complex: ") + e.what());
  }
}

nlohmann::json simplicial_to_json(const SimplicialComplex& complex) {
  return {{"vertices", complex.labels()}, {"facets", complex.facets()}};
}

}  // namespace powerlat
