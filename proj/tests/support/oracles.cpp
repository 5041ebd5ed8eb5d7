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

#include "oracles.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include <boost/multiprecision/cpp_int.hpp>

namespace powerlat::oracle {

Element meet(const Lattice& lattice, Element x, Element y) {
  std::optional<Element> best;
  for (std::uint32_t i = 0; i < lattice.size(); ++i) {
    const Element z{i};
    if (!lattice.leq(z, x) || !lattice.leq(z, y)) continue;
    if (!best || lattice.leq(*best, z)) best = z;
  }
  return *best;
}

Element join(const Lattice& lattice, Element x, Element y) {
  std::optional<Element> best;
  for (std::uint32_t i = 0; i < lattice.size(); ++i) {
    const Element z{i};
    if (!lattice.leq(x, z) || !lattice.leq(y, z)) continue;
    if (!best || lattice.leq(z, *best)) best = z;
  }
  return *best;
}

int valuation(const Lattice& lattice, AtomId w, Element x) {
  const Element atom = lattice.level(1)[w.index];
  int best = 0;
  for (std::uint32_t i = 0; i < lattice.size(); ++i) {
    const Element z{i};
    if (!lattice.leq(z, x) || !lattice.leq(atom, z)) continue;
    bool only_w = true;
    for (Element a : lattice.level(1)) {
      if (a != atom && lattice.leq(a, z)) only_w = false;
    }
    if (only_w) best = std::max(best, lattice.rank(z));
  }
  return best;
}

bool is_pure_shelling(const Lattice& lattice, const std::vector<Element>& order) {
  if (order.empty()) return true;
  const int r = lattice.rank(order.front());
  for (std::size_t j = 0; j < order.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      const Element mij = meet(lattice, order[i], order[j]);
      bool found = false;
      for (std::size_t k = 0; k < j && !found; ++k) {
        const Element mkj = meet(lattice, order[k], order[j]);
        found = lattice.rank(mkj) == r - 1 && lattice.leq(mij, mkj);
      }
      if (!found) return false;
    }
  }
  return true;
}

bool has_pure_shelling(const Lattice& lattice, std::vector<Element> facets) {
  std::sort(facets.begin(), facets.end());
  do {
    if (is_pure_shelling(lattice, facets)) return true;
  } while (std::next_permutation(facets.begin(), facets.end()));
  return false;
}

bool is_nonpure_shelling(const std::vector<Face>& order) {
  auto cut = [](const Face& a, const Face& b) {
    Face out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
    return out;
  };
  for (std::size_t j = 0; j < order.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      const Face fij = cut(order[i], order[j]);
      bool found = false;
      for (std::size_t k = 0; k < j && !found; ++k) {
        const Face fkj = cut(order[k], order[j]);
        found = fkj.size() + 1 == order[j].size() &&
                std::includes(fkj.begin(), fkj.end(), fij.begin(), fij.end());
      }
      if (!found) return false;
    }
  }
  return true;
}

std::size_t rank_q(const std::vector<std::vector<long long>>& matrix) {
  using Q = boost::multiprecision::cpp_rational;
  std::vector<std::vector<Q>> m;
  for (const auto& row : matrix) m.emplace_back(row.begin(), row.end());
  std::size_t rank = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    std::size_t p = rank;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[rank]);
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == rank || m[r][c] == 0) continue;
      const Q f = m[r][c] / m[rank][c];
      for (std::size_t k = c; k < cols; ++k) m[r][k] -= f * m[rank][k];
    }
    ++rank;
  }
  return rank;
}

std::size_t rank_f2(const std::vector<std::vector<long long>>& matrix) {
  std::vector<std::vector<int>> m;
  for (const auto& row : matrix) {
    std::vector<int> r;
    for (long long v : row) r.push_back(static_cast<int>(((v % 2) + 2) % 2));
    m.push_back(std::move(r));
  }
  std::size_t rank = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    std::size_t p = rank;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[rank]);
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r != rank && m[r][c]) {
        for (std::size_t k = c; k < cols; ++k) m[r][k] ^= m[rank][k];
      }
    }
    ++rank;
  }
  return rank;
}

std::vector<long long> reduced_betti(const std::vector<Face>& facets) {
  std::set<Face> all;
  for (const auto& f : facets) {
    const std::vector<int> v(f.begin(), f.end());
    for (std::uint32_t mask = 0; mask < (1u << v.size()); ++mask) {
      Face s;
      for (std::size_t b = 0; b < v.size(); ++b) {
        if (mask >> b & 1) s.insert(v[b]);
      }
      all.insert(s);
    }
  }
  int dim = -1;
  for (const auto& f : all) dim = std::max(dim, static_cast<int>(f.size()) - 1);
  // faces[d + 1] holds the faces of dimension d (d = -1 is the empty face).
  std::vector<std::vector<Face>> faces(static_cast<std::size_t>(dim) + 2);
  for (const auto& f : all) faces[f.size()].push_back(f);
  // rank of the boundary from dimension d to d - 1, for d = 0..dim.
  std::vector<std::size_t> boundary_rank(faces.size() + 1, 0);
  for (std::size_t s = 1; s < faces.size(); ++s) {
    std::map<Face, std::size_t> index;
    for (std::size_t i = 0; i < faces[s - 1].size(); ++i) index[faces[s - 1][i]] = i;
    std::vector<std::vector<long long>> m(faces[s].size(),
                                          std::vector<long long>(faces[s - 1].size(), 0));
    for (std::size_t r = 0; r < faces[s].size(); ++r) {
      int sign = 1;
      for (int v : faces[s][r]) {
        Face smaller = faces[s][r];
        smaller.erase(v);
        m[r][index.at(smaller)] = sign;
        sign = -sign;
      }
    }
    boundary_rank[s] = rank_q(m);
  }
  std::vector<long long> betti;
  for (std::size_t s = 1; s < faces.size(); ++s) {
    const auto cycles = faces[s].size() - boundary_rank[s];
    betti.push_back(static_cast<long long>(cycles) - static_cast<long long>(boundary_rank[s + 1]));
  }
  return betti;
}

bool is_forest(int vertices, const std::vector<std::pair<int, int>>& edges) {
  std::vector<std::vector<std::pair<int, std::size_t>>> adj(static_cast<std::size_t>(vertices));
  for (std::size_t e = 0; e < edges.size(); ++e) {
    if (edges[e].first == edges[e].second) return false;
    adj[edges[e].first].emplace_back(edges[e].second, e);
    adj[edges[e].second].emplace_back(edges[e].first, e);
  }
  std::vector<int> seen(static_cast<std::size_t>(vertices), 0);
  for (int root = 0; root < vertices; ++root) {
    if (seen[root]) continue;
    // Iterative DFS remembering the edge used to reach each vertex.
    std::vector<std::pair<int, std::size_t>> stack{{root, edges.size()}};
    while (!stack.empty()) {
      const auto [v, via] = stack.back();
      stack.pop_back();
      if (seen[v]) return false;
      seen[v] = 1;
      for (const auto& [w, e] : adj[v]) {
        if (e == via) continue;
        if (seen[w]) return false;
        stack.emplace_back(w, e);
      }
    }
  }
  return true;
}

bool divides(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

std::vector<Monomial> box_monomials(const std::vector<int>& box) {
  std::vector<Monomial> out{Monomial(box.size(), 0)};
  for (std::size_t i = 0; i < box.size(); ++i) {
    std::vector<Monomial> next;
    for (const auto& m : out) {
      for (int e = 0; e <= box[i]; ++e) {
        auto n = m;
        n[i] = e;
        next.push_back(std::move(n));
      }
    }
    out = std::move(next);
  }
  return out;
}

std::vector<Monomial> minimal_nonfaces(const std::vector<int>& box,
                                       const std::vector<Monomial>& facets) {
  std::vector<Monomial> nonfaces;
  for (const auto& m : box_monomials(box)) {
    const bool face = std::any_of(facets.begin(), facets.end(),
                                  [&](const Monomial& f) { return divides(m, f); });
    if (!face) nonfaces.push_back(m);
  }
  std::vector<Monomial> out;
  for (const auto& m : nonfaces) {
    const bool minimal = std::none_of(nonfaces.begin(), nonfaces.end(), [&](const Monomial& n) {
      return n != m && divides(n, m);
    });
    if (minimal) out.push_back(m);
  }
  return out;
}

bool in_ideal(const std::vector<Monomial>& generators, const Monomial& m) {
  return std::any_of(generators.begin(), generators.end(),
                     [&](const Monomial& g) { return divides(g, m); });
}

std::vector<Face> polar_complement_facets(const std::vector<int>& box,
                                          const std::vector<Monomial>& generators) {
  std::vector<int> offset(box.size() + 1, 0);
  for (std::size_t i = 0; i < box.size(); ++i) offset[i + 1] = offset[i] + box[i];
  const int n = offset.back();
  std::vector<Face> polar;
  for (const auto& g : generators) {
    Face p;
    for (std::size_t i = 0; i < g.size(); ++i) {
      for (int j = 0; j < g[i]; ++j) p.insert(offset[i] + j);
    }
    polar.push_back(std::move(p));
  }
  std::vector<Face> faces;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    Face s;
    for (int v = 0; v < n; ++v) {
      if (mask >> v & 1) s.insert(v);
    }
    const bool hit = std::any_of(polar.begin(), polar.end(), [&](const Face& p) {
      return std::includes(s.begin(), s.end(), p.begin(), p.end());
    });
    if (!hit) faces.push_back(std::move(s));
  }
  std::vector<Face> out;
  for (const auto& f : faces) {
    const bool maximal = std::none_of(faces.begin(), faces.end(), [&](const Face& g) {
      return g.size() > f.size() && std::includes(g.begin(), g.end(), f.begin(), f.end());
    });
    if (maximal) out.push_back(f);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace powerlat::oracle
