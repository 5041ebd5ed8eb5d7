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

#include "powerlat/homology.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <unordered_map>

#include <boost/multiprecision/cpp_int.hpp>

#include "powerlat/errors.hpp"

namespace powerlat {
namespace {

using BigInt = boost::multiprecision::cpp_int;

struct Overflow {};

std::int64_t Mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw Overflow{};
  return r;
}
std::int64_t Sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw Overflow{};
  return r;
}
BigInt Mul(const BigInt& a, const BigInt& b) { return a * b; }
BigInt Sub(const BigInt& a, const BigInt& b) { return a - b; }

std::int64_t Gcd(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }
BigInt Gcd(const BigInt& a, const BigInt& b) { return boost::multiprecision::gcd(a, b); }

template <typename T>
using Row = std::vector<std::pair<int, T>>;

template <typename T>
void MakePrimitive(Row<T>& row) {
  T g = 0;
  for (const auto& [c, v] : row) {
    g = Gcd(g, v);
    if (g == 1) return;
  }
  if (g > 1) {
    for (auto& [c, v] : row) v /= g;
  }
}

// b*r - a*p for rows sorted by column; drops zeros.
template <typename T>
Row<T> Combine(const T& b, const Row<T>& r, const T& a, const Row<T>& p) {
  Row<T> out;
  out.reserve(r.size() + p.size());
  std::size_t i = 0, j = 0;
  while (i < r.size() || j < p.size()) {
    if (j == p.size() || (i < r.size() && r[i].first < p[j].first)) {
      out.emplace_back(r[i].first, Mul(b, r[i].second));
      ++i;
    } else if (i == r.size() || p[j].first < r[i].first) {
      out.emplace_back(p[j].first, Sub(T(0), Mul(a, p[j].second)));
      ++j;
    } else {
      T v = Sub(Mul(b, r[i].second), Mul(a, p[j].second));
      if (v != 0) out.emplace_back(r[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

template <typename T>
std::size_t RankOf(const std::vector<SparseRow>& input) {
  std::unordered_map<int, Row<T>> pivots;
  for (const auto& src : input) {
    Row<T> r;
    for (const auto& [c, v] : src) {
      if (v != 0) r.emplace_back(c, T(v));
    }
    std::sort(r.begin(), r.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    MakePrimitive(r);
    while (!r.empty()) {
      auto it = pivots.find(r.front().first);
      if (it == pivots.end()) {
        pivots.emplace(r.front().first, std::move(r));
        break;
      }
      const Row<T>& p = it->second;
      const T a = r.front().second;
      const T b = p.front().second;
      const T g = Gcd(a, b);
      r = Combine<T>(b / g, r, a / g, p);
      MakePrimitive(r);
    }
  }
  return pivots.size();
}

struct SimplexHash {
  std::size_t operator()(const Simplex& s) const noexcept {
    std::size_t h = s.size();
    for (int v : s) h = h * 1000003u ^ static_cast<std::size_t>(v);
    return h;
  }
};

}  // namespace

std::size_t exact_rank(const std::vector<SparseRow>& rows) {
  try {
    return RankOf<std::int64_t>(rows);
  } catch (const Overflow&) {
    return RankOf<BigInt>(rows);
  }
}

std::vector<std::int64_t> reduced_betti(const SimplicialComplex& complex,
                                        std::size_t face_budget) {
  const int d = complex.dimension();
  // faces[k + 1] holds the k-faces; faces[0] = {empty face}.
  std::vector<std::vector<Simplex>> faces(d + 2);
  std::unordered_map<Simplex, int, SimplexHash> index;
  std::size_t total = 0;
  auto add = [&](Simplex s) {
    if (index.count(s)) return;
    if (++total > face_budget) {
      throw BudgetExceeded("complex has more than " + std::to_string(face_budget) + " faces");
    }
    const auto k = s.size();
    index.emplace(s, static_cast<int>(faces[k].size()));
    faces[k].push_back(std::move(s));
  };
  for (const auto& f : complex.facets()) {
    if (f.size() >= 63 || (std::size_t{1} << f.size()) > 2 * face_budget + 2) {
      throw BudgetExceeded("complex has more than " + std::to_string(face_budget) + " faces");
    }
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << f.size()); ++mask) {
      Simplex s;
      for (std::size_t i = 0; i < f.size(); ++i) {
        if (mask >> i & 1) s.push_back(f[i]);
      }
      add(std::move(s));
    }
  }

  // rank_of[k + 1] = rank of the boundary map from k-faces to (k-1)-faces.
  std::vector<std::size_t> boundary_rank(d + 3, 0);
  for (int k = 0; k <= d; ++k) {
    std::vector<SparseRow> rows;
    rows.reserve(faces[k + 1].size());
    for (const auto& s : faces[k + 1]) {
      SparseRow row;
      Simplex sub;
      for (std::size_t i = 0; i < s.size(); ++i) {
        sub.assign(s.begin(), s.end());
        sub.erase(sub.begin() + static_cast<std::ptrdiff_t>(i));
        row.emplace_back(index.at(sub), i % 2 == 0 ? 1 : -1);
      }
      rows.push_back(std::move(row));
    }
    boundary_rank[k + 1] = exact_rank(rows);
  }
  std::vector<std::int64_t> betti;
  for (int k = 0; k <= d; ++k) {
    const auto n = static_cast<std::int64_t>(faces[k + 1].size());
    betti.push_back(n - static_cast<std::int64_t>(boundary_rank[k + 1]) -
                    static_cast<std::int64_t>(boundary_rank[k + 2]));
  }
  return betti;
}

WedgeResult check_wedge(const SimplicialComplex& complex, std::size_t face_budget) {
  if (!complex.is_pure()) throw PreconditionError("wedge check needs a pure complex");
  WedgeResult result;
  result.betti = reduced_betti(complex, face_budget);
  if (result.betti.empty()) return result;
  result.spheres = result.betti.back();
  result.wedge = std::all_of(result.betti.begin(), result.betti.end() - 1,
                             [](std::int64_t b) { return b == 0; });
  return result;
}

}  // namespace powerlat
