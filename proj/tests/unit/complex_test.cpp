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

#include <algorithm>
#include <numeric>
#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "powerlat/errors.hpp"
#include "powerlat/homology.hpp"
#include "powerlat/instances.hpp"
#include "powerlat/matroid.hpp"
#include "powerlat/order_complex.hpp"
#include "powerlat/pcomplex.hpp"
#include "powerlat/simplicial.hpp"

namespace powerlat {
namespace {

std::vector<Element> Masks(const BooleanLattice& b, std::initializer_list<std::uint32_t> masks) {
  std::vector<Element> out;
  for (auto m : masks) out.push_back(b.from_mask(m));
  return out;
}

std::vector<oracle::Face> Faces(const std::vector<Simplex>& facets) {
  std::vector<oracle::Face> out;
  for (const auto& f : facets) out.emplace_back(f.begin(), f.end());
  return out;
}

SimplicialComplex Simplicial(int n, std::vector<Simplex> facets) {
  std::vector<std::string> labels;
  for (int v = 0; v < n; ++v) labels.push_back(std::string(1, static_cast<char>('a' + v)));
  return SimplicialComplex(labels, std::move(facets));
}

// Random P-complex: a few random generators of a random rank.
PComplex RandomComplex(std::mt19937& rng, const LatticePtr& host, bool pure) {
  const int r = 1 + static_cast<int>(rng() % static_cast<unsigned>(host->height() - 1));
  std::vector<Element> gens;
  const int count = 1 + static_cast<int>(rng() % 6);
  for (int t = 0; t < count; ++t) {
    const int rank = pure ? r : 1 + static_cast<int>(rng() % static_cast<unsigned>(host->height() - 1));
    const auto level = host->level(rank);
    gens.push_back(level[rng() % level.size()]);
  }
  return PComplex::generate(host, gens);
}

TEST(PComplexTest, GenerateKeepsMaximalElements) {
  const auto b = build_boolean(3);
  const auto s = PComplex::generate(b, Masks(*b, {0b011, 0b110, 0b001}));
  EXPECT_EQ(s.facets(), Masks(*b, {0b011, 0b110}));
  EXPECT_TRUE(s.is_pure());
  EXPECT_EQ(s.rank(), 2);
  EXPECT_TRUE(s.contains(b->from_mask(0b010)));
  EXPECT_FALSE(s.contains(b->from_mask(0b101)));
  const auto m = build_multiset({3, 3});
  const auto q = PComplex::generate(m, {m->from_exponents({2, 1}), m->from_exponents({1, 2})});
  EXPECT_EQ(q.facets().size(), 2u);
  const auto ceiling = PComplex::generate(m, {m->from_exponents({2, 2}), m->from_exponents({1, 3})});
  EXPECT_TRUE(ceiling.is_pure());
  EXPECT_EQ(ceiling.rank(), 4);
  const auto bottom = PComplex::generate(b, {b->bottom()});
  EXPECT_EQ(bottom.faces(), std::vector<Element>{b->bottom()});
  EXPECT_FALSE(PComplex::generate(b, Masks(*b, {0b011, 0b100})).is_pure());
  EXPECT_THROW(PComplex::generate(b, {}), InputError);
}

TEST(PComplexTest, ShellingSpecExamples) {
  const auto b3 = build_boolean(3);
  const auto triangle = PComplex::generate(b3, Masks(*b3, {0b011, 0b110, 0b101}));
  EXPECT_TRUE(verify_shelling(triangle, Masks(*b3, {0b011, 0b110, 0b101})).shellable);
  EXPECT_TRUE(find_shelling(triangle).has_value());

  const auto b4 = build_boolean(4);
  const auto edges = PComplex::generate(b4, Masks(*b4, {0b0011, 0b1100}));
  const auto v = verify_shelling(edges, edges.facets());
  EXPECT_FALSE(v.shellable);
  EXPECT_EQ(v.first, 1u);
  EXPECT_EQ(v.second, 2u);
  EXPECT_FALSE(find_shelling(edges).has_value());

  const auto m = build_multiset({2, 2});
  const std::vector<Element> u2 = {m->from_exponents({2, 0}), m->from_exponents({1, 1}),
                                   m->from_exponents({0, 2})};
  const auto s = PComplex::generate(m, u2);
  EXPECT_TRUE(verify_shelling(s, u2).shellable);
  EXPECT_FALSE(verify_shelling(s, {u2[0], u2[2], u2[1]}).shellable);

  const auto single = PComplex::generate(b3, {b3->top()});
  EXPECT_EQ(find_shelling(single), std::vector<Element>{b3->top()});
}

TEST(PComplexTest, ShellingErrors) {
  const auto b = build_boolean(3);
  const auto mixed = PComplex::generate(b, Masks(*b, {0b011, 0b100}));
  EXPECT_THROW(verify_shelling(mixed, mixed.facets()), PreconditionError);
  EXPECT_THROW(find_shelling(mixed), PreconditionError);
  const auto triangle = PComplex::generate(b, Masks(*b, {0b011, 0b110, 0b101}));
  EXPECT_THROW(verify_shelling(triangle, Masks(*b, {0b011, 0b110})), InputError);
  EXPECT_THROW(find_shelling(triangle, 2), BudgetExceeded);
}

TEST(PComplexTest, VerifyAndSearchMatchOracle) {
  std::mt19937 rng(11);
  const std::vector<LatticePtr> hosts = {build_boolean(4), build_multiset({2, 2, 1}),
                                         build_subspace(2, 3), build_divisor(360)};
  int shellable = 0, not_shellable = 0;
  for (int it = 0; it < 400; ++it) {
    const auto& host = hosts[it % hosts.size()];
    const auto s = RandomComplex(rng, host, true);
    auto order = s.facets();
    std::shuffle(order.begin(), order.end(), rng);
    ASSERT_EQ(verify_shelling(s, order).shellable, oracle::is_pure_shelling(*host, order));
    const bool expected = oracle::has_pure_shelling(*host, s.facets());
    const auto found = find_shelling(s);
    ASSERT_EQ(found.has_value(), expected);
    if (found) {
      EXPECT_TRUE(oracle::is_pure_shelling(*host, *found));
      ++shellable;
    } else {
      ++not_shellable;
    }
  }
  EXPECT_GT(shellable, 0);
  EXPECT_GT(not_shellable, 0);
}

TEST(PComplexTest, Spheres) {
  const auto b = build_boolean(3);
  const auto s = sphere(b, b->from_mask(0b011));
  EXPECT_EQ(s.facets(), Masks(*b, {0b001, 0b010}));
  const auto m = build_multiset({2, 1});
  const auto t = sphere(m, m->top());
  EXPECT_EQ(t.facets().size(), 2u);
  EXPECT_TRUE(t.contains(m->from_exponents({2, 0})));
  EXPECT_TRUE(t.contains(m->from_exponents({1, 1})));
  EXPECT_FALSE(t.contains(m->top()));
  const auto sub = build_subspace(2, 2);
  EXPECT_EQ(sphere(sub, sub->top()).facets().size(), 3u);
  EXPECT_THROW(sphere(b, b->bottom()), InputError);
}

TEST(PComplexTest, JsonRoundTrip) {
  const auto m = build_multiset({3, 3});
  const auto s = PComplex::generate(m, {m->from_exponents({2, 1}), m->from_exponents({1, 2})});
  const auto again = complex_from_json(complex_to_json(s));
  EXPECT_EQ(again.facets(), s.facets());
  EXPECT_THROW(complex_from_json({{"facets", nlohmann::json::array()}}), InputError);
  EXPECT_THROW(complex_from_json({{"lattice", {{"type", "boolean"}, {"n", 2}}}, {"facets", {{"z"}}}}),
               InputError);
}

TEST(SimplicialTest, PureShellingExamples) {
  const auto triangle = Simplicial(3, {{0, 1}, {1, 2}, {0, 2}});
  std::vector<std::size_t> order{0, 1, 2};
  do {
    EXPECT_TRUE(verify_pure_simplicial_shelling(triangle, order).shellable);
  } while (std::next_permutation(order.begin(), order.end()));
  EXPECT_FALSE(verify_pure_simplicial_shelling(Simplicial(4, {{0, 1}, {2, 3}})).shellable);
  const auto tetra = Simplicial(4, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
  std::vector<std::size_t> o4{0, 1, 2, 3};
  do {
    EXPECT_TRUE(verify_pure_simplicial_shelling(tetra, o4).shellable);
  } while (std::next_permutation(o4.begin(), o4.end()));
  EXPECT_THROW(verify_pure_simplicial_shelling(Simplicial(3, {{0, 1}, {2}})), PreconditionError);
}

TEST(SimplicialTest, NonPureExamples) {
  // ({a,b,c}, {c,d}) attaches along {c}; ({a,b}, {c,d}) does not.
  EXPECT_TRUE(check_simplicial_shelling({{0, 1, 2}, {2, 3}}).shellable);
  EXPECT_FALSE(check_simplicial_shelling({{0, 1}, {2, 3}}).shellable);
  // A vertex after an edge it misses: the empty face has size |{c}| - 1.
  EXPECT_TRUE(check_simplicial_shelling({{0, 1}, {2}}).shellable);
  EXPECT_FALSE(check_simplicial_shelling({{2}, {0, 1}}).shellable);
}

TEST(SimplicialTest, ShellingMatchesDefinitionOnRandomComplexes) {
  std::mt19937 rng(5);
  for (int it = 0; it < 3000; ++it) {
    const int n = 2 + static_cast<int>(rng() % 5);
    std::vector<Simplex> facets;
    const int count = 1 + static_cast<int>(rng() % 5);
    for (int t = 0; t < count; ++t) {
      Simplex f;
      for (int v = 0; v < n; ++v) {
        if (rng() % 2) f.push_back(v);
      }
      if (!f.empty()) facets.push_back(f);
    }
    if (facets.empty()) continue;
    const auto sc = Simplicial(n, facets);
    auto ordered = sc.facets();
    std::shuffle(ordered.begin(), ordered.end(), rng);
    ASSERT_EQ(check_simplicial_shelling(ordered).shellable, oracle::is_nonpure_shelling(Faces(ordered)));
  }
}

TEST(SimplicialTest, KeepsMaximalFacetsInGivenOrder) {
  const auto sc = Simplicial(4, {{2, 1}, {1}, {3, 0}, {1, 2}, {0, 3, 2}});
  EXPECT_EQ(sc.facets(), (std::vector<Simplex>{{1, 2}, {0, 2, 3}}));
  EXPECT_EQ(sc.dimension(), 2);
  EXPECT_FALSE(sc.is_pure());
  EXPECT_THROW(Simplicial(2, {{0, 5}}), InputError);
  EXPECT_EQ(simplicial_from_json(simplicial_to_json(sc)).facets(), sc.facets());
}

TEST(HomologyTest, ExactRankMatchesRationalOracle) {
  std::mt19937 rng(3);
  for (int it = 0; it < 300; ++it) {
    const int rows = 1 + static_cast<int>(rng() % 7);
    const int cols = 1 + static_cast<int>(rng() % 7);
    const bool huge = it % 3 == 0;
    std::vector<std::vector<long long>> dense(rows, std::vector<long long>(cols, 0));
    std::vector<SparseRow> sparse(rows);
    for (int r = 0; r < rows; ++r) {
      for (int c = 0; c < cols; ++c) {
        if (rng() % 3 == 0) continue;
        long long v = static_cast<long long>(rng() % 7) - 3;
        if (huge && v != 0) v *= 1'000'000'007LL * static_cast<long long>(1 + rng() % 1000);
        dense[r][c] = v;
        if (v != 0) sparse[r].emplace_back(c, v);
      }
    }
    // Duplicate a row combination to force rank deficiency.
    if (rows > 2) {
      dense[rows - 1] = dense[0];
      sparse[rows - 1] = sparse[0];
    }
    ASSERT_EQ(exact_rank(sparse), oracle::rank_q(dense));
  }
}

TEST(HomologyTest, SpecExamples) {
  EXPECT_EQ(reduced_betti(Simplicial(3, {{0, 1}, {1, 2}, {0, 2}})), (std::vector<std::int64_t>{0, 1}));
  EXPECT_EQ(reduced_betti(Simplicial(4, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}})),
            (std::vector<std::int64_t>{0, 0, 1}));
  // Cone over the triangle boundary with apex d.
  EXPECT_EQ(reduced_betti(Simplicial(4, {{0, 1, 3}, {1, 2, 3}, {0, 2, 3}})),
            (std::vector<std::int64_t>{0, 0, 0}));
  const auto w = check_wedge(Simplicial(3, {{0, 1}, {1, 2}, {0, 2}}));
  EXPECT_TRUE(w.wedge);
  EXPECT_EQ(w.spheres, 1);
  const auto two = check_wedge(Simplicial(6, {{0, 1, 2}, {3, 4, 5}}));
  EXPECT_FALSE(two.wedge);
  EXPECT_EQ(two.betti, (std::vector<std::int64_t>{1, 0, 0}));
  const auto cone = check_wedge(Simplicial(4, {{0, 1, 3}, {1, 2, 3}, {0, 2, 3}}));
  EXPECT_TRUE(cone.wedge);
  EXPECT_EQ(cone.spheres, 0);
  EXPECT_THROW(check_wedge(Simplicial(3, {{0, 1}, {2}})), PreconditionError);
}

TEST(HomologyTest, BettiMatchesDenseOracle) {
  std::mt19937 rng(17);
  for (int it = 0; it < 300; ++it) {
    const int n = 2 + static_cast<int>(rng() % 6);
    std::vector<Simplex> facets;
    for (int t = 0; t < 1 + static_cast<int>(rng() % 5); ++t) {
      Simplex f;
      for (int v = 0; v < n; ++v) {
        if (rng() % 2) f.push_back(v);
      }
      if (!f.empty()) facets.push_back(f);
    }
    if (facets.empty()) continue;
    const auto sc = Simplicial(n, facets);
    const auto got = reduced_betti(sc);
    const auto want = oracle::reduced_betti(Faces(sc.facets()));
    ASSERT_EQ(std::vector<long long>(got.begin(), got.end()), want);
  }
}

TEST(HomologyTest, FaceBudget) {
  const auto big = Simplicial(12, {{0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11}});
  EXPECT_THROW(reduced_betti(big, 100), BudgetExceeded);
}

TEST(OrderComplexTest, Chains) {
  const auto b = build_boolean(3);
  const auto s = sphere(b, b->from_mask(0b011));
  const auto oc = order_complex(s, true);
  EXPECT_EQ(oc.chains.size(), 2u);
  EXPECT_EQ(oc.complex.facets().size(), 2u);
  const auto b2 = build_boolean(2);
  const auto u1 = PComplex::generate(b2, Masks(*b2, {0b01, 0b10}));
  EXPECT_EQ(order_complex(u1, true).chains.size(), 2u);
  // Chains of U_2 on multiset (2,2): one through x1^2, two through x1x2, one through x2^2.
  const auto m = build_multiset({2, 2});
  const auto u2 = PComplex::generate(m, {m->from_exponents({2, 0}), m->from_exponents({1, 1}),
                                         m->from_exponents({0, 2})});
  const auto chains = order_complex(u2, true).chains;
  EXPECT_EQ(chains.size(), 4u);
  for (const auto& c : chains) EXPECT_EQ(c.size(), 3u);
  EXPECT_EQ(order_complex(u2, true).complex.dimension(), 2);
  EXPECT_EQ(order_complex(u2, false).complex.dimension(), 1);
  OrderComplexBudget tiny;
  tiny.max_chains = 2;
  EXPECT_THROW(order_complex(u2, true, tiny), BudgetExceeded);
}

TEST(OrderComplexTest, ChainComparisons) {
  const auto b = build_boolean(2);
  const auto id = AtomOrder::identity(*b);
  const RankLexIndex levels(*b, id);
  const Chain ca{b->bottom(), b->from_mask(0b01)};
  const Chain cb{b->bottom(), b->from_mask(0b10)};
  EXPECT_EQ(compare_reverse_lex(*b, levels, ca, cb), std::strong_ordering::less);
  EXPECT_EQ(compare_reverse_lex(*b, levels, ca, ca), std::strong_ordering::equal);

  const auto m = build_multiset({2, 1});
  const RankLexIndex ml(*m, AtomOrder::identity(*m));
  const Chain x{m->bottom(), m->from_exponents({1, 0}), m->from_exponents({1, 1})};
  const Chain y{m->bottom(), m->from_exponents({0, 1}), m->from_exponents({1, 1})};
  EXPECT_EQ(compare_reverse_lex(*m, ml, x, y), std::strong_ordering::less);

  // Tops decide first under the shelling order.
  const auto m22 = build_multiset({2, 2});
  const RankLexIndex l22(*m22, AtomOrder::identity(*m22));
  const Chain to_x1sq{m22->bottom(), m22->from_exponents({1, 0}), m22->from_exponents({2, 0})};
  const Chain to_x1x2{m22->bottom(), m22->from_exponents({1, 0}), m22->from_exponents({1, 1})};
  const Chain to_x1x2b{m22->bottom(), m22->from_exponents({0, 1}), m22->from_exponents({1, 1})};
  EXPECT_EQ(compare_shelling_order(*m22, l22, to_x1sq, to_x1x2), std::strong_ordering::less);
  EXPECT_EQ(compare_shelling_order(*m22, l22, to_x1x2, to_x1x2b),
            compare_reverse_lex(*m22, l22, to_x1x2, to_x1x2b));

  // Total order on all maximal chains of U_2 over multiset (2,2).
  const auto u2 = PComplex::generate(m22, {m22->from_exponents({2, 0}), m22->from_exponents({1, 1}),
                                           m22->from_exponents({0, 2})});
  const auto chains = order_complex(u2, true).chains;
  for (const auto& p : chains) {
    for (const auto& q : chains) {
      const auto pq = compare_shelling_order(*m22, l22, p, q);
      EXPECT_EQ(pq == std::strong_ordering::equal, p == q);
      EXPECT_EQ(pq, 0 <=> compare_shelling_order(*m22, l22, q, p));
      for (const auto& r : chains) {
        if (pq < 0 && compare_shelling_order(*m22, l22, q, r) < 0) {
          EXPECT_TRUE(compare_shelling_order(*m22, l22, p, r) < 0);
        }
      }
    }
  }
}

TEST(OrderComplexTest, SphereTheoremInstances) {
  const auto m = build_multiset({2, 2});
  for (Element x : m->level(2)) {
    const auto r = sphere_order_shelling_check(m, x, AtomOrder::identity(*m));
    EXPECT_TRUE(r.hypothesis && r.verdict.shellable) << m->label(x);
  }
  const auto s = build_subspace(2, 3);
  for (Element x : s->level(3)) {
    const auto r = sphere_order_shelling_check(s, x, AtomOrder::identity(*s));
    EXPECT_TRUE(r.hypothesis && r.verdict.shellable);
    EXPECT_EQ(r.chains, 21u);
  }
  const auto b = build_boolean(3);
  const auto atom = sphere_order_shelling_check(b, b->from_mask(0b001), AtomOrder::identity(*b));
  EXPECT_TRUE(atom.verdict.shellable);
  EXPECT_EQ(atom.chains, 1u);
}

TEST(OrderComplexTest, ComplexTheoremInstances) {
  for (const auto& host : std::vector<LatticePtr>{build_multiset({2, 2}), build_boolean(4)}) {
    const auto u2 = independence_complex(uniform_matroid(host, 2));
    const auto r = complex_order_shelling_check(u2, AtomOrder::identity(*host));
    EXPECT_TRUE(r.hypothesis);
    EXPECT_TRUE(r.verdict.shellable) << r.verdict.detail;
  }
  const auto b = build_boolean(3);
  const auto single = PComplex::generate(b, {b->from_mask(0b011)});
  EXPECT_TRUE(complex_order_shelling_check(single, AtomOrder::identity(*b)).verdict.shellable);
  // Disjoint edges: the facet order is not a shelling, so the hypothesis fails.
  const auto b4 = build_boolean(4);
  const auto edges = PComplex::generate(b4, Masks(*b4, {0b0011, 0b1100}));
  EXPECT_FALSE(complex_order_shelling_check(edges, AtomOrder::identity(*b4)).hypothesis);
}

TEST(OrderComplexTest, ProperPartIsWedgeOfSpheres) {
  const auto b = build_boolean(3);
  const auto triangle = PComplex::generate(b, Masks(*b, {0b011, 0b110, 0b101}));
  EXPECT_EQ(reduced_betti(order_complex(triangle, false).complex), (std::vector<std::int64_t>{0, 1}));
  const auto cone = check_wedge(order_complex(triangle, true).complex);
  EXPECT_TRUE(cone.wedge);
  EXPECT_EQ(cone.spheres, 0);
}

// Regression baseline: a shellable complex whose chain order is not a
// shelling of K(S) under the identity atom order.
TEST(OrderComplexTest, ChainOrderCounterexample) {
  const auto b3 = build_boolean(3);
  const auto s = PComplex::generate(b3, {b3->from_mask(0b101), b3->from_mask(0b110)});
  const auto r = complex_order_shelling_check(s, AtomOrder::identity(*b3));
  EXPECT_TRUE(r.hypothesis);
  EXPECT_FALSE(r.verdict.shellable);
  EXPECT_EQ(r.verdict.first, 1u);
  EXPECT_EQ(r.verdict.second, 3u);
  const auto c_first = complex_order_shelling_check(s, AtomOrder::from_labels(*b3, {"{c}", "{a}", "{b}"}));
  EXPECT_TRUE(c_first.verdict.shellable);
}

}  // namespace
}  // namespace powerlat
