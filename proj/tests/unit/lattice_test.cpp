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

#include <gtest/gtest.h>

#include "corpus.hpp"
#include "oracles.hpp"
#include "powerlat/errors.hpp"
#include "powerlat/instances.hpp"
#include "powerlat/lattice.hpp"

namespace powerlat {
namespace {

Element Label(const Lattice& l, const std::string& name) {
  for (std::uint32_t i = 0; i < l.size(); ++i) {
    if (l.label(Element{i}) == name) return Element{i};
  }
  ADD_FAILURE() << "no element labelled " << name;
  return Element{0};
}

std::vector<std::string> AtomLabels(const Lattice& l, const Factorization& f) {
  std::vector<std::string> out;
  for (AtomId a : f) out.push_back(l.atom_label(a));
  return out;
}

TEST(LatticeOracle, JoinMeetAndValuationsMatchBruteForce) {
  auto all = corpus::power_lattices();
  all.push_back({"rank mismatch", corpus::rank_mismatch()});
  all.push_back({"q8", corpus::q8_subgroups()});
  for (const auto& [name, lattice] : all) {
    const auto n = static_cast<std::uint32_t>(lattice->size());
    for (std::uint32_t i = 0; i < n; ++i) {
      for (std::uint32_t j = 0; j < n; ++j) {
        const Element x{i}, y{j};
        ASSERT_EQ(lattice->join(x, y), oracle::join(*lattice, x, y)) << name;
        ASSERT_EQ(lattice->meet(x, y), oracle::meet(*lattice, x, y)) << name;
      }
      const auto v = valuation(*lattice, Element{i});
      ASSERT_EQ(v, definitional_valuation(*lattice, Element{i})) << name;
      for (std::uint32_t a = 0; a < lattice->atom_count(); ++a) {
        ASSERT_EQ(v[a], oracle::valuation(*lattice, AtomId{a}, Element{i})) << name;
      }
    }
  }
}

TEST(Valuation, SpecExamples) {
  const auto b = build_boolean(3);
  EXPECT_EQ(valuation(*b, b->from_mask(0b101)), (Valuation{1, 0, 1}));
  const auto m = build_multiset({3, 3});
  EXPECT_EQ(valuation(*m, m->from_exponents({2, 1})), (Valuation{2, 1}));
  const auto s = build_subspace(2, 2);
  EXPECT_EQ(valuation(*s, s->top()), (Valuation{1, 1, 1}));
}

TEST(Factorization, OrderedByAtomOrderAndReconstructs) {
  const auto b = build_boolean(3);
  const auto bid = AtomOrder::identity(*b);
  EXPECT_EQ(AtomLabels(*b, factorization(*b, b->from_mask(0b101), bid)),
            (std::vector<std::string>{"{a}", "{c}"}));
  const auto m = build_multiset({3, 3});
  const auto x = m->from_exponents({2, 1});
  const auto f = factorization(*m, x, AtomOrder::identity(*m));
  EXPECT_EQ(AtomLabels(*m, f), (std::vector<std::string>{"x1", "x1", "x2"}));
  EXPECT_EQ(reconstruct(*m, f), x);
  EXPECT_EQ(m->join(m->from_exponents({2, 0}), m->from_exponents({0, 1})), x);
  const auto reversed = AtomOrder::from_labels(*m, {"x2", "x1"});
  EXPECT_EQ(AtomLabels(*m, factorization(*m, x, reversed)),
            (std::vector<std::string>{"x2", "x1", "x1"}));
}

TEST(LeqValuationwise, SpecExamples) {
  const auto b = build_boolean(3);
  EXPECT_TRUE(leq_valuationwise(*b, b->from_mask(0b001), b->from_mask(0b011)));
  const auto m = build_multiset({2, 2});
  EXPECT_FALSE(leq_valuationwise(*m, m->from_exponents({0, 2}), m->from_exponents({1, 1})));
  // In Sub(F_2^2) the valuation-wise order is containment.
  const auto s = build_subspace(2, 2);
  for (std::uint32_t i = 0; i < s->size(); ++i) {
    for (std::uint32_t j = 0; j < s->size(); ++j) {
      EXPECT_EQ(leq_valuationwise(*s, Element{i}, Element{j}), s->leq(Element{i}, Element{j}));
    }
  }
  EXPECT_TRUE(leq_valuationwise(*s, s->span({{1, 1}}), s->top()));
}

TEST(RankLex, SpecExamplesAndRuleAgreement) {
  const auto m = build_multiset({2, 2});
  const auto id = AtomOrder::identity(*m);
  EXPECT_EQ(rank_lex_compare(*m, m->from_exponents({1, 1}), m->from_exponents({0, 2}), id),
            std::strong_ordering::less);
  EXPECT_EQ(rank_lex_compare(*m, m->top(), m->top(), id), std::strong_ordering::equal);
  EXPECT_THROW(rank_lex_compare(*m, m->top(), m->bottom(), id), PreconditionError);
  for (LatticePtr l : {LatticePtr(build_multiset({3, 2})), LatticePtr(build_subspace(2, 3))}) {
    const auto order = AtomOrder::identity(*l);
    for (int r = 0; r <= l->height(); ++r) {
      for (Element x : l->level(r)) {
        for (Element y : l->level(r)) {
          ASSERT_EQ(rank_lex_compare(*l, x, y, order), min_difference_compare(*l, x, y, order));
        }
      }
    }
  }
}

TEST(AtomPowers, SpecExamples) {
  const auto m = build_multiset({3, 3});
  EXPECT_EQ(atom_power(*m, AtomId{0}, 2), m->from_exponents({2, 0}));
  EXPECT_EQ(m->powers(AtomId{0}),
            (std::vector<Element>{m->from_exponents({1, 0}), m->from_exponents({2, 0}),
                                  m->from_exponents({3, 0})}));
  const auto b = build_boolean(3);
  EXPECT_FALSE(atom_power(*b, AtomId{0}, 2).has_value());
}

TEST(Covers, SpecExamples) {
  const auto b = build_boolean(3);
  EXPECT_EQ(covers(*b, b->from_mask(0b001)),
            (std::vector<Element>{b->from_mask(0b011), b->from_mask(0b101)}));
  const auto m = build_multiset({2, 2});
  auto c = covers(*m, m->from_exponents({1, 1}));
  std::sort(c.begin(), c.end());
  EXPECT_EQ(c, (std::vector<Element>{m->from_exponents({2, 1}), m->from_exponents({1, 2})}));
  const auto s = build_subspace(2, 2);
  EXPECT_EQ(covers(*s, s->span({{1, 0}})), (std::vector<Element>{s->top()}));
}

TEST(VerifyPowerLattice, CorpusPasses) {
  for (const auto& [name, lattice] : corpus::power_lattices()) {
    const auto report = verify_power_lattice(*lattice);
    EXPECT_TRUE(report.complete) << name;
    EXPECT_TRUE(report.all_passed()) << name << "\n" << report.to_json().dump(1);
  }
}

TEST(VerifyPowerLattice, RankMismatchFailsEqualRankAxiomWithWitness) {
  const auto fig = corpus::rank_mismatch();
  const auto report = verify_power_lattice(*fig);
  const auto* check = report.find("valuation_rank");
  ASSERT_NE(check, nullptr);
  EXPECT_FALSE(check->passed);
  ASSERT_EQ(check->witness.size(), 2u);
  EXPECT_EQ(fig->rank(check->witness[0]), fig->rank(check->witness[1]));
  EXPECT_NE(fig->total_valuation(check->witness[0]), fig->total_valuation(check->witness[1]));
  EXPECT_EQ(check->witness_labels, (std::vector<std::string>{"2", "3"}));
  EXPECT_EQ(fig->total_valuation(Label(*fig, "2")), 3);
  EXPECT_EQ(fig->total_valuation(Label(*fig, "3")), 2);
  EXPECT_TRUE(report.find("unique_powers")->passed);
}

TEST(VerifyPowerLattice, Q8FailsUniquePowers) {
  const auto q8 = corpus::q8_subgroups();
  EXPECT_EQ(q8->size(), 6u);
  const auto report = verify_power_lattice(*q8);
  const auto* check = report.find("unique_powers");
  ASSERT_NE(check, nullptr);
  EXPECT_FALSE(check->passed);
  EXPECT_EQ(check->witness_labels.front(), "Z2");
}

TEST(VerifyPowerLattice, SubspaceProductViolatesEqualRankAxiom) {
  const auto p = build_product({build_subspace(2, 2), build_subspace(2, 2)});
  EXPECT_EQ(p->size(), 25u);
  EXPECT_EQ(p->height(), 4);
  EXPECT_EQ(p->atom_count(), 6u);
  const auto report = verify_power_lattice(*p);
  EXPECT_TRUE(report.find("unique_powers")->passed);
  EXPECT_FALSE(report.find("valuation_rank")->passed);
}

TEST(VerifyPowerLattice, BudgetStopsEarly) {
  Budget tiny;
  tiny.max_pair_operations = 10;
  const auto report = verify_power_lattice(*build_boolean(4), tiny);
  EXPECT_FALSE(report.complete);
  EXPECT_EQ(report.find("valuation_rank"), nullptr);
}

TEST(ValuationLaws, HoldOnCorpusWithStrictJoinInSubspaces) {
  for (const auto& [name, lattice] : corpus::power_lattices()) {
    const auto report = check_valuation_laws(*lattice);
    EXPECT_TRUE(report.all_passed()) << name << "\n" << report.to_json().dump(1);
  }
  const auto s = build_subspace(2, 2);
  const auto strict = strict_join_witness(*s);
  ASSERT_TRUE(strict.has_value());
  EXPECT_EQ(s->join(strict->x, strict->y), s->top());
  const auto l10 = s->span({{1, 0}});
  const auto l01 = s->span({{0, 1}});
  const auto l11 = s->span({{1, 1}});
  EXPECT_EQ(s->join(l10, l01), s->top());
  const auto a11 = s->atom_id(l11);
  ASSERT_TRUE(a11.has_value());
  EXPECT_EQ(valuation(*s, s->join(l10, l01))[a11->index], 1);
  EXPECT_EQ(valuation(*s, l10)[a11->index], 0);
  EXPECT_FALSE(strict_join_witness(*build_boolean(3)).has_value());
  EXPECT_FALSE(strict_join_witness(*build_multiset({2, 2})).has_value());
}

TEST(Instances, Sizes) {
  EXPECT_EQ(build_boolean(3)->size(), 8u);
  EXPECT_EQ(build_boolean(3)->atom_count(), 3u);
  EXPECT_THROW(build_boolean(0), InputError);
  EXPECT_EQ(build_multiset({3, 3})->size(), 16u);
  EXPECT_EQ(build_multiset({2, 1})->size(), 6u);
  EXPECT_EQ(build_multiset({2, 2, 2})->size(), 27u);
  EXPECT_EQ(build_subspace(2, 2)->size(), 5u);
  EXPECT_EQ(build_subspace(2, 3)->size(), 16u);
  EXPECT_EQ(build_subspace(3, 2)->size(), 6u);
  EXPECT_EQ(build_subspace(2, 4)->size(), 67u);
  EXPECT_THROW(build_subspace(4, 2), InputError);
  EXPECT_EQ(build_divisor(12)->exponents(), (std::vector<int>{2, 1}));
  EXPECT_EQ(build_divisor(12)->size(), 6u);
  EXPECT_EQ(build_divisor(30)->exponents(), (std::vector<int>{1, 1, 1}));
  EXPECT_EQ(build_divisor(7)->height(), 1);
  EXPECT_EQ(build_divisor(360)->size(), 24u);
  EXPECT_THROW(build_divisor(1), InputError);
  EXPECT_EQ(factorize(360), (std::vector<std::pair<std::uint64_t, int>>{{2, 3}, {3, 2}, {5, 1}}));
}

TEST(Instances, SubspaceMeetIsIntersection) {
  const auto s = build_subspace(2, 3);
  for (std::uint32_t i = 0; i < s->size(); ++i) {
    for (std::uint32_t j = 0; j < s->size(); ++j) {
      const Element x{i}, y{j};
      // dim(x) + dim(y) = dim(x v y) + dim(x ^ y) (modular).
      EXPECT_EQ(s->rank(x) + s->rank(y), s->rank(s->join(x, y)) + s->rank(s->meet(x, y)));
    }
  }
}

TEST(Instances, BooleanProductIsBoolean) {
  const auto p = build_product({build_boolean(1), build_boolean(1)});
  EXPECT_EQ(p->size(), 4u);
  EXPECT_EQ(p->atom_count(), 2u);
  EXPECT_TRUE(verify_power_lattice(*p).all_passed());
}

TEST(Instances, HasseDiagnostics) {
  const auto diamond = build_hasse({"0", "a", "b", "1"}, {{"0", "a"}, {"0", "b"}, {"a", "1"}, {"b", "1"}});
  EXPECT_TRUE(verify_power_lattice(*diamond).all_passed());
  // Two maximal elements.
  EXPECT_THROW(build_hasse({"0", "a", "b"}, {{"0", "a"}, {"0", "b"}}), InputError);
  // A cycle.
  EXPECT_THROW(build_hasse({"0", "a", "1"}, {{"0", "a"}, {"a", "1"}, {"1", "a"}}), InputError);
  // Not graded: 0 < a < b < 1 and 0 < c < 1.
  EXPECT_THROW(build_hasse({"0", "a", "b", "c", "1"},
                           {{"0", "a"}, {"a", "b"}, {"b", "1"}, {"0", "c"}, {"c", "1"}}),
               InputError);
  // Not a lattice: a, b both below c and d.
  EXPECT_THROW(build_hasse({"0", "a", "b", "c", "d", "1"},
                           {{"0", "a"}, {"0", "b"}, {"a", "c"}, {"a", "d"}, {"b", "c"},
                            {"b", "d"}, {"c", "1"}, {"d", "1"}}),
               InputError);
  EXPECT_THROW(build_hasse({"0", "1"}, {{"0", "x"}}), InputError);
}

TEST(Instances, JsonRoundTrip) {
  for (const auto& [name, lattice] : corpus::power_lattices()) {
    const auto again = lattice_from_json(lattice->spec());
    ASSERT_EQ(again->size(), lattice->size()) << name;
    for (std::uint32_t i = 0; i < lattice->size(); ++i) {
      const Element x{i};
      EXPECT_EQ(again->label(x), lattice->label(x)) << name;
      EXPECT_EQ(lattice->decode(lattice->encode(x)), x) << name;
    }
  }
  const auto fig = corpus::rank_mismatch();
  EXPECT_EQ(lattice_from_json(fig->spec())->size(), 7u);
  EXPECT_THROW(lattice_from_json({{"type", "torus"}}), InputError);
  EXPECT_THROW(lattice_from_json({{"type", "boolean"}}), InputError);
  EXPECT_THROW(lattice_from_json(nlohmann::json::array()), InputError);
}

TEST(AtomOrderTest, RejectsNonPermutations) {
  EXPECT_THROW(AtomOrder({AtomId{0}, AtomId{0}}, 2), InputError);
  EXPECT_THROW(AtomOrder({AtomId{0}}, 2), InputError);
  const auto b = build_boolean(2);
  EXPECT_THROW(AtomOrder::from_labels(*b, {"{z}", "{a}"}), InputError);
  EXPECT_EQ(AtomOrder::from_labels(*b, {"{b}", "{a}"}).position(AtomId{1}), 0u);
}

}  // namespace
}  // namespace powerlat
