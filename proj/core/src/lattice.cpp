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

#include "powerlat/lattice.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_map>

#include "powerlat/errors.hpp"

namespace powerlat {
namespace {

// Elements z != bottom with exactly one atom below them, grouped by atom and
// sorted by rank. Follows the definition of powers directly.
std::vector<std::vector<Element>> ScanPowers(const Lattice& lattice) {
  const auto atoms = lattice.level(1);
  std::vector<std::vector<Element>> powers(atoms.size());
  for (std::uint32_t i = 0; i < lattice.size(); ++i) {
    const Element z{i};
    if (z == lattice.bottom()) continue;
    int found = -1;
    int count = 0;
    for (std::size_t a = 0; a < atoms.size() && count < 2; ++a) {
      if (lattice.leq(atoms[a], z)) {
        found = static_cast<int>(a);
        ++count;
      }
    }
    if (count == 1) powers[found].push_back(z);
  }
  for (auto& p : powers) {
    std::stable_sort(p.begin(), p.end(), [&](Element a, Element b) {
      return lattice.rank(a) < lattice.rank(b);
    });
  }
  return powers;
}

Valuation ValuationFromPowers(const Lattice& lattice,
                              const std::vector<std::vector<Element>>& powers,
                              Element x) {
  Valuation v(powers.size(), 0);
  for (std::size_t a = 0; a < powers.size(); ++a) {
    for (Element z : powers[a]) {
      if (lattice.rank(z) > v[a] && lattice.leq(z, x)) v[a] = lattice.rank(z);
    }
  }
  return v;
}

std::vector<std::size_t> FactorPositions(const Lattice& lattice, Element x,
                                         const AtomOrder& order) {
  std::vector<std::size_t> out;
  for (AtomId a : factorization(lattice, x, order)) {
    out.push_back(order.position(a));
  }
  return out;
}

CheckResult NewCheck(std::string name, bool passed = true) {
  CheckResult c;
  c.name = std::move(name);
  c.passed = passed;
  return c;
}

void AddWitness(const Lattice& lattice, CheckResult& check,
                std::initializer_list<Element> elements, std::string detail) {
  check.passed = false;
  for (Element e : elements) {
    check.witness.push_back(e);
    check.witness_labels.push_back(lattice.label(e));
  }
  check.detail = std::move(detail);
}

// Counts pair operations against the budget.
class OpCounter {
 public:
  explicit OpCounter(std::uint64_t limit) : limit_(limit) {}
  bool Spend(std::uint64_t n) {
    used_ += n;
    return used_ <= limit_;
  }
  std::uint64_t remaining() const {
    return used_ >= limit_ ? 0 : limit_ - used_;
  }

 private:
  std::uint64_t limit_;
  std::uint64_t used_ = 0;
};

}  // namespace

void Lattice::check(Element x) const {
  if (!contains(x)) {
    throw InputError("element handle " + std::to_string(x.index) +
                     " does not belong to this " + kind() + " lattice");
  }
}

std::span<const Element> Lattice::level(int r) const {
  if (r < 0 || r >= static_cast<int>(levels_.size())) return {};
  return levels_[r];
}

std::optional<AtomId> Lattice::atom_id(Element x) const {
  const auto atoms = level(1);
  auto it = std::lower_bound(atoms.begin(), atoms.end(), x);
  if (it == atoms.end() || *it != x) return std::nullopt;
  return AtomId{static_cast<std::uint32_t>(it - atoms.begin())};
}

Valuation Lattice::valuation(Element x) const {
  std::call_once(valuations_once_, [this] {
    const auto powers = ScanPowers(*this);
    valuations_.resize(size());
    for (std::uint32_t i = 0; i < size(); ++i) {
      valuations_[i] = ValuationFromPowers(*this, powers, Element{i});
    }
  });
  return valuations_[x.index];
}

std::vector<Element> Lattice::upper_covers(Element x) const {
  std::vector<Element> out;
  for (Element y : level(rank(x) + 1)) {
    if (leq(x, y)) out.push_back(y);
  }
  return out;
}

std::vector<Element> Lattice::lower_covers(Element x) const {
  std::vector<Element> out;
  for (Element y : level(rank(x) - 1)) {
    if (leq(y, x)) out.push_back(y);
  }
  return out;
}

std::vector<Element> Lattice::powers(AtomId a) const {
  std::call_once(powers_once_, [this] { powers_ = ScanPowers(*this); });
  return powers_[a.index];
}

int Lattice::total_valuation(Element x) const {
  const auto v = valuation(x);
  return std::accumulate(v.begin(), v.end(), 0);
}

void Lattice::set_ranks(std::vector<int> ranks) {
  ranks_ = std::move(ranks);
  if (ranks_.empty()) throw InputError("lattice has no elements");
  const int max_rank = *std::max_element(ranks_.begin(), ranks_.end());
  levels_.assign(max_rank + 1, {});
  for (std::uint32_t i = 0; i < ranks_.size(); ++i) {
    if (ranks_[i] < 0) throw InputError("negative rank");
    levels_[ranks_[i]].push_back(Element{i});
  }
  if (levels_.front().size() != 1) {
    throw InputError("lattice must have a unique element of rank 0");
  }
  if (levels_.back().size() != 1) {
    throw InputError("lattice must have a unique element of maximal rank");
  }
  bottom_ = levels_.front().front();
  top_ = levels_.back().front();
}

Valuation definitional_valuation(const Lattice& lattice, Element x) {
  lattice.check(x);
  return ValuationFromPowers(lattice, ScanPowers(lattice), x);
}

AtomOrder::AtomOrder(std::vector<AtomId> sequence, std::size_t atom_count)
    : sequence_(std::move(sequence)), position_(atom_count, atom_count) {
  if (sequence_.size() != atom_count) {
    throw InputError("atom order has " + std::to_string(sequence_.size()) +
                     " entries, expected " + std::to_string(atom_count));
  }
  for (std::size_t i = 0; i < sequence_.size(); ++i) {
    const auto a = sequence_[i].index;
    if (a >= atom_count || position_[a] != atom_count) {
      throw InputError("atom order is not a permutation of the atoms");
    }
    position_[a] = i;
  }
}

AtomOrder AtomOrder::identity(std::size_t atom_count) {
  std::vector<AtomId> seq(atom_count);
  for (std::size_t i = 0; i < atom_count; ++i) {
    seq[i] = AtomId{static_cast<std::uint32_t>(i)};
  }
  return AtomOrder(std::move(seq), atom_count);
}

AtomOrder AtomOrder::identity(const Lattice& lattice) {
  return identity(lattice.atom_count());
}

AtomOrder AtomOrder::from_labels(const Lattice& lattice,
                                 const std::vector<std::string>& labels) {
  std::unordered_map<std::string, AtomId> by_label;
  for (std::uint32_t a = 0; a < lattice.atom_count(); ++a) {
    by_label.emplace(lattice.atom_label(AtomId{a}), AtomId{a});
  }
  std::vector<AtomId> seq;
  for (const auto& l : labels) {
    auto it = by_label.find(l);
    if (it == by_label.end()) throw InputError("unknown atom label '" + l + "'");
    seq.push_back(it->second);
  }
  return AtomOrder(std::move(seq), lattice.atom_count());
}

Valuation valuation(const Lattice& lattice, Element x) {
  lattice.check(x);
  return lattice.valuation(x);
}

Factorization factorization(const Lattice& lattice, Element x,
                            const AtomOrder& order) {
  lattice.check(x);
  const auto v = lattice.valuation(x);
  Factorization f;
  for (AtomId a : order.sequence()) {
    f.insert(f.end(), v[a.index], a);
  }
  return f;
}

Element reconstruct(const Lattice& lattice, const Factorization& f) {
  std::map<std::uint32_t, int> counts;
  for (AtomId a : f) ++counts[a.index];
  Element x = lattice.bottom();
  for (const auto& [a, n] : counts) {
    auto p = atom_power(lattice, AtomId{a}, n);
    if (!p) {
      throw PreconditionError("atom " + lattice.atom_label(AtomId{a}) +
                              " has no power of rank " + std::to_string(n));
    }
    x = lattice.join(x, *p);
  }
  return x;
}

bool leq_valuationwise(const Lattice& lattice, Element x, Element y) {
  lattice.check(x);
  lattice.check(y);
  const auto vx = lattice.valuation(x);
  const auto vy = lattice.valuation(y);
  for (std::size_t a = 0; a < vx.size(); ++a) {
    if (vx[a] > vy[a]) return false;
  }
  return true;
}

std::strong_ordering rank_lex_compare(const Lattice& lattice, Element x,
                                      Element y, const AtomOrder& order) {
  lattice.check(x);
  lattice.check(y);
  if (lattice.rank(x) != lattice.rank(y)) {
    throw PreconditionError("rank_lex_compare needs elements of equal rank");
  }
  if (x == y) return std::strong_ordering::equal;
  const auto fx = FactorPositions(lattice, x, order);
  const auto fy = FactorPositions(lattice, y, order);
  return std::lexicographical_compare_three_way(fx.begin(), fx.end(),
                                                fy.begin(), fy.end());
}

std::strong_ordering min_difference_compare(const Lattice& lattice, Element x,
                                            Element y, const AtomOrder& order) {
  lattice.check(x);
  lattice.check(y);
  if (lattice.rank(x) != lattice.rank(y)) {
    throw PreconditionError(
        "min_difference_compare needs elements of equal rank");
  }
  const auto vx = lattice.valuation(x);
  const auto vy = lattice.valuation(y);
  // Smallest atom (under the order) of each multiset difference.
  std::size_t min_x = order.size();
  std::size_t min_y = order.size();
  for (std::size_t a = 0; a < vx.size(); ++a) {
    const auto pos = order.position(AtomId{static_cast<std::uint32_t>(a)});
    if (vx[a] > vy[a]) min_x = std::min(min_x, pos);
    if (vy[a] > vx[a]) min_y = std::min(min_y, pos);
  }
  return min_x <=> min_y;
}

std::optional<Element> atom_power(const Lattice& lattice, AtomId a, int r) {
  if (a.index >= lattice.atom_count()) {
    throw InputError("atom index out of range");
  }
  if (r < 0) return std::nullopt;
  if (r == 0) return lattice.bottom();
  for (Element z : lattice.powers(a)) {
    if (lattice.rank(z) == r) return z;
  }
  return std::nullopt;
}

std::vector<Element> covers(const Lattice& lattice, Element x) {
  lattice.check(x);
  return lattice.upper_covers(x);
}

RankLexIndex::RankLexIndex(const Lattice& lattice, const AtomOrder& order)
    : position_(lattice.size(), 0) {
  for (int r = 0; r <= lattice.height(); ++r) {
    const auto lvl = lattice.level(r);
    std::vector<std::pair<std::vector<std::size_t>, Element>> keyed;
    keyed.reserve(lvl.size());
    for (Element x : lvl) keyed.emplace_back(FactorPositions(lattice, x, order), x);
    std::stable_sort(keyed.begin(), keyed.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });
    for (std::uint32_t i = 0; i < keyed.size(); ++i) {
      position_[keyed[i].second.index] = i;
    }
  }
}

VerificationReport verify_power_lattice(const Lattice& lattice,
                                        const Budget& budget) {
  const std::uint32_t n = static_cast<std::uint32_t>(lattice.size());
  OpCounter ops(budget.max_pair_operations);
  VerificationReport report;

  CheckResult laws = NewCheck("lattice_laws");
  CheckResult rank_fn = NewCheck("rank_function");
  CheckResult semi = NewCheck("semimodular");

  if (lattice.rank(lattice.bottom()) != 0) {
    AddWitness(lattice, rank_fn, {lattice.bottom()}, "rank of bottom is not 0");
  }

  // Elements of rank rho(x)+1 above x; used for the cover condition below.
  std::vector<std::vector<Element>> next_up(n);
  for (std::uint32_t i = 0; i < n && report.complete; ++i) {
    const Element x{i};
    const auto lvl = lattice.level(lattice.rank(x) + 1);
    if (!ops.Spend(lvl.size())) {
      report.complete = false;
      break;
    }
    for (Element y : lvl) {
      if (lattice.leq(x, y)) next_up[i].push_back(y);
    }
  }

  for (std::uint32_t i = 0; i < n && report.complete; ++i) {
    const Element x{i};
    if (!lattice.leq(lattice.bottom(), x) || !lattice.leq(x, lattice.top())) {
      if (laws.passed) AddWitness(lattice, laws, {x}, "element not between bottom and top");
    }
    for (std::uint32_t j = i; j < n; ++j) {
      if (!ops.Spend(1 + next_up[i].size())) {
        report.complete = false;
        break;
      }
      const Element y{j};
      const Element jn = lattice.join(x, y);
      const Element mt = lattice.meet(x, y);
      if (laws.passed) {
        std::string bad;
        if (jn != lattice.join(y, x)) bad = "join is not commutative";
        else if (mt != lattice.meet(y, x)) bad = "meet is not commutative";
        else if (lattice.join(x, mt) != x || lattice.join(y, mt) != y) bad = "absorption x v (x ^ y) = x fails";
        else if (lattice.meet(x, jn) != x || lattice.meet(y, jn) != y) bad = "absorption x ^ (x v y) = x fails";
        else if (!lattice.leq(x, jn) || !lattice.leq(y, jn)) bad = "join is not an upper bound";
        else if (!lattice.leq(mt, x) || !lattice.leq(mt, y)) bad = "meet is not a lower bound";
        else if (lattice.leq(x, y) != (jn == y) || lattice.leq(x, y) != (mt == x)) bad = "x <= y, x v y = y and x ^ y = x disagree";
        else if (lattice.leq(y, x) != (jn == x)) bad = "y <= x and x v y = x disagree";
        else if (i != j && lattice.leq(x, y) && lattice.leq(y, x)) bad = "order is not antisymmetric";
        else if (i == j && (jn != x || mt != x)) bad = "join/meet not idempotent";
        if (!bad.empty()) AddWitness(lattice, laws, {x, y}, bad);
      }
      if (semi.passed && lattice.rank(jn) + lattice.rank(mt) >
                             lattice.rank(x) + lattice.rank(y)) {
        AddWitness(lattice, semi, {x, y},
                   "rho(x v y) + rho(x ^ y) = " +
                       std::to_string(lattice.rank(jn) + lattice.rank(mt)) +
                       " > rho(x) + rho(y) = " +
                       std::to_string(lattice.rank(x) + lattice.rank(y)));
      }
      if (rank_fn.passed && i != j) {
        for (auto [a, b] : {std::pair{x, y}, std::pair{y, x}}) {
          if (!lattice.leq(a, b)) continue;
          if (lattice.rank(a) >= lattice.rank(b)) {
            AddWitness(lattice, rank_fn, {a, b}, "x < y but rho(x) >= rho(y)");
            break;
          }
          // Some element of rank rho(a)+1 must lie between a and b, otherwise
          // b covers a with a rank jump.
          const auto& up = next_up[a.index];
          const bool ok = std::any_of(up.begin(), up.end(),
                                      [&](Element z) { return lattice.leq(z, b); });
          if (!ok) {
            AddWitness(lattice, rank_fn, {a, b},
                       "no element of rank rho(x)+1 between x and y");
            break;
          }
        }
      }
    }
  }

  // Associativity needs triples; run it only when it fits in the budget.
  if (report.complete && laws.passed) {
    const std::uint64_t triples = static_cast<std::uint64_t>(n) * n * n;
    if (triples <= ops.remaining()) {
      ops.Spend(triples);
      for (std::uint32_t i = 0; i < n && laws.passed; ++i) {
        for (std::uint32_t j = 0; j < n && laws.passed; ++j) {
          const Element x{i}, y{j};
          const Element xy_j = lattice.join(x, y), xy_m = lattice.meet(x, y);
          for (std::uint32_t k = 0; k < n; ++k) {
            const Element z{k};
            if (lattice.join(xy_j, z) != lattice.join(x, lattice.join(y, z)) ||
                lattice.meet(xy_m, z) != lattice.meet(x, lattice.meet(y, z))) {
              AddWitness(lattice, laws, {x, y, z}, "join/meet not associative");
              break;
            }
          }
        }
      }
    }
  }

  // Power-lattice axioms, evaluated from the definitions.
  CheckResult unique_powers = NewCheck("unique_powers");
  CheckResult valuation_rank = NewCheck("valuation_rank");
  CheckResult native = NewCheck("native_valuation");
  if (report.complete && ops.Spend(static_cast<std::uint64_t>(n) *
                                   (lattice.atom_count() + 1))) {
    const auto powers = ScanPowers(lattice);
    for (std::size_t a = 0; a < powers.size() && unique_powers.passed; ++a) {
      for (std::size_t k = 1; k < powers[a].size(); ++k) {
        if (lattice.rank(powers[a][k]) == lattice.rank(powers[a][k - 1])) {
          const AtomId atom{static_cast<std::uint32_t>(a)};
          AddWitness(lattice, unique_powers,
                     {lattice.atom(atom), powers[a][k - 1], powers[a][k]},
                     "atom " + lattice.atom_label(atom) + " has two powers of rank " +
                         std::to_string(lattice.rank(powers[a][k])));
          break;
        }
      }
    }
    std::map<int, Element> by_rank;
    std::map<int, Element> by_total;
    std::vector<int> totals(n);
    for (std::uint32_t i = 0; i < n; ++i) {
      const Element x{i};
      const auto v = ValuationFromPowers(lattice, powers, x);
      totals[i] = std::accumulate(v.begin(), v.end(), 0);
      if (native.passed && lattice.valuation(x) != v) {
        AddWitness(lattice, native, {x},
                   "instance valuation differs from the definition");
      }
      if (!valuation_rank.passed) continue;
      auto [rit, rnew] = by_rank.emplace(lattice.rank(x), x);
      if (!rnew && totals[rit->second.index] != totals[i]) {
        AddWitness(lattice, valuation_rank, {rit->second, x},
                   "equal rank " + std::to_string(lattice.rank(x)) +
                       " but total valuations " +
                       std::to_string(totals[rit->second.index]) + " vs " +
                       std::to_string(totals[i]));
        continue;
      }
      auto [tit, tnew] = by_total.emplace(totals[i], x);
      if (!tnew && lattice.rank(tit->second) != lattice.rank(x)) {
        AddWitness(lattice, valuation_rank, {tit->second, x},
                   "equal total valuation " + std::to_string(totals[i]) +
                       " but ranks " + std::to_string(lattice.rank(tit->second)) +
                       " vs " + std::to_string(lattice.rank(x)));
      }
    }
  } else {
    report.complete = false;
  }

  report.checks = {laws, rank_fn, semi};
  if (report.complete) {
    report.checks.push_back(unique_powers);
    report.checks.push_back(valuation_rank);
    report.checks.push_back(native);
  }
  return report;
}

VerificationReport check_valuation_laws(const Lattice& lattice,
                                        const Budget& budget) {
  const std::uint32_t n = static_cast<std::uint32_t>(lattice.size());
  OpCounter ops(budget.max_pair_operations);
  VerificationReport report;
  CheckResult meet_min = NewCheck("meet_is_min");
  CheckResult join_max = NewCheck("join_dominates_max");
  CheckResult order = NewCheck("order_matches_valuations");
  CheckResult injective = NewCheck("factorization_injective");
  CheckResult rebuild = NewCheck("factorization_reconstructs");

  std::vector<Valuation> vals(n);
  for (std::uint32_t i = 0; i < n; ++i) vals[i] = lattice.valuation(Element{i});

  for (std::uint32_t i = 0; i < n && report.complete; ++i) {
    for (std::uint32_t j = 0; j < n; ++j) {
      if (!ops.Spend(1)) {
        report.complete = false;
        break;
      }
      const Element x{i}, y{j};
      const auto& vm = vals[lattice.meet(x, y).index];
      const auto& vj = vals[lattice.join(x, y).index];
      bool le = true;
      for (std::size_t a = 0; a < vm.size(); ++a) {
        const int lo = std::min(vals[i][a], vals[j][a]);
        const int hi = std::max(vals[i][a], vals[j][a]);
        if (meet_min.passed && vm[a] != lo) {
          AddWitness(lattice, meet_min, {x, y}, "v(x ^ y) differs from min at atom " +
                                                    lattice.atom_label(AtomId{static_cast<std::uint32_t>(a)}));
        }
        if (join_max.passed && vj[a] < hi) {
          AddWitness(lattice, join_max, {x, y}, "v(x v y) below max at atom " +
                                                    lattice.atom_label(AtomId{static_cast<std::uint32_t>(a)}));
        }
        if (vals[i][a] > vals[j][a]) le = false;
      }
      if (order.passed && le != lattice.leq(x, y)) {
        AddWitness(lattice, order, {x, y}, "x <= y disagrees with valuation-wise order");
      }
    }
  }

  std::map<Valuation, Element> seen;
  const auto ord = AtomOrder::identity(lattice);
  for (std::uint32_t i = 0; i < n; ++i) {
    const Element x{i};
    auto [it, fresh] = seen.emplace(vals[i], x);
    if (!fresh && injective.passed) {
      AddWitness(lattice, injective, {it->second, x}, "distinct elements share a factorization");
    }
    if (rebuild.passed) {
      std::optional<Element> back;
      try {
        back = reconstruct(lattice, factorization(lattice, x, ord));
      } catch (const PreconditionError&) {
      }
      if (back != x) AddWitness(lattice, rebuild, {x}, "join of atom powers does not give x");
    }
  }
  report.checks = {meet_min, join_max, order, injective, rebuild};
  return report;
}

std::optional<StrictJoin> strict_join_witness(const Lattice& lattice) {
  const auto n = static_cast<std::uint32_t>(lattice.size());
  for (std::uint32_t i = 0; i < n; ++i) {
    const auto vx = lattice.valuation(Element{i});
    for (std::uint32_t j = i + 1; j < n; ++j) {
      const auto vy = lattice.valuation(Element{j});
      const auto vj = lattice.valuation(lattice.join(Element{i}, Element{j}));
      for (std::uint32_t a = 0; a < vj.size(); ++a) {
        if (vj[a] > std::max(vx[a], vy[a])) return StrictJoin{Element{i}, Element{j}, AtomId{a}};
      }
    }
  }
  return std::nullopt;
}

}  // namespace powerlat
