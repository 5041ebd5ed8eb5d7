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

// Abstract power-lattice interface and the generic operations defined on top
// of it: valuations, factorizations, the rank-level total orders and the
// exhaustive axiom verifier.

#ifndef POWERLAT_LATTICE_HPP_
#define POWERLAT_LATTICE_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "powerlat/element.hpp"
#include "powerlat/report.hpp"

namespace powerlat {

// Finite graded lattice. Every element is materialized as a dense index, and
// ranks are known up front, so rank levels can always be enumerated.
//
// Instances are immutable after construction. All member functions are safe
// to call concurrently; lazily computed tables are guarded by once-flags.
class Lattice {
 public:
  Lattice(const Lattice&) = delete;
  Lattice& operator=(const Lattice&) = delete;
  virtual ~Lattice() = default;

  std::size_t size() const { return ranks_.size(); }
  bool contains(Element x) const { return x.index < ranks_.size(); }
  // Throws InputError if `x` is not a handle of this lattice.
  void check(Element x) const;

  Element bottom() const { return bottom_; }
  Element top() const { return top_; }
  int rank(Element x) const { return ranks_[x.index]; }
  int height() const { return rank(top_); }

  // Elements of rank `r` in increasing index order; empty when out of range.
  std::span<const Element> level(int r) const;

  std::size_t atom_count() const { return level(1).size(); }
  Element atom(AtomId a) const { return level(1)[a.index]; }
  std::optional<AtomId> atom_id(Element x) const;
  std::string atom_label(AtomId a) const { return label(atom(a)); }

  // Short identifier of the construction ("boolean", "multiset", ...).
  virtual std::string kind() const = 0;
  virtual Element join(Element x, Element y) const = 0;
  virtual Element meet(Element x, Element y) const = 0;
  virtual bool leq(Element x, Element y) const = 0;
  virtual std::string label(Element x) const = 0;
  // Element encodings used by the JSON file formats.
  virtual nlohmann::json encode(Element x) const = 0;
  // Inverse of encode(); throws InputError for encodings outside the lattice.
  virtual Element decode(const nlohmann::json& j) const = 0;
  // The lattice specification JSON this instance can be rebuilt from.
  virtual nlohmann::json spec() const = 0;

  // v_w(x) for every atom w. The default follows the definition literally:
  // the largest rank of a power of w below x.
  virtual Valuation valuation(Element x) const;
  virtual std::vector<Element> upper_covers(Element x) const;
  virtual std::vector<Element> lower_covers(Element x) const;
  // Powers of atom `a` (elements z with A(z) = {a}) sorted by rank.
  virtual std::vector<Element> powers(AtomId a) const;

  int total_valuation(Element x) const;

 protected:
  Lattice() = default;
  // Called once by each derived constructor after enumerating its elements.
  // Requires a unique element of rank 0 and a unique element of maximal rank.
  void set_ranks(std::vector<int> ranks);

 private:
  std::vector<int> ranks_;
  std::vector<std::vector<Element>> levels_;
  Element bottom_;
  Element top_;

  mutable std::once_flag powers_once_;
  mutable std::vector<std::vector<Element>> powers_;
  mutable std::once_flag valuations_once_;
  mutable std::vector<Valuation> valuations_;
};

// Valuation vector computed from the definition only, ignoring any native
// override of Lattice::valuation. Used by the verifier as the reference.
Valuation definitional_valuation(const Lattice& lattice, Element x);

// Total order <=_1 on the atoms, stored as the sequence of atoms from
// smallest to largest.
class AtomOrder {
 public:
  // Throws InputError unless `sequence` is a permutation of 0..atom_count-1.
  AtomOrder(std::vector<AtomId> sequence, std::size_t atom_count);

  // The enumeration order of the lattice's atoms.
  static AtomOrder identity(std::size_t atom_count);
  static AtomOrder identity(const Lattice& lattice);
  // Builds an order from atom labels, smallest first.
  static AtomOrder from_labels(const Lattice& lattice,
                               const std::vector<std::string>& labels);

  std::size_t position(AtomId a) const { return position_[a.index]; }
  std::span<const AtomId> sequence() const { return sequence_; }
  std::size_t size() const { return sequence_.size(); }

 private:
  std::vector<AtomId> sequence_;
  std::vector<std::size_t> position_;
};

// F(x): each atom repeated v_w(x) times, sorted by the atom order.
using Factorization = std::vector<AtomId>;

Valuation valuation(const Lattice& lattice, Element x);
Factorization factorization(const Lattice& lattice, Element x,
                            const AtomOrder& order);
// Join of the atom powers a^{v_a} named by a factorization.
Element reconstruct(const Lattice& lattice, const Factorization& f);
bool leq_valuationwise(const Lattice& lattice, Element x, Element y);

// x <=_l y for two elements of the same rank l: lexicographic comparison of
// their factorizations. Throws PreconditionError if the ranks differ.
std::strong_ordering rank_lex_compare(const Lattice& lattice, Element x,
                                      Element y, const AtomOrder& order);
// The same order computed as min F(x)\F(y) versus min F(y)\F(x) (multiset
// differences). Agrees with rank_lex_compare on power lattices.
std::strong_ordering min_difference_compare(const Lattice& lattice, Element x,
                                            Element y, const AtomOrder& order);

// The power of atom `a` of rank `r`, if any. r = 0 gives the bottom. When an
// instance violates uniqueness of powers, the lowest-index one is returned.
std::optional<Element> atom_power(const Lattice& lattice, AtomId a, int r);
std::vector<Element> covers(const Lattice& lattice, Element x);

// Precomputed positions of every element within its rank level under
// <=_l, so the level orders can be compared in O(1).
class RankLexIndex {
 public:
  RankLexIndex(const Lattice& lattice, const AtomOrder& order);

  std::uint32_t position(Element x) const { return position_[x.index]; }
  // Only meaningful for elements of equal rank.
  std::strong_ordering compare(Element x, Element y) const {
    return position(x) <=> position(y);
  }

 private:
  std::vector<std::uint32_t> position_;
};

struct Budget {
  // Cap on pair (or pair-like) operations for all-pairs verifiers.
  std::uint64_t max_pair_operations = 5'000'000;
};

// Exhaustive check of the lattice laws, the rank axioms, semimodularity and
// the two power-lattice axioms. Check names: "lattice_laws", "rank_function",
// "semimodular", "unique_powers", "valuation_rank", "native_valuation".
VerificationReport verify_power_lattice(const Lattice& lattice,
                                        const Budget& budget = {});

// Valuation identities that hold in every power lattice: meet is the
// pointwise min, join dominates the pointwise max, order agrees with the
// valuation-wise order, factorizations are injective and reconstruct their
// element.
VerificationReport check_valuation_laws(const Lattice& lattice,
                                        const Budget& budget = {});

struct StrictJoin {
  Element x;
  Element y;
  AtomId atom;  // v_atom(x v y) > max(v_atom(x), v_atom(y))
};
// First pair, in index order, whose join valuation exceeds the pointwise max.
std::optional<StrictJoin> strict_join_witness(const Lattice& lattice);

}  // namespace powerlat

#endif  // POWERLAT_LATTICE_HPP_
