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

// Concrete power-lattice constructions and the lattice specification JSON.

#ifndef POWERLAT_INSTANCES_HPP_
#define POWERLAT_INSTANCES_HPP_

#include <cstdint>
#include <filesystem>
#include <memory>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "powerlat/lattice.hpp"

namespace powerlat {

using LatticePtr = std::shared_ptr<const Lattice>;

// Upper bound on the number of elements any constructor will enumerate.
inline constexpr std::size_t kMaxLatticeSize = std::size_t{1} << 22;

// Subsets of an n-element ground set. Element index = bitmask.
class BooleanLattice final : public Lattice {
 public:
  BooleanLattice(int n, std::vector<std::string> labels);

  int n() const { return n_; }
  std::uint32_t mask(Element x) const { return x.index; }
  Element from_mask(std::uint32_t mask) const;
  const std::vector<std::string>& ground_labels() const { return labels_; }

  std::string kind() const override { return "boolean"; }
  Element join(Element x, Element y) const override;
  Element meet(Element x, Element y) const override;
  bool leq(Element x, Element y) const override;
  std::string label(Element x) const override;
  nlohmann::json encode(Element x) const override;
  Element decode(const nlohmann::json& j) const override;
  nlohmann::json spec() const override;
  Valuation valuation(Element x) const override;
  std::vector<Element> upper_covers(Element x) const override;
  std::vector<Element> lower_covers(Element x) const override;
  std::vector<Element> powers(AtomId a) const override;

 private:
  int n_;
  std::vector<std::string> labels_;
};

// Sub-multisets of x_1^{n_1} ... x_l^{n_l}, i.e. monomials dividing it.
// Element index is the mixed-radix number of the exponent vector with x_1
// least significant.
class MultisetLattice : public Lattice {
 public:
  MultisetLattice(std::vector<int> exponents, std::vector<std::string> labels);

  const std::vector<int>& exponents() const { return box_; }
  const std::vector<std::string>& variable_labels() const { return labels_; }
  std::vector<int> exponents_of(Element x) const;
  // Throws InputError if `e` does not fit in the box.
  Element from_exponents(const std::vector<int>& e) const;
  std::size_t variables() const { return box_.size(); }

  std::string kind() const override { return "multiset"; }
  Element join(Element x, Element y) const override;
  Element meet(Element x, Element y) const override;
  bool leq(Element x, Element y) const override;
  std::string label(Element x) const override;
  nlohmann::json encode(Element x) const override;
  Element decode(const nlohmann::json& j) const override;
  nlohmann::json spec() const override;
  Valuation valuation(Element x) const override;
  std::vector<Element> upper_covers(Element x) const override;
  std::vector<Element> lower_covers(Element x) const override;
  std::vector<Element> powers(AtomId a) const override;

 private:
  int exponent(Element x, std::size_t i) const {
    return static_cast<int>(x.index / stride_[i] % (box_[i] + 1));
  }

  std::vector<int> box_;
  std::vector<std::string> labels_;
  std::vector<std::uint32_t> stride_;
};

// Divisors of n, ordered by divisibility. Atoms are the prime divisors.
class DivisorLattice final : public MultisetLattice {
 public:
  DivisorLattice(std::uint64_t n, std::vector<std::uint64_t> primes,
                 std::vector<int> exponents);

  std::uint64_t n() const { return n_; }
  std::uint64_t value(Element x) const;

  std::string kind() const override { return "divisor"; }
  std::string label(Element x) const override;
  // Divisors are encoded as integers; exponent vectors are also accepted.
  nlohmann::json encode(Element x) const override;
  Element decode(const nlohmann::json& j) const override;
  nlohmann::json spec() const override;

 private:
  std::uint64_t n_;
  std::vector<std::uint64_t> primes_;
};

// Subspaces of F_q^n. Each subspace is keyed by the reduced row echelon form
// of a basis; elements are ordered by dimension, then by key.
class SubspaceLattice final : public Lattice {
 public:
  using Matrix = std::vector<std::vector<int>>;

  SubspaceLattice(int q, int n);

  int q() const { return q_; }
  int n() const { return n_; }
  const Matrix& basis(Element x) const { return bases_[x.index]; }
  // Row space of an arbitrary matrix over F_q.
  Element span(const Matrix& rows) const;
  Element orthogonal(Element x) const { return perp_[x.index]; }

  std::string kind() const override { return "subspace"; }
  Element join(Element x, Element y) const override;
  Element meet(Element x, Element y) const override;
  bool leq(Element x, Element y) const override;
  std::string label(Element x) const override;
  nlohmann::json encode(Element x) const override;
  Element decode(const nlohmann::json& j) const override;
  nlohmann::json spec() const override;

 private:
  std::uint64_t key(const Matrix& rref) const;
  Matrix rref(Matrix rows) const;
  Matrix null_space(const Matrix& rref) const;

  int q_;
  int n_;
  std::vector<Matrix> bases_;
  std::vector<Element> perp_;
  std::unordered_map<std::uint64_t, Element> by_key_;
};

// Cartesian product with componentwise order. Element index is mixed radix
// over the factor indices, factor 0 least significant.
class ProductLattice final : public Lattice {
 public:
  explicit ProductLattice(std::vector<LatticePtr> factors);

  const std::vector<LatticePtr>& factors() const { return factors_; }
  Element component(Element x, std::size_t i) const {
    return Element{x.index / stride_[i] %
                   static_cast<std::uint32_t>(factors_[i]->size())};
  }
  Element compose(const std::vector<Element>& parts) const;

  std::string kind() const override { return "product"; }
  Element join(Element x, Element y) const override;
  Element meet(Element x, Element y) const override;
  bool leq(Element x, Element y) const override;
  std::string label(Element x) const override;
  nlohmann::json encode(Element x) const override;
  Element decode(const nlohmann::json& j) const override;
  nlohmann::json spec() const override;
  Valuation valuation(Element x) const override;
  std::vector<Element> upper_covers(Element x) const override;
  std::vector<Element> lower_covers(Element x) const override;

 private:
  std::vector<LatticePtr> factors_;
  std::vector<std::uint32_t> stride_;
  // For each product atom, the factor it lives in and its atom id there.
  std::vector<std::pair<std::size_t, AtomId>> atom_origin_;
};

// Arbitrary finite lattice given by named elements and order relations.
// Elements are reindexed by (rank, input position).
class HasseLattice final : public Lattice {
 public:
  // `relations` are [lower, upper] pairs; non-cover relations are accepted
  // and reduced. Throws InputError on cycles, unknown names, pairs without a
  // unique join or meet, and non-graded input.
  HasseLattice(const std::vector<std::string>& names,
               const std::vector<std::pair<std::string, std::string>>& relations);

  Element find(const std::string& name) const;
  // Cover relations as [lower, upper] pairs in element order.
  std::vector<std::pair<Element, Element>> cover_pairs() const;

  std::string kind() const override { return "hasse"; }
  Element join(Element x, Element y) const override;
  Element meet(Element x, Element y) const override;
  bool leq(Element x, Element y) const override;
  std::string label(Element x) const override { return names_[x.index]; }
  nlohmann::json encode(Element x) const override { return names_[x.index]; }
  Element decode(const nlohmann::json& j) const override;
  nlohmann::json spec() const override;
  std::vector<Element> upper_covers(Element x) const override;
  std::vector<Element> lower_covers(Element x) const override;

 private:
  std::size_t n_ = 0;
  std::vector<std::string> names_;
  std::unordered_map<std::string, Element> by_name_;
  std::vector<std::uint8_t> leq_;
  std::vector<std::uint32_t> join_;
  std::vector<std::uint32_t> meet_;
  std::vector<std::vector<Element>> up_;
  std::vector<std::vector<Element>> down_;
};

// Labels default to a, b, c, ...
std::shared_ptr<const BooleanLattice> build_boolean(
    int n, std::vector<std::string> labels = {});
// Labels default to x1, x2, ...
std::shared_ptr<const MultisetLattice> build_multiset(
    std::vector<int> exponents, std::vector<std::string> labels = {});
std::shared_ptr<const SubspaceLattice> build_subspace(int q, int n);
std::shared_ptr<const ProductLattice> build_product(
    std::vector<LatticePtr> factors);
std::shared_ptr<const HasseLattice> build_hasse(
    const std::vector<std::string>& names,
    const std::vector<std::pair<std::string, std::string>>& relations);
std::shared_ptr<const DivisorLattice> build_divisor(std::uint64_t n);

// Prime factorization by trial division, primes ascending.
std::vector<std::pair<std::uint64_t, int>> factorize(std::uint64_t n);

// Builds a lattice from its specification JSON. A string value is read as a
// path to a JSON file, resolved against `base_dir`.
LatticePtr lattice_from_json(const nlohmann::json& spec,
                             const std::filesystem::path& base_dir = {});

}  // namespace powerlat

#endif  // POWERLAT_INSTANCES_HPP_
