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

// Monomial ideals of multicomplexes, polarization and the shelling of the
// polarized complex.

#ifndef POWERLAT_STANLEY_REISNER_HPP_
#define POWERLAT_STANLEY_REISNER_HPP_

#include <cstddef>
#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "powerlat/instances.hpp"
#include "powerlat/pcomplex.hpp"
#include "powerlat/simplicial.hpp"

namespace powerlat {

// Exponent vector of a monomial in x_1, ..., x_l.
using Monomial = std::vector<int>;

// "x_1^2*x_2", or "1" for the unit monomial.
std::string format_monomial(const Monomial& m);
bool divides(const Monomial& a, const Monomial& b);

// Monomial ideal held by its minimal generators, sorted by increasing degree
// and then descending lex (x_1 > x_2 > ...). An empty generator list is the
// zero ideal.
class MonomialIdeal {
 public:
  explicit MonomialIdeal(std::size_t variables) : vars_(variables) {}
  // Minimalizes `generators`. Throws InputError on length mismatches.
  MonomialIdeal(std::size_t variables, std::vector<Monomial> generators);

  std::size_t variables() const { return vars_; }
  const std::vector<Monomial>& generators() const { return gens_; }
  bool contains(const Monomial& m) const;
  // Equality of ideals, decided by mutual generator membership.
  bool same_ideal(const MonomialIdeal& other) const;

 private:
  std::size_t vars_;
  std::vector<Monomial> gens_;
};

// The multicomplex generated by `facets` in the box x_1^{n_1}...x_l^{n_l}.
// The top of the box must not be a face.
class Multicomplex {
 public:
  // Throws InputError if a facet leaves the box or equals the top.
  Multicomplex(std::vector<int> box, const std::vector<Monomial>& facets);
  // Throws InputError unless the host is a multiset (or divisor) lattice.
  explicit Multicomplex(const PComplex& complex);

  const std::vector<int>& box() const { return lattice_->exponents(); }
  std::size_t variables() const { return box().size(); }
  const MultisetLattice& lattice() const { return *lattice_; }
  const PComplex& complex() const { return complex_; }
  // Facets as exponent vectors, in increasing element order.
  std::vector<Monomial> facets() const;
  bool contains(const Monomial& m) const;

 private:
  void RequireTopExcluded() const;

  std::shared_ptr<const MultisetLattice> lattice_;
  PComplex complex_;
};

// Minimal box monomials outside the complex. Throws BudgetExceeded for
// boxes with more than 10^6 monomials.
MonomialIdeal minimal_nonfaces(const Multicomplex& delta);

// P_sigma = (x_1^{b_1}, ..., x_l^{b_l}) with b_i = v_{x_i}(sigma) + 1.
struct IrreducibleIdeal {
  Monomial exponents;

  MonomialIdeal ideal() const;
};
IrreducibleIdeal irreducible_ideal(const Monomial& sigma);

// Minimalized pairwise lcms. Throws BudgetExceeded above 1000 generators
// per input.
MonomialIdeal intersect_monomial_ideals(const MonomialIdeal& a, const MonomialIdeal& b);

// Closure of the facets under gcd, sorted descending lex. Throws
// BudgetExceeded above 20 facets.
std::vector<Monomial> meets_of_facets(const Multicomplex& delta);

struct SectionRingReport {
  MonomialIdeal nonface_ideal;     // I_Delta
  MonomialIdeal facet_ideal;       // intersection of P_sigma over facets
  MonomialIdeal meet_ideal;        // intersection of P_sigma over X(Delta)
  bool facet_equals_meet = true;
  bool equal = true;               // I_Delta equals the facet intersection
  std::optional<Monomial> witness; // generator of facet_ideal outside I_Delta
};
SectionRingReport section_ring_check(const Multicomplex& delta);

// Polar variable x_{i,j}, both indices 1-based.
using PolarVariable = std::pair<int, int>;
// Sorted squarefree monomial in polar variables.
using PolarMonomial = std::vector<PolarVariable>;

PolarMonomial polarize_monomial(const Monomial& m);
// Counts the polar variables of each block. Throws InputError if a block
// index exceeds `variables`.
Monomial depolarize(const PolarMonomial& p, std::size_t variables);
// "x_{1,1}x_{1,2}x_{2,1}", or "1".
std::string format_polar(const PolarMonomial& p);

struct PolarizedIdeal {
  std::vector<PolarMonomial> generators;
  // No generator divides another.
  bool minimal = true;
};
PolarizedIdeal polarize_ideal(const MonomialIdeal& ideal);

// Delta_1 on the polar variables x_{i,j}, 1 <= j <= n_i, listed block by
// block. `complex` comes from dropping x_{i,b_i+1} for every b below a
// facet; `complement` is the complex of squarefree monomials outside
// pol(I_Delta).
struct PolarizedComplex {
  std::vector<int> box;
  SimplicialComplex complex;
  SimplicialComplex complement;
  bool agrees = true;
};
// Throws BudgetExceeded when the box has more than 22 polar variables.
PolarizedComplex polarized_complex(const Multicomplex& delta);

// The vector b of a face of the form "all polar variables except
// x_{i,b_i+1}"; b_i = n_i when block i is complete.
Monomial polar_face_vector(const Simplex& face, const std::vector<int>& box);

// Non-pure shelling condition (k < j) for facets in the given order
// (indices into complex.facets(); empty means as stored).
ShellingVerdict verify_nonpure_shelling(const SimplicialComplex& complex,
                                        const std::vector<std::size_t>& order = {});

struct PolarizedShelling {
  PolarizedComplex polarized;
  // Facets of Delta_1 in shelling order, with their b vectors.
  std::vector<Simplex> order;
  std::vector<Monomial> face_vectors;
  ShellingVerdict verdict;
};
// Orders the facets of Delta_1 from a shelling of Delta. Throws
// PreconditionError unless `delta_order` is a verified shelling of Delta.
PolarizedShelling polarized_shelling(const Multicomplex& delta,
                                     const std::vector<Monomial>& delta_order);

// Formats: "m2", "singular", "json". Throws InputError otherwise.
std::string export_ideal(const MonomialIdeal& ideal, const std::string& format);

// {"box": [...], "facets": [[...], ...]} or a complex file over a multiset
// or divisor lattice.
Multicomplex multicomplex_from_json(const nlohmann::json& j,
                                    const std::filesystem::path& base_dir = {});
nlohmann::json multicomplex_to_json(const Multicomplex& delta);

}  // namespace powerlat

#endif  // POWERLAT_STANLEY_REISNER_HPP_
