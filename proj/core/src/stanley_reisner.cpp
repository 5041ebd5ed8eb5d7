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

#include "powerlat/stanley_reisner.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>

#include "powerlat/errors.hpp"

namespace powerlat {
namespace {

constexpr std::size_t kMaxBoxVolume = 1'000'000;
constexpr std::size_t kMaxGenerators = 1000;
constexpr std::size_t kMaxMeetFacets = 20;
constexpr int kMaxPolarVariables = 22;

int Degree(const Monomial& m) { return std::accumulate(m.begin(), m.end(), 0); }

// Increasing degree, then decreasing exponent vectors (x_1 heaviest).
bool GeneratorLess(const Monomial& a, const Monomial& b) {
  const int da = Degree(a);
  const int db = Degree(b);
  return da != db ? da < db : a > b;
}

Monomial Lcm(const Monomial& a, const Monomial& b) {
  Monomial m(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) m[i] = std::max(a[i], b[i]);
  return m;
}

Monomial Gcd(const Monomial& a, const Monomial& b) {
  Monomial m(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) m[i] = std::min(a[i], b[i]);
  return m;
}

std::shared_ptr<const MultisetLattice> RequireMultisetHost(const PComplex& complex) {
  auto host = std::dynamic_pointer_cast<const MultisetLattice>(complex.host_ptr());
  if (!host) {
    throw InputError("a multicomplex needs a multiset or divisor host, got " + complex.host().kind());
  }
  return host;
}

std::vector<Element> ToElements(const MultisetLattice& lattice, const std::vector<Monomial>& ms) {
  std::vector<Element> out;
  for (const auto& m : ms) out.push_back(lattice.from_exponents(m));
  return out;
}

// Polar variables of a box, block by block.
std::vector<PolarVariable> PolarVariables(const std::vector<int>& box) {
  std::vector<PolarVariable> vars;
  for (std::size_t i = 0; i < box.size(); ++i) {
    for (int j = 1; j <= box[i]; ++j) vars.emplace_back(static_cast<int>(i) + 1, j);
  }
  return vars;
}

std::vector<int> BlockOffsets(const std::vector<int>& box) {
  std::vector<int> offset(box.size() + 1, 0);
  for (std::size_t i = 0; i < box.size(); ++i) offset[i + 1] = offset[i] + box[i];
  return offset;
}

// The face "every polar variable except x_{i,b_i+1}".
Simplex DropOnePerBlock(const Monomial& b, const std::vector<int>& box,
                        const std::vector<int>& offset) {
  Simplex s;
  for (std::size_t i = 0; i < box.size(); ++i) {
    for (int j = 1; j <= box[i]; ++j) {
      if (j != b[i] + 1) s.push_back(offset[i] + j - 1);
    }
  }
  return s;
}

// Every b with 0 <= b <= a.
template <typename F>
void ForEachBelow(const Monomial& a, F f) {
  Monomial b(a.size(), 0);
  while (true) {
    f(b);
    std::size_t i = 0;
    while (i < b.size() && b[i] == a[i]) b[i++] = 0;
    if (i == b.size()) return;
    ++b[i];
  }
}

std::vector<Simplex> MaximalSets(std::set<Simplex> sets) {
  std::vector<Simplex> out;
  for (const auto& s : sets) {
    const bool maximal = std::none_of(sets.begin(), sets.end(), [&](const Simplex& t) {
      return t.size() > s.size() && std::includes(t.begin(), t.end(), s.begin(), s.end());
    });
    if (maximal) out.push_back(s);
  }
  return out;
}

}  // namespace

std::string format_monomial(const Monomial& m) {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += "x_" + std::to_string(i + 1);
    if (m[i] > 1) out += "^" + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

bool divides(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

MonomialIdeal::MonomialIdeal(std::size_t variables, std::vector<Monomial> generators)
    : vars_(variables) {
  for (const auto& g : generators) {
    if (g.size() != vars_) {
      throw InputError("monomial " + format_monomial(g) + " has " + std::to_string(g.size()) +
                       " exponents, expected " + std::to_string(vars_));
    }
  }
  std::sort(generators.begin(), generators.end());
  generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
  for (const auto& g : generators) {
    const bool redundant = std::any_of(generators.begin(), generators.end(), [&](const Monomial& h) {
      return h != g && divides(h, g);
    });
    if (!redundant) gens_.push_back(g);
  }
  std::sort(gens_.begin(), gens_.end(), GeneratorLess);
}

bool MonomialIdeal::contains(const Monomial& m) const {
  return std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& g) { return divides(g, m); });
}

bool MonomialIdeal::same_ideal(const MonomialIdeal& other) const {
  if (vars_ != other.vars_) return false;
  auto within = [](const MonomialIdeal& a, const MonomialIdeal& b) {
    return std::all_of(a.gens_.begin(), a.gens_.end(), [&](const Monomial& g) { return b.contains(g); });
  };
  return within(*this, other) && within(other, *this);
}

Multicomplex::Multicomplex(std::vector<int> box, const std::vector<Monomial>& facets)
    : lattice_(build_multiset(std::move(box))),
      complex_(PComplex::generate(lattice_, ToElements(*lattice_, facets))) {
  RequireTopExcluded();
}

Multicomplex::Multicomplex(const PComplex& complex)
    : lattice_(RequireMultisetHost(complex)), complex_(complex) {
  RequireTopExcluded();
}

void Multicomplex::RequireTopExcluded() const {
  if (complex_.contains(lattice_->top())) {
    throw InputError("the top of the box " + format_monomial(box()) + " must not be a face");
  }
}

std::vector<Monomial> Multicomplex::facets() const {
  std::vector<Monomial> out;
  for (Element f : complex_.facets()) out.push_back(lattice_->exponents_of(f));
  return out;
}

bool Multicomplex::contains(const Monomial& m) const {
  return complex_.contains(lattice_->from_exponents(m));
}

MonomialIdeal minimal_nonfaces(const Multicomplex& delta) {
  const auto& lattice = delta.lattice();
  if (lattice.size() > kMaxBoxVolume) {
    throw BudgetExceeded("box has more than " + std::to_string(kMaxBoxVolume) + " monomials");
  }
  const auto& complex = delta.complex();
  std::vector<std::uint8_t> face(lattice.size());
  for (std::uint32_t i = 0; i < lattice.size(); ++i) face[i] = complex.contains(Element{i});
  std::vector<Monomial> gens;
  for (std::uint32_t i = 0; i < lattice.size(); ++i) {
    if (face[i]) continue;
    const auto down = lattice.lower_covers(Element{i});
    if (std::all_of(down.begin(), down.end(), [&](Element d) { return face[d.index] != 0; })) {
      gens.push_back(lattice.exponents_of(Element{i}));
    }
  }
  return MonomialIdeal(delta.variables(), std::move(gens));
}

MonomialIdeal IrreducibleIdeal::ideal() const {
  std::vector<Monomial> gens;
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    Monomial g(exponents.size(), 0);
    g[i] = exponents[i];
    gens.push_back(std::move(g));
  }
  return MonomialIdeal(exponents.size(), std::move(gens));
}

IrreducibleIdeal irreducible_ideal(const Monomial& sigma) {
  IrreducibleIdeal p{sigma};
  for (int& e : p.exponents) {
    if (e < 0) throw InputError("negative exponent in " + format_monomial(sigma));
    ++e;
  }
  return p;
}

MonomialIdeal intersect_monomial_ideals(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (a.variables() != b.variables()) throw InputError("ideals live in different rings");
  if (a.generators().size() > kMaxGenerators || b.generators().size() > kMaxGenerators) {
    throw BudgetExceeded("ideal intersection is limited to " + std::to_string(kMaxGenerators) +
                         " generators per ideal");
  }
  std::vector<Monomial> lcms;
  for (const auto& g : a.generators()) {
    for (const auto& h : b.generators()) lcms.push_back(Lcm(g, h));
  }
  return MonomialIdeal(a.variables(), std::move(lcms));
}

std::vector<Monomial> meets_of_facets(const Multicomplex& delta) {
  const auto facets = delta.facets();
  if (facets.size() > kMaxMeetFacets) {
    throw BudgetExceeded("meet closure is limited to " + std::to_string(kMaxMeetFacets) + " facets");
  }
  std::set<Monomial> closure(facets.begin(), facets.end());
  std::vector<Monomial> frontier(facets.begin(), facets.end());
  while (!frontier.empty()) {
    std::vector<Monomial> next;
    for (const auto& m : frontier) {
      for (const auto& f : facets) {
        auto g = Gcd(m, f);
        if (closure.insert(g).second) next.push_back(std::move(g));
      }
    }
    frontier = std::move(next);
  }
  return {closure.rbegin(), closure.rend()};
}

namespace {

MonomialIdeal IntersectAll(std::size_t vars, const std::vector<Monomial>& faces) {
  // The unit ideal is the identity for intersection.
  MonomialIdeal acc(vars, {Monomial(vars, 0)});
  for (const auto& s : faces) acc = intersect_monomial_ideals(acc, irreducible_ideal(s).ideal());
  return acc;
}

}  // namespace

SectionRingReport section_ring_check(const Multicomplex& delta) {
  const auto vars = delta.variables();
  SectionRingReport r{minimal_nonfaces(delta), IntersectAll(vars, delta.facets()),
                      IntersectAll(vars, meets_of_facets(delta)), true, true, std::nullopt};
  r.facet_equals_meet = r.facet_ideal.same_ideal(r.meet_ideal);
  r.equal = r.nonface_ideal.same_ideal(r.facet_ideal);
  if (!r.equal) {
    for (const auto& g : r.facet_ideal.generators()) {
      if (!r.nonface_ideal.contains(g)) {
        r.witness = g;
        break;
      }
    }
  }
  return r;
}

PolarMonomial polarize_monomial(const Monomial& m) {
  PolarMonomial p;
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (int j = 1; j <= m[i]; ++j) p.emplace_back(static_cast<int>(i) + 1, j);
  }
  return p;
}

Monomial depolarize(const PolarMonomial& p, std::size_t variables) {
  Monomial m(variables, 0);
  for (const auto& [i, j] : p) {
    if (i < 1 || static_cast<std::size_t>(i) > variables || j < 1) {
      throw InputError("polar variable x_{" + std::to_string(i) + "," + std::to_string(j) +
                       "} is outside " + std::to_string(variables) + " variables");
    }
    ++m[i - 1];
  }
  return m;
}

std::string format_polar(const PolarMonomial& p) {
  if (p.empty()) return "1";
  std::string out;
  for (const auto& [i, j] : p) out += "x_{" + std::to_string(i) + "," + std::to_string(j) + "}";
  return out;
}

PolarizedIdeal polarize_ideal(const MonomialIdeal& ideal) {
  PolarizedIdeal out;
  for (const auto& g : ideal.generators()) out.generators.push_back(polarize_monomial(g));
  for (const auto& g : out.generators) {
    for (const auto& h : out.generators) {
      if (&g != &h && std::includes(h.begin(), h.end(), g.begin(), g.end())) out.minimal = false;
    }
  }
  return out;
}

Monomial polar_face_vector(const Simplex& face, const std::vector<int>& box) {
  const auto offset = BlockOffsets(box);
  Monomial b(box.size(), 0);
  for (std::size_t i = 0; i < box.size(); ++i) {
    // b_i = number of leading polar variables of block i present.
    int k = 0;
    while (k < box[i] && std::binary_search(face.begin(), face.end(), offset[i] + k)) ++k;
    b[i] = k;
  }
  return b;
}

PolarizedComplex polarized_complex(const Multicomplex& delta) {
  const auto& box = delta.box();
  const auto offset = BlockOffsets(box);
  const int nvars = offset.back();
  if (nvars > kMaxPolarVariables) {
    throw BudgetExceeded("polarization is limited to " + std::to_string(kMaxPolarVariables) +
                         " polar variables");
  }
  std::vector<std::string> labels;
  for (const auto& v : PolarVariables(box)) labels.push_back(format_polar({v}));

  std::set<Simplex> family;
  for (const auto& facet : delta.facets()) {
    ForEachBelow(facet, [&](const Monomial& b) { family.insert(DropOnePerBlock(b, box, offset)); });
  }

  // Squarefree monomials avoiding pol(I_Delta), as bitmasks.
  const MonomialIdeal nonfaces = minimal_nonfaces(delta);
  std::vector<std::uint32_t> gen_masks;
  for (const auto& g : nonfaces.generators()) {
    std::uint32_t mask = 0;
    for (std::size_t i = 0; i < g.size(); ++i) {
      for (int j = 0; j < g[i]; ++j) mask |= 1u << (offset[i] + j);
    }
    gen_masks.push_back(mask);
  }
  const std::uint32_t full = nvars == 32 ? ~0u : (1u << nvars);
  std::vector<std::uint8_t> face(full, 0);
  for (std::uint32_t s = 0; s < full; ++s) {
    face[s] = std::none_of(gen_masks.begin(), gen_masks.end(),
                           [&](std::uint32_t g) { return (g & ~s) == 0; });
  }
  std::vector<Simplex> complement_facets;
  for (std::uint32_t s = 0; s < full; ++s) {
    if (!face[s]) continue;
    bool maximal = true;
    for (int v = 0; v < nvars && maximal; ++v) {
      if (!(s >> v & 1) && face[s | (1u << v)]) maximal = false;
    }
    if (!maximal) continue;
    Simplex f;
    for (int v = 0; v < nvars; ++v) {
      if (s >> v & 1) f.push_back(v);
    }
    complement_facets.push_back(std::move(f));
  }
  std::sort(complement_facets.begin(), complement_facets.end());

  PolarizedComplex out{box, SimplicialComplex(labels, MaximalSets(std::move(family))),
                       SimplicialComplex(labels, complement_facets), true};
  auto a = out.complex.facets();
  auto b = out.complement.facets();
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  out.agrees = a == b;
  return out;
}

ShellingVerdict verify_nonpure_shelling(const SimplicialComplex& complex,
                                        const std::vector<std::size_t>& order) {
  if (order.empty()) return check_simplicial_shelling(complex.facets());
  std::vector<Simplex> ordered;
  std::vector<std::uint8_t> seen(complex.facets().size(), 0);
  for (std::size_t k : order) {
    if (k >= seen.size() || seen[k]) throw InputError("facet order is not a permutation of the facets");
    seen[k] = 1;
    ordered.push_back(complex.facets()[k]);
  }
  if (ordered.size() != seen.size()) throw InputError("facet order is not a permutation of the facets");
  return check_simplicial_shelling(ordered);
}

PolarizedShelling polarized_shelling(const Multicomplex& delta,
                                     const std::vector<Monomial>& delta_order) {
  const auto& lattice = delta.lattice();
  const auto elements = ToElements(lattice, delta_order);
  ShellingVerdict base;
  try {
    base = verify_shelling(delta.complex(), elements);
  } catch (const InputError& e) {
    throw PreconditionError(std::string("not a facet order of the multicomplex: ") + e.what());
  }
  if (!base.shellable) {
    throw PreconditionError("the given facet order does not shell the multicomplex: " + base.detail);
  }

  PolarizedShelling out{polarized_complex(delta), {}, {}, {}};
  const auto& box = delta.box();
  struct Keyed {
    std::size_t facet_rank;  // position of U in the order of Delta
    Monomial b;
    Simplex face;
  };
  std::vector<Keyed> keyed;
  for (const auto& f : out.polarized.complex.facets()) {
    Keyed k{delta_order.size(), polar_face_vector(f, box), f};
    // U = the earliest facet of Delta containing U_1.
    for (std::size_t p = 0; p < delta_order.size(); ++p) {
      if (divides(k.b, delta_order[p])) {
        k.facet_rank = p;
        break;
      }
    }
    if (k.facet_rank == delta_order.size()) {
      throw PreconditionError("polar facet " + format_monomial(k.b) + " lies under no facet");
    }
    keyed.push_back(std::move(k));
  }
  // Same U: at the first differing coordinate the larger b_e comes first.
  std::sort(keyed.begin(), keyed.end(), [](const Keyed& x, const Keyed& y) {
    if (x.facet_rank != y.facet_rank) return x.facet_rank < y.facet_rank;
    return x.b > y.b;
  });
  for (auto& k : keyed) {
    out.order.push_back(k.face);
    out.face_vectors.push_back(k.b);
  }
  out.verdict = check_simplicial_shelling(out.order);
  return out;
}

std::string export_ideal(const MonomialIdeal& ideal, const std::string& format) {
  const auto n = ideal.variables();
  const auto& gens = ideal.generators();
  if (format == "m2") {
    std::string vars;
    for (std::size_t i = 0; i < n; ++i) vars += (i ? ",x_" : "x_") + std::to_string(i + 1);
    std::string body;
    for (std::size_t k = 0; k < gens.size(); ++k) body += (k ? ", " : "") + format_monomial(gens[k]);
    if (gens.empty()) body = "0_R";
    return "R = QQ[" + vars + "]\nI = monomialIdeal(" + body + ")";
  }
  if (format == "singular") {
    std::string body;
    for (std::size_t k = 0; k < gens.size(); ++k) {
      std::string term;
      for (std::size_t i = 0; i < n; ++i) {
        if (gens[k][i] == 0) continue;
        if (!term.empty()) term += "*";
        term += "x(" + std::to_string(i + 1) + ")";
        if (gens[k][i] > 1) term += "^" + std::to_string(gens[k][i]);
      }
      body += (k ? ", " : "") + (term.empty() ? std::string("1") : term);
    }
    if (gens.empty()) body = "0";
    return "ring R = 0,(x(1.." + std::to_string(n) + ")),dp;\nideal I = " + body + ";";
  }
  if (format == "json") {
    nlohmann::json j = {{"vars", n}, {"gens", gens}};
    if (gens.empty()) j["gens"] = nlohmann::json::array();
    return j.dump();
  }
  throw InputError("unknown export format '" + format + "' (expected m2, singular or json)");
}

Multicomplex multicomplex_from_json(const nlohmann::json& j, const std::filesystem::path& base_dir) {
  try {
    if (j.is_object() && j.contains("box")) {
      return Multicomplex(j.at("box").get<std::vector<int>>(),
                          j.at("facets").get<std::vector<Monomial>>());
    }
    return Multicomplex(complex_from_json(j, base_dir));
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed multicomplex: ") + e.what());
  }
}

nlohmann::json multicomplex_to_json(const Multicomplex& delta) {
  return {{"box", delta.box()}, {"facets", delta.facets()}};
}

}  // namespace powerlat
