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

#include "powerlat/instances.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>

#include "powerlat/errors.hpp"
#include "powerlat/json_io.hpp"

namespace powerlat {
namespace {

std::string JoinStrings(const std::vector<std::string>& parts,
                        const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

void RequireDistinct(const std::vector<std::string>& labels,
                     const std::string& what) {
  auto sorted = labels;
  std::sort(sorted.begin(), sorted.end());
  auto dup = std::adjacent_find(sorted.begin(), sorted.end());
  if (dup != sorted.end()) throw InputError("duplicate " + what + " '" + *dup + "'");
}

std::string MonomialLabel(const std::vector<std::string>& vars,
                          const std::vector<int>& e) {
  std::vector<std::string> parts;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    parts.push_back(e[i] == 1 ? vars[i] : vars[i] + "^" + std::to_string(e[i]));
  }
  return parts.empty() ? "1" : JoinStrings(parts, "*");
}

int ModInverse(int a, int q) {
  for (int b = 1; b < q; ++b) {
    if (a * b % q == 1) return b;
  }
  throw PreconditionError("no inverse modulo " + std::to_string(q));
}

bool IsPrime(int q) {
  if (q < 2) return false;
  for (int d = 2; d * d <= q; ++d) {
    if (q % d == 0) return false;
  }
  return true;
}

// Dense bitset rows for the Hasse-diagram closure.
class BitMatrix {
 public:
  explicit BitMatrix(std::size_t n) : n_(n), words_((n + 63) / 64), bits_(n * words_) {}
  bool get(std::size_t i, std::size_t j) const {
    return bits_[i * words_ + j / 64] >> (j % 64) & 1;
  }
  void set(std::size_t i, std::size_t j) {
    bits_[i * words_ + j / 64] |= std::uint64_t{1} << (j % 64);
  }
  void or_row(std::size_t dst, std::size_t src) {
    for (std::size_t w = 0; w < words_; ++w) bits_[dst * words_ + w] |= bits_[src * words_ + w];
  }
  // Row i & row j, written into `out`.
  void and_rows(std::size_t i, std::size_t j, std::vector<std::uint64_t>& out) const {
    out.resize(words_);
    for (std::size_t w = 0; w < words_; ++w) out[w] = bits_[i * words_ + w] & bits_[j * words_ + w];
  }
  bool row_contains(std::size_t i, const std::vector<std::uint64_t>& set) const {
    for (std::size_t w = 0; w < words_; ++w) {
      if ((set[w] & ~bits_[i * words_ + w]) != 0) return false;
    }
    return true;
  }
  // Whether row i meets row j of `other` outside column `skip`.
  bool intersects(std::size_t i, const BitMatrix& other, std::size_t j, std::size_t skip) const {
    for (std::size_t w = 0; w < words_; ++w) {
      std::uint64_t m = bits_[i * words_ + w] & other.bits_[j * words_ + w];
      if (w == skip / 64) m &= ~(std::uint64_t{1} << (skip % 64));
      if (m != 0) return true;
    }
    return false;
  }
  std::size_t row_count(std::size_t i) const {
    std::size_t c = 0;
    for (std::size_t w = 0; w < words_; ++w) c += std::popcount(bits_[i * words_ + w]);
    return c;
  }
  std::size_t n() const { return n_; }

 private:
  std::size_t n_;
  std::size_t words_;
  std::vector<std::uint64_t> bits_;
};

}  // namespace

// ---------------------------------------------------------------- Boolean

BooleanLattice::BooleanLattice(int n, std::vector<std::string> labels)
    : n_(n), labels_(std::move(labels)) {
  if (n < 1 || n > 20) {
    throw InputError("boolean lattice needs 1 <= n <= 20, got " + std::to_string(n));
  }
  if (labels_.empty()) {
    for (int i = 0; i < n; ++i) labels_.push_back(std::string(1, static_cast<char>('a' + i)));
  }
  if (static_cast<int>(labels_.size()) != n) {
    throw InputError("boolean lattice has " + std::to_string(n) + " points but " +
                     std::to_string(labels_.size()) + " labels");
  }
  RequireDistinct(labels_, "label");
  std::vector<int> ranks(std::size_t{1} << n);
  for (std::uint32_t m = 0; m < ranks.size(); ++m) ranks[m] = std::popcount(m);
  set_ranks(std::move(ranks));
}

Element BooleanLattice::from_mask(std::uint32_t mask) const {
  Element x{mask};
  check(x);
  return x;
}

Element BooleanLattice::join(Element x, Element y) const { return {x.index | y.index}; }
Element BooleanLattice::meet(Element x, Element y) const { return {x.index & y.index}; }
bool BooleanLattice::leq(Element x, Element y) const { return (x.index & ~y.index) == 0; }

std::string BooleanLattice::label(Element x) const {
  std::vector<std::string> parts;
  for (int i = 0; i < n_; ++i) {
    if (x.index >> i & 1) parts.push_back(labels_[i]);
  }
  return "{" + JoinStrings(parts, ",") + "}";
}

nlohmann::json BooleanLattice::encode(Element x) const {
  auto j = nlohmann::json::array();
  for (int i = 0; i < n_; ++i) {
    if (x.index >> i & 1) j.push_back(labels_[i]);
  }
  return j;
}

Element BooleanLattice::decode(const nlohmann::json& j) const {
  if (!j.is_array()) throw InputError("boolean element must be a list of labels, got " + j.dump());
  std::uint32_t mask = 0;
  for (const auto& item : j) {
    if (!item.is_string()) throw InputError("boolean element entries must be labels");
    auto it = std::find(labels_.begin(), labels_.end(), item.get<std::string>());
    if (it == labels_.end()) throw InputError("unknown label '" + item.get<std::string>() + "'");
    mask |= std::uint32_t{1} << (it - labels_.begin());
  }
  return {mask};
}

nlohmann::json BooleanLattice::spec() const {
  return {{"type", "boolean"}, {"n", n_}, {"labels", labels_}};
}

Valuation BooleanLattice::valuation(Element x) const {
  Valuation v(n_);
  for (int i = 0; i < n_; ++i) v[i] = x.index >> i & 1;
  return v;
}

std::vector<Element> BooleanLattice::upper_covers(Element x) const {
  std::vector<Element> out;
  for (int i = 0; i < n_; ++i) {
    if (!(x.index >> i & 1)) out.push_back({x.index | (1u << i)});
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Element> BooleanLattice::lower_covers(Element x) const {
  std::vector<Element> out;
  for (int i = 0; i < n_; ++i) {
    if (x.index >> i & 1) out.push_back({x.index & ~(1u << i)});
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Element> BooleanLattice::powers(AtomId a) const { return {atom(a)}; }

// --------------------------------------------------------------- Multiset

MultisetLattice::MultisetLattice(std::vector<int> exponents,
                                 std::vector<std::string> labels)
    : box_(std::move(exponents)), labels_(std::move(labels)) {
  if (box_.empty()) throw InputError("multiset lattice needs at least one variable");
  std::size_t size = 1;
  for (int e : box_) {
    if (e < 1) throw InputError("multiset exponents must be >= 1, got " + std::to_string(e));
    if (size > kMaxLatticeSize / (e + 1)) {
      throw BudgetExceeded("multiset lattice exceeds " + std::to_string(kMaxLatticeSize) +
                           " elements");
    }
    stride_.push_back(static_cast<std::uint32_t>(size));
    size *= e + 1;
  }
  if (labels_.empty()) {
    for (std::size_t i = 0; i < box_.size(); ++i) labels_.push_back("x" + std::to_string(i + 1));
  }
  if (labels_.size() != box_.size()) {
    throw InputError("multiset lattice has " + std::to_string(box_.size()) +
                     " variables but " + std::to_string(labels_.size()) + " labels");
  }
  RequireDistinct(labels_, "label");
  std::vector<int> ranks(size, 0);
  for (std::size_t i = 0; i < box_.size(); ++i) {
    for (std::uint32_t x = 0; x < size; ++x) ranks[x] += exponent(Element{x}, i);
  }
  set_ranks(std::move(ranks));
}

std::vector<int> MultisetLattice::exponents_of(Element x) const {
  std::vector<int> e(box_.size());
  for (std::size_t i = 0; i < box_.size(); ++i) e[i] = exponent(x, i);
  return e;
}

Element MultisetLattice::from_exponents(const std::vector<int>& e) const {
  if (e.size() != box_.size()) {
    throw InputError("exponent vector has length " + std::to_string(e.size()) +
                     ", expected " + std::to_string(box_.size()));
  }
  std::uint32_t index = 0;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] < 0 || e[i] > box_[i]) {
      throw InputError("exponent " + std::to_string(e[i]) + " of " + labels_[i] +
                       " is outside 0.." + std::to_string(box_[i]));
    }
    index += static_cast<std::uint32_t>(e[i]) * stride_[i];
  }
  return {index};
}

Element MultisetLattice::join(Element x, Element y) const {
  std::uint32_t index = 0;
  for (std::size_t i = 0; i < box_.size(); ++i) {
    index += static_cast<std::uint32_t>(std::max(exponent(x, i), exponent(y, i))) * stride_[i];
  }
  return {index};
}

Element MultisetLattice::meet(Element x, Element y) const {
  std::uint32_t index = 0;
  for (std::size_t i = 0; i < box_.size(); ++i) {
    index += static_cast<std::uint32_t>(std::min(exponent(x, i), exponent(y, i))) * stride_[i];
  }
  return {index};
}

bool MultisetLattice::leq(Element x, Element y) const {
  for (std::size_t i = 0; i < box_.size(); ++i) {
    if (exponent(x, i) > exponent(y, i)) return false;
  }
  return true;
}

std::string MultisetLattice::label(Element x) const {
  return MonomialLabel(labels_, exponents_of(x));
}

nlohmann::json MultisetLattice::encode(Element x) const { return exponents_of(x); }

Element MultisetLattice::decode(const nlohmann::json& j) const {
  if (!j.is_array()) throw InputError("multiset element must be an exponent vector, got " + j.dump());
  std::vector<int> e;
  for (const auto& item : j) {
    if (!item.is_number_integer()) throw InputError("exponents must be integers, got " + j.dump());
    e.push_back(item.get<int>());
  }
  return from_exponents(e);
}

nlohmann::json MultisetLattice::spec() const {
  return {{"type", "multiset"}, {"exponents", box_}, {"labels", labels_}};
}

Valuation MultisetLattice::valuation(Element x) const { return exponents_of(x); }

std::vector<Element> MultisetLattice::upper_covers(Element x) const {
  std::vector<Element> out;
  for (std::size_t i = 0; i < box_.size(); ++i) {
    if (exponent(x, i) < box_[i]) out.push_back({x.index + stride_[i]});
  }
  return out;
}

std::vector<Element> MultisetLattice::lower_covers(Element x) const {
  std::vector<Element> out;
  for (std::size_t i = 0; i < box_.size(); ++i) {
    if (exponent(x, i) > 0) out.push_back({x.index - stride_[i]});
  }
  return out;
}

std::vector<Element> MultisetLattice::powers(AtomId a) const {
  std::vector<Element> out;
  for (int k = 1; k <= box_.at(a.index); ++k) {
    out.push_back({static_cast<std::uint32_t>(k) * stride_[a.index]});
  }
  return out;
}

// ---------------------------------------------------------------- Divisor

DivisorLattice::DivisorLattice(std::uint64_t n, std::vector<std::uint64_t> primes,
                               std::vector<int> exponents)
    : MultisetLattice(exponents, [&] {
        std::vector<std::string> labels;
        for (auto p : primes) labels.push_back(std::to_string(p));
        return labels;
      }()),
      n_(n),
      primes_(std::move(primes)) {}

std::uint64_t DivisorLattice::value(Element x) const {
  std::uint64_t v = 1;
  const auto e = exponents_of(x);
  for (std::size_t i = 0; i < e.size(); ++i) {
    for (int k = 0; k < e[i]; ++k) v *= primes_[i];
  }
  return v;
}

std::string DivisorLattice::label(Element x) const { return std::to_string(value(x)); }

nlohmann::json DivisorLattice::encode(Element x) const { return value(x); }

Element DivisorLattice::decode(const nlohmann::json& j) const {
  if (j.is_array()) return MultisetLattice::decode(j);
  if (!j.is_number_unsigned() && !j.is_number_integer()) {
    throw InputError("divisor element must be an integer, got " + j.dump());
  }
  const auto d = j.get<std::int64_t>();
  if (d < 1 || n_ % static_cast<std::uint64_t>(d) != 0) {
    throw InputError(j.dump() + " does not divide " + std::to_string(n_));
  }
  std::vector<int> e(primes_.size(), 0);
  auto rest = static_cast<std::uint64_t>(d);
  for (std::size_t i = 0; i < primes_.size(); ++i) {
    while (rest % primes_[i] == 0) {
      rest /= primes_[i];
      ++e[i];
    }
  }
  return from_exponents(e);
}

nlohmann::json DivisorLattice::spec() const { return {{"type", "divisor"}, {"n", n_}}; }

std::vector<std::pair<std::uint64_t, int>> factorize(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, int>> out;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

// --------------------------------------------------------------- Subspace

SubspaceLattice::SubspaceLattice(int q, int n) : q_(q), n_(n) {
  if (!IsPrime(q) || q > 7) {
    throw InputError("subspace lattice needs a prime q <= 7, got " + std::to_string(q));
  }
  if (n < 1 || n > 4) {
    throw InputError("subspace lattice needs 1 <= n <= 4, got " + std::to_string(n));
  }
  std::vector<int> ranks;
  for (int k = 0; k <= n; ++k) {
    std::vector<Matrix> level;
    // Pivot column sets as bitmasks with k bits.
    for (int pivots = 0; pivots < (1 << n); ++pivots) {
      if (std::popcount(static_cast<unsigned>(pivots)) != k) continue;
      std::vector<int> pcols;
      for (int c = 0; c < n; ++c) {
        if (pivots >> c & 1) pcols.push_back(c);
      }
      // Free positions: row r, non-pivot column c > pcols[r].
      std::vector<std::pair<int, int>> free;
      for (int r = 0; r < k; ++r) {
        for (int c = pcols[r] + 1; c < n; ++c) {
          if (!(pivots >> c & 1)) free.emplace_back(r, c);
        }
      }
      std::vector<int> digits(free.size(), 0);
      while (true) {
        Matrix m(k, std::vector<int>(n, 0));
        for (int r = 0; r < k; ++r) m[r][pcols[r]] = 1;
        for (std::size_t f = 0; f < free.size(); ++f) m[free[f].first][free[f].second] = digits[f];
        level.push_back(std::move(m));
        std::size_t f = 0;
        while (f < digits.size() && ++digits[f] == q) digits[f++] = 0;
        if (f == digits.size()) break;
      }
    }
    std::sort(level.begin(), level.end());
    for (auto& m : level) {
      by_key_.emplace(key(m), Element{static_cast<std::uint32_t>(bases_.size())});
      bases_.push_back(std::move(m));
      ranks.push_back(k);
    }
  }
  set_ranks(std::move(ranks));
  perp_.resize(bases_.size());
  for (std::size_t i = 0; i < bases_.size(); ++i) {
    perp_[i] = by_key_.at(key(rref(null_space(bases_[i]))));
  }
}

std::uint64_t SubspaceLattice::key(const Matrix& rref) const {
  std::uint64_t k = rref.size();
  for (const auto& row : rref) {
    for (int v : row) k = k * q_ + v;
  }
  return k;
}

SubspaceLattice::Matrix SubspaceLattice::rref(Matrix rows) const {
  std::size_t r = 0;
  for (int c = 0; c < n_ && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[r], rows[p]);
    const int inv = ModInverse(rows[r][c], q_);
    for (int& v : rows[r]) v = v * inv % q_;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      const int f = rows[i][c];
      for (int j = 0; j < n_; ++j) rows[i][j] = ((rows[i][j] - f * rows[r][j]) % q_ + q_) % q_;
    }
    ++r;
  }
  rows.resize(r);
  return rows;
}

SubspaceLattice::Matrix SubspaceLattice::null_space(const Matrix& rref) const {
  std::vector<int> pivot_of_col(n_, -1);
  for (std::size_t r = 0; r < rref.size(); ++r) {
    for (int c = 0; c < n_; ++c) {
      if (rref[r][c] != 0) {
        pivot_of_col[c] = static_cast<int>(r);
        break;
      }
    }
  }
  Matrix out;
  for (int f = 0; f < n_; ++f) {
    if (pivot_of_col[f] >= 0) continue;
    std::vector<int> v(n_, 0);
    v[f] = 1;
    for (int c = 0; c < n_; ++c) {
      if (pivot_of_col[c] >= 0) v[c] = (q_ - rref[pivot_of_col[c]][f]) % q_;
    }
    out.push_back(std::move(v));
  }
  return out;
}

Element SubspaceLattice::span(const Matrix& rows) const {
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != n_) {
      throw InputError("vector of length " + std::to_string(row.size()) + " in F_" +
                       std::to_string(q_) + "^" + std::to_string(n_));
    }
    for (int v : row) {
      if (v < 0 || v >= q_) throw InputError("entry " + std::to_string(v) + " is not in F_" + std::to_string(q_));
    }
  }
  return by_key_.at(key(rref(rows)));
}

Element SubspaceLattice::join(Element x, Element y) const {
  Matrix rows = bases_[x.index];
  rows.insert(rows.end(), bases_[y.index].begin(), bases_[y.index].end());
  return by_key_.at(key(rref(std::move(rows))));
}

Element SubspaceLattice::meet(Element x, Element y) const {
  // U n V = (U^perp + V^perp)^perp for the standard bilinear form.
  return perp_[join(perp_[x.index], perp_[y.index]).index];
}

bool SubspaceLattice::leq(Element x, Element y) const {
  return rank(x) <= rank(y) && join(x, y) == y;
}

std::string SubspaceLattice::label(Element x) const {
  const auto& m = bases_[x.index];
  if (m.empty()) return "0";
  std::vector<std::string> rows;
  for (const auto& row : m) {
    std::vector<std::string> entries;
    for (int v : row) entries.push_back(std::to_string(v));
    rows.push_back("(" + JoinStrings(entries, ",") + ")");
  }
  return "<" + JoinStrings(rows, ",") + ">";
}

nlohmann::json SubspaceLattice::encode(Element x) const {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& row : bases_[x.index]) j.push_back(row);
  return j;
}

Element SubspaceLattice::decode(const nlohmann::json& j) const {
  if (!j.is_array()) throw InputError("subspace element must be a list of rows, got " + j.dump());
  Matrix rows;
  for (const auto& row : j) {
    if (!row.is_array()) throw InputError("subspace rows must be lists, got " + j.dump());
    std::vector<int> r;
    for (const auto& v : row) {
      if (!v.is_number_integer()) throw InputError("field entries must be integers");
      r.push_back(v.get<int>());
    }
    rows.push_back(std::move(r));
  }
  return span(rows);
}

nlohmann::json SubspaceLattice::spec() const {
  return {{"type", "subspace"}, {"q", q_}, {"n", n_}};
}

// ---------------------------------------------------------------- Product

ProductLattice::ProductLattice(std::vector<LatticePtr> factors)
    : factors_(std::move(factors)) {
  if (factors_.size() < 2) throw InputError("a product needs at least two factors");
  std::size_t size = 1;
  for (const auto& f : factors_) {
    if (!f) throw InputError("null product factor");
    if (size > kMaxLatticeSize / f->size()) {
      throw BudgetExceeded("product lattice exceeds " + std::to_string(kMaxLatticeSize) +
                           " elements");
    }
    stride_.push_back(static_cast<std::uint32_t>(size));
    size *= f->size();
  }
  std::vector<int> ranks(size, 0);
  for (std::uint32_t x = 0; x < size; ++x) {
    for (std::size_t i = 0; i < factors_.size(); ++i) {
      ranks[x] += factors_[i]->rank(component(Element{x}, i));
    }
  }
  set_ranks(std::move(ranks));
  for (Element a : level(1)) {
    for (std::size_t i = 0; i < factors_.size(); ++i) {
      const Element c = component(a, i);
      if (c != factors_[i]->bottom()) {
        atom_origin_.emplace_back(i, *factors_[i]->atom_id(c));
        break;
      }
    }
  }
}

Element ProductLattice::compose(const std::vector<Element>& parts) const {
  if (parts.size() != factors_.size()) throw InputError("wrong number of product components");
  std::uint32_t index = 0;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    factors_[i]->check(parts[i]);
    index += parts[i].index * stride_[i];
  }
  return {index};
}

Element ProductLattice::join(Element x, Element y) const {
  std::uint32_t index = 0;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    index += factors_[i]->join(component(x, i), component(y, i)).index * stride_[i];
  }
  return {index};
}

Element ProductLattice::meet(Element x, Element y) const {
  std::uint32_t index = 0;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    index += factors_[i]->meet(component(x, i), component(y, i)).index * stride_[i];
  }
  return {index};
}

bool ProductLattice::leq(Element x, Element y) const {
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (!factors_[i]->leq(component(x, i), component(y, i))) return false;
  }
  return true;
}

std::string ProductLattice::label(Element x) const {
  std::vector<std::string> parts;
  for (std::size_t i = 0; i < factors_.size(); ++i) parts.push_back(factors_[i]->label(component(x, i)));
  return "(" + JoinStrings(parts, ", ") + ")";
}

nlohmann::json ProductLattice::encode(Element x) const {
  nlohmann::json j = nlohmann::json::array();
  for (std::size_t i = 0; i < factors_.size(); ++i) j.push_back(factors_[i]->encode(component(x, i)));
  return j;
}

Element ProductLattice::decode(const nlohmann::json& j) const {
  if (!j.is_array() || j.size() != factors_.size()) {
    throw InputError("product element must list " + std::to_string(factors_.size()) +
                     " components, got " + j.dump());
  }
  std::vector<Element> parts;
  for (std::size_t i = 0; i < factors_.size(); ++i) parts.push_back(factors_[i]->decode(j[i]));
  return compose(parts);
}

nlohmann::json ProductLattice::spec() const {
  nlohmann::json fs = nlohmann::json::array();
  for (const auto& f : factors_) fs.push_back(f->spec());
  return {{"type", "product"}, {"factors", fs}};
}

Valuation ProductLattice::valuation(Element x) const {
  Valuation v(atom_origin_.size());
  std::vector<Valuation> parts(factors_.size());
  for (std::size_t i = 0; i < factors_.size(); ++i) parts[i] = factors_[i]->valuation(component(x, i));
  for (std::size_t k = 0; k < atom_origin_.size(); ++k) {
    v[k] = parts[atom_origin_[k].first][atom_origin_[k].second.index];
  }
  return v;
}

std::vector<Element> ProductLattice::upper_covers(Element x) const {
  std::vector<Element> out;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    const Element c = component(x, i);
    for (Element u : factors_[i]->upper_covers(c)) {
      out.push_back({x.index + (u.index - c.index) * stride_[i]});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Element> ProductLattice::lower_covers(Element x) const {
  std::vector<Element> out;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    const Element c = component(x, i);
    for (Element d : factors_[i]->lower_covers(c)) {
      out.push_back({x.index - (c.index - d.index) * stride_[i]});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ------------------------------------------------------------------ Hasse

HasseLattice::HasseLattice(
    const std::vector<std::string>& names,
    const std::vector<std::pair<std::string, std::string>>& relations) {
  const std::size_t n = names.size();
  if (n == 0) throw InputError("hasse lattice has no elements");
  if (n > 1024) throw BudgetExceeded("hasse input is limited to 1024 elements");
  RequireDistinct(names, "element");
  std::unordered_map<std::string, std::size_t> pos;
  for (std::size_t i = 0; i < n; ++i) pos.emplace(names[i], i);
  auto lookup = [&](const std::string& s) {
    auto it = pos.find(s);
    if (it == pos.end()) throw InputError("relation names unknown element '" + s + "'");
    return it->second;
  };

  BitMatrix below(n);  // below.get(i, j): j < i strictly
  for (const auto& [lo, hi] : relations) below.set(lookup(hi), lookup(lo));
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (below.get(i, k)) below.or_row(i, k);
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (below.get(i, i)) throw InputError("order relations contain a cycle through '" + names[i] + "'");
  }
  BitMatrix down(n), up(n);  // reflexive closures
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j || below.get(i, j)) {
        down.set(i, j);
        up.set(j, i);
      }
    }
  }

  // Process elements so that everything below x comes before x.
  std::vector<std::size_t> topo(n);
  std::iota(topo.begin(), topo.end(), 0);
  std::vector<std::size_t> down_count(n);
  for (std::size_t i = 0; i < n; ++i) down_count[i] = down.row_count(i);
  std::stable_sort(topo.begin(), topo.end(),
                   [&](std::size_t a, std::size_t b) { return down_count[a] < down_count[b]; });
  std::vector<std::size_t> topo_pos(n);
  for (std::size_t k = 0; k < n; ++k) topo_pos[topo[k]] = k;

  std::vector<std::uint32_t> join(n * n), meet(n * n);
  std::vector<std::uint64_t> bounds;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      for (int side = 0; side < 2; ++side) {
        const BitMatrix& m = side == 0 ? up : down;
        m.and_rows(i, j, bounds);
        // The least upper bound, if any, is the bound coming first in the
        // topological order (the greatest lower bound, last).
        std::size_t best = n;
        for (std::size_t z = 0; z < n; ++z) {
          if (!(bounds[z / 64] >> (z % 64) & 1)) continue;
          if (best == n || (side == 0 ? topo_pos[z] < topo_pos[best] : topo_pos[z] > topo_pos[best])) best = z;
        }
        if (best == n || !m.row_contains(best, bounds)) {
          throw InputError("elements '" + names[i] + "' and '" + names[j] + "' have no unique " +
                           (side == 0 ? "join" : "meet"));
        }
        (side == 0 ? join : meet)[i * n + j] = static_cast<std::uint32_t>(best);
        (side == 0 ? join : meet)[j * n + i] = static_cast<std::uint32_t>(best);
      }
    }
  }

  // Cover relations and longest-chain ranks.
  std::vector<std::vector<std::size_t>> lower(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      // i covers j iff nothing lies strictly between them.
      if (below.get(i, j) && !below.intersects(i, up, j, j)) lower[i].push_back(j);
    }
  }
  std::vector<int> rank(n, 0);
  for (std::size_t i : topo) {
    for (std::size_t j : lower[i]) rank[i] = std::max(rank[i], rank[j] + 1);
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j : lower[i]) {
      if (rank[i] != rank[j] + 1) {
        throw InputError("lattice is not graded: '" + names[i] + "' covers '" + names[j] +
                         "' but their longest chains from the bottom have lengths " +
                         std::to_string(rank[i]) + " and " + std::to_string(rank[j]));
      }
    }
  }

  // Reindex by (rank, input position).
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return rank[a] < rank[b]; });
  std::vector<std::uint32_t> new_index(n);
  for (std::size_t k = 0; k < n; ++k) new_index[order[k]] = static_cast<std::uint32_t>(k);

  n_ = n;
  names_.resize(n);
  leq_.assign(n * n, 0);
  join_.resize(n * n);
  meet_.resize(n * n);
  up_.assign(n, {});
  down_.assign(n, {});
  std::vector<int> new_rank(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto a = new_index[i];
    names_[a] = names[i];
    by_name_.emplace(names[i], Element{a});
    new_rank[a] = rank[i];
    for (std::size_t j = 0; j < n; ++j) {
      const auto b = new_index[j];
      leq_[a * n + b] = down.get(j, i);
      join_[a * n + b] = new_index[join[i * n + j]];
      meet_[a * n + b] = new_index[meet[i * n + j]];
    }
    for (std::size_t j : lower[i]) {
      down_[a].push_back(Element{new_index[j]});
      up_[new_index[j]].push_back(Element{a});
    }
  }
  for (auto& v : up_) std::sort(v.begin(), v.end());
  for (auto& v : down_) std::sort(v.begin(), v.end());
  set_ranks(std::move(new_rank));
}

Element HasseLattice::find(const std::string& name) const {
  auto it = by_name_.find(name);
  if (it == by_name_.end()) throw InputError("unknown element '" + name + "'");
  return it->second;
}

std::vector<std::pair<Element, Element>> HasseLattice::cover_pairs() const {
  std::vector<std::pair<Element, Element>> out;
  for (std::uint32_t i = 0; i < n_; ++i) {
    for (Element u : up_[i]) out.emplace_back(Element{i}, u);
  }
  return out;
}

Element HasseLattice::join(Element x, Element y) const { return {join_[x.index * n_ + y.index]}; }
Element HasseLattice::meet(Element x, Element y) const { return {meet_[x.index * n_ + y.index]}; }
bool HasseLattice::leq(Element x, Element y) const { return leq_[x.index * n_ + y.index] != 0; }

Element HasseLattice::decode(const nlohmann::json& j) const {
  if (!j.is_string()) throw InputError("hasse element must be a name, got " + j.dump());
  return find(j.get<std::string>());
}

nlohmann::json HasseLattice::spec() const {
  nlohmann::json covers = nlohmann::json::array();
  for (const auto& [lo, hi] : cover_pairs()) covers.push_back({names_[lo.index], names_[hi.index]});
  return {{"type", "hasse"}, {"elements", names_}, {"covers", covers}};
}

std::vector<Element> HasseLattice::upper_covers(Element x) const { return up_[x.index]; }
std::vector<Element> HasseLattice::lower_covers(Element x) const { return down_[x.index]; }

// ----------------------------------------------------------- Constructors

std::shared_ptr<const BooleanLattice> build_boolean(int n, std::vector<std::string> labels) {
  return std::make_shared<const BooleanLattice>(n, std::move(labels));
}

std::shared_ptr<const MultisetLattice> build_multiset(std::vector<int> exponents,
                                                      std::vector<std::string> labels) {
  return std::make_shared<const MultisetLattice>(std::move(exponents), std::move(labels));
}

std::shared_ptr<const SubspaceLattice> build_subspace(int q, int n) {
  return std::make_shared<const SubspaceLattice>(q, n);
}

std::shared_ptr<const ProductLattice> build_product(std::vector<LatticePtr> factors) {
  return std::make_shared<const ProductLattice>(std::move(factors));
}

std::shared_ptr<const HasseLattice> build_hasse(
    const std::vector<std::string>& names,
    const std::vector<std::pair<std::string, std::string>>& relations) {
  return std::make_shared<const HasseLattice>(names, relations);
}

std::shared_ptr<const DivisorLattice> build_divisor(std::uint64_t n) {
  if (n < 2 || n > 1'000'000'000) {
    throw InputError("divisor lattice needs 2 <= n <= 10^9, got " + std::to_string(n));
  }
  const auto factors = factorize(n);
  if (factors.size() > 6) throw InputError(std::to_string(n) + " has more than 6 distinct primes");
  std::vector<std::uint64_t> primes;
  std::vector<int> exponents;
  for (const auto& [p, e] : factors) {
    primes.push_back(p);
    exponents.push_back(e);
  }
  return std::make_shared<const DivisorLattice>(n, std::move(primes), std::move(exponents));
}

LatticePtr lattice_from_json(const nlohmann::json& spec_or_ref,
                             const std::filesystem::path& base_dir) {
  auto dir = base_dir;
  const auto spec = resolve_json_ref(spec_or_ref, dir);
  try {
    if (!spec.is_object() || !spec.contains("type")) {
      throw InputError("lattice specification needs a \"type\" field");
    }
    const auto type = spec.at("type").get<std::string>();
    auto labels = [&] {
      return spec.contains("labels") ? spec.at("labels").get<std::vector<std::string>>()
                                     : std::vector<std::string>{};
    };
    if (type == "boolean") return build_boolean(spec.at("n").get<int>(), labels());
    if (type == "multiset") {
      return build_multiset(spec.at("exponents").get<std::vector<int>>(), labels());
    }
    if (type == "subspace") return build_subspace(spec.at("q").get<int>(), spec.at("n").get<int>());
    if (type == "divisor") {
      const auto n = spec.at("n").get<std::int64_t>();
      if (n < 2) throw InputError("divisor lattice needs n >= 2, got " + std::to_string(n));
      return build_divisor(static_cast<std::uint64_t>(n));
    }
    if (type == "product") {
      std::vector<LatticePtr> factors;
      for (const auto& f : spec.at("factors")) factors.push_back(lattice_from_json(f, dir));
      return build_product(std::move(factors));
    }
    if (type == "hasse") {
      std::vector<std::pair<std::string, std::string>> rel;
      for (const auto& c : spec.at("covers")) {
        if (!c.is_array() || c.size() != 2) throw InputError("each cover must be a [lower, upper] pair");
        rel.emplace_back(c[0].get<std::string>(), c[1].get<std::string>());
      }
      return build_hasse(spec.at("elements").get<std::vector<std::string>>(), rel);
    }
    throw InputError("unknown lattice type '" + type + "'");
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed lattice specification: ") + e.what());
  }
}

}  // namespace powerlat
