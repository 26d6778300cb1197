/*
 * Copyright 2026 The frobdet Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "frobdet/semigroup.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <map>

#include "frobdet/error.hpp"

namespace frobdet {

namespace {

constexpr std::size_t kFullCheckLimit = 512;

std::string triple_text(const std::vector<std::string>& names, Elem s, Elem t, Elem u) {
  auto nm = [&](Elem x) { return names.empty() ? std::to_string(x + 1) : names[x]; };
  return "(" + nm(s) + "," + nm(t) + "," + nm(u) + ")";
}

bool is_zero_of(std::size_t n, const std::vector<Elem>& tab, Elem z) {
  for (Elem s = 0; s < n; ++s) {
    if (tab[z * n + s] != z || tab[s * n + z] != z) return false;
  }
  return true;
}

bool is_identity_of(std::size_t n, const std::vector<Elem>& tab, Elem e) {
  for (Elem s = 0; s < n; ++s) {
    if (tab[e * n + s] != s || tab[s * n + e] != s) return false;
  }
  return true;
}

std::string fresh_name(const std::vector<std::string>& names, std::string base) {
  while (std::find(names.begin(), names.end(), base) != names.end()) base += "'";
  return base;
}

}  // namespace

Semigroup Semigroup::from_table(std::size_t n, std::vector<Elem> table,
                                std::vector<std::string> names, std::optional<Elem> zero,
                                std::optional<Elem> identity, bool trusted) {
  if (n == 0) throw Error(ErrorCode::IndexOutOfRange, "empty semigroup");
  if (table.size() != n * n) {
    throw Error(ErrorCode::IndexOutOfRange, "table has " + std::to_string(table.size()) +
                                                " entries, expected " + std::to_string(n * n));
  }
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (table[i] >= n) {
      throw Error(ErrorCode::IndexOutOfRange,
                  "entry " + std::to_string(table[i]) + " at row " + std::to_string(i / n) +
                      ", column " + std::to_string(i % n));
    }
  }
  if (!names.empty()) {
    if (names.size() != n) throw Error(ErrorCode::IndexOutOfRange, "name count differs from size");
    std::set<std::string> seen;
    for (const auto& nm : names) {
      if (!seen.insert(nm).second) throw Error(ErrorCode::DuplicateName, nm);
    }
  }
  Semigroup s;
  s.n_ = n;
  s.table_ = std::move(table);
  s.names_ = std::move(names);
  if (trusted && n > kFullCheckLimit) {
    if (auto bad = associativity_spot_check(s)) {
      throw Error(ErrorCode::AssociativityViolation,
                  triple_text(s.names_, (*bad)[0], (*bad)[1], (*bad)[2]));
    }
  } else {
    const auto& tab = s.table_;
    for (Elem a = 0; a < n; ++a) {
      for (Elem b = 0; b < n; ++b) {
        const Elem ab = tab[a * n + b];
        for (Elem c = 0; c < n; ++c) {
          if (tab[ab * n + c] != tab[a * n + tab[b * n + c]]) {
            throw Error(ErrorCode::AssociativityViolation, triple_text(s.names_, a, b, c));
          }
        }
      }
    }
  }
  if (zero) {
    if (*zero >= n || !is_zero_of(n, s.table_, *zero)) {
      throw Error(ErrorCode::DeclaredZeroNotZero, s.name(*zero));
    }
    s.zero_ = zero;
  } else {
    for (Elem z = 0; z < n; ++z) {
      if (is_zero_of(n, s.table_, z)) {
        s.zero_ = z;
        break;
      }
    }
  }
  if (identity) {
    if (*identity >= n || !is_identity_of(n, s.table_, *identity)) {
      throw Error(ErrorCode::DeclaredIdentityNotIdentity, s.name(*identity));
    }
    s.identity_ = identity;
  } else {
    for (Elem e = 0; e < n; ++e) {
      if (is_identity_of(n, s.table_, e)) {
        s.identity_ = e;
        break;
      }
    }
  }
  return s;
}

Semigroup Semigroup::from_grid(const std::vector<std::vector<Elem>>& grid,
                               std::vector<std::string> names) {
  const std::size_t n = grid.size();
  std::vector<Elem> flat;
  flat.reserve(n * n);
  for (const auto& row : grid) {
    if (row.size() != n) throw Error(ErrorCode::IndexOutOfRange, "grid is not square");
    flat.insert(flat.end(), row.begin(), row.end());
  }
  return from_table(n, std::move(flat), std::move(names));
}

std::string Semigroup::name(Elem s) const {
  if (s < names_.size()) return names_[s];
  return std::to_string(s + 1);
}

std::optional<Elem> Semigroup::find(std::string_view nm) const {
  for (Elem s = 0; s < names_.size(); ++s) {
    if (names_[s] == nm) return s;
  }
  return std::nullopt;
}

bool Semigroup::is_commutative() const {
  for (Elem s = 0; s < n_; ++s) {
    for (Elem t = s + 1; t < n_; ++t) {
      if (mul(s, t) != mul(t, s)) return false;
    }
  }
  return true;
}

std::vector<Elem> Semigroup::idempotents() const {
  std::vector<Elem> out;
  for (Elem e = 0; e < n_; ++e) {
    if (is_idempotent(e)) out.push_back(e);
  }
  return out;
}

bool Semigroup::is_group() const {
  if (!identity_) return false;
  return group_of_units(*this).size() == n_;
}

Semigroup Semigroup::restrict_to(const std::vector<Elem>& subset) const {
  std::vector<Elem> index(n_, static_cast<Elem>(-1));
  for (Elem i = 0; i < subset.size(); ++i) index[subset[i]] = i;
  const std::size_t m = subset.size();
  std::vector<Elem> tab(m * m);
  std::vector<std::string> nm;
  for (Elem i = 0; i < m; ++i) {
    nm.push_back(name(subset[i]));
    for (Elem j = 0; j < m; ++j) {
      const Elem p = mul(subset[i], subset[j]);
      if (index[p] == static_cast<Elem>(-1)) {
        throw Error(ErrorCode::IndexOutOfRange, "subset is not closed under multiplication");
      }
      tab[i * m + j] = index[p];
    }
  }
  return from_table(m, std::move(tab), std::move(nm));
}

AnalysisReport analyze(const Semigroup& s) {
  const std::size_t n = s.size();
  AnalysisReport r;
  r.idempotents = s.idempotents();
  r.is_commutative = s.is_commutative();
  r.zero = s.zero();
  r.identity = s.identity();
  std::vector<bool> in_square(n, false);
  r.fixed_points.assign(n, {0, 0});
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      const Elem p = s.mul(a, b);
      in_square[p] = true;
      if (p == b) ++r.fixed_points[a].first;
      if (s.mul(b, a) == b) ++r.fixed_points[a].second;
    }
  }
  for (Elem a = 0; a < n; ++a) {
    if (in_square[a]) r.square.push_back(a);
  }
  r.is_idempotent_semigroup = r.square.size() == n;
  r.central_idempotents = true;
  for (Elem e : r.idempotents) {
    for (Elem a = 0; a < n && r.central_idempotents; ++a) {
      if (s.mul(e, a) != s.mul(a, e)) r.central_idempotents = false;
    }
  }
  if (s.identity()) r.group_of_units = group_of_units(s);
  return r;
}

std::vector<Elem> group_of_units(const Semigroup& s) {
  std::vector<Elem> out;
  if (!s.identity()) return out;
  const Elem one = *s.identity();
  for (Elem g = 0; g < s.size(); ++g) {
    for (Elem h = 0; h < s.size(); ++h) {
      if (s.mul(g, h) == one && s.mul(h, g) == one) {
        out.push_back(g);
        break;
      }
    }
  }
  return out;
}

std::vector<Elem> maximal_subgroup(const Semigroup& s, Elem e) {
  if (e >= s.size() || !s.is_idempotent(e)) throw Error(ErrorCode::NotIdempotent, s.name(e));
  std::vector<Elem> local;
  for (Elem a = 0; a < s.size(); ++a) {
    if (s.mul(s.mul(e, a), e) == a) local.push_back(a);
  }
  std::vector<Elem> out;
  for (Elem g : local) {
    for (Elem h : local) {
      if (s.mul(g, h) == e && s.mul(h, g) == e) {
        out.push_back(g);
        break;
      }
    }
  }
  return out;
}

Semigroup direct_product(const Semigroup& a, const Semigroup& b, std::size_t cap) {
  const std::size_t na = a.size();
  const std::size_t nb = b.size();
  if (na * nb > cap) {
    throw Error(ErrorCode::SizeOverflow,
                std::to_string(na * nb) + " elements exceeds cap " + std::to_string(cap));
  }
  const std::size_t n = na * nb;
  std::vector<Elem> tab(n * n);
  for (Elem i = 0; i < n; ++i) {
    for (Elem j = 0; j < n; ++j) {
      tab[i * n + j] = static_cast<Elem>(a.mul(i / nb, j / nb) * nb + b.mul(i % nb, j % nb));
    }
  }
  std::vector<std::string> names;
  if (a.has_names() || b.has_names()) {
    for (Elem i = 0; i < n; ++i) names.push_back("(" + a.name(i / nb) + "," + b.name(i % nb) + ")");
  }
  return Semigroup::from_table(n, std::move(tab), std::move(names), std::nullopt, std::nullopt,
                               true);
}

std::optional<std::array<Elem, 3>> associativity_spot_check(const Semigroup& s,
                                                            std::uint64_t seed,
                                                            std::size_t triples) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Elem> pick(0, static_cast<Elem>(s.size() - 1));
  for (std::size_t i = 0; i < triples; ++i) {
    const Elem a = pick(rng);
    const Elem b = pick(rng);
    const Elem c = pick(rng);
    if (s.mul(s.mul(a, b), c) != s.mul(a, s.mul(b, c))) return std::array<Elem, 3>{a, b, c};
  }
  return std::nullopt;
}

// ---------------------------------------------------------------- families

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorCode::ParamOutOfRange, what);
}

template <class F>
Semigroup tabulate(std::size_t n, F&& f, std::vector<std::string> names = {}) {
  std::vector<Elem> tab(n * n);
  for (Elem i = 0; i < n; ++i) {
    for (Elem j = 0; j < n; ++j) tab[i * n + j] = f(i, j);
  }
  return Semigroup::from_table(n, std::move(tab), std::move(names), std::nullopt, std::nullopt,
                               true);
}

// All words of length n over {lo..hi}, lexicographic.
std::vector<std::vector<unsigned>> all_words(unsigned n, unsigned lo, unsigned hi) {
  std::vector<std::vector<unsigned>> out;
  std::vector<unsigned> w(n, lo);
  while (true) {
    out.push_back(w);
    int i = static_cast<int>(n) - 1;
    while (i >= 0 && w[i] == hi) w[i--] = lo;
    if (i < 0) break;
    ++w[i];
  }
  return out;
}

template <class Maps>
Semigroup compose_maps(const Maps& maps, char undefined) {
  const std::size_t n = maps.size();
  std::map<std::vector<unsigned>, Elem> index;
  std::vector<std::string> names;
  for (Elem i = 0; i < n; ++i) {
    index.emplace(maps[i], i);
    std::string nm;
    for (unsigned v : maps[i]) nm += v == 0 ? undefined : static_cast<char>('0' + v);
    names.push_back(nm);
  }
  // st = s o t: apply t first.
  return tabulate(
      n,
      [&](Elem s, Elem t) {
        std::vector<unsigned> c(maps[t].size());
        for (std::size_t x = 0; x < c.size(); ++x) {
          const unsigned tx = maps[t][x];
          c[x] = tx == 0 ? 0 : maps[s][tx - 1];
        }
        return index.at(c);
      },
      names);
}

}  // namespace

Semigroup gcd_semilattice(unsigned n) {
  require(n >= 1 && n <= kDefaultSizeCap, "gcd needs 1 <= n <= 4096");
  std::vector<std::string> names;
  for (unsigned i = 1; i <= n; ++i) names.push_back(std::to_string(i));
  return tabulate(n, [](Elem i, Elem j) { return std::gcd(i + 1, j + 1) - 1; }, names);
}

Semigroup cyclic_nilpotent(unsigned k) {
  require(k >= 1 && k < kDefaultSizeCap, "cyclic_nilpotent needs k >= 1");
  std::vector<std::string> names{"I"};
  for (unsigned i = 1; i < k; ++i) names.push_back(i == 1 ? "a" : "a^" + std::to_string(i));
  names.push_back("z");
  return tabulate(
      k + 1,
      [k](Elem i, Elem j) -> Elem {
        if (i == 0) return j;
        if (j == 0) return i;
        return std::min<Elem>(i + j, k);
      },
      names);
}

Semigroup three_nil(const std::vector<std::vector<int>>& b) {
  const std::size_t m = b.size();
  require(m >= 1 && m + 3 <= kDefaultSizeCap, "three_nil needs a nonempty square matrix");
  for (const auto& row : b) {
    require(row.size() == m, "three_nil matrix must be square");
    for (int v : row) require(v == 0 || v == 1, "three_nil matrix must be 0/1");
  }
  const Elem zp = static_cast<Elem>(m + 1);
  const Elem z = static_cast<Elem>(m + 2);
  std::vector<std::string> names{"I"};
  for (std::size_t i = 1; i <= m; ++i) names.push_back("s" + std::to_string(i));
  names.push_back("z'");
  names.push_back("z");
  return tabulate(
      m + 3,
      [&](Elem i, Elem j) -> Elem {
        if (i == 0) return j;
        if (j == 0) return i;
        if (i <= m && j <= m) return b[i - 1][j - 1] ? zp : z;
        return z;
      },
      names);
}

Semigroup rook_monoid(unsigned n) {
  require(n >= 1 && n <= 3, "rook needs 1 <= n <= 3");
  std::vector<std::vector<unsigned>> maps;
  for (auto& w : all_words(n, 0, n)) {
    std::set<unsigned> seen;
    bool injective = true;
    for (unsigned v : w) {
      if (v != 0 && !seen.insert(v).second) injective = false;
    }
    if (injective) maps.push_back(w);
  }
  return compose_maps(maps, '-');
}

Semigroup full_transformation(unsigned n) {
  require(n >= 1 && n <= 3, "full_transform needs 1 <= n <= 3");
  return compose_maps(all_words(n, 1, n), '-');
}

Semigroup symmetric_group(unsigned n) {
  require(n >= 1 && n <= 5, "symmetric needs 1 <= n <= 5");
  std::vector<std::vector<unsigned>> maps;
  std::vector<unsigned> p(n);
  std::iota(p.begin(), p.end(), 1U);
  do {
    maps.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return compose_maps(maps, '-');
}

Semigroup left_zero(unsigned n) {
  require(n >= 1 && n <= kDefaultSizeCap, "left_zero needs 1 <= n <= 4096");
  return tabulate(n, [](Elem i, Elem) { return i; });
}

Semigroup chain_semilattice(unsigned n) {
  require(n >= 1 && n <= kDefaultSizeCap, "chain needs 1 <= n <= 4096");
  return tabulate(n, [](Elem i, Elem j) { return std::min(i, j); });
}

Semigroup boolean_lattice(unsigned atoms) {
  require(atoms <= 10, "boolean needs at most 10 atoms");
  std::vector<std::string> names;
  for (unsigned mask = 0; mask < (1U << atoms); ++mask) {
    std::string nm;
    for (unsigned a = 0; a < atoms; ++a) {
      if (mask >> a & 1U) nm += static_cast<char>('a' + a);
    }
    names.push_back(nm.empty() ? "0" : nm);
  }
  return tabulate(std::size_t{1} << atoms, [](Elem i, Elem j) { return i & j; }, names);
}

Semigroup null_semigroup(unsigned n) {
  require(n >= 1 && n <= kDefaultSizeCap, "null needs 1 <= n <= 4096");
  return tabulate(n, [](Elem, Elem) { return Elem{0}; });
}

namespace {

Semigroup adjoin(const Semigroup& s, bool identity) {
  const std::size_t n = s.size();
  if (n + 1 > kDefaultSizeCap) throw Error(ErrorCode::SizeOverflow, "adjoining exceeds the cap");
  std::vector<std::string> names;
  if (s.has_names()) {
    names = s.names();
    names.push_back(fresh_name(names, identity ? "I" : "z"));
  }
  const Elem extra = static_cast<Elem>(n);
  return tabulate(
      n + 1,
      [&](Elem i, Elem j) -> Elem {
        if (i == extra) return identity ? j : extra;
        if (j == extra) return identity ? i : extra;
        return s.mul(i, j);
      },
      names);
}

}  // namespace

Semigroup adjoin_identity(const Semigroup& s) { return adjoin(s, true); }
Semigroup adjoin_zero(const Semigroup& s) { return adjoin(s, false); }

Semigroup zmod_add(unsigned n) {
  require(n >= 1 && n <= kDefaultSizeCap, "zmod_add needs 1 <= n <= 4096");
  std::vector<std::string> names;
  for (unsigned i = 0; i < n; ++i) names.push_back(std::to_string(i));
  return tabulate(n, [n](Elem i, Elem j) { return (i + j) % n; }, names);
}

Semigroup zmod_mul(unsigned n) {
  require(n >= 1 && n <= kDefaultSizeCap, "zmod_mul needs 1 <= n <= 4096");
  std::vector<std::string> names;
  for (unsigned i = 0; i < n; ++i) names.push_back(std::to_string(i));
  return tabulate(
      n, [n](Elem i, Elem j) { return static_cast<Elem>((std::uint64_t{i} * j) % n); }, names);
}

Semigroup matrix_units(unsigned n) {
  require(n >= 1 && n <= 9, "matrix_units needs 1 <= n <= 9");
  std::vector<std::string> names;
  for (unsigned i = 1; i <= n; ++i) {
    for (unsigned j = 1; j <= n; ++j) names.push_back("e" + std::to_string(i) + std::to_string(j));
  }
  names.push_back("z");
  const Elem z = n * n;
  return tabulate(
      n * n + 1,
      [n, z](Elem a, Elem b) -> Elem {
        if (a == z || b == z) return z;
        if (a % n != b / n) return z;
        return (a / n) * n + b % n;
      },
      names);
}

namespace {

// Commutative monoid G x N / ~ with G = {1, a}: elements g*m for m in a
// nonunit basis (basis[0] = 1), plus a zero. `prod(i, j)` gives the product
// of basis elements i, j >= 1 as (g, m) with m = -1 meaning zero.
template <class Prod>
Semigroup two_unit_monoid(const std::vector<std::string>& basis, Prod prod) {
  const Elem r = static_cast<Elem>(basis.size());
  const Elem z = 2 * r;
  std::vector<std::string> names;
  for (const auto& b : basis) {
    names.push_back(b);
    names.push_back(b == "1" ? "a" : "a" + b);
  }
  names.push_back("z");
  return tabulate(
      z + 1,
      [&](Elem x, Elem y) -> Elem {
        if (x == z || y == z) return z;
        const Elem gx = x % 2;
        const Elem gy = y % 2;
        const Elem mx = x / 2;
        const Elem my = y / 2;
        Elem g = gx ^ gy;
        int m;
        if (mx == 0) {
          m = static_cast<int>(my);
        } else if (my == 0) {
          m = static_cast<int>(mx);
        } else {
          auto [pg, pm] = prod(std::min(mx, my), std::max(mx, my));
          g ^= pg;
          m = pm;
        }
        return m < 0 ? z : static_cast<Elem>(2 * m) + g;
      },
      names);
}

}  // namespace

Semigroup wenger_monoid() {
  // basis 1, r, s, z'; r^2 = z', s^2 = a z', everything else vanishes.
  return two_unit_monoid({"1", "r", "s", "z'"}, [](Elem i, Elem j) -> std::pair<Elem, int> {
    if (i == 1 && j == 1) return {0, 3};
    if (i == 2 && j == 2) return {1, 3};
    return {0, -1};
  });
}

Semigroup eleven_monoid() {
  // basis 1, r, s, t, z'; r^2 = rs = z', st = t^2 = a z', rt = s^2 = z.
  return two_unit_monoid({"1", "r", "s", "t", "z'"}, [](Elem i, Elem j) -> std::pair<Elem, int> {
    if (i == 1 && (j == 1 || j == 2)) return {0, 4};
    if ((i == 2 && j == 3) || (i == 3 && j == 3)) return {1, 4};
    return {0, -1};
  });
}

// ------------------------------------------------------------- dispatcher

namespace {

unsigned parse_uint(const std::string& s) {
  if (s.empty() || s.size() > 9 || !std::all_of(s.begin(), s.end(), ::isdigit)) {
    throw Error(ErrorCode::ParamOutOfRange, "expected a nonnegative integer, got '" + s + "'");
  }
  return static_cast<unsigned>(std::stoul(s));
}

std::vector<std::vector<int>> parse_01_matrix(const std::string& s) {
  std::vector<std::vector<int>> rows(1);
  for (char c : s) {
    if (c == '/') {
      rows.emplace_back();
    } else if (c == '0' || c == '1') {
      rows.back().push_back(c - '0');
    } else {
      throw Error(ErrorCode::ParamOutOfRange, "matrix rows must be 0/1 digits separated by '/'");
    }
  }
  return rows;
}

}  // namespace

std::vector<std::string> family_names() {
  return {"gcd",      "cyclic_nilpotent", "three_nil", "rook",         "full_transform",
          "symmetric", "left_zero",       "chain_semilattice", "boolean", "null",
          "zmod_add", "zmod_mul",         "matrix_units", "wenger",   "eleven",
          "adjoin_identity", "adjoin_zero"};
}

Semigroup build_family(const std::string& family, const std::vector<std::string>& params,
                       std::size_t cap) {
  auto one = [&]() {
    if (params.size() != 1) {
      throw Error(ErrorCode::ParamOutOfRange, family + " takes exactly one parameter");
    }
    const unsigned v = parse_uint(params[0]);
    if (v > cap) throw Error(ErrorCode::SizeOverflow, family + " size exceeds the cap");
    return v;
  };
  auto none = [&]() {
    if (!params.empty()) throw Error(ErrorCode::ParamOutOfRange, family + " takes no parameters");
  };
  Semigroup out;
  if (family == "gcd") {
    out = gcd_semilattice(one());
  } else if (family == "cyclic_nilpotent") {
    out = cyclic_nilpotent(one());
  } else if (family == "three_nil") {
    if (params.size() != 1) throw Error(ErrorCode::ParamOutOfRange, "three_nil takes a matrix");
    out = three_nil(parse_01_matrix(params[0]));
  } else if (family == "rook") {
    out = rook_monoid(one());
  } else if (family == "full_transform") {
    out = full_transformation(one());
  } else if (family == "symmetric") {
    out = symmetric_group(one());
  } else if (family == "left_zero") {
    out = left_zero(one());
  } else if (family == "chain_semilattice" || family == "chain") {
    out = chain_semilattice(one());
  } else if (family == "boolean") {
    out = boolean_lattice(one());
  } else if (family == "null") {
    out = null_semigroup(one());
  } else if (family == "zmod_add") {
    out = zmod_add(one());
  } else if (family == "zmod_mul") {
    out = zmod_mul(one());
  } else if (family == "matrix_units") {
    out = matrix_units(one());
  } else if (family == "wenger") {
    none();
    out = wenger_monoid();
  } else if (family == "eleven") {
    none();
    out = eleven_monoid();
  } else if (family == "adjoin_identity" || family == "adjoin_zero") {
    if (params.empty()) throw Error(ErrorCode::ParamOutOfRange, family + " wraps another family");
    std::vector<std::string> rest(params.begin() + 1, params.end());
    Semigroup inner = build_family(params[0], rest, cap);
    out = family == "adjoin_identity" ? adjoin_identity(inner) : adjoin_zero(inner);
  } else {
    throw Error(ErrorCode::UnknownFamily, family);
  }
  if (out.size() > cap) throw Error(ErrorCode::SizeOverflow, family + " size exceeds the cap");
  return out;
}

// ------------------------------------------------------------ enumeration

void enumerate_semigroups(unsigned n, bool commutative, bool idempotent,
                          const std::function<void(const Semigroup&)>& sink) {
  if (n > 4) throw Error(ErrorCode::SizeTooLarge, "enumeration is limited to n <= 4");
  if (n == 0) throw Error(ErrorCode::ParamOutOfRange, "enumeration needs n >= 1");
  std::vector<int> tab(n * n, -1);
  std::vector<std::pair<Elem, Elem>> cells;
  for (Elem i = 0; i < n; ++i) {
    if (idempotent) tab[i * n + i] = static_cast<int>(i);
    for (Elem j = commutative ? i : 0; j < n; ++j) {
      if (idempotent && i == j) continue;
      cells.emplace_back(i, j);
    }
  }
  auto consistent = [&]() {
    for (Elem a = 0; a < n; ++a) {
      for (Elem b = 0; b < n; ++b) {
        const int ab = tab[a * n + b];
        if (ab < 0) continue;
        for (Elem c = 0; c < n; ++c) {
          const int bc = tab[b * n + c];
          if (bc < 0) continue;
          const int l = tab[static_cast<Elem>(ab) * n + c];
          const int r = tab[a * n + static_cast<Elem>(bc)];
          if (l >= 0 && r >= 0 && l != r) return false;
        }
      }
    }
    return true;
  };
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == cells.size()) {
      std::vector<Elem> flat(tab.begin(), tab.end());
      sink(Semigroup::from_table(n, std::move(flat)));
      return;
    }
    const auto [i, j] = cells[k];
    for (int v = 0; v < static_cast<int>(n); ++v) {
      tab[i * n + j] = v;
      if (commutative) tab[j * n + i] = v;
      if (consistent()) rec(k + 1);
    }
    tab[i * n + j] = -1;
    if (commutative) tab[j * n + i] = -1;
  };
  rec(0);
}

std::vector<Semigroup> enumerate_commutative(unsigned n) {
  std::vector<Semigroup> out;
  enumerate_semigroups(n, true, false, [&](const Semigroup& s) { out.push_back(s); });
  return out;
}

std::vector<Semigroup> enumerate_bands(unsigned n) {
  std::vector<Semigroup> out;
  enumerate_semigroups(n, false, true, [&](const Semigroup& s) { out.push_back(s); });
  return out;
}

}  // namespace frobdet
