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

#ifndef FROBDET_SEMIGROUP_HPP
#define FROBDET_SEMIGROUP_HPP

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace frobdet {

using Elem = std::uint32_t;

inline constexpr std::size_t kDefaultSizeCap = 4096;

/// Finite semigroup given by its multiplication table; immutable once built.
class Semigroup {
 public:
  Semigroup() = default;

  /// Validates and builds. `table` is row-major, table[s*n+t] = st.
  /// Zero and identity are auto-detected when not declared. When `trusted`
  /// is set and n > 512 the cubic associativity scan is replaced by a
  /// seeded spot check (for tables produced by the builders below).
  static Semigroup from_table(std::size_t n, std::vector<Elem> table,
                              std::vector<std::string> names = {},
                              std::optional<Elem> zero = std::nullopt,
                              std::optional<Elem> identity = std::nullopt,
                              bool trusted = false);
  /// Same, from a square grid.
  static Semigroup from_grid(const std::vector<std::vector<Elem>>& grid,
                             std::vector<std::string> names = {});

  std::size_t size() const noexcept { return n_; }
  Elem mul(Elem s, Elem t) const noexcept { return table_[s * n_ + t]; }
  const std::vector<Elem>& table() const noexcept { return table_; }
  bool has_names() const noexcept { return !names_.empty(); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  /// Declared name, or the 1-based index.
  std::string name(Elem s) const;
  std::optional<Elem> find(std::string_view name) const;
  std::optional<Elem> zero() const noexcept { return zero_; }
  std::optional<Elem> identity() const noexcept { return identity_; }

  bool is_commutative() const;
  bool is_idempotent(Elem e) const { return mul(e, e) == e; }
  std::vector<Elem> idempotents() const;
  bool is_group() const;

  /// Restriction to a subset closed under multiplication; elements are
  /// renumbered in the given order.
  Semigroup restrict_to(const std::vector<Elem>& subset) const;

  friend bool operator==(const Semigroup& a, const Semigroup& b) {
    return a.n_ == b.n_ && a.table_ == b.table_ && a.names_ == b.names_;
  }

 private:
  std::size_t n_ = 0;
  std::vector<Elem> table_;
  std::vector<std::string> names_;
  std::optional<Elem> zero_;
  std::optional<Elem> identity_;
};

struct AnalysisReport {
  std::vector<Elem> idempotents;
  bool is_commutative = false;
  std::optional<Elem> zero;
  std::optional<Elem> identity;
  std::vector<Elem> square;
  bool is_idempotent_semigroup = false;
  /// (|{t : st = t}|, |{t : ts = t}|) per s.
  std::vector<std::pair<std::size_t, std::size_t>> fixed_points;
  bool central_idempotents = false;
  std::optional<std::vector<Elem>> group_of_units;
};

AnalysisReport analyze(const Semigroup& s);

/// Group of units of eSe.
std::vector<Elem> maximal_subgroup(const Semigroup& s, Elem e);

/// Group of units of a monoid; empty when there is no identity.
std::vector<Elem> group_of_units(const Semigroup& s);

Semigroup direct_product(const Semigroup& a, const Semigroup& b,
                         std::size_t cap = kDefaultSizeCap);

/// Checks 1000 seeded random triples; returns the first failing triple.
std::optional<std::array<Elem, 3>> associativity_spot_check(const Semigroup& s,
                                                            std::uint64_t seed = 0,
                                                            std::size_t triples = 1000);

// Families. Element order and names are documented in the README.
Semigroup gcd_semilattice(unsigned n);
Semigroup cyclic_nilpotent(unsigned k);
Semigroup three_nil(const std::vector<std::vector<int>>& b);
Semigroup rook_monoid(unsigned n);
Semigroup full_transformation(unsigned n);
Semigroup symmetric_group(unsigned n);
Semigroup left_zero(unsigned n);
Semigroup chain_semilattice(unsigned n);
Semigroup boolean_lattice(unsigned atoms);
Semigroup null_semigroup(unsigned n);
Semigroup adjoin_identity(const Semigroup& s);
Semigroup adjoin_zero(const Semigroup& s);
Semigroup zmod_add(unsigned n);
Semigroup zmod_mul(unsigned n);
Semigroup matrix_units(unsigned n);
Semigroup wenger_monoid();
Semigroup eleven_monoid();

/// String front end for the builders: name plus integer arguments, or a
/// 0/1 matrix for three_nil written as rows joined by '/', e.g. "10/01".
Semigroup build_family(const std::string& family, const std::vector<std::string>& params,
                       std::size_t cap = kDefaultSizeCap);
std::vector<std::string> family_names();

/// Every associative table on n <= 4 elements satisfying the filters,
/// in lexicographic table order. Not up to isomorphism.
void enumerate_semigroups(unsigned n, bool commutative, bool idempotent,
                          const std::function<void(const Semigroup&)>& sink);
std::vector<Semigroup> enumerate_commutative(unsigned n);
std::vector<Semigroup> enumerate_bands(unsigned n);

// .sgp text format.
Semigroup parse_sgp(std::string_view text);
std::string to_sgp(const Semigroup& s);

}  // namespace frobdet

#endif  // FROBDET_SEMIGROUP_HPP
