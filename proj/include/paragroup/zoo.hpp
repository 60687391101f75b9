//
// paragroup - a C++ library for finite semigroup structure theory
// Copyright (C) 2026 The paragroup authors
//
// This program is free software: you can redistribute it and/or modify
// it under the terms of the GNU General Public License as published by
// the Free Software Foundation, either version 3 of the License, or
// (at your option) any later version.
//
// This program is distributed in the hope that it will be useful,
// but WITHOUT ANY WARRANTY; without even the implied warranty of
// MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
// GNU General Public License for more details.
//
// You should have received a copy of the GNU General Public License
// along with this program.  If not, see <http://www.gnu.org/licenses/>.
//
// This file contains the corpus constructors: the standard finite
// semigroups (left/right zero, rectangular bands, cyclic and symmetric
// groups, zero semigroups, min-semilattices, full transformation monoids)
// and seeded random Rees matrix semigroups.

#ifndef PARAGROUP_ZOO_HPP_
#define PARAGROUP_ZOO_HPP_

#include <cstddef>      // for size_t
#include <cstdint>      // for uint32_t, uint64_t
#include <string>       // for string, to_string
#include <string_view>  // for string_view
#include <utility>      // for move
#include <vector>       // for vector

#include "core.hpp"
#include "rees.hpp"

namespace paragroup::zoo {

  //! A constructor parameter is outside its documented range.
  struct ParamOutOfRange : SemigroupError {
    explicit ParamOutOfRange(std::string const& what_)
        : SemigroupError(what_) {}
  };

  namespace detail {
    inline void require(bool ok, std::string const& what) {
      if (!ok) {
        throw ParamOutOfRange(what);
      }
    }
  }  // namespace detail

  //! xy = x.
  inline FiniteSemigroup left_zero(element_index n) {
    detail::require(n >= 1, "left_zero: n must be at least 1");
    std::vector<element_index> table(std::size_t(n) * n);
    for (element_index i = 0; i < n; ++i) {
      for (element_index j = 0; j < n; ++j) {
        table[std::size_t(i) * n + j] = i;
      }
    }
    return FiniteSemigroup(trusted_table, n, std::move(table));
  }

  //! xy = y.
  inline FiniteSemigroup right_zero(element_index n) {
    detail::require(n >= 1, "right_zero: n must be at least 1");
    std::vector<element_index> table(std::size_t(n) * n);
    for (element_index i = 0; i < n; ++i) {
      for (element_index j = 0; j < n; ++j) {
        table[std::size_t(i) * n + j] = j;
      }
    }
    return FiniteSemigroup(trusted_table, n, std::move(table));
  }

  //! Pairs (i, j) with (i, j)(i', j') = (i, j'), enumerated row-major.
  inline FiniteSemigroup rectangular_band(element_index k, element_index m) {
    detail::require(k >= 1 && m >= 1,
                    "rectangular_band: both sides must be at least 1");
    detail::require(std::uint64_t(k) * m <= 0xFFFFFFFFULL,
                    "rectangular_band: order overflows the index type");
    auto const                 n = k * m;
    std::vector<element_index> table(std::size_t(n) * n);
    std::vector<std::string>   names(n);
    for (element_index a = 0; a < n; ++a) {
      auto const i = a / m;
      names[a]     = "(" + std::to_string(i) + "," + std::to_string(a % m) + ")";
      for (element_index b = 0; b < n; ++b) {
        table[std::size_t(a) * n + b] = i * m + b % m;
      }
    }
    return FiniteSemigroup(trusted_table, n, std::move(table),
                           std::move(names));
  }

  //! Addition mod n.
  inline FiniteSemigroup cyclic_group(element_index n) {
    detail::require(n >= 1, "cyclic_group: n must be at least 1");
    std::vector<element_index> table(std::size_t(n) * n);
    for (element_index i = 0; i < n; ++i) {
      for (element_index j = 0; j < n; ++j) {
        table[std::size_t(i) * n + j] = (i + j) % n;
      }
    }
    return FiniteSemigroup(trusted_table, n, std::move(table));
  }

  //! xy = 0.
  inline FiniteSemigroup zero_semigroup(element_index n) {
    detail::require(n >= 1, "zero_semigroup: n must be at least 1");
    return FiniteSemigroup(trusted_table, n,
                           std::vector<element_index>(std::size_t(n) * n, 0));
  }

  //! xy = min(x, y).
  inline FiniteSemigroup min_semilattice(element_index n) {
    detail::require(n >= 1, "min_semilattice: n must be at least 1");
    std::vector<element_index> table(std::size_t(n) * n);
    for (element_index i = 0; i < n; ++i) {
      for (element_index j = 0; j < n; ++j) {
        table[std::size_t(i) * n + j] = i < j ? i : j;
      }
    }
    return FiniteSemigroup(trusted_table, n, std::move(table));
  }

  //! The symmetric group on n <= 5 points, generated by the transposition
  //! (0 1) and the n-cycle, realized by closure over transformations.
  inline FiniteSemigroup symmetric_group(element_index n,
                                         std::size_t   max_order = 10000) {
    detail::require(n >= 1 && n <= 5,
                    "symmetric_group: n must be between 1 and 5");
    std::vector<Transformation> gens;
    if (n == 1) {
      gens.push_back(Transformation({0}));
    } else {
      std::vector<element_index> transposition(n);
      std::vector<element_index> cycle(n);
      for (element_index i = 0; i < n; ++i) {
        transposition[i] = i;
        cycle[i]         = (i + 1) % n;
      }
      transposition[0] = 1;
      transposition[1] = 0;
      gens.push_back(Transformation(std::move(transposition)));
      if (n > 2) {
        gens.push_back(Transformation(std::move(cycle)));
      }
    }
    return closure_from_generators(gens, max_order).semigroup;
  }

  //! The full transformation monoid on n <= 3 points: all n^n maps,
  //! generated by the symmetric group plus the merge 0 -> 1.
  inline FiniteSemigroup
  full_transformation_monoid(element_index n, std::size_t max_order = 10000) {
    detail::require(n >= 1 && n <= 3,
                    "full_transformation_monoid: n must be between 1 and 3");
    std::vector<Transformation> gens;
    if (n == 1) {
      gens.push_back(Transformation({0}));
    } else {
      std::vector<element_index> transposition(n);
      std::vector<element_index> cycle(n);
      std::vector<element_index> merge(n);
      for (element_index i = 0; i < n; ++i) {
        transposition[i] = i;
        cycle[i]         = (i + 1) % n;
        merge[i]         = i;
      }
      transposition[0] = 1;
      transposition[1] = 0;
      merge[0]         = 1;
      gens.push_back(Transformation(std::move(transposition)));
      if (n > 2) {
        gens.push_back(Transformation(std::move(cycle)));
      }
      gens.push_back(Transformation(std::move(merge)));
    }
    return closure_from_generators(gens, max_order).semigroup;
  }

  //! Dispatch by kind name; params as listed in the CLI documentation.
  inline FiniteSemigroup make_standard(std::string_view                  kind,
                                       std::vector<element_index> const& params,
                                       std::size_t max_order = 10000) {
    auto arity = [&](std::size_t want) {
      detail::require(params.size() == want,
                      std::string(kind) + ": expected "
                          + std::to_string(want) + " parameter(s), got "
                          + std::to_string(params.size()));
    };
    if (kind == "left_zero") {
      arity(1);
      return left_zero(params[0]);
    }
    if (kind == "right_zero") {
      arity(1);
      return right_zero(params[0]);
    }
    if (kind == "rectangular_band") {
      arity(2);
      return rectangular_band(params[0], params[1]);
    }
    if (kind == "cyclic_group") {
      arity(1);
      return cyclic_group(params[0]);
    }
    if (kind == "zero_semigroup") {
      arity(1);
      return zero_semigroup(params[0]);
    }
    if (kind == "min_semilattice") {
      arity(1);
      return min_semilattice(params[0]);
    }
    if (kind == "symmetric_group") {
      arity(1);
      return symmetric_group(params[0], max_order);
    }
    if (kind == "full_transformation_monoid") {
      arity(1);
      return full_transformation_monoid(params[0], max_order);
    }
    throw ParamOutOfRange("unknown kind \"" + std::string(kind) + "\"");
  }

  //! The documented reproducible generator: SplitMix64.  State advances by
  //! 0x9e3779b97f4a7c15; output mixes with the constants 0xbf58476d1ce4e5b9
  //! and 0x94d049bb133111eb and shifts 30/27/31.  Bounded draws take the
  //! next output modulo the bound, so a seed fixes the whole stream on
  //! every platform.
  class SplitMix64 {
   public:
    explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

    std::uint64_t next() noexcept {
      state_ += 0x9e3779b97f4a7c15ULL;
      std::uint64_t z = state_;
      z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
      z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
      return z ^ (z >> 31);
    }

    //! Uniform-enough draw in [0, bound); bound >= 1.
    std::uint64_t below(std::uint64_t bound) noexcept {
      return next() % bound;
    }

   private:
    std::uint64_t state_;
  };

  //! A seed-deterministic Rees matrix semigroup: a cyclic group of order
  //! drawn from [1, max_group], |X| from [1, max_x], |Y| from [1, max_y],
  //! then the sandwich entries row by row.  Identical seeds give identical
  //! structures, bit for bit.
  inline ReesMatrixSemigroup random_rees(std::uint64_t seed,
                                         element_index max_group,
                                         element_index max_x,
                                         element_index max_y) {
    detail::require(max_group >= 1 && max_x >= 1 && max_y >= 1,
                    "random_rees: bounds must be at least 1");
    SplitMix64 rng(seed);
    auto const g = static_cast<element_index>(1 + rng.below(max_group));
    auto const x = static_cast<element_index>(1 + rng.below(max_x));
    auto const y = static_cast<element_index>(1 + rng.below(max_y));

    std::vector<element_index> sigma(std::size_t(y) * x);
    for (auto& entry : sigma) {
      entry = static_cast<element_index>(rng.below(g));
    }
    return ReesMatrixSemigroup(Group::certify(cyclic_group(g)), x, y,
                               std::move(sigma));
  }

}  // namespace paragroup::zoo

#endif  // PARAGROUP_ZOO_HPP_
