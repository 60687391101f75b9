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
// This file contains exact normal-form arithmetic in the bicyclic monoid
// C(p, q) = < p, q | qp = 1 > and the bounded demonstration that its
// idempotent chain has no minimal member.

#ifndef PARAGROUP_BICYCLIC_HPP_
#define PARAGROUP_BICYCLIC_HPP_

#include <algorithm>  // for min
#include <cstdint>    // for uint64_t
#include <limits>     // for numeric_limits
#include <stdexcept>  // for invalid_argument
#include <string>     // for to_string
#include <utility>    // for pair
#include <vector>     // for vector

#include "core.hpp"

namespace paragroup::bicyclic {

  //! An exponent sum left the machine-word range.  Arithmetic is checked;
  //! overflow is an error, never silent wraparound.
  struct ExponentOverflow : SemigroupError {
    ExponentOverflow() : SemigroupError("bicyclic exponent overflow") {}
  };

  //! The argument of an idempotent-only operation is not idempotent.
  struct NotIdempotent : SemigroupError {
    NotIdempotent(std::uint64_t a, std::uint64_t b)
        : SemigroupError("p^" + std::to_string(a) + " q^" + std::to_string(b)
                         + " is not idempotent") {}
  };

  //! The normal form p^a q^b; (0, 0) is the two-sided unit.
  struct Element {
    std::uint64_t a = 0;
    std::uint64_t b = 0;

    friend bool operator==(Element const& u, Element const& v) noexcept {
      return u.a == v.a && u.b == v.b;
    }

    friend bool operator!=(Element const& u, Element const& v) noexcept {
      return !(u == v);
    }
  };

  inline constexpr Element one{0, 0};
  inline constexpr Element p{1, 0};
  inline constexpr Element q{0, 1};

  namespace detail {
    inline std::uint64_t checked_add(std::uint64_t x, std::uint64_t y) {
      if (x > std::numeric_limits<std::uint64_t>::max() - y) {
        throw ExponentOverflow();
      }
      return x + y;
    }
  }  // namespace detail

  //! (p^a q^b)(p^c q^d) = p^(a + c - m) q^(b + d - m) with m = min(b, c),
  //! the closed form of the single relation qp = 1.
  inline Element mul(Element const& u, Element const& v) {
    auto const m = std::min(u.b, v.a);
    return Element{detail::checked_add(u.a, v.a - m),
                   detail::checked_add(u.b - m, v.b)};
  }

  inline Element operator*(Element const& u, Element const& v) {
    return mul(u, v);
  }

  //! Idempotents are exactly the diagonal p^n q^n.
  inline bool is_idempotent(Element const& u) noexcept {
    return u.a == u.b;
  }

  //! e <= f iff ef = fe = e; on the diagonal this is e.a >= f.a.
  inline bool idempotent_leq(Element const& e, Element const& f) {
    if (!is_idempotent(e)) {
      throw NotIdempotent(e.a, e.b);
    }
    if (!is_idempotent(f)) {
      throw NotIdempotent(f.a, f.b);
    }
    return mul(e, f) == e && mul(f, e) == e;
  }

  //! For every n < count, the pair (e_{n+1}, e_n) of idempotents
  //! e_n = p^n q^n, certified to satisfy e_{n+1} <= e_n and e_{n+1} != e_n.
  //! No idempotent in the sample is minimal, so no primitive idempotent
  //! exists among them.
  inline std::vector<std::pair<Element, Element>>
  no_primitive_witness(std::uint64_t count) {
    if (count == 0) {
      throw std::invalid_argument(
          "no_primitive_witness: count must be at least 1");
    }
    std::vector<std::pair<Element, Element>> out;
    out.reserve(count);
    for (std::uint64_t n = 0; n < count; ++n) {
      Element const lower{n + 1, n + 1};
      Element const upper{n, n};
      if (!idempotent_leq(lower, upper) || lower == upper) {
        throw SemigroupError("bicyclic idempotent chain certification failed");
      }
      out.emplace_back(lower, upper);
    }
    return out;
  }

}  // namespace paragroup::bicyclic

#endif  // PARAGROUP_BICYCLIC_HPP_
