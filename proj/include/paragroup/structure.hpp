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
// This file contains ideal theory for finite semigroups: principal ideals,
// simplicity, the natural partial order on idempotents, primitive
// idempotents, complete simplicity, and maximal subgroups eSe.

#ifndef PARAGROUP_STRUCTURE_HPP_
#define PARAGROUP_STRUCTURE_HPP_

#include <algorithm>  // for lower_bound, sort
#include <cstddef>    // for size_t
#include <optional>   // for optional
#include <string>     // for to_string
#include <utility>    // for move
#include <vector>     // for vector

#include "core.hpp"

namespace paragroup {

  //! The argument of an idempotent-only operation is not idempotent.
  struct NotIdempotent : SemigroupError {
    explicit NotIdempotent(element_index e)
        : SemigroupError("element " + std::to_string(e) + " is not idempotent"),
          index(e) {}
    element_index index;
  };

  //! eSe failed to certify as a group; the witness is the offending element.
  //! Signals that maximal_subgroup was called outside a completely simple
  //! semigroup (or on a table that is not a group when certifying directly).
  struct NotAGroup : SemigroupError {
    NotAGroup(element_index w, std::string const& why)
        : SemigroupError("not a group: " + why), witness(w) {}
    element_index witness;
  };

  namespace detail {
    // Membership mask of J(a) = {a} u aS u Sa u SaS.  S^1 is never
    // materialized; for the principal ideal the four pieces give the same
    // set and need one O(n^2) pass.
    inline std::vector<bool> principal_ideal_mask(FiniteSemigroup const& S,
                                                  element_index          a) {
      auto const        n = S.order();
      std::vector<bool> in(n, false);
      in[a] = true;
      std::vector<element_index> sa(n);
      for (element_index s = 0; s < n; ++s) {
        in[S.product(a, s)] = true;
        sa[s]               = S.product(s, a);
        in[sa[s]]           = true;
      }
      for (element_index s = 0; s < n; ++s) {
        for (element_index t = 0; t < n; ++t) {
          in[S.product(sa[s], t)] = true;
        }
      }
      return in;
    }

    // Index of the first element (ascending) whose principal ideal is
    // proper, if any.
    inline std::optional<element_index>
    proper_ideal_witness(FiniteSemigroup const& S) {
      auto const n = S.order();
      for (element_index a = 0; a < n; ++a) {
        auto const in = principal_ideal_mask(S, a);
        for (element_index b = 0; b < n; ++b) {
          if (!in[b]) {
            return a;
          }
        }
      }
      return std::nullopt;
    }
  }  // namespace detail

  //! The principal two-sided ideal J(a) = {a} u aS u Sa u SaS, ascending.
  inline std::vector<Element> principal_ideal(Element const& a) {
    auto const& S = a.owner();
    if (!S.verified()) {
      throw NotVerified("principal_ideal");
    }
    auto const           in = detail::principal_ideal_mask(S, a.index());
    std::vector<Element> out;
    for (element_index b = 0; b < S.order(); ++b) {
      if (in[b]) {
        out.push_back(Element(S, b));
      }
    }
    return out;
  }

  //! True iff S has no proper two-sided ideal, i.e. J(a) = S for every a.
  inline bool is_simple(FiniteSemigroup const& S) {
    if (!S.verified()) {
      throw NotVerified("is_simple");
    }
    return !detail::proper_ideal_witness(S).has_value();
  }

  //! The natural partial order on idempotents: e <= f iff ef = fe = e.
  inline bool idempotent_leq(Element const& e, Element const& f) {
    if (&e.owner() != &f.owner()) {
      throw OwnerMismatch();
    }
    auto const& S = e.owner();
    if (!S.verified()) {
      throw NotVerified("idempotent_leq");
    }
    if (S.product(e.index(), e.index()) != e.index()) {
      throw NotIdempotent(e.index());
    }
    if (S.product(f.index(), f.index()) != f.index()) {
      throw NotIdempotent(f.index());
    }
    return S.product(e.index(), f.index()) == e.index()
           && S.product(f.index(), e.index()) == e.index();
  }

  //! Idempotents that are minimal in the natural partial order, ascending.
  inline std::vector<Element> primitive_idempotents(FiniteSemigroup const& S) {
    if (!S.verified()) {
      throw NotVerified("primitive_idempotents");
    }
    std::vector<element_index> es;
    for (element_index i = 0; i < S.order(); ++i) {
      if (S.product(i, i) == i) {
        es.push_back(i);
      }
    }
    std::vector<Element> out;
    for (auto e : es) {
      bool minimal = true;
      for (auto f : es) {
        if (f != e && S.product(f, e) == f && S.product(e, f) == f) {
          minimal = false;
          break;
        }
      }
      if (minimal) {
        out.push_back(Element(S, e));
      }
    }
    return out;
  }

  //! True iff S is simple and possesses a primitive idempotent.
  inline bool is_completely_simple(FiniteSemigroup const& S) {
    if (!S.verified()) {
      throw NotVerified("is_completely_simple");
    }
    return is_simple(S) && !primitive_idempotents(S).empty();
  }

  //! The maximal subgroup H_e = eSe of a completely simple semigroup,
  //! certified: carrier closed, e a two-sided identity on it, every member
  //! with a two-sided inverse, and a validated local table with exactly one
  //! idempotent.
  //!
  //! Holds a non-owning reference to the parent semigroup; the parent must
  //! outlive the subgroup.
  class MaximalSubgroup {
   public:
    MaximalSubgroup(FiniteSemigroup const&     parent,
                    element_index              identity,
                    std::vector<element_index> carrier,
                    std::vector<element_index> inverse,
                    FiniteSemigroup            local)
        : parent_(&parent),
          identity_(identity),
          carrier_(std::move(carrier)),
          inverse_(std::move(inverse)),
          local_(std::move(local)) {}

    FiniteSemigroup const& parent() const noexcept {
      return *parent_;
    }

    //! The idempotent e, as a parent index.
    element_index identity() const noexcept {
      return identity_;
    }

    //! Sorted parent indices of the members of eSe.
    std::vector<element_index> const& carrier() const noexcept {
      return carrier_;
    }

    //! inverse_table()[i] is the parent index of the inverse of carrier()[i].
    std::vector<element_index> const& inverse_table() const noexcept {
      return inverse_;
    }

    //! The carrier's Cayley table re-indexed 0..order-1, verified.
    FiniteSemigroup const& local_table() const noexcept {
      return local_;
    }

    element_index order() const noexcept {
      return static_cast<element_index>(carrier_.size());
    }

    //! Carrier position of a parent element, or nullopt when it is not in
    //! the subgroup.
    std::optional<element_index> position_of(element_index parent_elem) const {
      auto const it
          = std::lower_bound(carrier_.begin(), carrier_.end(), parent_elem);
      if (it == carrier_.end() || *it != parent_elem) {
        return std::nullopt;
      }
      return static_cast<element_index>(it - carrier_.begin());
    }

   private:
    FiniteSemigroup const*     parent_;
    element_index              identity_;
    std::vector<element_index> carrier_;
    std::vector<element_index> inverse_;
    FiniteSemigroup            local_;
  };

  //! Extract and certify H_e = eSe at an idempotent e of a completely
  //! simple semigroup.  Inverses are found by linear scan; a missing
  //! inverse means the complete-simplicity precondition was violated and
  //! raises NotAGroup.
  inline MaximalSubgroup maximal_subgroup(Element const& e) {
    auto const& S = e.owner();
    if (!S.verified()) {
      throw NotVerified("maximal_subgroup");
    }
    auto const ei = e.index();
    if (S.product(ei, ei) != ei) {
      throw NotIdempotent(ei);
    }
    auto const n = S.order();

    std::vector<element_index> carrier;
    {
      std::vector<bool> seen(n, false);
      for (element_index s = 0; s < n; ++s) {
        auto const c = S.product(S.product(ei, s), ei);
        if (!seen[c]) {
          seen[c] = true;
          carrier.push_back(c);
        }
      }
      std::sort(carrier.begin(), carrier.end());
    }
    auto const m = static_cast<element_index>(carrier.size());

    auto position = [&](element_index p) -> element_index {
      auto const it = std::lower_bound(carrier.begin(), carrier.end(), p);
      if (it == carrier.end() || *it != p) {
        // eSe is always closed under the parent product, so a miss here
        // means the parent table is corrupt.
        throw NotAGroup(p,
                        "element " + std::to_string(p)
                            + " escapes the carrier of eSe");
      }
      return static_cast<element_index>(it - carrier.begin());
    };

    std::vector<element_index> local(std::size_t(m) * m);
    for (element_index i = 0; i < m; ++i) {
      for (element_index j = 0; j < m; ++j) {
        local[std::size_t(i) * m + j]
            = position(S.product(carrier[i], carrier[j]));
      }
    }
    auto const epos = position(ei);

    std::vector<std::string> names(m);
    for (element_index i = 0; i < m; ++i) {
      names[i] = S.name_of(carrier[i]);
    }
    auto local_table = validate_table(
        FiniteSemigroup(m, std::move(local), std::move(names)));

    // e must be a two-sided identity on the carrier.
    for (element_index i = 0; i < m; ++i) {
      if (local_table.product(epos, i) != i
          || local_table.product(i, epos) != i) {
        throw NotAGroup(carrier[i],
                        "element " + std::to_string(carrier[i])
                            + " is not fixed by the identity");
      }
    }

    std::vector<element_index> inverse(m);
    for (element_index i = 0; i < m; ++i) {
      bool found = false;
      for (element_index j = 0; j < m; ++j) {
        if (local_table.product(i, j) == epos
            && local_table.product(j, i) == epos) {
          inverse[i] = carrier[j];
          found      = true;
          break;
        }
      }
      if (!found) {
        throw NotAGroup(carrier[i],
                        "element " + std::to_string(carrier[i])
                            + " has no two-sided inverse in eSe");
      }
    }

    element_index idempotent_count = 0;
    for (element_index i = 0; i < m; ++i) {
      if (local_table.product(i, i) == i) {
        ++idempotent_count;
      }
    }
    if (idempotent_count != 1) {
      throw NotAGroup(ei,
                      "eSe has " + std::to_string(idempotent_count)
                          + " idempotents");
    }

    return MaximalSubgroup(S, ei, std::move(carrier), std::move(inverse),
                           std::move(local_table));
  }

}  // namespace paragroup

#endif  // PARAGROUP_STRUCTURE_HPP_
