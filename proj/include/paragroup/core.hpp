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
// This file contains the Cayley-table representation of finite semigroups,
// transformations, and the element-level operations: products, powers,
// idempotent powers, and closure from transformation generators.

#ifndef PARAGROUP_CORE_HPP_
#define PARAGROUP_CORE_HPP_

#include <cassert>    // for assert
#include <cstddef>    // for size_t
#include <cstdint>    // for uint32_t, uint64_t
#include <map>        // for map
#include <stdexcept>  // for invalid_argument, runtime_error
#include <string>     // for string, to_string
#include <utility>    // for move
#include <vector>     // for vector

namespace paragroup {

  //! Elements of a finite semigroup are dense 0-based indices.
  using element_index = std::uint32_t;

  //! Base class of every error thrown by the library.
  struct SemigroupError : std::runtime_error {
    using std::runtime_error::runtime_error;
  };

  //! A Cayley table entry is not an element index.
  struct EntryOutOfRange : SemigroupError {
    EntryOutOfRange(element_index r,
                    element_index c,
                    element_index v,
                    element_index n)
        : SemigroupError("table[" + std::to_string(r) + "]["
                         + std::to_string(c) + "] = " + std::to_string(v)
                         + " is out of range for order " + std::to_string(n)),
          row(r),
          col(c),
          value(v) {}
    element_index row;
    element_index col;
    element_index value;
  };

  //! The first (lexicographically smallest) triple (i, j, k) with
  //! (s_i s_j) s_k != s_i (s_j s_k).
  struct AssociativityFailure : SemigroupError {
    AssociativityFailure(element_index i_, element_index j_, element_index k_)
        : SemigroupError("associativity fails at (" + std::to_string(i_) + ", "
                         + std::to_string(j_) + ", " + std::to_string(k_)
                         + ")"),
          i(i_),
          j(j_),
          k(k_) {}
    element_index i;
    element_index j;
    element_index k;
  };

  //! Two elements of different semigroups were combined.
  struct OwnerMismatch : SemigroupError {
    OwnerMismatch() : SemigroupError("elements belong to different semigroups") {}
  };

  //! An operation requiring a verified table was called on an unverified one.
  struct NotVerified : SemigroupError {
    explicit NotVerified(std::string const& op)
        : SemigroupError(op
                         + ": the semigroup has not been verified; call "
                           "validate_table first") {}
  };

  //! Closure enumeration hit the element cap.
  struct ClosureBudgetExceeded : SemigroupError {
    explicit ClosureBudgetExceeded(std::size_t cap_)
        : SemigroupError("closure exceeds the configured cap of "
                         + std::to_string(cap_) + " elements"),
          cap(cap_) {}
    std::size_t cap;
  };

  //! Tag for constructing a FiniteSemigroup whose table is associative by
  //! construction, skipping the O(n^3) validation pass.
  struct trusted_table_t {
    explicit trusted_table_t() = default;
  };
  inline constexpr trusted_table_t trusted_table{};

  class Element;  // forward

  //! A finite semigroup given by its full multiplication table.
  //!
  //! The table is row-major: entry (i, j) is the index of s_i * s_j, i.e.
  //! the row is the left operand.  Values are immutable after construction.
  //! A semigroup is *verified* once validate_table has certified that every
  //! entry is in range and all n^3 associativity triples hold; structure
  //! level algorithms require the verified mark.
  class FiniteSemigroup {
   public:
    //! Construct from a flat row-major table of order * order entries.
    //! The result is unverified.
    FiniteSemigroup(element_index             order,
                    std::vector<element_index> table,
                    std::vector<std::string>   names = {})
        : order_(order),
          table_(std::move(table)),
          names_(std::move(names)),
          verified_(false) {
      if (order_ == 0) {
        throw std::invalid_argument("semigroup order must be at least 1");
      }
      if (table_.size() != std::size_t(order_) * order_) {
        throw std::invalid_argument("table must contain order * order entries");
      }
      if (!names_.empty() && names_.size() != order_) {
        throw std::invalid_argument("names must contain one entry per element");
      }
    }

    //! Construct a table that is associative by construction (closures,
    //! Rees products, laws of the standard zoo).  Marked verified.
    FiniteSemigroup(trusted_table_t,
                    element_index             order,
                    std::vector<element_index> table,
                    std::vector<std::string>   names = {})
        : FiniteSemigroup(order, std::move(table), std::move(names)) {
      verified_ = true;
    }

    //! Construct from a table given as rows.
    static FiniteSemigroup
    from_rows(std::vector<std::vector<element_index>> const& rows,
              std::vector<std::string>                       names = {}) {
      if (rows.empty()) {
        throw std::invalid_argument("semigroup order must be at least 1");
      }
      auto const                 n = static_cast<element_index>(rows.size());
      std::vector<element_index> flat;
      flat.reserve(std::size_t(n) * n);
      for (auto const& row : rows) {
        if (row.size() != n) {
          throw std::invalid_argument("table rows must all have length order");
        }
        flat.insert(flat.end(), row.begin(), row.end());
      }
      return FiniteSemigroup(n, std::move(flat), std::move(names));
    }

    element_index order() const noexcept {
      return order_;
    }

    bool verified() const noexcept {
      return verified_;
    }

    //! Index of s_i * s_j.  No range check beyond an assertion.
    element_index product(element_index i, element_index j) const {
      assert(i < order_ && j < order_);
      return table_[std::size_t(i) * order_ + j];
    }

    //! Range-checked element handle (declaration; defined after Element).
    Element element(element_index i) const;

    std::vector<element_index> const& table() const noexcept {
      return table_;
    }

    //! Optional display names; empty when none were given.
    std::vector<std::string> const& names() const noexcept {
      return names_;
    }

    //! Display name of an element, falling back to its index.
    std::string name_of(element_index i) const {
      if (i < names_.size()) {
        return names_[i];
      }
      return std::to_string(i);
    }

    //! Data equality: order, table, and names.  The verified mark is a
    //! certificate, not data, and is ignored.
    friend bool operator==(FiniteSemigroup const& a, FiniteSemigroup const& b) {
      return a.order_ == b.order_ && a.table_ == b.table_
             && a.names_ == b.names_;
    }

    friend bool operator!=(FiniteSemigroup const& a, FiniteSemigroup const& b) {
      return !(a == b);
    }

    friend FiniteSemigroup validate_table(FiniteSemigroup S);

   private:
    element_index              order_;
    std::vector<element_index> table_;
    std::vector<std::string>   names_;
    bool                       verified_;
  };

  //! An element of a fixed FiniteSemigroup.  Identity of the owner is the
  //! identity of the object: elements of two distinct (even equal-valued)
  //! semigroups never mix.
  class Element {
   public:
    Element(FiniteSemigroup const& owner, element_index index)
        : owner_(&owner), index_(index) {
      assert(index_ < owner.order());
    }

    element_index index() const noexcept {
      return index_;
    }

    FiniteSemigroup const& owner() const noexcept {
      return *owner_;
    }

    friend bool operator==(Element const& a, Element const& b) noexcept {
      return a.owner_ == b.owner_ && a.index_ == b.index_;
    }

    friend bool operator!=(Element const& a, Element const& b) noexcept {
      return !(a == b);
    }

    friend bool operator<(Element const& a, Element const& b) noexcept {
      return a.index_ < b.index_;
    }

   private:
    FiniteSemigroup const* owner_;
    element_index          index_;
  };

  inline Element FiniteSemigroup::element(element_index i) const {
    if (i >= order_) {
      throw std::invalid_argument("element index " + std::to_string(i)
                                  + " is out of range for order "
                                  + std::to_string(order_));
    }
    return Element(*this, i);
  }

  //! Check every entry and all n^3 associativity triples; return the table
  //! marked verified.  Reports the first violation in lexicographic order.
  inline FiniteSemigroup validate_table(FiniteSemigroup S) {
    auto const n = S.order();
    for (element_index i = 0; i < n; ++i) {
      for (element_index j = 0; j < n; ++j) {
        if (S.product(i, j) >= n) {
          throw EntryOutOfRange(i, j, S.product(i, j), n);
        }
      }
    }
    for (element_index i = 0; i < n; ++i) {
      for (element_index j = 0; j < n; ++j) {
        auto const ij = S.product(i, j);
        for (element_index k = 0; k < n; ++k) {
          if (S.product(ij, k) != S.product(i, S.product(j, k))) {
            throw AssociativityFailure(i, j, k);
          }
        }
      }
    }
    S.verified_ = true;
    return S;
  }

  //! Product of two elements of the same semigroup.
  inline Element product(Element const& a, Element const& b) {
    if (&a.owner() != &b.owner()) {
      throw OwnerMismatch();
    }
    return Element(a.owner(), a.owner().product(a.index(), b.index()));
  }

  inline Element operator*(Element const& a, Element const& b) {
    return product(a, b);
  }

  //! a^k for k >= 1, by binary exponentiation (powers of a single element
  //! commute, so the usual square-and-multiply applies).
  inline Element power(Element const& a, std::uint64_t k) {
    if (k == 0) {
      throw std::invalid_argument("power: the exponent must be at least 1");
    }
    auto const&   S      = a.owner();
    element_index base   = a.index();
    element_index result = 0;
    bool          have   = false;
    while (k != 0) {
      if (k & 1) {
        result = have ? S.product(result, base) : base;
        have   = true;
      }
      k >>= 1;
      if (k != 0) {
        base = S.product(base, base);
      }
    }
    return Element(S, result);
  }

  //! The unique idempotent among the powers of a.
  //!
  //! The sequence a, a^2, a^3, ... is eventually periodic and its cycle is a
  //! cyclic group, so it contains exactly one idempotent.  Floyd cycle
  //! detection finds an element of the cycle in O(tail + cycle) time without
  //! auxiliary storage; the cycle is then scanned for e with e * e = e.
  inline Element idempotent_power(Element const& a) {
    auto const& S = a.owner();
    auto step = [&](element_index x) { return S.product(x, a.index()); };
    element_index tortoise = a.index();
    element_index hare     = step(a.index());
    while (tortoise != hare) {
      tortoise = step(tortoise);
      hare     = step(step(hare));
    }
    element_index x = tortoise;
    do {
      if (S.product(x, x) == x) {
        return Element(S, x);
      }
      x = step(x);
    } while (x != tortoise);
    throw SemigroupError(
        "no idempotent among the powers; the table is not associative");
  }

  //! All idempotents of S, ascending by index.
  inline std::vector<Element> idempotents(FiniteSemigroup const& S) {
    if (!S.verified()) {
      throw NotVerified("idempotents");
    }
    std::vector<Element> out;
    for (element_index i = 0; i < S.order(); ++i) {
      if (S.product(i, i) == i) {
        out.push_back(Element(S, i));
      }
    }
    return out;
  }

  //! A total map {0, ..., k-1} -> {0, ..., k-1}, the generator representation
  //! used to build concrete semigroups.
  class Transformation {
   public:
    explicit Transformation(std::vector<element_index> images)
        : images_(std::move(images)) {
      if (images_.empty()) {
        throw std::invalid_argument("transformation degree must be at least 1");
      }
      for (auto v : images_) {
        if (v >= images_.size()) {
          throw std::invalid_argument("transformation image " + std::to_string(v)
                                      + " is out of range for degree "
                                      + std::to_string(images_.size()));
        }
      }
    }

    element_index degree() const noexcept {
      return static_cast<element_index>(images_.size());
    }

    element_index operator[](element_index i) const {
      assert(i < images_.size());
      return images_[i];
    }

    std::vector<element_index> const& images() const noexcept {
      return images_;
    }

    //! Display form, e.g. "[1,0,2]".
    std::string to_string() const {
      std::string out = "[";
      for (std::size_t i = 0; i < images_.size(); ++i) {
        if (i != 0) {
          out += ',';
        }
        out += std::to_string(images_[i]);
      }
      out += ']';
      return out;
    }

    friend bool operator==(Transformation const& t, Transformation const& u) {
      return t.images_ == u.images_;
    }

    friend bool operator!=(Transformation const& t, Transformation const& u) {
      return !(t == u);
    }

    friend bool operator<(Transformation const& t, Transformation const& u) {
      return t.images_ < u.images_;
    }

   private:
    std::vector<element_index> images_;
  };

  //! Composition (t o u)(i) = t(u(i)); u acts first.
  inline Transformation compose(Transformation const& t,
                                Transformation const& u) {
    if (t.degree() != u.degree()) {
      throw std::invalid_argument("compose: transformation degrees differ");
    }
    std::vector<element_index> images(t.degree());
    for (element_index i = 0; i < t.degree(); ++i) {
      images[i] = t[u[i]];
    }
    return Transformation(std::move(images));
  }

  //! Result of closure_from_generators: the Cayley table of the generated
  //! semigroup and the transformation realizing each element index.
  struct GeneratedSemigroup {
    FiniteSemigroup             semigroup;
    std::vector<Transformation> elements;
  };

  //! Breadth-first closure of a set of transformations under composition.
  //!
  //! Elements are ordered by discovery, the (distinct) generators first in
  //! the given order; products u * g are enumerated with u in discovery
  //! order and g in generator order, so the result is deterministic.  The
  //! multiplication is composition: table[i][j] realizes elements[i] o
  //! elements[j].  The returned table is verified by construction.
  inline GeneratedSemigroup
  closure_from_generators(std::vector<Transformation> const& generators,
                          std::size_t                        max_order = 10000) {
    if (generators.empty()) {
      throw std::invalid_argument(
          "closure_from_generators: at least one generator is required");
    }
    auto const degree = generators.front().degree();
    for (auto const& g : generators) {
      if (g.degree() != degree) {
        throw std::invalid_argument(
            "closure_from_generators: generators must share one degree");
      }
    }

    std::vector<Transformation>                        elements;
    std::map<std::vector<element_index>, element_index> index_of;
    auto add = [&](Transformation const& t) {
      if (index_of.count(t.images()) != 0) {
        return;
      }
      if (elements.size() >= max_order) {
        throw ClosureBudgetExceeded(max_order);
      }
      index_of.emplace(t.images(),
                       static_cast<element_index>(elements.size()));
      elements.push_back(t);
    };

    for (auto const& g : generators) {
      add(g);
    }
    std::vector<Transformation> const gens = elements;
    for (std::size_t pos = 0; pos < elements.size(); ++pos) {
      for (auto const& g : gens) {
        add(compose(elements[pos], g));
      }
    }

    auto const                 n = static_cast<element_index>(elements.size());
    std::vector<element_index> table(std::size_t(n) * n);
    std::vector<std::string>   names(n);
    for (element_index i = 0; i < n; ++i) {
      names[i] = elements[i].to_string();
      for (element_index j = 0; j < n; ++j) {
        table[std::size_t(i) * n + j]
            = index_of.at(compose(elements[i], elements[j]).images());
      }
    }
    return GeneratedSemigroup{
        FiniteSemigroup(trusted_table, n, std::move(table), std::move(names)),
        std::move(elements)};
  }

}  // namespace paragroup

#endif  // PARAGROUP_CORE_HPP_
