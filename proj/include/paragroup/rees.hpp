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
// This file contains Rees matrix semigroups (paragroups) [X,H,Y]_sigma,
// the decomposition of a completely simple semigroup into one, both
// direction maps of the isomorphism, exhaustive verification, and sandwich
// matrix normalization.

#ifndef PARAGROUP_REES_HPP_
#define PARAGROUP_REES_HPP_

#include <algorithm>  // for lower_bound
#include <cstddef>    // for size_t
#include <cstdint>    // for uint64_t
#include <optional>   // for optional
#include <string>     // for to_string
#include <utility>    // for move
#include <vector>     // for vector

#include "core.hpp"
#include "structure.hpp"

namespace paragroup {

  //! A triple component does not fit the shape of its Rees matrix semigroup.
  struct ComponentOutOfRange : SemigroupError {
    explicit ComponentOutOfRange(std::string const& what_)
        : SemigroupError(what_) {}
  };

  //! to_cayley would materialize a table above the size budget.
  struct SizeBudgetExceeded : SemigroupError {
    SizeBudgetExceeded(std::uint64_t size_, std::uint64_t budget_)
        : SemigroupError("order " + std::to_string(size_)
                         + " exceeds the size budget of "
                         + std::to_string(budget_)),
          size(size_),
          budget(budget_) {}
    std::uint64_t size;
    std::uint64_t budget;
  };

  //! decompose was called on a semigroup that is not completely simple;
  //! carries the witness.
  struct NotCompletelySimple : SemigroupError {
    explicit NotCompletelySimple(element_index witness)
        : SemigroupError("not completely simple: element "
                         + std::to_string(witness)
                         + " generates a proper two-sided ideal"),
          proper_ideal_element(witness),
          missing_primitive(false) {}
    NotCompletelySimple()
        : SemigroupError("not completely simple: no primitive idempotent"),
          missing_primitive(true) {}
    std::optional<element_index> proper_ideal_element;
    bool                         missing_primitive;
  };

  //! The inverse-map formula left the expected index sets; the decomposition
  //! data are corrupt.
  struct InverseNotFound : SemigroupError {
    explicit InverseNotFound(std::string const& what_)
        : SemigroupError(what_) {}
  };

  //! A finite group certified from its Cayley table: a unique idempotent
  //! that is a two-sided identity, and a two-sided inverse for each element.
  class Group {
   public:
    //! Certify a table as a group.  Runs validate_table when the table is
    //! not yet verified; throws NotAGroup when any group axiom fails.
    static Group certify(FiniteSemigroup table) {
      if (!table.verified()) {
        table = validate_table(std::move(table));
      }
      auto const n = table.order();

      element_index identity = n;
      element_index count    = 0;
      for (element_index i = 0; i < n; ++i) {
        if (table.product(i, i) == i) {
          if (count == 0) {
            identity = i;
          }
          ++count;
        }
      }
      if (count != 1) {
        throw NotAGroup(identity == n ? 0 : identity,
                        "the table has " + std::to_string(count)
                            + " idempotents, a group has exactly 1");
      }
      for (element_index i = 0; i < n; ++i) {
        if (table.product(identity, i) != i || table.product(i, identity) != i) {
          throw NotAGroup(i,
                          "element " + std::to_string(i)
                              + " is not fixed by the unique idempotent");
        }
      }
      std::vector<element_index> inverses(n);
      for (element_index i = 0; i < n; ++i) {
        bool found = false;
        for (element_index j = 0; j < n; ++j) {
          if (table.product(i, j) == identity
              && table.product(j, i) == identity) {
            inverses[i] = j;
            found       = true;
            break;
          }
        }
        if (!found) {
          throw NotAGroup(i,
                          "element " + std::to_string(i)
                              + " has no two-sided inverse");
        }
      }
      return Group(std::move(table), identity, std::move(inverses));
    }

    element_index order() const noexcept {
      return table_.order();
    }

    element_index identity() const noexcept {
      return identity_;
    }

    element_index product(element_index a, element_index b) const {
      return table_.product(a, b);
    }

    element_index inverse(element_index a) const {
      assert(a < inverses_.size());
      return inverses_[a];
    }

    FiniteSemigroup const& table() const noexcept {
      return table_;
    }

    friend bool operator==(Group const& a, Group const& b) {
      return a.table_ == b.table_;
    }

   private:
    Group(FiniteSemigroup            table,
          element_index              identity,
          std::vector<element_index> inverses)
        : table_(std::move(table)),
          identity_(identity),
          inverses_(std::move(inverses)) {}

    FiniteSemigroup            table_;
    element_index              identity_;
    std::vector<element_index> inverses_;
  };

  //! An element (x, h, y) of X x H x Y; h indexes the group carrier.
  struct ReesTriple {
    element_index x;
    element_index h;
    element_index y;

    friend bool operator==(ReesTriple const& a, ReesTriple const& b) noexcept {
      return a.x == b.x && a.h == b.h && a.y == b.y;
    }

    friend bool operator!=(ReesTriple const& a, ReesTriple const& b) noexcept {
      return !(a == b);
    }
  };

  //! The Rees product of a group H over index sets X and Y relative to a
  //! sandwich matrix sigma : Y x X -> H, with the operation
  //!
  //!   (x, h, y) * (x', h', y') = (x, h sigma(y, x') h', y').
  //!
  //! Triples are enumerated x-major, then group carrier position, then y;
  //! that order is part of the file-format contract.
  class ReesMatrixSemigroup {
   public:
    //! sigma is flat row-major with y_size rows of x_size entries.
    ReesMatrixSemigroup(Group                      group,
                        element_index              x_size,
                        element_index              y_size,
                        std::vector<element_index> sigma)
        : group_(std::move(group)),
          x_size_(x_size),
          y_size_(y_size),
          sigma_(std::move(sigma)) {
      if (x_size_ == 0 || y_size_ == 0) {
        throw std::invalid_argument("index sets must not be empty");
      }
      if (sigma_.size() != std::size_t(y_size_) * x_size_) {
        throw std::invalid_argument(
            "sigma must have y_size rows of x_size entries");
      }
      for (auto v : sigma_) {
        if (v >= group_.order()) {
          throw std::invalid_argument("sigma entry " + std::to_string(v)
                                      + " is not a group element");
        }
      }
    }

    Group const& group() const noexcept {
      return group_;
    }

    element_index x_size() const noexcept {
      return x_size_;
    }

    element_index y_size() const noexcept {
      return y_size_;
    }

    element_index sigma(element_index y, element_index x) const {
      assert(y < y_size_ && x < x_size_);
      return sigma_[std::size_t(y) * x_size_ + x];
    }

    std::vector<element_index> const& sigma_flat() const noexcept {
      return sigma_;
    }

    std::uint64_t order() const noexcept {
      return std::uint64_t(x_size_) * group_.order() * y_size_;
    }

    std::uint64_t triple_index(ReesTriple const& t) const noexcept {
      return (std::uint64_t(t.x) * group_.order() + t.h) * y_size_ + t.y;
    }

    ReesTriple triple_at(std::uint64_t i) const noexcept {
      auto const y = static_cast<element_index>(i % y_size_);
      i /= y_size_;
      auto const h = static_cast<element_index>(i % group_.order());
      auto const x = static_cast<element_index>(i / group_.order());
      return ReesTriple{x, h, y};
    }

    bool contains(ReesTriple const& t) const noexcept {
      return t.x < x_size_ && t.h < group_.order() && t.y < y_size_;
    }

    friend bool operator==(ReesMatrixSemigroup const& a,
                           ReesMatrixSemigroup const& b) {
      return a.group_ == b.group_ && a.x_size_ == b.x_size_
             && a.y_size_ == b.y_size_ && a.sigma_ == b.sigma_;
    }

   private:
    Group                      group_;
    element_index              x_size_;
    element_index              y_size_;
    std::vector<element_index> sigma_;
  };

  //! (x, h, y) * (x', h', y') = (x, h sigma(y, x') h', y').
  inline ReesTriple rees_product(ReesMatrixSemigroup const& R,
                                 ReesTriple const&          t,
                                 ReesTriple const&          u) {
    if (!R.contains(t) || !R.contains(u)) {
      throw ComponentOutOfRange("triple component out of range for shape ("
                                + std::to_string(R.x_size()) + ", "
                                + std::to_string(R.group().order()) + ", "
                                + std::to_string(R.y_size()) + ")");
    }
    auto const& H = R.group();
    auto const  h = H.product(H.product(t.h, R.sigma(t.y, u.x)), u.h);
    return ReesTriple{t.x, h, u.y};
  }

  //! Materialize the full Cayley table of R, validate it, and name each
  //! element "(x,h,y)".  Triples are enumerated in the documented order.
  inline FiniteSemigroup to_cayley(ReesMatrixSemigroup const& R,
                                   std::uint64_t max_order = 10000) {
    if (R.order() > max_order) {
      throw SizeBudgetExceeded(R.order(), max_order);
    }
    auto const n = static_cast<element_index>(R.order());

    std::vector<std::string> names(n);
    for (element_index i = 0; i < n; ++i) {
      auto const t = R.triple_at(i);
      names[i]     = "(" + std::to_string(t.x) + "," + std::to_string(t.h) + ","
                 + std::to_string(t.y) + ")";
    }

    std::vector<element_index> table(std::size_t(n) * n);
    for (element_index i = 0; i < n; ++i) {
      auto const t = R.triple_at(i);
      for (element_index j = 0; j < n; ++j) {
        table[std::size_t(i) * n + j] = static_cast<element_index>(
            R.triple_index(rees_product(R, t, R.triple_at(j))));
      }
    }
    return validate_table(
        FiniteSemigroup(n, std::move(table), std::move(names)));
  }

  //! The decomposition of a completely simple semigroup S at its
  //! lowest-index primitive idempotent e:
  //!
  //!   X_e = Se n E,  Y_e = eS n E,  H_e = eSe,  sigma(y, x) = yx,
  //!
  //! with the forward map (x, h, y) -> x h y and the backward map
  //! s -> (s m^-1, m, m^-1 s) where m = ese.  Holds a non-owning reference
  //! to the source; the source must outlive the decomposition.
  class ReesDecomposition {
   public:
    ReesDecomposition(FiniteSemigroup const&     source,
                      MaximalSubgroup            h_e,
                      std::vector<element_index> x_e,
                      std::vector<element_index> y_e,
                      ReesMatrixSemigroup        paragroup,
                      std::vector<element_index> forward,
                      std::vector<ReesTriple>    backward)
        : source_(&source),
          h_e_(std::move(h_e)),
          x_e_(std::move(x_e)),
          y_e_(std::move(y_e)),
          paragroup_(std::move(paragroup)),
          forward_(std::move(forward)),
          backward_(std::move(backward)) {}

    FiniteSemigroup const& source() const noexcept {
      return *source_;
    }

    //! The chosen idempotent, as an element of the source.
    Element e() const {
      return Element(*source_, h_e_.identity());
    }

    //! Sorted source indices of Se n E.
    std::vector<element_index> const& x_e() const noexcept {
      return x_e_;
    }

    //! Sorted source indices of eS n E.
    std::vector<element_index> const& y_e() const noexcept {
      return y_e_;
    }

    MaximalSubgroup const& h_e() const noexcept {
      return h_e_;
    }

    //! The paragroup [X_e, H_e, Y_e]_sigma over the local group of H_e.
    ReesMatrixSemigroup const& paragroup() const noexcept {
      return paragroup_;
    }

    //! forward()[i] is the source element of the i-th triple.
    std::vector<element_index> const& forward() const noexcept {
      return forward_;
    }

    //! backward()[s] is the triple of source element s.
    std::vector<ReesTriple> const& backward() const noexcept {
      return backward_;
    }

   private:
    FiniteSemigroup const*     source_;
    MaximalSubgroup            h_e_;
    std::vector<element_index> x_e_;
    std::vector<element_index> y_e_;
    ReesMatrixSemigroup        paragroup_;
    std::vector<element_index> forward_;
    std::vector<ReesTriple>    backward_;
  };

  //! R(x, h, y) = x h y, computed in the source semigroup.
  inline Element rees_map(ReesDecomposition const& D, ReesTriple const& t) {
    if (!D.paragroup().contains(t)) {
      throw ComponentOutOfRange("triple component out of range for shape ("
                                + std::to_string(D.paragroup().x_size()) + ", "
                                + std::to_string(D.paragroup().group().order())
                                + ", " + std::to_string(D.paragroup().y_size())
                                + ")");
    }
    auto const& S = D.source();
    auto const  x = D.x_e()[t.x];
    auto const  h = D.h_e().carrier()[t.h];
    auto const  y = D.y_e()[t.y];
    return Element(S, S.product(S.product(x, h), y));
  }

  //! R^-1(s) = (s m^-1, m, m^-1 s) with m = ese and m^-1 taken in H_e.
  inline ReesTriple rees_inverse_map(ReesDecomposition const& D,
                                     Element const&           s) {
    auto const& S = D.source();
    if (&s.owner() != &S) {
      throw OwnerMismatch();
    }
    auto const e = D.h_e().identity();
    auto const m = S.product(S.product(e, s.index()), e);

    auto const mpos = D.h_e().position_of(m);
    if (!mpos) {
      throw InverseNotFound("ese = " + std::to_string(m)
                            + " is outside the maximal subgroup carrier");
    }
    auto const minv = D.h_e().inverse_table()[*mpos];

    auto find = [](std::vector<element_index> const& set, element_index v)
        -> std::optional<element_index> {
      auto const it = std::lower_bound(set.begin(), set.end(), v);
      if (it == set.end() || *it != v) {
        return std::nullopt;
      }
      return static_cast<element_index>(it - set.begin());
    };

    auto const xpos = find(D.x_e(), S.product(s.index(), minv));
    if (!xpos) {
      throw InverseNotFound("s (ese)^-1 lands outside X_e");
    }
    auto const ypos = find(D.y_e(), S.product(minv, s.index()));
    if (!ypos) {
      throw InverseNotFound("(ese)^-1 s lands outside Y_e");
    }
    return ReesTriple{*xpos, *mpos, *ypos};
  }

  //! Outcome of exhaustive decomposition checking; failures are data here,
  //! not exceptions.
  struct DecompositionReport {
    bool bijective       = false;
    bool homomorphic     = false;
    bool size_consistent = false;

    bool pass() const noexcept {
      return bijective && homomorphic && size_consistent;
    }
  };

  //! Check that `forward` realizes an isomorphism from the triples of R
  //! onto `source`: consistent sizes, a bijection, and a homomorphism on
  //! all pairs.  Tolerates malformed data by failing the reports instead
  //! of throwing.
  inline DecompositionReport
  verify_rees_isomorphism(FiniteSemigroup const&            source,
                          ReesMatrixSemigroup const&        R,
                          std::vector<element_index> const& forward) {
    DecompositionReport report;
    auto const          n = source.order();

    report.size_consistent = (R.order() == n) && (forward.size() == R.order());

    bool in_range = true;
    for (auto v : forward) {
      if (v >= n) {
        in_range = false;
        break;
      }
    }
    if (in_range && forward.size() == n) {
      std::vector<bool> seen(n, false);
      bool              bij = true;
      for (auto v : forward) {
        if (seen[v]) {
          bij = false;
          break;
        }
        seen[v] = true;
      }
      report.bijective = bij;
    }

    if (report.size_consistent && in_range) {
      bool hom = true;
      for (std::uint64_t i = 0; i < forward.size() && hom; ++i) {
        auto const t = R.triple_at(i);
        for (std::uint64_t j = 0; j < forward.size(); ++j) {
          auto const tu = rees_product(R, t, R.triple_at(j));
          if (forward[static_cast<std::size_t>(R.triple_index(tu))]
              != source.product(forward[static_cast<std::size_t>(i)],
                                forward[static_cast<std::size_t>(j)])) {
            hom = false;
            break;
          }
        }
      }
      report.homomorphic = hom;
    }
    return report;
  }

  //! Exhaustive verification of a decomposition: the two maps are mutually
  //! inverse bijections, the forward map is a homomorphism on all pairs,
  //! and |X_e| |H_e| |Y_e| = |S|.
  inline DecompositionReport verify_decomposition(ReesDecomposition const& D) {
    auto report = verify_rees_isomorphism(D.source(), D.paragroup(),
                                          D.forward());
    if (report.bijective) {
      auto const& R = D.paragroup();
      for (element_index s = 0; s < D.source().order(); ++s) {
        auto const t = D.backward()[s];
        if (!R.contains(t)
            || D.forward()[static_cast<std::size_t>(R.triple_index(t))] != s) {
          report.bijective = false;
          break;
        }
      }
    }
    return report;
  }

  //! Decompose a completely simple semigroup at its lowest-index primitive
  //! idempotent.  All invariants of the result are certified before return.
  inline ReesDecomposition decompose(FiniteSemigroup const& S) {
    if (!S.verified()) {
      throw NotVerified("decompose");
    }
    if (auto witness = detail::proper_ideal_witness(S)) {
      throw NotCompletelySimple(*witness);
    }
    auto const primitive = primitive_idempotents(S);
    if (primitive.empty()) {
      throw NotCompletelySimple();
    }
    auto const e  = primitive.front();
    auto const ei = e.index();
    auto const n  = S.order();

    auto collect = [&](bool left) {
      std::vector<bool> seen(n, false);
      for (element_index s = 0; s < n; ++s) {
        auto const v = left ? S.product(s, ei) : S.product(ei, s);
        if (S.product(v, v) == v) {
          seen[v] = true;
        }
      }
      std::vector<element_index> out;
      for (element_index v = 0; v < n; ++v) {
        if (seen[v]) {
          out.push_back(v);
        }
      }
      return out;
    };
    auto const x_e = collect(true);   // Se n E
    auto const y_e = collect(false);  // eS n E

    auto h_e   = maximal_subgroup(e);
    auto group = Group::certify(h_e.local_table());

    std::vector<element_index> sigma;
    sigma.reserve(std::size_t(y_e.size()) * x_e.size());
    for (auto y : y_e) {
      for (auto x : x_e) {
        auto const pos = h_e.position_of(S.product(y, x));
        if (!pos) {
          throw InverseNotFound(
              "sandwich entry yx is outside the maximal subgroup carrier");
        }
        sigma.push_back(*pos);
      }
    }

    ReesMatrixSemigroup paragroup(
        std::move(group), static_cast<element_index>(x_e.size()),
        static_cast<element_index>(y_e.size()), std::move(sigma));

    if (paragroup.order() != n) {
      throw SemigroupError("decomposition size |X| |H| |Y| = "
                           + std::to_string(paragroup.order())
                           + " does not match the order "
                           + std::to_string(n));
    }

    std::vector<element_index> forward(n);
    for (element_index i = 0; i < n; ++i) {
      auto const t = paragroup.triple_at(i);
      forward[i]   = S.product(
          S.product(x_e[t.x], h_e.carrier()[t.h]), y_e[t.y]);
    }

    ReesDecomposition result(S, std::move(h_e), x_e, y_e,
                             std::move(paragroup), std::move(forward), {});
    std::vector<ReesTriple> backward;
    backward.reserve(n);
    for (element_index s = 0; s < n; ++s) {
      backward.push_back(rees_inverse_map(result, Element(S, s)));
    }
    result = ReesDecomposition(S, result.h_e(), result.x_e(), result.y_e(),
                               result.paragroup(), result.forward(),
                               std::move(backward));
    if (!verify_decomposition(result).pass()) {
      throw SemigroupError(
          "decomposition certification failed; the table is corrupt");
    }
    return result;
  }

  // Guard against decomposing a temporary: the result references the source.
  ReesDecomposition decompose(FiniteSemigroup&&) = delete;

  //! A sandwich-normalized copy of a Rees matrix semigroup, with the
  //! triple-to-triple bijection witnessing the isomorphism (indexed in the
  //! documented enumeration order).
  struct NormalizedRees {
    ReesMatrixSemigroup        rees;
    std::vector<element_index> witness;
  };

  //! Normalize the sandwich matrix so that row 0 and column 0 are identity,
  //! using basepoints x0 = 0, y0 = 0:
  //!
  //!   sigma'(y, x) = g(y)^-1 sigma(y, x) f(x)^-1
  //!
  //! with f(x) = sigma(0, x) and g(y) = sigma(y, 0) sigma(0, 0)^-1.  The
  //! witness maps (x, h, y) to (x, f(x) h g(y), y) and is certified to be
  //! an isomorphism before return.
  inline NormalizedRees normalize_sandwich(ReesMatrixSemigroup const& R) {
    auto const& H = R.group();

    std::vector<element_index> f(R.x_size());
    for (element_index x = 0; x < R.x_size(); ++x) {
      f[x] = R.sigma(0, x);
    }
    std::vector<element_index> g(R.y_size());
    for (element_index y = 0; y < R.y_size(); ++y) {
      g[y] = H.product(R.sigma(y, 0), H.inverse(R.sigma(0, 0)));
    }

    std::vector<element_index> sigma;
    sigma.reserve(std::size_t(R.y_size()) * R.x_size());
    for (element_index y = 0; y < R.y_size(); ++y) {
      for (element_index x = 0; x < R.x_size(); ++x) {
        sigma.push_back(H.product(
            H.product(H.inverse(g[y]), R.sigma(y, x)), H.inverse(f[x])));
      }
    }
    ReesMatrixSemigroup normalized(H, R.x_size(), R.y_size(),
                                   std::move(sigma));

    auto const                 n = static_cast<std::size_t>(R.order());
    std::vector<element_index> witness(n);
    for (std::size_t i = 0; i < n; ++i) {
      auto t = R.triple_at(i);
      t.h    = H.product(H.product(f[t.x], t.h), g[t.y]);
      witness[i] = static_cast<element_index>(normalized.triple_index(t));
    }

    // Certify: a bijection carrying the product of R to the product of the
    // normalized copy, on all pairs.
    {
      std::vector<bool> seen(n, false);
      for (auto w : witness) {
        if (w >= n || seen[w]) {
          throw SemigroupError("sandwich normalization witness is not a "
                               "bijection; the group certificate is corrupt");
        }
        seen[w] = true;
      }
      for (std::size_t i = 0; i < n; ++i) {
        auto const t = R.triple_at(i);
        for (std::size_t j = 0; j < n; ++j) {
          auto const lhs
              = witness[static_cast<std::size_t>(R.triple_index(
                  rees_product(R, t, R.triple_at(j))))];
          auto const rhs = normalized.triple_index(
              rees_product(normalized, normalized.triple_at(witness[i]),
                           normalized.triple_at(witness[j])));
          if (lhs != rhs) {
            throw SemigroupError("sandwich normalization witness is not a "
                                 "homomorphism; the group certificate is "
                                 "corrupt");
          }
        }
      }
    }
    return NormalizedRees{std::move(normalized), std::move(witness)};
  }

}  // namespace paragroup

#endif  // PARAGROUP_REES_HPP_
