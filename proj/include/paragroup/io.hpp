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
// This file contains the JSON interchange formats: Cayley-table files
// (kind "cayley"), Rees specification files (kind "rees"), and
// decomposition files.  Writers emit canonical bytes (fixed key order,
// compact layout, trailing newline); readers reject unknown fields.

#ifndef PARAGROUP_IO_HPP_
#define PARAGROUP_IO_HPP_

#include <cstdint>    // for int64_t, uint64_t
#include <string>     // for string, to_string
#include <utility>    // for move
#include <vector>     // for vector

#include "json.hpp"

#include "core.hpp"
#include "rees.hpp"

namespace paragroup::io {

  //! A file failed to parse or violates its format invariants; the message
  //! names the offending field.
  struct ParseError : SemigroupError {
    using SemigroupError::SemigroupError;
  };

  namespace detail {
    using json         = nlohmann::json;
    using ordered_json = nlohmann::ordered_json;

    inline json parse_text(std::string const& text) {
      try {
        return json::parse(text);
      } catch (json::parse_error const& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
      }
    }

    inline void expect_object(json const& v, std::string const& path) {
      if (!v.is_object()) {
        throw ParseError(path + ": expected an object");
      }
    }

    inline void require_field(json const& v,
                              std::string const& path,
                              std::string const& field) {
      if (!v.contains(field)) {
        throw ParseError(path + ": missing field \"" + field + "\"");
      }
    }

    template <typename Allowed>
    void reject_unknown(json const& v,
                        Allowed const&     allowed,
                        std::string const& path) {
      for (auto const& item : v.items()) {
        bool known = false;
        for (auto const* name : allowed) {
          if (item.key() == name) {
            known = true;
            break;
          }
        }
        if (!known) {
          throw ParseError(path + ": unknown field \"" + item.key() + "\"");
        }
      }
    }

    inline std::uint64_t get_uint(json const& v, std::string const& path) {
      if (v.is_number_unsigned()) {
        return v.get<std::uint64_t>();
      }
      if (v.is_number_integer()) {
        auto const i = v.get<std::int64_t>();
        if (i < 0) {
          throw ParseError(path + ": must be non-negative");
        }
        return static_cast<std::uint64_t>(i);
      }
      throw ParseError(path + ": must be an integer");
    }

    inline element_index get_index(json const& v, std::string const& path) {
      auto const u = get_uint(v, path);
      if (u > 0xFFFFFFFFULL) {
        throw ParseError(path + ": value " + std::to_string(u)
                         + " does not fit an element index");
      }
      return static_cast<element_index>(u);
    }

    inline std::vector<element_index> get_index_array(json const& v,
                                                      std::string const& path) {
      if (!v.is_array()) {
        throw ParseError(path + ": expected an array");
      }
      std::vector<element_index> out;
      out.reserve(v.size());
      for (std::size_t i = 0; i < v.size(); ++i) {
        out.push_back(get_index(v[i], path + "[" + std::to_string(i) + "]"));
      }
      return out;
    }

    // Shared by top-level Cayley files and embedded group objects.
    inline FiniteSemigroup read_semigroup_object(json const& v,
                                                 std::string const& path) {
      expect_object(v, path);
      require_field(v, path, "kind");
      if (!v["kind"].is_string() || v["kind"].get<std::string>() != "cayley") {
        throw ParseError(path + ".kind: expected \"cayley\"");
      }
      static constexpr char const* allowed[] = {"kind", "order", "names",
                                                "table"};
      reject_unknown(v, allowed, path);
      require_field(v, path, "order");
      auto const order = get_index(v["order"], path + ".order");
      if (order == 0) {
        throw ParseError(path + ".order: must be at least 1");
      }

      require_field(v, path, "table");
      auto const& table = v["table"];
      if (!table.is_array() || table.size() != order) {
        throw ParseError(path + ".table: expected " + std::to_string(order)
                         + " rows");
      }
      std::vector<element_index> flat;
      flat.reserve(std::size_t(order) * order);
      for (element_index i = 0; i < order; ++i) {
        auto const row_path = path + ".table[" + std::to_string(i) + "]";
        auto const& row     = table[i];
        if (!row.is_array() || row.size() != order) {
          throw ParseError(row_path + ": expected " + std::to_string(order)
                           + " entries");
        }
        for (element_index j = 0; j < order; ++j) {
          flat.push_back(
              get_index(row[j], row_path + "[" + std::to_string(j) + "]"));
        }
      }

      std::vector<std::string> names;
      if (v.contains("names")) {
        auto const& ns = v["names"];
        if (!ns.is_array() || ns.size() != order) {
          throw ParseError(path + ".names: expected " + std::to_string(order)
                           + " strings");
        }
        names.reserve(order);
        for (element_index i = 0; i < order; ++i) {
          if (!ns[i].is_string()) {
            throw ParseError(path + ".names[" + std::to_string(i)
                             + "]: expected a string");
          }
          names.push_back(ns[i].get<std::string>());
        }
      }
      return FiniteSemigroup(order, std::move(flat), std::move(names));
    }

    inline ordered_json semigroup_object(FiniteSemigroup const& S) {
      ordered_json v;
      v["kind"]  = "cayley";
      v["order"] = S.order();
      if (!S.names().empty()) {
        v["names"] = S.names();
      }
      auto rows = ordered_json::array();
      for (element_index i = 0; i < S.order(); ++i) {
        auto row = ordered_json::array();
        for (element_index j = 0; j < S.order(); ++j) {
          row.push_back(S.product(i, j));
        }
        rows.push_back(std::move(row));
      }
      v["table"] = std::move(rows);
      return v;
    }

    inline std::vector<element_index>
    read_sigma(json const& v,
               element_index y_size,
               element_index x_size,
               element_index group_order,
               std::string const& path) {
      if (!v.is_array() || v.size() != y_size) {
        throw ParseError(path + ": expected " + std::to_string(y_size)
                         + " rows");
      }
      std::vector<element_index> sigma;
      sigma.reserve(std::size_t(y_size) * x_size);
      for (element_index y = 0; y < y_size; ++y) {
        auto const  row_path = path + "[" + std::to_string(y) + "]";
        auto const& row      = v[y];
        if (!row.is_array() || row.size() != x_size) {
          throw ParseError(row_path + ": expected " + std::to_string(x_size)
                           + " entries");
        }
        for (element_index x = 0; x < x_size; ++x) {
          auto const entry_path = row_path + "[" + std::to_string(x) + "]";
          auto const entry      = get_index(row[x], entry_path);
          if (entry >= group_order) {
            throw ParseError(entry_path + ": entry " + std::to_string(entry)
                             + " is not an element of the group (order "
                             + std::to_string(group_order) + ")");
          }
          sigma.push_back(entry);
        }
      }
      return sigma;
    }

    inline ordered_json sigma_rows(std::vector<element_index> const& sigma,
                                   element_index                     y_size,
                                   element_index                     x_size) {
      auto rows = ordered_json::array();
      for (element_index y = 0; y < y_size; ++y) {
        auto row = ordered_json::array();
        for (element_index x = 0; x < x_size; ++x) {
          row.push_back(sigma[std::size_t(y) * x_size + x]);
        }
        rows.push_back(std::move(row));
      }
      return rows;
    }
  }  // namespace detail

  //! Parse a Cayley-table file.  The result is structurally sound but
  //! unverified; run validate_table before structure algorithms.
  inline FiniteSemigroup read_semigroup(std::string const& text) {
    return detail::read_semigroup_object(detail::parse_text(text), "$");
  }

  //! Canonical bytes of a Cayley-table file.
  inline std::string write_semigroup(FiniteSemigroup const& S) {
    return detail::semigroup_object(S).dump() + "\n";
  }

  //! Parse a Rees specification file; validates and certifies the embedded
  //! group and range-checks the sandwich matrix.
  inline ReesMatrixSemigroup read_rees_spec(std::string const& text) {
    auto const v = detail::parse_text(text);
    detail::expect_object(v, "$");
    detail::require_field(v, "$", "kind");
    if (!v["kind"].is_string() || v["kind"].get<std::string>() != "rees") {
      throw ParseError("$.kind: expected \"rees\"");
    }
    static constexpr char const* allowed[]
        = {"kind", "group", "x_size", "y_size", "sigma"};
    detail::reject_unknown(v, allowed, "$");
    detail::require_field(v, "$", "group");
    auto table = detail::read_semigroup_object(v["group"], "$.group");

    Group group = [&] {
      try {
        return Group::certify(std::move(table));
      } catch (ParseError const&) {
        throw;
      } catch (SemigroupError const& e) {
        throw ParseError(std::string("$.group: ") + e.what());
      }
    }();

    detail::require_field(v, "$", "x_size");
    detail::require_field(v, "$", "y_size");
    auto const x_size = detail::get_index(v["x_size"], "$.x_size");
    auto const y_size = detail::get_index(v["y_size"], "$.y_size");
    if (x_size == 0) {
      throw ParseError("$.x_size: must be at least 1");
    }
    if (y_size == 0) {
      throw ParseError("$.y_size: must be at least 1");
    }

    detail::require_field(v, "$", "sigma");
    auto sigma = detail::read_sigma(v["sigma"], y_size, x_size, group.order(),
                                    "$.sigma");
    return ReesMatrixSemigroup(std::move(group), x_size, y_size,
                               std::move(sigma));
  }

  //! Canonical bytes of a Rees specification file.
  inline std::string write_rees_spec(ReesMatrixSemigroup const& R) {
    detail::ordered_json v;
    v["kind"]   = "rees";
    v["group"]  = detail::semigroup_object(R.group().table());
    v["x_size"] = R.x_size();
    v["y_size"] = R.y_size();
    v["sigma"]  = detail::sigma_rows(R.sigma_flat(), R.y_size(), R.x_size());
    return v.dump() + "\n";
  }

  //! The pieces of a decomposition file.  The group table is parsed but not
  //! yet certified; cmd-level verification certifies it.
  struct DecompositionData {
    element_index              e;
    std::vector<element_index> x_e;
    std::vector<element_index> y_e;
    FiniteSemigroup            group_table;
    std::vector<element_index> sigma;    // flat, |Y_e| rows of |X_e| entries
    std::vector<element_index> forward;  // source element per triple
  };

  inline DecompositionData read_decomposition(std::string const& text) {
    auto const v = detail::parse_text(text);
    detail::expect_object(v, "$");
    static constexpr char const* allowed[]
        = {"e", "X_e", "Y_e", "group", "sigma", "forward_map"};
    detail::reject_unknown(v, allowed, "$");
    for (auto const* field : {"e", "X_e", "Y_e", "group", "sigma",
                              "forward_map"}) {
      detail::require_field(v, "$", field);
    }

    auto const e   = detail::get_index(v["e"], "$.e");
    auto       x_e = detail::get_index_array(v["X_e"], "$.X_e");
    auto       y_e = detail::get_index_array(v["Y_e"], "$.Y_e");
    if (x_e.empty()) {
      throw ParseError("$.X_e: must not be empty");
    }
    if (y_e.empty()) {
      throw ParseError("$.Y_e: must not be empty");
    }
    auto group = detail::read_semigroup_object(v["group"], "$.group");
    auto sigma = detail::read_sigma(v["sigma"],
                                    static_cast<element_index>(y_e.size()),
                                    static_cast<element_index>(x_e.size()),
                                    group.order(), "$.sigma");
    auto forward = detail::get_index_array(v["forward_map"], "$.forward_map");
    return DecompositionData{e,
                             std::move(x_e),
                             std::move(y_e),
                             std::move(group),
                             std::move(sigma),
                             std::move(forward)};
  }

  //! Canonical bytes of a decomposition file.
  inline std::string write_decomposition(ReesDecomposition const& D) {
    detail::ordered_json v;
    v["e"]     = D.h_e().identity();
    v["X_e"]   = D.x_e();
    v["Y_e"]   = D.y_e();
    v["group"] = detail::semigroup_object(D.h_e().local_table());
    v["sigma"] = detail::sigma_rows(D.paragroup().sigma_flat(),
                                    D.paragroup().y_size(),
                                    D.paragroup().x_size());
    v["forward_map"] = D.forward();
    return v.dump() + "\n";
  }

}  // namespace paragroup::io

#endif  // PARAGROUP_IO_HPP_
