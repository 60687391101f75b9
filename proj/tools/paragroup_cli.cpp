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
// Command-line surface.  Reports go to stdout, diagnostics to stderr.
// Exit codes: 0 ok, 2 parse/validation failure, 3 size budget exceeded,
// 4 not completely simple, 5 verification failed.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "paragroup/paragroup.hpp"

namespace {

  using namespace paragroup;
  using nlohmann::ordered_json;

  std::string slurp(std::string const& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      throw std::runtime_error("cannot open input file \"" + path + "\"");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

  void spill(std::string const& path, std::string const& bytes) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
      throw std::runtime_error("cannot open output file \"" + path + "\"");
    }
    out << bytes;
    out.flush();
    if (!out) {
      throw std::runtime_error("cannot write output file \"" + path + "\"");
    }
  }

  std::vector<element_index> indices(std::vector<Element> const& elems) {
    std::vector<element_index> out;
    out.reserve(elems.size());
    for (auto const& e : elems) {
      out.push_back(e.index());
    }
    return out;
  }

  int cmd_analyze(std::string const& input) {
    auto const S = validate_table(io::read_semigroup(slurp(input)));

    auto const es     = idempotents(S);
    auto const simple = is_simple(S);
    auto const prim   = primitive_idempotents(S);
    auto const cs     = simple && !prim.empty();

    ordered_json report;
    report["order"]                 = S.order();
    report["verified"]              = true;
    report["idempotent_count"]      = es.size();
    report["idempotents"]           = indices(es);
    report["is_simple"]             = simple;
    report["primitive_idempotents"] = indices(prim);
    report["is_completely_simple"]  = cs;
    auto orders = ordered_json::array();
    if (cs) {
      for (auto const& e : es) {
        orders.push_back(maximal_subgroup(e).order());
      }
    }
    report["maximal_subgroup_orders"] = orders;
    std::cout << report.dump() << "\n";
    return 0;
  }

  int cmd_construct(std::string const& input,
                    std::string const& output,
                    std::uint64_t      max_order) {
    auto const R = io::read_rees_spec(slurp(input));
    auto const S = to_cayley(R, max_order);
    spill(output, io::write_semigroup(S));
    return 0;
  }

  int cmd_decompose(std::string const& input, std::string const& output) {
    auto const S = validate_table(io::read_semigroup(slurp(input)));
    auto const D = decompose(S);
    spill(output, io::write_decomposition(D));
    return 0;
  }

  int cmd_verify(std::string const& source_path, std::string const& dec_path) {
    auto const S    = validate_table(io::read_semigroup(slurp(source_path)));
    auto const data = io::read_decomposition(slurp(dec_path));

    Group const group = [&] {
      try {
        return Group::certify(data.group_table);
      } catch (io::ParseError const&) {
        throw;
      } catch (SemigroupError const& e) {
        throw io::ParseError(std::string("$.group: ") + e.what());
      }
    }();
    ReesMatrixSemigroup const R(group,
                                static_cast<element_index>(data.x_e.size()),
                                static_cast<element_index>(data.y_e.size()),
                                data.sigma);
    auto const report = verify_rees_isomorphism(S, R, data.forward);

    ordered_json out;
    out["bijective"]       = report.bijective;
    out["homomorphic"]     = report.homomorphic;
    out["size_consistent"] = report.size_consistent;
    std::cout << out.dump() << "\n";

    if (!report.pass()) {
      std::string failing;
      if (!report.bijective) {
        failing += " bijective";
      }
      if (!report.homomorphic) {
        failing += " homomorphic";
      }
      if (!report.size_consistent) {
        failing += " size_consistent";
      }
      std::cerr << "error: verification failed:" << failing << "\n";
      return 5;
    }
    return 0;
  }

  int cmd_zoo(std::string const&                kind,
              std::vector<element_index> const& params,
              std::string const&                output,
              bool                              seed_given,
              std::uint64_t                     seed,
              element_index                     max_group,
              element_index                     max_x,
              element_index                     max_y,
              std::uint64_t                     max_order) {
    if (kind == "random-rees") {
      if (!seed_given) {
        throw zoo::ParamOutOfRange("random-rees requires --seed");
      }
      if (!params.empty()) {
        throw zoo::ParamOutOfRange(
            "random-rees takes no positional parameters");
      }
      auto const R = zoo::random_rees(seed, max_group, max_x, max_y);
      spill(output, io::write_rees_spec(R));
      return 0;
    }
    auto const S = zoo::make_standard(kind, params, max_order);
    spill(output, io::write_semigroup(S));
    return 0;
  }

  int cmd_bicyclic(std::uint64_t count) {
    auto const pairs = bicyclic::no_primitive_witness(count);

    ordered_json out;
    out["checked"]    = pairs.size();
    out["all_strict"] = true;  // no_primitive_witness certifies every pair
    std::cout << out.dump() << "\n";
    return 0;
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite semigroup structure tool: Cayley tables, Rees matrix "
               "semigroups, and completely simple decompositions"};
  app.require_subcommand(1);

  std::uint64_t max_order = 10000;
  app.add_option("--max-order", max_order,
                 "size budget for constructed tables")
      ->capture_default_str();

  std::string in_path;
  std::string out_path;
  std::string dec_path;

  auto* analyze
      = app.add_subcommand("analyze", "structure report for a Cayley file");
  analyze->add_option("input", in_path, "Cayley JSON file")->required();

  auto* construct = app.add_subcommand(
      "construct", "materialize a Rees spec into a Cayley file");
  construct->add_option("input", in_path, "Rees spec JSON file")->required();
  construct->add_option("-o,--output", out_path, "Cayley JSON file to write")
      ->required();

  auto* decompose_cmd = app.add_subcommand(
      "decompose", "decompose a completely simple Cayley file");
  decompose_cmd->add_option("input", in_path, "Cayley JSON file")->required();
  decompose_cmd
      ->add_option("-o,--output", out_path, "decomposition JSON file to write")
      ->required();

  auto* verify = app.add_subcommand(
      "verify", "check a decomposition file against its source");
  verify->add_option("source", in_path, "Cayley JSON file")->required();
  verify->add_option("decomposition", dec_path, "decomposition JSON file")
      ->required();

  auto* zoo_cmd = app.add_subcommand(
      "zoo", "write a standard semigroup or a random Rees spec");
  std::string                kind;
  std::vector<element_index> params;
  std::uint64_t              seed      = 0;
  element_index              max_group = 8;
  element_index              max_x     = 4;
  element_index              max_y     = 4;
  zoo_cmd
      ->add_option("kind", kind,
                   "left_zero | right_zero | rectangular_band | cyclic_group "
                   "| zero_semigroup | min_semilattice | symmetric_group | "
                   "full_transformation_monoid | random-rees")
      ->required();
  zoo_cmd->add_option("params", params, "size parameters for the kind");
  zoo_cmd->add_option("-o,--output", out_path, "JSON file to write")
      ->required();
  auto* seed_opt
      = zoo_cmd->add_option("--seed", seed, "seed for random-rees");
  zoo_cmd->add_option("--max-group", max_group, "max cyclic group order")
      ->capture_default_str();
  zoo_cmd->add_option("--max-x", max_x, "max |X|")->capture_default_str();
  zoo_cmd->add_option("--max-y", max_y, "max |Y|")->capture_default_str();

  auto* bicyclic_cmd = app.add_subcommand(
      "bicyclic", "walk the bicyclic idempotent chain");
  std::uint64_t count = 0;
  bicyclic_cmd
      ->add_option("--check-primitive-up-to", count,
                   "certify the strict idempotent chain up to this index")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    auto const rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*analyze) {
      return cmd_analyze(in_path);
    }
    if (*construct) {
      return cmd_construct(in_path, out_path, max_order);
    }
    if (*decompose_cmd) {
      return cmd_decompose(in_path, out_path);
    }
    if (*verify) {
      return cmd_verify(in_path, dec_path);
    }
    if (*zoo_cmd) {
      return cmd_zoo(kind, params, out_path, seed_opt->count() > 0, seed,
                     max_group, max_x, max_y, max_order);
    }
    if (*bicyclic_cmd) {
      return cmd_bicyclic(count);
    }
  } catch (SizeBudgetExceeded const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (ClosureBudgetExceeded const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (NotCompletelySimple const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (std::exception const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
