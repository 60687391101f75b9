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
// Acceptance suite: prints one PASS/FAIL line per criterion and exits with
// the number of failures.  Criteria 9 and 10 drive the command-line binary
// and need PARAGROUP_CLI and PARAGROUP_FIXTURES in the environment.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>
#include <unistd.h>

#include "paragroup/paragroup.hpp"

namespace {

  namespace fs = std::filesystem;
  using namespace paragroup;
  using clock_type = std::chrono::steady_clock;

  double seconds_since(clock_type::time_point start) {
    return std::chrono::duration<double>(clock_type::now() - start).count();
  }

  // ---- tiny check harness ------------------------------------------------

  struct Outcome {
    bool        ok = true;
    std::string detail;

    void fail(std::string const& why) {
      ok = false;
      if (detail.empty()) {
        detail = why;
      }
    }

    void require(bool condition, std::string const& why) {
      if (!condition) {
        fail(why);
      }
    }
  };

  // ---- corpus ------------------------------------------------------------

  std::vector<ReesMatrixSemigroup> random_sweep(std::uint64_t count) {
    std::vector<ReesMatrixSemigroup> out;
    out.reserve(count);
    for (std::uint64_t seed = 1; seed <= count; ++seed) {
      out.push_back(zoo::random_rees(seed, 8, 4, 4));
    }
    return out;
  }

  std::vector<FiniteSemigroup> zoo_corpus() {
    std::vector<FiniteSemigroup> out;
    for (element_index n = 1; n <= 6; ++n) {
      out.push_back(zoo::left_zero(n));
      out.push_back(zoo::right_zero(n));
    }
    for (element_index k = 1; k <= 4; ++k) {
      for (element_index m = 1; m <= 4; ++m) {
        out.push_back(zoo::rectangular_band(k, m));
      }
    }
    for (element_index n = 1; n <= 8; ++n) {
      out.push_back(zoo::cyclic_group(n));
    }
    for (element_index n = 2; n <= 6; ++n) {
      out.push_back(zoo::zero_semigroup(n));
      out.push_back(zoo::min_semilattice(n));
    }
    for (element_index n = 1; n <= 5; ++n) {
      out.push_back(zoo::symmetric_group(n));
    }
    for (element_index n = 1; n <= 3; ++n) {
      out.push_back(zoo::full_transformation_monoid(n));
    }
    return out;
  }

  std::vector<FiniteSemigroup> full_corpus() {
    auto out = zoo_corpus();
    for (auto const& R : random_sweep(100)) {
      out.push_back(to_cayley(R));
    }
    return out;
  }

  // ---- criteria 1..8 -----------------------------------------------------

  Outcome criterion_1() {
    Outcome o;
    auto const start = clock_type::now();
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
      try {
        auto const S = to_cayley(zoo::random_rees(seed, 8, 4, 4));
        o.require(S.verified(), "seed " + std::to_string(seed)
                                    + ": table not marked verified");
      } catch (SemigroupError const& e) {
        o.fail("seed " + std::to_string(seed) + ": " + e.what());
      }
    }
    auto const elapsed = seconds_since(start);
    o.require(elapsed < 10.0,
              "validation took " + std::to_string(elapsed) + "s (limit 10s)");
    if (o.ok) {
      o.detail = "100 instances in " + std::to_string(elapsed) + "s";
    }
    return o;
  }

  Outcome criterion_2() {
    Outcome o;
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
      auto const R = zoo::random_rees(seed, 8, 4, 4);
      auto const S = to_cayley(R);
      auto const D = decompose(S);
      auto const tag = "seed " + std::to_string(seed);
      o.require(D.x_e().size() == R.x_size(), tag + ": |X| mismatch");
      o.require(D.h_e().order() == R.group().order(),
                tag + ": |H| mismatch");
      o.require(D.y_e().size() == R.y_size(), tag + ": |Y| mismatch");
      auto const report = verify_decomposition(D);
      o.require(report.bijective, tag + ": not bijective");
      o.require(report.homomorphic, tag + ": not homomorphic");
      o.require(report.size_consistent, tag + ": sizes inconsistent");
    }
    if (o.ok) {
      o.detail = "100 round trips";
    }
    return o;
  }

  Outcome criterion_3() {
    Outcome o;
    auto shape = [&](FiniteSemigroup const& S, element_index x,
                     element_index h, element_index y,
                     std::string const& tag) {
      auto const D = decompose(S);
      o.require(D.x_e().size() == x && D.h_e().order() == h
                    && D.y_e().size() == y,
                tag + ": wrong shape (" + std::to_string(D.x_e().size()) + ","
                    + std::to_string(D.h_e().order()) + ","
                    + std::to_string(D.y_e().size()) + ")");
      return D;
    };
    for (element_index n = 1; n <= 6; ++n) {
      shape(zoo::left_zero(n), n, 1, 1, "left_zero(" + std::to_string(n) + ")");
      shape(zoo::right_zero(n), 1, 1, n,
            "right_zero(" + std::to_string(n) + ")");
      auto const C = zoo::cyclic_group(n);
      auto const D = shape(C, 1, n, 1, "cyclic_group(" + std::to_string(n) + ")");
      // the local table is the input table up to the carrier relabeling
      auto const& H = D.h_e();
      for (element_index i = 0; i < H.order(); ++i) {
        for (element_index j = 0; j < H.order(); ++j) {
          auto const via_parent
              = H.position_of(C.product(H.carrier()[i], H.carrier()[j]));
          o.require(via_parent.has_value()
                        && H.local_table().product(i, j) == *via_parent,
                    "cyclic_group(" + std::to_string(n)
                        + "): local table is not the relabeled input");
        }
      }
    }
    for (element_index k = 1; k <= 6; ++k) {
      for (element_index m = 1; m <= 6; ++m) {
        shape(zoo::rectangular_band(k, m), k, 1, m,
              "rectangular_band(" + std::to_string(k) + ","
                  + std::to_string(m) + ")");
      }
    }
    if (o.ok) {
      o.detail = "left/right zero, bands, cyclic groups up to 6";
    }
    return o;
  }

  Outcome criterion_4() {
    Outcome o;
    std::size_t simple_count = 0;
    for (auto const& S : full_corpus()) {
      if (is_simple(S)) {
        ++simple_count;
        o.require(!primitive_idempotents(S).empty(),
                  "simple semigroup of order " + std::to_string(S.order())
                      + " without primitive idempotent");
      }
      if (is_completely_simple(S)) {
        auto const prim = primitive_idempotents(S);
        auto const all  = idempotents(S);
        o.require(prim.size() == all.size(),
                  "completely simple member with a non-primitive idempotent");
      }
    }
    if (o.ok) {
      o.detail = std::to_string(simple_count) + " simple members checked";
    }
    return o;
  }

  Outcome criterion_5() {
    Outcome o;
    std::size_t elements = 0;
    for (auto const& S : full_corpus()) {
      if (S.order() > 64) {
        continue;
      }
      for (element_index i = 0; i < S.order(); ++i) {
        auto const e = idempotent_power(S.element(i));
        ++elements;
        o.require(product(e, e) == e,
                  "element " + std::to_string(i) + " of order-"
                      + std::to_string(S.order())
                      + " member: power is not idempotent");
      }
    }
    if (o.ok) {
      o.detail = std::to_string(elements) + " elements";
    }
    return o;
  }

  Outcome criterion_6() {
    Outcome o;
    std::size_t subgroups = 0;
    for (auto const& S : full_corpus()) {
      if (!is_completely_simple(S)) {
        continue;
      }
      for (auto const& e : primitive_idempotents(S)) {
        auto const H = maximal_subgroup(e);
        ++subgroups;
        auto const m = H.order();
        for (element_index i = 0; i < m; ++i) {
          auto const h = H.carrier()[i];
          o.require(S.product(e.index(), h) == h
                        && S.product(h, e.index()) == h,
                    "identity law fails in a maximal subgroup");
          auto const inv = H.inverse_table()[i];
          o.require(S.product(h, inv) == e.index()
                        && S.product(inv, h) == e.index(),
                    "two-sided inverse missing in a maximal subgroup");
          for (element_index j = 0; j < m; ++j) {
            o.require(H.position_of(S.product(h, H.carrier()[j])).has_value(),
                      "maximal subgroup carrier is not closed");
          }
        }
      }
    }
    if (o.ok) {
      o.detail = std::to_string(subgroups) + " subgroups certified";
    }
    return o;
  }

  Outcome criterion_7() {
    Outcome o;
    using bicyclic::Element;
    using bicyclic::mul;
    o.require(mul(Element{0, 1}, Element{1, 0}) == Element{0, 0},
              "qp != 1");
    o.require(mul(Element{1, 0}, Element{0, 1}) == Element{1, 1},
              "pq != p q normal form");
    o.require(!(mul(Element{1, 0}, Element{0, 1}) == Element{0, 0}),
              "pq collapsed to 1");

    for (std::uint64_t ua = 0; ua <= 12 && o.ok; ++ua) {
      for (std::uint64_t ub = 0; ub <= 12 && o.ok; ++ub) {
        Element const u{ua, ub};
        for (std::uint64_t va = 0; va <= 12 && o.ok; ++va) {
          for (std::uint64_t vb = 0; vb <= 12 && o.ok; ++vb) {
            Element const v{va, vb};
            auto const uv = mul(u, v);
            for (std::uint64_t wa = 0; wa <= 12 && o.ok; ++wa) {
              for (std::uint64_t wb = 0; wb <= 12; ++wb) {
                Element const w{wa, wb};
                if (!(mul(uv, w) == mul(u, mul(v, w)))) {
                  o.fail("associativity fails at p^" + std::to_string(ua)
                         + "q^" + std::to_string(ub) + " ...");
                  break;
                }
              }
            }
          }
        }
      }
    }

    auto const start = clock_type::now();
    auto const chain = bicyclic::no_primitive_witness(1000000);
    auto const elapsed = seconds_since(start);
    o.require(chain.size() == 1000000, "chain is too short");
    for (std::uint64_t n = 0; n < chain.size(); ++n) {
      if (!(chain[n].first == Element{n + 1, n + 1})
          || !(chain[n].second == Element{n, n})) {
        o.fail("chain entry " + std::to_string(n) + " malformed");
        break;
      }
    }
    o.require(elapsed < 1.0, "chain walk took " + std::to_string(elapsed)
                                 + "s (limit 1s)");
    if (o.ok) {
      o.detail = "13^4 * 13^2 associativity triples; 10^6 chain pairs in "
                 + std::to_string(elapsed) + "s";
    }
    return o;
  }

  Outcome criterion_8() {
    Outcome o;
    for (std::uint64_t seed = 1; seed <= 50; ++seed) {
      auto const R = zoo::random_rees(seed, 8, 4, 4);
      auto const N = normalize_sandwich(R);
      auto const tag = "seed " + std::to_string(seed);
      auto const id  = R.group().identity();
      for (element_index x = 0; x < N.rees.x_size(); ++x) {
        o.require(N.rees.sigma(0, x) == id, tag + ": row 0 not identity");
      }
      for (element_index y = 0; y < N.rees.y_size(); ++y) {
        o.require(N.rees.sigma(y, 0) == id, tag + ": column 0 not identity");
      }
      auto const target = to_cayley(N.rees);
      o.require(verify_rees_isomorphism(target, R, N.witness).pass(),
                tag + ": witness fails verification");
    }
    if (o.ok) {
      o.detail = "50 instances normalized and verified";
    }
    return o;
  }

  // ---- CLI-driven criteria ----------------------------------------------

  struct RunResult {
    int         code;
    std::string out;
    std::string err;
  };

  std::string cli_path() {
    auto const* p = std::getenv("PARAGROUP_CLI");
    return p == nullptr ? std::string() : std::string(p);
  }

  fs::path fixtures_dir() {
    auto const* p = std::getenv("PARAGROUP_FIXTURES");
    return p == nullptr ? fs::path() : fs::path(p);
  }

  fs::path scratch_dir() {
    static fs::path dir = [] {
      auto d = fs::temp_directory_path()
               / ("paragroup-acceptance-" + std::to_string(::getpid()));
      fs::create_directories(d);
      return d;
    }();
    return dir;
  }

  std::string read_file(fs::path const& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

  RunResult run_cli(std::string const& args) {
    static int counter  = 0;
    auto const out_file = scratch_dir() / ("out." + std::to_string(counter));
    auto const err_file = scratch_dir() / ("err." + std::to_string(counter));
    ++counter;
    auto const cmd = "\"" + cli_path() + "\" " + args + " > "
                     + out_file.string() + " 2> " + err_file.string();
    int const status = std::system(cmd.c_str());
    return RunResult{WIFEXITED(status) ? WEXITSTATUS(status) : -1,
                     read_file(out_file), read_file(err_file)};
  }

  std::string q(fs::path const& p) {
    return "\"" + p.string() + "\"";
  }

  Outcome criterion_9() {
    Outcome o;
    if (cli_path().empty() || fixtures_dir().empty()) {
      o.fail("PARAGROUP_CLI / PARAGROUP_FIXTURES not set");
      return o;
    }
    for (int seed = 1; seed <= 20; ++seed) {
      auto const tag  = "seed " + std::to_string(seed);
      auto const spec = scratch_dir() / ("p9_spec_" + std::to_string(seed));
      auto const cay  = scratch_dir() / ("p9_cay_" + std::to_string(seed));
      auto const dec  = scratch_dir() / ("p9_dec_" + std::to_string(seed));
      o.require(run_cli("zoo random-rees --seed " + std::to_string(seed)
                        + " -o " + q(spec))
                        .code
                    == 0,
                tag + ": zoo failed");
      o.require(run_cli("construct " + q(spec) + " -o " + q(cay)).code == 0,
                tag + ": construct failed");
      o.require(run_cli("decompose " + q(cay) + " -o " + q(dec)).code == 0,
                tag + ": decompose failed");
      o.require(run_cli("verify " + q(cay) + " " + q(dec)).code == 0,
                tag + ": verify failed");
    }

    struct Fixture {
      std::string command;
      std::string file;
      int         code;
      std::string token;
    };
    auto const dir  = fixtures_dir();
    auto const sink = q(scratch_dir() / "p9_sink.json");
    std::vector<Fixture> const fixtures{
        {"analyze", "entry_out_of_range.json", 2, "table[0][1]"},
        {"analyze", "not_associative.json", 2, "(0, 0, 1)"},
        {"analyze", "unknown_field.json", 2, "sgima"},
        {"analyze", "wrong_kind.json", 2, "kind"},
        {"analyze", "truncated.json", 2, "invalid JSON"},
        {"construct", "group_not_a_group.json", 2, "not a group"},
        {"construct", "sigma_out_of_range.json", 2, "sigma[0][0]"},
        {"decompose", "not_completely_simple.json", 4, "element 0"},
    };
    for (auto const& f : fixtures) {
      auto args = f.command + " " + q(dir / f.file);
      if (f.command != "analyze") {
        args += " -o " + sink;
      }
      auto const res = run_cli(args);
      o.require(res.code == f.code,
                f.file + ": exit " + std::to_string(res.code) + ", expected "
                    + std::to_string(f.code));
      o.require(res.err.find(f.token) != std::string::npos,
                f.file + ": diagnostic does not name " + f.token);
    }
    {
      auto const res = run_cli("--max-order 10 construct "
                               + q(dir / "oversized_spec.json") + " -o "
                               + sink);
      o.require(res.code == 3, "oversized_spec.json: exit "
                                   + std::to_string(res.code) + ", expected 3");
    }
    {
      auto const res = run_cli("verify " + q(dir / "tampered_source.json")
                               + " " + q(dir / "tampered_decomposition.json"));
      o.require(res.code == 5, "tampered decomposition: exit "
                                   + std::to_string(res.code) + ", expected 5");
      o.require(res.err.find("homomorphic") != std::string::npos,
                "tampered decomposition: diagnostic does not name the check");
    }
    if (o.ok) {
      o.detail = "20 pipelines + 10 malformed fixtures";
    }
    return o;
  }

  Outcome criterion_10() {
    Outcome o;
    if (cli_path().empty()) {
      o.fail("PARAGROUP_CLI not set");
      return o;
    }
    auto twice_identical = [&](std::string const& args_prefix,
                               std::string const& tag) {
      auto const a = scratch_dir() / ("p10_" + tag + "_a.json");
      auto const b = scratch_dir() / ("p10_" + tag + "_b.json");
      o.require(run_cli(args_prefix + " -o " + q(a)).code == 0,
                tag + ": first run failed");
      o.require(run_cli(args_prefix + " -o " + q(b)).code == 0,
                tag + ": second run failed");
      auto const bytes = read_file(a);
      o.require(!bytes.empty() && bytes == read_file(b),
                tag + ": outputs differ between runs");
      return a;
    };

    auto const spec = twice_identical("zoo random-rees --seed 2026", "spec");
    twice_identical("zoo full_transformation_monoid 3", "t3");
    auto const cay = twice_identical("construct " + q(spec), "construct");
    twice_identical("decompose " + q(cay), "decompose");

    auto const r1 = run_cli("analyze " + q(cay));
    auto const r2 = run_cli("analyze " + q(cay));
    o.require(r1.code == 0 && r1.out == r2.out,
              "analyze reports differ between runs");

    // library-level reproducibility of the generator
    for (std::uint64_t seed : {0ULL, 7ULL, 123456789ULL}) {
      o.require(zoo::random_rees(seed, 8, 4, 4)
                    == zoo::random_rees(seed, 8, 4, 4),
                "random_rees is not reproducible for seed "
                    + std::to_string(seed));
    }
    if (o.ok) {
      o.detail = "zoo/construct/decompose/analyze byte-stable";
    }
    return o;
  }

}  // namespace

int main() {
  struct Criterion {
    int                      number;
    std::string              name;
    std::function<Outcome()> check;
  };
  std::vector<Criterion> const criteria{
      {1, "paragroup associativity (100 seeded instances, < 10 s)",
       criterion_1},
      {2, "structure-theorem round trip (shape + exhaustive verification)",
       criterion_2},
      {3, "closed-form decompositions (left/right zero, bands, cyclic)",
       criterion_3},
      {4, "finite simplicity criterion (primitive idempotents present)",
       criterion_4},
      {5, "idempotent power reaches an idempotent (orders <= 64)",
       criterion_5},
      {6, "maximal subgroup certification at every primitive idempotent",
       criterion_6},
      {7, "bicyclic relations, associativity <= 12, 10^6 chain < 1 s",
       criterion_7},
      {8, "sandwich normalization with verified witnesses (50 instances)",
       criterion_8},
      {9, "CLI pipeline and malformed-fixture exit codes", criterion_9},
      {10, "byte-deterministic outputs and seed reproducibility",
       criterion_10},
  };

  int failures = 0;
  for (auto const& c : criteria) {
    Outcome outcome;
    try {
      outcome = c.check();
    } catch (std::exception const& e) {
      outcome.ok     = false;
      outcome.detail = std::string("unexpected exception: ") + e.what();
    }
    if (!outcome.ok) {
      ++failures;
    }
    std::printf("%s  criterion %2d: %s%s%s\n", outcome.ok ? "PASS" : "FAIL",
                c.number, c.name.c_str(),
                outcome.detail.empty() ? "" : " -- ",
                outcome.detail.c_str());
  }
  return failures;
}
