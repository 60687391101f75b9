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
// Build a seeded random Rees matrix semigroup, materialize its Cayley
// table, decompose it again, and verify the isomorphism.

#include <cstdint>
#include <cstdlib>
#include <iostream>

#include "paragroup/paragroup.hpp"

int main(int argc, char** argv) {
  using namespace paragroup;

  std::uint64_t const seed = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 1;

  auto const R = zoo::random_rees(seed, 8, 4, 4);
  std::cout << "seed " << seed << ": [X,H,Y] = [" << R.x_size() << ", "
            << R.group().order() << ", " << R.y_size() << "], order "
            << R.order() << "\n";

  auto const S = to_cayley(R);
  std::cout << "materialized table validated: " << std::boolalpha
            << S.verified() << "\n";
  std::cout << "completely simple: " << is_completely_simple(S) << "\n";

  auto const D = decompose(S);
  std::cout << "decomposed at e = " << D.e().index() << " with shape ["
            << D.x_e().size() << ", " << D.h_e().order() << ", "
            << D.y_e().size() << "]\n";

  auto const report = verify_decomposition(D);
  std::cout << "bijective: " << report.bijective
            << ", homomorphic: " << report.homomorphic
            << ", size consistent: " << report.size_consistent << "\n";
  return report.pass() ? 0 : 1;
}
