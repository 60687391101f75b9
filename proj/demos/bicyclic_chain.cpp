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
// The bicyclic monoid in normal-form arithmetic: the defining relation,
// and the strictly descending idempotent chain that rules out a primitive
// idempotent.

#include <iostream>

#include "paragroup/bicyclic.hpp"

int main() {
  using namespace paragroup::bicyclic;

  auto const show = [](Element const& u) {
    std::cout << "p^" << u.a << " q^" << u.b;
  };

  std::cout << "q * p = ";
  show(mul(q, p));
  std::cout << "  (the unit)\n";

  std::cout << "p * q = ";
  show(mul(p, q));
  std::cout << "  (the idempotent e_1, not the unit)\n";

  std::cout << "first idempotents, each strictly below the previous:\n";
  for (auto const& [lower, upper] : no_primitive_witness(5)) {
    std::cout << "  ";
    show(lower);
    std::cout << " < ";
    show(upper);
    std::cout << "\n";
  }
  return 0;
}
