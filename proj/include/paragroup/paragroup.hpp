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
// Umbrella header.

#ifndef PARAGROUP_PARAGROUP_HPP_
#define PARAGROUP_PARAGROUP_HPP_

#include "bicyclic.hpp"
#include "core.hpp"
#include "io.hpp"
#include "rees.hpp"
#include "structure.hpp"
#include "zoo.hpp"

#endif  // PARAGROUP_PARAGROUP_HPP_
