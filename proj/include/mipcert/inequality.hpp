/* * * * * * * * * * * * * * * * * * * * * * * * * * * * * * * * * * * * * * */
/*                                                                           */
/*               This file is part of the program and library                */
/*    mipcert --- certificates for mixed-integer programs                    */
/*                                                                           */
/*  Licensed under the Apache License, Version 2.0 (the "License");          */
/*  you may not use this file except in compliance with the License.         */
/*  You may obtain a copy of the License at                                  */
/*                                                                           */
/*      http://www.apache.org/licenses/LICENSE-2.0                           */
/*                                                                           */
/*  Unless required by applicable law or agreed to in writing, software      */
/*  distributed under the License is distributed on an "AS IS" BASIS,        */
/*  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. */
/*  See the License for the specific language governing permissions and      */
/*  limitations under the License.                                           */
/*                                                                           */
/* * * * * * * * * * * * * * * * * * * * * * * * * * * * * * * * * * * * * * */

#ifndef MIPCERT_INEQUALITY_HPP_
#define MIPCERT_INEQUALITY_HPP_

#include "mipcert/linexpr.hpp"

#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace mipcert {

enum class Relation
{
   Le,
   Ge,
   Eq
};

/// lhs relation rhs, where lhs carries no constant. strict only with Le/Ge.
struct Inequality
{
   LinExpr lhs;
   Relation rel = Relation::Le;
   Rat rhs;
   bool strict = false;

   /// Moves any constant of lhs to the right-hand side.
   static Inequality make(LinExpr lhs, Relation rel, Rat rhs, bool strict = false);
   static Inequality falsity() { return make(LinExpr(), Relation::Le, Rat(-1)); }

   /// Same set written with Le (Eq is returned unchanged).
   Inequality as_le() const;

   bool is_falsity() const;
   bool is_tautology() const;
   bool holds(std::span<const Rat> x) const;
   int max_var() const { return lhs.max_var(); }

   bool operator==(const Inequality& other) const = default;
};

/// Complement of a non-equation: a <= b becomes a > b and a < b becomes a >= b.
Inequality negate(const Inequality& ineq);

/// Coefficient-wise sum of multiplier * premise.
Inequality linear_combine(const std::vector<std::pair<Inequality, Rat>>& premises, int dim);

/// Rounds the right-hand side of an integer-coefficient inequality over
/// integral variables.
Inequality round_integral(const Inequality& ineq, const std::set<int>& integral_vars);

/// True if every point satisfying `derived` satisfies `target`, decided
/// syntactically up to positive scaling.
bool dominates(const Inequality& derived, const Inequality& target);

std::string to_string(const Inequality& ineq);

}   // namespace mipcert

#endif
