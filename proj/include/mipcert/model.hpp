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

#ifndef MIPCERT_MODEL_HPP_
#define MIPCERT_MODEL_HPP_

#include "mipcert/inequality.hpp"
#include "mipcert/tree.hpp"

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace mipcert {

/// x_var must take an integer value. Integrality markers live under id -var.
struct Integral
{
   int var = 0;
   bool operator==(const Integral& other) const = default;
};

/// [assumptions => consequent]; assumptions are never empty.
struct Implication
{
   std::vector<Inequality> assumptions;
   Inequality consequent;
   bool operator==(const Implication& other) const = default;
};

using Constraint = std::variant<Inequality, Integral, Implication>;

inline ConstraintId integrality_id(int var)
{
   return -static_cast<ConstraintId>(var);
}

/// Builds an implication, or the bare consequent when there are no assumptions.
Constraint make_implication(std::vector<Inequality> assumptions, Inequality consequent);

int max_var(const Constraint& c);
std::string to_string(const Constraint& c);

struct Problem
{
   int n = 0;
   std::set<int> integral;
   LinExpr objective;
   std::vector<std::pair<ConstraintId, Constraint>> constraints;
   /// Optional symmetry generators as 1-based images of 1..n.
   std::vector<std::vector<int>> symmetries;

   /// Throws MalformedProblem when indices or ids are out of range.
   void validate() const;
};

using Solution = std::vector<Rat>;

struct Configuration
{
   std::map<ConstraintId, Constraint> core;
   std::map<ConstraintId, Constraint> derived;
   LinExpr objective;
   std::optional<Rat> bound;   // nullopt is +infinity
   BranchTree tree = BranchTree::trivial();
   Rat eps = 1;
   int dim = 0;
   /// Largest id ever used; fresh ids must exceed it.
   ConstraintId max_id = 0;

   const Constraint* find(ConstraintId id) const;
   bool contains(ConstraintId id) const { return find(id) != nullptr; }
   std::set<int> integral_vars() const;
   std::size_t live_constraints() const { return core.size() + derived.size(); }
};

Configuration initial_configuration(const Problem& p);

/// Inequalities whose conjunction is the complement of c.
std::vector<Inequality> negate(const Constraint& c);

bool evaluate(const Solution& s, const Constraint& c);

Constraint compose(const AffineMap& w, const Constraint& c);

}   // namespace mipcert

#endif
