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

#ifndef MIPCERT_ORDER_HPP_
#define MIPCERT_ORDER_HPP_

#include "mipcert/model.hpp"

#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace mipcert {

struct TreeViolation
{
   std::string condition;   // "T1" ... "T7"
   NodeId node = 0;
   std::string message;
};

/// Checks the consistency conditions of `tree` against the core of `cfg`.
/// Bound citations are taken from TreeNode::bound_refs.
std::vector<TreeViolation> check_tree_consistency(const BranchTree& tree, const Configuration& cfg);

/// Best single-variable bounds on x_j implied by one core constraint each.
Interval core_bounds(const Configuration& cfg, int j);

/// Interval propagation from a set of inequalities.
Box propagate_box(const std::vector<const Inequality*>& ineqs, int dim, const std::set<int>& integral, int rounds = 3);

enum class OrderMode
{
   Weak,
   Strict
};

enum class Evidence
{
   Equal,
   Gap
};

/// Supplies certificate evidence that `diff` (the signed difference of w(x)
/// and x at position `pos` of sigma_node) is zero or at least eps.
using OrderProver = std::function<bool(NodeId node, std::size_t pos, const LinExpr& diff, Evidence kind)>;

struct OrderResult
{
   bool verified = false;
   NodeId node = 0;
   std::size_t position = 0;
   std::string reason;
};

/// Decides w(x) >= x (weak) or w(x) >_eps x (strict) in the tree order for
/// every x in `x_box`. The tree must be linked.
OrderResult dcn_and_compare(const BranchTree& tree, const Box& x_box, const AffineMap& w, const Rat& eps, OrderMode mode,
                            const std::set<int>& integral, const OrderProver& prover = {});

}   // namespace mipcert

#endif
