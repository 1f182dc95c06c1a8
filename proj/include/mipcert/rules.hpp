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

#ifndef MIPCERT_RULES_HPP_
#define MIPCERT_RULES_HPP_

#include "mipcert/model.hpp"
#include "mipcert/order.hpp"

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace mipcert {

/// A premise cited inside a subproof.
struct PremiseRef
{
   enum class Kind
   {
      Id,          // constraint id in the rule's pool
      Local,       // k-th local premise (assumptions, or the negated new constraint)
      Hyp,         // k-th assumption of the implication being proven
      Objective,   // g(x) < z
      Previous     // result of the preceding subproof step
   };
   Kind kind = Kind::Id;
   ConstraintId id = 0;   // id, or 1-based index for Local/Hyp

   bool operator==(const PremiseRef& other) const = default;
};

struct LinStep
{
   std::vector<std::pair<PremiseRef, Rat>> terms;
   bool operator==(const LinStep& other) const = default;
};

struct RoundStep
{
   bool operator==(const RoundStep&) const = default;
};

using SubproofStep = std::variant<LinStep, RoundStep>;

struct Subproof
{
   std::vector<SubproofStep> steps;
   Inequality target;
   bool operator==(const Subproof& other) const = default;
};

struct WitnessProof
{
   enum class Kind
   {
      Id,
      Self,
      Objective
   };
   Kind kind = Kind::Id;
   ConstraintId id = 0;
   Subproof proof;
   bool operator==(const WitnessProof& other) const = default;
};

/// Evidence that sigma position `position` (1-based) of `node` (any node
/// when unset) compares equal (two subproofs: diff <= 0, diff >= 0) or with
/// a gap of at least eps (one subproof: diff >= eps).
struct OrderEvidence
{
   std::optional<NodeId> node;
   std::size_t position = 1;
   Evidence kind = Evidence::Gap;
   std::vector<Subproof> proofs;
   bool operator==(const OrderEvidence& other) const = default;
};

struct Witness
{
   AffineMap map;
   std::vector<WitnessProof> proofs;
   std::vector<OrderEvidence> evidence;
   bool operator==(const Witness& other) const = default;
};

struct ImplicStep
{
   ConstraintId id = 0;
   std::vector<Inequality> assumptions;
   Inequality consequent;
   Subproof proof;
   bool operator==(const ImplicStep& other) const = default;
};

/// Merges implications `first` and `second` whose assumptions at the given
/// 1-based indices cover the feasible region.
struct ResolveStep
{
   ConstraintId id = 0;
   ConstraintId first = 0;
   std::size_t first_index = 1;
   ConstraintId second = 0;
   std::size_t second_index = 1;
   bool operator==(const ResolveStep& other) const = default;
};

struct SolutionStep
{
   Solution values;
   bool operator==(const SolutionStep& other) const = default;
};

struct ObjectiveStep
{
   LinExpr objective;
   std::vector<std::pair<ConstraintId, Rat>> multipliers;
   bool operator==(const ObjectiveStep& other) const = default;
};

struct StrengthenStep
{
   bool dominance = false;
   ConstraintId id = 0;
   Constraint constraint;
   Witness witness;
   bool operator==(const StrengthenStep& other) const = default;
};

struct EpsilonStep
{
   Rat eps;
   bool operator==(const EpsilonStep& other) const = default;
};

struct TransferStep
{
   ConstraintId id = 0;
   bool operator==(const TransferStep& other) const = default;
};

struct DeleteStep
{
   enum class Variant
   {
      A,
      B,
      C
   };
   Variant variant = Variant::A;
   std::vector<ConstraintId> ids;
   std::optional<Subproof> proof;     // variant B
   std::optional<Witness> witness;    // variant C
   bool operator==(const DeleteStep& other) const = default;
};

struct TreeStep
{
   BranchTree tree;
   bool operator==(const TreeStep& other) const = default;
};

struct ExtendStep
{
   bool operator==(const ExtendStep&) const = default;
};

struct GoalStep
{
   bool operator==(const GoalStep&) const = default;
};

using ProofStep = std::variant<ImplicStep, ResolveStep, SolutionStep, ObjectiveStep, StrengthenStep, EpsilonStep, TransferStep,
                               DeleteStep, TreeStep, ExtendStep, GoalStep>;

/// Certificate keyword of a step ("IMPLIC", "RED", ...).
std::string rule_name(const ProofStep& step);

struct Verdict
{
   enum class Kind
   {
      Optimal,
      Infeasible
   };
   Kind kind = Kind::Infeasible;
   std::optional<Rat> value;

   bool operator==(const Verdict& other) const = default;
};

std::string to_string(const Verdict& v);

// One checker per rule. Each validates the step against cfg and applies it
// only when every check has passed; on failure a CertError is thrown and
// cfg is unchanged.
void check_implicational(Configuration& cfg, const ImplicStep& step);
void check_resolution(Configuration& cfg, const ResolveStep& step);
void check_objective_bound(Configuration& cfg, const SolutionStep& step);
void check_objective_update(Configuration& cfg, const ObjectiveStep& step);
void check_redundance(Configuration& cfg, const StrengthenStep& step);
void check_dominance(Configuration& cfg, const StrengthenStep& step);
void check_epsilon_shrink(Configuration& cfg, const EpsilonStep& step);
void check_transfer(Configuration& cfg, const TransferStep& step);
void check_deletion(Configuration& cfg, const DeleteStep& step);
void check_tree_exchange(Configuration& cfg, const TreeStep& step);
void check_dimension_extension(Configuration& cfg);
Verdict check_goal(const Configuration& cfg);

/// Dispatches to the matching checker. Returns the verdict for GOAL.
std::optional<Verdict> apply_step(Configuration& cfg, const ProofStep& step);

}   // namespace mipcert

#endif
