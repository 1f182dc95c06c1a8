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

#ifndef MIPCERT_EMITTERS_HPP_
#define MIPCERT_EMITTERS_HPP_

#include "mipcert/certificate.hpp"

#include <map>
#include <optional>
#include <vector>

namespace mipcert {

/// Accumulates proof steps for a problem and tracks the state a certifier
/// needs to cite things correctly: fresh ids, the dimension, the best known
/// single-variable bounds and the incumbent value.
class CertBuilder
{
 public:
   /// A single-variable constraint k * x_j <= value * k in le-form (or an
   /// equation), usable as an upper or lower bound on x_j.
   struct Bound
   {
      PremiseRef ref;
      Rat coef;    // le-form coefficient of x_j in the cited constraint
      Rat value;   // the bound itself
   };

   explicit CertBuilder(Problem p);

   const Problem& problem() const { return problem_; }
   int dim() const { return dim_; }
   const std::optional<Rat>& incumbent() const { return z_; }
   const std::vector<ProofStep>& steps() const { return steps_; }
   CertificateFile finish() const { return CertificateFile{problem_, steps_}; }

   ConstraintId fresh() { return ++next_id_; }
   void push(ProofStep step) { steps_.push_back(std::move(step)); }

   const std::optional<Bound>& upper(int j) const { return upper_[static_cast<std::size_t>(j - 1)]; }
   const std::optional<Bound>& lower(int j) const { return lower_[static_cast<std::size_t>(j - 1)]; }
   void set_upper(int j, Bound b) { upper_[static_cast<std::size_t>(j - 1)] = std::move(b); }
   void set_lower(int j, Bound b) { lower_[static_cast<std::size_t>(j - 1)] = std::move(b); }

   /// Adds premises contributing t * x_j <= t * U_j (resp. -t * x_j <= -t * L_j)
   /// for t > 0. Throws UnboundedVariable if the bound is missing.
   void add_upper_term(LinStep& lin, int j, const Rat& t) const;
   void add_lower_term(LinStep& lin, int j, const Rat& t) const;
   /// Adds bound terms cancelling `e` from a running le-form sum: for each
   /// positive coefficient a lower term, for each negative an upper term.
   void cancel_with_bounds(LinStep& lin, const LinExpr& e) const;

   /// Replaces fractional bounds on integral variables by rounded derived
   /// ones (IMPLIC + ROUND).
   void round_bounds();

   ConstraintId implic(std::vector<Inequality> assumptions, Inequality consequent, std::vector<SubproofStep> proof);
   ConstraintId resolve(ConstraintId first, std::size_t first_index, ConstraintId second, std::size_t second_index);
   /// RED (dominance = false) or DOM step deriving c.
   ConstraintId strengthen(bool dominance, Inequality c, Witness w);
   void solution(Solution values);
   void delete_derived(std::vector<ConstraintId> ids);
   /// TREE with a single root node carrying sigma; REFS cite the upper bounds.
   void install_sigma_tree(const std::vector<int>& sigma);
   void goal() { push(GoalStep{}); }

   /// Inequality behind a problem constraint or an emitted step (for
   /// implications, the consequent). Throws UnknownId.
   const Inequality& known(ConstraintId id) const;
   /// Replays a subproof the way the verifier does, with `locals` as A1, A2, ...
   Inequality derive(const std::vector<SubproofStep>& steps, const std::vector<Inequality>& locals = {}) const;

 private:
   Problem problem_;
   std::vector<ProofStep> steps_;
   ConstraintId next_id_ = 0;
   int dim_ = 0;
   std::optional<Rat> z_;
   std::map<ConstraintId, Inequality> known_;
   std::vector<std::optional<Bound>> upper_;
   std::vector<std::optional<Bound>> lower_;
};

LinStep lin(std::vector<std::pair<PremiseRef, Rat>> terms);
PremiseRef id_ref(ConstraintId id);
PremiseRef local_ref(std::size_t k);
PremiseRef objective_ref();
PremiseRef previous_ref();

struct LexResult
{
   ConstraintId id = 0;
   Inequality constraint;
   std::vector<Rat> weights;   // (U - L + 1)^(l - i), i = 1..l
};

/// Derives sum_i (U-L+1)^(l-i) (x_{s_i} - gamma(x)_{s_i}) >= 0 for
/// s = sigma, where gamma(x)_i = x_{gamma^{-1}(i)}. The root of the current
/// tree must carry sigma as a prefix of its sigma list. Intermediate
/// constraints of the ladder are deleted afterwards.
LexResult emit_lex_constraint(CertBuilder& b, const std::vector<int>& sigma, const std::vector<int>& gamma, const Rat& lo,
                              const Rat& hi);

/// CG cut: aggregate `rows` (le-form multipliers), round fractional
/// coefficients down with lower bounds, then round the right-hand side.
ConstraintId emit_cg_cut(CertBuilder& b, const std::vector<std::pair<ConstraintId, Rat>>& rows);

/// Cover inequality sum_{j in cover} x_j <= |cover| - 1 from a knapsack row
/// over binaries.
ConstraintId emit_cover_cut(CertBuilder& b, ConstraintId knapsack, const std::vector<int>& cover);

struct FlowSet
{
   std::vector<int> x;                  // binary arc indicators
   std::vector<int> y;                  // arc flows, y_j >= 0
   std::vector<Rat> capacity;           // a_j
   Rat demand;                          // b
   ConstraintId flow_row = 0;           // sum_j y_j <= b
   std::vector<ConstraintId> vub_rows;  // y_j - a_j x_j <= 0
};

/// Flow cover inequality sum_C y_j + sum_C (a_j - lambda)^+ (1 - x_j) <= b
/// for cover positions `cover` (0-based into FlowSet vectors).
ConstraintId emit_flowcover_cut(CertBuilder& b, const FlowSet& set, const std::vector<std::size_t>& cover);

/// One side of a split disjunction: the subproof of the cut from the side's
/// assumption (Local 1).
struct SplitSide
{
   std::vector<SubproofStep> proof;
};

/// Split cut valid for both pi x <= pi0 and pi x >= pi0 + 1.
ConstraintId emit_split_cut(CertBuilder& b, const LinExpr& pi, const Rat& pi0, const Inequality& cut, const SplitSide& left,
                            const SplitSide& right);

struct ReducedCostData
{
   std::vector<std::pair<ConstraintId, Rat>> duals;   // y >= 0 on le-form rows
   Rat z_lp;
   int var = 0;
};

/// Bound on x_var from g(x) < z, y^T(Ax <= b) and the other variables'
/// bounds, divided by the reduced cost and rounded when x_var is integral.
ConstraintId emit_reduced_cost_fixing(CertBuilder& b, const ReducedCostData& data);

/// True if x_j -> x_{perm(j)} maps the constraint multiset, the objective
/// and the integrality set onto themselves.
bool is_formulation_symmetry(const Problem& p, const std::vector<int>& perm);

}   // namespace mipcert

#endif
