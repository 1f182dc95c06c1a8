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

#include "mipcert/rules.hpp"

#include "mipcert/error.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <unordered_map>

namespace mipcert {

namespace {

template <class... Ts>
struct Overloaded : Ts...
{
   using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

std::string id_str(ConstraintId id)
{
   return std::to_string(id);
}

/// Premises available to the subproofs of one rule application.
struct ProofContext
{
   explicit ProofContext(const Configuration& c) : cfg(c) {}

   const Configuration& cfg;
   bool use_derived = true;
   std::optional<ConstraintId> excluded;
   std::vector<Inequality> locals;
   std::vector<Inequality> hyps;
   std::optional<Inequality> objective;   // g(x) < z when available
   bool objective_forbidden_infinite = false;
   std::set<int> integral;

   const Constraint* lookup(ConstraintId id) const
   {
      if( excluded && *excluded == id )
         return nullptr;
      if( auto it = cfg.core.find(id); it != cfg.core.end() )
         return &it->second;
      if( use_derived )
         if( auto it = cfg.derived.find(id); it != cfg.derived.end() )
            return &it->second;
      return nullptr;
   }

   bool in_context(const Inequality& assumption) const
   {
      for( const auto& l : locals )
         if( dominates(l, assumption) )
            return true;
      for( const auto& h : hyps )
         if( dominates(h, assumption) )
            return true;
      return false;
   }

   /// The inequality a cited constraint contributes, if any.
   const Inequality* usable(const Constraint& c) const
   {
      if( const auto* i = std::get_if<Inequality>(&c) )
         return i;
      if( const auto* imp = std::get_if<Implication>(&c) )
      {
         for( const auto& a : imp->assumptions )
            if( !in_context(a) )
               return nullptr;
         return &imp->consequent;
      }
      return nullptr;
   }

   template <class F>
   void for_each_pool(F&& f) const
   {
      for( const auto& [id, c] : cfg.core )
         if( !excluded || *excluded != id )
            f(id, c);
      if( use_derived )
         for( const auto& [id, c] : cfg.derived )
            if( !excluded || *excluded != id )
               f(id, c);
   }
};

Inequality run_subproof(const ProofContext& ctx, const Subproof& sub)
{
   std::optional<Inequality> cur;
   for( const auto& step : sub.steps )
   {
      if( std::holds_alternative<RoundStep>(step) )
      {
         if( !cur )
            fail(ErrorKind::SubproofFailed, "ROUND without a preceding combination");
         cur = round_integral(*cur, ctx.integral);
         continue;
      }
      const auto& lin = std::get<LinStep>(step);
      std::vector<std::pair<Inequality, Rat>> premises;
      premises.reserve(lin.terms.size());
      for( const auto& [ref, mult] : lin.terms )
      {
         switch( ref.kind )
         {
         case PremiseRef::Kind::Id:
         {
            const Constraint* c = ctx.lookup(ref.id);
            if( !c )
               fail(ErrorKind::UnknownPremiseId, "constraint " + id_str(ref.id) + " is not available here");
            const Inequality* ineq = ctx.usable(*c);
            if( !ineq )
               fail(ErrorKind::SubproofFailed, "constraint " + id_str(ref.id) + " cannot be used as a linear premise here");
            premises.emplace_back(*ineq, mult);
            break;
         }
         case PremiseRef::Kind::Local:
         case PremiseRef::Kind::Hyp:
         {
            const auto& list = ref.kind == PremiseRef::Kind::Local ? ctx.locals : ctx.hyps;
            if( ref.id < 1 || static_cast<std::size_t>(ref.id) > list.size() )
               fail(ErrorKind::UnknownPremiseId,
                    std::string(ref.kind == PremiseRef::Kind::Local ? "A" : "H") + std::to_string(ref.id) + " does not exist");
            premises.emplace_back(list[static_cast<std::size_t>(ref.id - 1)], mult);
            break;
         }
         case PremiseRef::Kind::Objective:
            if( !ctx.objective )
            {
               if( ctx.objective_forbidden_infinite )
                  fail(ErrorKind::StrictBoundUsedWithInfiniteZ, "g(x) < z cited while z is infinite");
               fail(ErrorKind::UnknownPremiseId, "objective premise is not available here");
            }
            premises.emplace_back(*ctx.objective, mult);
            break;
         case PremiseRef::Kind::Previous:
            if( !cur )
               fail(ErrorKind::UnknownPremiseId, "no previous result to cite");
            premises.emplace_back(*cur, mult);
            break;
         }
      }
      cur = linear_combine(premises, ctx.cfg.dim);
   }
   if( !cur )
      cur = Inequality{};
   return *cur;
}

void check_subproof(const ProofContext& ctx, const Subproof& sub, const Inequality& required, const std::string& what)
{
   Inequality result = run_subproof(ctx, sub);
   if( !dominates(result, sub.target) )
      fail(ErrorKind::SubproofFailed, what + ": derived " + to_string(result) + " does not imply " + to_string(sub.target));
   if( !dominates(sub.target, required) )
      fail(ErrorKind::SubproofFailed, what + ": stated " + to_string(sub.target) + " does not imply " + to_string(required));
}

bool subproof_holds(const ProofContext& ctx, const Subproof& sub, const Inequality& required)
{
   try
   {
      Inequality result = run_subproof(ctx, sub);
      return dominates(result, sub.target) && dominates(sub.target, required);
   }
   catch( const CertError& )
   {
      return false;
   }
}

void claim_id(const Configuration& cfg, ConstraintId id)
{
   if( id <= cfg.max_id )
      fail(ErrorKind::DuplicateId, "id " + id_str(id) + " is not fresh (last id " + id_str(cfg.max_id) + ")");
}

void check_dim(const Configuration& cfg, const Constraint& c)
{
   if( max_var(c) > cfg.dim )
      fail(ErrorKind::DimensionMismatch, to_string(c) + " exceeds dimension " + std::to_string(cfg.dim));
}

Inequality objective_premise(const Configuration& cfg)
{
   return Inequality::make(cfg.objective, Relation::Le, *cfg.bound, true);
}

// Canonical keys used to find a pooled constraint equal to (or dominating) a
// composed target without scanning the pool for every target.
std::string direction_key(const LinExpr& lhs)
{
   Rat scale = abs(lhs.terms().begin()->second);
   return to_string(lhs * Rat(1 / scale));
}

std::string implication_key(const Implication& imp)
{
   std::vector<std::string> parts;
   for( const auto& a : imp.assumptions )
      parts.push_back(to_string(a));
   std::sort(parts.begin(), parts.end());
   parts.erase(std::unique(parts.begin(), parts.end()), parts.end());
   std::string out;
   for( const auto& p : parts )
      out += p + ";";
   return out + "=>" + to_string(imp.consequent);
}

class PoolIndex
{
 public:
   explicit PoolIndex(const ProofContext& ctx)
   {
      ctx.for_each_pool([&](ConstraintId, const Constraint& c) { add(c); });
      for( const auto& l : ctx.locals )
         add(Constraint(l));
   }

   bool covers(const Constraint& target) const
   {
      if( const auto* imp = std::get_if<Implication>(&target) )
      {
         if( implications_.contains(implication_key(*imp)) )
            return true;
         return covers(Constraint(imp->consequent));
      }
      const auto& t = std::get<Inequality>(target);
      if( t.is_tautology() || falsity_ )
         return true;
      auto check = [&](const LinExpr& lhs) {
         auto it = linear_.find(direction_key(lhs));
         if( it == linear_.end() )
            return false;
         for( const Inequality* d : it->second )
            if( dominates(*d, t) )
               return true;
         return false;
      };
      if( check(t.lhs) )
         return true;
      return t.rel != Relation::Eq && check(-t.lhs);
   }

 private:
   void add(const Constraint& c)
   {
      if( const auto* i = std::get_if<Inequality>(&c) )
      {
         if( i->is_falsity() )
            falsity_ = true;
         if( i->lhs.is_constant() )
            return;
         owned_.push_back(*i);
         linear_[direction_key(i->lhs)].push_back(&owned_.back());
         if( i->rel == Relation::Eq )
            linear_[direction_key(-i->lhs)].push_back(&owned_.back());
      }
      else if( const auto* imp = std::get_if<Implication>(&c) )
         implications_.insert(implication_key(*imp));
   }

   std::deque<Inequality> owned_;
   std::unordered_map<std::string, std::vector<const Inequality*>> linear_;
   std::set<std::string> implications_;
   bool falsity_ = false;
};

bool row_preserves_integrality(const AffineMap& w, int j, const std::set<int>& integral)
{
   auto it = w.rows.find(j);
   if( it == w.rows.end() )
      return true;
   if( !is_integer(it->second.constant()) )
      return false;
   for( const auto& [k, a] : it->second.terms() )
      if( !is_integer(a) || !integral.contains(k) )
         return false;
   return true;
}

void validate_map(const Configuration& cfg, const AffineMap& w)
{
   if( w.dim != cfg.dim )
      fail(ErrorKind::DimensionMismatch, "witness dimension " + std::to_string(w.dim) + " differs from " + std::to_string(cfg.dim));
   for( const auto& [j, row] : w.rows )
      if( j < 1 || j > cfg.dim || row.max_var() > cfg.dim )
         fail(ErrorKind::DimensionMismatch, "witness row for x" + std::to_string(j) + " out of range");
}

/// Shared core of redundance, dominance and deletion by redundance.
void check_witness(const ProofContext& ctx, const Constraint& c, const Witness& wit, bool targets_include_derived,
                   std::optional<OrderMode> mode)
{
   const Configuration& cfg = ctx.cfg;
   const AffineMap& w = wit.map;
   validate_map(cfg, w);

   std::map<ConstraintId, const Subproof*> by_id;
   const Subproof* self = nullptr;
   const Subproof* obj = nullptr;
   for( const auto& p : wit.proofs )
   {
      switch( p.kind )
      {
      case WitnessProof::Kind::Id: by_id.emplace(p.id, &p.proof); break;
      case WitnessProof::Kind::Self: self = &p.proof; break;
      case WitnessProof::Kind::Objective: obj = &p.proof; break;
      }
   }

   std::optional<PoolIndex> index;
   auto check_target = [&](const std::string& name, const Constraint& e, const Subproof* proof, bool is_self) {
      if( const auto* m = std::get_if<Integral>(&e) )
      {
         if( !row_preserves_integrality(w, m->var, ctx.integral) )
            fail(ErrorKind::WitnessNotIntegral, "row of x" + std::to_string(m->var) + " does not preserve integrality");
         return;
      }
      if( !is_self )
      {
         bool touched = std::visit(Overloaded{[&](const Inequality& i) { return w.touches(i.lhs); },
                                              [&](const Integral&) { return false; },
                                              [&](const Implication& imp) {
                                                 if( w.touches(imp.consequent.lhs) )
                                                    return true;
                                                 for( const auto& a : imp.assumptions )
                                                    if( w.touches(a.lhs) )
                                                       return true;
                                                 return false;
                                              }},
                                   e);
         if( !touched )
            return;
      }
      Constraint image = compose(w, e);
      if( proof )
      {
         ProofContext sub = ctx;
         const Inequality* goal = nullptr;
         if( auto* imp = std::get_if<Implication>(&image) )
         {
            sub.hyps = imp->assumptions;
            goal = &imp->consequent;
         }
         else
            goal = &std::get<Inequality>(image);
         check_subproof(sub, *proof, *goal, name);
         return;
      }
      if( !index )
         index.emplace(ctx);
      if( !index->covers(image) )
         fail(ErrorKind::MissingSubproof, name + ": no proof that the witness satisfies " + to_string(image));
   };

   ctx.for_each_pool([&](ConstraintId id, const Constraint& e) {
      if( !targets_include_derived && !cfg.core.contains(id) )
         return;
      auto it = by_id.find(id);
      check_target("constraint " + id_str(id), e, it == by_id.end() ? nullptr : it->second, false);
   });
   if( mode != OrderMode::Strict )
      check_target("new constraint", c, self, true);

   LinExpr delta = w.compose(cfg.objective) - cfg.objective;
   if( !(delta.is_constant() && delta.constant() <= 0) )
   {
      if( !obj )
         fail(ErrorKind::MissingSubproof, "objective: no proof that the witness does not worsen g");
      check_subproof(ctx, *obj, Inequality::make(delta, Relation::Le, 0), "objective");
   }

   if( !mode )
      return;
   bool strict = *mode == OrderMode::Strict;
   ErrorKind order_error = strict ? ErrorKind::StrictOrderUndetermined : ErrorKind::OrderUndetermined;
   if( cfg.tree.all_sigma_empty() )
   {
      if( strict )
         fail(order_error, "every sigma list is empty, so no strict improvement exists");
      return;
   }

   std::vector<const Inequality*> facts;
   ctx.for_each_pool([&](ConstraintId, const Constraint& e) {
      if( const Inequality* i = ctx.usable(e) )
         facts.push_back(i);
   });
   for( const auto& l : ctx.locals )
      facts.push_back(&l);
   Box box = propagate_box(facts, cfg.dim, ctx.integral);

   OrderProver prover = [&](NodeId node, std::size_t pos, const LinExpr& diff, Evidence kind) {
      for( const auto& ev : wit.evidence )
      {
         if( ev.kind != kind || ev.position != pos + 1 || (ev.node && *ev.node != node) )
            continue;
         if( kind == Evidence::Equal )
         {
            if( ev.proofs.size() == 2 && subproof_holds(ctx, ev.proofs[0], Inequality::make(diff, Relation::Le, 0)) &&
                subproof_holds(ctx, ev.proofs[1], Inequality::make(diff, Relation::Ge, 0)) )
               return true;
         }
         else if( ev.proofs.size() == 1 && subproof_holds(ctx, ev.proofs[0], Inequality::make(diff, Relation::Ge, cfg.eps)) )
            return true;
      }
      return false;
   };
   OrderResult r = dcn_and_compare(cfg.tree, box, w, cfg.eps, *mode, ctx.integral, prover);
   if( !r.verified )
      fail(order_error, r.reason);
}

std::vector<Inequality> strengthening_locals(const Constraint& c)
{
   return negate(c);
}

}   // namespace

std::string rule_name(const ProofStep& step)
{
   return std::visit(Overloaded{[](const ImplicStep&) { return "IMPLIC"; }, [](const ResolveStep&) { return "RESOLVE"; },
                                [](const SolutionStep&) { return "SOL"; }, [](const ObjectiveStep&) { return "OBJSWAP"; },
                                [](const StrengthenStep& s) { return s.dominance ? "DOM" : "RED"; },
                                [](const EpsilonStep&) { return "EPS"; }, [](const TransferStep&) { return "XFER"; },
                                [](const DeleteStep&) { return "DEL"; }, [](const TreeStep&) { return "TREE"; },
                                [](const ExtendStep&) { return "EXT"; }, [](const GoalStep&) { return "GOAL"; }},
                     step);
}

std::string to_string(const Verdict& v)
{
   if( v.kind == Verdict::Kind::Infeasible )
      return "infeasible";
   return "optimal " + to_string(*v.value);
}

void check_implicational(Configuration& cfg, const ImplicStep& step)
{
   claim_id(cfg, step.id);
   Constraint c = make_implication(step.assumptions, step.consequent);
   check_dim(cfg, c);
   ProofContext ctx(cfg);
   ctx.locals = step.assumptions;
   ctx.integral = cfg.integral_vars();
   if( cfg.bound )
      ctx.objective = objective_premise(cfg);
   else
      ctx.objective_forbidden_infinite = true;
   check_subproof(ctx, step.proof, step.consequent, "IMPLIC " + id_str(step.id));
   cfg.derived.emplace(step.id, std::move(c));
   cfg.max_id = step.id;
}

void check_resolution(Configuration& cfg, const ResolveStep& step)
{
   claim_id(cfg, step.id);
   auto get = [&](ConstraintId id, std::size_t k) -> std::pair<const Implication*, const Inequality*> {
      const Constraint* c = cfg.find(id);
      if( !c )
         fail(ErrorKind::UnknownId, "constraint " + id_str(id) + " does not exist");
      const auto* imp = std::get_if<Implication>(c);
      if( !imp )
         fail(ErrorKind::NotImplications, "constraint " + id_str(id) + " is not an implication");
      if( k < 1 || k > imp->assumptions.size() )
         fail(ErrorKind::NotImplications, "constraint " + id_str(id) + " has no assumption " + std::to_string(k));
      return {imp, &imp->assumptions[k - 1]};
   };
   auto [imp1, a1] = get(step.first, step.first_index);
   auto [imp2, a2] = get(step.second, step.second_index);

   std::set<int> integral = cfg.integral_vars();
   auto covers = [&](const Inequality& upper, const Inequality& lower) {
      // upper: e <= r1, lower: e >= r2
      if( upper.rel == Relation::Eq || lower.rel == Relation::Eq )
         return false;
      Inequality u = upper.as_le();
      Inequality l = lower.as_le();   // -e <= -r2
      if( u.lhs.is_constant() || !(u.lhs == -l.lhs) )
         return false;
      Rat r1 = u.rhs;
      Rat r2 = -l.rhs;
      if( r2 < r1 || (r2 == r1 && !(u.strict && l.strict)) )
         return true;
      bool integral_valued = std::all_of(u.lhs.terms().begin(), u.lhs.terms().end(),
                                         [&](const auto& t) { return is_integer(t.second) && integral.contains(t.first); });
      if( !integral_valued )
         return false;
      Rat up = u.strict ? Rat(ceil(r1) - 1) : floor(r1);
      Rat lo = l.strict ? Rat(floor(r2) + 1) : ceil(r2);
      return lo <= up + 1;
   };
   if( !covers(*a1, *a2) && !covers(*a2, *a1) )
      fail(ErrorKind::CoverCheckFailed, to_string(*a1) + " and " + to_string(*a2) + " do not cover the feasible region");

   const Inequality* consequent = nullptr;
   if( dominates(imp1->consequent, imp2->consequent) )
      consequent = &imp2->consequent;
   else if( dominates(imp2->consequent, imp1->consequent) )
      consequent = &imp1->consequent;
   else
      fail(ErrorKind::ConsequentsDiffer, to_string(imp1->consequent) + " vs " + to_string(imp2->consequent));

   std::vector<Inequality> assumptions;
   auto collect = [&](const Implication& imp, std::size_t skip) {
      for( std::size_t k = 0; k < imp.assumptions.size(); ++k )
         if( k + 1 != skip && std::find(assumptions.begin(), assumptions.end(), imp.assumptions[k]) == assumptions.end() )
            assumptions.push_back(imp.assumptions[k]);
   };
   collect(*imp1, step.first_index);
   collect(*imp2, step.second_index);
   Constraint c = make_implication(std::move(assumptions), *consequent);
   cfg.derived.emplace(step.id, std::move(c));
   cfg.max_id = step.id;
}

void check_objective_bound(Configuration& cfg, const SolutionStep& step)
{
   if( step.values.size() != static_cast<std::size_t>(cfg.dim) )
      fail(ErrorKind::DimensionMismatch, "solution has " + std::to_string(step.values.size()) + " entries, expected " +
                                            std::to_string(cfg.dim));
   for( const auto& [id, c] : cfg.core )
      if( !evaluate(step.values, c) )
         fail(ErrorKind::InfeasibleSolution, "solution violates constraint " + id_str(id) + ": " + to_string(c));
   Rat value = cfg.objective.evaluate(step.values);
   if( cfg.bound && value >= *cfg.bound )
      fail(ErrorKind::NotImproving, "objective " + to_string(value) + " does not improve on " + to_string(*cfg.bound));
   cfg.bound = value;
}

void check_objective_update(Configuration& cfg, const ObjectiveStep& step)
{
   if( step.objective.max_var() > cfg.dim )
      fail(ErrorKind::DimensionMismatch, "objective exceeds dimension");
   LinExpr expected = cfg.objective;
   for( const auto& [id, mult] : step.multipliers )
   {
      auto it = cfg.core.find(id);
      if( it == cfg.core.end() )
         fail(ErrorKind::UnknownPremiseId, "core constraint " + id_str(id) + " does not exist");
      const auto* eq = std::get_if<Inequality>(&it->second);
      if( !eq || eq->rel != Relation::Eq )
         fail(ErrorKind::NonEqualityPremise, "constraint " + id_str(id) + " is not an equation");
      LinExpr zero = eq->lhs;
      zero.set_constant(-eq->rhs);
      expected.add_scaled(zero, mult);
   }
   if( !(expected == step.objective) )
      fail(ErrorKind::IdentityCheckFailed, "new objective differs from the combination: expected " + to_string(expected));
   cfg.objective = step.objective;
}

void check_redundance(Configuration& cfg, const StrengthenStep& step)
{
   claim_id(cfg, step.id);
   check_dim(cfg, step.constraint);
   ProofContext ctx(cfg);
   ctx.locals = strengthening_locals(step.constraint);
   ctx.integral = cfg.integral_vars();
   check_witness(ctx, step.constraint, step.witness, true, OrderMode::Weak);
   cfg.derived.emplace(step.id, step.constraint);
   cfg.max_id = step.id;
}

void check_dominance(Configuration& cfg, const StrengthenStep& step)
{
   claim_id(cfg, step.id);
   check_dim(cfg, step.constraint);
   ProofContext ctx(cfg);
   ctx.locals = strengthening_locals(step.constraint);
   ctx.integral = cfg.integral_vars();
   check_witness(ctx, step.constraint, step.witness, false, OrderMode::Strict);
   cfg.derived.emplace(step.id, step.constraint);
   cfg.max_id = step.id;
}

void check_epsilon_shrink(Configuration& cfg, const EpsilonStep& step)
{
   if( step.eps <= 0 || step.eps >= cfg.eps )
      fail(ErrorKind::NotShrinking, "epsilon " + to_string(step.eps) + " is not in (0, " + to_string(cfg.eps) + ")");
   cfg.eps = step.eps;
}

void check_transfer(Configuration& cfg, const TransferStep& step)
{
   auto it = cfg.derived.find(step.id);
   if( it == cfg.derived.end() )
      fail(ErrorKind::UnknownId, "derived constraint " + id_str(step.id) + " does not exist");
   cfg.core.insert(cfg.derived.extract(it));
}

void check_deletion(Configuration& cfg, const DeleteStep& step)
{
   using V = DeleteStep::Variant;
   if( step.variant == V::A )
   {
      std::set<ConstraintId> unique(step.ids.begin(), step.ids.end());
      for( ConstraintId id : unique )
         if( !cfg.derived.contains(id) )
            fail(ErrorKind::VariantPreconditionFailed, "constraint " + id_str(id) + " is not derived");
      for( ConstraintId id : unique )
         cfg.derived.erase(id);
      return;
   }

   if( step.ids.size() != 1 )
      fail(ErrorKind::VariantPreconditionFailed, "core deletion removes exactly one constraint");
   ConstraintId id = step.ids.front();
   auto it = cfg.core.find(id);
   if( it == cfg.core.end() )
      fail(ErrorKind::VariantPreconditionFailed, "constraint " + id_str(id) + " is not in the core");
   const Constraint& c = it->second;

   ProofContext ctx(cfg);
   ctx.use_derived = false;
   ctx.excluded = id;
   ctx.integral = cfg.integral_vars();
   if( const auto* m = std::get_if<Integral>(&c) )
      ctx.integral.erase(m->var);

   if( step.variant == V::B )
   {
      if( !step.proof )
         fail(ErrorKind::VariantPreconditionFailed, "deletion from the core needs a subproof");
      if( std::holds_alternative<Integral>(c) )
         fail(ErrorKind::VariantPreconditionFailed, "integrality cannot be derived by a subproof");
      const Inequality* goal = nullptr;
      if( const auto* imp = std::get_if<Implication>(&c) )
      {
         ctx.hyps = imp->assumptions;
         goal = &imp->consequent;
      }
      else
         goal = &std::get<Inequality>(c);
      check_subproof(ctx, *step.proof, *goal, "DEL B " + id_str(id));
   }
   else
   {
      if( !cfg.tree.all_sigma_empty() )
         fail(ErrorKind::VariantPreconditionFailed, "deletion by redundance needs every sigma list empty");
      if( !cfg.derived.empty() )
         fail(ErrorKind::VariantPreconditionFailed, "deletion by redundance needs an empty derived set");
      if( !step.witness )
         fail(ErrorKind::VariantPreconditionFailed, "deletion by redundance needs a witness");
      if( std::holds_alternative<Integral>(c) )
         fail(ErrorKind::VariantPreconditionFailed, "integrality markers cannot be negated");
      ctx.locals = negate(c);
      check_witness(ctx, c, *step.witness, false, std::nullopt);
   }

   Constraint removed = std::move(it->second);
   cfg.core.erase(it);
   auto violations = check_tree_consistency(cfg.tree, cfg);
   if( !violations.empty() )
   {
      cfg.core.emplace(id, std::move(removed));
      fail(ErrorKind::VariantPreconditionFailed,
           "tree relies on constraint " + id_str(id) + " (" + violations.front().condition + ": " + violations.front().message + ")");
   }
}

void check_tree_exchange(Configuration& cfg, const TreeStep& step)
{
   if( !cfg.derived.empty() )
      fail(ErrorKind::DerivedSetNonEmpty, std::to_string(cfg.derived.size()) + " derived constraints are still present");
   auto violations = check_tree_consistency(step.tree, cfg);
   if( !violations.empty() )
   {
      std::string msg;
      for( const auto& v : violations )
         msg += (msg.empty() ? "" : "; ") + v.condition + " at node " + std::to_string(v.node) + ": " + v.message;
      fail(ErrorKind::ConsistencyViolation, msg);
   }
   BranchTree tree = step.tree;
   tree.link();
   cfg.tree = std::move(tree);
}

void check_dimension_extension(Configuration& cfg)
{
   ++cfg.dim;
}

Verdict check_goal(const Configuration& cfg)
{
   auto has_falsity = [](const std::map<ConstraintId, Constraint>& m) {
      for( const auto& [id, c] : m )
         if( const auto* i = std::get_if<Inequality>(&c); i && i->is_falsity() )
            return true;
      return false;
   };
   if( !has_falsity(cfg.derived) && !has_falsity(cfg.core) )
      fail(ErrorKind::NoContradictionPresent, "no constraint of the form 0 <= -1 has been derived");
   if( cfg.bound )
      return Verdict{Verdict::Kind::Optimal, cfg.bound};
   return Verdict{Verdict::Kind::Infeasible, std::nullopt};
}

std::optional<Verdict> apply_step(Configuration& cfg, const ProofStep& step)
{
   return std::visit(Overloaded{[&](const ImplicStep& s) -> std::optional<Verdict> {
                                   check_implicational(cfg, s);
                                   return std::nullopt;
                                },
                                [&](const ResolveStep& s) -> std::optional<Verdict> {
                                   check_resolution(cfg, s);
                                   return std::nullopt;
                                },
                                [&](const SolutionStep& s) -> std::optional<Verdict> {
                                   check_objective_bound(cfg, s);
                                   return std::nullopt;
                                },
                                [&](const ObjectiveStep& s) -> std::optional<Verdict> {
                                   check_objective_update(cfg, s);
                                   return std::nullopt;
                                },
                                [&](const StrengthenStep& s) -> std::optional<Verdict> {
                                   if( s.dominance )
                                      check_dominance(cfg, s);
                                   else
                                      check_redundance(cfg, s);
                                   return std::nullopt;
                                },
                                [&](const EpsilonStep& s) -> std::optional<Verdict> {
                                   check_epsilon_shrink(cfg, s);
                                   return std::nullopt;
                                },
                                [&](const TransferStep& s) -> std::optional<Verdict> {
                                   check_transfer(cfg, s);
                                   return std::nullopt;
                                },
                                [&](const DeleteStep& s) -> std::optional<Verdict> {
                                   check_deletion(cfg, s);
                                   return std::nullopt;
                                },
                                [&](const TreeStep& s) -> std::optional<Verdict> {
                                   check_tree_exchange(cfg, s);
                                   return std::nullopt;
                                },
                                [&](const ExtendStep&) -> std::optional<Verdict> {
                                   check_dimension_extension(cfg);
                                   return std::nullopt;
                                },
                                [&](const GoalStep&) -> std::optional<Verdict> { return check_goal(cfg); }},
                     step);
}

}   // namespace mipcert
