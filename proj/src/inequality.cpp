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

#include "mipcert/inequality.hpp"

#include "mipcert/error.hpp"

namespace mipcert {

Inequality Inequality::make(LinExpr lhs, Relation rel, Rat rhs, bool strict)
{
   if( rel == Relation::Eq && strict )
      fail(ErrorKind::InvalidArgument, "equations cannot be strict");
   rhs -= lhs.constant();
   lhs.set_constant(0);
   return Inequality{std::move(lhs), rel, std::move(rhs), strict};
}

Inequality Inequality::as_le() const
{
   if( rel != Relation::Ge )
      return *this;
   return Inequality{-lhs, Relation::Le, Rat(-rhs), strict};
}

bool Inequality::is_falsity() const
{
   if( !lhs.is_constant() )
      return false;
   switch( rel )
   {
   case Relation::Le: return rhs < 0 || (rhs == 0 && strict);
   case Relation::Ge: return rhs > 0 || (rhs == 0 && strict);
   case Relation::Eq: return rhs != 0;
   }
   return false;
}

bool Inequality::is_tautology() const
{
   return lhs.is_constant() && !is_falsity();
}

bool Inequality::holds(std::span<const Rat> x) const
{
   Rat v = lhs.evaluate(x);
   switch( rel )
   {
   case Relation::Le: return strict ? v < rhs : v <= rhs;
   case Relation::Ge: return strict ? v > rhs : v >= rhs;
   case Relation::Eq: return v == rhs;
   }
   return false;
}

Inequality negate(const Inequality& ineq)
{
   if( ineq.rel == Relation::Eq )
      fail(ErrorKind::NotNegatable, "equations must be split before negation");
   Relation flipped = ineq.rel == Relation::Le ? Relation::Ge : Relation::Le;
   return Inequality{ineq.lhs, flipped, ineq.rhs, !ineq.strict};
}

Inequality linear_combine(const std::vector<std::pair<Inequality, Rat>>& premises, int dim)
{
   Inequality out{LinExpr(), Relation::Le, Rat(0), false};
   bool all_eq = !premises.empty();
   for( const auto& [premise, mult] : premises )
   {
      if( premise.max_var() > dim )
         fail(ErrorKind::DimensionMismatch,
              "premise references x" + std::to_string(premise.max_var()) + " in dimension " + std::to_string(dim));
      if( premise.rel != Relation::Eq )
      {
         all_eq = false;
         if( mult < 0 )
            fail(ErrorKind::NegativeMultiplierOnInequality, "multiplier " + to_string(mult) + " on " + to_string(premise));
      }
      if( mult == 0 )
         continue;
      Inequality le = premise.as_le();
      out.lhs.add_scaled(le.lhs, mult);
      out.rhs += le.rhs * mult;
      if( le.strict )
         out.strict = true;
   }
   if( all_eq )
      out.rel = Relation::Eq;
   return out;
}

Inequality round_integral(const Inequality& ineq, const std::set<int>& integral_vars)
{
   for( const auto& [j, a] : ineq.lhs.terms() )
   {
      if( !is_integer(a) )
         fail(ErrorKind::NonIntegralCoefficient, "coefficient " + to_string(a) + " of x" + std::to_string(j));
      if( !integral_vars.contains(j) )
         fail(ErrorKind::NonIntegralVariable, "x" + std::to_string(j) + " is not integral");
   }
   Inequality out = ineq;
   out.strict = false;
   switch( ineq.rel )
   {
   case Relation::Le:
      out.rhs = ineq.strict ? Rat(ceil(ineq.rhs) - 1) : floor(ineq.rhs);
      break;
   case Relation::Ge:
      out.rhs = ineq.strict ? Rat(floor(ineq.rhs) + 1) : ceil(ineq.rhs);
      break;
   case Relation::Eq:
      if( !is_integer(ineq.rhs) )
         return Inequality::falsity();
      break;
   }
   return out;
}

namespace {

// Positive s with target = s * derived on the lhs, if one exists.
std::optional<Rat> lhs_scale(const LinExpr& derived, const LinExpr& target)
{
   if( derived.terms().size() != target.terms().size() || derived.terms().empty() )
      return std::nullopt;
   auto dit = derived.terms().begin();
   auto tit = target.terms().begin();
   Rat s = tit->second / dit->second;
   for( ; dit != derived.terms().end(); ++dit, ++tit )
   {
      if( dit->first != tit->first || tit->second != s * dit->second )
         return std::nullopt;
   }
   return s;
}

bool dominates_le(const Inequality& d, const Inequality& t)
{
   auto s = lhs_scale(d.lhs, t.lhs);
   if( !s || *s <= 0 )
      return false;
   Rat scaled = *s * d.rhs;
   if( scaled < t.rhs )
      return true;
   return scaled == t.rhs && (d.strict || !t.strict);
}

}   // namespace

bool dominates(const Inequality& derived, const Inequality& target)
{
   if( derived.is_falsity() || target.is_tautology() )
      return true;
   if( target.rel == Relation::Eq )
   {
      if( derived.rel != Relation::Eq )
         return false;
      auto s = lhs_scale(derived.lhs, target.lhs);
      return s && *s * derived.rhs == target.rhs;
   }
   Inequality t = target.as_le();
   if( derived.rel == Relation::Eq )
   {
      Inequality up{derived.lhs, Relation::Le, derived.rhs, false};
      Inequality down{-derived.lhs, Relation::Le, Rat(-derived.rhs), false};
      return dominates_le(up, t) || dominates_le(down, t);
   }
   return dominates_le(derived.as_le(), t);
}

std::string to_string(const Inequality& ineq)
{
   std::string op;
   switch( ineq.rel )
   {
   case Relation::Le: op = ineq.strict ? " < " : " <= "; break;
   case Relation::Ge: op = ineq.strict ? " > " : " >= "; break;
   case Relation::Eq: op = " = "; break;
   }
   return to_string(ineq.lhs) + op + to_string(ineq.rhs);
}

}   // namespace mipcert
