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

#include "mipcert/tree.hpp"

#include "mipcert/error.hpp"

namespace mipcert {

bool Interval::empty() const
{
   if( !lo || !hi )
      return false;
   if( *lo > *hi )
      return true;
   return *lo == *hi && (lo_strict || hi_strict);
}

bool Interval::contains(const Rat& v) const
{
   if( lo && (lo_strict ? v <= *lo : v < *lo) )
      return false;
   if( hi && (hi_strict ? v >= *hi : v > *hi) )
      return false;
   return true;
}

bool Interval::subset_of(const Interval& other) const
{
   if( empty() )
      return true;
   if( other.lo )
   {
      if( !lo || *lo < *other.lo || (*lo == *other.lo && other.lo_strict && !lo_strict) )
         return false;
   }
   if( other.hi )
   {
      if( !hi || *hi > *other.hi || (*hi == *other.hi && other.hi_strict && !hi_strict) )
         return false;
   }
   return true;
}

bool Interval::intersects(const Interval& other) const
{
   return !intersect(other).empty();
}

Interval Interval::intersect(const Interval& other) const
{
   Interval out = *this;
   if( other.lo && (!out.lo || *other.lo > *out.lo || (*other.lo == *out.lo && other.lo_strict)) )
   {
      out.lo = other.lo;
      out.lo_strict = other.lo_strict;
   }
   if( other.hi && (!out.hi || *other.hi < *out.hi || (*other.hi == *out.hi && other.hi_strict)) )
   {
      out.hi = other.hi;
      out.hi_strict = other.hi_strict;
   }
   return out;
}

Interval Interval::round_integral() const
{
   Interval out;
   if( lo )
      out.lo = lo_strict ? Rat(floor(*lo) + 1) : ceil(*lo);
   if( hi )
      out.hi = hi_strict ? Rat(ceil(*hi) - 1) : floor(*hi);
   return out;
}

Interval operator+(const Interval& a, const Interval& b)
{
   Interval out;
   if( a.lo && b.lo )
   {
      out.lo = *a.lo + *b.lo;
      out.lo_strict = a.lo_strict || b.lo_strict;
   }
   if( a.hi && b.hi )
   {
      out.hi = *a.hi + *b.hi;
      out.hi_strict = a.hi_strict || b.hi_strict;
   }
   return out;
}

Interval operator*(const Rat& factor, const Interval& a)
{
   if( factor == 0 )
      return Interval::point(0);
   Interval out;
   if( factor > 0 )
   {
      if( a.lo )
         out.lo = factor * *a.lo;
      if( a.hi )
         out.hi = factor * *a.hi;
      out.lo_strict = a.lo_strict;
      out.hi_strict = a.hi_strict;
   }
   else
   {
      if( a.hi )
         out.lo = factor * *a.hi;
      if( a.lo )
         out.hi = factor * *a.lo;
      out.lo_strict = a.hi_strict;
      out.hi_strict = a.lo_strict;
   }
   return out;
}

bool Box::empty() const
{
   for( const auto& iv : iv_ )
      if( iv.empty() )
         return true;
   return false;
}

Interval Box::range(const LinExpr& e) const
{
   Interval out = Interval::point(e.constant());
   for( const auto& [j, a] : e.terms() )
   {
      if( j > dim() )
         fail(ErrorKind::DimensionMismatch, "box has no x" + std::to_string(j));
      out = out + a * (*this)[j];
   }
   return out;
}

LinExpr AffineMap::row(int j) const
{
   auto it = rows.find(j);
   return it == rows.end() ? LinExpr::variable(j) : it->second;
}

bool AffineMap::touches(const LinExpr& e) const
{
   if( rows.size() < e.terms().size() )
   {
      for( const auto& [j, r] : rows )
         if( e.terms().contains(j) )
            return true;
      return false;
   }
   for( const auto& [j, a] : e.terms() )
      if( rows.contains(j) )
         return true;
   return false;
}

LinExpr AffineMap::compose(const LinExpr& e) const
{
   LinExpr out(e.constant());
   for( const auto& [j, a] : e.terms() )
   {
      auto it = rows.find(j);
      if( it == rows.end() )
         out.add_term(j, a);
      else
         out.add_scaled(it->second, a);
   }
   return out;
}

Inequality AffineMap::compose(const Inequality& ineq) const
{
   return Inequality::make(compose(ineq.lhs), ineq.rel, ineq.rhs, ineq.strict);
}

std::vector<Rat> AffineMap::apply(const std::vector<Rat>& x) const
{
   std::vector<Rat> out = x;
   for( const auto& [j, r] : rows )
      out[static_cast<std::size_t>(j - 1)] = r.evaluate(x);
   return out;
}

BranchTree BranchTree::trivial()
{
   BranchTree t;
   t.nodes.emplace(0, TreeNode{});
   t.root = 0;
   return t;
}

bool BranchTree::link()
{
   int roots = 0;
   for( auto& [id, node] : nodes )
      node.children.clear();
   for( auto& [id, node] : nodes )
   {
      if( !node.parent )
      {
         root = id;
         ++roots;
         continue;
      }
      auto it = nodes.find(*node.parent);
      if( it == nodes.end() || *node.parent == id )
         return false;
      it->second.children.push_back(id);
   }
   return roots == 1;
}

bool BranchTree::all_sigma_empty() const
{
   for( const auto& [id, node] : nodes )
      if( !node.sigma.empty() )
         return false;
   return true;
}

}   // namespace mipcert
