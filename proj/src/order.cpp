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

#include "mipcert/order.hpp"

#include "mipcert/error.hpp"

#include <algorithm>

namespace mipcert {

namespace {

// Upper (dir > 0) or lower (dir < 0) bound on x_j stated by a single-variable inequality.
std::optional<std::pair<Rat, bool>> single_bound(const Inequality& ineq, int j, int dir)
{
   if( ineq.lhs.terms().size() != 1 || ineq.lhs.terms().begin()->first != j )
      return std::nullopt;
   const Rat& a = ineq.lhs.terms().begin()->second;
   Rat value = ineq.rhs / a;
   if( ineq.rel == Relation::Eq )
      return std::make_pair(value, false);
   Inequality le = ineq.as_le();
   Rat ale = le.lhs.terms().begin()->second;
   if( (ale > 0) == (dir > 0) )
      return std::make_pair(value, le.strict);
   return std::nullopt;
}

void tighten(Interval& iv, int dir, const Rat& value, bool strict)
{
   if( dir > 0 )
      iv = iv.intersect(Interval{std::nullopt, value, false, strict});
   else
      iv = iv.intersect(Interval{value, std::nullopt, strict, false});
}

}   // namespace

Interval core_bounds(const Configuration& cfg, int j)
{
   Interval out;
   for( const auto& [id, c] : cfg.core )
   {
      const auto* ineq = std::get_if<Inequality>(&c);
      if( !ineq )
         continue;
      for( int dir : {1, -1} )
         if( auto b = single_bound(*ineq, j, dir) )
            tighten(out, dir, b->first, b->second);
   }
   return out;
}

std::vector<TreeViolation> check_tree_consistency(const BranchTree& input, const Configuration& cfg)
{
   std::vector<TreeViolation> out;
   auto report = [&](const char* cond, NodeId node, std::string msg) { out.push_back({cond, node, std::move(msg)}); };

   BranchTree tree = input;
   if( tree.nodes.empty() || !tree.link() )
   {
      report("T1", tree.root, "parent links do not form a rooted tree");
      return out;
   }
   std::vector<NodeId> stack{tree.root};
   std::set<NodeId> seen;
   while( !stack.empty() )
   {
      NodeId v = stack.back();
      stack.pop_back();
      if( !seen.insert(v).second )
         continue;
      for( NodeId c : tree.nodes.at(v).children )
         stack.push_back(c);
   }
   if( seen.size() != tree.nodes.size() )
   {
      report("T1", tree.root, "some nodes are unreachable from the root");
      return out;
   }

   const TreeNode& root = tree.nodes.at(tree.root);
   if( root.branch )
      report("T2", tree.root, "root branching constraint must be the whole space");

   std::set<int> integral = cfg.integral_vars();
   for( const auto& [id, node] : tree.nodes )
   {
      std::set<int> used;
      for( int s : node.sigma )
      {
         int j = std::abs(s);
         if( s == 0 || j > cfg.dim )
            report("T4", id, "signed index " + std::to_string(s) + " out of range");
         else if( !used.insert(j).second )
            report("T4", id, "duplicate variable x" + std::to_string(j) + " in sigma");
      }
      if( node.branch && (node.branch->var < 1 || node.branch->var > cfg.dim) )
         report("T2", id, "branching variable out of range");

      if( node.parent )
      {
         const auto& ps = tree.nodes.at(*node.parent).sigma;
         if( ps.size() > node.sigma.size() || !std::equal(ps.begin(), ps.end(), node.sigma.begin()) )
            report("T5", id, "parent sigma is not a prefix");
      }

      if( node.bound_refs.size() != node.sigma.size() )
         report("T6", id, "need one bound citation per sigma entry");
      else
      {
         for( std::size_t i = 0; i < node.sigma.size(); ++i )
         {
            int s = node.sigma[i];
            auto it = cfg.core.find(node.bound_refs[i]);
            const Inequality* ineq = it == cfg.core.end() ? nullptr : std::get_if<Inequality>(&it->second);
            if( !ineq || !single_bound(*ineq, std::abs(s), s > 0 ? 1 : -1) )
               report("T6", id,
                      "constraint " + std::to_string(node.bound_refs[i]) + " is not a core " + (s > 0 ? "upper" : "lower") +
                         " bound on x" + std::to_string(std::abs(s)));
         }
      }

      if( node.children.empty() )
         continue;
      if( node.children.size() == 1 )
      {
         const TreeNode& child = tree.nodes.at(node.children.front());
         if( child.branch )
         {
            int j = child.branch->var;
            Interval range = core_bounds(cfg, j);
            if( integral.contains(j) )
               range = range.round_integral();
            if( !range.subset_of(child.branch->interval()) )
               report("T3", id, "single child does not cover the range of x" + std::to_string(j));
         }
         continue;
      }

      std::vector<Branch> branches;
      for( NodeId c : node.children )
      {
         const TreeNode& child = tree.nodes.at(c);
         if( !child.branch )
         {
            report("T7", id, "whole-space child " + std::to_string(c) + " overlaps its siblings");
            break;
         }
         branches.push_back(*child.branch);
      }
      if( branches.size() != node.children.size() )
         continue;
      int j = branches.front().var;
      if( std::any_of(branches.begin(), branches.end(), [&](const Branch& b) { return b.var != j; }) )
      {
         report("T3", id, "children branch on different variables");
         continue;
      }
      if( std::none_of(node.sigma.begin(), node.sigma.end(), [&](int s) { return std::abs(s) == j; }) )
         report("T7", id, "branching variable x" + std::to_string(j) + " is not in sigma");

      std::sort(branches.begin(), branches.end(), [](const Branch& a, const Branch& b) {
         if( !a.lo || !b.lo )
            return !a.lo && b.lo;
         return *a.lo < *b.lo;
      });
      for( std::size_t k = 1; k < branches.size(); ++k )
      {
         const auto& prev = branches[k - 1];
         const auto& next = branches[k];
         if( !prev.hi || !next.lo || *prev.hi >= *next.lo )
            report("T7", id, "branching intervals of the children overlap");
      }

      bool is_int = integral.contains(j);
      Interval range = core_bounds(cfg, j);
      if( is_int )
         range = range.round_integral();
      bool covered = range.empty();
      std::optional<Rat> need = range.lo;   // smallest value not yet covered, nullopt is -infinity
      for( std::size_t k = 0; k < branches.size() && !covered; ++k )
      {
         Interval iv = branches[k].interval();
         if( is_int )
            iv = iv.round_integral();
         if( iv.empty() )
            continue;
         if( iv.lo && (!need || *iv.lo > *need) )
            break;
         if( !iv.hi )
         {
            covered = true;
            break;
         }
         Rat next = is_int ? Rat(*iv.hi + 1) : *iv.hi;
         if( !need || next > *need )
            need = next;
         if( range.hi && (is_int ? *need > *range.hi : *need >= *range.hi) )
            covered = true;
      }
      if( !covered )
         report("T3", id, "children do not cover the range of x" + std::to_string(j));
   }
   return out;
}

Box propagate_box(const std::vector<const Inequality*>& ineqs, int dim, const std::set<int>& integral, int rounds)
{
   Box box(dim);
   std::vector<Inequality> rows;
   for( const Inequality* p : ineqs )
   {
      if( p->max_var() > dim )
         continue;
      if( p->lhs.terms().size() == 1 )
      {
         int j = p->lhs.terms().begin()->first;
         for( int dir : {1, -1} )
            if( auto b = single_bound(*p, j, dir) )
               tighten(box[j], dir, b->first, b->second);
         continue;
      }
      if( p->lhs.is_constant() )
         continue;
      if( p->rel == Relation::Eq )
      {
         rows.push_back(Inequality{p->lhs, Relation::Le, p->rhs, false});
         rows.push_back(Inequality{-p->lhs, Relation::Le, Rat(-p->rhs), false});
      }
      else
         rows.push_back(p->as_le());
   }
   auto round_all = [&]() {
      for( int j : integral )
         if( j <= dim )
            box[j] = box[j].round_integral();
   };
   round_all();
   for( int r = 0; r < rounds && !rows.empty(); ++r )
   {
      bool changed = false;
      for( const auto& row : rows )
      {
         // minimum activity with the number of unbounded contributions
         Rat finite_min = 0;
         int unbounded = 0;
         int unbounded_var = 0;
         for( const auto& [j, a] : row.lhs.terms() )
         {
            const Interval& iv = box[j];
            const auto& end = a > 0 ? iv.lo : iv.hi;
            if( end )
               finite_min += a * *end;
            else
            {
               ++unbounded;
               unbounded_var = j;
            }
         }
         if( unbounded > 1 )
            continue;
         for( const auto& [j, a] : row.lhs.terms() )
         {
            Rat rest = finite_min;
            if( unbounded == 1 )
            {
               if( j != unbounded_var )
                  continue;
            }
            else
            {
               const Interval& iv = box[j];
               rest -= a * *(a > 0 ? iv.lo : iv.hi);
            }
            Rat value = (row.rhs - rest) / a;
            Interval before = box[j];
            tighten(box[j], a > 0 ? 1 : -1, value, false);
            if( integral.contains(j) )
               box[j] = box[j].round_integral();
            if( !(box[j] == before) )
               changed = true;
         }
      }
      if( !changed )
         break;
   }
   return box;
}

namespace {

struct Comparer
{
   const BranchTree& tree;
   const AffineMap& w;
   const Rat& eps;
   OrderMode mode;
   const std::set<int>& integral;
   const OrderProver& prover;

   Interval var_range(const Box& box, int j) const
   {
      Interval iv = box[j];
      return integral.contains(j) ? iv.round_integral() : iv;
   }

   Interval image_range(const Box& box, int j) const
   {
      Interval iv = box.range(w.row(j));
      return integral.contains(j) ? iv.round_integral() : iv;
   }

   OrderResult run(NodeId v, Box box) const
   {
      if( box.empty() )
         return OrderResult{true, v, 0, {}};
      // dive while both x and w(x) are known to lie in one child
      for( ;; )
      {
         const TreeNode& node = tree.nodes.at(v);
         if( node.children.empty() )
            break;
         if( node.children.size() == 1 )
         {
            NodeId c = node.children.front();
            if( const auto& b = tree.nodes.at(c).branch )
               box[b->var] = box[b->var].intersect(b->interval());
            v = c;
            continue;
         }
         std::optional<NodeId> next;
         for( NodeId c : node.children )
         {
            const Branch& b = *tree.nodes.at(c).branch;
            if( var_range(box, b.var).subset_of(b.interval()) && image_range(box, b.var).subset_of(b.interval()) )
               next = c;
         }
         if( !next )
            break;
         const Branch& b = *tree.nodes.at(*next).branch;
         box[b.var] = box[b.var].intersect(b.interval());
         v = *next;
      }

      const TreeNode& node = tree.nodes.at(v);
      for( std::size_t i = 0; i < node.sigma.size(); ++i )
      {
         int s = node.sigma[i];
         int j = std::abs(s);
         LinExpr diff = w.row(j) - LinExpr::variable(j);
         if( s < 0 )
            diff *= Rat(-1);
         if( diff.is_constant() && diff.constant() == 0 )
            continue;
         Interval range = box.range(diff);
         if( range.is_point(0) )
            continue;
         if( range.lo && *range.lo >= eps )
            return OrderResult{true, v, i, {}};
         if( prover && prover(v, i, diff, Evidence::Equal) )
            continue;
         if( prover && prover(v, i, diff, Evidence::Gap) )
            return OrderResult{true, v, i, {}};
         return OrderResult{false, v, i, "cannot compare position " + std::to_string(i + 1) + " of node " + std::to_string(v)};
      }

      if( node.children.empty() )
      {
         if( mode == OrderMode::Weak )
            return OrderResult{true, v, node.sigma.size(), {}};
         return OrderResult{false, v, node.sigma.size(), "images agree on every sigma position of node " + std::to_string(v)};
      }
      for( NodeId c : node.children )
      {
         const Branch& b = *tree.nodes.at(c).branch;
         if( !var_range(box, b.var).intersects(b.interval()) )
            continue;
         Box sub = box;
         sub[b.var] = sub[b.var].intersect(b.interval());
         OrderResult r = run(c, std::move(sub));
         if( !r.verified )
            return r;
      }
      return OrderResult{true, v, node.sigma.size(), {}};
   }
};

}   // namespace

OrderResult dcn_and_compare(const BranchTree& tree, const Box& x_box, const AffineMap& w, const Rat& eps, OrderMode mode,
                            const std::set<int>& integral, const OrderProver& prover)
{
   if( x_box.dim() != w.dim )
      fail(ErrorKind::DimensionMismatch, "box and witness dimensions differ");
   Comparer cmp{tree, w, eps, mode, integral, prover};
   return cmp.run(tree.root, x_box);
}

}   // namespace mipcert
