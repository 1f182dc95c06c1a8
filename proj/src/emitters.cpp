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

#include "mipcert/emitters.hpp"

#include "mipcert/error.hpp"

#include <algorithm>
#include <set>

namespace mipcert {

namespace {

Rat power(const Rat& base, int exp)
{
   Rat out = 1;
   for( int i = 0; i < (exp < 0 ? -exp : exp); ++i )
      out *= base;
   return exp < 0 ? Rat(1 / out) : out;
}

Inequality var_bound(int j, Relation rel, const Rat& value)
{
   return Inequality::make(LinExpr::variable(j), rel, value);
}

std::string var_name(int j)
{
   return "x" + std::to_string(j);
}

}   // namespace

LinStep lin(std::vector<std::pair<PremiseRef, Rat>> terms)
{
   return LinStep{std::move(terms)};
}

PremiseRef id_ref(ConstraintId id)
{
   return PremiseRef{PremiseRef::Kind::Id, id};
}

PremiseRef local_ref(std::size_t k)
{
   return PremiseRef{PremiseRef::Kind::Local, static_cast<ConstraintId>(k)};
}

PremiseRef objective_ref()
{
   return PremiseRef{PremiseRef::Kind::Objective, 0};
}

PremiseRef previous_ref()
{
   return PremiseRef{PremiseRef::Kind::Previous, 0};
}

CertBuilder::CertBuilder(Problem p)
    : problem_(std::move(p)), dim_(problem_.n), upper_(static_cast<std::size_t>(problem_.n)),
      lower_(static_cast<std::size_t>(problem_.n))
{
   problem_.validate();
   for( const auto& [id, c] : problem_.constraints )
   {
      next_id_ = std::max(next_id_, id);
      const auto* ineq = std::get_if<Inequality>(&c);
      if( !ineq )
         continue;
      known_.emplace(id, *ineq);
      if( ineq->strict || ineq->lhs.terms().size() != 1 )
         continue;
      Inequality le = ineq->as_le();
      const auto& [j, k] = *le.lhs.terms().begin();
      Rat value = le.rhs / k;
      bool is_eq = le.rel == Relation::Eq;
      if( is_eq || k > 0 )
      {
         auto& slot = upper_[static_cast<std::size_t>(j - 1)];
         if( !slot || value < slot->value )
            slot = Bound{id_ref(id), k, value};
      }
      if( is_eq || k < 0 )
      {
         auto& slot = lower_[static_cast<std::size_t>(j - 1)];
         if( !slot || value > slot->value )
            slot = Bound{id_ref(id), k, value};
      }
   }
}

const Inequality& CertBuilder::known(ConstraintId id) const
{
   auto it = known_.find(id);
   if( it == known_.end() )
      fail(ErrorKind::UnknownId, "constraint " + std::to_string(id) + " is not a known inequality");
   return it->second;
}

Inequality CertBuilder::derive(const std::vector<SubproofStep>& steps, const std::vector<Inequality>& locals) const
{
   std::optional<Inequality> cur;
   for( const auto& step : steps )
   {
      if( std::holds_alternative<RoundStep>(step) )
      {
         cur = round_integral(cur.value_or(Inequality{}), problem_.integral);
         continue;
      }
      std::vector<std::pair<Inequality, Rat>> premises;
      for( const auto& [ref, mult] : std::get<LinStep>(step).terms )
      {
         switch( ref.kind )
         {
         case PremiseRef::Kind::Id: premises.emplace_back(known(ref.id), mult); break;
         case PremiseRef::Kind::Local:
         case PremiseRef::Kind::Hyp: premises.emplace_back(locals.at(static_cast<std::size_t>(ref.id - 1)), mult); break;
         case PremiseRef::Kind::Objective:
            if( !z_ )
               fail(ErrorKind::StrictBoundUsedWithInfiniteZ, "no incumbent");
            premises.emplace_back(Inequality::make(problem_.objective, Relation::Le, *z_, true), mult);
            break;
         case PremiseRef::Kind::Previous: premises.emplace_back(cur.value(), mult); break;
         }
      }
      cur = linear_combine(premises, dim_);
   }
   return cur.value_or(Inequality{});
}

void CertBuilder::add_upper_term(LinStep& l, int j, const Rat& t) const
{
   const auto& b = upper(j);
   if( !b )
      fail(ErrorKind::UnboundedVariable, var_name(j) + " has no upper bound");
   l.terms.emplace_back(b->ref, t / b->coef);
}

void CertBuilder::add_lower_term(LinStep& l, int j, const Rat& t) const
{
   const auto& b = lower(j);
   if( !b )
      fail(ErrorKind::UnboundedVariable, var_name(j) + " has no lower bound");
   l.terms.emplace_back(b->ref, -t / b->coef);
}

void CertBuilder::cancel_with_bounds(LinStep& l, const LinExpr& e) const
{
   for( const auto& [j, a] : e.terms() )
   {
      if( a > 0 )
         add_lower_term(l, j, a);
      else
         add_upper_term(l, j, -a);
   }
}

void CertBuilder::round_bounds()
{
   for( int j = 1; j <= problem_.n; ++j )
   {
      if( !problem_.integral.contains(j) )
         continue;
      if( const auto& u = upper(j); u && !is_integer(u->value) )
      {
         LinStep l;
         add_upper_term(l, j, 1);
         Rat v = floor(u->value);
         ConstraintId id = implic({}, var_bound(j, Relation::Le, v), {l, RoundStep{}});
         set_upper(j, Bound{id_ref(id), 1, v});
      }
      if( const auto& lo = lower(j); lo && !is_integer(lo->value) )
      {
         LinStep l;
         add_lower_term(l, j, 1);
         Rat v = ceil(lo->value);
         ConstraintId id = implic({}, var_bound(j, Relation::Ge, v), {l, RoundStep{}});
         set_lower(j, Bound{id_ref(id), -1, v});
      }
   }
}

ConstraintId CertBuilder::implic(std::vector<Inequality> assumptions, Inequality consequent, std::vector<SubproofStep> proof)
{
   ConstraintId id = fresh();
   known_.emplace(id, consequent);
   push(ImplicStep{id, std::move(assumptions), consequent, Subproof{std::move(proof), consequent}});
   return id;
}

ConstraintId CertBuilder::resolve(ConstraintId first, std::size_t first_index, ConstraintId second, std::size_t second_index)
{
   ConstraintId id = fresh();
   // Both sides prove the same consequent in every emitter, or one of them
   // proves falsity; the weaker one survives.
   const Inequality& a = known(first);
   const Inequality& b = known(second);
   known_.emplace(id, a.is_falsity() ? b : a);
   push(ResolveStep{id, first, first_index, second, second_index});
   return id;
}

ConstraintId CertBuilder::strengthen(bool dominance, Inequality c, Witness w)
{
   ConstraintId id = fresh();
   known_.emplace(id, c);
   push(StrengthenStep{dominance, id, std::move(c), std::move(w)});
   return id;
}

void CertBuilder::solution(Solution values)
{
   z_ = problem_.objective.evaluate(values);
   push(SolutionStep{std::move(values)});
}

void CertBuilder::delete_derived(std::vector<ConstraintId> ids)
{
   if( ids.empty() )
      return;
   for( ConstraintId id : ids )
      known_.erase(id);
   push(DeleteStep{DeleteStep::Variant::A, std::move(ids), std::nullopt, std::nullopt});
}

void CertBuilder::install_sigma_tree(const std::vector<int>& sigma)
{
   BranchTree tree = BranchTree::trivial();
   TreeNode& root = tree.nodes.at(tree.root);
   for( int j : sigma )
   {
      const auto& u = upper(j);
      if( !u || u->ref.kind != PremiseRef::Kind::Id )
         fail(ErrorKind::UnboundedSigmaVariable, var_name(j) + " has no cited upper bound");
      root.sigma.push_back(j);
      root.bound_refs.push_back(u->ref.id);
   }
   push(TreeStep{std::move(tree)});
}

LexResult emit_lex_constraint(CertBuilder& b, const std::vector<int>& sigma, const std::vector<int>& gamma, const Rat& lo,
                              const Rat& hi)
{
   const Problem& p = b.problem();
   if( static_cast<int>(gamma.size()) != p.n )
      fail(ErrorKind::InvalidArgument, "gamma must permute all " + std::to_string(p.n) + " variables");
   std::vector<int> inv(gamma.size(), 0);
   for( std::size_t i = 0; i < gamma.size(); ++i )
   {
      int g = gamma[i];
      if( g < 1 || g > p.n || inv[static_cast<std::size_t>(g - 1)] != 0 )
         fail(ErrorKind::InvalidArgument, "gamma is not a permutation");
      inv[static_cast<std::size_t>(g - 1)] = static_cast<int>(i) + 1;
   }
   if( sigma.empty() || !is_integer(lo) || !is_integer(hi) || hi < lo )
      fail(ErrorKind::InvalidArgument, "need a non-empty sigma and integer bounds L <= U");
   auto pre = [&](int m) { return inv[static_cast<std::size_t>(m - 1)]; };
   auto check_var = [&](int m) {
      if( m < 1 || m > p.n )
         fail(ErrorKind::InvalidArgument, "sigma entry " + std::to_string(m) + " out of range");
      const auto& u = b.upper(m);
      const auto& l = b.lower(m);
      if( !p.integral.contains(m) || !u || !l || u->value > hi || l->value < lo )
         fail(ErrorKind::UnboundedSigmaVariable, var_name(m) + " is not an integer variable within [L, U]");
   };
   for( int s : sigma )
   {
      check_var(s);
      check_var(pre(s));
   }

   const Rat delta = hi - lo + 1;
   const int len = static_cast<int>(sigma.size());
   auto s_at = [&](int i) { return sigma[static_cast<std::size_t>(i - 1)]; };
   // d_i = x_{s_i} - gamma(x)_{s_i}; S_j = sum_{i<=j} delta^(j-i) d_i.
   std::vector<LinExpr> d(static_cast<std::size_t>(len + 1));
   for( int i = 1; i <= len; ++i )
      d[static_cast<std::size_t>(i)] = LinExpr::variable(s_at(i)) - LinExpr::variable(pre(s_at(i)));
   auto partial = [&](int j) {
      LinExpr e;
      for( int i = 1; i <= j; ++i )
         e.add_scaled(d[static_cast<std::size_t>(i)], power(delta, j - i));
      return e;
   };

   AffineMap w = AffineMap::identity(p.n);
   for( int m = 1; m <= p.n; ++m )
      if( pre(m) != m )
         w.rows[m] = LinExpr::variable(pre(m));

   std::vector<ConstraintId> ladder(static_cast<std::size_t>(len + 1), 0);
   auto c_ref = [&](int j) { return id_ref(ladder[static_cast<std::size_t>(j)]); };

   for( int k = 1; k <= len; ++k )
   {
      Inequality ck = Inequality::make(partial(k), Relation::Ge, 0);
      const LinExpr& dk = d[static_cast<std::size_t>(k)];
      if( dk.is_constant() )
      {
         std::vector<SubproofStep> proof;
         if( k > 1 )
            proof.push_back(lin({{c_ref(k - 1), delta}}));
         else
            proof.push_back(LinStep{});
         ladder[static_cast<std::size_t>(k)] = b.implic({}, ck, proof);
         continue;
      }

      // S_j <= 0 for j < k, from the negated C^k (A1) and the bounds.
      auto below = [&](int j) {
         LinStep l = lin({{local_ref(1), power(delta, -(k - j))}});
         for( int i = j + 1; i <= k; ++i )
         {
            if( d[static_cast<std::size_t>(i)].is_constant() )
               continue;
            Rat t = power(delta, j - i);
            b.add_lower_term(l, s_at(i), t);
            b.add_upper_term(l, pre(s_at(i)), t);
         }
         return std::vector<SubproofStep>{l, RoundStep{}};
      };

      Witness wit{w, {}, {}};
      for( int j = 1; j < k; ++j )
      {
         const LinExpr& dj = d[static_cast<std::size_t>(j)];
         if( dj.is_constant() )
            continue;
         LinExpr diff = -dj;
         Subproof le_proof{{}, Inequality::make(diff, Relation::Le, 0)};
         if( j == 1 )
            le_proof.steps.push_back(lin({{c_ref(1), 1}}));
         else
         {
            le_proof.steps = below(j - 1);
            le_proof.steps.push_back(lin({{previous_ref(), delta}, {c_ref(j), 1}}));
         }
         Subproof ge_proof{below(j), Inequality::make(diff, Relation::Ge, 0)};
         if( j > 1 )
            ge_proof.steps.push_back(lin({{previous_ref(), 1}, {c_ref(j - 1), delta}}));
         wit.evidence.push_back(OrderEvidence{std::nullopt, static_cast<std::size_t>(j), Evidence::Equal, {le_proof, ge_proof}});
      }
      LinStep gap = lin({{local_ref(1), 1}});
      if( k > 1 )
         gap.terms.emplace_back(c_ref(k - 1), delta);
      wit.evidence.push_back(OrderEvidence{std::nullopt, static_cast<std::size_t>(k), Evidence::Gap,
                                           {Subproof{{gap, RoundStep{}}, Inequality::make(-dk, Relation::Ge, 1)}}});

      ladder[static_cast<std::size_t>(k)] = b.strengthen(true, ck, std::move(wit));
   }

   std::vector<ConstraintId> intermediate(ladder.begin() + 1, ladder.end() - 1);
   b.delete_derived(intermediate);

   LexResult out;
   out.id = ladder.back();
   out.constraint = Inequality::make(partial(len), Relation::Ge, 0);
   for( int i = 1; i <= len; ++i )
      out.weights.push_back(power(delta, len - i));
   return out;
}

ConstraintId emit_cg_cut(CertBuilder& b, const std::vector<std::pair<ConstraintId, Rat>>& rows)
{
   LinStep l;
   for( const auto& [id, mult] : rows )
      l.terms.emplace_back(id_ref(id), mult);
   Inequality agg = b.derive({l});
   if( agg.rel == Relation::Eq )
      fail(ErrorKind::InvalidArgument, "CG aggregation of equations only");
   for( const auto& [j, a] : agg.lhs.terms() )
   {
      Rat frac = a - floor(a);
      if( frac != 0 )
         b.add_lower_term(l, j, frac);
   }
   std::vector<SubproofStep> proof{l, RoundStep{}};
   return b.implic({}, b.derive(proof), proof);
}

ConstraintId emit_cover_cut(CertBuilder& b, ConstraintId knapsack, const std::vector<int>& cover)
{
   Inequality row = b.known(knapsack).as_le();
   if( row.rel == Relation::Eq || cover.size() < 1 )
      fail(ErrorKind::NotACover, "cover needs a knapsack inequality and a non-empty set");
   const Problem& p = b.problem();
   LinExpr sum;
   Rat weight = 0;
   for( int j : cover )
   {
      if( j < 1 || j > p.n || !p.integral.contains(j) || !b.upper(j) || b.upper(j)->value > 1 || !b.lower(j) ||
          b.lower(j)->value < 0 )
         fail(ErrorKind::NotACover, var_name(j) + " is not a binary variable");
      if( row.lhs.coefficient(j) <= 0 )
         fail(ErrorKind::NotACover, var_name(j) + " has a non-positive weight");
      sum += LinExpr::variable(j);
      weight += row.lhs.coefficient(j);
   }
   if( weight <= row.rhs )
      fail(ErrorKind::NotACover, "cover weight " + to_string(weight) + " does not exceed " + to_string(row.rhs));

   const auto size = static_cast<std::int64_t>(cover.size());
   Inequality all_on = Inequality::make(sum, Relation::Ge, Rat(size));
   Inequality cut = Inequality::make(sum, Relation::Le, Rat(size - 1));

   std::vector<ConstraintId> scratch;
   LinStep contra = lin({{id_ref(knapsack), 1}});
   LinExpr rest = row.lhs;
   for( int j : cover )
   {
      LinStep l = lin({{local_ref(1), 1}});
      for( int m : cover )
         if( m != j )
            b.add_upper_term(l, m, 1);
      ConstraintId id = b.implic({all_on}, var_bound(j, Relation::Ge, 1), {l});
      scratch.push_back(id);
      contra.terms.emplace_back(id_ref(id), row.lhs.coefficient(j));
      rest -= row.lhs.coefficient(j) * LinExpr::variable(j);
   }
   b.cancel_with_bounds(contra, rest);
   if( !b.derive({contra}, {all_on}).is_falsity() )
      fail(ErrorKind::NotACover, "the remaining items can make the cover fit");
   ConstraintId contradiction = b.implic({all_on}, Inequality::falsity(), {contra});
   ConstraintId other = b.implic({cut}, cut, {lin({{local_ref(1), 1}})});
   ConstraintId out = b.resolve(other, 1, contradiction, 1);
   scratch.push_back(contradiction);
   scratch.push_back(other);
   b.delete_derived(scratch);
   return out;
}

ConstraintId emit_flowcover_cut(CertBuilder& b, const FlowSet& set, const std::vector<std::size_t>& cover)
{
   const Problem& p = b.problem();
   const std::size_t arcs = set.x.size();
   if( set.y.size() != arcs || set.capacity.size() != arcs || set.vub_rows.size() != arcs || cover.empty() )
      fail(ErrorKind::InvalidArgument, "flow set vectors differ in length or the cover is empty");
   Rat lambda = -set.demand;
   std::set<std::size_t> in_cover;
   for( std::size_t c : cover )
   {
      if( c >= arcs || !in_cover.insert(c).second )
         fail(ErrorKind::NotACover, "cover position out of range or repeated");
      lambda += set.capacity[c];
   }
   if( lambda <= 0 )
      fail(ErrorKind::NotACover, "capacity of the cover does not exceed the demand");

   std::vector<std::size_t> big;   // a_j >= lambda
   LinExpr cut_lhs;
   Rat cut_rhs = set.demand;
   LinExpr big_sum;
   LinExpr cover_flow;   // sum_C a_j x_j
   for( std::size_t c : cover )
   {
      cut_lhs += LinExpr::variable(set.y[c]);
      cover_flow += set.capacity[c] * LinExpr::variable(set.x[c]);
      if( set.capacity[c] >= lambda )
      {
         big.push_back(c);
         big_sum += LinExpr::variable(set.x[c]);
         Rat excess = set.capacity[c] - lambda;
         cut_lhs -= excess * LinExpr::variable(set.x[c]);
         cut_rhs -= excess;
      }
   }
   Inequality cut = Inequality::make(cut_lhs, Relation::Le, cut_rhs);

   // sum_C y_j <= b from the flow row and the remaining flows' bounds.
   LinStep flow = lin({{id_ref(set.flow_row), 1}});
   {
      LinExpr rest = b.known(set.flow_row).as_le().lhs;
      for( std::size_t c : cover )
         rest -= rest.coefficient(set.y[c]) * LinExpr::variable(set.y[c]);
      b.cancel_with_bounds(flow, rest);
   }

   std::vector<ConstraintId> scratch;
   auto check = [&](const std::vector<SubproofStep>& proof, const std::vector<Inequality>& locals) {
      if( !dominates(b.derive(proof, locals), cut) )
         fail(ErrorKind::InvalidArgument, "flow set data does not support the cut");
   };

   if( big.empty() )
   {
      std::vector<SubproofStep> proof{flow};
      check(proof, {});
      return b.implic({}, cut, proof);
   }

   const auto nbig = static_cast<std::int64_t>(big.size());
   Inequality all_open = Inequality::make(big_sum, Relation::Ge, Rat(nbig));
   Inequality some_closed = Inequality::make(big_sum, Relation::Le, Rat(nbig - 1));

   // Every big arc open: the cut reduces to the flow row.
   LinStep open_case = flow;
   for( std::size_t c : big )
   {
      Rat excess = set.capacity[c] - lambda;
      if( excess == 0 )
         continue;
      LinStep l = lin({{local_ref(1), 1}});
      for( std::size_t m : big )
         if( m != c )
            b.add_upper_term(l, set.x[m], 1);
      ConstraintId id = b.implic({all_open}, var_bound(set.x[c], Relation::Ge, 1), {l});
      scratch.push_back(id);
      open_case.terms.emplace_back(id_ref(id), excess);
   }
   check({open_case}, {all_open});
   ConstraintId first = b.implic({all_open}, cut, {open_case});

   // Some big arc closed: the intermediate inequality
   // sum_C (a_j - lambda)^+ (1 - x_j) <= b - sum_C a_j x_j.
   LinStep inter = lin({{local_ref(1), lambda}});
   for( std::size_t c : cover )
      if( set.capacity[c] < lambda )
         b.add_upper_term(inter, set.x[c], set.capacity[c]);
   Inequality inter_ineq = b.derive({inter}, {some_closed});
   ConstraintId inter_id = b.implic({some_closed}, inter_ineq, {inter});

   for( const auto& [j, a] : cover_flow.terms() )
      if( !is_integer(a) || !p.integral.contains(j) )
         fail(ErrorKind::MalformedDisjunction, "sum_C a_j x_j is not integral");
   if( !is_integer(set.demand) )
      fail(ErrorKind::MalformedDisjunction, "demand is not integral");
   Inequality fits = Inequality::make(cover_flow, Relation::Le, set.demand);
   Inequality overflows = Inequality::make(cover_flow, Relation::Ge, set.demand + 1);

   LinStep fit_case = lin({{id_ref(inter_id), 1}});
   for( std::size_t c : cover )
      fit_case.terms.emplace_back(id_ref(set.vub_rows[c]), 1);
   check({fit_case}, {some_closed, fits});
   ConstraintId q1 = b.implic({some_closed, fits}, cut, {fit_case});

   LinStep over_case = flow;
   over_case.terms.emplace_back(id_ref(inter_id), 1);
   over_case.terms.emplace_back(local_ref(2), 1);
   check({over_case}, {some_closed, overflows});
   ConstraintId q2 = b.implic({some_closed, overflows}, cut, {over_case});

   ConstraintId second = b.resolve(q1, 2, q2, 2);
   ConstraintId out = b.resolve(first, 1, second, 1);
   scratch.insert(scratch.end(), {first, inter_id, q1, q2, second});
   b.delete_derived(scratch);
   return out;
}

ConstraintId emit_split_cut(CertBuilder& b, const LinExpr& pi, const Rat& pi0, const Inequality& cut, const SplitSide& left,
                            const SplitSide& right)
{
   const Problem& p = b.problem();
   if( !is_integer(pi0) || pi.terms().empty() )
      fail(ErrorKind::MalformedDisjunction, "pi0 must be an integer and pi non-zero");
   for( const auto& [j, a] : pi.terms() )
      if( !is_integer(a) || !p.integral.contains(j) )
         fail(ErrorKind::MalformedDisjunction, "pi x must be integral on the feasible set");
   Inequality low = Inequality::make(pi, Relation::Le, pi0);
   Inequality high = Inequality::make(pi, Relation::Ge, pi0 + 1);
   ConstraintId l = b.implic({low}, cut, left.proof);
   ConstraintId r = b.implic({high}, cut, right.proof);
   ConstraintId out = b.resolve(l, 1, r, 1);
   b.delete_derived({l, r});
   return out;
}

ConstraintId emit_reduced_cost_fixing(CertBuilder& b, const ReducedCostData& data)
{
   const Problem& p = b.problem();
   if( !b.incumbent() )
      fail(ErrorKind::InvalidArgument, "reduced cost fixing needs a finite incumbent");
   if( data.var < 1 || data.var > p.n )
      fail(ErrorKind::InvalidArgument, "variable out of range");
   LinStep agg = lin({{objective_ref(), 1}});
   Rat dual_rhs = 0;
   for( const auto& [id, y] : data.duals )
   {
      if( y < 0 )
         fail(ErrorKind::MultiplierSignError, "dual multiplier " + to_string(y) + " on " + std::to_string(id));
      agg.terms.emplace_back(id_ref(id), y);
      dual_rhs += y * b.known(id).as_le().rhs;
   }
   Inequality reduced = b.derive({agg});   // cbar x < z - ...
   Rat cbar = reduced.lhs.coefficient(data.var);
   if( cbar <= 0 )
      fail(ErrorKind::MultiplierSignError, "reduced cost " + to_string(cbar) + " of " + var_name(data.var) + " is not positive");

   // z_LP = -y b + sum_i cbar_i * (bound the LP solution sits at).
   Rat lp_value = -dual_rhs;
   for( const auto& [j, a] : reduced.lhs.terms() )
   {
      const auto& bound = a > 0 ? b.lower(j) : b.upper(j);
      if( !bound )
         fail(ErrorKind::UnboundedVariable, var_name(j) + " lacks the bound its reduced cost points to");
      lp_value += a * bound->value;
   }
   if( lp_value != data.z_lp )
      fail(ErrorKind::InvalidArgument, "z_LP " + to_string(data.z_lp) + " disagrees with the duals (" + to_string(lp_value) + ")");

   LinExpr others = reduced.lhs;
   others -= cbar * LinExpr::variable(data.var);
   b.cancel_with_bounds(agg, others);
   for( auto& [ref, mult] : agg.terms )
      mult /= cbar;
   std::vector<SubproofStep> proof{agg};
   if( p.integral.contains(data.var) )
      proof.push_back(RoundStep{});
   return b.implic({}, b.derive(proof), proof);
}

bool is_formulation_symmetry(const Problem& p, const std::vector<int>& perm)
{
   if( static_cast<int>(perm.size()) != p.n )
      return false;
   std::vector<bool> seen(perm.size(), false);
   AffineMap w = AffineMap::identity(p.n);
   for( int j = 1; j <= p.n; ++j )
   {
      int image = perm[static_cast<std::size_t>(j - 1)];
      if( image < 1 || image > p.n || seen[static_cast<std::size_t>(image - 1)] )
         return false;
      seen[static_cast<std::size_t>(image - 1)] = true;
      if( image != j )
         w.rows[j] = LinExpr::variable(image);
      if( p.integral.contains(j) != p.integral.contains(image) )
         return false;
   }
   if( !(w.compose(p.objective) == p.objective) )
      return false;

   auto canonical = [](const Constraint& c) {
      if( const auto* ineq = std::get_if<Inequality>(&c) )
         return to_string(Constraint(ineq->as_le()));
      return to_string(c);
   };
   std::multiset<std::string> before;
   std::multiset<std::string> after;
   for( const auto& [id, c] : p.constraints )
   {
      before.insert(canonical(c));
      after.insert(canonical(compose(w, c)));
   }
   return before == after;
}

}   // namespace mipcert
