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

#include "mipcert/certifier.hpp"

#include "mipcert/error.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace mipcert {

namespace {

using Bound = CertBuilder::Bound;

struct Row
{
   ConstraintId id = 0;
   Rat mult;   // multiplier on the cited constraint giving a x <= r
   LinExpr a;
   Rat r;
   bool strict = false;
};

void upper_term(LinStep& l, const Bound& b, const Rat& t)
{
   l.terms.emplace_back(b.ref, t / b.coef);
}

void lower_term(LinStep& l, const Bound& b, const Rat& t)
{
   l.terms.emplace_back(b.ref, -t / b.coef);
}

class Search
{
 public:
   Search(CertBuilder& b, std::vector<Row> rows) : b_(b), rows_(std::move(rows)) {}

   std::size_t run()
   {
      const int n = b_.problem().n;
      std::vector<Bound> lo;
      std::vector<Bound> hi;
      for( int j = 1; j <= n; ++j )
      {
         if( !b_.lower(j) || !b_.upper(j) )
            fail(ErrorKind::UnboundedVariable, "x" + std::to_string(j) + " needs finite bounds");
         lo.push_back(*b_.lower(j));
         hi.push_back(*b_.upper(j));
      }
      std::vector<Inequality> path;
      solve(path, lo, hi);
      b_.goal();
      return nodes_;
   }

 private:
   // Emits [path => falsity] for the box lo..hi and returns its id.
   ConstraintId solve(std::vector<Inequality>& path, std::vector<Bound>& lo, std::vector<Bound>& hi)
   {
      ++nodes_;
      if( auto id = prune(path, lo, hi) )
         return *id;

      const int n = b_.problem().n;
      int var = 0;
      for( int j = 1; j <= n && var == 0; ++j )
         if( lo[static_cast<std::size_t>(j - 1)].value < hi[static_cast<std::size_t>(j - 1)].value )
            var = j;
      if( var == 0 )
      {
         Solution x;
         for( const auto& l : lo )
            x.push_back(l.value);
         for( const auto& [id, c] : b_.problem().constraints )
            if( !evaluate(x, c) )
               fail(ErrorKind::InvalidArgument, "search reached an infeasible point the rows did not catch");
         b_.solution(x);
         auto id = prune(path, lo, hi);
         if( !id )
            fail(ErrorKind::InvalidArgument, "incumbent did not close its own leaf");
         return *id;
      }

      const auto k = static_cast<std::size_t>(var - 1);
      Rat mid = floor((lo[k].value + hi[k].value) / 2);
      const std::size_t index = path.size() + 1;
      Inequality left = Inequality::make(LinExpr::variable(var), Relation::Le, mid);
      Inequality right = Inequality::make(LinExpr::variable(var), Relation::Ge, mid + 1);

      auto child = [&](bool go_left) {
         path.push_back(go_left ? left : right);
         Bound saved = go_left ? hi[k] : lo[k];
         if( go_left )
            hi[k] = Bound{local_ref(index), 1, mid};
         else
            lo[k] = Bound{local_ref(index), -1, mid + 1};
         ConstraintId id = solve(path, lo, hi);
         (go_left ? hi[k] : lo[k]) = saved;
         path.pop_back();
         return id;
      };
      // Visit the side the objective prefers first so the incumbent comes early.
      bool left_first = b_.problem().objective.coefficient(var) >= 0;
      ConstraintId first = child(left_first);
      ConstraintId second = child(!left_first);
      ConstraintId l_id = left_first ? first : second;
      ConstraintId r_id = left_first ? second : first;
      ConstraintId merged = b_.resolve(l_id, index, r_id, index);
      b_.delete_derived({l_id, r_id});
      return merged;
   }

   std::optional<ConstraintId> prune(const std::vector<Inequality>& path, const std::vector<Bound>& lo,
                                     const std::vector<Bound>& hi)
   {
      const std::size_t n = lo.size();
      for( std::size_t k = 0; k < n; ++k )
         if( lo[k].value > hi[k].value )
         {
            LinStep l;
            upper_term(l, hi[k], 1);
            lower_term(l, lo[k], 1);
            return b_.implic(path, Inequality::falsity(), {l});
         }

      auto bound_terms = [&](LinStep& l, const LinExpr& e, Rat& min_activity) {
         for( const auto& [j, a] : e.terms() )
         {
            const auto k = static_cast<std::size_t>(j - 1);
            if( a > 0 )
            {
               lower_term(l, lo[k], a);
               min_activity += a * lo[k].value;
            }
            else
            {
               upper_term(l, hi[k], -a);
               min_activity += a * hi[k].value;
            }
         }
      };

      for( const auto& row : rows_ )
      {
         Rat act = 0;
         for( const auto& [j, a] : row.a.terms() )
         {
            const auto k = static_cast<std::size_t>(j - 1);
            act += a * (a > 0 ? lo[k].value : hi[k].value);
         }
         if( act > row.r || (row.strict && act == row.r) )
         {
            LinStep l = lin({{id_ref(row.id), row.mult}});
            Rat unused = 0;
            bound_terms(l, row.a, unused);
            return b_.implic(path, Inequality::falsity(), {l});
         }
      }

      if( const auto& z = b_.incumbent() )
      {
         LinStep l = lin({{objective_ref(), 1}});
         Rat min_g = b_.problem().objective.constant();
         bound_terms(l, b_.problem().objective, min_g);
         if( min_g >= *z )
            return b_.implic(path, Inequality::falsity(), {l});
      }
      return std::nullopt;
   }

   CertBuilder& b_;
   std::vector<Row> rows_;
   std::size_t nodes_ = 0;
};

void add_rows(std::vector<Row>& rows, ConstraintId id, const Inequality& ineq)
{
   Inequality le = ineq.as_le();
   rows.push_back(Row{id, 1, le.lhs, le.rhs, le.strict});
   if( le.rel == Relation::Eq )
      rows.push_back(Row{id, -1, -le.lhs, -le.rhs, false});
}

std::vector<int> compose(const std::vector<int>& g, const std::vector<int>& h)
{
   std::vector<int> out(g.size());
   for( std::size_t i = 0; i < g.size(); ++i )
      out[i] = g[static_cast<std::size_t>(h[i] - 1)];
   return out;
}

bool is_binary(const CertBuilder& b, int j)
{
   return b.problem().integral.contains(j) && b.lower(j) && b.upper(j) && b.lower(j)->value >= 0 && b.upper(j)->value <= 1;
}

std::vector<ConstraintId> emit_root_cuts(CertBuilder& b, const CertifyOptions& opt)
{
   std::vector<ConstraintId> cuts;
   const Problem& p = b.problem();
   for( const auto& [id, c] : p.constraints )
   {
      const auto* ineq = std::get_if<Inequality>(&c);
      if( !ineq || ineq->strict || ineq->rel == Relation::Eq || ineq->lhs.terms().size() < 2 )
         continue;
      Inequality le = ineq->as_le();
      bool integral = std::all_of(le.lhs.terms().begin(), le.lhs.terms().end(),
                                  [&](const auto& t) { return p.integral.contains(t.first); });
      if( !integral )
         continue;
      if( opt.cg )
      {
         mpz_class den = 1;
         for( const auto& [j, a] : le.lhs.terms() )
            den = lcm(den, mpz_class(a.get_den()));
         mpz_class g = 0;
         for( const auto& [j, a] : le.lhs.terms() )
            g = gcd(g, mpz_class(a.get_num() * (den / a.get_den())));
         Rat mult(den, g);
         mult.canonicalize();
         if( !is_integer(le.rhs * mult) )
            cuts.push_back(emit_cg_cut(b, {{id, mult}}));
      }
      if( opt.cover )
      {
         std::vector<std::pair<Rat, int>> items;
         bool knapsack = true;
         for( const auto& [j, a] : le.lhs.terms() )
         {
            knapsack = knapsack && a > 0 && is_binary(b, j);
            items.emplace_back(a, j);
         }
         if( !knapsack )
            continue;
         std::sort(items.begin(), items.end(), [](const auto& x, const auto& y) { return x.first > y.first; });
         std::vector<int> cover;
         Rat weight = 0;
         for( const auto& [a, j] : items )
         {
            if( weight > le.rhs )
               break;
            cover.push_back(j);
            weight += a;
         }
         if( weight > le.rhs && cover.size() >= 2 )
            cuts.push_back(emit_cover_cut(b, id, cover));
      }
   }
   return cuts;
}

}   // namespace

std::size_t run_search(CertBuilder& b, const std::vector<ConstraintId>& extra_rows)
{
   std::vector<Row> rows;
   for( const auto& [id, c] : b.problem().constraints )
      if( const auto* ineq = std::get_if<Inequality>(&c) )
         add_rows(rows, id, *ineq);
   for( ConstraintId id : extra_rows )
      add_rows(rows, id, b.known(id));
   return Search(b, std::move(rows)).run();
}

std::vector<std::vector<int>> enumerate_group(const std::vector<std::vector<int>>& generators, std::size_t limit)
{
   if( generators.empty() )
      return {};
   std::vector<int> id(generators.front().size());
   std::iota(id.begin(), id.end(), 1);
   std::set<std::vector<int>> seen{id};
   std::vector<std::vector<int>> out{id};
   for( std::size_t next = 0; next < out.size(); ++next )
      for( const auto& g : generators )
      {
         auto h = compose(g, out[next]);
         if( seen.insert(h).second )
         {
            if( out.size() >= limit )
               fail(ErrorKind::TooLarge, "symmetry group exceeds " + std::to_string(limit) + " elements");
            out.push_back(std::move(h));
         }
      }
   return out;
}

std::vector<ConstraintId> emit_sst_cuts(CertBuilder& b, const std::vector<std::vector<int>>& generators)
{
   const int n = b.problem().n;
   std::vector<std::vector<int>> stabilizer = enumerate_group(generators);
   std::vector<ConstraintId> cuts;
   for( int i = 1; i < n && stabilizer.size() > 1; ++i )
   {
      std::map<int, const std::vector<int>*> orbit;
      for( const auto& h : stabilizer )
         orbit.emplace(h[static_cast<std::size_t>(i - 1)], &h);
      for( const auto& [j, h] : orbit )
      {
         if( j == i )
            continue;
         Witness w{AffineMap::identity(n), {}, {}};
         for( int k = 1; k <= n; ++k )
            if( (*h)[static_cast<std::size_t>(k - 1)] != k )
               w.map.rows[k] = LinExpr::variable((*h)[static_cast<std::size_t>(k - 1)]);
         LinExpr diff = LinExpr::variable(j) - LinExpr::variable(i);
         Subproof gap{{lin({{local_ref(1), 1}}), RoundStep{}}, Inequality::make(diff, Relation::Ge, 1)};
         w.evidence.push_back(OrderEvidence{std::nullopt, static_cast<std::size_t>(i), Evidence::Gap, {gap}});
         cuts.push_back(b.strengthen(true, Inequality::make(-diff, Relation::Ge, 0), std::move(w)));
      }
      std::erase_if(stabilizer, [&](const auto& h) { return h[static_cast<std::size_t>(i - 1)] != i; });
   }
   return cuts;
}

CertifyResult solve_and_certify(const Problem& p, const CertifyOptions& options)
{
   p.validate();
   for( int j = 1; j <= p.n; ++j )
      if( !p.integral.contains(j) )
         fail(ErrorKind::NonIntegralProblem, "x" + std::to_string(j) + " is continuous");
   for( const auto& [id, c] : p.constraints )
      if( std::holds_alternative<Implication>(c) )
         fail(ErrorKind::InvalidArgument, "the search handles linear constraints only");

   CertBuilder b(p);
   for( int j = 1; j <= p.n; ++j )
      if( !b.lower(j) || !b.upper(j) )
         fail(ErrorKind::UnboundedVariable, "x" + std::to_string(j) + " needs finite bounds");

   std::vector<ConstraintId> extra;
   const bool symmetry = (options.sst || options.lex) && !p.symmetries.empty();
   std::vector<int> sigma(static_cast<std::size_t>(p.n));
   std::iota(sigma.begin(), sigma.end(), 1);
   if( symmetry )
   {
      for( const auto& g : p.symmetries )
         if( !is_formulation_symmetry(p, g) )
            fail(ErrorKind::InvalidArgument, "a listed symmetry is not a formulation symmetry");
      // The tree must go in while no derived constraints exist.
      b.install_sigma_tree(sigma);
   }
   b.round_bounds();
   if( symmetry && options.sst )
   {
      auto cuts = emit_sst_cuts(b, p.symmetries);
      extra.insert(extra.end(), cuts.begin(), cuts.end());
   }
   if( symmetry && options.lex )
   {
      Rat lo = b.lower(1)->value;
      Rat hi = b.upper(1)->value;
      for( int j = 2; j <= p.n; ++j )
      {
         lo = std::min(lo, b.lower(j)->value);
         hi = std::max(hi, b.upper(j)->value);
      }
      if( lo <= hi )
         for( const auto& g : p.symmetries )
            extra.push_back(emit_lex_constraint(b, sigma, g, lo, hi).id);
   }
   if( options.cg || options.cover )
   {
      auto cuts = emit_root_cuts(b, options);
      extra.insert(extra.end(), cuts.begin(), cuts.end());
   }

   CertifyResult out;
   out.nodes = run_search(b, extra);
   if( b.incumbent() )
      out.verdict = Verdict{Verdict::Kind::Optimal, *b.incumbent()};
   else
      out.verdict = Verdict{Verdict::Kind::Infeasible, std::nullopt};
   out.certificate = b.finish();
   return out;
}

}   // namespace mipcert
