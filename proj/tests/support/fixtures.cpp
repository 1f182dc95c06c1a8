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

#include "fixtures.hpp"

#include "mipcert/error.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>

namespace mipcert::fixtures {

LinExpr dense(const std::vector<Rat>& coefs)
{
   LinExpr e;
   for( std::size_t j = 0; j < coefs.size(); ++j )
      if( coefs[j] != 0 )
         e.add_term(static_cast<int>(j) + 1, coefs[j]);
   return e;
}

namespace {

Rat q(long num, long den = 1)
{
   Rat r(num, den);
   r.canonicalize();
   return r;
}

// g(x) < z plus `cut` closes an incumbent of value z when the cut makes
// every better point infeasible.
void close_with(CertBuilder& b, std::vector<std::pair<PremiseRef, Rat>> terms)
{
   b.implic({}, Inequality::falsity(), {lin(std::move(terms))});
   b.goal();
}

}   // namespace

Problem knapsack()
{
   return ProblemBuilder(2).all_integral().objective({-1, -1}).row({2, 2}, Relation::Le, 3).bounds(1, 0, 1).bounds(2, 0, 1).build();
}

Problem infeasible_pair()
{
   return ProblemBuilder(1)
       .all_integral()
       .row({1}, Relation::Ge, 1)
       .row({1}, Relation::Le, 0)
       .build();
}

Problem set_packing(int n)
{
   ProblemBuilder pb(n);
   pb.all_integral().objective(std::vector<Rat>(static_cast<std::size_t>(n), Rat(-1)));
   for( int a = 0; a < n; ++a )
      for( int b = a + 1; b < n; ++b )
         for( int c = b + 1; c < n; ++c )
         {
            std::vector<Rat> row(static_cast<std::size_t>(n), Rat(0));
            row[static_cast<std::size_t>(a)] = row[static_cast<std::size_t>(b)] = row[static_cast<std::size_t>(c)] = 1;
            pb.row(row, Relation::Le, 2);
         }
   for( int j = 1; j <= n; ++j )
      pb.bounds(j, 0, 1);
   std::vector<int> swap(static_cast<std::size_t>(n));
   std::iota(swap.begin(), swap.end(), 1);
   std::swap(swap[0], swap[1]);
   std::vector<int> cycle(static_cast<std::size_t>(n));
   for( int j = 0; j < n; ++j )
      cycle[static_cast<std::size_t>(j)] = (j + 1) % n + 1;
   pb.symmetry(swap).symmetry(cycle);
   return pb.build();
}

Problem symmetric_pair()
{
   return ProblemBuilder(2)
       .all_integral()
       .objective({-1, -1})
       .row({1, 1}, Relation::Le, 1)
       .bounds(1, 0, 1)
       .bounds(2, 0, 1)
       .symmetry({2, 1})
       .build();
}

Problem random_instance(std::mt19937_64& rng, int max_n)
{
   auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
   const int n = pick(1, max_n);
   ProblemBuilder pb(n);
   pb.all_integral();
   std::vector<Rat> lo(static_cast<std::size_t>(n));
   std::vector<Rat> hi(static_cast<std::size_t>(n));
   std::vector<Rat> c(static_cast<std::size_t>(n));
   for( int j = 0; j < n; ++j )
   {
      int l = pick(0, 3);
      lo[static_cast<std::size_t>(j)] = l;
      hi[static_cast<std::size_t>(j)] = pick(l, 3);
      c[static_cast<std::size_t>(j)] = pick(-5, 5);
   }
   pb.objective(c);
   const int m = pick(1, 4);
   for( int i = 0; i < m; ++i )
   {
      std::vector<Rat> a(static_cast<std::size_t>(n));
      Rat activity = 0;
      for( int j = 0; j < n; ++j )
      {
         auto k = static_cast<std::size_t>(j);
         a[k] = pick(-5, 5);
         int v = pick(static_cast<int>(lo[k].get_num().get_si()), static_cast<int>(hi[k].get_num().get_si()));
         activity += a[k] * v;
      }
      // Anchor the rhs at a random lattice point so most rows are feasible
      // but a few instances come out infeasible.
      int kind = pick(0, 9);
      if( kind < 7 )
         pb.row(a, Relation::Le, activity + pick(-2, 3));
      else if( kind < 9 )
         pb.row(a, Relation::Ge, activity - pick(-2, 3));
      else
         pb.row(a, Relation::Eq, activity);
   }
   for( int j = 1; j <= n; ++j )
      pb.bounds(j, lo[static_cast<std::size_t>(j - 1)], hi[static_cast<std::size_t>(j - 1)]);
   return pb.build();
}

CertificateFile cg_certificate()
{
   CertBuilder b(knapsack());
   // 1/2 (2x1 + 2x2 <= 3) is x1 + x2 <= 3/2, rounded to x1 + x2 <= 1.
   ConstraintId cut = emit_cg_cut(b, {{1, q(1, 2)}});
   b.solution({1, 0});
   close_with(b, {{objective_ref(), 1}, {id_ref(cut), 1}});
   return b.finish();
}

CertificateFile cover_certificate()
{
   CertBuilder b(knapsack());
   ConstraintId cut = emit_cover_cut(b, 1, {1, 2});
   b.solution({1, 0});
   close_with(b, {{objective_ref(), 1}, {id_ref(cut), 1}});
   return b.finish();
}

CertificateFile flowcover_certificate()
{
   // x1, x2 binary arc indicators, y1 = x3, y2 = x4 flows; the last row is
   // cut off by the flow cover inequality y1 + y2 - x1 - x2 <= 1.
   Problem p = ProblemBuilder(4)
                   .integral({1, 2})
                   .row({0, 0, 1, 1}, Relation::Le, 3)
                   .row({-2, 0, 1, 0}, Relation::Le, 0)
                   .row({0, -2, 0, 1}, Relation::Le, 0)
                   .bounds(1, 0, 1)
                   .bounds(2, 0, 1)
                   .row({0, 0, 1, 0}, Relation::Ge, 0)
                   .row({0, 0, 0, 1}, Relation::Ge, 0)
                   .row({-1, -1, 1, 1}, Relation::Ge, q(3, 2))
                   .build();
   CertBuilder b(p);
   FlowSet set{{1, 2}, {3, 4}, {2, 2}, 3, 1, {2, 3}};
   ConstraintId cut = emit_flowcover_cut(b, set, {0, 1});
   close_with(b, {{id_ref(cut), 1}, {id_ref(10), 1}});
   return b.finish();
}

CertificateFile reduced_cost_certificate()
{
   // LP relaxation min -x1 - x2/2 s.t. x1 + x2 <= 3/2, x >= 0 has value
   // -3/2 at (3/2, 0) with dual y = 1 and reduced costs (0, 1/2).
   Problem p = ProblemBuilder(2)
                   .all_integral()
                   .objective({-1, q(-1, 2)})
                   .row({1, 1}, Relation::Le, q(3, 2))
                   .bounds(1, 0, 1)
                   .bounds(2, 0, 1)
                   .build();
   CertBuilder b(p);
   b.solution({1, 0});
   ConstraintId fixed = emit_reduced_cost_fixing(b, ReducedCostData{{{1, 1}}, q(-3, 2), 2});
   close_with(b, {{objective_ref(), 1}, {id_ref(fixed), q(1, 2)}, {id_ref(3), 1}});
   return b.finish();
}

LexCase lex_case(int ell, int d)
{
   const int n = 2 * ell;
   ProblemBuilder pb(n);
   pb.all_integral();
   std::vector<Rat> c(static_cast<std::size_t>(n));
   for( int i = 0; i < ell; ++i )
      c[static_cast<std::size_t>(i)] = c[static_cast<std::size_t>(i + ell)] = -(i + 1);
   pb.objective(c);
   for( int i = 0; i < ell; ++i )
   {
      std::vector<Rat> row(static_cast<std::size_t>(n), Rat(0));
      row[static_cast<std::size_t>(i)] = row[static_cast<std::size_t>(i + ell)] = 1;
      pb.row(row, Relation::Le, d);
   }
   for( int j = 1; j <= n; ++j )
      pb.bounds(j, 0, d);
   std::vector<int> gamma(static_cast<std::size_t>(n));
   for( int i = 1; i <= ell; ++i )
   {
      gamma[static_cast<std::size_t>(i - 1)] = i + ell;
      gamma[static_cast<std::size_t>(i + ell - 1)] = i;
   }
   pb.symmetry(gamma);

   LexCase out;
   out.gamma = gamma;
   for( int i = 1; i <= ell; ++i )
      out.sigma.push_back(i);
   CertBuilder b(pb.build());
   b.install_sigma_tree(out.sigma);
   out.result = emit_lex_constraint(b, out.sigma, gamma, 0, d);
   run_search(b, {out.result.id});
   out.certificate = b.finish();
   return out;
}

std::vector<std::pair<std::string, CertificateFile>> golden_suite()
{
   std::vector<std::pair<std::string, CertificateFile>> suite;
   suite.emplace_back("knapsack", solve_and_certify(knapsack()).certificate);
   suite.emplace_back("knapsack_cuts", solve_and_certify(knapsack(), {false, false, true, true}).certificate);
   suite.emplace_back("infeasible_pair", solve_and_certify(infeasible_pair()).certificate);
   suite.emplace_back("appendix_cg", cg_certificate());
   suite.emplace_back("appendix_cover", cover_certificate());
   suite.emplace_back("appendix_flowcover", flowcover_certificate());
   suite.emplace_back("appendix_reduced_cost", reduced_cost_certificate());
   for( int ell = 1; ell <= 3; ++ell )
      for( int d = 1; d <= 2; ++d )
         suite.emplace_back("lex_l" + std::to_string(ell) + "_d" + std::to_string(d), lex_case(ell, d).certificate);
   suite.emplace_back("symmetric_pair_sst", solve_and_certify(symmetric_pair(), {true, false, false, false}).certificate);
   suite.emplace_back("set_packing5", solve_and_certify(set_packing(5)).certificate);
   suite.emplace_back("set_packing5_sst", solve_and_certify(set_packing(5), {true, false, false, false}).certificate);
   suite.emplace_back("set_packing5_lex", solve_and_certify(set_packing(5), {false, true, false, false}).certificate);
   std::mt19937_64 rng(20240601);
   for( int i = 1; suite.size() < 25; ++i )
   {
      Problem p = random_instance(rng, 4);
      suite.emplace_back("random" + std::to_string(i), solve_and_certify(p).certificate);
   }
   return suite;
}

Problem boxed(int n, int top, bool integral)
{
   Problem p;
   p.n = n;
   for( int j = 1; j <= n; ++j )
   {
      if( integral )
         p.integral.insert(j);
      p.constraints.emplace_back(2 * j - 1, Inequality::make(LinExpr::variable(j), Relation::Ge, 0));
      p.constraints.emplace_back(2 * j, Inequality::make(LinExpr::variable(j), Relation::Le, top));
   }
   return p;
}

ConstraintId bound_ref(int s)
{
   int j = std::abs(s);
   return s > 0 ? 2 * j : 2 * j - 1;
}

namespace {

NodeId add_node(BranchTree& t, NodeId parent, std::optional<Branch> branch, std::vector<int> sigma)
{
   NodeId id = static_cast<NodeId>(t.nodes.size());
   TreeNode node;
   node.parent = parent;
   node.branch = branch;
   node.sigma = std::move(sigma);
   for( int s : node.sigma )
      node.bound_refs.push_back(bound_ref(s));
   t.nodes[id] = node;
   t.nodes[parent].children.push_back(id);
   return id;
}

}   // namespace

Box point_box(const std::vector<int>& x)
{
   Box b(static_cast<int>(x.size()));
   for( std::size_t j = 0; j < x.size(); ++j )
      b[static_cast<int>(j + 1)] = Interval::point(x[j]);
   return b;
}

AffineMap constant_map(const std::vector<int>& y)
{
   AffineMap w{static_cast<int>(y.size()), {}};
   for( std::size_t j = 0; j < y.size(); ++j )
      w.rows[static_cast<int>(j + 1)] = LinExpr(Rat(y[j]));
   return w;
}

BranchTree random_tree(std::mt19937_64& rng, int dim, int top)
{
   auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
   auto extend = [&](std::vector<int> sigma) {
      std::vector<int> free;
      for( int j = 1; j <= dim; ++j )
         if( std::none_of(sigma.begin(), sigma.end(), [&](int s) { return std::abs(s) == j; }) )
            free.push_back(j);
      std::shuffle(free.begin(), free.end(), rng);
      int extra = free.empty() ? 0 : pick(0, static_cast<int>(free.size()));
      for( int k = 0; k < extra; ++k )
         sigma.push_back(pick(0, 1) ? free[static_cast<std::size_t>(k)] : -free[static_cast<std::size_t>(k)]);
      return sigma;
   };

   BranchTree t;
   TreeNode root;
   root.sigma = extend({});
   if( root.sigma.empty() )
      root.sigma.push_back(1);
   for( int s : root.sigma )
      root.bound_refs.push_back(bound_ref(s));
   t.nodes[0] = root;

   std::vector<std::pair<NodeId, int>> open{{0, 0}};
   while( !open.empty() )
   {
      auto [v, depth] = open.back();
      open.pop_back();
      if( depth >= 2 || pick(0, 3) == 0 )
         continue;
      std::vector<int> sigma = t.nodes[v].sigma;
      int var = std::abs(sigma[static_cast<std::size_t>(pick(0, static_cast<int>(sigma.size()) - 1))]);
      // cut points c_1 < ... < c_k split the line into (-inf,c_1], [c_1+1,c_2], ...
      std::vector<int> cuts;
      for( int c = 0; c < top; ++c )
         if( pick(0, 1) )
            cuts.push_back(c);
      if( cuts.empty() )
         cuts.push_back(pick(0, top - 1));
      std::optional<Rat> lo;
      for( std::size_t k = 0; k <= cuts.size(); ++k )
      {
         std::optional<Rat> hi;
         if( k < cuts.size() )
            hi = Rat(cuts[k]);
         NodeId c = add_node(t, v, Branch{var, lo, hi}, extend(sigma));
         open.emplace_back(c, depth + 1);
         if( hi )
            lo = *hi + 1;
      }
   }
   return t;
}

bool direct_ge(const BranchTree& t, const std::vector<int>& x, const std::vector<int>& y, const Rat& eps, bool strict)
{
   auto child_of = [&](NodeId v, const std::vector<int>& p) -> std::optional<NodeId> {
      for( NodeId c : t.nodes.at(v).children )
      {
         const Branch& b = *t.nodes.at(c).branch;
         if( b.interval().contains(p[static_cast<std::size_t>(b.var - 1)]) )
            return c;
      }
      return std::nullopt;
   };
   NodeId v = t.root;
   for( ;; )
   {
      auto cx = child_of(v, x);
      auto cy = child_of(v, y);
      if( !cx || !cy || *cx != *cy )
         break;
      v = *cx;
   }
   for( int s : t.nodes.at(v).sigma )
   {
      int j = std::abs(s);
      Rat a = s > 0 ? x[static_cast<std::size_t>(j - 1)] : -x[static_cast<std::size_t>(j - 1)];
      Rat b = s > 0 ? y[static_cast<std::size_t>(j - 1)] : -y[static_cast<std::size_t>(j - 1)];
      if( a == b )
         continue;
      return a >= b + eps;
   }
   return !strict;
}

std::string golden_dir()
{
   return MIPCERT_GOLDEN_DIR;
}

std::string read_text(const std::string& path)
{
   std::ifstream in(path);
   if( !in )
      fail(ErrorKind::Io, "cannot open " + path);
   std::ostringstream ss;
   ss << in.rdbuf();
   return ss.str();
}

}   // namespace mipcert::fixtures
