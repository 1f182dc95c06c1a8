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

#ifndef MIPCERT_TESTS_FIXTURES_HPP_
#define MIPCERT_TESTS_FIXTURES_HPP_

#include "mipcert/certifier.hpp"

#include <random>
#include <string>
#include <utility>
#include <vector>

namespace mipcert::fixtures {

/// Affine expression with coefficient coefs[j-1] on x_j.
LinExpr dense(const std::vector<Rat>& coefs);

/// Problems with ids assigned in insertion order; bounds() adds lower then upper.
class ProblemBuilder
{
 public:
   explicit ProblemBuilder(int n)
   {
      p_.n = n;
   }

   ProblemBuilder& integral(std::initializer_list<int> vars)
   {
      p_.integral.insert(vars.begin(), vars.end());
      return *this;
   }
   ProblemBuilder& all_integral()
   {
      for( int j = 1; j <= p_.n; ++j )
         p_.integral.insert(j);
      return *this;
   }
   ProblemBuilder& objective(const std::vector<Rat>& c)
   {
      p_.objective = dense(c);
      return *this;
   }
   ProblemBuilder& row(const std::vector<Rat>& a, Relation rel, const Rat& rhs)
   {
      p_.constraints.emplace_back(++id_, Inequality::make(dense(a), rel, rhs));
      return *this;
   }
   ProblemBuilder& bounds(int j, const Rat& lo, const Rat& hi)
   {
      p_.constraints.emplace_back(++id_, Inequality::make(LinExpr::variable(j), Relation::Ge, lo));
      p_.constraints.emplace_back(++id_, Inequality::make(LinExpr::variable(j), Relation::Le, hi));
      return *this;
   }
   ProblemBuilder& symmetry(std::vector<int> perm)
   {
      p_.symmetries.push_back(std::move(perm));
      return *this;
   }
   Problem build() const
   {
      p_.validate();
      return p_;
   }

 private:
   Problem p_;
   ConstraintId id_ = 0;
};

/// min -x1 - x2 s.t. 2x1 + 2x2 <= 3, x binary. Optimum -1.
Problem knapsack();
/// x1 >= 1 and x1 <= 0.
Problem infeasible_pair();
/// Fully symmetric packing over n binaries: every triple sums to at most 2.
Problem set_packing(int n);
/// min -x1 - x2, x1 + x2 <= 1 binary, with the swap as SYM generator.
Problem symmetric_pair();

/// Bounded pure-integer instance: n in [1, max_n], bounds within [0,3],
/// coefficients in [-5,5].
Problem random_instance(std::mt19937_64& rng, int max_n = 8);

CertificateFile cg_certificate();
CertificateFile cover_certificate();
CertificateFile flowcover_certificate();
CertificateFile reduced_cost_certificate();

struct LexCase
{
   CertificateFile certificate;
   LexResult result;
   std::vector<int> sigma;
   std::vector<int> gamma;
};

/// 2l variables in [0, d], gamma swaps the halves, sigma = (1..l); the
/// ladder is followed by a search that closes the certificate.
LexCase lex_case(int ell, int d);

/// Named certificates making up the golden suite.
std::vector<std::pair<std::string, CertificateFile>> golden_suite();

/// n variables in [0, top]; the lower bound of x_j has id 2j-1, the upper 2j.
Problem boxed(int n, int top, bool integral = true);
/// Id of the bound cited for signed sigma entry s in a boxed() problem.
ConstraintId bound_ref(int s);

/// Consistent tree for boxed(dim, top) with depth at most 3. Every split
/// partitions the whole line, so coverage never depends on the core.
BranchTree random_tree(std::mt19937_64& rng, int dim, int top);
/// Order evaluated straight from its definition on two points: locate the
/// deepest common node and compare signed images lexicographically there.
bool direct_ge(const BranchTree& t, const std::vector<int>& x, const std::vector<int>& y, const Rat& eps, bool strict);
Box point_box(const std::vector<int>& x);
AffineMap constant_map(const std::vector<int>& y);

std::string golden_dir();
std::string read_text(const std::string& path);

}   // namespace mipcert::fixtures

#endif
