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

#ifndef MIPCERT_CERTIFIER_HPP_
#define MIPCERT_CERTIFIER_HPP_

#include "mipcert/emitters.hpp"

#include <cstddef>
#include <vector>

namespace mipcert {

struct CertifyOptions
{
   bool sst = false;     // Schreier-Sims table cuts from Problem::symmetries
   bool lex = false;     // one lexicographic constraint per generator
   bool cg = false;      // rhs rounding of rows with integer support
   bool cover = false;   // greedy cover inequalities for binary knapsack rows
};

struct CertifyResult
{
   Verdict verdict;
   CertificateFile certificate;
   std::size_t nodes = 0;
};

/// Branch-and-bound over single-variable splits for bounded pure-integer
/// problems, emitting a certificate that ends in GOAL.
CertifyResult solve_and_certify(const Problem& p, const CertifyOptions& options = {});

/// Runs the search on an existing builder using the problem rows plus the
/// given derived inequalities, then emits GOAL. Returns the node count.
std::size_t run_search(CertBuilder& b, const std::vector<ConstraintId>& extra_rows);

/// All group elements generated by `generators` (permutations as 1-based
/// image lists). Throws TooLarge beyond `limit` elements.
std::vector<std::vector<int>> enumerate_group(const std::vector<std::vector<int>>& generators, std::size_t limit = 100000);

/// SST cuts x_i >= x_j for the orbit of each leader i under the pointwise
/// stabilizer of 1..i-1. Requires a tree whose root sigma starts with 1..n.
std::vector<ConstraintId> emit_sst_cuts(CertBuilder& b, const std::vector<std::vector<int>>& generators);

}   // namespace mipcert

#endif
